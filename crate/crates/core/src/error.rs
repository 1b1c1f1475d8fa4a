use thiserror::Error;

/// Errors raised by the library. Every fallible operation reports one of these;
/// none of the numerical routines panic on bad input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A special function or kernel was called outside its domain.
    #[error("{func}: domain error: {reason}")]
    Domain { func: &'static str, reason: String },

    /// A numeric argument (order, scale, field strength, physical constant) is out of range.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A state label violates the quantum-number rules.
    #[error("invalid quantum numbers: {0}")]
    QuantumNumbers(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }
}
