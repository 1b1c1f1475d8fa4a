//! Bound states and the linear Stark effect of a charged particle orbiting a
//! Dirac dyon (the MIC-Kepler problem).
//!
//! The crate is split into layers:
//!
//! * [`specfun`] and [`quadrature`]: numerical kernels.
//! * [`states`]: physical parameters, quantum-number bookkeeping, the spectrum
//!   and spherical/parabolic wavefunctions.
//! * [`stark`]: closed-form first-order Stark shifts, splittings and dipoles.
//! * [`oracle`]: an independent route to the same shifts through numerical
//!   matrix elements and a Jacobi eigensolver.
//! * [`verify`]: a registry of named consistency checks used by the CLI.

pub mod error;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
pub mod stark;
pub mod states;
pub mod verify;

pub use error::{Error, Result};
pub use quadrature::{gauss_laguerre, gauss_legendre, QuadratureRule, RuleKind};
pub use specfun::HalfInteger;
pub use stark::{FieldConfig, StarkShiftRecord};
pub use states::{ParabolicPoint, ParabolicState, PhysicalParams, SphericalState};
