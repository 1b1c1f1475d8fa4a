//! Special functions: log-gamma, terminating hypergeometric series, Gauss's
//! theorem at unit argument and the Wigner small-d function.

mod gamma;
mod half_integer;
mod hypergeometric;
mod wigner;

pub use gamma::{ln_factorial, ln_gamma};
pub use half_integer::HalfInteger;
pub use hypergeometric::{hyp1f1_poly, hyp2f1_unit};
pub use wigner::wigner_d;
