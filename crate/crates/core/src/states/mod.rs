//! Physical parameters, quantum-number bookkeeping, the unperturbed spectrum and
//! the spherical and parabolic bound-state wavefunctions.
//!
//! Everything is expressed through [`PhysicalParams`]; the Bohr radius
//! a = ħ²/(μγ) sets the length scale.

mod coords;
mod labels;
mod overlap;
mod params;
mod parabolic;
mod spherical;

pub use coords::{volume_element, ParabolicPoint};
pub use labels::{
    beta_eigenvalue, check_level, energy_level, enumerate_shell_parabolic, enumerate_shell_spherical,
    ParabolicState, SphericalState,
};
pub use overlap::{ground_state_form, parabolic_overlap, spherical_overlap};
pub use params::PhysicalParams;
pub use parabolic::{parabolic_psi, phi_pq, phi_pq_reduced, ParabolicOrbital};
pub use spherical::{
    radial_r, spherical_psi, verification_order, NormCheck, SphericalOrbital, NORMALIZATION_TOLERANCE,
};
