use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point in parabolic coordinates: x₁ + i x₂ = √(ξη) e^{iφ}, x₃ = (ξ − η)/2.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParabolicPoint {
    pub xi: f64,
    pub eta: f64,
    pub phi: f64,
}

impl ParabolicPoint {
    /// Validates ξ, η ≥ 0 and wraps φ into [0, 2π).
    pub fn new(xi: f64, eta: f64, phi: f64) -> Result<Self> {
        if !(xi >= 0.0 && eta >= 0.0 && xi.is_finite() && eta.is_finite() && phi.is_finite()) {
            return Err(Error::Argument(format!(
                "parabolic point needs finite ξ, η ≥ 0 and finite φ (got {xi}, {eta}, {phi})"
            )));
        }
        Ok(ParabolicPoint {
            xi,
            eta,
            phi: wrap_angle(phi),
        })
    }

    pub fn to_cartesian(&self) -> [f64; 3] {
        let rho = (self.xi * self.eta).sqrt();
        [rho * self.phi.cos(), rho * self.phi.sin(), 0.5 * (self.xi - self.eta)]
    }

    pub fn from_cartesian(x: [f64; 3]) -> Self {
        let rho_sq = x[0] * x[0] + x[1] * x[1];
        let r = (rho_sq + x[2] * x[2]).sqrt();
        // the smaller of r ± x₃ is formed as ρ²/(r ∓ x₃) to avoid cancellation
        let (xi, eta) = if x[2] >= 0.0 {
            let xi = r + x[2];
            (xi, if xi > 0.0 { rho_sq / xi } else { 0.0 })
        } else {
            let eta = r - x[2];
            (rho_sq / eta, eta)
        };
        ParabolicPoint {
            xi,
            eta,
            phi: wrap_angle(x[1].atan2(x[0])),
        }
    }

    /// ξ = r(1 + cos θ), η = r(1 − cos θ).
    pub fn from_spherical(r: f64, theta: f64, phi: f64) -> Self {
        let half = 0.5 * theta;
        ParabolicPoint {
            xi: 2.0 * r * half.cos().powi(2),
            eta: 2.0 * r * half.sin().powi(2),
            phi: wrap_angle(phi),
        }
    }

    /// (r, θ, φ) with r = (ξ + η)/2.
    pub fn to_spherical(&self) -> (f64, f64, f64) {
        let r = 0.5 * (self.xi + self.eta);
        let theta = if r > 0.0 {
            2.0 * (self.eta.sqrt()).atan2(self.xi.sqrt())
        } else {
            0.0
        };
        (r, theta.clamp(0.0, PI), self.phi)
    }
}

fn wrap_angle(phi: f64) -> f64 {
    let wrapped = phi.rem_euclid(TAU);
    if wrapped >= TAU {
        0.0
    } else {
        wrapped
    }
}

/// Volume element density dV / (dξ dη dφ) = (ξ + η)/4.
pub fn volume_element(xi: f64, eta: f64) -> f64 {
    0.25 * (xi + eta)
}
