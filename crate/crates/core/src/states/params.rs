use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::HalfInteger;

/// Physical constants of the charge–dyon system.
///
/// The Bohr radius a = ħ²/(μγ) is always derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct PhysicalParams {
    hbar: f64,
    mu: f64,
    gamma_c: f64,
    e_abs: f64,
    s: HalfInteger,
}

#[derive(Deserialize)]
struct RawParams {
    hbar: f64,
    mu: f64,
    gamma_c: f64,
    e_abs: f64,
    s: HalfInteger,
}

impl TryFrom<RawParams> for PhysicalParams {
    type Error = Error;
    fn try_from(raw: RawParams) -> Result<Self> {
        PhysicalParams::new(raw.hbar, raw.mu, raw.gamma_c, raw.e_abs, raw.s)
    }
}

fn positive(name: &str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Argument(format!("{name} must be positive and finite, got {value}")))
    }
}

impl PhysicalParams {
    pub fn new(hbar: f64, mu: f64, gamma_c: f64, e_abs: f64, s: HalfInteger) -> Result<Self> {
        Ok(PhysicalParams {
            hbar: positive("hbar", hbar)?,
            mu: positive("mu", mu)?,
            gamma_c: positive("gamma", gamma_c)?,
            e_abs: positive("|e|", e_abs)?,
            s,
        })
    }

    /// ħ = μ = |e| = γ = 1.
    pub fn atomic(s: HalfInteger) -> Self {
        PhysicalParams {
            hbar: 1.0,
            mu: 1.0,
            gamma_c: 1.0,
            e_abs: 1.0,
            s,
        }
    }

    /// ħ = μ = |e| = 1 with a free Coulomb coupling γ.
    pub fn with_coupling(gamma_c: f64, s: HalfInteger) -> Result<Self> {
        PhysicalParams::new(1.0, 1.0, gamma_c, 1.0, s)
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn gamma_c(&self) -> f64 {
        self.gamma_c
    }

    pub fn e_abs(&self) -> f64 {
        self.e_abs
    }

    /// Monopole number.
    pub fn s(&self) -> HalfInteger {
        self.s
    }

    pub fn bohr_radius(&self) -> f64 {
        self.hbar * self.hbar / (self.mu * self.gamma_c)
    }

    /// ħ²/(μγ)·|e|: the charge·length unit in which dipoles and shifts are quoted.
    pub(crate) fn dipole_unit(&self) -> f64 {
        self.hbar * self.hbar * self.e_abs / (self.mu * self.gamma_c)
    }

    pub(crate) fn check_monopole(&self, s: HalfInteger) -> Result<()> {
        if s == self.s {
            Ok(())
        } else {
            Err(Error::QuantumNumbers(format!(
                "state has monopole number s={s} but the parameters use s={}",
                self.s
            )))
        }
    }
}
