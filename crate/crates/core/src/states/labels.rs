use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::HalfInteger;

use super::PhysicalParams;

/// Checks that `n` is an allowed principal level for monopole number `s`:
/// n = |s| + 1, |s| + 2, ...
pub fn check_level(n: HalfInteger, s: HalfInteger) -> Result<()> {
    if n < s.abs() + 1 {
        return Err(Error::QuantumNumbers(format!(
            "n must satisfy n ≥ |s|+1 (n={n}, s={s})"
        )));
    }
    if !n.differs_by_integer(s) {
        return Err(Error::QuantumNumbers(format!(
            "n − |s| must be an integer (n={n}, s={s})"
        )));
    }
    Ok(())
}

/// Unperturbed energy E⁽⁰⁾_n = −μγ²/(2ħ²n²).
pub fn energy_level(n: HalfInteger, params: &PhysicalParams) -> Result<f64> {
    check_level(n, params.s())?;
    let n = n.value();
    Ok(-params.mu() * params.gamma_c().powi(2) / (2.0 * params.hbar().powi(2) * n * n))
}

/// Spherical-basis label (n, j, m) for monopole number s.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSpherical")]
pub struct SphericalState {
    n: HalfInteger,
    j: HalfInteger,
    m: HalfInteger,
    s: HalfInteger,
}

#[derive(Deserialize)]
struct RawSpherical {
    n: HalfInteger,
    j: HalfInteger,
    m: HalfInteger,
    s: HalfInteger,
}

impl TryFrom<RawSpherical> for SphericalState {
    type Error = Error;
    fn try_from(raw: RawSpherical) -> Result<Self> {
        SphericalState::new(raw.n, raw.j, raw.m, raw.s)
    }
}

impl SphericalState {
    pub fn new(n: HalfInteger, j: HalfInteger, m: HalfInteger, s: HalfInteger) -> Result<Self> {
        check_level(n, s)?;
        if j < s.abs() || j > n - 1 || !j.differs_by_integer(s) {
            return Err(Error::QuantumNumbers(format!(
                "j must be one of |s|, |s|+1, …, n−1 (n={n}, j={j}, s={s})"
            )));
        }
        if m.abs() > j || !m.differs_by_integer(j) {
            return Err(Error::QuantumNumbers(format!(
                "m must be one of −j, −j+1, …, j (j={j}, m={m})"
            )));
        }
        Ok(SphericalState { n, j, m, s })
    }

    pub fn n(&self) -> HalfInteger {
        self.n
    }

    pub fn j(&self) -> HalfInteger {
        self.j
    }

    pub fn m(&self) -> HalfInteger {
        self.m
    }

    pub fn s(&self) -> HalfInteger {
        self.s
    }
}

impl fmt::Display for SphericalState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, j={}, m={}, s={})", self.n, self.j, self.m, self.s)
    }
}

/// Parabolic-basis label (n₁, n₂, m) for monopole number s.
///
/// The principal number is derived: n = n₁ + n₂ + (|m−s| + |m+s|)/2 + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParabolic")]
pub struct ParabolicState {
    n1: u32,
    n2: u32,
    m: HalfInteger,
    s: HalfInteger,
}

#[derive(Deserialize)]
struct RawParabolic {
    n1: u32,
    n2: u32,
    m: HalfInteger,
    s: HalfInteger,
}

impl TryFrom<RawParabolic> for ParabolicState {
    type Error = Error;
    fn try_from(raw: RawParabolic) -> Result<Self> {
        ParabolicState::new(raw.n1, raw.n2, raw.m, raw.s)
    }
}

impl ParabolicState {
    pub fn new(n1: u32, n2: u32, m: HalfInteger, s: HalfInteger) -> Result<Self> {
        if !m.differs_by_integer(s) {
            return Err(Error::QuantumNumbers(format!(
                "m − s must be an integer (m={m}, s={s})"
            )));
        }
        Ok(ParabolicState { n1, n2, m, s })
    }

    /// Builds the state and checks that it lies in shell `n`.
    pub fn in_shell(n: HalfInteger, n1: u32, n2: u32, m: HalfInteger, s: HalfInteger) -> Result<Self> {
        let state = ParabolicState::new(n1, n2, m, s)?;
        if state.n() != n {
            return Err(Error::QuantumNumbers(format!(
                "n = n1 + n2 + (|m−s|+|m+s|)/2 + 1 gives {} for (n1={n1}, n2={n2}, m={m}, s={s}), not {n}",
                state.n()
            )));
        }
        Ok(state)
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    pub fn m(&self) -> HalfInteger {
        self.m
    }

    pub fn s(&self) -> HalfInteger {
        self.s
    }

    /// |m − s|, the order of the ξ factor.
    pub fn q_xi(&self) -> u32 {
        (self.m - self.s).abs().to_integer().unwrap_or_default() as u32
    }

    /// |m + s|, the order of the η factor.
    pub fn q_eta(&self) -> u32 {
        (self.m + self.s).abs().to_integer().unwrap_or_default() as u32
    }

    pub fn n(&self) -> HalfInteger {
        // (|m−s| + |m+s|)/2 = max(|m|, |s|)
        self.m.abs().max(self.s.abs()) + (self.n1 as i64 + self.n2 as i64 + 1)
    }

    /// Twice the Runge–Lenz projection number, 2·[n₁ − n₂ + (|m−s| − |m+s|)/2], an integer.
    pub fn twice_runge_lenz_number(&self) -> i64 {
        2 * (self.n1 as i64 - self.n2 as i64) + self.q_xi() as i64 - self.q_eta() as i64
    }

    /// The mirror state (n₂, n₁, −m).
    pub fn mirrored(&self) -> ParabolicState {
        ParabolicState {
            n1: self.n2,
            n2: self.n1,
            m: -self.m,
            s: self.s,
        }
    }
}

impl fmt::Display for ParabolicState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n1={}, n2={}, m={}, s={})", self.n1, self.n2, self.m, self.s)
    }
}

/// All (j, m) of shell n, ordered by j then m. There are n² − s² of them.
pub fn enumerate_shell_spherical(n: HalfInteger, s: HalfInteger) -> Result<Vec<SphericalState>> {
    check_level(n, s)?;
    let mut out = Vec::new();
    let mut j = s.abs();
    while j < n {
        let mut m = -j;
        while m <= j {
            out.push(SphericalState { n, j, m, s });
            m = m + 1;
        }
        j = j + 1;
    }
    Ok(out)
}

/// All (n₁, n₂, m) of shell n, ordered by m then n₁. There are n² − s² of them.
pub fn enumerate_shell_parabolic(n: HalfInteger, s: HalfInteger) -> Result<Vec<ParabolicState>> {
    check_level(n, s)?;
    let mut out = Vec::new();
    let top = n - 1;
    // m runs over the lattice s + Z with max(|m|, |s|) ≤ n − 1
    let mut m = s - (top + s).to_integer().expect("integer offset");
    while m <= top {
        let c = m.abs().max(s.abs());
        if c <= top {
            let free = (top - c).to_integer().expect("integer remainder") as u32;
            for n1 in 0..=free {
                out.push(ParabolicState { n1, n2: free - n1, m, s });
            }
        }
        m = m + 1;
    }
    Ok(out)
}

/// Separation constant β, the x₃ Runge–Lenz eigenvalue in the parabolic basis:
/// β = (κħ/μ)·[n₁ − n₂ + (|m−s| − |m+s|)/2] with κ = √(−2μE⁽⁰⁾)/ħ.
pub fn beta_eigenvalue(state: &ParabolicState, params: &PhysicalParams) -> Result<f64> {
    params.check_monopole(state.s())?;
    let e0 = energy_level(state.n(), params)?;
    let kappa = (-2.0 * params.mu() * e0).sqrt() / params.hbar();
    Ok(kappa * params.hbar() / params.mu() * state.twice_runge_lenz_number() as f64 / 2.0)
}
