//! First-order Stark effect in closed form.
//!
//! For a uniform field ε along +x₃ the perturbation is V = |e|ε(ξ − η)/2. In the
//! parabolic basis the shell-n block of V is already diagonal, and the shift of
//! (n₁, n₂, m) is
//!
//! E⁽¹⁾ = (3ħ²|e|ε / 2μγ) · [n(n₁ − n₂ + (|m−s| − |m+s|)/2) + ms/3].
//!
//! The bracket is always a multiple of 1/6, so shifts are carried around as an
//! exact integer count of sixths ([`shift_sixths`]) and only turned into floats
//! at the end. Ties and orderings are therefore decided exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::HalfInteger;
use crate::states::{beta_eigenvalue, energy_level, enumerate_shell_parabolic, ParabolicState, PhysicalParams};

/// A uniform static field along +x₃.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    epsilon: f64,
}

impl FieldConfig {
    pub fn new(epsilon: f64) -> Result<Self> {
        if epsilon >= 0.0 && epsilon.is_finite() {
            Ok(FieldConfig { epsilon })
        } else {
            Err(Error::Argument(format!(
                "field strength must be finite and non-negative, got {epsilon}"
            )))
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// |e|ε a² n⁴ / γ: the field energy across the orbit relative to the level
    /// spacing scale. First-order results are only meaningful when this is small.
    pub fn perturbative_ratio(&self, n: HalfInteger, params: &PhysicalParams) -> f64 {
        let a = params.bohr_radius();
        params.e_abs() * self.epsilon * a * a * n.value().powi(4) / params.gamma_c()
    }
}

/// I_pq = ∫₀^∞ Φ²_pq dx = a n.
pub fn integral_i(_p: u32, _q: i64, n: HalfInteger, params: &PhysicalParams) -> f64 {
    params.bohr_radius() * n.value()
}

/// ℐ_pq = ∫₀^∞ x² Φ²_pq dx = 2(an)³ [3p(p + |q| + 1) + |q|(|q| + 3)/2 + 1].
pub fn integral_ii(p: u32, q: i64, n: HalfInteger, params: &PhysicalParams) -> f64 {
    let length = params.bohr_radius() * n.value();
    let (p, q) = (p as f64, q.unsigned_abs() as f64);
    2.0 * length.powi(3) * (3.0 * p * (p + q + 1.0) + 0.5 * q * (q + 3.0) + 1.0)
}

/// 6 · [n(n₁ − n₂ + (|m−s| − |m+s|)/2) + ms/3], an exact integer.
pub fn shift_sixths(state: &ParabolicState) -> i64 {
    let twice_n = state.n().twice();
    let twice_x = state.twice_runge_lenz_number();
    let numerator = 3 * twice_n * twice_x + state.m().twice() * state.s().twice();
    debug_assert!(numerator % 2 == 0, "bracket not a multiple of 1/6 for {state}");
    numerator / 2
}

/// 3ħ²|e|/(2μγ): energy per unit field per unit bracket.
fn dipole_scale(params: &PhysicalParams) -> f64 {
    1.5 * params.dipole_unit()
}

/// Energy of one sixth of the bracket at the given field.
pub fn shift_quantum(field: &FieldConfig, params: &PhysicalParams) -> f64 {
    dipole_scale(params) * field.epsilon() / 6.0
}

fn bracket(state: &ParabolicState) -> f64 {
    shift_sixths(state) as f64 / 6.0
}

/// E⁽¹⁾ from the matrix-element formula
/// (|e|ε / 4a³n⁴) · (ℐ_{n₁,m−s} I_{n₂,m+s} − I_{n₁,m−s} ℐ_{n₂,m+s}).
pub fn shift_integral_form(state: &ParabolicState, field: &FieldConfig, params: &PhysicalParams) -> Result<f64> {
    params.check_monopole(state.s())?;
    let n = state.n();
    let (q1, q2) = (state.q_xi() as i64, state.q_eta() as i64);
    let i1 = integral_i(state.n1(), q1, n, params);
    let i2 = integral_i(state.n2(), q2, n, params);
    let ii1 = integral_ii(state.n1(), q1, n, params);
    let ii2 = integral_ii(state.n2(), q2, n, params);
    let a = params.bohr_radius();
    let prefactor = params.e_abs() * field.epsilon() / (4.0 * a.powi(3) * n.value().powi(4));
    Ok(prefactor * (ii1 * i2 - i1 * ii2))
}

/// E⁽¹⁾ in closed form, (3ħ²|e|ε/2μγ)·[n(n₁ − n₂ + (|m−s| − |m+s|)/2) + ms/3].
pub fn shift_closed_form(state: &ParabolicState, field: &FieldConfig, params: &PhysicalParams) -> Result<f64> {
    params.check_monopole(state.s())?;
    Ok(dipole_scale(params) * field.epsilon() * bracket(state))
}

/// Full width of the split shell in sixths of the bracket:
/// 6·[max − min] = 12n(n − 1) − 4s².
pub fn shell_splitting_sixths(n: HalfInteger, s: HalfInteger) -> Result<i64> {
    crate::states::check_level(n, s)?;
    let (tn, ts) = (n.twice(), s.twice());
    Ok(3 * tn * (tn - 2) - ts * ts)
}

/// Distance between the highest and lowest shifted components of shell n:
/// (ħ²|e|ε/μγ)·[3n(n − 1) − s²].
///
/// The m-dependent ms/3 term pushes the extremes to (n−|s|−1, 0, −s·sgn)
/// and its mirror, so for s ≠ 0 this exceeds [`fixed_m_splitting`].
pub fn shell_splitting(n: HalfInteger, s: HalfInteger, field: &FieldConfig, params: &PhysicalParams) -> Result<f64> {
    if s != params.s() {
        params.check_monopole(s)?;
    }
    let sixths = shell_splitting_sixths(n, s)?;
    Ok(dipole_scale(params) * field.epsilon() * (sixths as f64 / 6.0))
}

/// Distance between the extreme components (n₁, n₂) = (n−|s|−1, 0) and
/// (0, n−|s|−1) at one fixed m with |m| ≤ |s|:
/// (3ħ²|e|ε/μγ)·n(n − |s| − 1).
pub fn fixed_m_splitting(n: HalfInteger, s: HalfInteger, field: &FieldConfig, params: &PhysicalParams) -> Result<f64> {
    if s != params.s() {
        params.check_monopole(s)?;
    }
    crate::states::check_level(n, s)?;
    let top = (n - s.abs() - 1).value();
    Ok(2.0 * dipole_scale(params) * field.epsilon() * n.value() * top)
}

/// Permanent dipole d̄_z = −∂E⁽¹⁾/∂ε = −(3ħ²|e|/2μγ)·[n(…) + ms/3].
pub fn mean_dipole(state: &ParabolicState, params: &PhysicalParams) -> Result<f64> {
    params.check_monopole(state.s())?;
    // + 0.0 keeps unshifted states at +0
    Ok(-dipole_scale(params) * bracket(state) + 0.0)
}

/// Dimensionless Runge–Lenz projection I₃ = μaβ/ħ = [n₁ − n₂ + (|m−s| − |m+s|)/2]/n,
/// computed from the separation constant β.
pub fn runge_lenz_projection(state: &ParabolicState, params: &PhysicalParams) -> Result<f64> {
    let beta = beta_eigenvalue(state, params)?;
    Ok(params.mu() * params.bohr_radius() * beta / params.hbar())
}

/// Expectation of d_z = |e|·[3γ/(4E⁽⁰⁾)·I₃ − ħ²s/(2μγ)·J₃] on a parabolic state,
/// with I₃ from [`runge_lenz_projection`] and J₃ = m (in units of ħ).
pub fn dipole_operator_expectation(state: &ParabolicState, params: &PhysicalParams) -> Result<f64> {
    let e0 = energy_level(state.n(), params)?;
    let i3 = runge_lenz_projection(state, params)?;
    let j3 = state.m().value();
    let gamma = params.gamma_c();
    let hbar2 = params.hbar() * params.hbar();
    Ok(params.e_abs() * (3.0 * gamma / (4.0 * e0) * i3 - hbar2 * state.s().value() / (2.0 * params.mu() * gamma) * j3))
}

/// One row of a Stark table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarkShiftRecord {
    pub state: ParabolicState,
    pub e0: f64,
    pub e1: f64,
    /// e1 as an exact multiple of [`shift_quantum`].
    pub e1_sixths: i64,
    pub dipole_z: f64,
}

/// Every parabolic state of shell n with its shift and dipole, sorted by
/// (E⁽¹⁾, n₁, n₂, m). Shift ties are detected exactly.
pub fn stark_table(
    n: HalfInteger,
    s: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
) -> Result<Vec<StarkShiftRecord>> {
    params.check_monopole(s)?;
    let e0 = energy_level(n, params)?;
    let mut rows = enumerate_shell_parabolic(n, s)?
        .into_iter()
        .map(|state| {
            Ok(StarkShiftRecord {
                state,
                e0,
                e1: shift_closed_form(&state, field, params)?,
                e1_sixths: shift_sixths(&state),
                dipole_z: mean_dipole(&state, params)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let field_on = field.epsilon() > 0.0;
    rows.sort_by_key(|r| {
        (
            if field_on { r.e1_sixths } else { 0 },
            r.state.n1(),
            r.state.n2(),
            r.state.m(),
        )
    });
    Ok(rows)
}

/// Pairs of distinct shell states whose shifts coincide exactly.
pub fn residual_collisions(n: HalfInteger, s: HalfInteger) -> Result<Vec<(ParabolicState, ParabolicState)>> {
    let shell = enumerate_shell_parabolic(n, s)?;
    let mut out = Vec::new();
    for (i, a) in shell.iter().enumerate() {
        for b in &shell[i + 1..] {
            if shift_sixths(a) == shift_sixths(b) {
                out.push((*a, *b));
            }
        }
    }
    Ok(out)
}
