//! Numerical route to the first-order shifts: matrix elements of
//! V = |e|ε(ξ − η)/2 by Gauss–Laguerre quadrature, one dense block per
//! (shell, m) sector, and a Jacobi eigensolver.
//!
//! Nothing here uses the closed-form moments from [`crate::stark`].

mod jacobi;

pub use jacobi::{frobenius_norm, jacobi_eigen, jacobi_eigenvalues, SymmetricEigen, MAX_DIMENSION};

use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{cached_rule, RuleKind};
use crate::specfun::HalfInteger;
use crate::stark::FieldConfig;
use crate::states::{
    check_level, enumerate_shell_parabolic, enumerate_shell_spherical, phi_pq_reduced, ParabolicState,
    PhysicalParams, SphericalOrbital, SphericalState,
};

/// A quadrature order that integrates every shell-n element exactly: 2n + |2s| + 10.
pub fn minimum_order(n: HalfInteger, s: HalfInteger) -> usize {
    (n.twice() + s.abs().twice() + 10).max(1) as usize
}

/// (|e|ε/8) · C_a C_b · [∫ξ²Φ_aΦ_b ∫Φ_aΦ_b − ∫Φ_aΦ_b ∫η²Φ_aΦ_b], with C = √2/(n²a^{3/2}).
///
/// Each Φ_aΦ_b carries exp(−x(1/n_a + 1/n_b)/(2a)); the substitution t = λx with
/// that combined rate leaves a polynomial against the Laguerre weight.
pub fn matrix_element_v(
    a: &ParabolicState,
    b: &ParabolicState,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<f64> {
    if a.s() != b.s() {
        return Err(Error::Argument(format!(
            "states {a} and {b} carry different monopole numbers"
        )));
    }
    params.check_monopole(a.s())?;
    if a.m() != b.m() {
        return Ok(0.0);
    }
    let rule = cached_rule(RuleKind::Laguerre, quad_order)?;
    let bohr = params.bohr_radius();
    let (len_a, len_b) = (bohr * a.n().value(), bohr * b.n().value());
    let rate = 0.5 * (1.0 / len_a + 1.0 / len_b);

    // ∫ x^k Φ_a(x) Φ_b(x) dx for k = 0, 2
    let moments = |pa: u32, qa: u32, pb: u32, qb: u32| {
        let (mut zeroth, mut second) = (0.0, 0.0);
        for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
            let x = t / rate;
            let f = phi_pq_reduced(pa, qa as i64, x / len_a) * phi_pq_reduced(pb, qb as i64, x / len_b);
            zeroth += w * f;
            second += w * x * x * f;
        }
        (zeroth / rate, second / rate)
    };
    let (i_xi, ii_xi) = moments(a.n1(), a.q_xi(), b.n1(), b.q_xi());
    let (i_eta, ii_eta) = moments(a.n2(), a.q_eta(), b.n2(), b.q_eta());

    let constant = |n: HalfInteger| 2f64.sqrt() / (n.value().powi(2) * bohr.powf(1.5));
    let prefactor = 0.125 * params.e_abs() * field.epsilon() * constant(a.n()) * constant(b.n());
    Ok(prefactor * (ii_xi * i_eta - i_xi * ii_eta))
}

/// V restricted to the states of one shell with a given m.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubspaceMatrix {
    pub n: HalfInteger,
    pub m: HalfInteger,
    pub basis: Vec<ParabolicState>,
    pub entries: Vec<Vec<f64>>,
}

impl SubspaceMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn max_asymmetry(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..i {
                worst = worst.max((self.entries[i][j] - self.entries[j][i]).abs());
            }
        }
        worst
    }

    pub fn max_offdiagonal(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if i != j {
                    worst = worst.max(self.entries[i][j].abs());
                }
            }
        }
        worst
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        jacobi_eigenvalues(&self.entries)
    }
}

fn shell_m_values(n: HalfInteger, s: HalfInteger) -> Result<Vec<HalfInteger>> {
    check_level(n, s)?;
    let top = n - 1;
    let mut out = Vec::new();
    let mut m = -top;
    while m <= top {
        out.push(m);
        m = m + 1;
    }
    Ok(out)
}

/// Full matrix of V over the shell-n parabolic states with the given m.
/// Both triangles are computed independently.
pub fn build_subspace(
    n: HalfInteger,
    s: HalfInteger,
    m: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<SubspaceMatrix> {
    params.check_monopole(s)?;
    if !m.differs_by_integer(n - 1) || m.abs() > n - 1 {
        return Err(Error::QuantumNumbers(format!("m = {m} is not a projection in shell n = {n}")));
    }
    let basis: Vec<ParabolicState> = enumerate_shell_parabolic(n, s)?
        .into_iter()
        .filter(|st| st.m() == m)
        .collect();
    let entries = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| matrix_element_v(a, b, field, params, quad_order))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubspaceMatrix { n, m, basis, entries })
}

/// Per-m sectors of shell n with their ascending eigenvalues. Empty sectors are skipped.
pub fn oracle_shifts(
    n: HalfInteger,
    s: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<Vec<(HalfInteger, Vec<f64>)>> {
    let mut out = Vec::new();
    for m in shell_m_values(n, s)? {
        let block = build_subspace(n, s, m, field, params, quad_order)?;
        if block.dim() > 0 {
            out.push((m, block.eigenvalues()?));
        }
    }
    Ok(out)
}

/// All shell-n oracle eigenvalues, ascending.
pub fn oracle_shell_spectrum(
    n: HalfInteger,
    s: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<Vec<f64>> {
    let mut all: Vec<f64> = oracle_shifts(n, s, field, params, quad_order)?
        .into_iter()
        .flat_map(|(_, v)| v)
        .collect();
    all.sort_by(f64::total_cmp);
    Ok(all)
}

/// Largest |off-diagonal element| over every m-sector of shell n.
pub fn offdiagonal_report(
    n: HalfInteger,
    s: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for m in shell_m_values(n, s)? {
        worst = worst.max(build_subspace(n, s, m, field, params, quad_order)?.max_offdiagonal());
    }
    Ok(worst)
}

/// V = |e|ε r cos θ over the spherical states of shell n with a given m,
/// integrated in (r, θ) with the spherical wavefunctions.
pub fn spherical_subspace(
    n: HalfInteger,
    s: HalfInteger,
    m: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<Vec<Vec<f64>>> {
    params.check_monopole(s)?;
    let orbitals: Vec<SphericalOrbital> = enumerate_shell_spherical(n, s)?
        .into_iter()
        .filter(|st: &SphericalState| st.m() == m)
        .map(|st| SphericalOrbital::new(st, params))
        .collect::<Result<_>>()?;
    let laguerre = cached_rule(RuleKind::Laguerre, quad_order)?;
    let legendre = cached_rule(RuleKind::Legendre, quad_order)?;
    let scale = 0.5 * params.bohr_radius() * n.value();

    let mut out = vec![vec![0.0; orbitals.len()]; orbitals.len()];
    for (i, a) in orbitals.iter().enumerate() {
        for (j, b) in orbitals.iter().enumerate() {
            let radial = laguerre.integrate_halfline(|r| a.radial(r) * b.radial(r) * r.powi(3), scale)?;
            let mut polar_err = None;
            let polar = legendre.integrate_weighted(|c| {
                let theta = c.clamp(-1.0, 1.0).acos();
                match (a.polar(theta), b.polar(theta)) {
                    (Ok(x), Ok(y)) => x * y * c,
                    (Err(e), _) | (_, Err(e)) => {
                        polar_err = Some(e);
                        0.0
                    }
                }
            });
            if let Some(e) = polar_err {
                return Err(e);
            }
            out[i][j] = params.e_abs() * field.epsilon() * radial * TAU * polar;
        }
    }
    Ok(out)
}

/// Ascending eigenvalues of [`spherical_subspace`].
pub fn spherical_sector_eigenvalues(
    n: HalfInteger,
    s: HalfInteger,
    m: HalfInteger,
    field: &FieldConfig,
    params: &PhysicalParams,
    quad_order: usize,
) -> Result<Vec<f64>> {
    jacobi_eigenvalues(&spherical_subspace(n, s, m, field, params, quad_order)?)
}
