//! Inner products ⟨a|b⟩ by product quadrature, and the closed ground-state form.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{cached_rule, RuleKind};
use crate::specfun::HalfInteger;

use super::{phi_pq_reduced, ParabolicState, PhysicalParams, SphericalOrbital, SphericalState};

/// ⟨a|b⟩ for spherical states: Laguerre in r (scaled by the combined decay),
/// Gauss–Legendre in cos θ, and the φ integral done exactly.
pub fn spherical_overlap(a: &SphericalState, b: &SphericalState, params: &PhysicalParams, order: usize) -> Result<f64> {
    if a.s() != b.s() {
        return Err(Error::Argument(format!("states {a} and {b} carry different monopole numbers")));
    }
    if a.m() != b.m() {
        return Ok(0.0);
    }
    let (oa, ob) = (SphericalOrbital::new(*a, params)?, SphericalOrbital::new(*b, params)?);
    let bohr = params.bohr_radius();
    let scale = bohr / (1.0 / a.n().value() + 1.0 / b.n().value());
    let radial = cached_rule(RuleKind::Laguerre, order)?.integrate_halfline(|r| oa.radial(r) * ob.radial(r) * r * r, scale)?;

    let mut failure = None;
    let polar = cached_rule(RuleKind::Legendre, order)?.integrate_weighted(|c| {
        let theta = c.clamp(-1.0, 1.0).acos();
        match (oa.polar(theta), ob.polar(theta)) {
            (Ok(x), Ok(y)) => x * y,
            (Err(e), _) | (_, Err(e)) => {
                failure = Some(e);
                0.0
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(radial * polar * TAU),
    }
}

/// ⟨a|b⟩ for parabolic states over dV = (ξ + η)/4 dξ dη dφ.
pub fn parabolic_overlap(a: &ParabolicState, b: &ParabolicState, params: &PhysicalParams, order: usize) -> Result<f64> {
    if a.s() != b.s() {
        return Err(Error::Argument(format!("states {a} and {b} carry different monopole numbers")));
    }
    if a.m() != b.m() {
        return Ok(0.0);
    }
    let rule = cached_rule(RuleKind::Laguerre, order)?;
    let bohr = params.bohr_radius();
    let (len_a, len_b) = (bohr * a.n().value(), bohr * b.n().value());
    let rate = 0.5 * (1.0 / len_a + 1.0 / len_b);
    let moments = |pa: u32, qa: u32, pb: u32, qb: u32| {
        let (mut zeroth, mut first) = (0.0, 0.0);
        for (&t, &w) in rule.nodes().iter().zip(rule.weights()) {
            let x = t / rate;
            let f = w * phi_pq_reduced(pa, qa as i64, x / len_a) * phi_pq_reduced(pb, qb as i64, x / len_b);
            zeroth += f;
            first += x * f;
        }
        (zeroth / rate, first / rate)
    };
    let (i_xi, x_xi) = moments(a.n1(), a.q_xi(), b.n1(), b.q_xi());
    let (i_eta, x_eta) = moments(a.n2(), a.q_eta(), b.n2(), b.q_eta());
    // C_a C_b · 2π with C = √2/(n²a^{3/2})/√(2π)
    let constant = 2.0 / (a.n().value() * b.n().value()).powi(2) / bohr.powi(3);
    Ok(constant * 0.25 * (x_xi * i_eta + i_xi * x_eta))
}

/// r^{|s|} e^{−r/(a(|s|+1))} (cos θ/2)^{|s|±m} (±sin θ/2)^{|s|∓m} e^{imφ}, the
/// unnormalized lowest-shell function; `upper` selects the upper signs.
pub fn ground_state_form(
    m: HalfInteger,
    s: HalfInteger,
    upper: bool,
    r: f64,
    theta: f64,
    phi: f64,
    params: &PhysicalParams,
) -> Result<Complex64> {
    let j = s.abs();
    if m.abs() > j || !m.differs_by_integer(j) {
        return Err(Error::QuantumNumbers(format!("ground shell needs |m| ≤ |s| with m − s integer, got m = {m}, s = {s}")));
    }
    let (cos_pow, sin_pow, sign) = if upper { (j + m, j - m, 1.0) } else { (j - m, j + m, -1.0) };
    let half = 0.5 * theta;
    let amplitude = r.powf(j.value())
        * (-r / (params.bohr_radius() * (j.value() + 1.0))).exp()
        * half.cos().powi(integer_power(cos_pow))
        * (sign * half.sin()).powi(integer_power(sin_pow));
    Ok(Complex64::from_polar(amplitude, m.value() * phi))
}

// |s| ± m is an integer whenever m − s is
fn integer_power(x: HalfInteger) -> i32 {
    x.to_integer().expect("integer exponent") as i32
}
