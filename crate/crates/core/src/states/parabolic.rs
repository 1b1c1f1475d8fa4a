use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{cached_rule, RuleKind};
use crate::specfun::{hyp1f1_poly, ln_factorial, HalfInteger};

use super::spherical::{verification_order, NormCheck};
use super::{ParabolicPoint, ParabolicState, PhysicalParams};

/// Φ_pq without its exponential, as a function of t = x/(an):
/// (1/|q|!)·√((p+|q|)!/p!)·t^{|q|/2}·₁F₁(−p; |q|+1; t).
///
/// Φ_pq(x) = e^{−t/2} · phi_pq_reduced(p, q, t).
pub fn phi_pq_reduced(p: u32, q: i64, t: f64) -> f64 {
    let q = q.unsigned_abs();
    let ln_const = 0.5 * (ln_factorial(p as u64 + q) - ln_factorial(p as u64)) - ln_factorial(q);
    let power = match q {
        0 => 1.0,
        _ if q % 2 == 0 => t.powi((q / 2) as i32),
        _ => t.powi((q / 2) as i32) * t.sqrt(),
    };
    ln_const.exp() * power * hyp1f1_poly(p, q as f64 + 1.0, t).expect("b = |q| + 1 > 0")
}

/// The parabolic factor Φ_pq(x) for shell n (dimensionless).
pub fn phi_pq(p: u32, q: i64, x: f64, n: HalfInteger, params: &PhysicalParams) -> Result<f64> {
    if !(n > 0) {
        return Err(Error::QuantumNumbers(format!("principal number {n} must be positive")));
    }
    if !(x >= 0.0) {
        return Err(Error::Argument(format!("coordinate {x} must be non-negative")));
    }
    let t = x / (params.bohr_radius() * n.value());
    Ok((-0.5 * t).exp() * phi_pq_reduced(p, q, t))
}

/// A parabolic-basis eigenfunction with its printed constant verified.
#[derive(Debug, Clone)]
pub struct ParabolicOrbital {
    state: ParabolicState,
    length: f64,
    prefactor: f64,
    check: NormCheck,
}

impl ParabolicOrbital {
    pub fn new(state: ParabolicState, params: &PhysicalParams) -> Result<Self> {
        params.check_monopole(state.s())?;
        let n = state.n();
        let a = params.bohr_radius();
        let length = a * n.value();
        let printed = 2f64.sqrt() / (n.value().powi(2) * a.powf(1.5)) / TAU.sqrt();

        // ∫|ψ|² dV = printed² · 2π · ¼ · [∫ξΦ₁² ∫Φ₂² + ∫Φ₁² ∫ηΦ₂²], each Φ² ~ e^{−x/(an)}
        let rule = cached_rule(RuleKind::Laguerre, verification_order(n, state.s()))?;
        let (q1, q2) = (state.q_xi() as i64, state.q_eta() as i64);
        let moments = |p: u32, q: i64| {
            let zeroth = rule.integrate_weighted(|t| phi_pq_reduced(p, q, t).powi(2));
            let first = rule.integrate_weighted(|t| t * phi_pq_reduced(p, q, t).powi(2));
            (length * zeroth, length * length * first)
        };
        let (i1, x1) = moments(state.n1(), q1);
        let (i2, x2) = moments(state.n2(), q2);
        let check = NormCheck::from_integral(printed * printed * TAU * 0.25 * (x1 * i2 + i1 * x2));
        if check.renormalized() {
            log::debug!(
                "parabolic {state}: printed norm {:.12}, rescaled by {:.12}",
                check.printed_integral,
                check.correction
            );
        }
        Ok(ParabolicOrbital {
            state,
            length,
            prefactor: printed * check.correction,
            check,
        })
    }

    pub fn state(&self) -> ParabolicState {
        self.state
    }

    pub fn norm_check(&self) -> NormCheck {
        self.check
    }

    /// Φ_{n₁, m−s}(ξ).
    pub fn xi_factor(&self, xi: f64) -> f64 {
        let t = xi / self.length;
        (-0.5 * t).exp() * phi_pq_reduced(self.state.n1(), self.state.q_xi() as i64, t)
    }

    /// Φ_{n₂, m+s}(η).
    pub fn eta_factor(&self, eta: f64) -> f64 {
        let t = eta / self.length;
        (-0.5 * t).exp() * phi_pq_reduced(self.state.n2(), self.state.q_eta() as i64, t)
    }

    pub fn eval(&self, point: &ParabolicPoint) -> Complex64 {
        let amplitude = self.prefactor * self.xi_factor(point.xi) * self.eta_factor(point.eta);
        Complex64::from_polar(amplitude, self.state.m().value() * point.phi)
    }
}

/// ψ_{n₁n₂ms}(ξ, η, φ) = √2/(n² a^{3/2}) · Φ_{n₁,m−s}(ξ) Φ_{n₂,m+s}(η) · e^{imφ}/√(2π).
pub fn parabolic_psi(state: &ParabolicState, point: &ParabolicPoint, params: &PhysicalParams) -> Result<Complex64> {
    Ok(ParabolicOrbital::new(*state, params)?.eval(point))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::gauss_laguerre;
    use crate::states::enumerate_shell_parabolic;

    fn h(twice: i64) -> HalfInteger {
        HalfInteger::from_twice(twice)
    }

    #[test]
    fn phi_examples() {
        let p = PhysicalParams::atomic(h(0));
        assert_eq!(phi_pq(0, 0, 0.0, h(2), &p).unwrap(), 1.0);
        for q in [-3, -1, 1, 2, 5] {
            assert_eq!(phi_pq(2, q, 0.0, h(6), &p).unwrap(), 0.0);
        }
        assert!(phi_pq(0, 0, -1.0, h(2), &p).is_err());
        // ∫ Φ²_{1,1} dx = a n with n = 3
        let rule = gauss_laguerre(30).unwrap();
        let integral = rule
            .integrate_halfline(|x| phi_pq(1, 1, x, h(6), &p).unwrap().powi(2), 3.0)
            .unwrap();
        assert!((integral - 3.0).abs() < 1e-12);
    }

    #[test]
    fn printed_constant_is_already_normalized() {
        for ts in 0..=3 {
            let s = h(ts);
            let p = PhysicalParams::with_coupling(0.8, s).unwrap();
            for k in 0..4 {
                for st in enumerate_shell_parabolic(s.abs() + (k + 1), s).unwrap() {
                    let orb = ParabolicOrbital::new(st, &p).unwrap();
                    assert!(!orb.norm_check().renormalized(), "{st}");
                    assert!((orb.norm_check().printed_integral - 1.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn finite_on_both_half_axes() {
        let p = PhysicalParams::atomic(h(3));
        for st in enumerate_shell_parabolic(h(7), h(3)).unwrap() {
            for (xi, eta) in [(0.0, 2.0), (2.0, 0.0), (0.0, 0.0)] {
                let v = parabolic_psi(&st, &ParabolicPoint::new(xi, eta, 0.3).unwrap(), &p).unwrap();
                assert!(v.norm().is_finite());
            }
        }
    }
}
