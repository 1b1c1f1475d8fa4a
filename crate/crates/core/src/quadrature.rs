//! Gaussian quadrature rules generated by the Golub–Welsch method.
//!
//! The Jacobi matrix of the three-term recurrence is diagonalized with an
//! implicit QL solver; its eigenvalues are the nodes. The weight attached to a
//! node is the squared first component of the normalized eigenvector, which
//! equals `1 / Σ_k p_k(x)²` over the orthonormal polynomials. That sum is
//! evaluated directly from the recurrence so tiny weights keep full relative
//! precision. Nodes get one Newton polish on p_N before the weights are formed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    /// Weight e^{−x} on [0, ∞).
    Laguerre,
    /// Weight 1 on [−1, 1].
    Legendre,
}

/// Nodes and weights of an N-point Gauss rule. Immutable once built.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    kind: RuleKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Σ w_i f(x_i): integrates f against the rule's own weight function.
    pub fn integrate_weighted<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// ∫₀^∞ f(ξ) dξ for a bare integrand that carries its own exponential decay.
    ///
    /// Substitutes ξ = scale·x and multiplies each weight by e^{x_i}, so the
    /// result is Σ w_i e^{x_i} · scale · f(scale · x_i). Exact when f(ξ)·e^{ξ/scale}
    /// is a polynomial of degree ≤ 2N − 1.
    pub fn integrate_halfline<F: FnMut(f64) -> f64>(&self, mut f: F, scale: f64) -> Result<f64> {
        if self.kind != RuleKind::Laguerre {
            return Err(Error::Argument("half-line integration needs a Laguerre rule".into()));
        }
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::Argument(format!("scale {scale} must be positive")));
        }
        let mut sum = 0.0;
        for (&x, &w) in self.nodes.iter().zip(&self.weights) {
            if w == 0.0 {
                continue;
            }
            // w e^{x} formed in log space; w can be far below e^{-x} range limits
            let boosted = (w.ln() + x).exp();
            sum += boosted * f(scale * x);
        }
        Ok(scale * sum)
    }

    /// ∫_lo^hi f(x) dx with a Legendre rule mapped affinely onto [lo, hi].
    pub fn integrate_interval<F: FnMut(f64) -> f64>(&self, mut f: F, lo: f64, hi: f64) -> Result<f64> {
        if self.kind != RuleKind::Legendre {
            return Err(Error::Argument("interval integration needs a Legendre rule".into()));
        }
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        Ok(half * self.integrate_weighted(|x| f(mid + half * x)))
    }
}

/// Free-function form of [`QuadratureRule::integrate_halfline`].
pub fn integrate_halfline<F: FnMut(f64) -> f64>(f: F, rule: &QuadratureRule, scale: f64) -> Result<f64> {
    rule.integrate_halfline(f, scale)
}

/// Recurrence coefficients of the monic-orthogonal family:
/// x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k−1} for the orthonormal p_k.
struct Recurrence {
    diag: Vec<f64>,
    // off[k] = b_{k+1}, k = 0..N-1 (the last entry is only used for Newton)
    off: Vec<f64>,
    zeroth_moment: f64,
}

impl Recurrence {
    fn new(kind: RuleKind, order: usize) -> Self {
        match kind {
            RuleKind::Laguerre => Recurrence {
                diag: (0..order).map(|k| 2.0 * k as f64 + 1.0).collect(),
                off: (1..=order).map(|k| k as f64).collect(),
                zeroth_moment: 1.0,
            },
            RuleKind::Legendre => Recurrence {
                diag: vec![0.0; order],
                off: (1..=order)
                    .map(|k| {
                        let k = k as f64;
                        k / (4.0 * k * k - 1.0).sqrt()
                    })
                    .collect(),
                zeroth_moment: 2.0,
            },
        }
    }

    /// Returns (p_N(x), p_N'(x)) up to a common positive factor, and ln Σ_{k<N} p_k(x)².
    fn evaluate(&self, x: f64) -> (f64, f64, f64) {
        const RESCALE_AT: f64 = 1e150;
        let n = self.diag.len();
        let mut p_prev = 0.0;
        let mut p = 1.0 / self.zeroth_moment.sqrt();
        let mut dp_prev = 0.0;
        let mut dp = 0.0;
        let mut sum_sq = 0.0;
        let mut ln_scale = 0.0;
        for k in 0..n {
            sum_sq += p * p;
            let b_prev = if k == 0 { 0.0 } else { self.off[k - 1] };
            let b_next = self.off[k];
            let p_next = ((x - self.diag[k]) * p - b_prev * p_prev) / b_next;
            let dp_next = ((x - self.diag[k]) * dp + p - b_prev * dp_prev) / b_next;
            p_prev = p;
            p = p_next;
            dp_prev = dp;
            dp = dp_next;
            if p.abs() > RESCALE_AT || dp.abs() > RESCALE_AT {
                let inv = 1.0 / RESCALE_AT;
                p *= inv;
                p_prev *= inv;
                dp *= inv;
                dp_prev *= inv;
                sum_sq *= inv * inv;
                ln_scale += RESCALE_AT.ln();
            }
        }
        (p, dp, sum_sq.ln() + 2.0 * ln_scale)
    }
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit QL method with
/// Wilkinson shifts. `off[i]` couples rows i and i + 1; sorted ascending.
pub(crate) fn tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Result<Vec<f64>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[..n.saturating_sub(1)].copy_from_slice(&off[..n.saturating_sub(1)]);

    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > 60 {
                return Err(Error::Argument("tridiagonal QL failed to converge".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(f64::total_cmp);
    Ok(d)
}

fn golub_welsch(kind: RuleKind, order: usize) -> Result<QuadratureRule> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::Argument(format!(
            "quadrature order {order} outside 1..={MAX_ORDER}"
        )));
    }
    let rec = Recurrence::new(kind, order);
    let eigenvalues = tridiagonal_eigenvalues(&rec.diag, &rec.off[..order - 1])?;

    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    for x0 in eigenvalues {
        let (p, dp, _) = rec.evaluate(x0);
        let x = if dp != 0.0 && (p / dp).is_finite() { x0 - p / dp } else { x0 };
        let (_, _, ln_sum_sq) = rec.evaluate(x);
        nodes.push(x);
        weights.push((-ln_sum_sq).exp());
    }
    if kind == RuleKind::Legendre {
        // enforce exact mirror symmetry
        for i in 0..order / 2 {
            let k = order - 1 - i;
            let x = 0.5 * (nodes[k] - nodes[i]);
            let w = 0.5 * (weights[k] + weights[i]);
            nodes[i] = -x;
            nodes[k] = x;
            weights[i] = w;
            weights[k] = w;
        }
        if order % 2 == 1 {
            nodes[order / 2] = 0.0;
        }
    }
    Ok(QuadratureRule { kind, nodes, weights })
}

/// N-point Gauss–Laguerre rule for ∫₀^∞ e^{−x} f(x) dx.
pub fn gauss_laguerre(order: usize) -> Result<QuadratureRule> {
    golub_welsch(RuleKind::Laguerre, order)
}

/// N-point Gauss–Legendre rule for ∫₋₁¹ f(x) dx.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    golub_welsch(RuleKind::Legendre, order)
}

/// Shared, lazily built rules. Rules are immutable so handing out `Arc`s is safe.
pub fn cached_rule(kind: RuleKind, order: usize) -> Result<Arc<QuadratureRule>> {
    static CACHE: OnceLock<Mutex<HashMap<(RuleKind, usize), Arc<QuadratureRule>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rule) = cache.lock().unwrap_or_else(|e| e.into_inner()).get(&(kind, order)) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(golub_welsch(kind, order)?);
    cache
        .lock()
        .unwrap_or_else(|e| e.into_inner())
        .insert((kind, order), Arc::clone(&rule));
    Ok(rule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::ln_factorial;
    use approx::assert_relative_eq;

    #[test]
    fn low_orders_match_closed_forms() {
        let r1 = gauss_laguerre(1).unwrap();
        assert_relative_eq!(r1.nodes()[0], 1.0, epsilon = 1e-15);
        assert_relative_eq!(r1.weights()[0], 1.0, epsilon = 1e-15);

        let s2 = 2f64.sqrt();
        let r2 = gauss_laguerre(2).unwrap();
        assert!((r2.nodes()[0] - (2.0 - s2)).abs() < 1e-12);
        assert!((r2.nodes()[1] - (2.0 + s2)).abs() < 1e-12);
        assert!((r2.weights()[0] - (2.0 + s2) / 4.0).abs() < 1e-12);
        assert!((r2.weights()[1] - (2.0 - s2) / 4.0).abs() < 1e-12);

        // L3 roots: eigenvalues of [[1,1,0],[1,3,2],[0,2,5]], checked against the cubic
        let r3 = gauss_laguerre(3).unwrap();
        for &x in r3.nodes() {
            let l3 = (-x * x * x + 9.0 * x * x - 18.0 * x + 6.0) / 6.0;
            assert!(l3.abs() < 1e-12, "L3({x}) = {l3}");
        }

        let g1 = gauss_legendre(1).unwrap();
        assert_eq!(g1.nodes(), &[0.0]);
        assert_relative_eq!(g1.weights()[0], 2.0, epsilon = 1e-15);
        let g2 = gauss_legendre(2).unwrap();
        let inv = 1.0 / 3f64.sqrt();
        assert!((g2.nodes()[0] + inv).abs() < 1e-12 && (g2.nodes()[1] - inv).abs() < 1e-12);
        assert!((g2.weights()[0] - 1.0).abs() < 1e-12 && (g2.weights()[1] - 1.0).abs() < 1e-12);
        let g3 = gauss_legendre(3).unwrap();
        let x = (0.6f64).sqrt();
        assert!((g3.nodes()[0] + x).abs() < 1e-12 && g3.nodes()[1].abs() < 1e-12);
        assert!((g3.weights()[1] - 8.0 / 9.0).abs() < 1e-12);
        assert!((g3.weights()[0] - 5.0 / 9.0).abs() < 1e-12);
        assert_relative_eq!(g2.integrate_weighted(|x| x * x), 2.0 / 3.0, max_relative = 1e-14);
    }

    #[test]
    fn rule_invariants() {
        for order in [1, 2, 5, 17, 40, 64, 100, 150] {
            for rule in [gauss_laguerre(order).unwrap(), gauss_legendre(order).unwrap()] {
                assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
                assert!(rule.weights().iter().all(|&w| w > 0.0), "order {order}");
                let total: f64 = rule.weights().iter().sum();
                let expected = if rule.kind() == RuleKind::Laguerre { 1.0 } else { 2.0 };
                assert!(((total - expected) / expected).abs() < 1e-12, "order {order}");
            }
        }
    }

    #[test]
    fn monomial_exactness() {
        for order in 1..=40usize {
            let lag = gauss_laguerre(order).unwrap();
            let leg = gauss_legendre(order).unwrap();
            for degree in 0..(2 * order) as i32 {
                let got = lag.integrate_weighted(|x| x.powi(degree));
                let exact = ln_factorial(degree as u64).exp();
                assert!(((got - exact) / exact).abs() <= 1e-10, "Laguerre N={order} k={degree}");
                let got = leg.integrate_weighted(|x| x.powi(degree));
                let exact = if degree % 2 == 0 { 2.0 / (degree as f64 + 1.0) } else { 0.0 };
                assert!((got - exact).abs() <= 1e-10 * exact.abs().max(1.0), "Legendre N={order} k={degree}");
            }
        }
    }

    #[test]
    fn halfline_driver() {
        let r20 = gauss_laguerre(20).unwrap();
        assert_relative_eq!(r20.integrate_halfline(|x| (-x).exp(), 1.0).unwrap(), 1.0, max_relative = 1e-13);
        assert_relative_eq!(
            r20.integrate_halfline(|x| x * x * (-x).exp(), 1.0).unwrap(),
            2.0,
            max_relative = 1e-13
        );
        let r40 = gauss_laguerre(40).unwrap();
        assert_relative_eq!(
            integrate_halfline(|x| x.powi(3) * (-x / 2.0).exp(), &r40, 2.0).unwrap(),
            96.0,
            max_relative = 1e-12
        );
        assert!(gauss_legendre(4).unwrap().integrate_halfline(|x| x, 1.0).is_err());
        assert!(r20.integrate_halfline(|x| x, 0.0).is_err());
    }

    #[test]
    fn order_doubling_plateau() {
        for order in [12usize, 20, 30] {
            let a = gauss_laguerre(order).unwrap();
            let b = gauss_laguerre(2 * order).unwrap();
            let f = |x: f64| (x * x + 3.0 * x + 1.0) * (-x).exp() * (1.0 + 0.25 * x).powi(5);
            let va = a.integrate_halfline(f, 1.0).unwrap();
            let vb = b.integrate_halfline(f, 1.0).unwrap();
            assert!(((va - vb) / vb).abs() <= 1e-10);
            let g = |x: f64| (3.0 * x).cos() * (1.0 + x * x);
            let la = gauss_legendre(order).unwrap().integrate_weighted(g);
            let lb = gauss_legendre(2 * order).unwrap().integrate_weighted(g);
            assert!(((la - lb) / lb).abs() <= 1e-10);
        }
    }

    #[test]
    fn order_bounds() {
        assert!(gauss_laguerre(0).is_err());
        assert!(gauss_legendre(201).is_err());
        assert!(gauss_laguerre(200).is_ok());
    }

    #[test]
    fn cache_returns_shared_rule() {
        let a = cached_rule(RuleKind::Laguerre, 33).unwrap();
        let b = cached_rule(RuleKind::Laguerre, 33).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(*a, gauss_laguerre(33).unwrap());
    }
}
