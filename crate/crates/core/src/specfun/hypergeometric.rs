use crate::error::{Error, Result};

use super::gamma::{ln_gamma_signed, ln_pochhammer_signed};

/// The terminating confluent hypergeometric series ₁F₁(−p; b; x), a polynomial
/// of degree p in x.
///
/// For x ≤ 0 every term is positive and the p + 1 terms are summed directly.
/// For x > 0 the terms alternate and cancel badly, so the same polynomial is
/// produced by the three-term recurrence in the first parameter,
/// (b + k) F_{k+1} = (2k + b − x) F_k − k F_{k−1}, F_k = ₁F₁(−k; b; x).
pub fn hyp1f1_poly(p: u32, b: f64, x: f64) -> Result<f64> {
    if !(b > 0.0) {
        return Err(Error::domain("hyp1f1_poly", format!("b = {b} must be positive")));
    }
    if x > 0.0 {
        let mut prev = 1.0;
        if p == 0 {
            return Ok(prev);
        }
        let mut cur = 1.0 - x / b;
        for k in 1..p {
            let k = k as f64;
            let next = ((2.0 * k + b - x) * cur - k * prev) / (b + k);
            prev = cur;
            cur = next;
        }
        return Ok(cur);
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..p {
        let k = k as f64;
        term *= (k - p as f64) * x / ((b + k) * (k + 1.0));
        sum += term;
    }
    Ok(sum)
}

fn non_positive_integer(x: f64) -> Option<u64> {
    (x <= 0.0 && x.fract() == 0.0 && x > -1e15).then(|| (-x) as u64)
}

/// Gauss's hypergeometric function at unit argument, ₂F₁(α, β; γ; 1).
///
/// Convergent case (γ − α − β > 0): Γ(γ)Γ(γ−α−β) / (Γ(γ−α)Γ(γ−β)), evaluated in
/// log space with sign tracking. Terminating case (α or β a non-positive
/// integer −N): the Chu–Vandermonde form (γ−β)_N / (γ)_N.
pub fn hyp2f1_unit(alpha: f64, beta: f64, gamma_p: f64) -> Result<f64> {
    const NAME: &str = "hyp2f1_unit";
    if !(alpha.is_finite() && beta.is_finite() && gamma_p.is_finite()) {
        return Err(Error::domain(NAME, "non-finite parameter"));
    }
    if non_positive_integer(gamma_p).is_some() {
        return Err(Error::domain(NAME, format!("γ = {gamma_p} is a pole")));
    }

    let terminating = match (non_positive_integer(alpha), non_positive_integer(beta)) {
        (Some(n), _) => Some((n, beta)),
        (None, Some(n)) => Some((n, alpha)),
        (None, None) => None,
    };
    if let Some((n, other)) = terminating {
        let (ln_num, sign_num) = ln_pochhammer_signed(gamma_p - other, n);
        if sign_num == 0.0 {
            return Ok(0.0);
        }
        let (ln_den, sign_den) = ln_pochhammer_signed(gamma_p, n);
        return Ok(sign_num * sign_den * (ln_num - ln_den).exp());
    }

    let excess = gamma_p - alpha - beta;
    if !(excess > 0.0) {
        return Err(Error::domain(
            NAME,
            format!("series diverges at unit argument (γ − α − β = {excess})"),
        ));
    }
    let (la, sa) = ln_gamma_signed(gamma_p)?;
    let (lb, sb) = ln_gamma_signed(excess)?;
    // 1/Γ vanishes at poles, so a pole in the denominator gives zero.
    let (lc, sc) = match ln_gamma_signed(gamma_p - alpha) {
        Ok(v) => v,
        Err(_) => return Ok(0.0),
    };
    let (ld, sd) = match ln_gamma_signed(gamma_p - beta) {
        Ok(v) => v,
        Err(_) => return Ok(0.0),
    };
    Ok(sa * sb * sc * sd * (la + lb - lc - ld).exp())
}
