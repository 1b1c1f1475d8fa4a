use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::gamma::ln_factorial;
use super::HalfInteger;

fn factorial_arg(x: HalfInteger) -> u64 {
    // callers have already checked that x is a non-negative integer
    x.to_integer().expect("integer factorial argument") as u64
}

/// Wigner small-d function d^j_{m s}(θ) for integer or half-integer indices.
///
/// Direct finite sum over k with factorials in log space:
///
/// d^j_{ms}(θ) = Σ_k (−1)^{m−s+k} √((j+m)!(j−m)!(j+s)!(j−s)!)
///               / ((j+s−k)! k! (j−m−k)! (m−s+k)!)
///               · cos(θ/2)^{2j+s−m−2k} · sin(θ/2)^{m−s+2k}
pub fn wigner_d(j: HalfInteger, m: HalfInteger, s: HalfInteger, theta: f64) -> Result<f64> {
    const NAME: &str = "wigner_d";
    if j.is_negative() {
        return Err(Error::domain(NAME, format!("j = {j} is negative")));
    }
    if m.abs() > j || s.abs() > j {
        return Err(Error::domain(NAME, format!("need |m|, |s| <= j (j={j}, m={m}, s={s})")));
    }
    if !j.differs_by_integer(m) || !j.differs_by_integer(s) {
        return Err(Error::domain(NAME, format!("j - m and j - s must be integers (j={j}, m={m}, s={s})")));
    }
    if !(-1e-12..=PI + 1e-12).contains(&theta) {
        return Err(Error::domain(NAME, format!("theta = {theta} outside [0, pi]")));
    }
    let theta = theta.clamp(0.0, PI);

    let jpm = factorial_arg(j + m);
    let jmm = factorial_arg(j - m);
    let jps = factorial_arg(j + s);
    let jms = factorial_arg(j - s);
    let ln_prefactor =
        0.5 * (ln_factorial(jpm) + ln_factorial(jmm) + ln_factorial(jps) + ln_factorial(jms));

    let m_minus_s = (m - s).to_integer().expect("integer difference");
    let two_j = j.twice();
    let k_min = (-m_minus_s).max(0);
    let k_max = (jps as i64).min(jmm as i64);

    let cos_half = (0.5 * theta).cos();
    let sin_half = (0.5 * theta).sin();
    let mut sum = 0.0;
    for k in k_min..=k_max {
        let ln_den = ln_factorial(jps - k as u64)
            + ln_factorial(k as u64)
            + ln_factorial(jmm - k as u64)
            + ln_factorial((m_minus_s + k) as u64);
        let cos_pow = (two_j - m_minus_s - 2 * k) as i32;
        let sin_pow = (m_minus_s + 2 * k) as i32;
        let magnitude = (ln_prefactor - ln_den).exp() * cos_half.powi(cos_pow) * sin_half.powi(sin_pow);
        if (m_minus_s + k).rem_euclid(2) == 0 {
            sum += magnitude;
        } else {
            sum -= magnitude;
        }
    }
    Ok(sum)
}
