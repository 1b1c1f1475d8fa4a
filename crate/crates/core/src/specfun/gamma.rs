use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9 (Godfrey's coefficients).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Largest `k` whose factorial is finite in `f64`.
const FACTORIAL_TABLE_MAX: usize = 170;

fn ln_factorial_table() -> &'static [f64; FACTORIAL_TABLE_MAX + 1] {
    static TABLE: OnceLock<[f64; FACTORIAL_TABLE_MAX + 1]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = [0.0; FACTORIAL_TABLE_MAX + 1];
        let mut product = 1.0_f64;
        for (k, slot) in table.iter_mut().enumerate().skip(1) {
            product *= k as f64;
            *slot = product.ln();
        }
        table
    })
}

fn lanczos_ln_gamma(x: f64) -> f64 {
    // valid for x >= 0.5
    let x = x - 1.0;
    let mut series = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (x + 0.5) * t.ln() - t + series.ln()
}

/// Natural logarithm of Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("ln_gamma", format!("argument {x} is not positive")));
    }
    if x.fract() == 0.0 && x <= (FACTORIAL_TABLE_MAX + 1) as f64 {
        return Ok(ln_factorial_table()[x as usize - 1]);
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x
        return Ok(lanczos_ln_gamma(x + 1.0) - x.ln());
    }
    Ok(lanczos_ln_gamma(x))
}

/// ln(k!) for a non-negative integer.
pub fn ln_factorial(k: u64) -> f64 {
    if (k as usize) <= FACTORIAL_TABLE_MAX {
        ln_factorial_table()[k as usize]
    } else {
        lanczos_ln_gamma(k as f64 + 1.0)
    }
}

/// ln|Γ(x)| together with the sign of Γ(x), for any real x that is not a pole.
pub(crate) fn ln_gamma_signed(x: f64) -> Result<(f64, f64)> {
    if !x.is_finite() {
        return Err(Error::domain("gamma", format!("argument {x} is not finite")));
    }
    if x > 0.0 {
        return Ok((ln_gamma(x)?, 1.0));
    }
    if x.fract() == 0.0 {
        return Err(Error::domain("gamma", format!("pole at {x}")));
    }
    // reflection: Γ(x) Γ(1 - x) = π / sin(πx)
    let sin_pix = (PI * x).sin();
    let ln_abs = PI.ln() - sin_pix.abs().ln() - ln_gamma(1.0 - x)?;
    Ok((ln_abs, sin_pix.signum()))
}

/// ln|(x)_k| and the sign of the rising factorial (x)_k = x (x+1) ... (x+k-1).
pub(crate) fn ln_pochhammer_signed(x: f64, k: u64) -> (f64, f64) {
    let mut ln_abs = 0.0;
    let mut sign = 1.0;
    for i in 0..k {
        let factor = x + i as f64;
        if factor == 0.0 {
            return (f64::NEG_INFINITY, 0.0);
        }
        ln_abs += factor.abs().ln();
        if factor < 0.0 {
            sign = -sign;
        }
    }
    (ln_abs, sign)
}
