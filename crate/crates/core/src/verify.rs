//! Named consistency checks over the whole library.
//!
//! Each check sweeps a family of cases, tracks the worst deviation against its
//! tolerance and keeps the first failing case. Errors raised inside a check
//! count as failures.

use serde::Serialize;

use crate::error::Result;
use crate::oracle::{build_subspace, frobenius_norm, jacobi_eigenvalues, matrix_element_v, offdiagonal_report};
use crate::quadrature::{cached_rule, RuleKind};
use crate::specfun::{ln_factorial, wigner_d, HalfInteger};
use crate::stark::{
    integral_i, integral_ii, mean_dipole, dipole_operator_expectation, shell_splitting_sixths, shift_closed_form,
    shift_integral_form, shift_quantum, shift_sixths, FieldConfig,
};
use crate::states::{
    enumerate_shell_parabolic, enumerate_shell_spherical, ground_state_form, parabolic_overlap, phi_pq_reduced,
    spherical_overlap, ParabolicOrbital, ParabolicPoint, PhysicalParams, SphericalOrbital, SphericalState,
};

/// Options shared by every check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    /// Largest principal number swept by the shell-based checks.
    pub max_n: u32,
    pub quad_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { max_n: 4, quad_order: 48 }
    }
}

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub cases: usize,
    pub worst: f64,
    pub tolerance: f64,
    pub failure: Option<String>,
}

type CheckFn = fn(&VerifyOptions, &mut Tally) -> Result<()>;

/// Every registered check: (id, description, body).
const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("quadrature.monomials", "Gauss rules exact on monomials to degree 2N-1, N <= 40", quadrature_monomials),
    ("jacobi.identities", "Jacobi eigenvalues preserve trace and Frobenius norm", jacobi_identities),
    ("wigner.orthogonality", "Wigner d orthogonality in j for j <= 9/2", wigner_orthogonality),
    ("integrals.moments", "quadrature reproduces I_pq = an and the second-moment bracket", integral_moments),
    ("states.cardinality", "both shell enumerations have n^2 - s^2 states", state_cardinality),
    ("states.spherical_orthonormality", "spherical states orthonormal", spherical_orthonormality),
    ("states.parabolic_orthonormality", "parabolic states orthonormal per m-sector", parabolic_orthonormality),
    ("states.ground_state", "lowest-shell functions proportional to the closed ground-state form", ground_state),
    ("stark.hydrogen", "s = 0, n = 2 shifts are {-3, 0, 0, 3}", stark_hydrogen),
    ("stark.formula_identity", "integral form equals closed form", formula_identity),
    ("stark.degeneracy_removal", "m -> shift injective at fixed (n1, n2) for s != 0", degeneracy_removal),
    ("stark.splitting", "shell_splitting equals max - min of shell shifts", splitting),
    ("stark.dipole", "mean dipole is -dE/d(eps) and matches the dipole operator", dipole),
    ("oracle.hermiticity", "V matrix elements symmetric", oracle_hermiticity),
    ("oracle.equivalence", "per-sector oracle eigenvalues equal closed-form shifts", oracle_equivalence),
    ("oracle.offdiagonal", "parabolic basis diagonalizes V within a shell", oracle_offdiagonal),
    ("oracle.trace", "shell trace of V equals the sum of closed-form shifts", oracle_trace),
];

/// Identifiers of all registered checks, in run order.
pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

/// Runs one check by id. Returns `None` for an unknown id.
pub fn run_check(id: &str, options: &VerifyOptions) -> Option<CheckOutcome> {
    CHECKS.iter().find(|c| c.0 == id).map(|c| execute(c, options))
}

/// Runs every registered check.
pub fn run_all(options: &VerifyOptions) -> Vec<CheckOutcome> {
    CHECKS.iter().map(|c| execute(c, options)).collect()
}

fn execute(check: &(&'static str, &'static str, CheckFn), options: &VerifyOptions) -> CheckOutcome {
    let (id, description, body) = *check;
    let mut tally = Tally::default();
    if let Err(e) = body(options, &mut tally) {
        tally.fail(format!("error: {e}"));
    }
    log::debug!("check {id}: {} cases, worst {:e}", tally.cases, tally.worst);
    CheckOutcome {
        id,
        description,
        passed: tally.failure.is_none(),
        cases: tally.cases,
        worst: tally.worst,
        tolerance: tally.tolerance,
        failure: tally.failure,
    }
}

#[derive(Debug, Default)]
struct Tally {
    cases: usize,
    worst: f64,
    tolerance: f64,
    failure: Option<String>,
}

impl Tally {
    fn tolerance(&mut self, tol: f64) {
        self.tolerance = tol;
    }

    /// Records |got − want| / scale against the current tolerance.
    fn compare(&mut self, got: f64, want: f64, scale: f64, what: impl FnOnce() -> String) {
        let deviation = if got == want { 0.0 } else { (got - want).abs() / scale };
        self.cases += 1;
        if !(deviation <= self.worst) {
            self.worst = deviation;
        }
        if !(deviation <= self.tolerance) && self.failure.is_none() {
            self.failure = Some(format!("{}: got {got:e}, expected {want:e}", what()));
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn fail(&mut self, message: String) {
        if self.failure.is_none() {
            self.failure = Some(message);
        }
    }
}

fn h(twice: i64) -> HalfInteger {
    HalfInteger::from_twice(twice)
}

/// A deliberately non-atomic parameter set.
fn generic_params(s: HalfInteger) -> Result<PhysicalParams> {
    PhysicalParams::new(1.1, 0.9, 1.7, 1.3, s)
}

/// Shells of s with n ≤ max_n.
fn shells(s: HalfInteger, max_n: u32) -> Vec<HalfInteger> {
    let mut out = Vec::new();
    let mut n = s.abs() + 1;
    while n <= max_n as i64 {
        out.push(n);
        n = n + 1;
    }
    out
}

fn monopoles(max_twice: i64) -> impl Iterator<Item = HalfInteger> {
    (-max_twice..=max_twice).map(h)
}

fn quadrature_monomials(_: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-10);
    for order in 1..=40usize {
        let lag = cached_rule(RuleKind::Laguerre, order)?;
        let leg = cached_rule(RuleKind::Legendre, order)?;
        for k in 0..(2 * order) as i32 {
            let exact = ln_factorial(k as u64).exp();
            t.compare(lag.integrate_weighted(|x| x.powi(k)), exact, exact, || format!("Laguerre N={order} k={k}"));
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            t.compare(leg.integrate_weighted(|x| x.powi(k)), exact, exact.max(1.0), || {
                format!("Legendre N={order} k={k}")
            });
        }
    }
    Ok(())
}

fn jacobi_identities(_: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-12);
    let mut state = 0x2545_F491_4F6C_DD1Du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    };
    for dim in 1..=24usize {
        let mut a = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            for j in 0..=i {
                let x = next();
                a[i][j] = x;
                a[j][i] = x;
            }
        }
        let values = jacobi_eigenvalues(&a)?;
        let norm = frobenius_norm(&a);
        let trace: f64 = (0..dim).map(|i| a[i][i]).sum();
        t.compare(values.iter().sum(), trace, norm, || format!("trace, dim {dim}"));
        t.compare(values.iter().map(|x| x * x).sum(), norm * norm, norm * norm, || format!("Frobenius, dim {dim}"));
    }
    Ok(())
}

fn wigner_orthogonality(_: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-10);
    let rule = cached_rule(RuleKind::Legendre, 30)?;
    for tm in -9..=9i64 {
        for ts in -9..=9i64 {
            if (tm - ts) % 2 != 0 {
                continue;
            }
            let (m, s) = (h(tm), h(ts));
            let lowest = m.abs().max(s.abs());
            let js: Vec<HalfInteger> = (0..).map(|k| lowest + k).take_while(|j| *j <= h(9)).collect();
            for &j1 in &js {
                for &j2 in &js {
                    let mut err = None;
                    let integral = rule.integrate_weighted(|c| {
                        let theta = c.clamp(-1.0, 1.0).acos();
                        match (wigner_d(j1, m, s, theta), wigner_d(j2, m, s, theta)) {
                            (Ok(a), Ok(b)) => a * b,
                            (Err(e), _) | (_, Err(e)) => {
                                err = Some(e);
                                0.0
                            }
                        }
                    });
                    if let Some(e) = err {
                        return Err(e);
                    }
                    let want = if j1 == j2 { 2.0 / (2.0 * j1.value() + 1.0) } else { 0.0 };
                    t.compare(integral, want, 1.0, || format!("j1={j1} j2={j2} m={m} s={s}"));
                }
            }
        }
    }
    Ok(())
}

fn integral_moments(_: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-9);
    let params = generic_params(HalfInteger::ZERO)?;
    let rule = cached_rule(RuleKind::Laguerre, 48)?;
    for twice_n in 2..=24 {
        let n = h(twice_n);
        let length = params.bohr_radius() * n.value();
        for p in 0..=10u32 {
            for q in -10..=10i64 {
                let zeroth = length * rule.integrate_weighted(|x| phi_pq_reduced(p, q, x).powi(2));
                let second = length.powi(3) * rule.integrate_weighted(|x| x * x * phi_pq_reduced(p, q, x).powi(2));
                let i = integral_i(p, q, n, &params);
                let ii = integral_ii(p, q, n, &params);
                t.compare(zeroth, i, i, || format!("I p={p} q={q} n={n}"));
                t.compare(second, ii, ii, || format!("second moment p={p} q={q} n={n}"));
            }
        }
    }
    Ok(())
}

fn state_cardinality(_: &VerifyOptions, t: &mut Tally) -> Result<()> {
    for s in monopoles(6) {
        for k in 1..=8 {
            let n = s.abs() + k;
            let want = (n.twice().pow(2) - s.twice().pow(2)) / 4;
            let sph = enumerate_shell_spherical(n, s)?.len() as i64;
            let par = enumerate_shell_parabolic(n, s)?.len() as i64;
            t.require(sph == want && par == want, || format!("n={n} s={s}: {sph}, {par} vs {want}"));
        }
    }
    Ok(())
}

fn spherical_orthonormality(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-8);
    for s in monopoles(3) {
        let params = generic_params(s)?;
        let states: Vec<SphericalState> = shells(s, o.max_n)
            .into_iter()
            .map(|n| enumerate_shell_spherical(n, s))
            .collect::<Result<Vec<_>>>()?
            .concat();
        let order = o.quad_order.max(2 * o.max_n as usize + 10);
        for a in &states {
            for b in states.iter().filter(|b| b.m() == a.m()) {
                let want = if a == b { 1.0 } else { 0.0 };
                t.compare(spherical_overlap(a, b, &params, order)?, want, 1.0, || format!("<{a}|{b}>"));
            }
        }
    }
    Ok(())
}

fn parabolic_orthonormality(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-8);
    for s in monopoles(3) {
        let params = generic_params(s)?;
        for n in shells(s, o.max_n) {
            let shell = enumerate_shell_parabolic(n, s)?;
            for a in &shell {
                for b in shell.iter().filter(|b| b.m() == a.m()) {
                    let want = if a == b { 1.0 } else { 0.0 };
                    t.compare(parabolic_overlap(a, b, &params, o.quad_order)?, want, 1.0, || format!("<{a}|{b}>"));
                }
            }
        }
    }
    Ok(())
}

/// Spherical lowest-shell states follow the upper signs for s > 0, parabolic
/// ones the lower signs: the two bases are mirror images of each other.
fn ground_state(_: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-10);
    let grid: Vec<(f64, f64)> = [0.3, 1.0, 2.6]
        .iter()
        .flat_map(|&r| [0.4, 1.2, 1.9, 2.7].map(|th| (r, th)))
        .collect();
    for s in monopoles(6) {
        let params = generic_params(s)?;
        let n = s.abs() + 1;
        let mut m = -s.abs();
        while m <= s.abs() {
            let sph = SphericalOrbital::new(SphericalState::new(n, s.abs(), m, s)?, &params)?;
            let par = ParabolicOrbital::new(crate::ParabolicState::in_shell(n, 0, 0, m, s)?, &params)?;
            let spherical_upper = !s.is_negative();
            let mut ratios = [Vec::new(), Vec::new()];
            for &(r, theta) in &grid {
                let phi = 0.7;
                let point = ParabolicPoint::from_spherical(r, theta, phi);
                let values = [sph.eval(r, theta, phi)?, par.eval(&point)];
                for (k, upper) in [spherical_upper, !spherical_upper].into_iter().enumerate() {
                    let form = ground_state_form(m, s, upper, r, theta, phi, &params)?;
                    ratios[k].push(values[k] / form);
                }
            }
            for (label, list) in ["spherical", "parabolic"].iter().zip(&ratios) {
                let first = list[0];
                for z in list {
                    t.compare((z - first).norm(), 0.0, first.norm(), || format!("{label} m={m} s={s}"));
                }
            }
            m = m + 1;
        }
    }
    Ok(())
}

fn stark_hydrogen(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-6);
    let params = PhysicalParams::atomic(HalfInteger::ZERO);
    let field = FieldConfig::new(1.0)?;
    let n = h(4);
    let mut closed: Vec<f64> = enumerate_shell_parabolic(n, HalfInteger::ZERO)?
        .iter()
        .map(|st| shift_closed_form(st, &field, &params))
        .collect::<Result<_>>()?;
    closed.sort_by(f64::total_cmp);
    let oracle = crate::oracle::oracle_shell_spectrum(n, HalfInteger::ZERO, &field, &params, o.quad_order)?;
    for (k, want) in [-3.0, 0.0, 0.0, 3.0].into_iter().enumerate() {
        t.compare(closed[k], want, 3.0, || format!("closed form #{k}"));
        t.compare(oracle[k], want, 3.0, || format!("oracle #{k}"));
    }
    Ok(())
}

fn formula_identity(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-12);
    let field = FieldConfig::new(0.37)?;
    for s in monopoles(6) {
        let params = generic_params(s)?;
        let quantum = shift_quantum(&field, &params);
        for n in shells(s, o.max_n.max(8)) {
            for st in enumerate_shell_parabolic(n, s)? {
                let closed = shift_closed_form(&st, &field, &params)?;
                let integral = shift_integral_form(&st, &field, &params)?;
                t.compare(integral, closed, closed.abs().max(quantum), || format!("{st}"));
            }
        }
    }
    Ok(())
}

fn degeneracy_removal(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    for s in monopoles(6).filter(|s| *s != 0) {
        for n in shells(s, o.max_n.max(6)) {
            let shell = enumerate_shell_parabolic(n, s)?;
            for a in &shell {
                for b in &shell {
                    if a.n1() == b.n1() && a.n2() == b.n2() && a.m() != b.m() {
                        t.require(shift_sixths(a) != shift_sixths(b), || format!("{a} and {b} coincide"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn splitting(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    for s in monopoles(4) {
        for n in shells(s, o.max_n.max(6)) {
            let sixths: Vec<i64> = enumerate_shell_parabolic(n, s)?.iter().map(shift_sixths).collect();
            let spread = sixths.iter().max().unwrap_or(&0) - sixths.iter().min().unwrap_or(&0);
            let claimed = shell_splitting_sixths(n, s)?;
            t.require(spread == claimed, || format!("n={n} s={s}: spread {spread}/6, formula {claimed}/6"));
        }
    }
    Ok(())
}

fn dipole(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-12);
    let (zero, one) = (FieldConfig::new(0.0)?, FieldConfig::new(1.0)?);
    for s in monopoles(6) {
        let params = generic_params(s)?;
        for n in shells(s, o.max_n) {
            for st in enumerate_shell_parabolic(n, s)? {
                let d = mean_dipole(&st, &params)?;
                let slope = shift_closed_form(&st, &one, &params)? - shift_closed_form(&st, &zero, &params)?;
                t.require(d == -slope, || format!("{st}: dipole {d:e} vs -slope {:e}", -slope));
                let scale = d.abs().max(shift_quantum(&one, &params));
                t.compare(dipole_operator_expectation(&st, &params)?, d, scale, || format!("{st}"));
            }
        }
    }
    Ok(())
}

fn oracle_monopoles() -> impl Iterator<Item = HalfInteger> {
    (0..=3).map(h)
}

fn oracle_hermiticity(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-12);
    let field = FieldConfig::new(1.0)?;
    for s in oracle_monopoles() {
        let params = generic_params(s)?;
        for n in shells(s, o.max_n) {
            let shell = enumerate_shell_parabolic(n, s)?;
            for a in &shell {
                for b in shell.iter().filter(|b| b.m() == a.m()) {
                    let ab = matrix_element_v(a, b, &field, &params, o.quad_order)?;
                    let ba = matrix_element_v(b, a, &field, &params, o.quad_order)?;
                    t.compare(ab, ba, 1.0, || format!("<{a}|V|{b}>"));
                }
            }
        }
    }
    Ok(())
}

fn oracle_equivalence(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-6);
    let field = FieldConfig::new(1.0)?;
    for s in oracle_monopoles() {
        let params = generic_params(s)?;
        let quantum = shift_quantum(&field, &params);
        for n in shells(s, o.max_n) {
            for (m, values) in crate::oracle::oracle_shifts(n, s, &field, &params, o.quad_order)? {
                let mut closed: Vec<f64> = enumerate_shell_parabolic(n, s)?
                    .iter()
                    .filter(|st| st.m() == m)
                    .map(|st| shift_closed_form(st, &field, &params))
                    .collect::<Result<_>>()?;
                closed.sort_by(f64::total_cmp);
                t.require(closed.len() == values.len(), || format!("n={n} s={s} m={m}: sector sizes differ"));
                for (got, want) in values.iter().zip(&closed) {
                    t.compare(*got, *want, want.abs().max(quantum), || format!("n={n} s={s} m={m}"));
                }
            }
        }
    }
    Ok(())
}

fn oracle_offdiagonal(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-9);
    let field = FieldConfig::new(1.0)?;
    for s in oracle_monopoles() {
        let params = generic_params(s)?;
        let unit = params.bohr_radius() * params.e_abs() * field.epsilon();
        for n in shells(s, o.max_n) {
            let worst = offdiagonal_report(n, s, &field, &params, o.quad_order)?;
            t.compare(worst, 0.0, unit, || format!("n={n} s={s}"));
        }
    }
    Ok(())
}

fn oracle_trace(o: &VerifyOptions, t: &mut Tally) -> Result<()> {
    t.tolerance(1e-8);
    let field = FieldConfig::new(1.0)?;
    for s in oracle_monopoles() {
        let params = generic_params(s)?;
        let quantum = shift_quantum(&field, &params);
        for n in shells(s, o.max_n) {
            let mut trace = 0.0;
            let mut m = -(n - 1);
            while m < n {
                let block = build_subspace(n, s, m, &field, &params, o.quad_order)?;
                trace += (0..block.dim()).map(|i| block.entries[i][i]).sum::<f64>();
                m = m + 1;
            }
            let closed: i64 = enumerate_shell_parabolic(n, s)?.iter().map(shift_sixths).sum();
            let closed = closed as f64 * quantum;
            t.compare(trace, closed, closed.abs().max(quantum), || format!("n={n} s={s}"));
        }
    }
    Ok(())
}
