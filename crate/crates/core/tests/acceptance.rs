//! Acceptance criteria, one PASS/FAIL line each. Run with
//! `cargo test -p dyonstark-core --test acceptance`.

use std::process::ExitCode;
use std::time::Instant;

use dyonstark::oracle::{frobenius_norm, jacobi_eigenvalues, oracle_shifts, offdiagonal_report};
use dyonstark::quadrature::{gauss_laguerre, gauss_legendre};
use dyonstark::specfun::{ln_factorial, wigner_d};
use dyonstark::stark::{
    dipole_operator_expectation, integral_i, integral_ii, mean_dipole, shell_splitting, shift_closed_form,
    shift_integral_form, shift_quantum, shift_sixths,
};
use dyonstark::states::{
    enumerate_shell_parabolic, enumerate_shell_spherical, ground_state_form, parabolic_overlap, phi_pq,
    spherical_overlap, ParabolicOrbital, SphericalOrbital,
};
use dyonstark::{FieldConfig, HalfInteger, ParabolicPoint, ParabolicState, PhysicalParams, SphericalState};

type Outcome = Result<String, String>;

fn h(twice: i64) -> HalfInteger {
    HalfInteger::from_twice(twice)
}

fn shells(s: HalfInteger, max_n: i64) -> Vec<HalfInteger> {
    (1..).map(|k| s.abs() + k).take_while(|n| *n <= max_n).collect()
}

fn params(s: HalfInteger) -> PhysicalParams {
    PhysicalParams::new(1.1, 0.9, 1.7, 1.3, s).unwrap()
}

/// Worst relative deviation seen so far, failing past `tol`.
struct Worst {
    tol: f64,
    value: f64,
}

impl Worst {
    fn new(tol: f64) -> Self {
        Worst { tol, value: 0.0 }
    }

    fn check(&mut self, got: f64, want: f64, scale: f64, what: impl FnOnce() -> String) -> Result<(), String> {
        let dev = (got - want).abs() / scale;
        self.value = self.value.max(dev);
        if dev <= self.tol {
            Ok(())
        } else {
            Err(format!("{}: got {got:e}, want {want:e} (dev {dev:e} > {:e})", what(), self.tol))
        }
    }

    fn report(&self) -> String {
        format!("worst {:.2e} <= {:.0e}", self.value, self.tol)
    }
}

fn hydrogen_regression() -> Outcome {
    let p = PhysicalParams::atomic(HalfInteger::ZERO);
    let field = FieldConfig::new(1.0).unwrap();
    let unit = p.bohr_radius() * p.e_abs() * field.epsilon();
    let want = [-3.0, 0.0, 0.0, 3.0];
    let mut closed: Vec<f64> = enumerate_shell_parabolic(h(4), h(0))
        .unwrap()
        .iter()
        .map(|st| shift_closed_form(st, &field, &p).unwrap() / unit)
        .collect();
    closed.sort_by(f64::total_cmp);
    let mut oracle: Vec<f64> = oracle_shifts(h(4), h(0), &field, &p, 48)
        .map_err(|e| e.to_string())?
        .into_iter()
        .flat_map(|(_, v)| v)
        .map(|x| x / unit)
        .collect();
    oracle.sort_by(f64::total_cmp);
    let mut analytic = Worst::new(1e-12);
    let mut numeric = Worst::new(1e-6);
    for k in 0..4 {
        analytic.check(closed[k], want[k], 3.0, || format!("closed form #{k}"))?;
        numeric.check(oracle[k], want[k], 3.0, || format!("oracle #{k}"))?;
    }
    Ok(format!("closed {:?}, analytic {}, oracle {}", closed, analytic.report(), numeric.report()))
}

fn integral_results() -> Outcome {
    let p = PhysicalParams::with_coupling(0.7, HalfInteger::ZERO).unwrap();
    let rule = gauss_laguerre(60).unwrap();
    let mut worst = Worst::new(1e-9);
    let mut count = 0;
    for twice_n in 2..=24 {
        let n = h(twice_n);
        let scale = p.bohr_radius() * n.value();
        for pp in 0..=10u32 {
            for q in -10..=10i64 {
                let i = rule
                    .integrate_halfline(|x| phi_pq(pp, q, x, n, &p).unwrap().powi(2), scale)
                    .unwrap();
                let ii = rule
                    .integrate_halfline(|x| x * x * phi_pq(pp, q, x, n, &p).unwrap().powi(2), scale)
                    .unwrap();
                let (i_want, ii_want) = (integral_i(pp, q, n, &p), integral_ii(pp, q, n, &p));
                worst.check(i, i_want, i_want, || format!("I p={pp} q={q} n={n}"))?;
                worst.check(ii, ii_want, ii_want, || format!("second moment p={pp} q={q} n={n}"))?;
                count += 2;
            }
        }
    }
    Ok(format!("{count} integrals, {}", worst.report()))
}

fn formula_identity() -> Outcome {
    let field = FieldConfig::new(0.37).unwrap();
    let mut worst = Worst::new(1e-12);
    let mut count = 0;
    for ts in -6..=6 {
        let s = h(ts);
        let p = params(s);
        let quantum = shift_quantum(&field, &p);
        for n in shells(s, 8) {
            for st in enumerate_shell_parabolic(n, s).unwrap() {
                let closed = shift_closed_form(&st, &field, &p).unwrap();
                let integral = shift_integral_form(&st, &field, &p).unwrap();
                worst.check(integral, closed, closed.abs().max(quantum), || format!("{st}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} states, {}", worst.report()))
}

fn oracle_equivalence() -> Outcome {
    let field = FieldConfig::new(1.0).unwrap();
    let mut worst = Worst::new(1e-6);
    let mut off: f64 = 0.0;
    for ts in 0..=3 {
        let s = h(ts);
        let p = params(s);
        let quantum = shift_quantum(&field, &p);
        let unit = p.bohr_radius() * p.e_abs() * field.epsilon();
        for n in shells(s, 4) {
            for (m, values) in oracle_shifts(n, s, &field, &p, 48).map_err(|e| e.to_string())? {
                let mut closed: Vec<f64> = enumerate_shell_parabolic(n, s)
                    .unwrap()
                    .iter()
                    .filter(|st| st.m() == m)
                    .map(|st| shift_closed_form(st, &field, &p).unwrap())
                    .collect();
                closed.sort_by(f64::total_cmp);
                if closed.len() != values.len() {
                    return Err(format!("n={n} s={s} m={m}: sector sizes differ"));
                }
                for (got, want) in values.iter().zip(&closed) {
                    worst.check(*got, *want, want.abs().max(quantum), || format!("n={n} s={s} m={m}"))?;
                }
            }
            let report = offdiagonal_report(n, s, &field, &p, 48).map_err(|e| e.to_string())? / unit;
            off = off.max(report);
            if report > 1e-9 {
                return Err(format!("n={n} s={s}: off-diagonal {report:e} a|e|eps"));
            }
        }
    }
    Ok(format!("eigenvalues {}, off-diagonal max {off:.2e} a|e|eps <= 1e-9", worst.report()))
}

fn degeneracy_removal() -> Outcome {
    let mut pairs = 0;
    for ts in (-6..=6).filter(|t| *t != 0) {
        let s = h(ts);
        for n in shells(s, 6) {
            let shell = enumerate_shell_parabolic(n, s).unwrap();
            for (i, a) in shell.iter().enumerate() {
                for b in &shell[i + 1..] {
                    if (a.n1(), a.n2()) == (b.n1(), b.n2()) {
                        pairs += 1;
                        if shift_sixths(a) == shift_sixths(b) {
                            return Err(format!("{a} and {b} share a shift"));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} same-(n1,n2) pairs, all distinct"))
}

fn splitting() -> Outcome {
    let field = FieldConfig::new(1.0).unwrap();
    let mut shells_checked = 0;
    for ts in -4..=4 {
        let s = h(ts);
        let p = PhysicalParams::atomic(s);
        for n in shells(s, 6) {
            let shifts: Vec<f64> = enumerate_shell_parabolic(n, s)
                .unwrap()
                .iter()
                .map(|st| shift_closed_form(st, &field, &p).unwrap())
                .collect();
            let max = shifts.iter().cloned().fold(f64::MIN, f64::max);
            let min = shifts.iter().cloned().fold(f64::MAX, f64::min);
            let claimed = shell_splitting(n, s, &field, &p).unwrap();
            if claimed != max - min {
                return Err(format!("n={n} s={s}: splitting {claimed} vs max-min {}", max - min));
            }
            shells_checked += 1;
        }
    }
    Ok(format!("{shells_checked} shells, exact"))
}

fn dipole_consistency() -> Outcome {
    let (zero, one) = (FieldConfig::new(0.0).unwrap(), FieldConfig::new(1.0).unwrap());
    let mut worst = Worst::new(1e-12);
    let mut count = 0;
    for ts in -6..=6 {
        let s = h(ts);
        let p = params(s);
        let quantum = shift_quantum(&one, &p);
        for n in shells(s, 4) {
            for st in enumerate_shell_parabolic(n, s).unwrap() {
                let d = mean_dipole(&st, &p).unwrap();
                let slope = shift_closed_form(&st, &one, &p).unwrap() - shift_closed_form(&st, &zero, &p).unwrap();
                if d != -slope {
                    return Err(format!("{st}: dipole {d:e} vs -dE/deps {:e}", -slope));
                }
                let op = dipole_operator_expectation(&st, &p).unwrap();
                worst.check(op, d, d.abs().max(quantum), || format!("{st}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} states, derivative exact, operator {}", worst.report()))
}

fn bookkeeping() -> Outcome {
    let mut count = 0;
    for ts in -6..=6 {
        let s = h(ts);
        for n in (1..=8).map(|k| s.abs() + k) {
            let want = ((n.twice().pow(2) - s.twice().pow(2)) / 4) as usize;
            let sph = enumerate_shell_spherical(n, s).unwrap().len();
            let par = enumerate_shell_parabolic(n, s).unwrap().len();
            if sph != want || par != want {
                return Err(format!("n={n} s={s}: spherical {sph}, parabolic {par}, want {want}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} shells, exact"))
}

fn wavefunction_suites() -> Outcome {
    let mut overlaps = Worst::new(1e-8);
    let mut ground = Worst::new(1e-10);
    for ts in -3..=3 {
        let s = h(ts);
        let p = params(s);
        let mut spherical = Vec::new();
        for n in shells(s, 4) {
            spherical.extend(enumerate_shell_spherical(n, s).unwrap());
            let shell = enumerate_shell_parabolic(n, s).unwrap();
            for a in &shell {
                for b in shell.iter().filter(|b| b.m() == a.m()) {
                    let want = if a == b { 1.0 } else { 0.0 };
                    overlaps.check(parabolic_overlap(a, b, &p, 48).unwrap(), want, 1.0, || format!("<{a}|{b}>"))?;
                }
            }
        }
        for a in &spherical {
            for b in &spherical {
                let want = if a == b { 1.0 } else { 0.0 };
                overlaps.check(spherical_overlap(a, b, &p, 48).unwrap(), want, 1.0, || format!("<{a}|{b}>"))?;
            }
        }

        // lowest shell: spherical follows the upper signs for s ≥ 0, parabolic the lower
        let n = s.abs() + 1;
        let mut m = -s.abs();
        while m <= s.abs() {
            let sph = SphericalOrbital::new(SphericalState::new(n, s.abs(), m, s).unwrap(), &p).unwrap();
            let par = ParabolicOrbital::new(ParabolicState::in_shell(n, 0, 0, m, s).unwrap(), &p).unwrap();
            let upper = !s.is_negative();
            let mut ratios: [Vec<f64>; 2] = [Vec::new(), Vec::new()];
            for r in [0.2, 0.9, 2.3, 4.0] {
                for theta in [0.2, 0.8, 1.5, 2.2, 2.9] {
                    let phi = 1.3;
                    let point = ParabolicPoint::from_spherical(r, theta, phi);
                    let a = sph.eval(r, theta, phi).unwrap() / ground_state_form(m, s, upper, r, theta, phi, &p).unwrap();
                    let b = par.eval(&point) / ground_state_form(m, s, !upper, r, theta, phi, &p).unwrap();
                    if a.im.abs() > 1e-12 * a.norm() || b.im.abs() > 1e-12 * b.norm() {
                        return Err(format!("m={m} s={s}: ratio not real"));
                    }
                    ratios[0].push(a.re);
                    ratios[1].push(b.re);
                }
            }
            for list in &ratios {
                for x in list {
                    ground.check(*x, list[0], list[0].abs(), || format!("ground state m={m} s={s}"))?;
                }
            }
            m = m + 1;
        }
    }
    Ok(format!("overlaps {}, ground-state ratio {}", overlaps.report(), ground.report()))
}

fn numerical_kernels() -> Outcome {
    let mut gauss = Worst::new(1e-10);
    for order in 1..=40usize {
        let lag = gauss_laguerre(order).unwrap();
        let leg = gauss_legendre(order).unwrap();
        for k in 0..(2 * order) as i32 {
            let exact = ln_factorial(k as u64).exp();
            gauss.check(lag.integrate_weighted(|x| x.powi(k)), exact, exact, || format!("Laguerre N={order} k={k}"))?;
            let exact = if k % 2 == 0 { 2.0 / (k as f64 + 1.0) } else { 0.0 };
            gauss.check(leg.integrate_weighted(|x| x.powi(k)), exact, exact.max(1.0), || {
                format!("Legendre N={order} k={k}")
            })?;
        }
    }

    let mut jacobi = Worst::new(1e-12);
    let mut seed = 0x853C_49E6_748F_EA9Bu64;
    let mut next = || {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((seed >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
    };
    for dim in 1..=30usize {
        let mut a = vec![vec![0.0; dim]; dim];
        for i in 0..dim {
            for j in 0..=i {
                let x = next();
                a[i][j] = x;
                a[j][i] = x;
            }
        }
        let values = jacobi_eigenvalues(&a).unwrap();
        let norm = frobenius_norm(&a);
        let trace: f64 = (0..dim).map(|i| a[i][i]).sum();
        jacobi.check(values.iter().sum(), trace, norm, || format!("trace dim {dim}"))?;
        jacobi.check(values.iter().map(|x| x * x).sum(), norm * norm, norm * norm, || format!("Frobenius dim {dim}"))?;
    }

    let mut wigner = Worst::new(1e-10);
    let rule = gauss_legendre(30).unwrap();
    for tm in -9..=9i64 {
        for ts in (-9..=9i64).filter(|ts| (tm - ts) % 2 == 0) {
            let (m, s) = (h(tm), h(ts));
            let js: Vec<HalfInteger> = (0..).map(|k| m.abs().max(s.abs()) + k).take_while(|j| *j <= h(9)).collect();
            for &j1 in &js {
                for &j2 in &js {
                    let got = rule.integrate_weighted(|c| {
                        let theta = c.clamp(-1.0, 1.0).acos();
                        wigner_d(j1, m, s, theta).unwrap() * wigner_d(j2, m, s, theta).unwrap()
                    });
                    let want = if j1 == j2 { 2.0 / (2.0 * j1.value() + 1.0) } else { 0.0 };
                    wigner.check(got, want, 1.0, || format!("d^{j1}, d^{j2} m={m} s={s}"))?;
                }
            }
        }
    }
    Ok(format!("Gauss {}, Jacobi {}, Wigner {}", gauss.report(), jacobi.report(), wigner.report()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("hydrogen regression", hydrogen_regression),
        ("integral results", integral_results),
        ("formula identity", formula_identity),
        ("oracle equivalence", oracle_equivalence),
        ("degeneracy removal", degeneracy_removal),
        ("splitting", splitting),
        ("dipole consistency", dipole_consistency),
        ("state-space bookkeeping", bookkeeping),
        ("wavefunction suites", wavefunction_suites),
        ("numerical kernels", numerical_kernels),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {elapsed:.2}s)", k + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({reason}; {elapsed:.2}s)", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
