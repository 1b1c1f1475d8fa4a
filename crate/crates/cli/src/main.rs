mod args;
mod tables;

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use dyonstark::stark::{
    dipole_operator_expectation, fixed_m_splitting, mean_dipole, shell_splitting, shell_splitting_sixths, stark_table,
};
use dyonstark::states::{energy_level, enumerate_shell_parabolic, enumerate_shell_spherical, ParabolicOrbital, SphericalOrbital};
use dyonstark::verify::{check_ids, run_all, run_check, VerifyOptions};
use dyonstark::{FieldConfig, ParabolicPoint, ParabolicState, PhysicalParams, SphericalState};

use args::{Basis, Cli, Command, Format, PhysicsArgs};
use tables::{
    verify_csv, DipoleRecord, Document, Exact, SampleRecord, SplittingRecord, StateRecord, Table, VerifyReport,
};

const EXIT_VALIDATION: u8 = 2;
const EXIT_BREACH: u8 = 3;

enum Failure {
    Validation(String),
    Io(String),
}

impl From<dyonstark::Error> for Failure {
    fn from(e: dyonstark::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VALIDATION)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Command::Verify { max_n, quad_order, checks } = &cli.command {
        return verify(cli, *max_n, *quad_order, checks);
    }
    let table = build_table(&cli.command)?;
    let text = match cli.output.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json()?,
    };
    emit(cli, &text)?;
    Ok(0)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn physical(args: &PhysicsArgs) -> Result<PhysicalParams, Failure> {
    Ok(PhysicalParams::new(args.hbar, args.mu, args.gamma_c, args.charge, args.s)?)
}

fn build_table(command: &Command) -> Result<Table, Failure> {
    Ok(match command {
        Command::Spectrum { physics, max_n } => {
            let params = physical(physics)?;
            let s = physics.s;
            let mut records = Vec::new();
            let mut n = s.abs() + 1;
            if *max_n < n {
                return Err(Failure::Validation(format!("max-n {max_n} below the lowest shell |s|+1 = {n}")));
            }
            while n <= *max_n {
                let e0 = energy_level(n, &params)?;
                records.extend(enumerate_shell_spherical(n, s)?.into_iter().map(|st| StateRecord {
                    n,
                    s,
                    n1: None,
                    n2: None,
                    m: st.m(),
                    j: Some(st.j()),
                    e0: Exact(e0),
                    e1: None,
                    e1_sixths: None,
                    dipole_z: None,
                }));
                n = n + 1;
            }
            Table::States(Document { params, field: None, state: None, records })
        }
        Command::Shifts { physics, n, epsilon } => {
            let params = physical(physics)?;
            let field = FieldConfig::new(*epsilon)?;
            let records = stark_table(*n, physics.s, &field, &params)?
                .into_iter()
                .map(|r| StateRecord {
                    n: *n,
                    s: physics.s,
                    n1: Some(r.state.n1()),
                    n2: Some(r.state.n2()),
                    m: r.state.m(),
                    j: None,
                    e0: Exact(r.e0),
                    e1: Some(Exact(r.e1)),
                    e1_sixths: Some(r.e1_sixths),
                    dipole_z: Some(Exact(r.dipole_z)),
                })
                .collect();
            Table::States(Document { params, field: Some(field), state: None, records })
        }
        Command::Splitting { physics, n, epsilon } => {
            let params = physical(physics)?;
            let field = FieldConfig::new(*epsilon)?;
            let s = physics.s;
            let record = SplittingRecord {
                n: *n,
                s,
                shell_splitting: Exact(shell_splitting(*n, s, &field, &params)?),
                shell_splitting_sixths: shell_splitting_sixths(*n, s)?,
                fixed_m_splitting: Exact(fixed_m_splitting(*n, s, &field, &params)?),
            };
            Table::Splitting(Document { params, field: Some(field), state: None, records: vec![record] })
        }
        Command::Dipole { physics, n } => {
            let params = physical(physics)?;
            let records = enumerate_shell_parabolic(*n, physics.s)?
                .iter()
                .map(|st| {
                    Ok(DipoleRecord {
                        n: *n,
                        s: physics.s,
                        n1: st.n1(),
                        n2: st.n2(),
                        m: st.m(),
                        dipole_z: Exact(mean_dipole(st, &params)?),
                        dipole_operator: Exact(dipole_operator_expectation(st, &params)?),
                    })
                })
                .collect::<Result<Vec<_>, dyonstark::Error>>()?;
            Table::Dipole(Document { params, field: None, state: None, records })
        }
        Command::Wavefunction { physics, n, basis, j, n1, n2, m, theta, phi, r_max, points } => {
            let params = physical(physics)?;
            if !(*theta >= 0.0 && *theta <= std::f64::consts::PI) {
                return Err(Failure::Validation(format!("theta {theta} must lie in [0, π]")));
            }
            if !(*r_max > 0.0 && r_max.is_finite()) || *points < 2 {
                return Err(Failure::Validation("need r-max > 0 and at least 2 points".into()));
            }
            let radii: Vec<f64> =
                (0..*points).map(|k| params.bohr_radius() * r_max * k as f64 / (*points - 1) as f64).collect();
            let (label, values) = match basis {
                Basis::Spherical => {
                    let j = j.ok_or_else(|| Failure::Validation("spherical basis needs --j".into()))?;
                    let orbital = SphericalOrbital::new(SphericalState::new(*n, j, *m, physics.s)?, &params)?;
                    let values = radii.iter().map(|&r| orbital.eval(r, *theta, *phi)).collect::<Result<Vec<_>, _>>()?;
                    (orbital.state().to_string(), values)
                }
                Basis::Parabolic => {
                    let state = ParabolicState::in_shell(*n, *n1, *n2, *m, physics.s)?;
                    let orbital = ParabolicOrbital::new(state, &params)?;
                    let values = radii
                        .iter()
                        .map(|&r| orbital.eval(&ParabolicPoint::from_spherical(r, *theta, *phi)))
                        .collect();
                    (state.to_string(), values)
                }
            };
            let records = radii
                .iter()
                .zip(values)
                .map(|(&r, z)| SampleRecord {
                    r: Exact(r),
                    theta: Exact(*theta),
                    phi: Exact(*phi),
                    re: Exact(z.re),
                    im: Exact(z.im),
                })
                .collect();
            Table::Samples(Document { params, field: None, state: Some(label), records })
        }
        Command::Verify { .. } => unreachable!("handled by verify"),
    })
}

fn verify(cli: &Cli, max_n: u32, quad_order: usize, only: &[String]) -> Result<u8, Failure> {
    if quad_order == 0 || quad_order > dyonstark::quadrature::MAX_ORDER {
        return Err(Failure::Validation(format!(
            "quad-order must satisfy 1 ≤ quad-order ≤ {}",
            dyonstark::quadrature::MAX_ORDER
        )));
    }
    if max_n == 0 {
        return Err(Failure::Validation("max-n must be at least 1".into()));
    }
    let options = VerifyOptions { max_n, quad_order };
    let outcomes = if only.is_empty() {
        run_all(&options)
    } else {
        only.iter()
            .map(|id| {
                run_check(id, &options).ok_or_else(|| {
                    Failure::Validation(format!("unknown check `{id}` (known: {})", check_ids().join(", ")))
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let failures: Vec<&str> = outcomes.iter().filter(|c| !c.passed).map(|c| c.id).collect();
    let text = match cli.output.format {
        Format::Csv => verify_csv(&outcomes),
        Format::Json => {
            let report = VerifyReport { max_n, quad_order, checks: &outcomes, failures: failures.clone() };
            let mut text = serde_json::to_string_pretty(&report)?;
            text.push('\n');
            text
        }
    };
    emit(cli, &text)?;
    for c in outcomes.iter().filter(|c| !c.passed) {
        eprintln!("FAIL {}: {}", c.id, c.failure.as_deref().unwrap_or(""));
    }
    eprintln!("{} of {} checks passed", outcomes.len() - failures.len(), outcomes.len());
    Ok(if failures.is_empty() { 0 } else { EXIT_BREACH })
}
