mod args;

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use serde::Serialize;

use args::{Cli, Command, Common, FieldArgs, GreeneAldrichArgs, SpectrumArgs, SweepArgs, VerifyArgs, WavefunctionArgs};
use pdm_core::models::{energy, greene_aldrich_table};
use pdm_core::oracle::{node_count, residual_high_order, solve_energy, OracleConfig};
use pdm_core::sweeps::{find_crossings, sweep};
use pdm_core::{
    fields, BoundState, Error, ModelKind, PhysicalParams, QuantumState, RadialEquation, RadialGrid, SweepSpec,
};

const EXIT_INVALID: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

/// Failure of a command, mapped onto the exit status.
#[derive(Debug)]
enum Failure {
    Invalid(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    run(std::env::args_os())
}

fn run<I, T>(argv: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INVALID) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Spectrum(a) => spectrum(&a),
        Command::Wavefunction(a) => wavefunction(&a),
        Command::Field(a) => field(&a),
        Command::Sweep(a) => sweep_csv(&a),
        Command::Crossings(a) => crossings(&a),
        Command::Verify(a) => verify(&a),
        Command::GreeneAldrich(a) => greene_aldrich(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
    }
}

/// Resolves the parameter set and echoes it to stderr.
fn params(common: &Common) -> Result<PhysicalParams, Failure> {
    let text = match &common.params.config {
        Some(path) => Some(
            fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?,
        ),
        None => None,
    };
    let p = common.params.apply(text.as_deref())?;
    eprint!("# effective parameters\n{p}");
    Ok(p)
}

fn emit(out: Option<&Path>, data: &str) -> Outcome {
    match out {
        Some(path) => {
            fs::write(path, data).map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(data.as_bytes()).map_err(|e| Failure::Invalid(format!("stdout: {e}")))
        }
    }
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn states(nrho_max: u32, m_min: i32, m_max: i32) -> Result<Vec<QuantumState>, Failure> {
    if m_min > m_max {
        return Err(Failure::Invalid(format!("--m-min {m_min} exceeds --m-max {m_max}")));
    }
    Ok((0..=nrho_max).flat_map(|n| (m_min..=m_max).map(move |m| QuantumState::new(n, m))).collect())
}

fn spectrum(a: &SpectrumArgs) -> Outcome {
    let p = params(&a.common)?;
    let mut csv = String::from("n_rho,m,E\n");
    for state in states(a.nrho_max, a.m_min, a.m_max)? {
        match energy(a.model, &state, &p) {
            Ok(e) => writeln!(csv, "{},{},{}", state.n_rho, state.m, num(e)).unwrap(),
            Err(e @ (Error::NotBound { .. } | Error::NoRealBoundLevel { .. })) => eprintln!("# skipped {state}: {e}"),
            Err(e) => return Err(e.into()),
        }
    }
    emit(a.common.out.as_deref(), &csv)
}

fn wavefunction(a: &WavefunctionArgs) -> Outcome {
    let p = params(&a.common)?;
    let state = QuantumState::new(a.nrho, a.m);
    let bound = BoundState::new(a.model, state, &p, a.form)?;
    let grid = RadialGrid::uniform(a.rho_min, a.rho_max, a.points)?;
    let mut csv = String::from("rho,R,U\n");
    for rho in grid.nodes() {
        writeln!(csv, "{},{},{}", num(rho), num(bound.r(rho)?), num(bound.u(rho)?)).unwrap();
    }
    eprintln!("# E = {}", num(bound.energy()));
    emit(a.common.out.as_deref(), &csv)
}

fn field(a: &FieldArgs) -> Outcome {
    let p = params(&a.common)?;
    let grid = RadialGrid::uniform(a.rho_min, a.rho_max, a.points)?;
    let mut csv = String::from("rho,S,Bz,Aphi\n");
    for rho in grid.nodes() {
        let s = fields::sample(rho, &p)?;
        writeln!(csv, "{},{},{},{}", num(s.rho), num(s.s), num(s.b_z), num(s.a_phi)).unwrap();
    }
    emit(a.common.out.as_deref(), &csv)
}

fn sweep_spec(a: &SweepArgs) -> SweepSpec {
    SweepSpec { kind: a.model, states: a.states.clone(), param: a.param, range: (a.from, a.to), steps: a.steps }
}

fn sweep_csv(a: &SweepArgs) -> Outcome {
    let p = params(&a.common)?;
    let rows = sweep(&sweep_spec(a), &p)?;
    let mut csv = String::from("param,value,n_rho,m,E,valid\n");
    for r in rows {
        let e = r.energy.map(num).unwrap_or_default();
        writeln!(csv, "{},{},{},{},{},{}", a.param, num(r.value), r.state.n_rho, r.state.m, e, r.energy.is_some())
            .unwrap();
    }
    emit(a.common.out.as_deref(), &csv)
}

#[derive(Serialize)]
struct CrossingRecord {
    param: String,
    value: f64,
    #[serde(rename = "E")]
    energy: f64,
    state1: String,
    state2: String,
}

fn crossings(a: &SweepArgs) -> Outcome {
    let p = params(&a.common)?;
    sweep_spec(a).validate()?;
    let mut labels = a.states.clone();
    labels.sort();
    labels.dedup();
    let mut records = Vec::new();
    for (i, &s1) in labels.iter().enumerate() {
        for &s2 in &labels[i + 1..] {
            for c in find_crossings(a.model, s1, s2, a.param, (a.from, a.to), &p, a.steps)? {
                records.push(CrossingRecord {
                    param: a.param.to_string(),
                    value: c.param_value,
                    energy: c.energy,
                    state1: s1.to_string(),
                    state2: s2.to_string(),
                });
            }
        }
    }
    records.sort_by(|x, y| x.value.total_cmp(&y.value));
    let mut json = serde_json::to_string_pretty(&records).map_err(|e| Failure::Invalid(e.to_string()))?;
    json.push('\n');
    emit(a.common.out.as_deref(), &json)
}

fn verify(a: &VerifyArgs) -> Outcome {
    let p = params(&a.common)?;
    let equation =
        if a.model == ModelKind::C && !a.exact { RadialEquation::GreeneAldrich } else { RadialEquation::Exact };
    let mut csv = String::from("n_rho,m,E_closed,E_oracle,rel_diff,residual,nodes\n");
    let mut worst: Option<(QuantumState, f64)> = None;
    for state in states(a.nrho_max, a.m_min, a.m_max)? {
        let closed = match energy(a.model, &state, &p) {
            Ok(e) => e,
            Err(e @ (Error::NotBound { .. } | Error::NoRealBoundLevel { .. })) => {
                eprintln!("# skipped {state}: {e}");
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        let problem = pdm_core::models::RadialProblem::new(a.model, state.m, &p, equation)?;
        let oracle = solve_energy(&problem, state.n_rho, None, &OracleConfig::default())?.energy;
        let rel = (oracle - closed).abs() / closed.abs();
        let form = pdm_core::WaveForm::Xi;
        let bound = BoundState::new(a.model, state, &p, form)?;
        let reach = (30.0 + 4.0 * f64::from(state.n_rho)) / bound.decay_rate();
        let grid = RadialGrid::logarithmic(0.05f64.min(0.5 * reach), reach, 8001)?;
        let u = bound.sample_u(&grid)?;
        let res = residual_high_order(&u, |rho| problem.potential(rho, closed), problem.target());
        writeln!(
            csv,
            "{},{},{},{},{},{},{}",
            state.n_rho,
            state.m,
            num(closed),
            num(oracle),
            num(rel),
            num(res),
            node_count(&u)
        )
        .unwrap();
        if (rel.is_nan() || rel > a.tol) && worst.is_none_or(|(_, w)| rel > w) {
            worst = Some((state, rel));
        }
    }
    emit(a.common.out.as_deref(), &csv)?;
    match worst {
        Some((state, rel)) => Err(Failure::Mismatch(format!("state {state} differs by {rel:e} > {:e}", a.tol))),
        None => Ok(()),
    }
}

fn greene_aldrich(a: &GreeneAldrichArgs) -> Outcome {
    if a.steps < 2 || !(a.from > 0.0 && a.from < a.to) {
        return Err(Failure::Invalid("need 0 < --from < --to and --steps ≥ 2".into()));
    }
    let products: Vec<f64> = (0..a.steps).map(|i| a.from + (a.to - a.from) * i as f64 / (a.steps - 1) as f64).collect();
    let mut csv = String::from("delta_rho,rho,exact,approx,rel_err\n");
    for (x, row) in products.iter().zip(greene_aldrich_table(a.delta, &products)?) {
        writeln!(csv, "{},{},{},{},{}", num(*x), num(row.rho), num(row.exact), num(row.approx), num(row.rel_err))
            .unwrap();
    }
    emit(a.out.as_deref(), &csv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("pdm").chain(args.iter().copied()))
    }

    #[test]
    fn flags_override_config() {
        let cli = parse(&["spectrum", "--model", "a", "--mu", "-0.5", "--alpha", "0.3"]).unwrap();
        let Command::Spectrum(a) = cli.command else { panic!() };
        let p = a.common.params.apply(Some("mu = 2\nkz = 0.7\n")).unwrap();
        assert_eq!((p.mu, p.kz, p.alpha_ab), (-0.5, 0.7, 0.3));
    }

    #[test]
    fn unknown_flags_rejected() {
        assert!(parse(&["spectrum", "--model", "a", "--bogus", "1"]).is_err());
        assert!(parse(&["spectrum", "--model", "d"]).is_err());
        assert!(parse(&["sweep", "--model", "a", "--param", "kz", "--from", "0", "--to", "1"]).is_err());
    }

    #[test]
    fn state_lists_parse() {
        let cli = parse(&[
            "crossings",
            "--model",
            "a",
            "--param",
            "beta",
            "--from",
            "-1",
            "--to",
            "1",
            "--states",
            "0:1,2:-3",
        ])
        .unwrap();
        let Command::Crossings(a) = cli.command else { panic!() };
        assert_eq!(a.states, vec![QuantumState::new(0, 1), QuantumState::new(2, -3)]);
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(num(1.5), "1.5000000000000000e0");
        let x = 0.1 + 0.2;
        assert_eq!(num(x).parse::<f64>().unwrap(), x);
    }
}
