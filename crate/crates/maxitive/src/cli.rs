//! Command-line front end: JSON reports on stdout, human-readable summary
//! on stderr, exit codes for CI (0 = verified / computed, 1 = a checked
//! property failed, 2 = input or usage error).

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde_json::json;

use crate::capacity::{enumerate_capacities, unit_grid, Capacity, FnVec};
use crate::characterize::verify_characterization;
use crate::comonotone::{level_raise, monotone_chain, squeeze_witness};
use crate::extension::{counterexample_report, extend_one_step, GenSubspace};
use crate::functional::{check_axioms, AxiomKind, CheckConfig};
use crate::integral::integral_functional;
use crate::report::{approx_fraction, CheckReport};
use crate::tnorm::{check_tnorm_axioms, TNorm};

#[derive(Parser)]
#[command(
    name = "maxitive",
    version,
    about = "Capacities, t-normed integrals and comonotone-maxitivity checks on finite point spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the t-normed integral of a function against a capacity
    Integrate(IntegrateArgs),
    /// Validate a capacity table (boundary values and monotonicity)
    VerifyCapacity(VerifyCapacityArgs),
    /// Check the t-norm axioms of a built-in operation on a grid
    VerifyTnorm(VerifyTnormArgs),
    /// Check axioms of the integral functional of a capacity
    Axioms(AxiomsArgs),
    /// Interpolate a dominated pair by a chain of comonotone steps
    Chain(ChainArgs),
    /// Raise a function above a level, fixing it below a threshold
    LevelRaise(LevelRaiseArgs),
    /// Build the function pinched between two others by lattice identities
    Witness(WitnessArgs),
    /// Round-trip every capacity of a given size through its integral
    Roundtrip(RoundtripArgs),
    /// Verify the monotone, homogeneous functional that is not comonotone
    /// maxitive
    Counterexample(CounterexampleArgs),
    /// Adjoin a function to a generated subspace
    Extend(ExtendArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TNormName {
    Minimum,
    Product,
    Lukasiewicz,
}

impl TNormName {
    fn op(self) -> TNorm {
        match self {
            TNormName::Minimum => TNorm::Minimum,
            TNormName::Product => TNorm::Product,
            TNormName::Lukasiewicz => TNorm::Lukasiewicz,
        }
    }
}

#[derive(Args)]
struct IntegrateArgs {
    /// Capacity table (JSON)
    #[arg(long)]
    capacity: PathBuf,
    /// Function vector (JSON)
    #[arg(long)]
    function: PathBuf,
    #[arg(long, value_enum)]
    tnorm: TNormName,
}

#[derive(Args)]
struct VerifyCapacityArgs {
    #[arg(long)]
    capacity: PathBuf,
    #[arg(long, default_value_t = crate::DEFAULT_TOL)]
    tolerance: f64,
}

#[derive(Args)]
struct VerifyTnormArgs {
    #[arg(long, value_enum)]
    tnorm: TNormName,
    /// Denominator of the evaluation grid
    #[arg(long, default_value_t = 20)]
    grid: u32,
    #[arg(long, default_value_t = crate::DEFAULT_TOL)]
    tolerance: f64,
}

#[derive(Args)]
struct AxiomsArgs {
    #[arg(long)]
    capacity: PathBuf,
    #[arg(long, value_enum)]
    tnorm: TNormName,
    /// Comma-separated axioms to check: normed, monotone,
    /// comonotone-maxitive, star, vee, wedge, star-char
    #[arg(long, default_value = "normed,monotone,comonotone-maxitive,star,star-char")]
    axioms: String,
    #[arg(long, default_value_t = 20)]
    grid: u32,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = crate::DEFAULT_TOL)]
    tolerance: f64,
}

#[derive(Args)]
struct ChainArgs {
    /// The smaller function (JSON)
    #[arg(long)]
    psi: PathBuf,
    /// The larger function (JSON)
    #[arg(long)]
    phi: PathBuf,
}

#[derive(Args)]
struct LevelRaiseArgs {
    #[arg(long)]
    phi: PathBuf,
    /// Values at or below this level stay fixed
    #[arg(long)]
    delta: f64,
    /// Values at or above this level are raised to 1
    #[arg(long)]
    xi: f64,
}

#[derive(Args)]
struct WitnessArgs {
    /// The larger function (JSON)
    #[arg(long)]
    phi: PathBuf,
    /// The smaller function (JSON)
    #[arg(long)]
    psi: PathBuf,
    /// Lower pinch threshold
    #[arg(long)]
    c: f64,
    /// Upper pinch threshold
    #[arg(long)]
    d: f64,
}

#[derive(Args)]
struct RoundtripArgs {
    /// Point count (enumeration is exhaustive, so n <= 4)
    #[arg(long)]
    n: usize,
    /// Denominator of the capacity value grid
    #[arg(long, default_value_t = 4)]
    grid: u32,
    #[arg(long, value_enum)]
    tnorm: TNormName,
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = crate::DEFAULT_TOL)]
    tolerance: f64,
}

#[derive(Args)]
struct CounterexampleArgs {
    /// Denominator of the exhaustive element grid
    #[arg(long, default_value_t = 60)]
    grid: u32,
}

#[derive(Args)]
struct ExtendArgs {
    /// Generated subspace (JSON: {"n":…, "generators":[[…]…], "m":[…]})
    #[arg(long)]
    subspace: PathBuf,
    /// Function vector to adjoin (JSON)
    #[arg(long)]
    function: PathBuf,
    /// Denominator of the extension search grid (refined once internally)
    #[arg(long, default_value_t = 60)]
    grid: u32,
}

/// Runs the CLI against explicit streams; `argv[0]` is the program name.
pub fn run_to_writer(
    argv: &[String],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}

/// Runs the CLI against the process streams.
pub fn run(argv: &[String]) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_to_writer(argv, &mut stdout.lock(), &mut stderr.lock())
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> anyhow::Result<T> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {what} from {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {what} from {}", path.display()))
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> anyhow::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn report_lines(err: &mut dyn Write, report: &CheckReport) -> anyhow::Result<()> {
    write!(err, "{report}")?;
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Integrate(a) => {
            let nu: Capacity = read_json(&a.capacity, "capacity")?;
            let f: FnVec = read_json(&a.function, "function")?;
            let op = a.tnorm.op();
            let i = integral_functional(&nu, &op)?;
            let value = i.eval(&f)?;
            emit(out, &json!({"command": "integrate", "tnorm": op.name(), "value": value}))?;
            writeln!(err, "{} integral = {}", op.name(), value)?;
            Ok(0)
        }
        Command::VerifyCapacity(a) => {
            let nu: Capacity = read_json(&a.capacity, "capacity")?;
            let report = nu.validate(a.tolerance);
            let ok = report.all_passed();
            emit(
                out,
                &json!({"command": "verify-capacity", "capacity": nu.summary(), "report": report, "all_passed": ok}),
            )?;
            report_lines(err, &report)?;
            Ok(i32::from(!ok))
        }
        Command::VerifyTnorm(a) => {
            let op = a.tnorm.op();
            let report = check_tnorm_axioms(&op, a.grid, a.tolerance)?;
            let ok = report.all_passed();
            emit(
                out,
                &json!({"command": "verify-tnorm", "tnorm": op.name(), "grid": a.grid, "report": report, "all_passed": ok}),
            )?;
            report_lines(err, &report)?;
            Ok(i32::from(!ok))
        }
        Command::Axioms(a) => {
            let nu: Capacity = read_json(&a.capacity, "capacity")?;
            let op = a.tnorm.op();
            let axioms = parse_axioms(&a.axioms, &op)?;
            let i = integral_functional(&nu, &op)?;
            let cfg = CheckConfig {
                samples: a.samples,
                grid_denom: a.grid,
                seed: a.seed,
                tolerance: a.tolerance,
                pool: None,
            };
            let report = check_axioms(&i, &axioms, &cfg);
            let ok = report.all_passed();
            emit(
                out,
                &json!({"command": "axioms", "functional": i.label(), "report": report, "all_passed": ok}),
            )?;
            report_lines(err, &report)?;
            Ok(i32::from(!ok))
        }
        Command::Chain(a) => {
            let psi: FnVec = read_json(&a.psi, "psi")?;
            let phi: FnVec = read_json(&a.phi, "phi")?;
            let links = monotone_chain(&psi, &phi)?;
            let raw: Vec<Vec<f64>> = links.iter().map(|f| f.values().to_vec()).collect();
            emit(out, &json!({"command": "chain", "links": raw}))?;
            writeln!(err, "chain of {} comonotone links", links.len())?;
            Ok(0)
        }
        Command::LevelRaise(a) => {
            let phi: FnVec = read_json(&a.phi, "phi")?;
            let psi = level_raise(&phi, a.delta, a.xi)?;
            emit(
                out,
                &json!({"command": "level-raise", "delta": a.delta, "xi": a.xi, "psi": psi.values()}),
            )?;
            writeln!(err, "psi = {psi}")?;
            Ok(0)
        }
        Command::Witness(a) => {
            let phi: FnVec = read_json(&a.phi, "phi")?;
            let psi: FnVec = read_json(&a.psi, "psi")?;
            let xi = squeeze_witness(&phi, &psi, a.c, a.d)?;
            emit(
                out,
                &json!({"command": "witness", "c": a.c, "d": a.d, "xi": xi.values()}),
            )?;
            writeln!(err, "xi = {xi}")?;
            Ok(0)
        }
        Command::Roundtrip(a) => {
            let op = a.tnorm.op();
            let grid = unit_grid(a.grid);
            let cfg = CheckConfig {
                samples: a.samples,
                grid_denom: a.grid,
                seed: a.seed,
                tolerance: a.tolerance,
                pool: None,
            };
            let mut total = 0usize;
            let mut failures = Vec::new();
            for nu in enumerate_capacities(a.n, &grid)? {
                total += 1;
                let report = verify_characterization(&nu, &op, &cfg)?;
                if !report.all_passed() && failures.len() < 5 {
                    failures.push(json!({"capacity": nu.summary(), "report": report}));
                }
            }
            let ok = failures.is_empty();
            emit(
                out,
                &json!({"command": "roundtrip", "n": a.n, "grid": a.grid, "tnorm": op.name(), "capacities": total, "all_passed": ok, "failures": failures}),
            )?;
            writeln!(
                err,
                "{total} capacities round-tripped through the {} integral: {}",
                op.name(),
                if ok { "all pass" } else { "FAILURES" }
            )?;
            Ok(i32::from(!ok))
        }
        Command::Counterexample(a) => {
            let r = counterexample_report(a.grid)?;
            emit(
                out,
                &json!({"command": "counterexample", "grid": a.grid, "result": r}),
            )?;
            report_lines(err, &r.report)?;
            writeln!(err, "{}", r.human_line())?;
            Ok(i32::from(!r.expected))
        }
        Command::Extend(a) => {
            let s: GenSubspace = read_json(&a.subspace, "subspace")?;
            let phi: FnVec = read_json(&a.function, "function")?;
            let outcome = extend_one_step(&s, &phi, a.grid)?;
            emit(out, &json!({"command": "extend", "result": outcome}))?;
            if outcome.added {
                writeln!(
                    err,
                    "extension value a = {} ({} generators now)",
                    approx_fraction(outcome.value),
                    outcome.subspace.generator_count()
                )?;
            } else {
                writeln!(
                    err,
                    "already realizable; value = {}",
                    approx_fraction(outcome.value)
                )?;
            }
            Ok(0)
        }
    }
}

fn parse_axioms(tokens: &str, op: &TNorm) -> anyhow::Result<Vec<AxiomKind>> {
    let mut axioms = Vec::new();
    for token in tokens.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        axioms.push(match token {
            "normed" => AxiomKind::Normed,
            "monotone" => AxiomKind::Monotone,
            "comonotone-maxitive" => AxiomKind::ComonotoneMaxitive,
            "star" => AxiomKind::StarHomogeneous(op.clone()),
            "vee" => AxiomKind::VeeHomogeneous,
            "wedge" => AxiomKind::WedgeHomogeneous,
            "star-char" => AxiomKind::StarCharHomogeneous(op.clone()),
            other => bail!("unknown axiom {other:?}"),
        });
    }
    if axioms.is_empty() {
        bail!("no axioms requested");
    }
    Ok(axioms)
}
