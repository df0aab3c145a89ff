//! The `nilcent` command line.

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use nilcent_core::invariants::{build_slice, monomial_invariant, restricted_invariants, InvariantSet};
use nilcent_core::linalg::fmt_q;
use nilcent_core::report::{Input, Output, Skipped};
use nilcent_core::suites::{info_checks, run_suite};
use nilcent_core::{groebner, AlgebraKind, CentralizerAlgebra, Check, Error, Ideal, Partition, Report, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_INADMISSIBLE: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "nilcent", version, about = "Exact checks on centralisers of nilpotent elements")]
struct Cli {
    /// Write the report to PATH instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindLetter {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Slice,
    Monomial,
    Both,
}

#[derive(clap::Args, Debug)]
struct Target {
    /// Cartan type: A (gl), B (odd so), C (sp), D (even so).
    #[arg(short = 'k', long = "kind", value_enum)]
    kind: KindLetter,
    /// Jordan block sizes, e.g. 4,2.
    #[arg(short = 'p', long = "partition")]
    partition: String,
    /// Report type A as gl_n rather than sl_n.
    #[arg(long)]
    gl: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension, centre and index of a centraliser.
    Info {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generators of the symmetric invariants.
    Invariants {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = MethodArg::Slice)]
        method: MethodArg,
        /// Only the invariant coming from this coefficient of the characteristic polynomial.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Groebner basis and dimension of an ideal, one generator per line.
    Groebner {
        #[arg(long)]
        ideal: PathBuf,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Result of a command before it is written out.
struct Outcome {
    code: i32,
    report: Report,
}

fn failure(code: i32, message: String) -> (i32, String) {
    (code, message)
}

fn resolve(target: &Target) -> Result<CentralizerAlgebra, (i32, String)> {
    let partition = Partition::parse(&target.partition).map_err(|e| failure(EXIT_USAGE, e.to_string()))?;
    let n = partition.n();
    let kind = match target.kind {
        KindLetter::A => AlgebraKind::Gl,
        KindLetter::C => AlgebraKind::Sp,
        KindLetter::B | KindLetter::D => {
            let want_odd = target.kind == KindLetter::B;
            if (n % 2 == 1) != want_odd {
                return Err(failure(
                    EXIT_INADMISSIBLE,
                    format!(
                        "type {:?} needs n {} but {partition} has n = {n}",
                        target.kind,
                        if want_odd { "odd" } else { "even" }
                    ),
                ));
            }
            AlgebraKind::So
        }
    };
    CentralizerAlgebra::new(partition, kind).map_err(|e| match e {
        Error::InadmissiblePartition { .. } => failure(EXIT_INADMISSIBLE, e.to_string()),
        e => failure(EXIT_USAGE, e.to_string()),
    })
}

fn target_input(command: &str, target: &Target) -> Input {
    Input {
        command: command.into(),
        kind: Some(format!("{:?}", target.kind)),
        partition: Some(target.partition.clone()),
        ..Input::default()
    }
}

fn ambient(target: &Target, alg: &CentralizerAlgebra) -> String {
    let n = alg.partition().n();
    match target.kind {
        KindLetter::A if target.gl => format!("gl_{n}"),
        KindLetter::A => format!("sl_{n}"),
        _ => format!("{}_{n}", alg.kind()),
    }
}

fn info(target: &Target, seed: u64) -> Result<Outcome, (i32, String)> {
    let alg = resolve(target)?;
    let mut report = Report::new(Input { seed: Some(seed), ..target_input("info", target) });
    report.outputs.push(Output { name: "ambient".into(), value: ambient(target, &alg) });
    report.outputs.push(Output { name: "rank".into(), value: alg.kind().rank(alg.partition().n()).to_string() });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    report.checks = info_checks(&alg, &mut rng);
    Ok(Outcome { code: verdict(&report, false), report })
}

fn invariants(target: &Target, method: MethodArg, ell: Option<usize>) -> Result<Outcome, (i32, String)> {
    let alg = resolve(target)?;
    if method != MethodArg::Slice && alg.kind() != AlgebraKind::Gl {
        return Err(failure(EXIT_USAGE, "the monomial formula is available for type A only".into()));
    }
    let set: InvariantSet = build_slice(&alg)
        .and_then(|slice| restricted_invariants(&alg, &slice))
        .map_err(|e| failure(EXIT_USAGE, e.to_string()))?;
    if let Some(l) = ell {
        if !set.items.iter().any(|i| i.ell == l) {
            let max = set.items.iter().map(|i| i.ell).max().unwrap_or(0);
            return Err(failure(EXIT_USAGE, format!("--ell {l} out of range 1..={max}")));
        }
    }
    let mut report = Report::new(target_input("invariants", target));
    for inv in set.items.iter().filter(|i| ell.is_none_or(|l| i.ell == l)) {
        let mono = (method != MethodArg::Slice).then(|| monomial_invariant(alg.partition(), inv.ell, inv.degree));
        if method != MethodArg::Monomial {
            report.outputs.push(Output {
                name: format!("slice l={} degree={}", inv.ell, inv.degree),
                value: inv.poly.to_string(),
            });
        }
        if let Some(m) = &mono {
            if method == MethodArg::Monomial {
                report.outputs.push(Output {
                    name: format!("monomial l={} degree={}", inv.ell, inv.degree),
                    value: m.to_string(),
                });
            } else {
                let scalar = m.proportionality(&inv.poly);
                report.checks.push(Check::verdict(
                    format!("l={} monomial vs slice", inv.ell),
                    "monomial formula is a nonzero multiple of the slice restriction",
                    "nonzero scalar",
                    scalar.as_ref().map_or("not proportional".to_string(), |c| format!("scalar {}", fmt_q(c))),
                    scalar.is_some(),
                ));
            }
        }
    }
    Ok(Outcome { code: verdict(&report, false), report })
}

fn verify(suite: Suite, max_n: Option<usize>, seed: u64) -> Outcome {
    let outcome = run_suite(suite, max_n, seed);
    let mut report = Report::new(Input {
        command: "verify".into(),
        suite: Some(suite.to_string()),
        max_n: Some(max_n.unwrap_or_else(|| suite.default_max_n())),
        seed: Some(seed),
        ..Input::default()
    });
    report.checks = outcome.checks;
    report.skipped = outcome.skipped;
    Outcome { code: verdict(&report, outcome.guard_hit), report }
}

fn groebner_cmd(path: &PathBuf) -> Result<Outcome, (i32, String)> {
    let text = std::fs::read_to_string(path).map_err(|e| failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    let ideal = Ideal::parse(&text).map_err(|e| failure(EXIT_INADMISSIBLE, e.to_string()))?;
    let mut report =
        Report::new(Input { command: "groebner".into(), file: Some(path.display().to_string()), ..Input::default() });
    match groebner::groebner(&ideal) {
        Ok(gb) => {
            let basis: Vec<String> = gb.basis.iter().map(|p| p.to_string()).collect();
            report.outputs.push(Output { name: "basis".into(), value: basis.join("\n") });
            report.outputs.push(Output { name: "dimension".into(), value: gb.dimension().to_string() });
            Ok(Outcome { code: EXIT_OK, report })
        }
        Err(Error::SizeGuardExceeded(msg)) => {
            report.skipped.push(Skipped {
                name: "groebner basis".into(),
                paper_anchor: "Groebner size guard".into(),
                reason: msg,
            });
            Ok(Outcome { code: EXIT_GUARD, report })
        }
        Err(e) => Err(failure(EXIT_INADMISSIBLE, e.to_string())),
    }
}

fn verdict(report: &Report, guard_hit: bool) -> i32 {
    if !report.all_pass() {
        EXIT_CHECK_FAILED
    } else if guard_hit {
        EXIT_GUARD
    } else {
        EXIT_OK
    }
}

/// Runs the command line and writes to the given streams; returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(stderr, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => EXIT_USAGE,
            };
        }
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Info { target, seed } => info(target, *seed),
        Command::Invariants { target, method, ell } => invariants(target, *method, *ell),
        Command::Verify { suite, max_n, seed } => Ok(verify(*suite, *max_n, *seed)),
        Command::Groebner { ideal } => groebner_cmd(ideal),
    };
    let Outcome { code, mut report } = match result {
        Ok(o) => o,
        Err((code, message)) => {
            let _ = writeln!(stderr, "nilcent: {message}");
            return code;
        }
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    let body = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                let _ = writeln!(stderr, "nilcent: {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = stdout.write_all(body.as_bytes());
        }
    }
    code
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}
