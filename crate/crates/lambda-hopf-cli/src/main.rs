//! Suite driver: selects a verification suite, prime, and λ-mode, runs the
//! checks, and renders the report. Exit status: 0 all pass, 1 at least one
//! failure, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use lambda_hopf::exec;
use lambda_hopf::param::{Lambda, Prime};
use lambda_hopf::suites::{run_suite, SuiteConfig, SUITE_NAMES};
use lambda_hopf::Error;

#[derive(Parser)]
#[command(
    name = "verify",
    version,
    about = "Exact verification suites for λ-deformed group schemes, their unit groups, and torsors"
)]
struct Cli {
    /// Suite name, or `all`.
    #[arg(long)]
    suite: String,

    /// Characteristic: 2, 3, or 5.
    #[arg(long)]
    prime: u32,

    /// λ-mode: `generic`, `zero`, or a scalar residue.
    #[arg(long, default_value = "generic")]
    lambda: String,

    /// Seed for the randomized families.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Enables the multi-minute families at p = 5.
    #[arg(long)]
    deep: bool,

    /// Also writes the structured report to this path.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Stdout rendering.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

fn parse_prime(p: u32) -> lambda_hopf::Result<Prime> {
    match p {
        2 | 3 | 5 => Prime::new(p),
        other => match Prime::new(other) {
            Ok(_) => Err(Error::UnsupportedPrime(
                other,
                "supported primes are 2, 3, 5".into(),
            )),
            Err(e) => Err(e),
        },
    }
}

fn parse_lambda(s: &str, p: Prime) -> lambda_hopf::Result<Lambda> {
    match s {
        "generic" => Ok(Lambda::Generic),
        "zero" => Ok(Lambda::Scalar(0)),
        other => other
            .parse::<u32>()
            .map(|k| Lambda::Scalar(k % p.get()))
            .map_err(|_| {
                Error::Usage(format!(
                    "invalid --lambda `{other}` (expected generic, zero, or a residue)"
                ))
            }),
    }
}

fn run(cli: Cli) -> lambda_hopf::Result<ExitCode> {
    let prime = parse_prime(cli.prime)?;
    let lambda = parse_lambda(&cli.lambda, prime)?;
    let exec = exec::from_env()?;
    if cli.suite != "all" && !SUITE_NAMES.contains(&cli.suite.as_str()) {
        return Err(Error::Usage(format!(
            "unknown suite `{}` (expected one of {}, all)",
            cli.suite,
            SUITE_NAMES.join(", ")
        )));
    }
    let cfg = SuiteConfig {
        prime,
        lambda,
        seed: cli.seed,
        deep: cli.deep,
        exec,
    };
    let report = run_suite(&cli.suite, &cfg)?;
    match cli.format {
        Format::Text => print!("{}", report.render_text()),
        Format::Structured => print!("{}", report.to_json()),
    }
    if let Some(path) = &cli.out {
        std::fs::write(path, report.to_json()).map_err(|e| {
            Error::Usage(format!("cannot write {}: {e}", path.display()))
        })?;
    }
    Ok(if report.any_fail() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::NotPrime(_) | Error::UnsupportedPrime(..) => {
                    ExitCode::from(2)
                }
                _ => ExitCode::from(1),
            }
        }
    }
}
