//! Named verification suites behind the `verify` driver.
//!
//! Each suite builds its objects from scratch for the selected prime and
//! λ-mode, runs every comparison, and returns one row per check. Row names
//! are unique and stable, so two reports for the same selector diff cleanly.

mod axioms;
mod coinvariants;
mod comult;
mod convolution;
mod determinant;
mod frobenius_quotient;
mod morphisms;
mod quotient_iso;
mod torsor_bijection;
mod trivialization;

use crate::exec::{run_jobs, with_pool, Exec, Job};
use crate::param::{Lambda, Prime};
use crate::report::{Check, Report};
use crate::{Error, Result};

/// Selector state shared by every suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub prime: Prime,
    pub lambda: Lambda,
    pub seed: u64,
    pub deep: bool,
    pub exec: Exec,
}

impl SuiteConfig {
    pub fn new(prime: Prime, lambda: Lambda) -> SuiteConfig {
        SuiteConfig {
            prime,
            lambda,
            seed: 0,
            deep: false,
            exec: Exec::default(),
        }
    }
}

/// Dispatchable suite names.
pub const SUITE_NAMES: [&str; 10] = [
    "hopf-axioms",
    "prop-3.1",
    "cor-3.2",
    "thm-3.3",
    "prop-3.10",
    "cor-3.11",
    "notation-4.1",
    "prop-4.2",
    "prop-4.3",
    "thm-4.4",
];

fn run_named(name: &str, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    match name {
        "hopf-axioms" => axioms::run(cfg),
        "prop-3.1" => comult::run(cfg),
        "cor-3.2" => determinant::run(cfg),
        "thm-3.3" => morphisms::run(cfg),
        "prop-3.10" => torsor_bijection::run(cfg),
        "cor-3.11" => trivialization::run(cfg),
        "notation-4.1" => convolution::run(cfg),
        "prop-4.2" => coinvariants::run(cfg),
        "prop-4.3" => quotient_iso::run(cfg),
        "thm-4.4" => frobenius_quotient::run(cfg),
        other => Err(Error::Usage(format!(
            "unknown suite `{other}` (expected one of {}, all)",
            SUITE_NAMES.join(", ")
        ))),
    }
}

/// Runs one suite (or `all`) under the configured execution strategy and
/// assembles the sorted report.
pub fn run_suite(suite: &str, cfg: &SuiteConfig) -> Result<Report> {
    let checks = with_pool(cfg.exec, || -> Result<Vec<Check>> {
        if suite == "all" {
            let jobs: Vec<Job<'_, Result<Vec<Check>>>> = SUITE_NAMES
                .iter()
                .map(|name| {
                    let cfg = cfg.clone();
                    Box::new(move || run_named(name, &cfg)) as Job<'_, _>
                })
                .collect();
            let mut all = Vec::new();
            for rows in run_jobs(cfg.exec, jobs) {
                all.extend(rows?);
            }
            Ok(all)
        } else {
            run_named(suite, cfg)
        }
    })?;
    Ok(Report::new(
        suite,
        cfg.prime.get(),
        cfg.lambda.label(),
        cfg.seed,
        checks,
    ))
}

/// Drains a batch of row-producing jobs in submission order.
fn collect<'a>(cfg: &SuiteConfig, jobs: Vec<Job<'a, Result<Vec<Check>>>>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for rows in run_jobs(cfg.exec, jobs) {
        out.extend(rows?);
    }
    Ok(out)
}

/// The standard marker row for a suite whose heavy families are vacuous
/// under the current selector (they need --deep at this prime).
fn deep_gate(suite: &str, paper_ref: &str) -> Check {
    Check::skip(format!("{suite}/deep-gate"), paper_ref)
}
