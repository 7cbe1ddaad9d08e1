//! The `hopfcoh` command line: argument parsing, dispatch, JSON reports and
//! the exit-code contract (0 pass, 1 check failure, 2 input error, 3 budget).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{parse_instance, Coefficients, GroupInstance, HopfInstance, Instance};
use crate::cohomology::{
    compute_h1, compute_z1, compute_z1_unnormalized, verify_decomposition, verify_exact_sequence, CohomologyJson,
    Z1Strategy,
};
use crate::error::{Error, Result};
use crate::group_cohom::{
    cross_check_hopf_vs_group, cross_check_semidirect, group_h0, group_h1, verify_group_decomposition, GroupCocycle,
};
use crate::io::to_json_string;
use crate::report::CheckReport;
use crate::scalars::make_prime_field;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "hopfcoh",
    version,
    about = "Exact non-abelian cohomology of finite-dimensional Hopf algebras over F_p"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Prime for instance specs that omit it.
    #[arg(long, global = true)]
    pub p: Option<u64>,

    /// Size parameter for instance specs that omit it.
    #[arg(long, global = true)]
    pub n: Option<u64>,

    /// Enumeration budget (candidates or search nodes).
    #[arg(long, global = true, env = "HOPFCOH_BUDGET", default_value_t = DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every axiom suite that applies to an instance.
    Check {
        /// Instance spec such as taft:2:5, kD:s3:5, s3:inv or file:path.json.
        instance: String,
    },
    /// Compute H⁰ and H¹.
    Cohomology {
        /// Instance spec such as taft:2:5, kD:s3:5, s3:inv or file:path.json.
        instance: String,
        /// Coefficients for Hopf instances: E or trivial.
        #[arg(long, default_value = "E")]
        coeff: Coefficients,
    },
    /// Run one of the structural verifications.
    Verify {
        which: Verification,
        /// Instance spec such as taft:2:5, kD:s3:5, s3:inv or file:path.json.
        instance: String,
        /// Coefficients for Hopf instances: E or trivial.
        #[arg(long, default_value = "E")]
        coeff: Coefficients,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verification {
    /// Z¹(H⋆E,F) against compatible pairs, and H⁰ as an intersection.
    Decomposition,
    /// The exact sequence through the coinvariants.
    ExactSequence,
    /// Normalized and unnormalized cocycle searches agree.
    Normalization,
    /// Semidirect decomposition of group cohomology.
    GroupDecomposition,
    /// Hopf cohomology of k^D against group cohomology with unit coefficients.
    CrossCheck,
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    command: &'static str,
    instance: &'a str,
    passed: bool,
    report: &'a CheckReport,
}

#[derive(Serialize)]
struct CohomologyOutput<'a, T: Serialize> {
    command: &'static str,
    instance: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<String>,
    passed: bool,
    report: T,
}

#[derive(Serialize)]
struct GroupClassJson {
    rep: GroupCocycle,
    orbit_size: usize,
    distinguished: bool,
}

#[derive(Serialize)]
struct GroupCohomologyJson {
    acting: String,
    coefficients: String,
    h0: Vec<usize>,
    z1_count: usize,
    h1_classes: Vec<GroupClassJson>,
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    command: &'static str,
    verification: Verification,
    instance: &'a str,
    passed: bool,
    report: &'a CheckReport,
}

/// What a command produced: serialized report and whether every check passed.
pub struct Outcome {
    pub json: String,
    pub passed: bool,
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    match run(&cli).and_then(|o| emit(&cli, &o).map(|()| o)) {
        Ok(o) => {
            if o.passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("hopfcoh: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::PrerequisiteFailed(_) => EXIT_FAIL,
        _ => EXIT_INPUT,
    }
}

fn emit(cli: &Cli, o: &Outcome) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, &o.json)?;
            println!("{} {}", if o.passed { "PASS" } else { "FAIL" }, path.display());
        }
        None => std::io::stdout().write_all(o.json.as_bytes())?,
    }
    Ok(())
}

/// Runs a parsed command without touching the filesystem or stdout.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let budget = cli.budget;
    match &cli.command {
        Command::Check { instance } => {
            let parsed = parse_instance(instance, cli.n, cli.p)?;
            let report = match &parsed {
                Instance::Hopf(h) => h.check_all(),
                Instance::Group(g) => check_group(g),
            };
            let passed = report.passed();
            let instance = canonical(&parsed, instance);
            let json = to_json_string(&CheckOutput { command: "check", instance, passed, report: &report })?;
            Ok(Outcome { json, passed })
        }
        Command::Cohomology { instance, coeff } => match parse_instance(instance, cli.n, cli.p)? {
            Instance::Hopf(h) => {
                let d = h.diagram(*coeff)?;
                let r = compute_h1(&d, budget)?;
                let passed = r.checks.passed();
                let report: CohomologyJson = r.to_json();
                let out = CohomologyOutput {
                    command: "cohomology",
                    instance: &h.spec,
                    coefficients: Some(coeff.to_string()),
                    passed,
                    report,
                };
                Ok(Outcome { json: to_json_string(&out)?, passed })
            }
            Instance::Group(g) => {
                let act = g.action();
                let h1 = group_h1(act, budget)?;
                let report = GroupCohomologyJson {
                    acting: act.actor.name.clone(),
                    coefficients: act.target.name.clone(),
                    h0: group_h0(act),
                    z1_count: h1.z1.len(),
                    h1_classes: h1
                        .classes
                        .iter()
                        .enumerate()
                        .map(|(k, b)| GroupClassJson {
                            rep: h1.z1[b[0]].clone(),
                            orbit_size: b.len(),
                            distinguished: k == h1.distinguished_class(),
                        })
                        .collect(),
                };
                let out =
                    CohomologyOutput { command: "cohomology", instance, coefficients: None, passed: true, report };
                Ok(Outcome { json: to_json_string(&out)?, passed: true })
            }
        },
        Command::Verify { which, instance, coeff } => {
            let parsed = parse_instance(instance, cli.n, cli.p)?;
            let report = verify(*which, &parsed, *coeff, cli.p, budget)?;
            let passed = report.passed();
            let instance = canonical(&parsed, instance);
            let out = VerifyOutput { command: "verify", verification: *which, instance, passed, report: &report };
            Ok(Outcome { json: to_json_string(&out)?, passed })
        }
    }
}

/// Hopf instances echo their normalized spec, with flags folded in.
fn canonical<'a>(parsed: &'a Instance, raw: &'a str) -> &'a str {
    match parsed {
        Instance::Hopf(h) => &h.spec,
        Instance::Group(_) => raw,
    }
}

fn check_group(g: &GroupInstance) -> CheckReport {
    // Constructors already validated the actions and compatibility.
    let mut r = CheckReport::new("group instance");
    let act = g.action();
    r.pass(format!("{} acts on {} by automorphisms", act.actor.name, act.target.name));
    if let GroupInstance::Semidirect(_) = g {
        r.pass("the factor actions are compatible");
    }
    r
}

fn wrong_kind(which: Verification, wanted: &str) -> Error {
    Error::Parse(format!("{} needs a {wanted} instance", serde_json::to_string(&which).unwrap_or_default()))
}

fn verify(
    which: Verification,
    inst: &Instance,
    coeff: Coefficients,
    p: Option<u64>,
    budget: u64,
) -> Result<CheckReport> {
    match (which, inst) {
        (Verification::Decomposition, Instance::Hopf(h)) => {
            verify_decomposition(&h.e, &h.radford_coefficients(coeff)?, budget)
        }
        (Verification::ExactSequence, Instance::Hopf(h)) => {
            verify_exact_sequence(&h.e, &h.radford_coefficients(coeff)?, budget)
        }
        (Verification::Normalization, Instance::Hopf(h)) => normalization(h, coeff, budget),
        (Verification::GroupDecomposition, Instance::Group(GroupInstance::Semidirect(sd))) => {
            verify_group_decomposition(sd, budget)
        }
        (Verification::CrossCheck, Instance::Group(g)) => {
            let p = p.ok_or_else(|| Error::Parse("cross-check needs --p".into()))?;
            let field = make_prime_field(p)?;
            match g {
                GroupInstance::Semidirect(sd) => cross_check_semidirect(sd, field, budget),
                GroupInstance::Plain(act) => cross_check_hopf_vs_group(act, field, budget),
            }
        }
        (Verification::GroupDecomposition, _) => Err(wrong_kind(which, "semidirect group")),
        (Verification::CrossCheck, _) => Err(wrong_kind(which, "group")),
        (_, Instance::Group(_)) => Err(wrong_kind(which, "Hopf")),
    }
}

/// The normalized search (brute force and solver) against the search over
/// all of `A¹`.
pub fn normalization(h: &HopfInstance, coeff: Coefficients, budget: u64) -> Result<CheckReport> {
    let d = h.diagram(coeff)?;
    let mut r = CheckReport::new(format!("normalization on {}", d.name));
    let full = compute_z1_unnormalized(&d, budget)?;
    let brute = compute_z1(&d, budget, Z1Strategy::BruteForce)?;
    let solver = compute_z1(&d, budget, Z1Strategy::Solver)?;
    r.count("Z1", full.len() as u64);
    r.check("normalized brute force equals the full search", brute.cocycles == full.cocycles, || {
        format!("{} against {}", brute.len(), full.len())
    });
    r.check("solver equals the full search", solver.cocycles == full.cocycles, || {
        format!("{} against {}", solver.len(), full.len())
    });
    Ok(r)
}
