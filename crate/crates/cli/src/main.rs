//! `coxconv` command-line front end.
//!
//! Every subcommand reads JSON, writes one JSON document to stdout, and
//! reports its verdict through the exit code:
//!
//! | code | meaning                                               |
//! |------|-------------------------------------------------------|
//! | 0    | success / verified / valid                            |
//! | 1    | violated / false                                      |
//! | 2    | unknown / truncated                                   |
//! | 64   | usage, parse or precondition error (message on stderr) |

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use coxconv::affine::{
    affine_reflection_data, affine_roots, example_47, is_d_minimal_closed_form, is_d_minimal_generic, minimize_d, AffineType, AffineWeight,
    MinimizeStatus,
};
use coxconv::convexity::{verify_dual, verify_primal, Budgets};
use coxconv::coxeter::{stabilizer, stabilizer_dual, tits_cone_member, OrbitTable, TitsVerdict};
use coxconv::root_systems::{Family, FiniteRootSystem};
use coxconv::suite::{run_suite, SuiteName};
use coxconv::{Covector, DenseVector, Rational, ReflectionData, SparseVector};

const EXIT_OK: u8 = 0;
const EXIT_FALSE: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Linear Coxeter systems, Weyl group orbits and their convexity theorems,
/// in exact rational arithmetic.
///
/// Exit codes: 0 verified/valid, 1 violated/false, 2 unknown/truncated,
/// 64 usage or parse error. Rationals are written as "p/q" strings.
/// COXCONV_BUDGET overrides the default enumeration budgets (1000); entries
/// grow with word length in infinite groups, so large budgets get slow.
#[derive(Parser)]
#[command(name = "coxconv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Linear Coxeter system checks.
    #[command(subcommand)]
    Lcs(LcsCmd),
    /// Reflection data of finite and affine root systems.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Group orbits.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Tits cone membership.
    #[command(subcommand)]
    Titscone(TitsconeCmd),
    /// Stabilizer of a chamber point as a parabolic subgroup (exit 2 if truncated).
    Stabilizer(StabilizerArgs),
    /// Dual linear Coxeter system on the quotient by the lineality space.
    Dual {
        system: PathBuf,
    },
    /// Convexity theorem verification.
    #[command(subcommand)]
    Convexity(ConvexityCmd),
    /// Locally affine root systems and the d-functional.
    #[command(subcommand)]
    Affine(AffineCmd),
    /// Run a built-in verification suite (exit 1 on any failed check).
    Suite {
        /// finite, affine or examples
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum LcsCmd {
    /// Print the LCS report; exit 0 valid, 1 invalid.
    Check { system: PathBuf },
}

#[derive(Subcommand)]
enum RootsysCmd {
    /// Emit reflection data: a finite family (A, B, C, D, BC) of the given
    /// rank, or an affine type (A1, B1, C1, D1, B2, C2, BC2) on `rank`
    /// coordinates, which also records the null root.
    Build {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: usize,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Base point: exactly one of a vector or a covector file.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Point {
    /// JSON list of rationals, a point of V.
    #[arg(long)]
    vector: Option<PathBuf>,
    /// JSON list of rationals, a point of V*.
    #[arg(long)]
    covector: Option<PathBuf>,
}

#[derive(Subcommand)]
enum OrbitCmd {
    /// Enumerate an orbit by breadth-first search; exit 2 if truncated.
    Enumerate {
        system: PathBuf,
        #[command(flatten)]
        point: Point,
        #[arg(long, env = "COXCONV_BUDGET", default_value_t = 1_000)]
        budget: usize,
    },
}

#[derive(Subcommand)]
enum TitsconeCmd {
    /// Exit 0 YES, 1 NO_PROOF, 2 UNKNOWN.
    Test {
        system: PathBuf,
        #[arg(long)]
        vector: PathBuf,
        #[arg(long, default_value_t = 1_000)]
        cap: usize,
    },
}

#[derive(Args)]
struct StabilizerArgs {
    system: PathBuf,
    #[command(flatten)]
    point: Point,
    #[arg(long, env = "COXCONV_BUDGET", default_value_t = 1_000)]
    budget: usize,
}

#[derive(Subcommand)]
enum ConvexityCmd {
    /// Check the orbit against `x - C_x`; exit 0 on zero failures, 1 otherwise.
    Verify {
        system: PathBuf,
        #[command(flatten)]
        point: Point,
        /// Read the --vector file as a covector.
        #[arg(long)]
        dual: bool,
        #[arg(long, env = "COXCONV_BUDGET", default_value_t = 1_000)]
        orbit_budget: usize,
        #[arg(long, env = "COXCONV_BUDGET", default_value_t = 1_000)]
        root_budget: usize,
        #[arg(long, default_value_t = 1_000)]
        cap: usize,
    },
}

#[derive(Args)]
struct WeightArgs {
    /// Affine type, e.g. A1, B1, C1, D1, B2, C2, BC2.
    #[arg(long = "type")]
    ty: String,
    #[arg(long, default_value = "1")]
    lc: String,
    /// Finite part: JSON map {"j": "p/q"} or a 1-based JSON list.
    #[arg(long)]
    bar: PathBuf,
    #[arg(long, default_value = "0")]
    ld: String,
}

#[derive(Subcommand)]
enum AffineCmd {
    /// Is the weight d-minimal? Exit 0 minimal, 1 not.
    Dmin(WeightArgs),
    /// Minimize the d-functional over the Weyl orbit; exit 0 minimum, 1 unbounded.
    Minimize(WeightArgs),
    /// The unbounded-below example with truncations up to m.
    Example47 {
        #[arg(long)]
        m: usize,
    },
    /// Roots (0, α, n) with α a finite root on {1..support} and |n| ≤ level.
    Roots {
        #[arg(long = "type")]
        ty: String,
        #[arg(long)]
        support: usize,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
}

#[derive(Debug)]
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<(String, u8), Failure>;

fn read_json<T: DeserializeOwned>(path: &Path) -> std::result::Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T, code: u8) -> Outcome {
    Ok((serde_json::to_string_pretty(value)?, code))
}

fn rational(s: &str) -> std::result::Result<Rational, Failure> {
    s.parse().map_err(|e| Failure(format!("{s:?}: {e}")))
}

fn weight(args: &WeightArgs) -> std::result::Result<(AffineType, AffineWeight), Failure> {
    let ty: AffineType = args.ty.parse()?;
    let raw: serde_json::Value = read_json(&args.bar)?;
    let bar = if raw.is_array() {
        SparseVector::from_dense(&serde_json::from_value::<Vec<Rational>>(raw)?, 1)
    } else {
        serde_json::from_value(raw)?
    };
    Ok((ty, AffineWeight::new(rational(&args.lc)?, bar, rational(&args.ld)?)))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Lcs(LcsCmd::Check { system }) => {
            let d: ReflectionData = read_json(&system)?;
            let report = d.check_lcs();
            let code = if report.valid { EXIT_OK } else { EXIT_FALSE };
            emit(&report, code)
        }
        Command::Rootsys(RootsysCmd::Build { family, rank, out }) => {
            let data = match family.parse::<Family>() {
                Ok(f) => FiniteRootSystem::build(f, rank)?.reflection_data,
                Err(_) => affine_reflection_data(family.parse()?, rank)?,
            };
            match out {
                Some(path) => {
                    fs::write(&path, serde_json::to_string_pretty(&data)? + "\n")?;
                    emit(&serde_json::json!({ "written": path.display().to_string() }), EXIT_OK)
                }
                None => emit(&data, EXIT_OK),
            }
        }
        Command::Orbit(OrbitCmd::Enumerate { system, point, budget }) => {
            let d: ReflectionData = read_json(&system)?;
            if let Some(p) = point.vector {
                let t = OrbitTable::enumerate(&d, &read_json::<DenseVector>(&p)?, budget)?;
                emit(&t, if t.truncated() { EXIT_UNKNOWN } else { EXIT_OK })
            } else {
                let p = point.covector.expect("clap enforces one point");
                let t = OrbitTable::enumerate(&d, &read_json::<Covector>(&p)?, budget)?;
                emit(&t, if t.truncated() { EXIT_UNKNOWN } else { EXIT_OK })
            }
        }
        Command::Titscone(TitsconeCmd::Test { system, vector, cap }) => {
            let d: ReflectionData = read_json(&system)?;
            let verdict = tits_cone_member(&d, &read_json(&vector)?, cap)?;
            let code = match verdict {
                TitsVerdict::Yes { .. } => EXIT_OK,
                TitsVerdict::NoProof { .. } => EXIT_FALSE,
                TitsVerdict::Unknown { .. } => EXIT_UNKNOWN,
            };
            emit(&verdict, code)
        }
        Command::Stabilizer(StabilizerArgs { system, point, budget }) => {
            let d: ReflectionData = read_json(&system)?;
            let st = match (point.vector, point.covector) {
                (Some(p), _) => stabilizer(&d, &read_json(&p)?, budget)?,
                (_, Some(p)) => stabilizer_dual(&d, &read_json(&p)?, budget)?,
                _ => unreachable!("clap enforces one point"),
            };
            emit(&st, if st.truncated { EXIT_UNKNOWN } else { EXIT_OK })
        }
        Command::Dual { system } => {
            let d: ReflectionData = read_json(&system)?;
            emit(&d.build_dual_system()?, EXIT_OK)
        }
        Command::Convexity(ConvexityCmd::Verify { system, point, dual, orbit_budget, root_budget, cap }) => {
            let d: ReflectionData = read_json(&system)?;
            let budgets = Budgets { orbit: orbit_budget, root: root_budget, cap };
            let report = match (point.vector, point.covector) {
                (Some(p), _) if dual => verify_dual(&d, &read_json(&p)?, budgets)?,
                (Some(p), _) => verify_primal(&d, &read_json(&p)?, budgets)?,
                (_, Some(p)) => verify_dual(&d, &read_json(&p)?, budgets)?,
                _ => unreachable!("clap enforces one point"),
            };
            emit(&report, if report.passed() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Affine(AffineCmd::Dmin(args)) => {
            let (ty, lambda) = weight(&args)?;
            let closed_form = is_d_minimal_closed_form(ty, &lambda);
            let generic = is_d_minimal_generic(ty, &lambda, 2)?;
            let out = serde_json::json!({
                "type": ty,
                "weight": lambda,
                "d_minimal": closed_form,
                "generic_check": generic,
            });
            if closed_form != generic {
                return Err(Failure(format!("closed form ({closed_form}) and generic check ({generic}) disagree")));
            }
            emit(&out, if closed_form { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Affine(AffineCmd::Minimize(args)) => {
            let (ty, lambda) = weight(&args)?;
            let res = minimize_d(ty, &lambda);
            let code = match res.status {
                MinimizeStatus::Minimum => EXIT_OK,
                MinimizeStatus::Unbounded => EXIT_FALSE,
            };
            emit(&res, code)
        }
        Command::Affine(AffineCmd::Example47 { m }) => {
            let report = example_47(m)?;
            let code = if report.strictly_decreasing && report.bound_respected { EXIT_OK } else { EXIT_FALSE };
            emit(&report, code)
        }
        Command::Affine(AffineCmd::Roots { ty, support, level }) => {
            let ty: AffineType = ty.parse()?;
            let support: Vec<usize> = (1..=support).collect();
            emit(&affine_roots(ty, &support, level)?, EXIT_OK)
        }
        Command::Suite { name, seed } => {
            let name: SuiteName = name.parse()?;
            let summary = run_suite(name, seed);
            emit(&summary, if summary.passed { EXIT_OK } else { EXIT_FALSE })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((json, code)) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(io::stdout().lock(), "{json}");
            ExitCode::from(code)
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
