//! Command-line front end. Every invocation prints one JSON object on
//! standard output; exit codes are 0 on success, 2 on usage or precondition
//! errors, 1 on internal assertion failures (including suite violations).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use kron::cache::{write_gbar_table_file, CoeffCache};
use kron::characters::MAX_SYMMETRIC_GROUP;
use kron::coefficients::stable_parameter;
use kron::deligne::ClassPosition;
use kron::{identities, Error, Partition};

#[derive(Parser)]
#[command(
    name = "kron",
    version,
    about = "Kronecker, reduced Kronecker and Littlewood-Richardson coefficients, \
             with the block combinatorics behind them",
    after_help = "Partitions are written as comma-separated parts, `-` for the empty \
                  partition (e.g. `6,5,4,1`)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Kronecker coefficient g^λ_{μ,τ} for three partitions of one n
    G {
        lam: String,
        mu: String,
        tau: String,
    },
    /// Reduced (stable) Kronecker coefficient ḡ^λ_{μ,τ}
    Reduced {
        lam: String,
        mu: String,
        tau: String,
    },
    /// Littlewood-Richardson coefficient c^λ_{μ,τ} (needs |λ| = |μ| + |τ|)
    Lr {
        lam: String,
        mu: String,
        tau: String,
    },
    /// Multiplicity of the indecomposable λ in μ ⊗ τ at integer parameter n
    Mult {
        mu: String,
        tau: String,
        lam: String,
        #[arg(long)]
        n: i64,
    },
    /// The class chain of a minimal diagram at parameter n
    Class {
        minimal: String,
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 5)]
        depth: usize,
    },
    /// Generic-parameter decomposition of an indecomposable at parameter n
    Lift {
        lam: String,
        #[arg(long)]
        n: i64,
    },
    /// Simple/projective status of an indecomposable at parameter n
    Status {
        lam: String,
        #[arg(long)]
        n: i64,
    },
    /// Dimension polynomial of the indecomposable labelled λ
    Dimpoly { lam: String },
    /// Sample g along the padded sequence for n in [from, to]
    Stabilize {
        lam: String,
        mu: String,
        tau: String,
        #[arg(long)]
        from: i64,
        #[arg(long)]
        to: i64,
    },
    /// Run identity verification suites and report violations
    Verify {
        /// all, alternating_sum, maximum_and_sandwich, dagger_identity,
        /// trivial_class_vanishing, projective_pairing, symmetry,
        /// murnaghan_littlewood, lr_boundary, dimension_roots, global
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 8)]
        n_max: i64,
    },
    /// Write the CSV table of reduced coefficients up to a size cap
    Table {
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        out: PathBuf,
        /// Cache file; defaults to the KRON_CACHE environment variable
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

/// A failed invocation: the JSON payload to print plus the exit code.
struct Failure {
    payload: Value,
    code: u8,
}

impl Failure {
    fn usage(error: impl Into<String>) -> Self {
        Failure {
            payload: json!({ "error": error.into() }),
            code: 2,
        }
    }

    fn internal(error: impl Into<String>) -> Self {
        Failure {
            payload: json!({ "error": error.into() }),
            code: 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Internal(_) | Error::NegativeMultiplicity { .. } | Error::Io { .. } => {
                Failure::internal(err.to_string())
            }
            _ => Failure::usage(err.to_string()),
        }
    }
}

fn parse_partition(text: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>().map_err(Failure::from)
}

/// Rejects requests whose stable evaluation would leave the supported group
/// range, so they surface as usage errors instead of a panic.
fn guard_stable(lam: &Partition, mu: &Partition, tau: &Partition) -> Result<(), Failure> {
    let n = stable_parameter(lam, mu, tau);
    if n as usize > MAX_SYMMETRIC_GROUP {
        return Err(Failure::usage(format!(
            "stable evaluation needs S_{n}, beyond the supported bound {MAX_SYMMETRIC_GROUP}"
        )));
    }
    Ok(())
}

fn run(command: Command) -> Result<Value, Failure> {
    match command {
        Command::G { lam, mu, tau } => {
            let (lam, mu, tau) = (
                parse_partition(&lam)?,
                parse_partition(&mu)?,
                parse_partition(&tau)?,
            );
            let value = kron::kronecker(&lam, &mu, &tau)?;
            Ok(json!({
                "kind": "g",
                "lam": lam.to_string(),
                "mu": mu.to_string(),
                "tau": tau.to_string(),
                "value": value.to_string(),
            }))
        }
        Command::Reduced { lam, mu, tau } => {
            let (lam, mu, tau) = (
                parse_partition(&lam)?,
                parse_partition(&mu)?,
                parse_partition(&tau)?,
            );
            guard_stable(&lam, &mu, &tau)?;
            let value = kron::reduced_kronecker(&lam, &mu, &tau);
            Ok(json!({
                "kind": "gbar",
                "lam": lam.to_string(),
                "mu": mu.to_string(),
                "tau": tau.to_string(),
                "value": value.to_string(),
            }))
        }
        Command::Lr { lam, mu, tau } => {
            let (lam, mu, tau) = (
                parse_partition(&lam)?,
                parse_partition(&mu)?,
                parse_partition(&tau)?,
            );
            let value = kron::littlewood_richardson(&lam, &mu, &tau)?;
            Ok(json!({
                "kind": "lr",
                "lam": lam.to_string(),
                "mu": mu.to_string(),
                "tau": tau.to_string(),
                "value": value.to_string(),
            }))
        }
        Command::Mult { mu, tau, lam, n } => {
            let (mu, tau, lam) = (
                parse_partition(&mu)?,
                parse_partition(&tau)?,
                parse_partition(&lam)?,
            );
            if n < 0 {
                return Err(Failure::usage("the integer parameter n must be >= 0"));
            }
            guard_stable(&lam, &mu, &tau)?;
            let value = kron::tensor_multiplicity(&mu, &tau, &lam, n)?;
            Ok(json!({
                "kind": "mult",
                "mu": mu.to_string(),
                "tau": tau.to_string(),
                "lam": lam.to_string(),
                "n": n,
                "value": value.to_string(),
            }))
        }
        Command::Class { minimal, n, depth } => {
            let minimal = parse_partition(&minimal)?;
            let chain = kron::class_chain(&minimal, n, depth)?;
            let encoded: Vec<String> = chain.elements().iter().map(|p| p.to_string()).collect();
            Ok(json!({ "chain": encoded }))
        }
        Command::Lift { lam, n } => {
            let lam = parse_partition(&lam)?;
            let lifted: Vec<String> = kron::lift(&lam, n).iter().map(|p| p.to_string()).collect();
            Ok(json!({ "lam": lam.to_string(), "n": n, "lift": lifted }))
        }
        Command::Status { lam, n } => {
            let lam = parse_partition(&lam)?;
            let status = kron::object_status(&lam, n);
            let position = match kron::locate_in_class(&lam, n) {
                ClassPosition::Trivial => json!({ "class": "trivial" }),
                ClassPosition::NonTrivial { minimal, index } => {
                    json!({ "class": "chain", "minimal": minimal.to_string(), "index": index })
                }
            };
            Ok(json!({
                "lam": lam.to_string(),
                "n": n,
                "status": status,
                "position": position,
            }))
        }
        Command::Dimpoly { lam } => {
            let lam = parse_partition(&lam)?;
            let poly = kron::dimension_polynomial(&lam);
            let coeffs: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
            let roots: Vec<i64> = poly.nonnegative_integer_roots();
            Ok(json!({
                "lam": lam.to_string(),
                "degree": poly.degree(),
                "coeffs": coeffs,
                "roots": roots,
            }))
        }
        Command::Stabilize {
            lam,
            mu,
            tau,
            from,
            to,
        } => {
            let (lam, mu, tau) = (
                parse_partition(&lam)?,
                parse_partition(&mu)?,
                parse_partition(&tau)?,
            );
            if to as usize > MAX_SYMMETRIC_GROUP {
                return Err(Failure::usage(format!(
                    "sampling up to S_{to} exceeds the supported bound {MAX_SYMMETRIC_GROUP}"
                )));
            }
            let window = kron::stabilization_sequence(&lam, &mu, &tau, from, to)?;
            let samples: Vec<Value> = window
                .samples
                .iter()
                .map(|(n, v)| json!([n, v.to_string()]))
                .collect();
            Ok(json!({
                "lam": lam.to_string(),
                "mu": mu.to_string(),
                "tau": tau.to_string(),
                "n_start": window.n_start,
                "n_stable": window.n_stable,
                "samples": samples,
            }))
        }
        Command::Verify {
            suite,
            max_size,
            n_max,
        } => {
            let reports = run_suites(&suite, max_size, n_max)?;
            let all_passed = reports.iter().all(|r| r.passed());
            let payload = json!({
                "passed": all_passed,
                "reports": reports,
            });
            if all_passed {
                Ok(payload)
            } else {
                let mut payload = payload;
                payload["error"] = json!("verification found violations");
                Err(Failure { payload, code: 1 })
            }
        }
        Command::Table {
            max_size,
            out,
            cache,
        } => {
            let cache_path = cache.or_else(|| std::env::var_os("KRON_CACHE").map(PathBuf::from));
            let mut cache = match &cache_path {
                Some(path) => CoeffCache::open(path)?,
                None => CoeffCache::in_memory(),
            };
            let rows = write_gbar_table_file(max_size, &out, &mut cache)?;
            Ok(json!({
                "out": out.display().to_string(),
                "rows": rows,
                "cache": cache_path.map(|p| p.display().to_string()),
            }))
        }
    }
}

fn run_suites(
    suite: &str,
    max_size: usize,
    n_max: i64,
) -> Result<Vec<identities::VerificationReport>, Failure> {
    use identities::*;
    let window = n_max.max(0);
    let reports = match suite {
        "alternating_sum" => vec![check_alternating_sum(max_size, window.min(4))],
        "maximum_and_sandwich" => vec![check_maximum_and_sandwich(max_size, window.min(4))],
        "dagger_identity" => (0..=max_size.max(3)).map(check_dagger_identity).collect(),
        "trivial_class_vanishing" => vec![check_trivial_class_vanishing(max_size, window)],
        "projective_pairing" => vec![check_projective_pairing(max_size, window)],
        "symmetry" => vec![check_symmetry(max_size)],
        "murnaghan_littlewood" => vec![check_murnaghan_littlewood(max_size)],
        "lr_boundary" => vec![check_lr_boundary(max_size)],
        "dimension_roots" => vec![check_dimension_roots(max_size)],
        "global" => vec![check_global(max_size)],
        "all" => {
            let mut reports = vec![
                check_alternating_sum(max_size, window.min(4)),
                check_maximum_and_sandwich(max_size, window.min(4)),
            ];
            reports.extend((0..=max_size.max(3)).map(check_dagger_identity));
            reports.push(check_trivial_class_vanishing(max_size, window));
            reports.push(check_projective_pairing(max_size, window));
            reports.push(check_global(max_size));
            reports
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown suite {other:?}; see `kron verify --help`"
            )))
        }
    };
    Ok(reports)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            print!("{err}");
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            eprint!("{err}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            println!("{}", failure.payload);
            ExitCode::from(failure.code)
        }
    }
}
