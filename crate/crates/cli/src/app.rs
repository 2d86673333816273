//! Command dispatch and exit-code policy.
//!
//! Exit codes: 0 = success / agreement, 1 = oracle disagreement or corpus
//! failure, 2 = input error (malformed config, non-maximal order, unknown
//! corpus case, non-prime argument).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use conic_core::analyzer::{analyze, is_regular, is_smooth, singular_locus};
use conic_core::oracle::{example14_verify, regular_oracle, regular_witness, smooth_oracle};

use crate::config::JobConfig;
use crate::corpus;
use crate::report;

#[derive(Parser)]
#[command(
    name = "conic",
    version,
    about = "Smoothness and regularity of B[X,Y]/(aX² + bXY + cY² − 1) over a monogenic ring of algebraic integers B"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full analysis: smoothness, Γ, per-prime evidence, regularity
    Analyze {
        /// JSON job file (min_poly, a, b, c)
        file: PathBuf,
        /// Emit the machine-readable report
        #[arg(long)]
        json: bool,
    },
    /// Smoothness verdict only
    Smooth { file: PathBuf },
    /// Regularity verdict only
    Regular { file: PathBuf },
    /// Generators of the singular-locus ideal H
    #[command(name = "singular-locus")]
    SingularLocus {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check the analyzer against the point-enumeration oracle
    Oracle {
        file: PathBuf,
        /// Search residue extensions of degree up to M (default 2)
        #[arg(long = "degree-bound", value_name = "M")]
        degree_bound: Option<u32>,
        /// Flip the analyzer verdicts before comparing (test harness only)
        #[arg(long, hide = true)]
        inject_mismatch: bool,
    },
    /// Run the built-in reproduction corpus
    Reproduce {
        /// Case id, or "all"
        id: String,
        /// Restrict the example14 case to one prime
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Verdict triple for the degree-p family Z[X,Y]/((p+1)X^p + p²Y^p − 1)
    Example14 {
        #[arg(long)]
        prime: u64,
    },
}

enum CmdError {
    /// exit 2
    Input(String),
    /// exit 1
    Failure(String),
}

fn input_err(e: impl ToString) -> CmdError {
    CmdError::Input(e.to_string())
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<(), CmdError> {
    match cmd {
        Cmd::Analyze { file, json } => {
            let cfg = JobConfig::from_file(&file).map_err(input_err)?;
            let input = cfg.to_input().map_err(input_err)?;
            let report = analyze(&input).map_err(input_err)?;
            if json {
                println!("{}", report::report_json(&report));
            } else {
                print!("{}", report::report_text(&report));
            }
            Ok(())
        }
        Cmd::Smooth { file } => {
            let cfg = JobConfig::from_file(&file).map_err(input_err)?;
            let input = cfg.to_input().map_err(input_err)?;
            println!("smooth: {}", is_smooth(&input).map_err(input_err)?);
            Ok(())
        }
        Cmd::Regular { file } => {
            let cfg = JobConfig::from_file(&file).map_err(input_err)?;
            let input = cfg.to_input().map_err(input_err)?;
            println!("regular: {}", is_regular(&input).map_err(input_err)?);
            Ok(())
        }
        Cmd::SingularLocus { file, json } => {
            let cfg = JobConfig::from_file(&file).map_err(input_err)?;
            let input = cfg.to_input().map_err(input_err)?;
            let locus = singular_locus(&input).map_err(input_err)?;
            if json {
                println!("{}", report::singular_locus_json(&locus));
            } else {
                print!("{}", report::singular_locus_text(&locus));
            }
            Ok(())
        }
        Cmd::Oracle { file, degree_bound, inject_mismatch } => {
            let cfg = JobConfig::from_file(&file).map_err(input_err)?;
            let input = cfg.to_input().map_err(input_err)?;
            let oracle_cfg = cfg.oracle_config(degree_bound);
            let report = analyze(&input).map_err(input_err)?;
            let (mut analyzer_smooth, mut analyzer_regular) = (report.smooth, report.regular);
            if inject_mismatch {
                analyzer_smooth = !analyzer_smooth;
                analyzer_regular = !analyzer_regular;
            }
            let oracle_smooth = smooth_oracle(&input, &oracle_cfg).map_err(input_err)?;
            let oracle_regular = regular_oracle(&input, &oracle_cfg).map_err(input_err)?;
            println!("analyzer: smooth={analyzer_smooth} regular={analyzer_regular}");
            println!(
                "oracle (degree bound {}): smooth={oracle_smooth} regular={oracle_regular}",
                oracle_cfg.degree_bound
            );
            if analyzer_smooth == oracle_smooth && analyzer_regular == oracle_regular {
                println!("agreement: OK");
                Ok(())
            } else {
                let mut diff = String::from("DISAGREEMENT:");
                if analyzer_smooth != oracle_smooth {
                    diff.push_str(&format!(
                        "\n  smooth: analyzer={analyzer_smooth} oracle={oracle_smooth}"
                    ));
                }
                if analyzer_regular != oracle_regular {
                    diff.push_str(&format!(
                        "\n  regular: analyzer={analyzer_regular} oracle={oracle_regular}"
                    ));
                }
                if let Some(w) = regular_witness(&input, &oracle_cfg).map_err(input_err)? {
                    diff.push_str(&format!(
                        "\n  oracle witness in GF(2^{}): x = {}, y = {}",
                        w.field.k(),
                        w.x,
                        w.y
                    ));
                }
                Err(CmdError::Failure(diff))
            }
        }
        Cmd::Reproduce { id, prime } => {
            let outcomes = corpus::run_case(&id, prime).map_err(input_err)?;
            println!("{:<16} {:>12}  result", "case", "checks");
            let mut all_pass = true;
            for o in &outcomes {
                println!(
                    "{:<16} {:>12}  {}",
                    o.id,
                    format!("{}/{}", o.passed, o.total),
                    if o.pass() { "PASS" } else { "FAIL" }
                );
                if !o.pass() {
                    all_pass = false;
                    for f in o.failures.iter().take(10) {
                        println!("    {f}");
                    }
                }
            }
            if all_pass {
                Ok(())
            } else {
                Err(CmdError::Failure("corpus failure".into()))
            }
        }
        Cmd::Example14 { prime } => {
            let r = example14_verify(prime).map_err(input_err)?;
            println!(
                "p = {prime}: not_smooth={} regular={} identity_ok={}",
                r.not_smooth, r.regular, r.identity_ok
            );
            Ok(())
        }
    }
}
