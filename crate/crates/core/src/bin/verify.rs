//! Command-line driver: run the verification suite (or one group of
//! checks), print one pass/fail line per check, and optionally write
//! JSON reports and exact-table exports.
//!
//! Exit codes: 0 all selected checks pass, 1 any verification failure,
//! 2 usage or I/O error.

use clap::{Parser, Subcommand};
use quatblock::harness::{self, Session};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "verify",
    about = "Exact verification suite for the order-24 quaternion-defect group algebra",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the reports as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Run only the named check, module or command group.
    #[arg(long, global = true, value_name = "NAME")]
    only: Option<String>,

    /// Export the structure-constant tensor as JSON.
    #[arg(long, global = true, value_name = "PATH")]
    export_structure_constants: Option<PathBuf>,

    /// Export the character table and decomposition data as CSV.
    #[arg(long, global = true, value_name = "PATH")]
    export_chartable: Option<PathBuf>,

    /// Export the normalized arrow set as JSON with exact coefficients.
    #[arg(long, global = true, value_name = "PATH")]
    export_arrows: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Every check, in dependency order.
    All,
    /// Character table, idempotents, decomposition and Cartan data.
    Chartable,
    /// Short-vector classification and the self-isometry group.
    Isometries,
    /// Perfectness of the bicharacters.
    Perfect,
    /// Center bases, corner algebras and the polynomial presentation.
    Center,
    /// Arrow construction, normalization and the defining relations.
    Arrows,
    /// The abstractly presented algebra on 24 monomials.
    Quiver,
    /// Degree counting and the isomorphism certificate.
    TheoremC,
}

impl Command {
    fn group(&self) -> &'static str {
        match self {
            Command::All => "all",
            Command::Chartable => "chartable",
            Command::Isometries => "isometries",
            Command::Perfect => "perfect",
            Command::Center => "center",
            Command::Arrows => "arrows",
            Command::Quiver => "quiver",
            Command::TheoremC => "theorem-c",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let session = Session::new();

    if let Some(path) = &cli.export_chartable {
        match harness::export_chartable(&session) {
            Ok(csv) => {
                if let Err(e) = std::fs::write(path, csv) {
                    eprintln!("failed to write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("chartable export failed: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(path) = &cli.export_structure_constants {
        match harness::export_structure_constants(&session) {
            Ok(json) => {
                if let Err(e) = std::fs::write(path, json) {
                    eprintln!("failed to write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("structure-constant export failed: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(path) = &cli.export_arrows {
        match harness::export_arrows(&session) {
            Ok(json) => {
                if let Err(e) = std::fs::write(path, json) {
                    eprintln!("failed to write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("arrow export failed: {e}");
                return ExitCode::from(2);
            }
        }
    }

    let reports = harness::run_all(&session, cli.command.group(), cli.only.as_deref());
    if reports.is_empty() {
        eprintln!("no checks selected");
        return ExitCode::from(2);
    }
    let mut all_ok = true;
    for r in &reports {
        if r.passed() {
            println!("PASS {} ({} ms)", r.check_name, r.elapsed_ms);
        } else {
            all_ok = false;
            let reason = r
                .first_failure()
                .map(|d| format!("{} (expected {}, got {})", d.claim, d.expected, d.got))
                .unwrap_or_else(|| "unknown failure".to_string());
            println!("FAIL {}: {}", r.check_name, reason);
        }
    }
    println!(
        "{} checks, {} passed, {} failed",
        reports.len(),
        reports.iter().filter(|r| r.passed()).count(),
        reports.iter().filter(|r| !r.passed()).count()
    );

    if let Some(path) = &cli.json {
        match harness::reports_to_json(&reports) {
            Ok(json) => {
                if let Err(e) = std::fs::write(path, json) {
                    eprintln!("failed to write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("JSON serialization failed: {e}");
                return ExitCode::from(2);
            }
        }
    }

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
