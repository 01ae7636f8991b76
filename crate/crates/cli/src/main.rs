use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use znhg::export::{to_dot, to_json, Format, Target};
use znhg::group::{group_report, GroupKind};
use znhg::report::analyze;
use znhg::sweep::{sweep, Check};
use znhg_core::arith::factorize;
use znhg_core::metrics::DEFAULT_HOST_TREE_LIMIT;
use znhg_core::zn_hypergraph::build_intersection_hypergraph;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_FINDING: u8 = 2;

/// Intersection hypergraphs of the subgroup lattice of Z_n: invariants,
/// closed-form predictions, and the checks between them.
#[derive(Parser)]
#[command(name = "znhg", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON (schema znhg/1) instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest vertex count for the exact host-tree search.
    #[arg(long, global = true, default_value_t = DEFAULT_HOST_TREE_LIMIT)]
    host_tree_limit: usize,

    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one modulus.
    Analyze { n: u64 },
    /// Compare computed invariants with predictions over a range of moduli.
    Sweep {
        lo: u64,
        hi: u64,
        /// Comma-separated subset of checks; all by default.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<Check>,
    },
    /// Both hypergraphs of a cyclic or dihedral group from its table.
    Group { kind: GroupKind, n: usize },
    /// Write the hypergraph or its incidence graph as DOT or JSON.
    Export {
        n: u64,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value = "hypergraph")]
        target: Target,
        /// Write to a file instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Analyze { n } => {
            if n < 2 {
                return usage("n must be at least 2");
            }
            let report = match analyze(n, cli.host_tree_limit) {
                Ok(r) => r,
                Err(e) => return usage(&e.to_string()),
            };
            if cli.json {
                print_json(&report);
            } else {
                print!("{report}");
            }
            if report.has_findings() {
                ExitCode::from(EXIT_FINDING)
            } else {
                ExitCode::from(EXIT_OK)
            }
        }
        Command::Sweep { lo, hi, checks } => {
            if lo < 2 || lo > hi {
                return usage("sweep range must satisfy 2 <= lo <= hi");
            }
            let checks = if checks.is_empty() {
                Check::ALL.to_vec()
            } else {
                checks
            };
            let report = sweep(lo, hi, &checks, cli.host_tree_limit, cli.jobs);
            if cli.json {
                print_json(&report);
            } else {
                print!("{report}");
            }
            if report.findings.is_empty() {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_FINDING)
            }
        }
        Command::Group { kind, n } => match group_report(kind, n) {
            Ok(report) => {
                if cli.json {
                    print_json(&report);
                } else {
                    print!("{report}");
                }
                ExitCode::from(EXIT_OK)
            }
            Err(e) => usage(&e.to_string()),
        },
        Command::Export {
            n,
            format,
            target,
            output,
        } => {
            if n < 2 {
                return usage("n must be at least 2");
            }
            let f = match factorize(n) {
                Ok(f) => f,
                Err(e) => return usage(&e.to_string()),
            };
            let h = build_intersection_hypergraph(&f);
            let text = match format {
                Format::Dot => to_dot(n, &h, target),
                Format::Json => to_json(n, &h, target) + "\n",
            };
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        return usage(&format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::from(EXIT_OK)
            }
        }
    }
}
