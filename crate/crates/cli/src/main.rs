use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use opineq::checks::{list_checks, sharpness_probe};
use opineq::suite::{parse_config, run_suite};

#[derive(Parser)]
#[command(name = "opineq", version, about = "Randomized verification of operator-mean inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the suite described by a JSON config.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the config seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides the config report path.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List registered checks.
    List,
    /// Evaluate a check at the scalar instances attaining its constants.
    Probe {
        #[arg(long)]
        check: String,
        #[arg(long, allow_hyphen_values = true)]
        s: f64,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
    },
}

const CONFIG_ERROR: u8 = 2;

fn run(config: PathBuf, seed: Option<u64>, report: Option<PathBuf>) -> ExitCode {
    let text = match std::fs::read_to_string(&config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", config.display());
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    let mut cfg = match parse_config(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    if report.is_some() {
        cfg.report_path = report;
    }
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    for r in &report.results {
        let status = if r.failures == 0 && r.errors == 0 {
            "ok"
        } else if r.counts_against_suite() {
            "FAIL"
        } else {
            "noted"
        };
        let margin = r.min_margin.map_or("-".to_string(), |m| format!("{m:.3e}"));
        println!(
            "{status:5} {:28} trials {:6} skips {:5} failures {:5} min margin {margin}",
            r.check_id, r.trials, r.skips, r.failures
        );
    }
    println!("elapsed {:.1}s", report.elapsed_seconds);
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run { config, seed, report } => run(config, seed, report),
        Command::List => {
            for c in list_checks() {
                println!("{}\t{:?}\t{:?}\t{}", c.check_id, c.instance, c.expectation, c.statement);
            }
            ExitCode::SUCCESS
        }
        Command::Probe { check, s, t, v } => match sharpness_probe(&check, s, t, v) {
            Ok(p) => {
                println!("gap {:e}", p.gap);
                for side in &p.sides {
                    println!("  {}: margin {:e}", side.label, side.margin);
                }
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(CONFIG_ERROR)
            }
        },
    }
}
