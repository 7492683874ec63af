use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crnoma::app::{format_optimize_table, format_report, load_config, run_sweep, run_validation};
use crnoma::{optimize_all, OptimizeOptions};

const EXIT_USAGE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;

#[derive(Parser)]
#[command(
    name = "crnoma",
    version,
    about = "Sensing-throughput tradeoff of NOMA cognitive-radio networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate detection statistics and throughputs over a uniform tau grid (CSV)
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Number of sensing times, including both ends of the frame
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Optimal sensing time of every throughput objective
    Optimize {
        #[arg(long)]
        config: PathBuf,
    },
    /// Compare the analytic detector against Monte-Carlo simulation
    Validate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };

    match cli.command {
        Command::Sweep { config, steps, out } => {
            let scenario = match load_config(&config) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match run_sweep(&scenario, steps, &out) {
                Ok(_) => ExitCode::SUCCESS,
                Err(e) => fail(e),
            }
        }
        Command::Optimize { config } => {
            let scenario = match load_config(&config) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match optimize_all(&scenario, OptimizeOptions::default()) {
                Ok(rows) => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(format_optimize_table(&rows).as_bytes());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Command::Validate {
            config,
            trials,
            seed,
        } => {
            let scenario = match load_config(&config) {
                Ok(s) => s,
                Err(e) => return fail(e),
            };
            match run_validation(&scenario, trials, seed) {
                Ok(report) => {
                    let mut stdout = std::io::stdout().lock();
                    let _ = stdout.write_all(format_report(&report).as_bytes());
                    if report.all_pass() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_VALIDATION)
                    }
                }
                Err(e) => fail(e),
            }
        }
    }
}
