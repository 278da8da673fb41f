use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hmcl::job;

#[derive(Parser)]
#[command(name = "hmcl", about = "Hochschild-Mitchell (co)homology and Cartan-Leray spectral sequences")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Execute a job file and print its report.
    Run {
        jobfile: PathBuf,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include wall-clock timings (breaks byte-for-byte determinism).
        #[arg(long)]
        timings: bool,
    },
    /// Parse and validate a job file without executing it.
    Check { jobfile: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Check { jobfile } => {
            let text = match std::fs::read_to_string(&jobfile) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", jobfile.display());
                    return ExitCode::from(2);
                }
            };
            match job::parse_job(&text).and_then(|j| job::check_job(&j)) {
                Ok(()) => {
                    println!("ok: {}", jobfile.display());
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Cmd::Run { jobfile, out, format, timings } => {
            let text = match std::fs::read_to_string(&jobfile) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", jobfile.display());
                    return ExitCode::from(2);
                }
            };
            let parsed = match job::parse_job(&text) {
                Ok(j) => j,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let report = match job::run_job(&parsed) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let rendered = match (format, timings) {
                (Format::Json, false) => report.to_json(),
                (Format::Json, true) => report.to_json_with_timings(),
                (Format::Text, t) => report.to_text(t),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{rendered}"),
            }
            if report.all_verifications_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
