use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Result};
use clap::error::ErrorKind;
use clap::Parser;

use flatfocal_cli::args::{Cli, Command};
use flatfocal_cli::commands::{self, Limits, Outcome};

/// Exit code for any error, kept apart from the 0/1/2 of `compare`.
const FAILURE: u8 = 3;

fn run(cli: &Cli) -> Result<Outcome> {
    if cli.max_points == 0 || cli.time_cap == 0 {
        bail!("--max-points and --time-cap must be positive");
    }
    if let Some(n) = cli.threads {
        if n == 0 {
            bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let limits = Limits {
        max_points: cli.max_points,
        time_cap: Duration::from_secs(cli.time_cap),
    };
    match &cli.command {
        Command::Info(a) => commands::info(a, limits),
        Command::Classify(a) => commands::classify_cmd(a),
        Command::Zones(a) => commands::zones(a),
        Command::Spectra(a) => commands::spectra(a, limits),
        Command::Compare(a) => commands::compare_cmd(a, limits),
        Command::Witt(a) => commands::witt(a, limits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(FAILURE),
            };
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.stdout.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(FAILURE);
            }
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(FAILURE)
        }
    }
}
