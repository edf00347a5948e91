use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gravibounce::cli::{self, Command, Format, Options};
use gravibounce::constants::{default_constants, load_constants};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    Zeros,
    Levels,
    Qmatrix,
    Rates,
    Lifetimes,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Fmt {
    Csv,
    Json,
}

/// Quantum bouncer levels, quadrupole matrix elements and graviton emission rates.
#[derive(Debug, Parser)]
#[command(name = "gravibounce", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,

    /// Number of states (or largest state index).
    #[arg(long, visible_alias = "max", default_value_t = 10)]
    count: u64,

    #[arg(long, value_enum, default_value = "csv")]
    format: Fmt,

    /// Constants file overriding hbar, c, G, m, g.
    #[arg(long, env = "GRAVIBOUNCE_CONSTANTS")]
    constants: Option<PathBuf>,

    /// Upper bound on ω z / c for the quadrupole-validity flag.
    #[arg(long, default_value_t = gravibounce::emission::DEFAULT_VALIDITY_THRESHOLD)]
    threshold: f64,

    /// Round values for reading instead of 12-digit machine output.
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let command = match args.command {
        Cmd::Zeros => Command::Zeros,
        Cmd::Levels => Command::Levels,
        Cmd::Qmatrix => Command::QMatrix,
        Cmd::Rates => Command::Rates,
        Cmd::Lifetimes => Command::Lifetimes,
    };
    let format = match args.format {
        Fmt::Csv => Format::Csv,
        Fmt::Json => Format::Json,
    };
    let options = Options { size: args.count, threshold: args.threshold, format, pretty: args.pretty };

    let result = match &args.constants {
        Some(path) => load_constants(path),
        None => Ok(default_constants()),
    }
    .and_then(|constants| cli::run(command, &options, &constants));

    match result {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("gravibounce: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(err) => {
            eprintln!("gravibounce: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
