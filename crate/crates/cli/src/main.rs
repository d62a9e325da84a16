//! `finsite`: command-line driver for the finite-model checks.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on
//! malformed input.

mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::input::InputError;
use crate::report::RunReport;

#[derive(Parser, Debug)]
#[command(name = "finsite", version, about = "Exhaustive finite-model checks for covers, descent and joins")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for randomized instances.
    #[arg(long, default_value_t = 20240601, global = true)]
    pub seed: u64,
    /// Size bound; its meaning depends on the subcommand.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Record per-check durations (makes reports run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite distributive lattices and congruences.
    #[command(subcommand)]
    Lattice(commands::lattice::LatticeCommand),
    /// Finite commutative rings, localization, flatness and descent.
    #[command(subcommand)]
    Ring(commands::ring::RingCommand),
    /// Presentations and covers of finite sets.
    #[command(subcommand)]
    Site(commands::site::SiteCommand),
    /// Simplicial joins and homology.
    #[command(subcommand)]
    Join(commands::join::JoinCommand),
    /// Batch runs.
    #[command(subcommand)]
    Suite(commands::suite::SuiteCommand),
}

/// Streamed records printed before the report (JSON lines mode).
pub struct Output {
    pub lines: Vec<String>,
}

fn run(cli: &Cli) -> Result<(RunReport, Output), InputError> {
    let g = &cli.global;
    match &cli.command {
        Command::Lattice(c) => commands::lattice::run(c, g),
        Command::Ring(c) => commands::ring::run(c, g),
        Command::Site(c) => commands::site::run(c, g),
        Command::Join(c) => commands::join::run(c, g),
        Command::Suite(c) => commands::suite::run(c, g),
    }
}

fn render(report: &RunReport, output: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = String::new();
            for line in &output.lines {
                s.push_str(line);
                s.push('\n');
            }
            s.push_str(&serde_json::to_string(report).expect("reports serialize"));
            s.push('\n');
            s
        }
        Format::Text => report.to_text(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, output) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = render(&report, &output, cli.global.format);
    let written = match &cli.global.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.to_string()),
            _ => Ok(()),
        },
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
