//! `qdmc`: error-exponent reports, rate sweeps and code-oracle experiments
//! for quantum channels described by their induced Pauli error distribution.
//!
//! Exit codes: 0 success, 2 bad input, 3 I/O failure, 4 instance too large.

mod analyze;
mod fmt;
mod oracle;
mod sweep;

use std::fmt as stdfmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qdmc_core::channel::ChannelDist;

#[derive(Parser)]
#[command(
    name = "qdmc",
    version,
    about = "Reliability bounds for quantum discrete memoryless channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print entropy, capacity bound, characteristic rates and channel predicates.
    Analyze {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate E_r, E_x and their maximum over a uniform grid of quantum rates.
    Sweep(sweep::SweepArgs),
    /// Random dual-containing code experiments.
    #[command(subcommand)]
    Oracle(oracle::OracleCommand),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChannelKind {
    Depolarizing,
    Custom,
}

#[derive(Args, Clone, Debug)]
pub struct ChannelArgs {
    #[arg(long, value_enum, default_value = "depolarizing")]
    pub channel: ChannelKind,
    /// Prime local dimension.
    #[arg(long, default_value_t = 2)]
    pub d: u32,
    /// Depolarizing probability.
    #[arg(long)]
    pub p: Option<f64>,
    /// JSON file `{"d": <prime>, "w": [...]}` for `--channel custom`.
    #[arg(long)]
    pub dist: Option<PathBuf>,
}

impl ChannelArgs {
    pub fn resolve(&self) -> Result<ChannelDist, Failure> {
        match self.channel {
            ChannelKind::Depolarizing => {
                let p = self
                    .p
                    .ok_or_else(|| Failure::Input("--channel depolarizing needs --p".into()))?;
                Ok(ChannelDist::depolarizing(self.d, p)?)
            }
            ChannelKind::Custom => {
                let path = self
                    .dist
                    .as_ref()
                    .ok_or_else(|| Failure::Input("--channel custom needs --dist <path>".into()))?;
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Failure::Input(format!("cannot read channel file {}: {e}", path.display()))
                })?;
                ChannelDist::from_json(&text)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
            }
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Io(String),
    TooLarge(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Io(_) => 3,
            Failure::TooLarge(_) => 4,
        }
    }
}

impl stdfmt::Display for Failure {
    fn fmt(&self, f: &mut stdfmt::Formatter<'_>) -> stdfmt::Result {
        match self {
            Failure::Input(m) | Failure::Io(m) | Failure::TooLarge(m) => f.write_str(m),
        }
    }
}

impl From<qdmc_core::Error> for Failure {
    fn from(e: qdmc_core::Error) -> Self {
        match e {
            qdmc_core::Error::TooLarge { .. } => Failure::TooLarge(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

/// Writes `text` to `out`, or to stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    use std::io::Write;
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze { channel, out } => {
            let w = channel.resolve()?;
            emit(&analyze::report(&channel, &w), out.as_deref())
        }
        Command::Sweep(args) => sweep::run(&args),
        Command::Oracle(cmd) => oracle::run(&cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qdmc: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
