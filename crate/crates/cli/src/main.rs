//! `polyloc`: zero bounds and isolation regions for complex polynomials.
//!
//! Exit codes: 0 success, 1 internal error, 2 usage or input error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polyloc::Polynomial;

mod commands;
mod plot;

#[derive(Parser)]
#[command(name = "polyloc", version, about = "Bounds and isolation regions for polynomial zeros")]
struct Cli {
    /// Convergence tolerance of the root oracle.
    #[arg(long, global = true, default_value_t = polyloc::oracle::DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper (or lower) bounds on the moduli of the zeros.
    Bounds {
        #[arg(long, value_enum, default_value_t = BoundArg::All)]
        method: BoundArg,
        /// JSON file `{"coeffs": [[re, im], ...]}`, leading coefficient first.
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        lower: bool,
    },
    /// Isolation regions for the largest zeros.
    Isolate {
        #[arg(long, value_enum, default_value_t = IsolateArg::All)]
        method: IsolateArg,
        #[arg(long)]
        input: PathBuf,
        /// Apply the tangency enhancement to a tgp case a2 report.
        #[arg(long)]
        enhance: bool,
        /// Index for the Pellet methods; every index is tried when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Statistics over a random test set.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        set: u8,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only this table; both when omitted.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        table: Option<u8>,
    },
    /// Draw isolation regions and zeros as SVG.
    Plot {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = PlotMethod::Tgp)]
        method: PlotMethod,
        /// `squared` draws discs around squared zeros, `z` their Cassini preimages.
        #[arg(long, value_enum, default_value_t = PlotPlane::Squared)]
        plane: PlotPlane,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    Cauchy,
    MatrixCauchy,
    TgcA,
    TgcB,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IsolateArg {
    Pellet,
    MatrixPellet,
    Tgp,
    Tmgp,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotMethod {
    Tgp,
    Tmgp,
    MatrixPellet,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotPlane {
    Squared,
    Z,
}

/// A failure with its exit code.
pub enum Failure {
    Input(anyhow::Error),
    Internal(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Internal(_) => 1,
        }
    }
}

impl From<polyloc::Error> for Failure {
    fn from(e: polyloc::Error) -> Self {
        match e {
            polyloc::Error::SoundnessViolation(_) => Failure::Internal(e.into()),
            _ => Failure::Input(e.into()),
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

fn read_polynomial(path: &Path) -> CliResult<Polynomial> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(anyhow::anyhow!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(anyhow::anyhow!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<()> {
    if !(cli.tol > 0.0 && cli.tol < 1.0) {
        return Err(Failure::Input(anyhow::anyhow!("--tol must lie in (0, 1), got {}", cli.tol)));
    }
    let json = match cli.command {
        Command::Bounds { method, input, lower } => {
            let p = read_polynomial(&input)?;
            commands::bounds(&p, method, lower, cli.tol)?
        }
        Command::Isolate { method, input, enhance, k } => {
            let p = read_polynomial(&input)?;
            commands::isolate(&p, method, enhance, k, cli.tol)?
        }
        Command::Bench { set, count, seed, table } => commands::bench(set, count, seed, table)?,
        Command::Plot { input, out, method, plane } => {
            let p = read_polynomial(&input)?;
            let svg = plot::render(&p, method, plane, cli.tol)?;
            std::fs::write(&out, svg)
                .map_err(|e| Failure::Input(anyhow::anyhow!("cannot write {}: {e}", out.display())))?;
            return Ok(());
        }
    };
    println!("{json}");
    Ok(())
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Input(e) | Failure::Internal(e)) = &f;
            eprintln!("error: {e:#}");
            ExitCode::from(f.code())
        }
    }
}
