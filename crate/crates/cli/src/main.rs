//! `rasa`: evaluate ultraspherical ratios, check bounds, certify convexity
//! of the Bernstein sum of squares, and export comparison tables.
//!
//! Exit status: 0 on success, 1 when a check that must hold fails or a
//! numeric step fails, 2 on invalid arguments.

// `!(x >= a)` is used on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rasa_core::bounds::{BoundId, Mode};

use args::{Degrees, Number};
use table::Format;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] rasa_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use rasa_core::Error as E;
        match self {
            Self::Usage(_) => 2,
            Self::Core(
                E::LambdaOutOfRange(_)
                | E::DegreeTooSmall { .. }
                | E::AbscissaBelowOne(_)
                | E::ConjugateOutOfRange(_)
                | E::Parse(_),
            ) => 2,
            Self::Core(_) | Self::Io { .. } => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "rasa",
    version,
    about = "Ultraspherical ratio bounds and exact convexity certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Float => Mode::Float,
        }
    }
}

#[derive(Args)]
struct Output {
    /// Output format [default: pretty, csv for export]
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// p_n(x), p_n'(x) and u_n(x) by every method
    Eval {
        /// Degree N or range a..b
        #[arg(long)]
        n: Degrees,
        /// λ as p/q (exact) or decimal (float)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Number,
        /// Abscissae x >= 1, comma separated
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<Number>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[command(flatten)]
        output: Output,
    },
    /// Check bounds for u_n against the ratio on a grid
    Bounds {
        /// Bound ids such as upper_1_3; default: every bound valid for λ
        #[arg(long, value_delimiter = ',', value_parser = parse_bound)]
        spec: Vec<BoundId>,
        #[arg(long)]
        n: Degrees,
        /// One or more λ values, comma separated
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        lambda: Vec<Number>,
        /// Exact by default when every λ is rational
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Grid density: t = j/(2m), j = 0..m
        #[arg(long, default_value_t = rasa_core::rasa::DEFAULT_GRID_DENSITY)]
        m: usize,
        /// Extra abscissae (float mode only), added to x = 1e3 and 1e6
        #[arg(long, value_delimiter = ',')]
        extra_x: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Exact convexity certificates for F_n
    Certify {
        #[arg(long)]
        n: Degrees,
        #[command(flatten)]
        output: Output,
    },
    /// Table of u_n, every valid bound and the tightest ones
    Export {
        #[arg(long)]
        n: Degrees,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Number,
        /// Exact by default when λ is rational
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, default_value_t = rasa_core::rasa::DEFAULT_GRID_DENSITY)]
        m: usize,
        /// Extra abscissae appended after the grid (float mode only)
        #[arg(long, value_delimiter = ',')]
        extra_x: Vec<f64>,
        #[command(flatten)]
        output: Output,
    },
    /// Zeros of p_n in (-1, 1)
    Zeros {
        #[arg(long)]
        n: Degrees,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Number,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Bracket width [default: 1e-30 exact, 1e-14 float]
        #[arg(long)]
        width: Option<Number>,
        #[command(flatten)]
        output: Output,
    },
}

fn parse_bound(s: &str) -> Result<BoundId, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = BoundId::ALL.iter().map(|b| b.name()).collect();
        format!("unknown bound {s:?}; expected one of {}", names.join(", "))
    })
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (outcome, output) = match cli.command {
        Command::Eval {
            n,
            lambda,
            x,
            mode,
            output,
        } => (
            commands::eval(
                &n,
                &lambda,
                &x,
                mode.map(Into::into),
                output.format.unwrap_or(Format::Pretty),
            )?,
            output,
        ),
        Command::Bounds {
            spec,
            n,
            lambda,
            mode,
            m,
            extra_x,
            output,
        } => {
            let a = commands::BoundsArgs {
                specs: &spec,
                n: &n,
                lambdas: &lambda,
                mode: mode.map(Into::into),
                m,
                extra_x: &extra_x,
            };
            (
                commands::bounds(&a, output.format.unwrap_or(Format::Pretty))?,
                output,
            )
        }
        Command::Certify { n, output } => (
            commands::certify(&n, output.format.unwrap_or(Format::Pretty))?,
            output,
        ),
        Command::Export {
            n,
            lambda,
            mode,
            m,
            extra_x,
            output,
        } => (
            commands::export(
                &n,
                &lambda,
                mode.map(Into::into),
                m,
                &extra_x,
                output.format.unwrap_or(Format::Csv),
            )?,
            output,
        ),
        Command::Zeros {
            n,
            lambda,
            mode,
            width,
            output,
        } => (
            commands::zeros_cmd(
                &n,
                &lambda,
                mode.map(Into::into),
                width.as_ref(),
                output.format.unwrap_or(Format::Pretty),
            )?,
            output,
        ),
    };
    match output.out {
        Some(path) => {
            std::fs::write(&path, &outcome.text).map_err(|source| CliError::Io { path, source })?
        }
        None => print!("{}", outcome.text),
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
