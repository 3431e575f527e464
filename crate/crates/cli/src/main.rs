//! Command-line interface for the Racah-double oscillator model: emit
//! matrix entries, spectra and wavefunction tables, verify the exact
//! spectral claims, and reproduce the wavefunction figure.
//!
//! Exit codes: 0 success, 1 invalid arguments, 2 verification failure.

mod commands;
mod fmt;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use racosc::numerics::{HalfInteger, Rational};

use commands::{CliError, Format};

#[derive(Parser)]
#[command(name = "racosc", version, about = "Finite oscillator model from special Racah doubles", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Float,
    Rational,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the off-diagonal entries M_0..M_{d-1} of the two-diagonal matrix.
    Matrix {
        /// Matrix size is d + 1.
        #[arg(long)]
        d: usize,
        /// Deformation parameter, an exact rational such as 1/2, 2 or 1e-6.
        #[arg(long, value_parser = fmt::parse_rational)]
        c: Rational,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Emit the exact spectrum next to the bisection oracle's values.
    Spectrum {
        /// Matrix size is d + 1; the spectrum is -d, -d+2, ..., d.
        #[arg(long, conflicts_with = "j")]
        d: Option<usize>,
        /// Representation label; the position spectrum is -j, ..., j.
        #[arg(long)]
        j: Option<HalfInteger>,
        /// Deformation parameter (the spectra do not depend on it).
        #[arg(long, value_parser = fmt::parse_rational, default_value = "2")]
        c: Rational,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify M U = U D, orthogonality and the integer spectrum; exit 2 on failure.
    Verify {
        /// Matrix size is d + 1.
        #[arg(long)]
        d: usize,
        /// Deformation parameter, an exact rational.
        #[arg(long, value_parser = fmt::parse_rational)]
        c: Rational,
        /// Largest acceptable residual.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// `rational` adds the exact characteristic-polynomial certificate.
        #[arg(long, value_enum, default_value = "float")]
        backend: BackendArg,
        /// Write the report to this file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit position wavefunction values over the grid q = -j..j.
    Wavefunction {
        /// Representation label: integer or half-integer, e.g. 33/2 or 16.5.
        #[arg(long)]
        j: HalfInteger,
        /// Deformation parameter, an exact rational.
        #[arg(long, value_parser = fmt::parse_rational)]
        c: Rational,
        /// Comma-separated level numbers; all levels when omitted.
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<usize>>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reproduce the wavefunction figure: one CSV per c value plus one SVG.
    Figure1 {
        /// Representation label.
        #[arg(long, default_value = "33/2")]
        j: HalfInteger,
        /// Levels plotted left to right.
        #[arg(long, value_delimiter = ',', default_values_t = [0usize, 1, 2])]
        levels: Vec<usize>,
        /// Deformation values plotted top to bottom.
        #[arg(long = "c-values", value_parser = fmt::parse_rational, value_delimiter = ',')]
        c_values: Option<Vec<Rational>>,
        /// Directory receiving the CSV and SVG files.
        #[arg(long, default_value = "figure1")]
        output: PathBuf,
    },
}

fn run(cli: Cli) -> commands::CmdResult {
    match cli.command {
        Command::Matrix { d, c, out } => {
            commands::cmd_matrix(d, &c, out.format.into(), out.output.as_deref())
        }
        Command::Spectrum { d, j, c, out } => {
            commands::cmd_spectrum(d, j, &c, out.format.into(), out.output.as_deref())
        }
        Command::Verify { d, c, tol, backend, output } => commands::cmd_verify(
            d,
            &c,
            tol,
            matches!(backend, BackendArg::Rational),
            output.as_deref(),
        ),
        Command::Wavefunction { j, c, levels, out } => {
            commands::cmd_wavefunction(j, &c, levels, out.format.into(), out.output.as_deref())
        }
        Command::Figure1 { j, levels, c_values, output } => {
            let c_values = c_values.unwrap_or_else(commands::default_figure_c_values);
            commands::cmd_figure1(j, &levels, &c_values, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(2)
        }
    }
}
