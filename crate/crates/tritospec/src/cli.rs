use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::spec::MatrixSpec;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "tritospec", version, about = "Spectra, conditioning and structured perturbation of tridiagonal Toeplitz matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Matrix input: `n σ δ τ` inline (positionally or after `--toeplitz`) or a
/// JSON spec file. Complex values are written `a+bi`; a value starting with
/// `-` that is not a plain number needs the `--toeplitz` form.
#[derive(Debug, Clone, Args)]
pub struct MatrixArgs {
    #[arg(value_names = ["N", "SIGMA", "DELTA", "TAU"], num_args = 4, allow_negative_numbers = true)]
    pub values: Vec<String>,
    #[arg(long, value_names = ["N", "SIGMA", "DELTA", "TAU"], num_args = 4, allow_hyphen_values = true, conflicts_with = "values")]
    pub toeplitz: Option<Vec<String>>,
    /// Corner case for a Toeplitz-type matrix, e.g. `plus-minus`.
    #[arg(long)]
    pub case: Option<String>,
    /// JSON matrix spec.
    #[arg(long, conflicts_with_all = ["values", "toeplitz", "case"])]
    pub file: Option<PathBuf>,
}

impl MatrixArgs {
    pub fn resolve(&self) -> Result<MatrixSpec, CliError> {
        if let Some(path) = &self.file {
            return MatrixSpec::from_file(path);
        }
        if let Some(v) = &self.toeplitz {
            return MatrixSpec::inline("--toeplitz", v, self.case.as_deref());
        }
        if !self.values.is_empty() {
            return MatrixSpec::inline("N SIGMA DELTA TAU", &self.values, self.case.as_deref());
        }
        Err(CliError::usage("--file", "no matrix given; pass N SIGMA DELTA TAU, --toeplitz or --file"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SubspaceArg {
    None,
    #[value(name = "T")]
    T,
    #[value(name = "ST")]
    St,
    #[value(name = "AT")]
    At,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SampleArg {
    General,
    #[value(name = "T")]
    T,
    #[value(name = "ST")]
    St,
    #[value(name = "AT")]
    At,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Sym,
    Skew,
    Ellipse,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, closed form where available.
    Spectrum {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Also run the dense QR solver and report its deviation.
        #[arg(long)]
        dense: bool,
        /// Include unit right eigenvectors.
        #[arg(long)]
        vectors: bool,
    },
    /// Per-eigenvalue gap and condition numbers.
    Cond {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, value_enum, ignore_case = true, default_value = "none")]
        subspace: SubspaceArg,
    },
    /// Minimal eigenvalue gaps.
    Gaps {
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Structured condition numbers and worst-case structured perturbations.
    Structured {
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Structured pseudospectrum boundary.
    Pseudospectrum {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
        /// Sample count for the ellipse mode.
        #[arg(long, default_value_t = 256)]
        points: usize,
    },
    /// Nearest tridiagonal Toeplitz matrix and projection diagnostics.
    Project {
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Spectral factorization through the nearest Toeplitz matrix.
    Refine {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Compare refined and dense eigenvalues with the closed form.
        #[arg(long)]
        exact: bool,
    },
    /// Eigenvector perturbation bound checks over random perturbations.
    Lab {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[arg(long, default_value_t = 100)]
        seeds: u64,
        /// Perturbation size; defaults to 1e-6 times the minimal gap.
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, value_enum, ignore_case = true, default_value = "general")]
        subspace: SampleArg,
    },
    /// Data behind the reference figures (1-4).
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        id: u8,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// CSV instead of a JSON report.
        #[arg(long)]
        csv: bool,
        /// Figure 2: subdiagonal phase.
        #[arg(long, default_value_t = 0.7, allow_negative_numbers = true)]
        theta1: f64,
        /// Figure 2: superdiagonal phase.
        #[arg(long, default_value_t = -1.3, allow_negative_numbers = true)]
        theta2: f64,
        /// Figures 2 and 3: diagonal value, `a+bi`.
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        /// Figure 3: off-diagonal value.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        sigma: f64,
    },
}
