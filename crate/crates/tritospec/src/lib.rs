//! Command-line front end for `tritospec-core`: matrix specs, JSON run
//! reports and figure data.

use std::fmt;

pub mod cli;
pub mod commands;
pub mod figures;
pub mod report;
pub mod spec;

pub use cli::Cli;
pub use report::RunReport;
pub use spec::{Cx, MatrixSpec};

/// Exit code for bad invocations or unreadable input.
pub const EXIT_USAGE: u8 = 2;
/// Exit code for numerical failures reported by the library.
pub const EXIT_NUMERICAL: u8 = 3;

/// Environment variable overriding the default seed `0`.
pub const SEED_VAR: &str = "TRITOSPEC_SEED";

#[derive(Debug)]
pub enum CliError {
    Usage { flag: String, message: String },
    Numerical(tritospec_core::Error),
    Io(String),
}

impl CliError {
    pub fn usage(flag: &str, message: impl Into<String>) -> Self {
        CliError::Usage { flag: flag.to_string(), message: message.into() }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Numerical(_) => EXIT_NUMERICAL,
            CliError::Usage { .. } | CliError::Io(_) => EXIT_USAGE,
        }
    }
}

impl From<tritospec_core::Error> for CliError {
    fn from(e: tritospec_core::Error) -> Self {
        CliError::Numerical(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage { flag, message } => write!(f, "{flag}: {message}"),
            CliError::Numerical(e) => write!(f, "{e}"),
            CliError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

/// Seed from [`SEED_VAR`], defaulting to `0`.
pub fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::usage(SEED_VAR, format!("'{v}' is not an unsigned integer"))),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(e) => Err(CliError::usage(SEED_VAR, e.to_string())),
    }
}
