//! Matrix input: the JSON `MatrixSpec` format and inline `n σ δ τ` values.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use tritospec_core::toeplitz::Family;
use tritospec_core::{C64, ToeplitzTypeCase, TridiagonalMatrix, TriToeplitz};

use crate::CliError;

/// A complex number serialized as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx(pub [f64; 2]);

impl From<C64> for Cx {
    fn from(z: C64) -> Self {
        Cx([z.re, z.im])
    }
}

impl From<Cx> for C64 {
    fn from(c: Cx) -> Self {
        C64::new(c.0[0], c.0[1])
    }
}

pub fn cx_vec(v: &[C64]) -> Vec<Cx> {
    v.iter().map(|&z| z.into()).collect()
}

/// Input matrix description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatrixSpec {
    Toeplitz { n: usize, sigma: Cx, delta: Cx, tau: Cx },
    Type { n: usize, sigma: Cx, delta: Cx, tau: Cx, case: String },
    Tridiagonal { sub: Vec<Cx>, diag: Vec<Cx>, sup: Vec<Cx> },
}

fn parse_complex(flag: &str, s: &str) -> Result<C64, CliError> {
    let z: C64 = s.trim().parse().map_err(|_| CliError::usage(flag, format!("cannot parse '{s}' as a number")))?;
    Ok(z)
}

pub fn parse_case(s: &str) -> Result<ToeplitzTypeCase, CliError> {
    ToeplitzTypeCase::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = ToeplitzTypeCase::ALL.iter().map(|c| c.name()).collect();
        CliError::usage("--case", format!("unknown case '{s}', expected one of {}", names.join(", ")))
    })
}

impl MatrixSpec {
    /// From inline `n σ δ τ` strings; complex values are written `a+bi`.
    pub fn inline(flag: &str, values: &[String], case: Option<&str>) -> Result<Self, CliError> {
        let [n, sigma, delta, tau] = values else {
            return Err(CliError::usage(flag, "expected four values: n sigma delta tau"));
        };
        let n: usize = n.parse().map_err(|_| CliError::usage(flag, format!("order '{n}' is not a nonnegative integer")))?;
        let sigma = parse_complex(flag, sigma)?.into();
        let delta = parse_complex(flag, delta)?.into();
        let tau = parse_complex(flag, tau)?.into();
        Ok(match case {
            None => MatrixSpec::Toeplitz { n, sigma, delta, tau },
            Some(c) => MatrixSpec::Type { n, sigma, delta, tau, case: parse_case(c)?.name().to_string() },
        })
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::usage("--file", format!("invalid matrix spec: {e}")))
    }

    pub fn from_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::usage("--file", format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            MatrixSpec::Toeplitz { .. } => "toeplitz",
            MatrixSpec::Type { .. } => "type",
            MatrixSpec::Tridiagonal { .. } => "tridiagonal",
        }
    }

    /// The underlying `T` and family, when the matrix has a closed form.
    pub fn closed_form(&self) -> Result<Option<(TriToeplitz, Family)>, CliError> {
        Ok(match self {
            MatrixSpec::Toeplitz { n, sigma, delta, tau } => {
                Some((TriToeplitz::new(*n, (*sigma).into(), (*delta).into(), (*tau).into())?, Family::Toeplitz))
            }
            MatrixSpec::Type { n, sigma, delta, tau, case } => {
                let c = parse_case(case)?;
                Some((TriToeplitz::new(*n, (*sigma).into(), (*delta).into(), (*tau).into())?, Family::Type(c)))
            }
            MatrixSpec::Tridiagonal { .. } => None,
        })
    }

    /// Like [`closed_form`](Self::closed_form), but a tridiagonal spec is a usage error.
    pub fn require_closed_form(&self, command: &str) -> Result<(TriToeplitz, Family), CliError> {
        self.closed_form()?.ok_or_else(|| {
            CliError::usage("--file", format!("{command} needs a toeplitz or type matrix, got a tridiagonal one"))
        })
    }

    pub fn tridiagonal(&self) -> Result<TridiagonalMatrix, CliError> {
        match self {
            MatrixSpec::Tridiagonal { sub, diag, sup } => {
                let conv = |v: &[Cx]| v.iter().map(|&c| c.into()).collect::<Vec<C64>>();
                Ok(TridiagonalMatrix::new(conv(sub), conv(diag), conv(sup))?)
            }
            _ => {
                let (t, f) = self.require_closed_form("this command")?;
                Ok(t.family_matrix(f)?)
            }
        }
    }
}

impl fmt::Display for MatrixSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}
