//! Data series behind the four reference figures.

use serde::{Deserialize, Serialize};
use tritospec_core::applications::{accuracy_report, naive_eigenvalues, refine_spectral_factorization};
use tritospec_core::conditioning::eigvec_condition_normal;
use tritospec_core::structured::{structured_eig_condition, Subspace};
use tritospec_core::toeplitz::{eigenvalues_toeplitz, eigenvalues_type, Family};
use tritospec_core::{c64, ToeplitzTypeCase, TridiagonalMatrix, TriToeplitz, C64};

use crate::CliError;

/// One eigenvalue of one series in figures 1 and 4.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenPoint {
    pub series: String,
    pub index: usize,
    pub re: f64,
    pub im: f64,
}

/// One condition number in figures 2 and 3.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionPoint {
    pub h: usize,
    pub kappa: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FigureData {
    Spectra { points: Vec<EigenPoint>, naive_error: f64, refined_error: f64 },
    Conditions { points: Vec<ConditionPoint> },
}

impl FigureData {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Io(format!("cannot write CSV: {e}"));
        match self {
            FigureData::Spectra { points, .. } => {
                for p in points {
                    w.serialize(p).map_err(io)?;
                }
            }
            FigureData::Conditions { points } => {
                for p in points {
                    w.serialize(p).map_err(io)?;
                }
            }
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(format!("cannot write CSV: {e}")))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }
}

/// `T = (25; 1, 0, 0.01)`.
pub fn nonnormal_example() -> TriToeplitz {
    TriToeplitz::real(25, 1.0, 0.0, 0.01).expect("valid")
}

fn sorted(mut v: Vec<C64>) -> Vec<C64> {
    v.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
    v
}

fn spectra(a: &TridiagonalMatrix, exact: Vec<C64>) -> Result<FigureData, CliError> {
    let naive = naive_eigenvalues(a)?;
    let refined = refine_spectral_factorization(a)?.values;
    let naive_error = accuracy_report(&naive, &exact)?;
    let refined_error = accuracy_report(&refined, &exact)?;
    let mut points = Vec::new();
    for (series, values) in [("exact", exact), ("naive", sorted(naive)), ("refined", sorted(refined))] {
        for (i, z) in values.into_iter().enumerate() {
            points.push(EigenPoint { series: series.to_string(), index: i + 1, re: z.re, im: z.im });
        }
    }
    Ok(FigureData::Spectra { points, naive_error, refined_error })
}

/// Exact, dense-QR and refined eigenvalues of `(25; 1, 0, 0.01)`.
pub fn figure1() -> Result<FigureData, CliError> {
    let t = nonnormal_example();
    spectra(&t.to_tridiagonal(), eigenvalues_toeplitz(&t))
}

/// `κ(x̃_h)` for `(100; e^{iθ₁}, δ, e^{iθ₂})`.
pub fn figure2(theta1: f64, theta2: f64, delta: C64) -> Result<FigureData, CliError> {
    let t = TriToeplitz::new(100, C64::from_polar(1.0, theta1), delta, C64::from_polar(1.0, theta2))?;
    let points = (1..=100)
        .map(|h| Ok(ConditionPoint { h, kappa: eigvec_condition_normal(&t, Family::Toeplitz, h)? }))
        .collect::<Result<_, CliError>>()?;
    Ok(FigureData::Conditions { points })
}

/// Symmetric structured `κ(λ_h)` for `(100; σ, δ, σ)`.
pub fn figure3(sigma: f64, delta: f64) -> Result<FigureData, CliError> {
    let t = TriToeplitz::real(100, sigma, delta, sigma)?;
    let points = (1..=100)
        .map(|h| Ok(ConditionPoint { h, kappa: structured_eig_condition(&t, h, Subspace::Symmetric)? }))
        .collect::<Result<_, CliError>>()?;
    Ok(FigureData::Conditions { points })
}

/// The same spectra for `T_{0.1,−0.1}` built on `(25; 1, 0, 0.01)`.
pub fn figure4() -> Result<FigureData, CliError> {
    let t = nonnormal_example();
    let a = t.with_corners(c64(0.1, 0.0), c64(-0.1, 0.0));
    spectra(&a, eigenvalues_type(&t, ToeplitzTypeCase::PlusMinus)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure2_symmetric_about_middle() {
        let FigureData::Conditions { points } = figure2(0.3, 2.0, c64(1.0, -1.0)).unwrap() else { panic!() };
        assert_eq!(points.len(), 100);
        for h in 0..50 {
            assert!((points[h].kappa - points[99 - h].kappa).abs() <= 1e-9 * points[h].kappa);
        }
    }

    #[test]
    fn figure1_naive_is_nonreal() {
        let FigureData::Spectra { points, naive_error, refined_error } = figure1().unwrap() else { panic!() };
        assert_eq!(points.len(), 75);
        assert!(points.iter().any(|p| p.series == "naive" && p.im.abs() > 1e-3));
        assert!(naive_error > 1e3 * refined_error);
    }
}
