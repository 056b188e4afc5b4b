use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use super::{ratio_powers, ratio_powers_signed, Family, ToeplitzTypeCase, TriToeplitz};
use crate::matrix::{DenseMatrix, TridiagonalMatrix};
use crate::{Error, Result, C64};

/// `A = X Λ X^{-1}` for a family member, with `X = D·S`,
/// `D = diag(r, r², …, rⁿ)` and `S` the real trigonometric profile matrix.
///
/// The profiles are orthogonal, `SᵀS = N = diag(‖f_h‖²)`, so
/// `X^{-1} = N^{-1}·Sᵀ·D^{-1}` is applied without any solve. For the base
/// family `S` is symmetric and `N = ((n+1)/2)·I`.
#[derive(Debug, Clone)]
pub struct SpectralFactorization {
    family: Family,
    values: Vec<C64>,
    right: DenseMatrix,
    left: DenseMatrix,
    inv_scale: f64,
    ratio_root: C64,
    profile: Vec<f64>,
    norms: Vec<f64>,
    inv_powers: Vec<C64>,
}

pub fn spectral_factorization(t: &TriToeplitz) -> Result<SpectralFactorization> {
    SpectralFactorization::new(t, Family::Toeplitz)
}

pub fn spectral_factorization_type(t: &TriToeplitz, c: ToeplitzTypeCase) -> Result<SpectralFactorization> {
    SpectralFactorization::new(t, Family::Type(c))
}

impl SpectralFactorization {
    pub fn new(t: &TriToeplitz, family: Family) -> Result<Self> {
        let n = t.order();
        let r = t.ratio_root()?;
        let q = t.left_ratio_root()?;
        let powers = ratio_powers(r, n)?;
        let inv_powers = ratio_powers_signed(r, n, -1.0)?;
        let left_powers = ratio_powers(q, n)?;
        let mut profile = Vec::with_capacity(n * n);
        for k in 1..=n {
            for h in 1..=n {
                profile.push(family.profile(n, h, k));
            }
        }
        let right = DenseMatrix::from_fn(n, n, |k, h| powers[k] * profile[k * n + h]);
        let left = DenseMatrix::from_fn(n, n, |k, h| left_powers[k] * profile[k * n + h]);
        Ok(SpectralFactorization {
            family,
            values: t.family_eigenvalues(family)?,
            right,
            left,
            inv_scale: 2.0 / (n as f64 + 1.0),
            ratio_root: r,
            profile,
            norms: (1..=n).map(|h| family.profile_norm_sq(n, h)).collect(),
            inv_powers,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// `λ_h` in index order `h = 1..n`.
    pub fn values(&self) -> &[C64] {
        &self.values
    }

    /// Columns are the unnormalized right eigenvectors `x_h`.
    pub fn right(&self) -> &DenseMatrix {
        &self.right
    }

    /// Columns are the unnormalized left eigenvectors `y_h`.
    pub fn left(&self) -> &DenseMatrix {
        &self.left
    }

    /// `2/(n+1)`, the scale in `S² = ((n+1)/2)·I` for the base family.
    pub fn inv_scale(&self) -> f64 {
        self.inv_scale
    }

    pub fn ratio_root(&self) -> C64 {
        self.ratio_root
    }

    /// `S_{k,h} = f_h(k)`.
    pub fn profile_matrix(&self) -> DenseMatrix {
        let n = self.order();
        DenseMatrix::from_fn(n, n, |k, h| C64::from(self.profile[k * n + h]))
    }

    /// `log10 κ₂(D) = (n−1)·|log10 |r||`.
    pub fn log10_condition_d(&self) -> f64 {
        (self.order() as f64 - 1.0) * self.ratio_root.norm().log10().abs()
    }

    /// `X^{-1} v`.
    pub fn apply_inverse(&self, v: &[C64]) -> Result<Vec<C64>> {
        let n = self.order();
        if v.len() != n {
            return Err(Error::LengthMismatch { left: n, right: v.len() });
        }
        let w: Vec<C64> = v.iter().zip(&self.inv_powers).map(|(a, p)| a * p).collect();
        Ok((0..n)
            .map(|h| {
                let s: C64 = (0..n).map(|k| w[k] * self.profile[k * n + h]).sum();
                s / self.norms[h]
            })
            .collect())
    }

    /// `X^{-1}` as a dense matrix.
    pub fn inverse(&self) -> DenseMatrix {
        let n = self.order();
        DenseMatrix::from_fn(n, n, |h, k| self.inv_powers[k] * (self.profile[k * n + h] / self.norms[h]))
    }

    /// `X^{-1} M X` for a tridiagonal `M`.
    ///
    /// `D^{-1} M D` only rescales the off-diagonals by `r^{∓1}`, so no power of
    /// `r` beyond the first enters and the result is as accurate as the
    /// trigonometric products.
    pub fn transform(&self, m: &TridiagonalMatrix) -> Result<DenseMatrix> {
        let n = self.order();
        if m.order() != n {
            return Err(Error::DimensionMismatch { expected: (n, n), found: (m.order(), m.order()) });
        }
        let r = self.ratio_root;
        let rinv = r.inv();
        // K·S with K = D^{-1} M D.
        let mut ks = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for h in 0..n {
                let mut acc = m.diag()[i] * self.profile[i * n + h];
                if i > 0 {
                    acc += m.sub()[i - 1] * rinv * self.profile[(i - 1) * n + h];
                }
                if i + 1 < n {
                    acc += m.sup()[i] * r * self.profile[(i + 1) * n + h];
                }
                ks[(i, h)] = acc;
            }
        }
        Ok(DenseMatrix::from_fn(n, n, |h, j| {
            let s: C64 = (0..n).map(|k| ks[(k, j)] * self.profile[k * n + h]).sum();
            s / self.norms[h]
        }))
    }
}
