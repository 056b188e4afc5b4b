//! Closed-form spectra of `T = (n; σ, δ, τ)` and its corner-modified variants.
//!
//! Branch convention: `s = √(στ)` is the principal root and the ratio roots
//! are derived from it, `r = s/τ` for right eigenvectors and `q = conj(s/σ)`
//! for left ones. Then `r² = σ/τ`, `λ_h` stays paired with `x_h` for every
//! `h`, and `y_h^H x_h` equals the real profile norm.

mod cases;
mod factorization;

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{DenseMatrix, TridiagonalMatrix};
use crate::{Error, Result, C64};

pub use cases::{Family, ToeplitzTypeCase};
pub use factorization::{spectral_factorization, spectral_factorization_type, SpectralFactorization};

/// Largest `|ln|·||` a ratio power may reach before it leaves the normal
/// `f64` range.
const LOG_LIMIT: f64 = 708.0;

/// The tridiagonal Toeplitz matrix with constant subdiagonal `σ`, diagonal
/// `δ` and superdiagonal `τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriToeplitz {
    n: usize,
    sigma: C64,
    delta: C64,
    tau: C64,
}

impl TriToeplitz {
    pub fn new(n: usize, sigma: C64, delta: C64, tau: C64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder { order: n, minimum: 1 });
        }
        if !(sigma.is_finite() && delta.is_finite() && tau.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(TriToeplitz { n, sigma, delta, tau })
    }

    pub fn real(n: usize, sigma: f64, delta: f64, tau: f64) -> Result<Self> {
        Self::new(n, C64::from(sigma), C64::from(delta), C64::from(tau))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn sigma(&self) -> C64 {
        self.sigma
    }

    pub fn delta(&self) -> C64 {
        self.delta
    }

    pub fn tau(&self) -> C64 {
        self.tau
    }

    /// `στ = 0`: the eigenvalue `δ` is defective and no closed-form basis exists.
    pub fn is_degenerate(&self) -> bool {
        self.sigma == C64::from(0.0) || self.tau == C64::from(0.0)
    }

    /// Principal `√(στ)`.
    pub fn sqrt_product(&self) -> C64 {
        (self.sigma * self.tau).sqrt()
    }

    /// `r = √(στ)/τ`, the ratio in `x_{h,k} = r^k·f_h(k)`.
    pub fn ratio_root(&self) -> Result<C64> {
        self.require_coupled()?;
        Ok(self.sqrt_product() / self.tau)
    }

    /// `q = conj(√(στ)/σ)`, the ratio in `y_{h,k} = q^k·f_h(k)`.
    pub fn left_ratio_root(&self) -> Result<C64> {
        self.require_coupled()?;
        Ok((self.sqrt_product() / self.sigma).conj())
    }

    /// `|σ/τ|`.
    pub fn modulus_ratio(&self) -> f64 {
        self.sigma.norm() / self.tau.norm()
    }

    pub fn frobenius_norm(&self) -> f64 {
        let n = self.n as f64;
        (n * self.delta.norm_sqr() + (n - 1.0) * (self.sigma.norm_sqr() + self.tau.norm_sqr())).sqrt()
    }

    pub fn to_tridiagonal(&self) -> TridiagonalMatrix {
        let n = self.n;
        TridiagonalMatrix::new(vec![self.sigma; n - 1], vec![self.delta; n], vec![self.tau; n - 1])
            .expect("lengths are consistent")
    }

    pub fn to_dense(&self) -> DenseMatrix {
        self.to_tridiagonal().to_dense()
    }

    /// `T` with first diagonal entry `δ − α` and last `δ − β`. For `n = 1`
    /// both corrections land on the single entry.
    pub fn with_corners(&self, alpha: C64, beta: C64) -> TridiagonalMatrix {
        let mut m = self.to_tridiagonal();
        let n = self.n;
        let d = m.diag_mut();
        d[0] -= alpha;
        d[n - 1] -= beta;
        m
    }

    /// The explicit matrix `T_{α,β}` of case `c`.
    pub fn type_matrix(&self, c: ToeplitzTypeCase) -> Result<TridiagonalMatrix> {
        let (alpha, beta) = self.corners(c)?;
        Ok(self.with_corners(alpha, beta))
    }

    /// `(α, β)` for case `c`.
    pub fn corners(&self, c: ToeplitzTypeCase) -> Result<(C64, C64)> {
        self.require_coupled()?;
        let s = self.sqrt_product();
        let (a, b) = c.signs();
        Ok((s * a, s * b))
    }

    /// The dense matrix of a family member.
    pub fn family_matrix(&self, family: Family) -> Result<TridiagonalMatrix> {
        match family {
            Family::Toeplitz => Ok(self.to_tridiagonal()),
            Family::Type(c) => self.type_matrix(c),
        }
    }

    pub(crate) fn require_coupled(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateCase)
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_index(&self, h: usize) -> Result<()> {
        if h == 0 || h > self.n {
            Err(Error::InvalidIndex { index: h, order: self.n })
        } else {
            Ok(())
        }
    }

    /// `λ_h` for a family member; `h` is 1-based.
    pub fn family_eigenvalue(&self, family: Family, h: usize) -> Result<C64> {
        self.check_index(h)?;
        if let Family::Type(_) = family {
            self.require_coupled()?;
        }
        Ok(self.delta + self.sqrt_product() * (2.0 * family.angle(self.n, h).cos()))
    }

    pub fn family_eigenvalues(&self, family: Family) -> Result<Vec<C64>> {
        (1..=self.n).map(|h| self.family_eigenvalue(family, h)).collect()
    }

    pub fn family_right_eigenvector(&self, family: Family, h: usize) -> Result<Vec<C64>> {
        self.check_index(h)?;
        let r = self.ratio_root()?;
        scaled_profile(r, self.n, |k| family.profile(self.n, h, k))
    }

    pub fn family_left_eigenvector(&self, family: Family, h: usize) -> Result<Vec<C64>> {
        self.check_index(h)?;
        let q = self.left_ratio_root()?;
        scaled_profile(q, self.n, |k| family.profile(self.n, h, k))
    }
}

/// `r^k` for `k = 1..=n` in log-polar form.
pub(crate) fn ratio_powers(r: C64, n: usize) -> Result<Vec<C64>> {
    ratio_powers_signed(r, n, 1.0)
}

/// `r^{±k}` for `k = 1..=n`.
pub(crate) fn ratio_powers_signed(r: C64, n: usize, sign: f64) -> Result<Vec<C64>> {
    let (modulus, arg) = r.to_polar();
    let log_mod = sign * modulus.ln();
    let arg = sign * arg;
    let peak = log_mod.abs() * n as f64;
    if !peak.is_finite() || peak > LOG_LIMIT {
        return Err(Error::ScaleOverflow { log10_magnitude: log_mod * n as f64 / core::f64::consts::LN_10 });
    }
    Ok((1..=n)
        .map(|k| {
            let k = k as f64;
            C64::from_polar((k * log_mod).exp(), k * arg)
        })
        .collect())
}

fn scaled_profile(r: C64, n: usize, f: impl Fn(usize) -> f64) -> Result<Vec<C64>> {
    let powers = ratio_powers(r, n)?;
    Ok(powers.iter().enumerate().map(|(i, p)| p * f(i + 1)).collect())
}

/// `λ_h = δ + 2√(στ)·cos(hπ/(n+1))`, `h = 1..n`. For `στ = 0` this is `δ`
/// repeated `n` times.
pub fn eigenvalues_toeplitz(t: &TriToeplitz) -> Vec<C64> {
    t.family_eigenvalues(Family::Toeplitz).expect("base eigenvalues need no coupling")
}

/// `x_{h,k} = r^k·sin(hkπ/(n+1))`, unnormalized.
pub fn right_eigenvector(t: &TriToeplitz, h: usize) -> Result<Vec<C64>> {
    t.family_right_eigenvector(Family::Toeplitz, h)
}

/// `y_{h,k} = q^k·sin(hkπ/(n+1))`, unnormalized.
pub fn left_eigenvector(t: &TriToeplitz, h: usize) -> Result<Vec<C64>> {
    t.family_left_eigenvector(Family::Toeplitz, h)
}

/// Right and left eigenvectors of the single eigenvalue `δ` when `στ = 0`.
///
/// `σ = 0` gives `(e₁, e_n)`, `τ = 0` gives `(e_n, e₁)`, and the diagonal
/// case returns `(e₁, e₁)`.
pub fn degenerate_eigenvectors(t: &TriToeplitz) -> Result<(Vec<C64>, Vec<C64>)> {
    if !t.is_degenerate() {
        return Err(Error::NotDegenerate);
    }
    let n = t.order();
    let unit = |i: usize| {
        let mut e = vec![C64::from(0.0); n];
        e[i] = C64::from(1.0);
        e
    };
    let zero = C64::from(0.0);
    Ok(match (t.sigma() == zero, t.tau() == zero) {
        (true, false) => (unit(0), unit(n - 1)),
        (false, true) => (unit(n - 1), unit(0)),
        _ => (unit(0), unit(0)),
    })
}

pub fn eigenvalues_type(t: &TriToeplitz, c: ToeplitzTypeCase) -> Result<Vec<C64>> {
    t.family_eigenvalues(Family::Type(c))
}

pub fn right_eigenvector_type(t: &TriToeplitz, c: ToeplitzTypeCase, h: usize) -> Result<Vec<C64>> {
    t.family_right_eigenvector(Family::Type(c), h)
}

pub fn left_eigenvector_type(t: &TriToeplitz, c: ToeplitzTypeCase, h: usize) -> Result<Vec<C64>> {
    t.family_left_eigenvector(Family::Type(c), h)
}

const NORMAL_TOL: f64 = 1e-12;

/// `||σ| − |τ|| ≤ 1e-12·max(|σ|, |τ|)`.
pub fn is_normal(t: &TriToeplitz) -> bool {
    let (a, b) = (t.sigma().norm(), t.tau().norm());
    (a - b).abs() <= NORMAL_TOL * a.max(b)
}

/// Normality of `T_{α,β}`: needs `|σ| = |τ| > 0`.
pub fn is_normal_type(t: &TriToeplitz, _c: ToeplitzTypeCase) -> bool {
    !t.is_degenerate() && is_normal(t)
}

/// Similarity by `diag(1, v, …, v^{n−1})` with `v = √(|τ|/|σ|)`, giving
/// `T' = (n; vσ, δ, τ/v)` with `|vσ| = |τ/v|`.
pub fn diagonal_balance(t: &TriToeplitz) -> Result<(C64, TriToeplitz)> {
    t.require_coupled()?;
    let v = (t.tau().norm() / t.sigma().norm()).sqrt();
    let balanced = TriToeplitz::new(t.order(), t.sigma() * v, t.delta(), t.tau() / v)?;
    Ok((C64::from(v), balanced))
}
