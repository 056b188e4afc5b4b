//! Wilkinson perturbations, projections onto the Toeplitz structure
//! subspaces, structured condition numbers and pseudospectra.
//!
//! The subspaces are `Toeplitz` (all tridiagonal Toeplitz matrices),
//! `Symmetric` (real symmetric ones) and `Skew` (real shifted
//! skew-symmetric ones, `σ = −τ`). The two real subspaces are only
//! real-linear, so their projections use `⟨A, B⟩ = Re trace(B^H A)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::conditioning::{eig_condition, real_spread, require_hermitian, safe_ratio, separation_excluding};
use crate::matrix::{dotc, norm2, normalized, DenseMatrix, TridiagonalMatrix};
use crate::toeplitz::{Family, TriToeplitz};
use crate::{Error, Result, C64};

/// A structure subspace of tridiagonal Toeplitz matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subspace {
    Toeplitz,
    Symmetric,
    Skew,
}

impl Subspace {
    pub const ALL: [Subspace; 3] = [Subspace::Toeplitz, Subspace::Symmetric, Subspace::Skew];

    /// Short tag: `T`, `ST` or `AT`.
    pub fn tag(self) -> &'static str {
        match self {
            Subspace::Toeplitz => "T",
            Subspace::Symmetric => "ST",
            Subspace::Skew => "AT",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|x| x.tag() == s)
    }

    /// Whether `t` lies in the subspace, up to `1e-12·‖T‖_F`.
    pub fn contains(self, t: &TriToeplitz) -> bool {
        let tol = 1e-12 * t.frobenius_norm();
        let real = |z: C64| z.im.abs() <= tol;
        match self {
            Subspace::Toeplitz => true,
            Subspace::Symmetric => {
                real(t.sigma()) && real(t.tau()) && real(t.delta()) && (t.sigma() - t.tau()).norm() <= tol
            }
            Subspace::Skew => {
                real(t.sigma()) && real(t.tau()) && real(t.delta()) && (t.sigma() + t.tau()).norm() <= tol
            }
        }
    }

    fn require(self, t: &TriToeplitz) -> Result<()> {
        if self.contains(t) {
            Ok(())
        } else {
            Err(Error::SubspaceMismatch)
        }
    }
}

/// The rank-one perturbation `W_h = ỹ_h x̃_h^H` built from unit eigenvectors.
#[derive(Debug, Clone)]
pub struct WilkinsonPerturbation {
    pub h: usize,
    pub w: DenseMatrix,
    /// Unit right eigenvector `x̃_h`.
    pub right: Vec<C64>,
    /// Unit left eigenvector `ỹ_h`.
    pub left: Vec<C64>,
}

pub fn wilkinson(t: &TriToeplitz, h: usize) -> Result<WilkinsonPerturbation> {
    let right = normalized(&t.family_right_eigenvector(Family::Toeplitz, h)?);
    let left = normalized(&t.family_left_eigenvector(Family::Toeplitz, h)?);
    let n = t.order();
    let w = DenseMatrix::from_fn(n, n, |i, j| left[i] * right[j].conj());
    Ok(WilkinsonPerturbation { h, w, right, left })
}

/// The orthogonal projection of a matrix onto a structure subspace, stored
/// by its three diagonal values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuredProjection {
    pub subspace: Subspace,
    pub n: usize,
    pub sigma_h: C64,
    pub delta_h: C64,
    pub tau_h: C64,
    pub frobenius_norm: f64,
}

impl StructuredProjection {
    fn new(subspace: Subspace, n: usize, sigma_h: C64, delta_h: C64, tau_h: C64) -> Self {
        let nf = n as f64;
        let frobenius_norm =
            (nf * delta_h.norm_sqr() + (nf - 1.0) * (sigma_h.norm_sqr() + tau_h.norm_sqr())).sqrt();
        StructuredProjection { subspace, n, sigma_h, delta_h, tau_h, frobenius_norm }
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.subspace, self.n, self.sigma_h * s, self.delta_h * s, self.tau_h * s)
    }

    pub fn to_toeplitz(&self) -> TriToeplitz {
        TriToeplitz::new(self.n, self.sigma_h, self.delta_h, self.tau_h).expect("finite projection")
    }

    pub fn to_tridiagonal(&self) -> TridiagonalMatrix {
        self.to_toeplitz().to_tridiagonal()
    }

    pub fn to_dense(&self) -> DenseMatrix {
        self.to_toeplitz().to_dense()
    }
}

fn mean(values: impl Iterator<Item = C64>, count: usize) -> C64 {
    if count == 0 {
        C64::from(0.0)
    } else {
        values.sum::<C64>() / count as f64
    }
}

/// Orthogonal projection of a square `w` onto `s`.
pub fn project_subspace(w: &DenseMatrix, s: Subspace) -> Result<StructuredProjection> {
    let n = w.rows();
    if !w.is_square() || n == 0 {
        return Err(Error::DimensionMismatch { expected: (n, n), found: (w.rows(), w.cols()) });
    }
    let diag = mean((0..n).map(|i| w[(i, i)]), n);
    let sub = mean((1..n).map(|i| w[(i, i - 1)]), n - 1);
    let sup = mean((1..n).map(|i| w[(i - 1, i)]), n - 1);
    let re = |z: C64| C64::from(z.re);
    Ok(match s {
        Subspace::Toeplitz => StructuredProjection::new(s, n, sub, diag, sup),
        Subspace::Symmetric => {
            let a = (sub.re + sup.re) / 2.0;
            StructuredProjection::new(s, n, C64::from(a), re(diag), C64::from(a))
        }
        Subspace::Skew => {
            let a = (sub.re - sup.re) / 2.0;
            StructuredProjection::new(s, n, C64::from(a), re(diag), C64::from(-a))
        }
    })
}

fn cos_angle(n: usize, h: usize) -> f64 {
    (h as f64 * PI / (n as f64 + 1.0)).cos()
}

/// Structured condition number of `λ_h` with respect to perturbations in `s`.
pub fn structured_eig_condition(t: &TriToeplitz, h: usize, s: Subspace) -> Result<f64> {
    t.check_index(h)?;
    s.require(t)?;
    let n = t.order();
    let nf = n as f64;
    if s == Subspace::Skew {
        return Ok(1.0 / nf.sqrt());
    }
    if n == 1 {
        return Ok(1.0);
    }
    let c2 = cos_angle(n, h).powi(2);
    let weight = match s {
        Subspace::Toeplitz => {
            t.require_coupled()?;
            let rho = t.modulus_ratio();
            rho + rho.recip()
        }
        _ => 2.0,
    };
    Ok((1.0 / nf + weight * c2 / (nf - 1.0)).sqrt())
}

/// `κ(λ_h)·‖W_h|_s‖_F`, evaluated by building and projecting `W_h`.
pub fn structured_eig_condition_projected(t: &TriToeplitz, h: usize, s: Subspace) -> Result<f64> {
    s.require(t)?;
    let w = wilkinson(t, h)?;
    Ok(eig_condition(t, Family::Toeplitz, h)? * project_subspace(&w.w, s)?.frobenius_norm)
}

/// The unit structured direction `W_h|_s / ‖W_h|_s‖_F`.
pub fn worst_case_projection(t: &TriToeplitz, h: usize, s: Subspace) -> Result<StructuredProjection> {
    s.require(t)?;
    let p = project_subspace(&wilkinson(t, h)?.w, s)?;
    if p.frobenius_norm <= 1e-14 {
        return Err(Error::ZeroProjection);
    }
    Ok(p.scaled(1.0 / p.frobenius_norm))
}

/// Unit-Frobenius structured perturbation of maximal first-order drift of `λ_h`.
pub fn worst_case_perturbation(t: &TriToeplitz, h: usize, s: Subspace) -> Result<DenseMatrix> {
    Ok(worst_case_projection(t, h, s)?.to_dense())
}

/// `|ỹ_h^H E x̃_h| / |ỹ_h^H x̃_h|`.
pub fn eig_drift_first_order(t: &TriToeplitz, h: usize, e: &DenseMatrix) -> Result<f64> {
    let n = t.order();
    if e.rows() != n || e.cols() != n {
        return Err(Error::DimensionMismatch { expected: (n, n), found: (e.rows(), e.cols()) });
    }
    let w = wilkinson(t, h)?;
    Ok(e.bilinear(&w.left, &w.right).norm() / dotc(&w.left, &w.right).norm())
}

/// `λ_j^{±ε}` for real symmetric `T` perturbed by `±ε` times the unit
/// symmetric worst case; `eps_sign` picks the sign.
pub fn pseudoeigenvalue_sym(t: &TriToeplitz, j: usize, eps_sign: f64, eps: f64) -> Result<f64> {
    t.check_index(j)?;
    Subspace::Symmetric.require(t)?;
    let n = t.order();
    let kappa = structured_eig_condition(t, j, Subspace::Symmetric)?;
    let nf = n as f64;
    let c = cos_angle(n, j);
    let s = eps_sign.signum() * eps;
    let (delta_hat, sigma_hat) = if n == 1 { (1.0, 0.0) } else { (1.0 / (nf * kappa), c / ((nf - 1.0) * kappa)) };
    Ok(t.delta().re + s * delta_hat + 2.0 * (t.sigma().re + s * sigma_hat) * c)
}

/// `λ_h^{±ε} = δ ± ε/√n + 2i|σ|cos(hπ/(n+1))` for real shifted skew-symmetric `T`.
pub fn pseudoeigenvalue_skew(t: &TriToeplitz, h: usize, eps_sign: f64, eps: f64) -> Result<C64> {
    t.check_index(h)?;
    Subspace::Skew.require(t)?;
    let n = t.order();
    let shift = eps_sign.signum() * eps / (n as f64).sqrt();
    Ok(C64::new(t.delta().re + shift, 2.0 * t.sigma().norm() * cos_angle(n, h)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PseudospectrumMode {
    Symmetric,
    Skew,
    /// Sample the curve `τe^{iθ} + δ + σe^{−iθ}` at this many points.
    Ellipse { points: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum PseudospectrumBoundary {
    /// Real intervals `[lo, hi]`, one per eigenvalue.
    Intervals(Vec<[f64; 2]>),
    /// Horizontal segments `[left, right]` through each eigenvalue.
    Segments(Vec<[C64; 2]>),
    /// Points on the symbol curve.
    Ellipse(Vec<C64>),
}

pub fn structured_pseudospectrum(t: &TriToeplitz, eps: f64, mode: PseudospectrumMode) -> Result<PseudospectrumBoundary> {
    let n = t.order();
    Ok(match mode {
        PseudospectrumMode::Symmetric => {
            let mut out = Vec::with_capacity(n);
            for h in 1..=n {
                let a = pseudoeigenvalue_sym(t, h, -1.0, eps)?;
                let b = pseudoeigenvalue_sym(t, h, 1.0, eps)?;
                out.push([a.min(b), a.max(b)]);
            }
            PseudospectrumBoundary::Intervals(out)
        }
        PseudospectrumMode::Skew => {
            let mut out = Vec::with_capacity(n);
            for h in 1..=n {
                out.push([pseudoeigenvalue_skew(t, h, -1.0, eps)?, pseudoeigenvalue_skew(t, h, 1.0, eps)?]);
            }
            PseudospectrumBoundary::Segments(out)
        }
        PseudospectrumMode::Ellipse { points } => PseudospectrumBoundary::Ellipse(
            (0..points)
                .map(|j| {
                    let theta = 2.0 * PI * j as f64 / points as f64;
                    let z = C64::from_polar(1.0, theta);
                    t.tau() * z + t.delta() + t.sigma() * z.conj()
                })
                .collect(),
        ),
    })
}

/// `|x̃_h^H x̃_h^ε|` between the unit eigenvectors of `T` and `T_eps`.
pub fn cos_theta_structured(t: &TriToeplitz, t_eps: &TriToeplitz, h: usize) -> Result<f64> {
    if t.order() != t_eps.order() {
        let (a, b) = (t.order(), t_eps.order());
        return Err(Error::DimensionMismatch { expected: (a, a), found: (b, b) });
    }
    let x = normalized(&t.family_right_eigenvector(Family::Toeplitz, h)?);
    let xe = normalized(&t_eps.family_right_eigenvector(Family::Toeplitz, h)?);
    Ok(dotc(&x, &xe).norm().min(1.0))
}

/// Rayleigh quotient of `T` at the eigenvector of a Hermitian structured
/// perturbation with subdiagonal `σ^ε`, and the angle bounds around it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuredRayleigh {
    pub lambda_tilde: f64,
    /// `‖T x^ε − λ̃ x^ε‖₂` for the unnormalized `x^ε`, `‖x^ε‖² = (n+1)/2`.
    pub residual: f64,
    /// Lower bound from the actual spread `λ_max − λ_min`.
    pub lower: f64,
    /// Upper bound from `min_{k≠h} |λ_k − λ̃|`.
    pub upper: f64,
    /// The closed-form lower bound `residual/(√(2(n+1))·cos(π/(n+1)))`.
    pub stated_lower: f64,
    /// The closed-form upper bound
    /// `residual/(√(2(n+1))·|σ|·|1 − cos Δ|·cos(hπ/(n+1)))`.
    pub stated_upper: f64,
}

pub fn hermitian_structured_rayleigh(t: &TriToeplitz, sigma_eps: C64, h: usize) -> Result<StructuredRayleigh> {
    require_hermitian(t)?;
    t.check_index(h)?;
    if sigma_eps == C64::from(0.0) {
        return Err(Error::DegenerateCase);
    }
    let n = t.order();
    let nf = n as f64;
    let c = cos_angle(n, h);
    let diff = t.sigma().arg() - sigma_eps.arg();
    let lambda_tilde = t.delta().re + 2.0 * t.sigma().norm() * diff.cos() * c;
    let phase = sigma_eps.arg();
    let x: Vec<C64> = (1..=n)
        .map(|k| C64::from_polar(1.0, k as f64 * phase) * Family::Toeplitz.profile(n, h, k))
        .collect();
    let tx = t.to_tridiagonal().mul_vec(&x);
    let res: Vec<C64> = tx.iter().zip(&x).map(|(a, b)| a - b * lambda_tilde).collect();
    // Equal phases make `x^ε` an exact eigenvector; skip the rounding noise.
    let residual = if diff == 0.0 { 0.0 } else { norm2(&res) };
    let unit_residual = residual / ((nf + 1.0) / 2.0).sqrt();
    let eigs: Vec<f64> = t.family_eigenvalues(Family::Toeplitz)?.iter().map(|l| l.re).collect();
    let root = (2.0 * (nf + 1.0)).sqrt();
    let c1 = (PI / (nf + 1.0)).cos();
    Ok(StructuredRayleigh {
        lambda_tilde,
        residual,
        lower: safe_ratio(unit_residual, real_spread(&eigs)),
        upper: safe_ratio(unit_residual, separation_excluding(&eigs, h, lambda_tilde)),
        stated_lower: safe_ratio(residual, root * c1),
        stated_upper: safe_ratio(residual, root * t.sigma().norm() * (1.0 - diff.cos()).abs() * c),
    })
}
