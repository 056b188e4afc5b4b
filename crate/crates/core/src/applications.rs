//! Nearest-Toeplitz projection and spectral refinement of near-Toeplitz
//! tridiagonal matrices.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{inverse_iteration_from, qr_eigenvalues};
use crate::matrix::{norm2, DenseMatrix, TridiagonalMatrix};
use crate::toeplitz::{eigenvalues_toeplitz, spectral_factorization, SpectralFactorization};
use crate::{Error, Result, TriToeplitz, C64};

const SYMMETRY_TOL: f64 = 1e-12;

fn mean(v: &[C64]) -> C64 {
    if v.is_empty() {
        C64::new(0.0, 0.0)
    } else {
        v.iter().sum::<C64>() / v.len() as f64
    }
}

/// Frobenius-nearest tridiagonal Toeplitz matrix: the mean of each diagonal.
pub fn nearest_toeplitz(a: &TridiagonalMatrix) -> TriToeplitz {
    TriToeplitz::new(a.order(), mean(a.sub()), mean(a.diag()), mean(a.sup()))
        .expect("means of finite diagonals are finite")
}

/// `A − T` as a tridiagonal matrix.
pub fn toeplitz_residual(a: &TridiagonalMatrix, t: &TriToeplitz) -> Result<TridiagonalMatrix> {
    a.sub_matrix(&t.to_tridiagonal())
}

fn require_symmetric(a: &TridiagonalMatrix) -> Result<()> {
    if a.is_real_symmetric(SYMMETRY_TOL) {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// Singularity and 2-norm condition of a traceless real symmetric `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracelessAnalysis {
    pub singular: bool,
    pub kappa2: Option<f64>,
}

/// Odd orders always have a zero eigenvalue; even orders have
/// `κ₂(T) = cos(π/(n+1)) / cos(nπ/(2(n+1)))`.
pub fn traceless_analysis(t: &TriToeplitz) -> Result<TracelessAnalysis> {
    if !t.to_tridiagonal().is_real_symmetric(SYMMETRY_TOL) {
        return Err(Error::NotSymmetric);
    }
    let scale = t.frobenius_norm().max(f64::MIN_POSITIVE);
    if t.delta().norm() > SYMMETRY_TOL * scale {
        return Err(Error::NotTraceless);
    }
    let n = t.order();
    if n % 2 == 1 || t.sigma().norm() == 0.0 {
        return Ok(TracelessAnalysis { singular: true, kappa2: None });
    }
    let m = (n + 1) as f64;
    let kappa = (PI / m).cos() / (n as f64 * PI / (2.0 * m)).cos();
    Ok(TracelessAnalysis { singular: false, kappa2: Some(kappa) })
}

fn sorted_real_desc(values: impl IntoIterator<Item = C64>) -> Vec<f64> {
    let mut v: Vec<f64> = values.into_iter().map(|z| z.re).collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// `(lhs, rhs)` with `lhs = (1/n)Σ(λ_i(A) − λ_i(T))²` over both spectra sorted
/// decreasingly and `rhs = ‖A − T‖_F²/n`, `T` the nearest Toeplitz matrix.
pub fn hoffman_wielandt_check(a: &TridiagonalMatrix) -> Result<(f64, f64)> {
    hoffman_wielandt_against(a, &nearest_toeplitz(a))
}

/// [`hoffman_wielandt_check`] against a given real symmetric Toeplitz `T`.
pub fn hoffman_wielandt_against(a: &TridiagonalMatrix, t: &TriToeplitz) -> Result<(f64, f64)> {
    require_symmetric(a)?;
    require_symmetric(&t.to_tridiagonal())?;
    let n = a.order() as f64;
    let dense = sorted_real_desc(qr_eigenvalues(&a.to_dense())?);
    let exact = sorted_real_desc(eigenvalues_toeplitz(t));
    let lhs = dense.iter().zip(&exact).map(|(x, y)| (x - y) * (x - y)).sum::<f64>() / n;
    let d = toeplitz_residual(a, t)?.frobenius_norm();
    Ok((lhs, d * d / n))
}

/// Whether the nearest Toeplitz matrix of `A` is positive definite:
/// `mean(diag) > 2·|mean(sub)|·cos(π/(n+1))`.
pub fn positive_definite_projection_check(a: &TridiagonalMatrix) -> Result<bool> {
    require_symmetric(a)?;
    let n = a.order() as f64;
    let t = nearest_toeplitz(a);
    Ok(t.delta().re > 2.0 * t.sigma().norm() * (PI / (n + 1.0)).cos())
}

/// Summary of projecting `A` onto the tridiagonal Toeplitz matrices.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectionReport {
    pub t: TriToeplitz,
    /// `‖A − T‖_F`.
    pub distance: f64,
    /// Hoffman-Wielandt sides; present for real symmetric `A`.
    pub hw_lhs: Option<f64>,
    pub hw_rhs: Option<f64>,
    pub traceless: bool,
    /// Present only for traceless real symmetric input of even order.
    pub kappa2: Option<f64>,
    pub pd_check: Option<bool>,
}

pub fn project(a: &TridiagonalMatrix) -> Result<ProjectionReport> {
    let t = nearest_toeplitz(a);
    let distance = toeplitz_residual(a, &t)?.frobenius_norm();
    let symmetric = a.is_real_symmetric(SYMMETRY_TOL);
    let traceless = t.delta().norm() <= SYMMETRY_TOL * a.frobenius_norm().max(f64::MIN_POSITIVE);
    let mut report = ProjectionReport { t, distance, hw_lhs: None, hw_rhs: None, traceless, kappa2: None, pd_check: None };
    if symmetric {
        let (lhs, rhs) = hoffman_wielandt_check(a)?;
        report.hw_lhs = Some(lhs);
        report.hw_rhs = Some(rhs);
        report.pd_check = Some(positive_definite_projection_check(a)?);
        if traceless {
            report.kappa2 = traceless_analysis(&t)?.kappa2;
        }
    }
    Ok(report)
}

/// Non-fatal conditions met while refining.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RefineWarning {
    /// `κ₂(D) = |σ/τ|^{(n−1)/2}` exceeds `1e12`; the eigenvector matrix `Z`
    /// carries that scaling and its residual degrades accordingly.
    IllConditionedScaling { log10_condition: f64 },
}

/// Above this `log10 κ₂(D)` a [`RefineWarning::IllConditionedScaling`] is issued.
pub const SCALING_WARN_LOG10: f64 = 12.0;

#[derive(Debug, Clone)]
pub struct RefinedFactorization {
    pub values: Vec<C64>,
    /// `Z = X·Y`, unit columns.
    pub vectors: DenseMatrix,
    /// `max_h ‖A z_h − d_h z_h‖₂ / ‖z_h‖₂`.
    pub residual: f64,
    /// `B = Λ + X^{-1}(A − T)X`.
    pub b: DenseMatrix,
    pub nearest: TriToeplitz,
    pub warnings: Vec<RefineWarning>,
}

/// Eigenvalues and eigenvectors of `A` through the spectral factorization of
/// its nearest Toeplitz matrix `T`: `B = Λ + X^{-1}(A − T)X` is formed with
/// the closed-form inverse, its spectrum computed by QR and its eigenvectors
/// by inverse iteration from the nearest coordinate vector, then `Z = X·Y`.
pub fn refine_spectral_factorization(a: &TridiagonalMatrix) -> Result<RefinedFactorization> {
    let nearest = nearest_toeplitz(a);
    let f = spectral_factorization(&nearest)?;
    let mut warnings = Vec::new();
    let log10_condition = f.log10_condition_d();
    if log10_condition > SCALING_WARN_LOG10 {
        warnings.push(RefineWarning::IllConditionedScaling { log10_condition });
    }
    let b = refined_matrix(&f, a, &nearest)?;
    let values = qr_eigenvalues(&b)?;
    let n = a.order();
    let mut vectors = DenseMatrix::zeros(n, n);
    let mut residual = 0.0f64;
    for (j, &lambda) in values.iter().enumerate() {
        let start = nearest_coordinate(&b, lambda);
        let y = inverse_iteration_from(&b, lambda, Some(&start), j as u64)?;
        let z = f.right().mul_vec(&y);
        let zn = norm2(&z);
        if !zn.is_finite() || zn == 0.0 {
            return Err(Error::NonFinite);
        }
        let z: Vec<C64> = z.iter().map(|c| c / zn).collect();
        let az = a.mul_vec(&z);
        let r: Vec<C64> = az.iter().zip(&z).map(|(p, q)| p - lambda * q).collect();
        residual = residual.max(norm2(&r));
        vectors.set_column(j, &z);
    }
    Ok(RefinedFactorization { values, vectors, residual, b, nearest, warnings })
}

fn refined_matrix(f: &SpectralFactorization, a: &TridiagonalMatrix, t: &TriToeplitz) -> Result<DenseMatrix> {
    let mut b = f.transform(&toeplitz_residual(a, t)?)?;
    for (h, &lambda) in f.values().iter().enumerate() {
        b[(h, h)] += lambda;
    }
    Ok(b)
}

fn nearest_coordinate(b: &DenseMatrix, lambda: C64) -> Vec<C64> {
    let n = b.rows();
    let j = (0..n)
        .min_by(|&i, &k| (b[(i, i)] - lambda).norm().total_cmp(&(b[(k, k)] - lambda).norm()))
        .unwrap_or(0);
    let mut e = alloc::vec![C64::new(0.0, 0.0); n];
    e[j] = C64::new(1.0, 0.0);
    e
}

/// Eigenvalues from the dense QR iteration applied to `A` directly.
pub fn naive_eigenvalues(a: &TridiagonalMatrix) -> Result<Vec<C64>> {
    qr_eigenvalues(&a.to_dense())
}

fn lexicographic_desc(a: &C64, b: &C64) -> Ordering {
    b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im))
}

/// `max_h |computed_h − exact_h|` after sorting both by (Re, Im) descending.
pub fn accuracy_report(computed: &[C64], exact: &[C64]) -> Result<f64> {
    if computed.len() != exact.len() {
        return Err(Error::LengthMismatch { left: computed.len(), right: exact.len() });
    }
    let mut c = computed.to_vec();
    let mut e = exact.to_vec();
    c.sort_by(lexicographic_desc);
    e.sort_by(lexicographic_desc);
    Ok(c.iter().zip(&e).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max))
}

/// Departure from symmetry `‖M − M^T‖_F / ‖M‖_F`.
pub fn asymmetry(m: &DenseMatrix) -> f64 {
    let norm = m.frobenius_norm();
    if norm == 0.0 {
        return 0.0;
    }
    m.sub(&m.transpose()).map(|d| d.frobenius_norm() / norm).unwrap_or(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toeplitz::{eigenvalues_type, ToeplitzTypeCase};
    use crate::c64;

    fn figure_matrix() -> (TriToeplitz, TridiagonalMatrix) {
        let t = TriToeplitz::real(25, 1.0, 0.0, 0.01).unwrap();
        let a = t.with_corners(c64(0.1, 0.0), c64(-0.1, 0.0));
        (t, a)
    }

    #[test]
    fn toeplitz_input_is_fixed() {
        let t = TriToeplitz::new(6, c64(1.0, 2.0), c64(0.5, 0.0), c64(-1.0, 0.3)).unwrap();
        let a = t.to_tridiagonal();
        let p = project(&a).unwrap();
        assert_eq!(p.t, t);
        assert_eq!(p.distance, 0.0);
        let b = t.with_corners(c64(0.3, 0.1), c64(-0.3, -0.1));
        let q = nearest_toeplitz(&b);
        assert!((q.delta() - t.delta()).norm() < 1e-15);
        assert_eq!((q.sigma(), q.tau()), (t.sigma(), t.tau()));
    }

    #[test]
    fn scalar_projection() {
        let a = TridiagonalMatrix::new(alloc::vec![], alloc::vec![c64(4.0, -1.0)], alloc::vec![]).unwrap();
        let t = nearest_toeplitz(&a);
        assert_eq!((t.order(), t.sigma(), t.delta(), t.tau()), (1, c64(0.0, 0.0), c64(4.0, -1.0), c64(0.0, 0.0)));
    }

    #[test]
    fn traceless_orders() {
        let t3 = TriToeplitz::real(3, 1.0, 0.0, 1.0).unwrap();
        assert!(traceless_analysis(&t3).unwrap().singular);
        let t4 = TriToeplitz::real(4, 1.0, 0.0, 1.0).unwrap();
        let k = traceless_analysis(&t4).unwrap().kappa2.unwrap();
        assert!((k - (PI / 5.0).cos() / (2.0 * PI / 5.0).cos()).abs() < 1e-14);
        let mags: Vec<f64> = eigenvalues_toeplitz(&t4).iter().map(|z| z.norm()).collect();
        let oracle = mags.iter().cloned().fold(0.0, f64::max) / mags.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!((k - oracle).abs() < 1e-12);
        let shifted = TriToeplitz::real(4, 1.0, 0.5, 1.0).unwrap();
        assert_eq!(traceless_analysis(&shifted), Err(Error::NotTraceless));
        let skew = TriToeplitz::real(4, 1.0, 0.0, -1.0).unwrap();
        assert_eq!(traceless_analysis(&skew), Err(Error::NotSymmetric));
    }

    #[test]
    fn hoffman_wielandt_single_entry() {
        let t = TriToeplitz::real(8, 1.0, 2.0, 1.0).unwrap();
        let mut a = t.to_tridiagonal();
        a.diag_mut()[1] = c64(3.5, 0.0);
        let (lhs, rhs) = hoffman_wielandt_against(&a, &t).unwrap();
        assert_eq!(rhs, 1.5 * 1.5 / 8.0);
        assert!(lhs <= rhs);
        let (lhs, rhs_nearest) = hoffman_wielandt_check(&a).unwrap();
        assert!(lhs <= rhs_nearest && rhs_nearest < rhs);
    }

    #[test]
    fn positive_definite_threshold() {
        let a = TriToeplitz::real(5, 1.0, 3.0, 1.0).unwrap().to_tridiagonal();
        assert!(positive_definite_projection_check(&a).unwrap());
        let a = TriToeplitz::real(5, -1.0, 3.0, -1.0).unwrap().to_tridiagonal();
        assert!(positive_definite_projection_check(&a).unwrap());
        let a = TriToeplitz::real(200, 1.0, 1.0, 1.0).unwrap().to_tridiagonal();
        assert!(!positive_definite_projection_check(&a).unwrap());
        let a = TriToeplitz::real(5, -1.0, 1.9, -1.0).unwrap().to_tridiagonal();
        let min = eigenvalues_toeplitz(&nearest_toeplitz(&a)).iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
        assert_eq!(positive_definite_projection_check(&a).unwrap(), min > 0.0);
    }

    #[test]
    fn refine_toeplitz_input_is_diagonal() {
        let t = TriToeplitz::new(9, c64(1.0, 0.5), c64(0.2, 0.0), c64(0.4, -0.1)).unwrap();
        let r = refine_spectral_factorization(&t.to_tridiagonal()).unwrap();
        let exact = eigenvalues_toeplitz(&t);
        for i in 0..9 {
            for j in 0..9 {
                let want = if i == j { exact[i] } else { c64(0.0, 0.0) };
                assert!((r.b[(i, j)] - want).norm() < 1e-12);
            }
        }
        assert!(accuracy_report(&r.values, &exact).unwrap() < 1e-12);
        assert!(r.residual < 1e-10);
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn refine_recovers_figure_spectrum() {
        let (t, a) = figure_matrix();
        let exact = eigenvalues_type(&t, ToeplitzTypeCase::PlusMinus).unwrap();
        let r = refine_spectral_factorization(&a).unwrap();
        let err = accuracy_report(&r.values, &exact).unwrap();
        assert!(err < 1e-6, "{err}");
        assert!(matches!(r.warnings[..], [RefineWarning::IllConditionedScaling { .. }]));
        let naive = naive_eigenvalues(&a).unwrap();
        assert!(accuracy_report(&naive, &exact).unwrap() > 1e-2);
        assert!(naive.iter().any(|z| z.im.abs() > 1e-3));
        assert!(asymmetry(&r.b) < asymmetry(&a.to_dense()));
    }

    #[test]
    fn accuracy_examples() {
        let v = [c64(1.0, 0.0), c64(-2.0, 0.5), c64(0.3, -0.1)];
        assert_eq!(accuracy_report(&v, &v).unwrap(), 0.0);
        let mut w = v;
        w[1] += 1e-3;
        assert!((accuracy_report(&w, &v).unwrap() - 1e-3).abs() < 1e-15);
        assert_eq!(accuracy_report(&v, &v[..2]), Err(Error::LengthMismatch { left: 3, right: 2 }));
    }
}
