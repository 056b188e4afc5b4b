//! Eigenvalue gaps, eigenvalue condition numbers and eigenvector condition
//! numbers.

use alloc::vec::Vec;
use core::f64::consts::{LN_10, PI};

#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{householder_qr_pivoted, smallest_singular_value};
use crate::matrix::{dotc, norm2, normalized, DenseMatrix};
use crate::structured::{structured_eig_condition, Subspace};
use crate::toeplitz::{is_normal, Family, ToeplitzTypeCase, TriToeplitz};
use crate::{Error, Result, C64};

/// Relative drop in `|R_kk|` below which a pivoted-QR column counts as
/// numerically dependent.
pub const RANK_TOL: f64 = 1e-12;

/// Which neighbour realises the minimal gap, and the two half-angle
/// factors `sin(Δθ/2)`, `sin(θ_mid)` with `θ_mid` the midpoint angle.
fn gap_factors(family: Family, n: usize, h: usize) -> (f64, f64) {
    use ToeplitzTypeCase::*;
    let (nf, hf) = (n as f64, h as f64);
    let half_n = 2 * h <= n;
    let ceil_half = h <= n.div_ceil(2);
    // (half step, lower midpoint, upper midpoint, branch threshold)
    let (step, lower, upper, below) = match family {
        Family::Toeplitz => {
            let d = 2.0 * (nf + 1.0);
            (PI / d, (2.0 * hf - 1.0) * PI / d, (2.0 * hf + 1.0) * PI / d, half_n)
        }
        Family::Type(ZeroPlus | PlusZero) => {
            let d = 2.0 * nf + 1.0;
            (PI / d, (2.0 * hf - 1.0) * PI / d, (2.0 * hf + 1.0) * PI / d, half_n)
        }
        Family::Type(ZeroMinus | MinusZero) => {
            let d = 2.0 * nf + 1.0;
            (PI / d, 2.0 * (hf - 1.0) * PI / d, 2.0 * hf * PI / d, ceil_half)
        }
        Family::Type(PlusMinus | MinusPlus) => {
            (PI / (2.0 * nf), (hf - 1.0) * PI / nf, hf * PI / nf, half_n)
        }
        Family::Type(PlusPlus) => {
            let d = 2.0 * nf;
            (PI / d, (2.0 * hf - 1.0) * PI / d, (2.0 * hf + 1.0) * PI / d, half_n)
        }
        Family::Type(MinusMinus) => {
            let d = 2.0 * nf;
            (PI / d, (2.0 * hf - 3.0) * PI / d, (2.0 * hf - 1.0) * PI / d, ceil_half)
        }
    };
    let use_lower = (h > 1 && below) || h == n;
    (step.sin(), if use_lower { lower } else { upper }.sin().abs())
}

fn gap_preconditions(t: &TriToeplitz, h: usize) -> Result<()> {
    t.require_coupled()?;
    if t.order() < 2 {
        return Err(Error::InvalidOrder { order: t.order(), minimum: 2 });
    }
    t.check_index(h)
}

/// `min_{j≠h} |λ_h − λ_j|` for a family member, by the closed-form branch
/// split.
pub fn min_gap(t: &TriToeplitz, family: Family, h: usize) -> Result<f64> {
    gap_preconditions(t, h)?;
    let (a, b) = gap_factors(family, t.order(), h);
    let gap = 4.0 * (t.sigma() * t.tau()).norm().sqrt() * a * b;
    debug_assert!({
        let direct = neighbour_gap(t, family, h);
        (gap - direct).abs() <= 1e-9 * direct.max(f64::MIN_POSITIVE)
    });
    Ok(gap)
}

/// Gap to the nearer neighbour computed from the eigenvalues themselves.
fn neighbour_gap(t: &TriToeplitz, family: Family, h: usize) -> f64 {
    let at = |j: usize| t.family_eigenvalue(family, j).expect("index checked");
    let l = at(h);
    let mut best = f64::INFINITY;
    if h > 1 {
        best = best.min((l - at(h - 1)).norm());
    }
    if h < t.order() {
        best = best.min((l - at(h + 1)).norm());
    }
    best
}

pub fn min_gap_toeplitz(t: &TriToeplitz, h: usize) -> Result<f64> {
    min_gap(t, Family::Toeplitz, h)
}

pub fn min_gap_type(t: &TriToeplitz, c: ToeplitzTypeCase, h: usize) -> Result<f64> {
    min_gap(t, Family::Type(c), h)
}

/// Smallest distance between any two eigenvalues.
pub fn global_min_gap(t: &TriToeplitz, family: Family) -> Result<f64> {
    use ToeplitzTypeCase::*;
    gap_preconditions(t, 1)?;
    let n = t.order() as f64;
    let scale = 4.0 * (t.sigma() * t.tau()).norm().sqrt();
    let (a, b) = match family {
        Family::Toeplitz => (PI / (2.0 * (n + 1.0)), 3.0 * PI / (2.0 * (n + 1.0))),
        Family::Type(ZeroPlus | PlusZero | ZeroMinus | MinusZero) => (PI / (2.0 * n + 1.0), 2.0 * PI / (2.0 * n + 1.0)),
        Family::Type(PlusMinus | MinusPlus) => (PI / (2.0 * n), PI / n),
        Family::Type(PlusPlus | MinusMinus) => (PI / (2.0 * n), PI / (2.0 * n)),
    };
    Ok(scale * a.sin() * b.sin())
}

/// `ln Σ_k e^{c·k}·f(k)²` without overflow.
fn log_weighted_sum(c: f64, n: usize, f: impl Fn(usize) -> f64) -> f64 {
    let terms: Vec<(f64, f64)> = (1..=n)
        .map(|k| (c * k as f64, f(k).powi(2)))
        .filter(|(_, w)| *w > 0.0)
        .collect();
    let peak = terms.iter().map(|(e, _)| *e).fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|(e, w)| (e - peak).exp() * w).sum();
    peak + sum.ln()
}

/// `κ(λ_h) = ‖x_h‖‖y_h‖/|y_h^H x_h|` evaluated from the closed-form sums
/// `Σ|σ/τ|^k f_h(k)²` and `Σ|τ/σ|^k f_h(k)²` in log scale.
pub fn eig_condition(t: &TriToeplitz, family: Family, h: usize) -> Result<f64> {
    t.require_coupled()?;
    t.check_index(h)?;
    let n = t.order();
    let c = t.sigma().norm().ln() - t.tau().norm().ln();
    let profile = |k: usize| family.profile(n, h, k);
    let ln_kappa = 0.5 * (log_weighted_sum(c, n, profile) + log_weighted_sum(-c, n, profile))
        - family.profile_norm_sq(n, h).ln();
    if ln_kappa > 709.0 {
        return Err(Error::ScaleOverflow { log10_magnitude: ln_kappa / LN_10 });
    }
    Ok(ln_kappa.exp().max(1.0))
}

pub fn eig_condition_toeplitz(t: &TriToeplitz, h: usize) -> Result<f64> {
    eig_condition(t, Family::Toeplitz, h)
}

pub fn eig_condition_type(t: &TriToeplitz, c: ToeplitzTypeCase, h: usize) -> Result<f64> {
    eig_condition(t, Family::Type(c), h)
}

/// `κ(x̃_h) = 1/min_gap` for a normal family member.
pub fn eigvec_condition_normal(t: &TriToeplitz, family: Family, h: usize) -> Result<f64> {
    if !is_normal(t) {
        return Err(Error::NotNormal);
    }
    Ok(1.0 / min_gap(t, family, h)?)
}

/// Largest eigenvector condition number over `h` for a normal family member.
pub fn max_eigvec_condition_normal(t: &TriToeplitz, family: Family) -> Result<f64> {
    if !is_normal(t) {
        return Err(Error::NotNormal);
    }
    Ok(1.0 / global_min_gap(t, family)?)
}

/// `κ(x) = ‖(μI − U^H A U)^{-1}‖₂` with the columns of `U` an orthonormal
/// basis of `Range(A − μI)`, taken from a column-pivoted QR of `A − μI`.
pub fn eigvec_condition_general(a: &DenseMatrix, mu: C64, x: &[C64]) -> Result<f64> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::DimensionMismatch { expected: (n, n), found: (a.rows(), a.cols()) });
    }
    if x.len() != n {
        return Err(Error::LengthMismatch { left: n, right: x.len() });
    }
    if n < 2 {
        return Err(Error::InvalidOrder { order: n, minimum: 2 });
    }
    let qr = householder_qr_pivoted(&a.shifted(mu))?;
    let rank = qr.numerical_rank(RANK_TOL);
    if rank < n - 1 {
        return Err(Error::RankDeficient { rank, order: n });
    }
    let cols: Vec<Vec<C64>> = (0..n - 1).map(|j| qr.q.column(j)).collect();
    let u = DenseMatrix::from_columns(&cols)?;
    let projected = u.conj_transpose().matmul(&a.matmul(&u)?)?;
    let sep = smallest_singular_value(&projected.shifted(mu).scale(C64::from(-1.0)))?;
    if sep == 0.0 {
        return Err(Error::RankDeficient { rank: n - 2, order: n });
    }
    Ok(1.0 / sep)
}

/// Angle bounds for an approximate eigenvector of a Hermitian `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RayleighBounds {
    /// `x^H T x` for the normalized input.
    pub rq: f64,
    /// `‖T x − rq·x‖₂`.
    pub residual: f64,
    /// `residual / spread`.
    pub lower: f64,
    /// `residual / min_{k≠h} |λ_k − rq|`.
    pub upper: f64,
    /// `λ_max − λ_min` from the closed-form eigenvalues.
    pub spread: f64,
    /// `2|σ|·cos(π/(n+1))`, the closed form quoted in the literature; it is
    /// half the actual spread.
    pub stated_spread: f64,
}

pub(crate) fn require_hermitian(t: &TriToeplitz) -> Result<()> {
    let scale = t.frobenius_norm().max(f64::MIN_POSITIVE);
    if (t.tau() - t.sigma().conj()).norm() > 1e-12 * scale || t.delta().im.abs() > 1e-12 * scale {
        return Err(Error::NotHermitian);
    }
    Ok(())
}

/// Distance from `value` to the nearest real eigenvalue other than `λ_h`.
pub(crate) fn separation_excluding(eigs: &[f64], h: usize, value: f64) -> f64 {
    eigs.iter()
        .enumerate()
        .filter(|(j, _)| j + 1 != h)
        .map(|(_, l)| (l - value).abs())
        .fold(f64::INFINITY, f64::min)
}

pub(crate) fn real_spread(eigs: &[f64]) -> f64 {
    let max = eigs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = eigs.iter().copied().fold(f64::INFINITY, f64::min);
    max - min
}

pub(crate) fn safe_ratio(num: f64, den: f64) -> f64 {
    if num == 0.0 {
        0.0
    } else {
        num / den
    }
}

/// Rayleigh-quotient bounds `residual/spread ≤ sin θ ≤ residual/gap` for
/// the angle between `x_eps` and the eigenvector of `λ_h`.
pub fn rayleigh_bounds_hermitian(t: &TriToeplitz, x_eps: &[C64], h: usize) -> Result<RayleighBounds> {
    require_hermitian(t)?;
    t.check_index(h)?;
    let n = t.order();
    if x_eps.len() != n {
        return Err(Error::LengthMismatch { left: n, right: x_eps.len() });
    }
    let x = normalized(x_eps);
    let tx = t.to_tridiagonal().mul_vec(&x);
    let rq = dotc(&x, &tx).re;
    let res: Vec<C64> = tx.iter().zip(&x).map(|(a, b)| a - b * rq).collect();
    let residual = norm2(&res);
    let eigs: Vec<f64> = t.family_eigenvalues(Family::Toeplitz)?.iter().map(|l| l.re).collect();
    let spread = real_spread(&eigs);
    Ok(RayleighBounds {
        rq,
        residual,
        lower: safe_ratio(residual, spread),
        upper: safe_ratio(residual, separation_excluding(&eigs, h, rq)),
        spread,
        stated_spread: 2.0 * t.sigma().norm() * (PI / (n as f64 + 1.0)).cos(),
    })
}

/// Per-eigenvalue summary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionReport {
    pub h: usize,
    pub lambda: C64,
    pub min_gap: f64,
    pub kappa_eig: f64,
    pub kappa_vec: f64,
    pub kappa_structured: Option<f64>,
}

/// Gap, `κ(λ_h)`, `κ(x̃_h)` and optionally a structured `κ` for one index.
///
/// `κ(x̃_h)` uses the gap formula for normal input and the deflation route
/// otherwise.
pub fn condition_report(
    t: &TriToeplitz,
    family: Family,
    h: usize,
    subspace: Option<Subspace>,
) -> Result<ConditionReport> {
    let lambda = t.family_eigenvalue(family, h)?;
    let min_gap = min_gap(t, family, h)?;
    let kappa_eig = eig_condition(t, family, h)?;
    let kappa_vec = if is_normal(t) {
        1.0 / min_gap
    } else {
        let a = t.family_matrix(family)?.to_dense();
        let x = normalized(&t.family_right_eigenvector(family, h)?);
        eigvec_condition_general(&a, lambda, &x)?
    };
    let kappa_structured = match (subspace, family) {
        (None, _) => None,
        (Some(s), Family::Toeplitz) => Some(structured_eig_condition(t, h, s)?),
        (Some(_), Family::Type(_)) => return Err(Error::SubspaceMismatch),
    };
    Ok(ConditionReport { h, lambda, min_gap, kappa_eig, kappa_vec, kappa_structured })
}

pub fn condition_table(t: &TriToeplitz, family: Family, subspace: Option<Subspace>) -> Result<Vec<ConditionReport>> {
    (1..=t.order()).map(|h| condition_report(t, family, h, subspace)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn brute_gap(t: &TriToeplitz, family: Family, h: usize) -> f64 {
        let l = t.family_eigenvalues(family).unwrap();
        (0..l.len()).filter(|&j| j + 1 != h).map(|j| (l[h - 1] - l[j]).norm()).fold(f64::INFINITY, f64::min)
    }

    #[test]
    fn gaps_match_pairwise_minimum() {
        for n in 2..=25 {
            let t = TriToeplitz::new(n, c64(3.0, 0.4), c64(0.1, 0.0), c64(0.7, -0.2)).unwrap();
            for fam in Family::ALL {
                let mut global = f64::INFINITY;
                for h in 1..=n {
                    let g = min_gap(&t, fam, h).unwrap();
                    let b = brute_gap(&t, fam, h);
                    assert!((g - b).abs() <= 1e-12 * b, "{fam:?} n={n} h={h}: {g} vs {b}");
                    global = global.min(b);
                }
                let g = global_min_gap(&t, fam).unwrap();
                assert!((g - global).abs() <= 1e-12 * global, "{fam:?} n={n}");
            }
        }
    }

    #[test]
    fn order_two_gap() {
        let t = TriToeplitz::real(2, 2.0, 0.0, 0.5).unwrap();
        assert!((min_gap_toeplitz(&t, 1).unwrap() - 2.0).abs() < 1e-14);
        assert!((min_gap_toeplitz(&t, 2).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn gap_errors() {
        assert_eq!(min_gap_toeplitz(&TriToeplitz::real(4, 0.0, 1.0, 1.0).unwrap(), 1), Err(Error::DegenerateCase));
        assert!(matches!(min_gap_toeplitz(&TriToeplitz::real(1, 1.0, 1.0, 1.0).unwrap(), 1), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn kappa_matches_vectors() {
        let t = TriToeplitz::real(12, 1.0, 0.0, 0.25).unwrap();
        for fam in Family::ALL {
            for h in 1..=12 {
                let x = t.family_right_eigenvector(fam, h).unwrap();
                let y = t.family_left_eigenvector(fam, h).unwrap();
                let direct = norm2(&x) * norm2(&y) / dotc(&y, &x).norm();
                let k = eig_condition(&t, fam, h).unwrap();
                assert!((k - direct).abs() <= 1e-10 * direct, "{fam:?} h={h}");
            }
        }
    }

    #[test]
    fn kappa_is_one_when_normal() {
        let t = TriToeplitz::new(9, C64::from_polar(2.0, 0.3), c64(1.0, 1.0), C64::from_polar(2.0, 2.9)).unwrap();
        for fam in Family::ALL {
            for h in 1..=9 {
                assert!((eig_condition(&t, fam, h).unwrap() - 1.0).abs() < 1e-12);
            }
        }
        let t = TriToeplitz::real(1, 3.0, 0.0, 0.1).unwrap();
        assert_eq!(eig_condition_toeplitz(&t, 1).unwrap(), 1.0);
    }

    #[test]
    fn kappa_edge_index_is_not_one_when_nonnormal() {
        let t = TriToeplitz::real(6, 2.0, 0.0, 0.5).unwrap();
        let k = eig_condition_type(&t, ToeplitzTypeCase::PlusPlus, 6).unwrap();
        assert!(k > 7.0 && k < 7.2, "{k}");
    }

    #[test]
    fn huge_ratio_overflows_cleanly() {
        let t = TriToeplitz::real(400, 1e4, 0.0, 1e-4).unwrap();
        assert!(matches!(eig_condition_toeplitz(&t, 3), Err(Error::ScaleOverflow { .. })));
        let t = TriToeplitz::real(60, 1e2, 0.0, 1e-2).unwrap();
        assert!(eig_condition_toeplitz(&t, 3).unwrap() > 1e100);
    }

    #[test]
    fn normal_eigvec_condition() {
        let t = TriToeplitz::new(100, C64::from_polar(1.0, 0.7), c64(0.0, 0.0), C64::from_polar(1.0, -1.3)).unwrap();
        let want = 1.0 / (4.0 * (PI / 202.0).sin() * (3.0 * PI / 202.0).sin());
        let max = max_eigvec_condition_normal(&t, Family::Toeplitz).unwrap();
        assert!((max - want).abs() < 1e-10 * want);
        for h in [1, 2, 99, 100] {
            let k = eigvec_condition_normal(&t, Family::Toeplitz, h).unwrap();
            assert!((k - want).abs() < 1e-10 * want);
        }
        let t2 = TriToeplitz::real(2, 1.5, 0.0, 1.5).unwrap();
        assert!((eigvec_condition_normal(&t2, Family::Toeplitz, 1).unwrap() - 1.0 / 3.0).abs() < 1e-14);
        assert_eq!(
            eigvec_condition_normal(&TriToeplitz::real(5, 1.0, 0.0, 0.5).unwrap(), Family::Toeplitz, 1),
            Err(Error::NotNormal)
        );
    }

    #[test]
    fn table_maximum_for_plus_plus() {
        let t = TriToeplitz::real(8, -1.3, 0.0, -1.3).unwrap();
        let want = 1.0 / (4.0 * 1.3 * (PI / 16.0).sin().powi(2));
        let got = max_eigvec_condition_normal(&t, Family::Type(ToeplitzTypeCase::PlusPlus)).unwrap();
        assert!((got - want).abs() < 1e-12 * want);
    }

    #[test]
    fn general_route_on_diagonal() {
        let a = DenseMatrix::from_real_rows(&[[0.0, 0.0], [0.0, 3.0]]);
        let k = eigvec_condition_general(&a, c64(0.0, 0.0), &[c64(1.0, 0.0), c64(0.0, 0.0)]).unwrap();
        assert!((k - 1.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn general_route_matches_gap_for_normal() {
        let t = TriToeplitz::new(9, C64::from_polar(0.8, 1.0), c64(0.3, -0.1), C64::from_polar(0.8, 0.2)).unwrap();
        let a = t.to_dense();
        for h in 1..=9 {
            let x = normalized(&t.family_right_eigenvector(Family::Toeplitz, h).unwrap());
            let k = eigvec_condition_general(&a, t.family_eigenvalue(Family::Toeplitz, h).unwrap(), &x).unwrap();
            let want = eigvec_condition_normal(&t, Family::Toeplitz, h).unwrap();
            assert!((k - want).abs() < 1e-8 * want, "h={h}: {k} vs {want}");
        }
    }

    #[test]
    fn repeated_eigenvalue_is_rank_deficient() {
        let a = DenseMatrix::from_real_rows(&[[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 2.0]]);
        let x = [c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0)];
        assert!(matches!(eigvec_condition_general(&a, c64(1.0, 0.0), &x), Err(Error::RankDeficient { .. })));
    }

    #[test]
    fn rayleigh_exact_vector() {
        let t = TriToeplitz::new(7, C64::from_polar(1.0, 0.4), c64(0.5, 0.0), C64::from_polar(1.0, -0.4)).unwrap();
        let x = t.family_right_eigenvector(Family::Toeplitz, 3).unwrap();
        let b = rayleigh_bounds_hermitian(&t, &x, 3).unwrap();
        assert!(b.residual < 1e-14);
        assert!(b.upper < 1e-13);
        assert!((b.spread - 2.0 * b.stated_spread).abs() < 1e-12);
        let bad = TriToeplitz::real(7, 1.0, 0.0, 0.5).unwrap();
        assert_eq!(rayleigh_bounds_hermitian(&bad, &x, 3), Err(Error::NotHermitian));
    }

    #[test]
    fn rayleigh_rotation_is_bracketed() {
        let t = TriToeplitz::real(10, 1.0, 0.0, 1.0).unwrap();
        let h = 4;
        let a = normalized(&t.family_right_eigenvector(Family::Toeplitz, h).unwrap());
        let b = normalized(&t.family_right_eigenvector(Family::Toeplitz, h + 1).unwrap());
        let angle: f64 = 1e-3;
        let x: Vec<C64> = a.iter().zip(&b).map(|(u, v)| u * angle.cos() + v * angle.sin()).collect();
        let bounds = rayleigh_bounds_hermitian(&t, &x, h).unwrap();
        assert!(bounds.lower <= angle.sin() && angle.sin() <= bounds.upper, "{bounds:?}");
    }

    #[test]
    fn report_for_nonnormal() {
        let t = TriToeplitz::real(10, 1.0, 0.0, 0.01).unwrap();
        let rows = condition_table(&t, Family::Toeplitz, Some(Subspace::Toeplitz)).unwrap();
        assert_eq!(rows.len(), 10);
        for r in &rows {
            assert!(r.kappa_eig >= 1.0 && r.kappa_vec.is_finite() && r.kappa_vec > 0.0);
            assert!(r.kappa_structured.unwrap() <= r.kappa_eig);
        }
    }
}
