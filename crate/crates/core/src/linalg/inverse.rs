use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{norm2, normalized, residual_norm};
use crate::{DenseMatrix, Error, Result, C64};

pub(crate) const RESIDUAL_TOL: f64 = 1e-10;
const MAX_ITERATIONS: usize = 50;
const MAX_RESTARTS: usize = 3;
/// A converged Rayleigh quotient must stay this close (relative to `‖M‖_F`)
/// to the shift; otherwise the iterate locked onto a different eigenvector.
const SHIFT_DRIFT_TOL: f64 = 1e-3;

/// LU factorization with partial pivoting, `P·A = L·U`.
#[derive(Debug, Clone)]
pub struct LuFactorization {
    lu: DenseMatrix,
    piv: Vec<usize>,
    /// Set when a pivot was exactly zero and had to be replaced by `floor`.
    pub hit_singular_pivot: bool,
}

impl LuFactorization {
    /// Zero pivots are replaced by `pivot_floor` so the solve stays finite.
    pub fn new(a: &DenseMatrix, pivot_floor: f64) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch { expected: (a.rows(), a.rows()), found: (a.rows(), a.cols()) });
        }
        let n = a.rows();
        let mut lu = a.clone();
        let mut piv: Vec<usize> = (0..n).collect();
        let mut hit_singular_pivot = false;
        for k in 0..n {
            let p = (k..n).max_by(|&i, &j| lu[(i, k)].norm().total_cmp(&lu[(j, k)].norm())).unwrap_or(k);
            if p != k {
                for j in 0..n {
                    let tmp = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = tmp;
                }
                piv.swap(k, p);
            }
            if lu[(k, k)].norm() == 0.0 {
                lu[(k, k)] = C64::new(pivot_floor, 0.0);
                hit_singular_pivot = true;
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                if f == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in k + 1..n {
                    let u = lu[(k, j)];
                    lu[(i, j)] -= f * u;
                }
            }
        }
        Ok(LuFactorization { lu, piv, hit_singular_pivot })
    }

    pub fn solve(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.rows();
        let mut x: Vec<C64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in i + 1..n {
                acc -= self.lu[(i, j)] * x[j];
            }
            x[i] = acc / self.lu[(i, i)];
        }
        x
    }
}

/// Unit eigenvector for the eigenvalue nearest `shift`, from a random start.
///
/// Converges when `‖Mv − μv‖₂ ≤ 1e-10·‖M‖_F` with `μ = v^H M v`. Each
/// attempt runs at most 50 iterations; a stagnating attempt restarts from a
/// fresh seeded random vector, and the third failed restart is reported as
/// [`Error::NonConvergence`]. An exactly singular shifted matrix means the
/// shift is an eigenvalue; the normalized solve is then returned directly.
pub fn inverse_iteration(m: &DenseMatrix, shift: C64) -> Result<Vec<C64>> {
    inverse_iteration_from(m, shift, None, 0)
}

/// [`inverse_iteration`] with an optional start vector and the seed for the
/// random (re)starts.
pub fn inverse_iteration_from(
    m: &DenseMatrix,
    shift: C64,
    start: Option<&[C64]>,
    seed: u64,
) -> Result<Vec<C64>> {
    let n = m.rows();
    if !m.is_square() || n == 0 {
        return Err(Error::DimensionMismatch { expected: (n, n), found: (m.rows(), m.cols()) });
    }
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);
    let lu = LuFactorization::new(&m.shifted(shift), f64::EPSILON * scale)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    for attempt in 0..=MAX_RESTARTS {
        let mut v = match (attempt, start) {
            (0, Some(s)) if s.len() == n && norm2(s) > 0.0 => normalized(s),
            _ => random_unit(&mut rng, n),
        };
        for _ in 0..MAX_ITERATIONS {
            let w = lu.solve(&v);
            let wn = norm2(&w);
            if !wn.is_finite() || wn == 0.0 {
                break;
            }
            v = w.iter().map(|z| z / wn).collect();
            if lu.hit_singular_pivot {
                return Ok(v);
            }
            let mv = m.mul_vec(&v);
            let mu = crate::matrix::dotc(&v, &mv);
            if residual_norm(&mv, mu, &v) <= RESIDUAL_TOL * scale
                && (mu - shift).norm() <= SHIFT_DRIFT_TOL * scale
            {
                return Ok(polish(&lu, v));
            }
        }
    }
    Err(Error::NonConvergence { routine: "inverse_iteration", iterations: MAX_ITERATIONS * (MAX_RESTARTS + 1) })
}

/// One extra solve past the tolerance; each step gains a factor of the
/// eigenvalue separation ratio, which is cheap with the factorization at hand.
fn polish(lu: &LuFactorization, v: Vec<C64>) -> Vec<C64> {
    let w = lu.solve(&v);
    let wn = norm2(&w);
    if wn.is_finite() && wn > 0.0 {
        w.iter().map(|z| z / wn).collect()
    } else {
        v
    }
}

fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    let v: Vec<C64> = (0..n)
        .map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    normalized(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn diagonal_shift_picks_coordinate_vector() {
        let m = DenseMatrix::from_diagonal(&[c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0)]);
        let v = inverse_iteration(&m, c64(2.0001, 0.0)).unwrap();
        assert!((v[1].norm() - 1.0).abs() < 1e-12);
        assert!(v[0].norm() < 1e-8 && v[2].norm() < 1e-8);
    }

    #[test]
    fn exact_shift_is_a_singular_solve() {
        let m = DenseMatrix::from_diagonal(&[c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0)]);
        let v = inverse_iteration(&m, c64(2.0, 0.0)).unwrap();
        assert!((v[1].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn swap_matrix_eigenvector() {
        let m = DenseMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        let v = inverse_iteration(&m, c64(1.0, 0.0)).unwrap();
        let phase = v[0] / v[0].norm();
        let s = 0.5f64.sqrt();
        assert!((v[0] / phase - c64(s, 0.0)).norm() < 1e-10);
        assert!((v[1] / phase - c64(s, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn lu_solves_random_system() {
        let a = DenseMatrix::from_real_rows(&[[4.0, 1.0, 0.0], [1.0, -3.0, 2.0], [0.5, 2.0, 1.0]]);
        let x = [c64(1.0, -1.0), c64(0.5, 2.0), c64(-3.0, 0.0)];
        let b = a.mul_vec(&x);
        let sol = LuFactorization::new(&a, 0.0).unwrap().solve(&b);
        for (u, w) in sol.iter().zip(&x) {
            assert!((u - w).norm() < 1e-13);
        }
    }
}
