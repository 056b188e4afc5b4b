use alloc::vec;
use alloc::vec::Vec;


use super::{hessenberg, inverse_iteration, Givens};
use crate::matrix::residual_norm;
use crate::{DenseMatrix, Error, Result, C64};

const DEFLATION_TOL: f64 = 1e-14;
const EXCEPTIONAL_PERIOD: usize = 20;
const ITERATIONS_PER_ORDER: usize = 100;

/// Eigenvalues with multiplicity: Hessenberg reduction followed by the
/// implicitly shifted complex QR iteration (Wilkinson shift, exceptional
/// shift every 20 stalled sweeps).
///
/// A subdiagonal entry is set to zero once it drops below
/// `1e-14·(|h_{k,k}| + |h_{k+1,k+1}|)`. The order of the returned values is
/// the deflation order and carries no meaning.
pub fn qr_eigenvalues(m: &DenseMatrix) -> Result<Vec<C64>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: (m.rows(), m.rows()), found: (m.rows(), m.cols()) });
    }
    let n = m.rows();
    if n == 0 {
        return Err(Error::InvalidOrder { order: 0, minimum: 1 });
    }
    if m.as_slice().iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::NonFinite);
    }
    let (mut h, _) = hessenberg(m)?;
    let scale = h.frobenius_norm();
    let zero = C64::new(0.0, 0.0);
    let mut values = vec![zero; n];
    let max_its = ITERATIONS_PER_ORDER * n;
    let mut hi = n - 1;
    let mut its = 0usize;

    loop {
        if hi == 0 {
            values[0] = h[(0, 0)];
            break;
        }
        let mut lo = hi;
        while lo > 0 {
            let mut tst = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if tst == 0.0 {
                tst = scale;
            }
            if h[(lo, lo - 1)].norm() <= DEFLATION_TOL * tst {
                h[(lo, lo - 1)] = zero;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            values[hi] = h[(hi, hi)];
            hi -= 1;
            its = 0;
            continue;
        }

        its += 1;
        if its > max_its {
            return Err(Error::NonConvergence { routine: "qr_eigenvalues", iterations: its - 1 });
        }
        let mu = if its % EXCEPTIONAL_PERIOD == 0 {
            h[(hi, hi)] + h[(hi, hi - 1)].norm() * 0.75
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };

        // Introduce the bulge at the top of the active window and chase it down.
        let g = Givens::zeroing(h[(lo, lo)] - mu, h[(lo + 1, lo)]);
        rotate_rows(&mut h, g, lo, lo, hi);
        rotate_cols(&mut h, g, lo, lo, (lo + 2).min(hi));
        for k in lo + 1..hi {
            let g = Givens::zeroing(h[(k, k - 1)], h[(k + 1, k - 1)]);
            rotate_rows(&mut h, g, k, k - 1, hi);
            h[(k + 1, k - 1)] = zero;
            rotate_cols(&mut h, g, k, lo, (k + 2).min(hi));
        }
    }
    Ok(values)
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let (m1, m2) = (mid + disc, mid - disc);
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Rows `k, k+1`, columns `col_lo..=col_hi`.
fn rotate_rows(h: &mut DenseMatrix, g: Givens, k: usize, col_lo: usize, col_hi: usize) {
    for j in col_lo..=col_hi {
        let (x, y) = g.apply_left(h[(k, j)], h[(k + 1, j)]);
        h[(k, j)] = x;
        h[(k + 1, j)] = y;
    }
}

/// Columns `k, k+1`, rows `row_lo..=row_hi`.
fn rotate_cols(h: &mut DenseMatrix, g: Givens, k: usize, row_lo: usize, row_hi: usize) {
    for i in row_lo..=row_hi {
        let (x, y) = g.apply_right(h[(i, k)], h[(i, k + 1)]);
        h[(i, k)] = x;
        h[(i, k + 1)] = y;
    }
}

/// Eigenvalues and unit right eigenvectors of a diagonalizable matrix.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<C64>,
    /// Column `h` is the unit eigenvector of `values[h]`.
    pub vectors: DenseMatrix,
    /// Residual bound `‖A v − λ v‖₂ ≤ tolerance·‖A‖_F` the decomposition was accepted at.
    pub tolerance: f64,
}

impl EigenDecomposition {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, h: usize) -> Vec<C64> {
        self.vectors.column(h)
    }

    pub fn max_residual(&self, a: &DenseMatrix) -> f64 {
        (0..self.order())
            .map(|h| {
                let v = self.vector(h);
                residual_norm(&a.mul_vec(&v), self.values[h], &v)
            })
            .fold(0.0, f64::max)
    }
}

/// QR eigenvalues plus one inverse-iteration eigenvector per eigenvalue.
///
/// Inverse iteration runs on the Hessenberg form `H = U^H M U`, where each
/// shifted factorization costs `O(n²)`, and the vectors are mapped back by `U`.
pub fn eigen_decompose(m: &DenseMatrix) -> Result<EigenDecomposition> {
    let values = qr_eigenvalues(m)?;
    let (h, u) = hessenberg(m)?;
    let n = values.len();
    let mut vectors = DenseMatrix::zeros(n, n);
    for (j, &lambda) in values.iter().enumerate() {
        let w = inverse_iteration(&h, lambda)?;
        vectors.set_column(j, &u.mul_vec(&w));
    }
    Ok(EigenDecomposition { values, vectors, tolerance: super::inverse::RESIDUAL_TOL })
}
