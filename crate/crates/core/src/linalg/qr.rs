use alloc::vec::Vec;

use super::householder_vector;
use crate::matrix::{dotc, norm2};
use crate::{DenseMatrix, Error, Result, C64};

/// Thin Householder QR: `M = Q·R` with `Q` (`m×n`) having orthonormal
/// columns and `R` (`n×n`) upper triangular. Requires `rows ≥ cols`.
///
/// Rank deficiency is allowed and shows up as zero diagonal entries of `R`.
pub fn householder_qr(m: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    let f = factor(m, false)?;
    Ok((f.q, f.r))
}

/// Column-pivoted Householder QR, `M·P = Q·R`, with `|R₁₁| ≥ |R₂₂| ≥ …`.
#[derive(Debug, Clone)]
pub struct PivotedQr {
    pub q: DenseMatrix,
    pub r: DenseMatrix,
    /// Column `k` of `M·P` is column `perm[k]` of `M`.
    pub perm: Vec<usize>,
}

impl PivotedQr {
    /// Number of diagonal entries of `R` above `rel_tol·|R₁₁|`.
    pub fn numerical_rank(&self, rel_tol: f64) -> usize {
        let d = self.r.diagonal();
        let Some(first) = d.first() else { return 0 };
        let thresh = rel_tol * first.norm();
        d.iter().take_while(|z| z.norm() > thresh).count()
    }
}

pub fn householder_qr_pivoted(m: &DenseMatrix) -> Result<PivotedQr> {
    let f = factor(m, true)?;
    Ok(PivotedQr { q: f.q, r: f.r, perm: f.perm })
}

struct Factors {
    q: DenseMatrix,
    r: DenseMatrix,
    perm: Vec<usize>,
}

fn factor(m: &DenseMatrix, pivot: bool) -> Result<Factors> {
    let (rows, cols) = (m.rows(), m.cols());
    if rows < cols {
        return Err(Error::DimensionMismatch { expected: (cols, cols), found: (rows, cols) });
    }
    let mut a = m.clone();
    let mut q = DenseMatrix::identity(rows);
    let mut perm: Vec<usize> = (0..cols).collect();

    for k in 0..cols {
        if pivot {
            let best = (k..cols)
                .map(|j| (j, norm2(&(k..rows).map(|i| a[(i, j)]).collect::<Vec<_>>())))
                .fold((k, -1.0), |acc, (j, nrm)| if nrm > acc.1 { (j, nrm) } else { acc });
            if best.0 != k {
                for i in 0..rows {
                    let tmp = a[(i, k)];
                    a[(i, k)] = a[(i, best.0)];
                    a[(i, best.0)] = tmp;
                }
                perm.swap(k, best.0);
            }
        }
        let x: Vec<C64> = (k..rows).map(|i| a[(i, k)]).collect();
        let Some((v, beta)) = householder_vector(&x) else { continue };
        // A ← P·A on rows k.., columns k..
        for j in k..cols {
            let col: Vec<C64> = (k..rows).map(|i| a[(i, j)]).collect();
            let w = dotc(&v, &col) * beta;
            for (off, vi) in v.iter().enumerate() {
                a[(k + off, j)] -= vi * w;
            }
        }
        for i in k + 1..rows {
            a[(i, k)] = C64::new(0.0, 0.0);
        }
        // Q ← Q·P
        for i in 0..rows {
            let w: C64 = v.iter().enumerate().map(|(off, vi)| q[(i, k + off)] * vi).sum::<C64>() * beta;
            for (off, vi) in v.iter().enumerate() {
                q[(i, k + off)] -= w * vi.conj();
            }
        }
    }

    let q_thin = DenseMatrix::from_fn(rows, cols, |i, j| q[(i, j)]);
    let r = DenseMatrix::from_fn(cols, cols, |i, j| if i <= j { a[(i, j)] } else { C64::new(0.0, 0.0) });
    Ok(Factors { q: q_thin, r, perm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn identity_is_left_alone() {
        let (q, r) = householder_qr(&DenseMatrix::identity(3)).unwrap();
        assert_eq!(q, DenseMatrix::identity(3));
        assert_eq!(r, DenseMatrix::identity(3));
    }

    #[test]
    fn single_reflection() {
        let m = DenseMatrix::from_real_rows(&[[0.0], [1.0]]);
        let (q, r) = householder_qr(&m).unwrap();
        let sign = r[(0, 0)].re.signum();
        assert!((r[(0, 0)].norm() - 1.0).abs() < 1e-15);
        assert!(q[(0, 0)].norm() < 1e-15);
        assert!((q[(1, 0)] * sign - c64(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn wide_input_is_rejected() {
        assert!(householder_qr(&DenseMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn pivoted_rank_of_singular_matrix() {
        let m = DenseMatrix::from_real_rows(&[[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [1.0, 0.0, 1.0]]);
        let f = householder_qr_pivoted(&m).unwrap();
        assert_eq!(f.numerical_rank(1e-12), 2);
        let mp = DenseMatrix::from_fn(3, 3, |i, j| m[(i, f.perm[j])]);
        let qr = f.q.matmul(&f.r).unwrap();
        assert!(qr.sub(&mp).unwrap().frobenius_norm() < 1e-13);
    }
}
