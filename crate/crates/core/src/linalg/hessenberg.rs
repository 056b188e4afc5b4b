use alloc::vec::Vec;

use super::householder_vector;
use crate::matrix::dotc;
use crate::{DenseMatrix, Error, Result, C64};

/// Unitary reduction to upper Hessenberg form: returns `(H, U)` with
/// `U^H·M·U = H`.
///
/// Columns that are already zero below the subdiagonal are skipped, so a
/// tridiagonal (or any Hessenberg) input comes back unchanged with `U = I`.
pub fn hessenberg(m: &DenseMatrix) -> Result<(DenseMatrix, DenseMatrix)> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch { expected: (m.rows(), m.rows()), found: (m.rows(), m.cols()) });
    }
    let n = m.rows();
    let mut h = m.clone();
    let mut u = DenseMatrix::identity(n);
    for k in 0..n.saturating_sub(2) {
        let x: Vec<C64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        let Some((v, beta)) = householder_vector(&x) else { continue };
        let base = k + 1;
        // H ← P·H
        for j in 0..n {
            let col: Vec<C64> = (base..n).map(|i| h[(i, j)]).collect();
            let w = dotc(&v, &col) * beta;
            for (off, vi) in v.iter().enumerate() {
                h[(base + off, j)] -= vi * w;
            }
        }
        // H ← H·P and U ← U·P
        for target in [&mut h, &mut u] {
            for i in 0..n {
                let w: C64 =
                    v.iter().enumerate().map(|(off, vi)| target[(i, base + off)] * vi).sum::<C64>() * beta;
                for (off, vi) in v.iter().enumerate() {
                    target[(i, base + off)] -= w * vi.conj();
                }
            }
        }
        for i in k + 2..n {
            h[(i, k)] = C64::new(0.0, 0.0);
        }
    }
    Ok((h, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    #[test]
    fn tridiagonal_input_is_a_no_op() {
        let t = crate::TridiagonalMatrix::new(
            alloc::vec![c64(1.0, 0.0), c64(2.0, 1.0)],
            alloc::vec![c64(0.0, 0.0), c64(3.0, 0.0), c64(-1.0, 0.0)],
            alloc::vec![c64(5.0, 0.0), c64(0.5, -0.5)],
        )
        .unwrap()
        .to_dense();
        let (h, u) = hessenberg(&t).unwrap();
        assert_eq!(h, t);
        assert_eq!(u, DenseMatrix::identity(3));
    }

    #[test]
    fn two_by_two_is_a_no_op() {
        let m = DenseMatrix::from_real_rows(&[[1.0, 2.0], [3.0, 4.0]]);
        let (h, u) = hessenberg(&m).unwrap();
        assert_eq!(h, m);
        assert_eq!(u, DenseMatrix::identity(2));
    }

    #[test]
    fn rejects_rectangular() {
        assert!(hessenberg(&DenseMatrix::zeros(2, 3)).is_err());
    }
}
