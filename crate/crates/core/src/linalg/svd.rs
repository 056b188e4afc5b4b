use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{dotc, norm2};
use crate::{DenseMatrix, Error, Result, C64};

const MAX_SWEEPS: usize = 30;
const ANGLE_TOL: f64 = 1e-14;

/// Singular values in decreasing order by one-sided (Hestenes) Jacobi.
///
/// Column pairs are rotated until every normalized inner product
/// `|g_i^H g_j| / (‖g_i‖‖g_j‖)` is below `1e-14` (or `rows·ε` when that is
/// larger); more than 30 sweeps is a [`Error::NonConvergence`].
pub fn singular_values(m: &DenseMatrix) -> Result<Vec<f64>> {
    let work = if m.rows() >= m.cols() { m.clone() } else { m.conj_transpose() };
    let (rows, cols) = (work.rows(), work.cols());
    let mut g: Vec<Vec<C64>> = (0..cols).map(|j| work.column(j)).collect();
    let tol = ANGLE_TOL.max(rows as f64 * f64::EPSILON);

    let mut converged = cols < 2;
    for _ in 0..MAX_SWEEPS {
        if converged {
            break;
        }
        let mut rotated = false;
        for i in 0..cols {
            for j in i + 1..cols {
                let alpha: f64 = g[i].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = g[j].iter().map(|z| z.norm_sqr()).sum();
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let gamma = dotc(&g[i], &g[j]);
                let gabs = gamma.norm();
                if gabs <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Unimodular rescale of column j makes the inner product real.
                let phase = gamma.conj() / gabs;
                let zeta = (beta - alpha) / (2.0 * gabs);
                let t = if zeta >= 0.0 { 1.0 } else { -1.0 } / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = g.split_at_mut(j);
                for (x, y) in left[i].iter_mut().zip(right[0].iter_mut()) {
                    let yp = *y * phase;
                    let xi = *x;
                    *x = xi * c - yp * s;
                    *y = xi * s + yp * c;
                }
            }
        }
        converged = !rotated;
    }
    if !converged {
        return Err(Error::NonConvergence { routine: "jacobi_svd", iterations: MAX_SWEEPS });
    }
    let mut sv: Vec<f64> = g.iter().map(|c| norm2(c)).collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    Ok(sv)
}

pub fn smallest_singular_value(m: &DenseMatrix) -> Result<f64> {
    if m.rows() == 0 || m.cols() == 0 {
        return Err(Error::InvalidOrder { order: 0, minimum: 1 });
    }
    Ok(*singular_values(m)?.last().expect("nonempty"))
}
