//! Dense complex kernels sized for matrices of order up to a few hundred.
//!
//! Everything here is a pure function of its inputs. Tolerances are the ones
//! the higher-level modules rely on and are fixed constants, not knobs.

mod eig;
mod hessenberg;
mod inverse;
mod qr;
mod svd;

pub use eig::{eigen_decompose, qr_eigenvalues, EigenDecomposition};
pub use hessenberg::hessenberg;
pub use inverse::{inverse_iteration, inverse_iteration_from, LuFactorization};
pub use qr::{householder_qr, householder_qr_pivoted, PivotedQr};
pub use svd::{singular_values, smallest_singular_value};

use crate::C64;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

/// Householder vector for `x`: `(I − β v v^H) x = −phase(x₀)·‖x‖·e₁`.
///
/// Returns `None` when `x[1..]` is already zero, so callers can skip the
/// reflection and keep exact zeros/identities.
pub(crate) fn householder_vector(x: &[C64]) -> Option<(Vec<C64>, f64)> {
    if x.len() < 2 || x[1..].iter().all(|z| *z == C64::new(0.0, 0.0)) {
        return None;
    }
    let nrm = crate::matrix::norm2(x);
    let phase = if x[0].norm() == 0.0 { C64::new(1.0, 0.0) } else { x[0] / x[0].norm() };
    let mut v = x.to_vec();
    v[0] += phase * nrm;
    let vv: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    Some((v, 2.0 / vv))
}

/// Plane rotation `G = [[c, s], [−s̄, c]]` with `G·[a; b] = [r; 0]`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Givens {
    pub c: f64,
    pub s: C64,
}

impl Givens {
    pub fn zeroing(a: C64, b: C64) -> Self {
        let (na, nb) = (a.norm(), b.norm());
        if nb == 0.0 {
            return Givens { c: 1.0, s: C64::new(0.0, 0.0) };
        }
        if na == 0.0 {
            return Givens { c: 0.0, s: C64::new(1.0, 0.0) };
        }
        let nrm = na.hypot(nb);
        let alpha = a / na;
        Givens { c: na / nrm, s: alpha * b.conj() / nrm }
    }

    /// Rows `(x, y) ← (c·x + s·y, −s̄·x + c·y)`.
    #[inline]
    pub fn apply_left(&self, x: C64, y: C64) -> (C64, C64) {
        (x * self.c + self.s * y, -self.s.conj() * x + y * self.c)
    }

    /// Columns `(x, y) ← (c·x + s̄·y, −s·x + c·y)`, i.e. right multiplication by `G^H`.
    #[inline]
    pub fn apply_right(&self, x: C64, y: C64) -> (C64, C64) {
        (x * self.c + self.s.conj() * y, -self.s * x + y * self.c)
    }
}
