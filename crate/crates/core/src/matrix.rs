//! Dense and tridiagonal complex matrices.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64};

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from row-major entries; fails unless `rows·cols` entries are given.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch { left: rows * cols, right: data.len() });
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn from_real_rows<const N: usize>(rows: &[[f64; N]]) -> Self {
        Self::from_fn(rows.len(), N, |i, j| C64::new(rows[i][j], 0.0))
    }

    pub fn from_diagonal(diag: &[C64]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    /// Matrix whose columns are the given vectors (all of equal length).
    pub fn from_columns(columns: &[Vec<C64>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::LengthMismatch { left: rows, right: bad.len() });
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i]))
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[C64]) {
        for (i, &x) in v.iter().enumerate() {
            self[(i, j)] = x;
        }
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn diagonal(&self) -> Vec<C64> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        norm2(&self.data)
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn scale(&self, s: C64) -> Self {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, other: &Self, s: f64) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b * s).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// `self − μI` for square matrices.
    pub fn shifted(&self, mu: C64) -> Self {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= mu;
        }
        m
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, other.cols),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `x^H A y`.
    pub fn bilinear(&self, x: &[C64], y: &[C64]) -> C64 {
        dotc(x, &self.mul_vec(y))
    }

    /// Largest modulus of an entry strictly below the first subdiagonal.
    pub fn below_subdiagonal_max(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.rows {
            for j in 0..self.cols {
                if i > j + 1 {
                    m = m.max(self[(i, j)].norm());
                }
            }
        }
        m
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        Ok(())
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = C64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// General complex tridiagonal matrix stored by its three diagonals.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalMatrix {
    sub: Vec<C64>,
    diag: Vec<C64>,
    sup: Vec<C64>,
}

impl TridiagonalMatrix {
    pub fn new(sub: Vec<C64>, diag: Vec<C64>, sup: Vec<C64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::InvalidOrder { order: 0, minimum: 1 });
        }
        if sub.len() != n - 1 {
            return Err(Error::LengthMismatch { left: n - 1, right: sub.len() });
        }
        if sup.len() != n - 1 {
            return Err(Error::LengthMismatch { left: n - 1, right: sup.len() });
        }
        Ok(TridiagonalMatrix { sub, diag, sup })
    }

    /// Real symmetric tridiagonal matrix from its diagonal and off-diagonal.
    pub fn real_symmetric(diag: &[f64], off: &[f64]) -> Result<Self> {
        let off: Vec<C64> = off.iter().map(|&x| C64::new(x, 0.0)).collect();
        Self::new(off.clone(), diag.iter().map(|&x| C64::new(x, 0.0)).collect(), off)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn sub(&self) -> &[C64] {
        &self.sub
    }

    pub fn diag(&self) -> &[C64] {
        &self.diag
    }

    pub fn sup(&self) -> &[C64] {
        &self.sup
    }

    pub fn diag_mut(&mut self) -> &mut [C64] {
        &mut self.diag
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.order();
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.diag[i];
        }
        for i in 0..n - 1 {
            m[(i + 1, i)] = self.sub[i];
            m[(i, i + 1)] = self.sup[i];
        }
        m
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        let n = self.order();
        assert_eq!(v.len(), n, "vector length must match the matrix order");
        (0..n)
            .map(|i| {
                let mut acc = self.diag[i] * v[i];
                if i > 0 {
                    acc += self.sub[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    acc += self.sup[i] * v[i + 1];
                }
                acc
            })
            .collect()
    }

    pub fn conj_transpose(&self) -> Self {
        TridiagonalMatrix {
            sub: self.sup.iter().map(|z| z.conj()).collect(),
            diag: self.diag.iter().map(|z| z.conj()).collect(),
            sup: self.sub.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        let all: Vec<C64> = self.sub.iter().chain(&self.diag).chain(&self.sup).copied().collect();
        norm2(&all)
    }

    pub fn sub_matrix(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::LengthMismatch { left: self.order(), right: other.order() });
        }
        let diff = |a: &[C64], b: &[C64]| a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>();
        Ok(TridiagonalMatrix {
            sub: diff(&self.sub, &other.sub),
            diag: diff(&self.diag, &other.diag),
            sup: diff(&self.sup, &other.sup),
        })
    }

    /// True when every entry is real and `sub == sup`, up to `tol` relative to the norm.
    pub fn is_real_symmetric(&self, tol: f64) -> bool {
        let scale = self.frobenius_norm().max(f64::MIN_POSITIVE);
        let all_real = self.sub.iter().chain(&self.diag).chain(&self.sup).all(|z| z.im.abs() <= tol * scale);
        all_real && self.sub.iter().zip(&self.sup).all(|(a, b)| (a - b).norm() <= tol * scale)
    }
}

/// Euclidean norm with scaling, safe for entries near the overflow threshold.
pub fn norm2(v: &[C64]) -> f64 {
    let scale = v.iter().fold(0.0f64, |m, z| m.max(z.re.abs()).max(z.im.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return scale;
    }
    let ss: f64 = v
        .iter()
        .map(|z| {
            let (a, b) = (z.re / scale, z.im / scale);
            a * a + b * b
        })
        .sum();
    scale * ss.sqrt()
}

/// Conjugated inner product `a^H b`.
pub fn dotc(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Unit-norm copy of `v`; the zero vector is returned unchanged.
pub fn normalized(v: &[C64]) -> Vec<C64> {
    let nrm = norm2(v);
    if nrm == 0.0 {
        return v.to_vec();
    }
    v.iter().map(|z| z / nrm).collect()
}

/// `‖a − s·b‖₂`.
pub(crate) fn residual_norm(a: &[C64], s: C64, b: &[C64]) -> f64 {
    let r: Vec<C64> = a.iter().zip(b).map(|(x, y)| x - s * y).collect();
    norm2(&r)
}
