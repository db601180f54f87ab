//! Small dense complex matrices with row-major entry semantics.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Double-precision complex scalar.
pub type C64 = Complex<f64>;

/// Dense complex matrix. Entries are addressed `(row, col)`; the JSON form is
/// a row-major nested array of `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    inner: DMatrix<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            inner: DMatrix::zeros(rows, cols),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: DMatrix::identity(n, n),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> C64) -> Self {
        Self {
            inner: DMatrix::from_fn(rows, cols, f),
        }
    }

    /// Build from row-major nested entries; rows must be rectangular.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Self::from_fn(r, c, |i, j| rows[i][j]))
    }

    /// Convenience constructor from real row-major entries.
    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let complex: Vec<Vec<C64>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| C64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&complex)
    }

    pub fn rows(&self) -> usize {
        self.inner.nrows()
    }

    pub fn cols(&self) -> usize {
        self.inner.ncols()
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.inner[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.inner[(row, col)] = value;
    }

    pub fn trace(&self) -> C64 {
        self.inner.trace()
    }

    pub fn adjoint(&self) -> Self {
        Self {
            inner: self.inner.adjoint(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            inner: &self.inner * C64::new(s, 0.0),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner + &other.inner,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner - &other.inner,
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        Self {
            inner: &self.inner * &other.inner,
        }
    }

    /// Kronecker product, `self` as the leading (Alice-major) factor:
    /// `(A ⊗ B)[(i·rB + k), (j·cB + l)] = A[i,j] · B[k,l]`.
    pub fn kron(&self, other: &Self) -> Self {
        Self {
            inner: self.inner.kronecker(&other.inner),
        }
    }

    /// `tr(self · other)` without materializing the product.
    pub fn trace_product(&self, other: &Self) -> Result<C64> {
        if self.cols() != other.rows() || self.rows() != other.cols() {
            return Err(Error::DimensionMismatch(format!(
                "trace of product needs {}x{} against {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        let mut acc = C64::new(0.0, 0.0);
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                acc += self.get(r, c) * other.get(c, r);
            }
        }
        Ok(acc)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.is_square()
            && self
                .adjoint()
                .matmul(self)
                .max_abs_diff(&Self::identity(self.rows()))
                <= tol
    }

    /// Eigenvalues of the Hermitian part `(M + M†)/2`, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let herm = self.add(&self.adjoint()).scale(0.5);
        let eig = SymmetricEigen::new(herm.inner);
        let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        vals
    }

    /// Hermitian within `tol` and all eigenvalues ≥ −`tol`.
    pub fn is_psd(&self, tol: f64) -> bool {
        self.is_hermitian(tol)
            && self
                .hermitian_eigenvalues()
                .first()
                .is_none_or(|&min| min >= -tol)
    }

    /// Orthonormal basis of the column space (thin QR), with each column's
    /// phase fixed by the corresponding R diagonal so the result is unique.
    pub fn orthonormal_columns(&self) -> ComplexMatrix {
        let qr = self.inner.clone().qr();
        let mut q = qr.q();
        let r = qr.r();
        for j in 0..q.ncols() {
            let d = r[(j, j)];
            if d.norm() > 0.0 {
                let phase = d / d.norm();
                for i in 0..q.nrows() {
                    q[(i, j)] *= phase;
                }
            }
        }
        ComplexMatrix { inner: q }
    }
}

impl Serialize for ComplexMatrix {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<[f64; 2]>> = (0..self.rows())
            .map(|r| {
                (0..self.cols())
                    .map(|c| {
                        let e = self.get(r, c);
                        [e.re, e.im]
                    })
                    .collect()
            })
            .collect();
        rows.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ComplexMatrix {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<[f64; 2]>> = Deserialize::deserialize(de)?;
        let complex: Vec<Vec<C64>> = rows
            .iter()
            .map(|row| row.iter().map(|&[re, im]| C64::new(re, im)).collect())
            .collect();
        ComplexMatrix::from_rows(&complex).map_err(D::Error::custom)
    }
}
