//! Cracovians: rectangular tables multiplied column by column.
//!
//! An entry is addressed `(k, l)` where `k` is the column and `l` the row, and
//! the product is
//!
//! ```text
//! (A·B)(k, l) = Σ_i A(k, i) · B(l, i)
//! ```
//!
//! i.e. column `k` of `A` dotted with column `l` of `B` (no conjugation). The
//! product needs both factors to have the same number of rows; it is neither
//! associative nor commutative, and the diagonal-ones table `T` is a right unit
//! that transposes from the left.
//!
//! # Display convention
//!
//! For I/O and for the bridge to ordinary matrices a cracovian is *displayed*
//! as a classical matrix whose row `l`, column `k` entry is `A(k, l)`. Storage
//! is column-major, so `entries[k * n_rows + l] = A(k, l)` is also the
//! column-major layout of the displayed matrix. Under this convention
//!
//! ```text
//! display(A·B) = display(B)ᵀ · display(A)
//! ```
//!
//! and every identity relating the two products can be checked exactly on
//! integer tables.

mod inverse;
pub mod io;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;
use thiserror::Error;

use crate::Tolerance;

pub use inverse::SINGULARITY_RATIO;

/// Complex scalar used for every table entry.
pub type Scalar = Complex64;

/// Table dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub n_cols: usize,
    pub n_rows: usize,
}

impl Shape {
    pub fn is_square(&self) -> bool {
        self.n_cols == self.n_rows
    }
}

impl fmt::Display for Shape {
    /// Printed as `rows x cols`, matching the row display.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.n_rows, self.n_cols)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CracovianError {
    #[error("{op}: incompatible shapes {left} and {right} (rows x cols)")]
    DimensionMismatch {
        op: &'static str,
        left: Shape,
        right: Shape,
    },
    #[error("chain product: factor {index} has {found} rows but the running product has {expected}")]
    ChainMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("chain product of an empty list")]
    EmptyChain,
    #[error("{op}: table must be square, got {shape}")]
    NotSquare { op: &'static str, shape: Shape },
    #[error("{op}: expected a one-column table, got {shape}")]
    NotColumn { op: &'static str, shape: Shape },
    #[error("singular table: pivot {pivot:e} below threshold {threshold:e}")]
    Singular { pivot: f64, threshold: f64 },
    #[error("table dimensions must be positive")]
    ZeroDimension,
    #[error("expected {expected} entries for {shape}, found {found}")]
    EntryCount {
        shape: Shape,
        expected: usize,
        found: usize,
    },
    #[error("non-finite entry at column {col}, row {row}")]
    NonFinite { col: usize, row: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRows { row: usize, expected: usize, found: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A dense table of complex scalars with column-by-column product semantics.
#[derive(Debug, Clone, PartialEq)]
pub struct Cracovian {
    n_cols: usize,
    n_rows: usize,
    entries: Vec<Scalar>,
}

impl Cracovian {
    /// Builds a table from column-major entries: `entries[k * n_rows + l] = A(k, l)`.
    pub fn new(n_cols: usize, n_rows: usize, entries: Vec<Scalar>) -> Result<Self, CracovianError> {
        if n_cols == 0 || n_rows == 0 {
            return Err(CracovianError::ZeroDimension);
        }
        let expected = n_cols * n_rows;
        if entries.len() != expected {
            return Err(CracovianError::EntryCount {
                shape: Shape { n_cols, n_rows },
                expected,
                found: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(CracovianError::NonFinite {
                col: pos / n_rows,
                row: pos % n_rows,
            });
        }
        Ok(Self {
            n_cols,
            n_rows,
            entries,
        })
    }

    /// Builds a table from its row display: `rows[l][k] = A(k, l)`.
    pub fn from_rows<R: AsRef<[Scalar]>>(rows: &[R]) -> Result<Self, CracovianError> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        if n_rows == 0 || n_cols == 0 {
            return Err(CracovianError::ZeroDimension);
        }
        for (row, r) in rows.iter().enumerate() {
            if r.as_ref().len() != n_cols {
                return Err(CracovianError::RaggedRows {
                    row,
                    expected: n_cols,
                    found: r.as_ref().len(),
                });
            }
        }
        let mut entries = Vec::with_capacity(n_cols * n_rows);
        for k in 0..n_cols {
            for r in rows {
                entries.push(r.as_ref()[k]);
            }
        }
        Self::new(n_cols, n_rows, entries)
    }

    /// Row display from real values; handy for tests and examples.
    pub fn from_real_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, CracovianError> {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Scalar::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Builds a table from `f(k, l)`.
    ///
    /// # Panics
    ///
    /// Panics on zero dimensions or non-finite values.
    pub fn from_fn(n_cols: usize, n_rows: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(n_cols * n_rows);
        for k in 0..n_cols {
            for l in 0..n_rows {
                entries.push(f(k, l));
            }
        }
        Self::new(n_cols, n_rows, entries).expect("from_fn: invalid table")
    }

    pub(crate) fn from_parts_unchecked(n_cols: usize, n_rows: usize, entries: Vec<Scalar>) -> Self {
        debug_assert_eq!(entries.len(), n_cols * n_rows);
        Self {
            n_cols,
            n_rows,
            entries,
        }
    }

    /// Square diagonal table `diag(d_0, d_1, ...)`.
    pub fn diagonal(diag: &[Scalar]) -> Result<Self, CracovianError> {
        let n = diag.len();
        if n == 0 {
            return Err(CracovianError::ZeroDimension);
        }
        Ok(Self::from_fn(n, n, |k, l| {
            if k == l {
                diag[k]
            } else {
                Scalar::new(0.0, 0.0)
            }
        }))
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn shape(&self) -> Shape {
        Shape {
            n_cols: self.n_cols,
            n_rows: self.n_rows,
        }
    }

    pub fn is_square(&self) -> bool {
        self.n_cols == self.n_rows
    }

    /// Entry in column `k`, row `l`.
    #[inline]
    pub fn get(&self, k: usize, l: usize) -> Scalar {
        assert!(k < self.n_cols && l < self.n_rows, "index ({k}, {l}) out of range");
        self.entries[k * self.n_rows + l]
    }

    /// Column `k` as a contiguous slice.
    #[inline]
    pub fn column(&self, k: usize) -> &[Scalar] {
        &self.entries[k * self.n_rows..(k + 1) * self.n_rows]
    }

    /// Column-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// The row display, `rows[l][k] = A(k, l)`.
    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.n_rows)
            .map(|l| (0..self.n_cols).map(|k| self.get(k, l)).collect())
            .collect()
    }

    /// Returns a copy with one entry replaced.
    pub fn with_entry(&self, k: usize, l: usize, value: Scalar) -> Result<Self, CracovianError> {
        let mut entries = self.entries.clone();
        entries[k * self.n_rows + l] = value;
        Self::new(self.n_cols, self.n_rows, entries)
    }

    pub fn scale(&self, factor: Scalar) -> Self {
        Self::from_parts_unchecked(
            self.n_cols,
            self.n_rows,
            self.entries.iter().map(|&z| z * factor).collect(),
        )
    }

    /// True when every entry has integer real and imaginary parts.
    pub fn is_gaussian_integer(&self) -> bool {
        self.entries.iter().all(|z| z.re.fract() == 0.0 && z.im.fract() == 0.0)
    }

    /// Column-by-column product `self · other`.
    pub fn crac_product(&self, other: &Cracovian) -> Result<Cracovian, CracovianError> {
        if self.n_rows != other.n_rows {
            return Err(CracovianError::DimensionMismatch {
                op: "cracovian product",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let (m, n) = (self.n_cols, other.n_cols);
        let mut entries = Vec::with_capacity(m * n);
        for k in 0..m {
            let a = self.column(k);
            for l in 0..n {
                let b = other.column(l);
                entries.push(a.iter().zip(b).map(|(x, y)| x * y).sum());
            }
        }
        Ok(Cracovian::from_parts_unchecked(m, n, entries))
    }

    /// `A(l, k)` at `(k, l)`; the same as multiplying by `T` from the left.
    pub fn transpose(&self) -> Cracovian {
        Cracovian::from_fn(self.n_rows, self.n_cols, |k, l| self.get(l, k))
    }

    /// Ordinary row-by-column product of the two row displays.
    pub fn matrix_product(&self, other: &Cracovian) -> Result<Cracovian, CracovianError> {
        if self.n_cols != other.n_rows {
            return Err(CracovianError::DimensionMismatch {
                op: "matrix product",
                left: self.shape(),
                right: other.shape(),
            });
        }
        // display(self) is n_rows x n_cols; row r, column c of the product.
        let inner = self.n_cols;
        Ok(Cracovian::from_fn(other.n_cols, self.n_rows, |c, r| {
            (0..inner).map(|i| self.get(i, r) * other.get(c, i)).sum()
        }))
    }

    /// The cracovian inverse: the unique `X` with `self · X = X · self = T`.
    /// Computed as the transposed classical inverse of the row display.
    pub fn crac_inverse(&self) -> Result<Cracovian, CracovianError> {
        if !self.is_square() {
            return Err(CracovianError::NotSquare {
                op: "cracovian inverse",
                shape: self.shape(),
            });
        }
        // Storage read row-major is the transposed display, whose classical
        // inverse is already the transposed classical inverse.
        let n = self.n_rows;
        let inv = inverse::invert_row_major(n, &self.entries)?;
        Ok(Cracovian::from_parts_unchecked(n, n, transpose_square(n, &inv)))
    }

    /// `self · T(other) == other · T(self)`, the cracovian form of `AB = BA`.
    pub fn commutes(&self, other: &Cracovian, tol: Tolerance) -> Result<bool, CracovianError> {
        if !self.is_square() || self.shape() != other.shape() {
            return Err(CracovianError::DimensionMismatch {
                op: "commutation test",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let lhs = self.crac_product(&other.transpose())?;
        let rhs = other.crac_product(&self.transpose())?;
        Ok(lhs.approx_eq(&rhs, tol))
    }

    /// Equal shapes and every entry admitted by `tol`.
    pub fn approx_eq(&self, other: &Cracovian, tol: Tolerance) -> bool {
        self.first_mismatch(other, tol).is_none() && self.shape() == other.shape()
    }

    /// First `(k, l)` where the tables disagree beyond `tol`. Shape mismatch
    /// reports `(0, 0)`.
    pub fn first_mismatch(&self, other: &Cracovian, tol: Tolerance) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((0, 0));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .position(|(&a, &b)| !tol.admits(a, b))
            .map(|pos| (pos / self.n_rows, pos % self.n_rows))
    }

    /// Largest entry-wise modulus of the difference, `None` on shape mismatch.
    pub fn max_abs_diff(&self, other: &Cracovian) -> Option<f64> {
        if self.shape() != other.shape() {
            return None;
        }
        Some(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max),
        )
    }

    pub fn is_symmetric(&self, tol: Tolerance) -> bool {
        self.is_square() && self.approx_eq(&self.transpose(), tol)
    }

    pub fn trace(&self) -> Option<Scalar> {
        self.is_square().then(|| (0..self.n_cols).map(|k| self.get(k, k)).sum())
    }
}

fn transpose_square(n: usize, data: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![Scalar::new(0.0, 0.0); n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = data[i * n + j];
        }
    }
    out
}

impl Neg for &Cracovian {
    type Output = Cracovian;

    fn neg(self) -> Cracovian {
        self.scale(Scalar::new(-1.0, 0.0))
    }
}

impl Neg for Cracovian {
    type Output = Cracovian;

    fn neg(self) -> Cracovian {
        -&self
    }
}

fn zip_entries(
    a: &Cracovian,
    b: &Cracovian,
    op: &'static str,
    f: impl Fn(Scalar, Scalar) -> Scalar,
) -> Result<Cracovian, CracovianError> {
    if a.shape() != b.shape() {
        return Err(CracovianError::DimensionMismatch {
            op,
            left: a.shape(),
            right: b.shape(),
        });
    }
    let entries = a.entries.iter().zip(&b.entries).map(|(&x, &y)| f(x, y)).collect();
    Ok(Cracovian::from_parts_unchecked(a.n_cols, a.n_rows, entries))
}

impl Add for &Cracovian {
    type Output = Result<Cracovian, CracovianError>;

    fn add(self, rhs: &Cracovian) -> Self::Output {
        zip_entries(self, rhs, "sum", |x, y| x + y)
    }
}

impl Sub for &Cracovian {
    type Output = Result<Cracovian, CracovianError>;

    fn sub(self, rhs: &Cracovian) -> Self::Output {
        zip_entries(self, rhs, "difference", |x, y| x - y)
    }
}

impl fmt::Display for Cracovian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&io::to_csv(self))
    }
}

/// The `n x n` transposing cracovian: ones on the diagonal, zeros elsewhere.
pub fn transposing_cracovian(n: usize) -> Result<Cracovian, CracovianError> {
    if n == 0 {
        return Err(CracovianError::ZeroDimension);
    }
    Cracovian::diagonal(&vec![Scalar::new(1.0, 0.0); n])
}

/// Left-to-right product `((A·B)·C)·...`. Every factor must have as many rows
/// as the running product.
pub fn chain_product(factors: &[Cracovian]) -> Result<Cracovian, CracovianError> {
    let (first, rest) = factors.split_first().ok_or(CracovianError::EmptyChain)?;
    let mut acc = first.clone();
    for (offset, factor) in rest.iter().enumerate() {
        if factor.n_rows() != acc.n_rows() {
            return Err(CracovianError::ChainMismatch {
                index: offset + 1,
                expected: acc.n_rows(),
                found: factor.n_rows(),
            });
        }
        acc = acc.crac_product(factor)?;
    }
    Ok(acc)
}

fn require_column(op: &'static str, x: &Cracovian) -> Result<(), CracovianError> {
    if x.n_cols() != 1 {
        return Err(CracovianError::NotColumn { op, shape: x.shape() });
    }
    Ok(())
}

/// Image of the one-column vector `x` under the linear map `mapping`:
/// `x · T(mapping)`, equal to the matrix-vector product.
pub fn apply_linear_mapping(x: &Cracovian, mapping: &Cracovian) -> Result<Cracovian, CracovianError> {
    require_column("linear mapping", x)?;
    if !mapping.is_square() {
        return Err(CracovianError::NotSquare {
            op: "linear mapping",
            shape: mapping.shape(),
        });
    }
    if mapping.n_rows() != x.n_rows() {
        return Err(CracovianError::DimensionMismatch {
            op: "linear mapping",
            left: x.shape(),
            right: mapping.shape(),
        });
    }
    x.crac_product(&mapping.transpose())
}

/// The same linear map expressed in the basis changed by `basis`:
/// `(basis · T(mapping)) · basis⁻¹`, equal to `S⁻¹ A S` for matrices.
pub fn similarity_transform(mapping: &Cracovian, basis: &Cracovian) -> Result<Cracovian, CracovianError> {
    if !mapping.is_square() || mapping.shape() != basis.shape() {
        return Err(CracovianError::DimensionMismatch {
            op: "similarity transform",
            left: mapping.shape(),
            right: basis.shape(),
        });
    }
    let basis_inv = basis.crac_inverse()?;
    chain_product(&[basis.clone(), mapping.transpose(), basis_inv])
}

/// New basis (or component) column `e · S`, equal to `Sᵀ e` for matrices.
pub fn change_basis(e: &Cracovian, basis: &Cracovian) -> Result<Cracovian, CracovianError> {
    require_column("change of basis", e)?;
    if !basis.is_square() || basis.n_rows() != e.n_rows() {
        return Err(CracovianError::DimensionMismatch {
            op: "change of basis",
            left: e.shape(),
            right: basis.shape(),
        });
    }
    e.crac_product(basis)
}
