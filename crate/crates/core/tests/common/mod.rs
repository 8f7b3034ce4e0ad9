//! Helpers shared by the integration test targets: random tables and
//! independent oracles built on nalgebra.

#![allow(dead_code)]

use krak::{Cracovian, Scalar};
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng, n_cols: usize, n_rows: usize) -> Cracovian {
    Cracovian::from_fn(n_cols, n_rows, |_, _| {
        Scalar::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn random_integer(rng: &mut ChaCha8Rng, n_cols: usize, n_rows: usize) -> Cracovian {
    Cracovian::from_fn(n_cols, n_rows, |_, _| {
        Scalar::new(rng.random_range(-9..=9) as f64, rng.random_range(-9..=9) as f64)
    })
}

/// The row display as an nalgebra matrix.
pub fn to_matrix(c: &Cracovian) -> DMatrix<Scalar> {
    DMatrix::from_fn(c.n_rows(), c.n_cols(), |r, k| c.get(k, r))
}

pub fn from_matrix(m: &DMatrix<Scalar>) -> Cracovian {
    Cracovian::from_fn(m.ncols(), m.nrows(), |k, r| m[(r, k)])
}

/// Largest entry-wise modulus of `a - b`; infinite when shapes differ.
pub fn residual(a: &Cracovian, b: &Cracovian) -> f64 {
    a.max_abs_diff(b).unwrap_or(f64::INFINITY)
}

/// Classical inverse of the row display by LU elimination.
pub fn oracle_inverse(c: &Cracovian) -> Option<DMatrix<Scalar>> {
    to_matrix(c).try_inverse()
}

/// `d² - rank(Aᵀ ⊗ 1 - 1 ⊗ A stacked)` via singular values.
pub fn oracle_commutant_dimension(tables: &[Cracovian]) -> usize {
    let d = tables[0].n_rows();
    let id = DMatrix::<Scalar>::identity(d, d);
    let blocks: Vec<DMatrix<Scalar>> = tables
        .iter()
        .map(|t| {
            let a = to_matrix(t);
            a.transpose().kronecker(&id) - id.kronecker(&a)
        })
        .collect();
    let mut stacked = DMatrix::<Scalar>::zeros(blocks.len() * d * d, d * d);
    for (i, b) in blocks.iter().enumerate() {
        stacked.rows_mut(i * d * d, d * d).copy_from(b);
    }
    let sv = stacked.singular_values();
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let rank = sv.iter().filter(|&&s| s > 1e-9 * max.max(1.0)).count();
    d * d - rank
}
