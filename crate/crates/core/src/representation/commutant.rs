//! Dimension of the commutant of a set of tables.
//!
//! The commutant is the space of `d x d` matrices `X` with `XA = AX` for
//! every row display `A` in the set. It always contains the identity; by
//! Schur's lemma a dimension of 1 means the set acts irreducibly over the
//! complex numbers.

use crate::cracovian::{Cracovian, Scalar};

use super::RepresentationError;

/// Relative size below which a reduced equation counts as dependent.
const RANK_EPS: f64 = 1e-9;

/// Incremental row echelon basis; every stored row is normalised at its pivot
/// and vanishes at the pivots stored before it.
struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
    eps: f64,
}

impl Echelon {
    fn insert(&mut self, mut row: Vec<Scalar>) {
        for (p, basis) in &self.rows {
            let f = row[*p];
            if f.norm() != 0.0 {
                row.iter_mut().zip(basis).for_each(|(x, b)| *x -= f * b);
            }
        }
        let (p, m) = row
            .iter()
            .enumerate()
            .map(|(i, z)| (i, z.norm()))
            .fold((0, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if m > self.eps {
            let inv = row[p].inv();
            row.iter_mut().for_each(|x| *x *= inv);
            self.rows.push((p, row));
        }
    }
}

fn check_sizes(tables: &[Cracovian]) -> Result<usize, RepresentationError> {
    let first = tables.first().ok_or(RepresentationError::Empty)?;
    let d = first.n_rows();
    for (i, t) in tables.iter().enumerate() {
        if !t.is_square() || t.n_rows() != d {
            return Err(RepresentationError::SizeMismatch {
                name: format!("table {i}"),
                expected: format!("{d} x {d}"),
                found: t.shape().to_string(),
            });
        }
    }
    Ok(d)
}

/// `d² - rank` of the stacked linear system `XA - AX = 0`.
pub fn commutant_dimension(tables: &[Cracovian]) -> Result<usize, RepresentationError> {
    let d = check_sizes(tables)?;
    let n = d * d;
    let scale = tables
        .iter()
        .flat_map(|t| t.entries().iter().map(|z| z.norm()))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut echelon = Echelon {
        rows: Vec::new(),
        eps: RANK_EPS * scale,
    };
    // The identity always commutes, so the rank never exceeds d² - 1.
    'tables: for t in tables {
        // Row display: a(r, c) = t(c, r).
        let a = |r: usize, c: usize| t.get(c, r);
        for r in 0..d {
            for c in 0..d {
                // Σ_i X[r,i] A[i,c] - Σ_i A[r,i] X[i,c]; unknown X[p,q] at p*d + q.
                let mut row = vec![Scalar::new(0.0, 0.0); n];
                for i in 0..d {
                    row[r * d + i] += a(i, c);
                    row[i * d + c] -= a(r, i);
                }
                echelon.insert(row);
                if echelon.rows.len() + 1 == n {
                    break 'tables;
                }
            }
        }
    }
    Ok(n - echelon.rows.len())
}

/// Commutant dimension of the set together with the transposes of its tables.
pub fn transpose_closed_commutant_dimension(tables: &[Cracovian]) -> Result<usize, RepresentationError> {
    let mut all = tables.to_vec();
    all.extend(tables.iter().map(Cracovian::transpose));
    commutant_dimension(&all)
}
