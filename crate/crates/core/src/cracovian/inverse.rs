use super::{CracovianError, Scalar};

/// A pivot is rejected when its modulus falls below this fraction of the
/// largest row norm (sum of moduli) of the input.
pub const SINGULARITY_RATIO: f64 = 1e-12;

/// Classical inverse of a row-major `n x n` matrix by Gauss-Jordan elimination
/// with partial pivoting. Returns the inverse in row-major order.
pub(crate) fn invert_row_major(n: usize, data: &[Scalar]) -> Result<Vec<Scalar>, CracovianError> {
    debug_assert_eq!(data.len(), n * n);
    let max_row_norm = data
        .chunks(n)
        .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let threshold = SINGULARITY_RATIO * max_row_norm;

    let mut a = data.to_vec();
    let mut inv = vec![Scalar::new(0.0, 0.0); n * n];
    for i in 0..n {
        inv[i * n + i] = Scalar::new(1.0, 0.0);
    }

    for col in 0..n {
        let (pivot_row, pivot_mod) = (col..n)
            .map(|r| (r, a[r * n + col].norm()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if pivot_mod < threshold || pivot_mod == 0.0 {
            return Err(CracovianError::Singular {
                pivot: pivot_mod,
                threshold,
            });
        }
        if pivot_row != col {
            for j in 0..n {
                a.swap(pivot_row * n + j, col * n + j);
                inv.swap(pivot_row * n + j, col * n + j);
            }
        }
        let p = a[col * n + col].inv();
        for j in 0..n {
            a[col * n + j] *= p;
            inv[col * n + j] *= p;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r * n + col];
            if factor == Scalar::new(0.0, 0.0) {
                continue;
            }
            for j in 0..n {
                let (av, iv) = (a[col * n + j], inv[col * n + j]);
                a[r * n + j] -= factor * av;
                inv[r * n + j] -= factor * iv;
            }
        }
    }
    Ok(inv)
}
