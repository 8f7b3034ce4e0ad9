//! Exhaustive-or-sampled sweeps over tuples of element indices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const CHUNK: u64 = 4096;

/// Result of a sweep: the first failing tuple (in sweep order), how many
/// tuples were checked, and whether the tuples were sampled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SweepOutcome {
    pub witness: Option<Vec<usize>>,
    pub checked: u64,
    pub sampled: bool,
}

impl SweepOutcome {
    pub fn merge(self, other: SweepOutcome) -> SweepOutcome {
        SweepOutcome {
            witness: self.witness.or(other.witness),
            checked: self.checked + other.checked,
            sampled: self.sampled || other.sampled,
        }
    }
}

fn decode(mut index: u64, n: usize, arity: usize, out: &mut [usize]) {
    for slot in out.iter_mut().take(arity).rev() {
        *slot = (index % n as u64) as usize;
        index /= n as u64;
    }
}

/// Runs `holds` over all `n^arity` tuples when that count is within `budget`,
/// otherwise over `budget` tuples drawn from a generator seeded with `seed`.
pub(crate) fn sweep<F>(n: usize, arity: usize, budget: u64, seed: u64, holds: F) -> SweepOutcome
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if n == 0 || arity == 0 {
        return SweepOutcome {
            witness: None,
            checked: 0,
            sampled: false,
        };
    }
    let total = (n as u64).checked_pow(arity as u32);
    match total {
        Some(total) if total <= budget => {
            let witness = (0..total.div_ceil(CHUNK)).into_par_iter().find_map_first(|chunk| {
                let mut buf = vec![0usize; arity];
                let end = ((chunk + 1) * CHUNK).min(total);
                for idx in chunk * CHUNK..end {
                    decode(idx, n, arity, &mut buf);
                    if !holds(&buf) {
                        return Some(buf);
                    }
                }
                None
            });
            SweepOutcome {
                witness,
                checked: total,
                sampled: false,
            }
        }
        _ => {
            let witness = (0..budget.div_ceil(CHUNK)).into_par_iter().find_map_first(|chunk| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ chunk.wrapping_mul(0x9E37_79B9_7F4A_7C15));
                let mut buf = vec![0usize; arity];
                let len = CHUNK.min(budget - chunk * CHUNK);
                for _ in 0..len {
                    for slot in buf.iter_mut() {
                        *slot = rng.random_range(0..n);
                    }
                    if !holds(&buf) {
                        return Some(buf);
                    }
                }
                None
            });
            SweepOutcome {
                witness,
                checked: budget,
                sampled: true,
            }
        }
    }
}
