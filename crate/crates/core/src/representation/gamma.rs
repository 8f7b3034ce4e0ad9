//! Antisymmetric anticommuting involutive tables built from Pauli strings.
//!
//! A Pauli string on `n` qubits is a tensor product of `I, X, Y, Z`; it is
//! Hermitian and unitary, so it squares to the identity. `X` and `Z` are
//! symmetric while `Y = [[0,-i],[i,0]]` is antisymmetric, so a string is
//! antisymmetric exactly when it contains an odd number of `Y` factors.
//! Real antisymmetric tables cannot square to the identity, which is why the
//! entries are complex.
//!
//! The builder searches for `N` mutually anticommuting antisymmetric strings,
//! starting at `d = 2^⌈N/2⌉` and doubling `d` until a set is found, then
//! verifies the three conditions on the resulting tables before returning.

use crate::cracovian::{Cracovian, Scalar};
use crate::tolerance::Tolerance;

use super::RepresentationError;

pub const MAX_GAMMA_COUNT: usize = 10;
/// Largest qubit count tried by the search (`d = 128`).
const MAX_QUBITS: u32 = 7;
/// Search nodes visited per dimension before growing it.
const NODE_BUDGET: u64 = 2_000_000;

/// `N` tables `Γ_μ` of common size `d` whose row displays are mutually
/// anticommuting, square to the identity and satisfy `Γ_μᵀ = -Γ_μ`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaSet {
    dimension: usize,
    gammas: Vec<Cracovian>,
}

impl GammaSet {
    /// Wraps user-supplied tables after checking the three conditions.
    pub fn new(gammas: Vec<Cracovian>) -> Result<Self, RepresentationError> {
        check_gamma_conditions(&gammas)?;
        let dimension = gammas[0].n_rows();
        Ok(Self { dimension, gammas })
    }

    /// Skips the checks; used to build deliberately broken sets in tests.
    pub fn new_unchecked(gammas: Vec<Cracovian>) -> Self {
        let dimension = gammas.first().map_or(0, |g| g.n_rows());
        Self { dimension, gammas }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    /// `Γ_μ` for `μ >= 1`.
    pub fn gamma(&self, mu: usize) -> &Cracovian {
        &self.gammas[mu - 1]
    }

    pub fn gammas(&self) -> &[Cracovian] {
        &self.gammas
    }

    /// Replaces `Γ_μ` without checking.
    pub fn with_gamma(&self, mu: usize, table: Cracovian) -> Self {
        let mut gammas = self.gammas.clone();
        gammas[mu - 1] = table;
        Self::new_unchecked(gammas)
    }
}

/// Which condition failed, with the offending indices (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaDefect {
    NotSquare(usize),
    SizeMismatch(usize),
    NotAntisymmetric(usize),
    SquareNotIdentity(usize),
    NotAnticommuting(usize, usize),
}

impl std::fmt::Display for GammaDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::NotSquare(m) => write!(f, "Γ{m} is not square"),
            Self::SizeMismatch(m) => write!(f, "Γ{m} differs in size from Γ1"),
            Self::NotAntisymmetric(m) => write!(f, "Γ{m} is not antisymmetric"),
            Self::SquareNotIdentity(m) => write!(f, "Γ{m} does not square to the identity"),
            Self::NotAnticommuting(m, n) => write!(f, "Γ{m} and Γ{n} do not anticommute"),
        }
    }
}

/// Checks antisymmetry, `Γ² = 1` and pairwise anticommutation of the row
/// displays, exactly for Gaussian-integer tables and to the default
/// tolerance otherwise.
pub fn check_gamma_conditions(gammas: &[Cracovian]) -> Result<(), RepresentationError> {
    let first = gammas.first().ok_or(RepresentationError::GammaCount { n: 0 })?;
    let tol = if gammas.iter().all(Cracovian::is_gaussian_integer) {
        Tolerance::Exact
    } else {
        Tolerance::default()
    };
    let d = first.n_rows();
    let defect = |d: GammaDefect| Err(RepresentationError::GammaCondition(d));
    for (i, g) in gammas.iter().enumerate() {
        let mu = i + 1;
        if !g.is_square() {
            return defect(GammaDefect::NotSquare(mu));
        }
        if g.n_rows() != d {
            return defect(GammaDefect::SizeMismatch(mu));
        }
        if !g.transpose().approx_eq(&-g, tol) {
            return defect(GammaDefect::NotAntisymmetric(mu));
        }
        if !g.matrix_product(g)?.approx_eq(&identity(d), tol) {
            return defect(GammaDefect::SquareNotIdentity(mu));
        }
    }
    for (i, a) in gammas.iter().enumerate() {
        for (j, b) in gammas.iter().enumerate().skip(i + 1) {
            let ab = a.matrix_product(b)?;
            let ba = b.matrix_product(a)?;
            if !ab.approx_eq(&-&ba, tol) {
                return defect(GammaDefect::NotAnticommuting(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

fn identity(d: usize) -> Cracovian {
    Cracovian::from_fn(d, d, |k, l| {
        if k == l {
            Scalar::new(1.0, 0.0)
        } else {
            Scalar::new(0.0, 0.0)
        }
    })
}

/// A Pauli string as x- and z-bitmasks: qubit `j` carries `X` when only bit
/// `j` of `x` is set, `Z` when only bit `j` of `z`, `Y` when both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pauli {
    x: u32,
    z: u32,
}

impl Pauli {
    fn y_count(self) -> u32 {
        (self.x & self.z).count_ones()
    }

    fn weight(self) -> u32 {
        (self.x | self.z).count_ones()
    }

    fn anticommutes(self, other: Pauli) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones() % 2 == 1
    }

    /// The row display on `n` qubits; qubit `j` acts on bit `j` of the index.
    fn table(self, n: u32) -> Cracovian {
        let d = 1usize << n;
        let one = Scalar::new(1.0, 0.0);
        let i = Scalar::new(0.0, 1.0);
        let mut rows = vec![vec![Scalar::new(0.0, 0.0); d]; d];
        for (r, row) in rows.iter_mut().enumerate() {
            let c = r ^ self.x as usize;
            let mut v = one;
            for j in 0..n {
                let rb = (r >> j) & 1;
                v *= match ((self.x >> j) & 1, (self.z >> j) & 1) {
                    (0, 0) | (1, 0) => one,
                    (0, 1) => {
                        if rb == 0 {
                            one
                        } else {
                            -one
                        }
                    }
                    // Y = [[0, -i], [i, 0]]
                    _ => {
                        if rb == 0 {
                            -i
                        } else {
                            i
                        }
                    }
                };
            }
            row[c] = v;
        }
        Cracovian::from_rows(&rows).expect("square table")
    }
}

/// Depth-first search for `need` mutually anticommuting strings. Candidates
/// are taken in increasing position so each set is visited once.
fn find_clique(pool: &[Pauli], need: usize, chosen: &mut Vec<Pauli>, nodes: &mut u64) -> bool {
    if chosen.len() == need {
        return true;
    }
    *nodes += 1;
    if *nodes > NODE_BUDGET {
        return false;
    }
    for (i, &p) in pool.iter().enumerate() {
        if chosen.len() + (pool.len() - i) < need {
            return false;
        }
        let next: Vec<Pauli> = pool[i + 1..].iter().copied().filter(|q| q.anticommutes(p)).collect();
        chosen.push(p);
        if find_clique(&next, need, chosen, nodes) {
            return true;
        }
        chosen.pop();
        if *nodes > NODE_BUDGET {
            return false;
        }
    }
    false
}

/// Builds `N` tables satisfying [`check_gamma_conditions`] for `1 <= N <= 10`.
/// The dimension is the first one at which the search succeeds; it is not
/// claimed to be minimal.
pub fn build_gamma_matrices(n: usize) -> Result<GammaSet, RepresentationError> {
    if !(1..=MAX_GAMMA_COUNT).contains(&n) {
        return Err(RepresentationError::GammaCount { n });
    }
    let start = (n as u32).div_ceil(2).max(1);
    for qubits in start..=MAX_QUBITS {
        let mut pool: Vec<Pauli> = (0..1u32 << qubits)
            .flat_map(|x| (0..1u32 << qubits).map(move |z| Pauli { x, z }))
            .filter(|p| p.y_count() % 2 == 1)
            .collect();
        pool.sort_by_key(|p| (p.weight(), p.x, p.z));
        let (mut chosen, mut nodes) = (Vec::with_capacity(n), 0u64);
        if find_clique(&pool, n, &mut chosen, &mut nodes) {
            let gammas: Vec<Cracovian> = chosen.iter().map(|p| p.table(qubits)).collect();
            check_gamma_conditions(&gammas)?;
            return Ok(GammaSet {
                dimension: 1 << qubits,
                gammas,
            });
        }
    }
    Err(RepresentationError::ConstructionFailed {
        n,
        max_dimension: 1 << MAX_QUBITS,
    })
}
