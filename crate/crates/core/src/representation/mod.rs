//! Cracovian representations of Clifford quasigroups.
//!
//! A representation assigns a square cracovian `C(x̂)` to every quasigroup
//! element so that `C(â)·C(b̂) = C(â·b̂)` with the column-by-column product.
//! Given tables `Γ_μ` that anticommute, square to the identity and are
//! antisymmetric, the cracovian whose row display is `±Γ_μΓ_ν...Γ_σ`
//! (ordinary products, ascending indices) represents `±γ̂_{μν...σ}`:
//! transposition of the display then realises the involution, and the
//! display of a cracovian product is `display(B)ᵀ display(A)`.

mod commutant;
mod gamma;
pub mod io;

use rayon::prelude::*;
use thiserror::Error;

use crate::clifford::{CliffordElement, CliffordQuasigroup};
use crate::cracovian::{transposing_cracovian, Cracovian, CracovianError};
use crate::quasigroup::Quasigroup;
use crate::tolerance::Tolerance;

pub use commutant::{commutant_dimension, transpose_closed_commutant_dimension};
pub use gamma::{build_gamma_matrices, check_gamma_conditions, GammaDefect, GammaSet, MAX_GAMMA_COUNT};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RepresentationError {
    #[error("number of gamma tables {n} outside 1..={max}", max = MAX_GAMMA_COUNT)]
    GammaCount { n: usize },
    #[error("no antisymmetric anticommuting set of {n} tables found up to dimension {max_dimension}")]
    ConstructionFailed { n: usize, max_dimension: usize },
    #[error("gamma condition violated: {0}")]
    GammaCondition(GammaDefect),
    #[error("quasigroup has {quasigroup} generators but {gammas} gamma tables were given")]
    GeneratorMismatch { quasigroup: usize, gammas: usize },
    #[error("table for {name} is {found} but the representation dimension is {expected}")]
    SizeMismatch {
        name: String,
        expected: String,
        found: String,
    },
    #[error("representation elements differ from the quasigroup: missing {missing:?}, unexpected {extra:?}")]
    ElementMismatch { missing: Vec<String>, extra: Vec<String> },
    #[error("duplicate element {0}")]
    DuplicateElement(String),
    #[error("empty set of tables")]
    Empty,
    #[error("invalid representation bundle: {0}")]
    Bundle(String),
    #[error(transparent)]
    Cracovian(#[from] CracovianError),
}

/// Square tables of a common size, one per named element.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    dimension: usize,
    names: Vec<String>,
    tables: Vec<Cracovian>,
}

impl Representation {
    /// Pairs names with tables; every table must be `d x d` for the same `d`.
    pub fn from_tables(names: Vec<String>, tables: Vec<Cracovian>) -> Result<Self, RepresentationError> {
        let first = tables.first().ok_or(RepresentationError::Empty)?;
        assert_eq!(names.len(), tables.len(), "one name per table");
        let dimension = first.n_rows();
        for (name, t) in names.iter().zip(&tables) {
            if !t.is_square() || t.n_rows() != dimension {
                return Err(RepresentationError::SizeMismatch {
                    name: name.clone(),
                    expected: format!("{dimension} x {dimension}"),
                    found: t.shape().to_string(),
                });
            }
        }
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(RepresentationError::DuplicateElement(w[0].clone()));
        }
        Ok(Self {
            dimension,
            names,
            tables,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn tables(&self) -> &[Cracovian] {
        &self.tables
    }

    pub fn table(&self, index: usize) -> &Cracovian {
        &self.tables[index]
    }

    pub fn table_named(&self, name: &str) -> Option<&Cracovian> {
        self.names.iter().position(|n| n == name).map(|i| &self.tables[i])
    }

    /// Reorders the tables to follow `q`'s element order. Fails listing the
    /// symmetric difference when the element sets differ.
    pub fn aligned_to(&self, q: &Quasigroup) -> Result<Self, RepresentationError> {
        let (missing, extra) = element_mismatch(q.names(), &self.names);
        if !missing.is_empty() || !extra.is_empty() {
            return Err(RepresentationError::ElementMismatch { missing, extra });
        }
        let tables = q
            .names()
            .iter()
            .map(|n| self.table_named(n).expect("sets agree").clone())
            .collect();
        Ok(Self {
            dimension: self.dimension,
            names: q.names().to_vec(),
            tables,
        })
    }

    /// Whether every table is exactly Gaussian-integer valued.
    pub fn is_gaussian_integer(&self) -> bool {
        self.tables.iter().all(Cracovian::is_gaussian_integer)
    }

    /// First element whose table has no cracovian inverse.
    pub fn first_singular(&self) -> Option<&str> {
        self.tables
            .iter()
            .position(|t| t.crac_inverse().is_err())
            .map(|i| self.names[i].as_str())
    }
}

/// Names in `expected` but not `found`, and in `found` but not `expected`,
/// both sorted.
pub fn element_mismatch(expected: &[String], found: &[String]) -> (Vec<String>, Vec<String>) {
    use std::collections::BTreeSet;
    let e: BTreeSet<&String> = expected.iter().collect();
    let f: BTreeSet<&String> = found.iter().collect();
    (
        e.difference(&f).map(|s| s.to_string()).collect(),
        f.difference(&e).map(|s| s.to_string()).collect(),
    )
}

/// The cracovian whose display is `±Γ_μ...Γ_σ` for `x = ±γ_μ...γ_σ`.
pub fn represent_element(x: CliffordElement, gammas: &GammaSet) -> Result<Cracovian, RepresentationError> {
    let mut acc = transposing_cracovian(gammas.dimension())?;
    for mu in x.generators() {
        acc = acc.matrix_product(gammas.gamma(mu))?;
    }
    Ok(if x.is_negative() { -acc } else { acc })
}

/// `C(x̂)` for every element of `cq`, in its element order.
pub fn extend_to_representation(
    cq: &CliffordQuasigroup,
    gammas: &GammaSet,
) -> Result<Representation, RepresentationError> {
    if cq.generators() != gammas.len() {
        return Err(RepresentationError::GeneratorMismatch {
            quasigroup: cq.generators(),
            gammas: gammas.len(),
        });
    }
    let tables = (0..cq.order())
        .into_par_iter()
        .map(|i| represent_element(cq.element(i), gammas))
        .collect::<Result<Vec<_>, _>>()?;
    Representation::from_tables(cq.quasigroup().names().to_vec(), tables)
}

/// A pair `(â, b̂)` with `C(â)·C(b̂) ≠ C(â·b̂)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismViolation {
    pub left: String,
    pub right: String,
    pub product: String,
    /// First differing entry `(k, l)`, or `None` when shapes differ.
    pub entry: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub pairs_checked: u64,
    /// Whether `C(τ)` equals the transposing cracovian.
    pub tau_is_transposing: bool,
    pub violation: Option<HomomorphismViolation>,
    pub tolerance: String,
}

impl HomomorphismReport {
    pub fn holds(&self) -> bool {
        self.tau_is_transposing && self.violation.is_none()
    }
}

/// Checks `C(â)·C(b̂) = C(â·b̂)` over all pairs and `C(τ) = T`. The
/// representation is matched to `q` by element name.
pub fn verify_crac_homomorphism(
    q: &Quasigroup,
    rep: &Representation,
    tol: Tolerance,
) -> Result<HomomorphismReport, RepresentationError> {
    let rep = rep.aligned_to(q)?;
    let n = q.order();
    let t = transposing_cracovian(rep.dimension())?;
    let tau_is_transposing = rep.table(q.tau()).approx_eq(&t, tol);
    let violation = (0..n * n).into_par_iter().find_map_first(|pair| {
        let (a, b) = (pair / n, pair % n);
        let ab = q.dot_raw(a, b);
        let lhs = rep.table(a).crac_product(rep.table(b)).ok();
        let rhs = rep.table(ab);
        let entry = match &lhs {
            Some(l) if l.shape() == rhs.shape() => l.first_mismatch(rhs, tol),
            _ => return Some((a, b, ab, None)),
        };
        entry.map(|e| (a, b, ab, Some(e)))
    });
    Ok(HomomorphismReport {
        pairs_checked: (n * n) as u64,
        tau_is_transposing,
        violation: violation.map(|(a, b, ab, entry)| HomomorphismViolation {
            left: q.name(a).to_string(),
            right: q.name(b).to_string(),
            product: q.name(ab).to_string(),
            entry,
        }),
        tolerance: tol.to_string(),
    })
}
