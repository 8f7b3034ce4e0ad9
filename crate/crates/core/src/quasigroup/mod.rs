//! The quasigroup of a group with involution.
//!
//! On the elements of `G` the dot product is `a·b = I(b) a`. The group unit
//! becomes the right unit `τ` (`a·τ = a`), which is not a left unit in general
//! (`τ·a = I(a)`). Rows and columns of the dot table are permutations, so the
//! table is a Latin square. Products of several factors are taken left to
//! right.

mod laws;

use thiserror::Error;

use crate::group::io::GroupFile;
use crate::group::{GroupError, InvolutiveGroup};

pub use laws::{verify_quasigroup_laws, Law, LawCheck, LawOptions, LawReport, Verdict};

/// Prefix marking an element taken into the dot product.
pub const CARET: &str = "^";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuasigroupError {
    #[error("quasigroup has no elements")]
    Empty,
    #[error("table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("element index {index} outside 0..{order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("empty chain")]
    EmptyChain,
    #[error("not a Latin square: {symbol} repeats in {line}")]
    NotLatin { line: String, symbol: String },
    #[error("{tau} is not a right unit: {element}·{tau} != {element}")]
    NotRightUnit { tau: String, element: String },
    #[error("{0}")]
    Table(#[from] GroupError),
}

/// Where a Latin-square check failed: `(row or column, index, repeated symbol)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatinDefect {
    Row { row: usize, symbol: usize },
    Column { col: usize, symbol: usize },
}

/// Outcome of the left-unit search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeftUnitSearch {
    /// `witnesses[x]` is some `a` with `x·a != a`.
    NoLeftUnit { witnesses: Vec<usize> },
    /// This element acts as a left unit.
    LeftUnit(usize),
}

/// A dot-product table with a designated right unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quasigroup {
    names: Vec<String>,
    table: Vec<u32>,
    tau: usize,
}

impl Quasigroup {
    /// Range-checks the table and verifies the Latin-square and right-unit
    /// properties.
    pub fn new(names: Vec<String>, table: Vec<usize>, tau: usize) -> Result<Self, QuasigroupError> {
        let q = Self::from_table(names, table, tau)?;
        if let Some(defect) = q.latin_defect() {
            return Err(q.latin_error(defect));
        }
        if let Some(a) = (0..q.order()).find(|&a| q.dot_raw(a, tau) != a) {
            return Err(QuasigroupError::NotRightUnit {
                tau: q.names[tau].clone(),
                element: q.names[a].clone(),
            });
        }
        Ok(q)
    }

    /// Range checks only; for tables read from files or deliberately corrupted
    /// ones that should still reach [`verify_quasigroup_laws`].
    pub fn from_table(names: Vec<String>, table: Vec<usize>, tau: usize) -> Result<Self, QuasigroupError> {
        let n = names.len();
        if n == 0 {
            return Err(QuasigroupError::Empty);
        }
        if table.len() != n * n {
            return Err(QuasigroupError::TableSize {
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= n) {
            return Err(QuasigroupError::IndexOutOfRange { index: bad, order: n });
        }
        if tau >= n {
            return Err(QuasigroupError::IndexOutOfRange { index: tau, order: n });
        }
        Ok(Self {
            names,
            table: table.into_iter().map(|v| v as u32).collect(),
            tau,
        })
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub(crate) fn dot_raw(&self, a: usize, b: usize) -> usize {
        self.table[a * self.names.len() + b] as usize
    }

    /// `a·b`.
    pub fn dot(&self, a: usize, b: usize) -> Result<usize, QuasigroupError> {
        let n = self.order();
        for i in [a, b] {
            if i >= n {
                return Err(QuasigroupError::IndexOutOfRange { index: i, order: n });
            }
        }
        Ok(self.dot_raw(a, b))
    }

    /// `τ·a`, written `τa`.
    pub fn tau_left(&self, a: usize) -> usize {
        self.dot_raw(self.tau, a)
    }

    /// Left-to-right product `((a·b)·c)·...`.
    pub fn chain_dot(&self, factors: &[usize]) -> Result<usize, QuasigroupError> {
        let (&first, rest) = factors.split_first().ok_or(QuasigroupError::EmptyChain)?;
        if first >= self.order() {
            return Err(QuasigroupError::IndexOutOfRange {
                index: first,
                order: self.order(),
            });
        }
        rest.iter().try_fold(first, |acc, &f| self.dot(acc, f))
    }

    pub(crate) fn chain_raw(&self, factors: &[usize]) -> usize {
        factors[1..].iter().fold(factors[0], |acc, &f| self.dot_raw(acc, f))
    }

    /// The unique `x` with `a·x = τ`, if the row of `a` contains `τ` once.
    pub fn solve_right_inverse(&self, a: usize) -> Option<usize> {
        let n = self.order();
        let mut hits = (0..n).filter(|&x| self.dot_raw(a, x) == self.tau);
        let first = hits.next()?;
        hits.next().is_none().then_some(first)
    }

    pub fn latin_defect(&self) -> Option<LatinDefect> {
        let n = self.order();
        let mut seen = vec![false; n];
        for row in 0..n {
            seen.fill(false);
            for col in 0..n {
                let s = self.dot_raw(row, col);
                if std::mem::replace(&mut seen[s], true) {
                    return Some(LatinDefect::Row { row, symbol: s });
                }
            }
        }
        for col in 0..n {
            seen.fill(false);
            for row in 0..n {
                let s = self.dot_raw(row, col);
                if std::mem::replace(&mut seen[s], true) {
                    return Some(LatinDefect::Column { col, symbol: s });
                }
            }
        }
        None
    }

    fn latin_error(&self, defect: LatinDefect) -> QuasigroupError {
        match defect {
            LatinDefect::Row { row, symbol } => QuasigroupError::NotLatin {
                line: format!("row {}", self.names[row]),
                symbol: self.names[symbol].clone(),
            },
            LatinDefect::Column { col, symbol } => QuasigroupError::NotLatin {
                line: format!("column {}", self.names[col]),
                symbol: self.names[symbol].clone(),
            },
        }
    }

    /// For each `x`, looks for `a` with `x·a != a`.
    pub fn left_unit_witness(&self) -> LeftUnitSearch {
        let n = self.order();
        let mut witnesses = Vec::with_capacity(n);
        for x in 0..n {
            match (0..n).find(|&a| self.dot_raw(x, a) != a) {
                Some(a) => witnesses.push(a),
                None => return LeftUnitSearch::LeftUnit(x),
            }
        }
        LeftUnitSearch::NoLeftUnit { witnesses }
    }

    /// Returns a copy with one entry replaced, without re-checking any law.
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> Self {
        let n = self.order();
        assert!(a < n && b < n && value < n, "index out of range");
        let mut out = self.clone();
        out.table[a * n + b] = value as u32;
        out
    }

    /// Swaps two entries of a row. The row stays a permutation; the two
    /// affected columns do not.
    pub fn with_swapped(&self, row: usize, c1: usize, c2: usize) -> Self {
        let n = self.order();
        let mut out = self.clone();
        out.table.swap(row * n + c1, row * n + c2);
        out
    }

    /// Same layout as a group file, with `"unit"` and `"tau"` both naming `τ`.
    pub fn to_file(&self) -> GroupFile {
        let n = self.order();
        GroupFile {
            names: self.names.clone(),
            unit: self.names[self.tau].clone(),
            cayley: (0..n)
                .map(|a| (0..n).map(|b| self.names[self.dot_raw(a, b)].clone()).collect())
                .collect(),
            tau: Some(self.names[self.tau].clone()),
        }
    }

    /// Reads a quasigroup file. `"tau"` wins over `"unit"` when both are present.
    pub fn from_file(file: &GroupFile) -> Result<Self, QuasigroupError> {
        let table = file.to_table()?;
        let tau = file.tau_index()?.unwrap_or(table.unit());
        let n = table.order();
        let flat = (0..n * n).map(|i| table.product(i / n, i % n)).collect();
        Self::from_table(table.names().to_vec(), flat, tau)
    }

    /// Human-readable name table: a header of column names, then one row per
    /// element starting with its name.
    pub fn to_csv(&self) -> String {
        let n = self.order();
        let mut out = String::from("·");
        for name in &self.names {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for a in 0..n {
            out.push_str(&self.names[a]);
            for b in 0..n {
                out.push(',');
                out.push_str(&self.names[self.dot_raw(a, b)]);
            }
            out.push('\n');
        }
        out
    }
}

/// Builds the dot table `a·b = I(b) a` with `τ = e`; element names get a caret.
pub fn build_quasigroup(gi: &InvolutiveGroup) -> Quasigroup {
    let g = gi.group();
    let n = g.order();
    let names = g.names().iter().map(|s| format!("{CARET}{s}")).collect();
    let table = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n, i % n);
            g.product(gi.involute(b), a)
        })
        .collect();
    Quasigroup::new(names, table, g.unit())
        .expect("dot table of a group with involution is a Latin square with right unit")
}

/// `I(a⁻¹)`, the two-sided inverse of `a` under the dot product.
pub fn right_inverse(gi: &InvolutiveGroup, a: usize) -> usize {
    gi.involute(gi.group().inverse(a))
}
