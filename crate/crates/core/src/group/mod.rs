//! Finite groups given by Cayley tables, and involutions on them.
//!
//! An involution `I` is a self-inverse anti-automorphism fixing the unit:
//! `I(I(g)) = g`, `I(ab) = I(b) I(a)`, `I(e) = e`. Each fixed `a` gives a
//! permutation `b ↦ I(a) b`; these maps form a group under composition.

pub mod catalog;
pub mod io;

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

/// Default order up to which associativity is checked exhaustively.
pub const DEFAULT_ASSOCIATIVITY_CAP: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group has no elements")]
    Empty,
    #[error("Cayley table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },
    #[error("Cayley entry at row {row}, column {col} is {value}, outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element index {index} outside 0..{order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element name {name:?} in {context}")]
    UnknownName { name: String, context: String },
    #[error("no entry for element {name:?} in {context}")]
    MissingEntry { name: String, context: String },
    #[error("order {order} exceeds the associativity check cap {cap}; construct as trusted")]
    TooLargeToVerify { order: usize, cap: usize },
    #[error("not associative: ({a}·{b})·{c} != {a}·({b}·{c})", a = .names[0], b = .names[1], c = .names[2])]
    NonAssociative { triple: [usize; 3], names: [String; 3] },
    #[error("unit {unit} fails on {element}: e·g or g·e differs from g")]
    UnitFailure { element: String, unit: String },
    #[error("{0} has no two-sided inverse")]
    NoInverse(String),
}

impl GroupError {
    /// True for failed group axioms, false for malformed input.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            GroupError::NonAssociative { .. } | GroupError::UnitFailure { .. } | GroupError::NoInverse(_)
        )
    }
}

/// A structurally well-formed multiplication table, not yet checked against
/// the group axioms. `product(a, b)` is the entry at row `a`, column `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTable {
    names: Vec<String>,
    table: Vec<u32>,
    unit: usize,
}

impl CayleyTable {
    /// `table` is row-major, `order x order`.
    pub fn new(names: Vec<String>, table: Vec<usize>, unit: usize) -> Result<Self, GroupError> {
        let order = names.len();
        if order == 0 {
            return Err(GroupError::Empty);
        }
        if order > u32::MAX as usize {
            return Err(GroupError::IndexOutOfRange {
                index: order,
                order: u32::MAX as usize,
            });
        }
        if table.len() != order * order {
            return Err(GroupError::TableSize {
                expected: order * order,
                found: table.len(),
            });
        }
        if unit >= order {
            return Err(GroupError::IndexOutOfRange { index: unit, order });
        }
        if let Some(pos) = table.iter().position(|&v| v >= order) {
            return Err(GroupError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: table[pos],
                order,
            });
        }
        let mut seen = HashMap::with_capacity(order);
        for name in &names {
            if seen.insert(name.as_str(), ()).is_some() {
                return Err(GroupError::DuplicateName(name.clone()));
            }
        }
        Ok(Self {
            names,
            table: table.into_iter().map(|v| v as u32).collect(),
            unit,
        })
    }

    /// Tabulates `op` over all pairs.
    pub fn from_fn(
        names: Vec<String>,
        unit: usize,
        op: impl Fn(usize, usize) -> usize + Sync,
    ) -> Result<Self, GroupError> {
        let n = names.len();
        let table: Vec<usize> = (0..n * n).into_par_iter().map(|i| op(i / n, i % n)).collect();
        Self::new(names, table, unit)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table[a * self.names.len() + b] as usize
    }

    pub fn unit(&self) -> usize {
        self.unit
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

    /// Returns a copy with one entry replaced (range-checked only).
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> Result<Self, GroupError> {
        let n = self.order();
        if a >= n || b >= n {
            return Err(GroupError::IndexOutOfRange {
                index: a.max(b),
                order: n,
            });
        }
        if value >= n {
            return Err(GroupError::EntryOutOfRange {
                row: a,
                col: b,
                value,
                order: n,
            });
        }
        let mut out = self.clone();
        out.table[a * n + b] = value as u32;
        Ok(out)
    }

    fn names_of<const K: usize>(&self, idx: [usize; K]) -> [String; K] {
        idx.map(|i| self.names[i].clone())
    }

    fn first_nonassociative(&self) -> Option<[usize; 3]> {
        let n = self.order();
        (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.product(a, b);
                for c in 0..n {
                    if self.product(ab, c) != self.product(a, self.product(b, c)) {
                        return Some([a, b, c]);
                    }
                }
            }
            None
        })
    }

    fn unit_failure(&self) -> Option<usize> {
        let e = self.unit;
        (0..self.order()).find(|&g| self.product(e, g) != g || self.product(g, e) != g)
    }

    fn inverse_table(&self) -> Result<Vec<u32>, GroupError> {
        let n = self.order();
        (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| self.product(g, h) == self.unit)
                    .filter(|&h| self.product(h, g) == self.unit)
                    .map(|h| h as u32)
                    .ok_or_else(|| GroupError::NoInverse(self.names[g].clone()))
            })
            .collect()
    }
}

/// Checks the group axioms on `candidate`, reporting the first violated one
/// with a witness. Associativity is checked first, over all triples, when the
/// order does not exceed `associativity_cap`.
pub fn verify_group(candidate: &CayleyTable, associativity_cap: usize) -> Result<(), GroupError> {
    check_axioms(candidate, Some(associativity_cap)).map(|_| ())
}

fn check_axioms(t: &CayleyTable, associativity_cap: Option<usize>) -> Result<Vec<u32>, GroupError> {
    if let Some(cap) = associativity_cap {
        if t.order() > cap {
            return Err(GroupError::TooLargeToVerify { order: t.order(), cap });
        }
        if let Some(triple) = t.first_nonassociative() {
            return Err(GroupError::NonAssociative {
                triple,
                names: t.names_of(triple),
            });
        }
    }
    if let Some(g) = t.unit_failure() {
        return Err(GroupError::UnitFailure {
            element: t.names[g].clone(),
            unit: t.names[t.unit].clone(),
        });
    }
    t.inverse_table()
}

/// A Cayley table known to satisfy the group axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: CayleyTable,
    inverses: Vec<u32>,
    trusted: bool,
}

impl FiniteGroup {
    /// Verifies every axiom, with the default associativity cap.
    pub fn new(table: CayleyTable) -> Result<Self, GroupError> {
        Self::with_cap(table, DEFAULT_ASSOCIATIVITY_CAP)
    }

    pub fn with_cap(table: CayleyTable, associativity_cap: usize) -> Result<Self, GroupError> {
        let inverses = check_axioms(&table, Some(associativity_cap))?;
        Ok(Self {
            table,
            inverses,
            trusted: false,
        })
    }

    /// Skips the cubic associativity check; unit and inverses are still checked.
    pub fn trusted(table: CayleyTable) -> Result<Self, GroupError> {
        let inverses = check_axioms(&table, None)?;
        Ok(Self {
            table,
            inverses,
            trusted: true,
        })
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.table.product(a, b)
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn unit(&self) -> usize {
        self.table.unit()
    }

    pub fn names(&self) -> &[String] {
        self.table.names()
    }

    pub fn name(&self, i: usize) -> &str {
        self.table.name(i)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.table.index_of(name)
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    /// Whether associativity was taken on trust.
    pub fn is_trusted(&self) -> bool {
        self.trusted
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.product(a, b) == self.product(b, a)))
    }

    /// Left-to-right product of a word.
    pub fn product_of(&self, word: &[usize]) -> usize {
        word.iter().fold(self.unit(), |acc, &g| self.product(acc, g))
    }

    fn check_index(&self, index: usize) -> Result<(), GroupError> {
        if index < self.order() {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index,
                order: self.order(),
            })
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("involution has {found} images, group has order {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image of element {element} is {image}, outside the group")]
    OutOfRange { element: usize, image: usize },
    #[error("I(I({0})) != {0}")]
    NotSelfInverse(String),
    #[error("I({a}{b}) != I({b})I({a})")]
    NotAntiHomomorphism { a: String, b: String },
    #[error("unit is mapped to {0}")]
    UnitNotFixed(String),
}

impl InvolutionError {
    pub fn is_violation(&self) -> bool {
        !matches!(self, InvolutionError::LengthMismatch { .. })
    }
}

/// A map on element indices; see [`verify_involution`] for the axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    map: Vec<u32>,
}

impl Involution {
    pub fn new(map: Vec<usize>) -> Self {
        Self {
            map: map.into_iter().map(|v| v as u32).collect(),
        }
    }

    pub fn identity(order: usize) -> Self {
        Self::new((0..order).collect())
    }

    /// `g ↦ g⁻¹`, an involution on every group.
    pub fn inversion(group: &FiniteGroup) -> Self {
        Self::new((0..group.order()).map(|g| group.inverse(g)).collect())
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> usize) -> Self {
        Self::new((0..order).map(f).collect())
    }

    #[inline]
    pub fn apply(&self, g: usize) -> usize {
        self.map[g] as usize
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// Returns a copy with one image replaced.
    pub fn with_image(&self, g: usize, image: usize) -> Self {
        let mut out = self.clone();
        out.map[g] = image as u32;
        out
    }
}

/// Checks the involution axioms: images in range, `I(I(g)) = g`,
/// `I(ab) = I(b) I(a)` on all pairs, and `I(e) = e`. The statement for longer
/// products follows from the pair case by induction.
pub fn verify_involution(group: &FiniteGroup, inv: &Involution) -> Result<(), InvolutionError> {
    let n = group.order();
    if inv.len() != n {
        return Err(InvolutionError::LengthMismatch {
            expected: n,
            found: inv.len(),
        });
    }
    if let Some(g) = (0..n).find(|&g| inv.apply(g) >= n) {
        return Err(InvolutionError::OutOfRange {
            element: g,
            image: inv.apply(g),
        });
    }
    if let Some(g) = (0..n).find(|&g| inv.apply(inv.apply(g)) != g) {
        return Err(InvolutionError::NotSelfInverse(group.name(g).to_string()));
    }
    let witness = (0..n).into_par_iter().find_map_first(|a| {
        (0..n)
            .find(|&b| inv.apply(group.product(a, b)) != group.product(inv.apply(b), inv.apply(a)))
            .map(|b| (a, b))
    });
    if let Some((a, b)) = witness {
        return Err(InvolutionError::NotAntiHomomorphism {
            a: group.name(a).to_string(),
            b: group.name(b).to_string(),
        });
    }
    let e = group.unit();
    if inv.apply(e) != e {
        return Err(InvolutionError::UnitNotFixed(group.name(inv.apply(e)).to_string()));
    }
    Ok(())
}

/// A group together with a verified involution.
#[derive(Debug, Clone)]
pub struct InvolutiveGroup {
    group: FiniteGroup,
    involution: Involution,
}

impl InvolutiveGroup {
    pub fn new(group: FiniteGroup, involution: Involution) -> Result<Self, InvolutionError> {
        verify_involution(&group, &involution)?;
        Ok(Self { group, involution })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn involution(&self) -> &Involution {
        &self.involution
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn involute(&self, g: usize) -> usize {
        self.involution.apply(g)
    }
}

/// `I(a) b`: the image of `b` under the automorphism fixed by `a`.
pub fn involution_automorphism(gi: &InvolutiveGroup, a: usize, b: usize) -> Result<usize, GroupError> {
    gi.group.check_index(a)?;
    gi.group.check_index(b)?;
    Ok(gi.group.product(gi.involute(a), b))
}

/// Exhaustively checks that the maps `b ↦ I(a) b` form a group under
/// composition: closure, associativity of the induced table, an identity map,
/// and an inverse map for each.
pub fn automorphism_group_check(gi: &InvolutiveGroup) -> bool {
    let n = gi.order();
    let maps: Vec<Vec<u32>> = (0..n)
        .map(|a| (0..n).map(|b| gi.group.product(gi.involute(a), b) as u32).collect())
        .collect();
    let lookup: HashMap<&[u32], usize> = maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    if lookup.len() != n {
        return false;
    }

    // compose[d][a] = index of (map_d ∘ map_a)
    let compose: Option<Vec<usize>> = (0..n * n)
        .into_par_iter()
        .map(|i| {
            let (d, a) = (i / n, i % n);
            let composed: Vec<u32> = maps[a].iter().map(|&x| maps[d][x as usize]).collect();
            lookup.get(composed.as_slice()).copied()
        })
        .collect();
    let Some(compose) = compose else {
        return false;
    };
    let comp = |x: usize, y: usize| compose[x * n + y];

    let associative = (0..n)
        .into_par_iter()
        .all(|x| (0..n).all(|y| (0..n).all(|z| comp(comp(x, y), z) == comp(x, comp(y, z)))));
    if !associative {
        return false;
    }
    let identity: Vec<u32> = (0..n as u32).collect();
    let Some(&id) = lookup.get(identity.as_slice()) else {
        return false;
    };
    (0..n).all(|a| (0..n).any(|b| comp(a, b) == id && comp(b, a) == id))
}
