//! Clifford groups over signed generator bitmasks.
//!
//! An element `±γ_μγ_ν...γ_σ` (generators in ascending order) is stored as a
//! sign and a bitmask with bit `μ - 1` set for each generator present.
//! Generators anticommute and square to `+1`, so the product of two monomials
//! is the XOR of their masks with a sign given by the number of transpositions
//! needed to sort the concatenated generator list.
//!
//! The involution reverses a monomial and negates each generator:
//! `I(γ_μ...γ_σ) = I(γ_σ)...I(γ_μ)` with `I(γ_μ) = -γ_μ` and `I(±1) = ±1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use thiserror::Error;

use crate::group::{CayleyTable, FiniteGroup, GroupError, Involution, InvolutionError, InvolutiveGroup};
use crate::quasigroup::{build_quasigroup, Quasigroup};

/// Hard limit on the number of generators.
pub const MAX_GENERATORS: usize = 20;
/// Default cap used by [`enumerate_clifford_group`]; a Cayley table beyond it
/// no longer fits in memory comfortably.
pub const DEFAULT_GENERATOR_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("number of generators {n} outside 1..={cap}")]
    GeneratorCount { n: usize, cap: usize },
    #[error("mask {mask:#b} uses generators beyond γ{n}")]
    MaskTooWide { mask: u32, n: usize },
    #[error("cannot parse element name {0:?}")]
    BadName(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
}

/// `±γ_{μν...σ}` as (sign, generator bitmask).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordElement {
    mask: u32,
    negative: bool,
}

impl CliffordElement {
    pub const ONE: Self = Self {
        mask: 0,
        negative: false,
    };
    pub const MINUS_ONE: Self = Self {
        mask: 0,
        negative: true,
    };

    pub fn new(negative: bool, mask: u32) -> Self {
        Self { mask, negative }
    }

    /// `γ_μ` for `μ >= 1`.
    pub fn generator(mu: usize) -> Self {
        assert!((1..=32).contains(&mu), "generator index out of range");
        Self::new(false, 1 << (mu - 1))
    }

    /// `γ_{μ1}γ_{μ2}...` in the given order, reduced to canonical form.
    pub fn monomial(generators: &[usize]) -> Self {
        generators.iter().fold(Self::ONE, |acc, &mu| acc * Self::generator(mu))
    }

    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Generator indices (1-based) in ascending order.
    pub fn generators(&self) -> impl Iterator<Item = usize> + '_ {
        (0..32).filter(move |b| self.mask >> b & 1 == 1).map(|b| b + 1)
    }

    /// Index in the enumeration order used by [`enumerate_clifford_group`].
    pub fn index(&self) -> usize {
        ((self.mask as usize) << 1) | self.negative as usize
    }

    pub fn from_index(index: usize) -> Self {
        Self::new(index & 1 == 1, (index >> 1) as u32)
    }

    fn fits(&self, n: usize) -> bool {
        n >= 32 || self.mask >> n == 0
    }

    /// Canonical product, sign from the transposition count.
    pub fn product(self, other: Self) -> Self {
        Self::new(
            self.negative ^ other.negative ^ reorder_parity(self.mask, other.mask),
            self.mask ^ other.mask,
        )
    }

    /// The sign flips by `(-1)^(k(k+1)/2)` for grade `k`.
    pub fn involution(self) -> Self {
        let k = self.grade();
        Self::new(self.negative ^ ((k * (k + 1) / 2) % 2 == 1), self.mask)
    }

    /// The reversed monomial; the sign flips by `(-1)^(k(k-1)/2)`.
    pub fn inverse(self) -> Self {
        let k = self.grade();
        let flips = k >= 1 && ((k * (k - 1) / 2) % 2 == 1);
        Self::new(self.negative ^ flips, self.mask)
    }
}

/// Parity of the number of transpositions that sort `a`'s generators
/// followed by `b`'s: for each generator of `b`, count the generators of `a`
/// above it.
fn reorder_parity(a: u32, b: u32) -> bool {
    let mut swaps = 0u32;
    let mut rest = b;
    while rest != 0 {
        let bit = rest.trailing_zeros();
        swaps += (a >> bit >> 1).count_ones();
        rest &= rest - 1;
    }
    swaps % 2 == 1
}

impl Mul for CliffordElement {
    type Output = CliffordElement;

    fn mul(self, rhs: Self) -> Self {
        self.product(rhs)
    }
}

impl Neg for CliffordElement {
    type Output = CliffordElement;

    fn neg(self) -> Self {
        Self::new(!self.negative, self.mask)
    }
}

impl fmt::Display for CliffordElement {
    /// `+1`, `-1`, `+g1g3`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.negative { "-" } else { "+" })?;
        if self.mask == 0 {
            return f.write_str("1");
        }
        for g in self.generators() {
            write!(f, "g{g}")?;
        }
        Ok(())
    }
}

impl FromStr for CliffordElement {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliffordError::BadName(s.to_string());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'+') => (false, &s[1..]),
            Some(b'-') => (true, &s[1..]),
            _ => return Err(bad()),
        };
        if body == "1" {
            return Ok(Self::new(negative, 0));
        }
        let body = body.strip_prefix('g').ok_or_else(bad)?;
        let mut mask = 0u32;
        let mut last = 0usize;
        for part in body.split('g') {
            let mu: usize = part.parse().map_err(|_| bad())?;
            // Canonical names list generators strictly ascending.
            if !(1..=32).contains(&mu) || mu <= last {
                return Err(bad());
            }
            last = mu;
            mask |= 1 << (mu - 1);
        }
        Ok(Self::new(negative, mask))
    }
}

fn check_count(n: usize, cap: usize) -> Result<(), CliffordError> {
    if n == 0 || n > cap.min(MAX_GENERATORS) {
        return Err(CliffordError::GeneratorCount {
            n,
            cap: cap.min(MAX_GENERATORS),
        });
    }
    Ok(())
}

/// Product of two elements of the group on `n` generators.
pub fn clifford_product(x: CliffordElement, y: CliffordElement, n: usize) -> Result<CliffordElement, CliffordError> {
    for e in [x, y] {
        if !e.fits(n) {
            return Err(CliffordError::MaskTooWide { mask: e.mask, n });
        }
    }
    Ok(x * y)
}

/// All `2^(n+1)` elements, in index order: `+1, -1, +g1, -g1, +g2, ...`.
pub fn clifford_elements(n: usize) -> Vec<CliffordElement> {
    (0..1usize << (n + 1)).map(CliffordElement::from_index).collect()
}

/// The Clifford group on `n` generators as a Cayley table. Orders up to the
/// default associativity cap are fully verified; larger ones are built as
/// trusted since the table comes from the canonical product.
pub fn enumerate_clifford_group(n: usize) -> Result<FiniteGroup, CliffordError> {
    enumerate_clifford_group_capped(n, DEFAULT_GENERATOR_CAP)
}

pub fn enumerate_clifford_group_capped(n: usize, cap: usize) -> Result<FiniteGroup, CliffordError> {
    check_count(n, cap)?;
    let elements = clifford_elements(n);
    let names = elements.iter().map(|e| e.to_string()).collect();
    let table = CayleyTable::from_fn(names, CliffordElement::ONE.index(), |a, b| {
        (CliffordElement::from_index(a) * CliffordElement::from_index(b)).index()
    })?;
    let group = if table.order() <= crate::group::DEFAULT_ASSOCIATIVITY_CAP {
        FiniteGroup::new(table)?
    } else {
        FiniteGroup::trusted(table)?
    };
    Ok(group)
}

/// The involution as a permutation of element indices.
pub fn clifford_involution(n: usize) -> Involution {
    Involution::from_fn(1 << (n + 1), |i| CliffordElement::from_index(i).involution().index())
}

/// A Clifford group, its involution and the resulting quasigroup. Element
/// index `i` is [`CliffordElement::from_index`]`(i)` in all three.
#[derive(Debug, Clone)]
pub struct CliffordQuasigroup {
    generators: usize,
    system: InvolutiveGroup,
    quasigroup: Quasigroup,
}

impl CliffordQuasigroup {
    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn group_with_involution(&self) -> &InvolutiveGroup {
        &self.system
    }

    pub fn group(&self) -> &FiniteGroup {
        self.system.group()
    }

    pub fn quasigroup(&self) -> &Quasigroup {
        &self.quasigroup
    }

    pub fn order(&self) -> usize {
        self.quasigroup.order()
    }

    pub fn element(&self, index: usize) -> CliffordElement {
        CliffordElement::from_index(index)
    }

    /// Index of `-τ`, the image of `-1`.
    pub fn minus_tau(&self) -> usize {
        CliffordElement::MINUS_ONE.index()
    }

    /// `x̂·ŷ = I(y) x` on elements.
    pub fn dot(&self, x: CliffordElement, y: CliffordElement) -> CliffordElement {
        CliffordElement::from_index(self.quasigroup.dot_raw(x.index(), y.index()))
    }
}

pub fn build_clifford_quasigroup(n: usize) -> Result<CliffordQuasigroup, CliffordError> {
    let group = enumerate_clifford_group(n)?;
    let system = InvolutiveGroup::new(group, clifford_involution(n))?;
    let quasigroup = build_quasigroup(&system);
    Ok(CliffordQuasigroup {
        generators: n,
        system,
        quasigroup,
    })
}

/// A formal integer combination of signed monomials, keyed by mask.
pub type MonomialSum = BTreeMap<u32, i64>;

fn accumulate(sum: &mut MonomialSum, e: CliffordElement) {
    let c = sum.entry(e.mask).or_insert(0);
    *c += e.sign() as i64;
    if *c == 0 {
        sum.remove(&e.mask);
    }
}

/// `γ̂_μ·γ̂_ν + γ̂_ν·γ̂_μ` as a combination of monomials, evaluated with the
/// dot table of `q` (elements indexed as in [`clifford_elements`]).
pub fn anticommutator(q: &Quasigroup, mu: usize, nu: usize) -> MonomialSum {
    let (a, b) = (
        CliffordElement::generator(mu).index(),
        CliffordElement::generator(nu).index(),
    );
    let mut sum = MonomialSum::new();
    accumulate(&mut sum, CliffordElement::from_index(q.dot_raw(a, b)));
    accumulate(&mut sum, CliffordElement::from_index(q.dot_raw(b, a)));
    sum
}

/// Checks `γ̂_μ·γ̂_ν + γ̂_ν·γ̂_μ = -2δ_{μν} τ` for all `μ, ν <= n` on the dot
/// table `q`; returns the first failing pair.
pub fn structural_condition_violation(q: &Quasigroup, n: usize) -> Option<(usize, usize)> {
    for mu in 1..=n {
        for nu in 1..=n {
            let expected: MonomialSum = if mu == nu { [(0, -2)].into() } else { MonomialSum::new() };
            if anticommutator(q, mu, nu) != expected {
                return Some((mu, nu));
            }
        }
    }
    None
}

/// For every group element `a`, the automorphism `x ↦ g x g⁻¹` with
/// `g = I(a)` must map the generators to elements that again square to `+1`
/// and pairwise anticommute. Returns the first failing `(a, μ, ν)`.
pub fn automorphism_structure_violation(n: usize) -> Option<(CliffordElement, usize, usize)> {
    for a in clifford_elements(n) {
        let g = a.involution();
        let g_inv = g.inverse();
        let image = |mu: usize| g * CliffordElement::generator(mu) * g_inv;
        for mu in 1..=n {
            for nu in 1..=n {
                let (x, y) = (image(mu), image(nu));
                let ok = if mu == nu {
                    x * x == CliffordElement::ONE
                } else {
                    x * y == -(y * x) && x.mask != y.mask
                };
                if !ok {
                    return Some((a, mu, nu));
                }
            }
        }
    }
    None
}
