//! The law suite for the quasigroup of a group with involution.
//!
//! Notation: `τa` is `τ·a`, `a⁻¹` is the solution of `a·x = τ` read off the
//! table, and chains are evaluated left to right.

use std::fmt;

use super::{LatinDefect, Quasigroup};
use crate::group::InvolutiveGroup;
use crate::sweep::{sweep, SweepOutcome};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOptions {
    /// Longest chain checked by the multi-factor laws.
    pub depth: usize,
    /// Largest number of tuples swept exhaustively per law; beyond it the
    /// law is checked on this many sampled tuples.
    pub budget: u64,
    pub seed: u64,
}

impl Default for LawOptions {
    fn default() -> Self {
        Self {
            depth: 5,
            budget: 1 << 24,
            seed: 0x5EED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    LatinSquare,
    RightUnit,
    LeftTauIsInvolution,
    DoubleLeftTau,
    QuasiAssociativity,
    GroupProduct,
    TwoSidedInverse,
    TauReversal,
    TauInversePair,
    InverseOfProduct,
    InverseOfTau,
    ChainInverse,
    TripleReversal,
    ChainReversal,
    Nonassociativity,
}

impl Law {
    pub const ALL: [Law; 15] = [
        Law::LatinSquare,
        Law::RightUnit,
        Law::LeftTauIsInvolution,
        Law::DoubleLeftTau,
        Law::QuasiAssociativity,
        Law::GroupProduct,
        Law::TwoSidedInverse,
        Law::TauReversal,
        Law::TauInversePair,
        Law::InverseOfProduct,
        Law::InverseOfTau,
        Law::ChainInverse,
        Law::TripleReversal,
        Law::ChainReversal,
        Law::Nonassociativity,
    ];

    pub fn description(&self) -> &'static str {
        match self {
            Law::LatinSquare => "Latin square",
            Law::RightUnit => "right unit: a·τ = a",
            Law::LeftTauIsInvolution => "left τ: τa = I(a)",
            Law::DoubleLeftTau => "double left τ: τ(τa) = a",
            Law::QuasiAssociativity => "quasi-associativity: (a·b)·c = a·(c·τb)",
            Law::GroupProduct => "group product: ab = b·I(a)",
            Law::TwoSidedInverse => "inverse I(a⁻¹) is two-sided",
            Law::TauReversal => "reversal: τ(a·b) = b·a",
            Law::TauInversePair => "(τa)·(τa⁻¹) = τ",
            Law::InverseOfProduct => "(a·b)⁻¹ = a⁻¹·b⁻¹",
            Law::InverseOfTau => "(τa)⁻¹ = τa⁻¹",
            Law::ChainInverse => "chain inverse (a·b·...)⁻¹ = a⁻¹·b⁻¹·...",
            Law::TripleReversal => "reversal: τ(a·b·c) = c·τb·a",
            Law::ChainReversal => "chain reversal: τ(g1·...·gp) = gp·τg(p-1)·...·τg2·g1",
            Law::Nonassociativity => "nonassociativity witness",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.description())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The law fails on these elements.
    Violated(Vec<usize>),
    /// A nonassociative triple was found.
    Witnessed(Vec<usize>),
    /// No nonassociative triple: the dot product is associative here.
    Degenerate,
}

impl Verdict {
    pub fn passes(&self) -> bool {
        !matches!(self, Verdict::Violated(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawCheck {
    pub law: Law,
    pub verdict: Verdict,
    /// Number of element tuples examined.
    pub checked: u64,
    pub sampled: bool,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    names: Vec<String>,
    checks: Vec<LawCheck>,
}

impl LawReport {
    pub fn checks(&self) -> &[LawCheck] {
        &self.checks
    }

    pub fn get(&self, law: Law) -> Option<&LawCheck> {
        self.checks.iter().find(|c| c.law == law)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.passes())
    }

    pub fn violations(&self) -> impl Iterator<Item = &LawCheck> {
        self.checks.iter().filter(|c| !c.verdict.passes())
    }

    fn witness_names(&self, w: &[usize]) -> String {
        let names: Vec<&str> = w.iter().map(|&i| self.names[i].as_str()).collect();
        format!("({})", names.join(", "))
    }

    /// One line per law: description, verdict and witness.
    pub fn render_line(&self, check: &LawCheck) -> String {
        let scope = if check.sampled {
            format!("{} sampled", check.checked)
        } else {
            format!("{} exhaustive", check.checked)
        };
        let verdict = match &check.verdict {
            Verdict::Holds => "pass".to_string(),
            Verdict::Violated(w) => format!("FAIL witness {}", self.witness_names(w)),
            Verdict::Witnessed(w) => format!("pass witness {}", self.witness_names(w)),
            Verdict::Degenerate => "pass associative (degenerate case)".to_string(),
        };
        let note = check.note.as_deref().map(|n| format!(" [{n}]")).unwrap_or_default();
        format!("{:<58} {verdict}{note} ({scope})", check.law.description())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}", self.render_line(c))?;
        }
        Ok(())
    }
}

fn check_from(law: Law, out: SweepOutcome) -> LawCheck {
    LawCheck {
        law,
        verdict: out.witness.map_or(Verdict::Holds, Verdict::Violated),
        checked: out.checked,
        sampled: out.sampled,
        note: None,
    }
}

/// Runs every law over the quasigroup `q` built from `gi` (element indices
/// shared). Pair and triple laws are exhaustive within `opts.budget`; the
/// chain laws run for every length `2..=opts.depth`.
///
/// # Panics
///
/// Panics if `q` and `gi` differ in order.
pub fn verify_quasigroup_laws(q: &Quasigroup, gi: &InvolutiveGroup, opts: &LawOptions) -> LawReport {
    let n = q.order();
    assert_eq!(n, gi.order(), "quasigroup and group orders differ");
    let g = gi.group();
    let tau = q.tau();
    let inv: Vec<Option<usize>> = (0..n).map(|a| q.solve_right_inverse(a)).collect();
    let sw = |arity: usize, f: &(dyn Fn(&[usize]) -> bool + Sync)| sweep(n, arity, opts.budget, opts.seed, f);

    let mut checks = Vec::with_capacity(Law::ALL.len());

    let latin = match q.latin_defect() {
        None => LawCheck {
            law: Law::LatinSquare,
            verdict: Verdict::Holds,
            checked: (n * n) as u64,
            sampled: false,
            note: None,
        },
        Some(defect) => {
            let (witness, note) = match defect {
                LatinDefect::Row { row, symbol } => (vec![row, symbol], "symbol repeats in row"),
                LatinDefect::Column { col, symbol } => (vec![col, symbol], "symbol repeats in column"),
            };
            LawCheck {
                law: Law::LatinSquare,
                verdict: Verdict::Violated(witness),
                checked: (n * n) as u64,
                sampled: false,
                note: Some(note.to_string()),
            }
        }
    };
    checks.push(latin);

    checks.push(check_from(Law::RightUnit, sw(1, &|t| q.dot_raw(t[0], tau) == t[0])));
    checks.push(check_from(
        Law::LeftTauIsInvolution,
        sw(1, &|t| q.tau_left(t[0]) == gi.involute(t[0])),
    ));
    checks.push(check_from(
        Law::DoubleLeftTau,
        sw(1, &|t| q.tau_left(q.tau_left(t[0])) == t[0]),
    ));
    checks.push(check_from(
        Law::QuasiAssociativity,
        sw(3, &|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            q.dot_raw(q.dot_raw(a, b), c) == q.dot_raw(a, q.dot_raw(c, q.tau_left(b)))
        }),
    ));
    checks.push(check_from(
        Law::GroupProduct,
        sw(2, &|t| g.product(t[0], t[1]) == q.dot_raw(t[1], gi.involute(t[0]))),
    ));
    checks.push(check_from(
        Law::TwoSidedInverse,
        sw(1, &|t| {
            let a = t[0];
            let x = gi.involute(g.inverse(a));
            q.dot_raw(a, x) == tau && q.dot_raw(x, a) == tau && inv[a] == Some(x)
        }),
    ));
    checks.push(check_from(
        Law::TauReversal,
        sw(2, &|t| q.tau_left(q.dot_raw(t[0], t[1])) == q.dot_raw(t[1], t[0])),
    ));
    checks.push(check_from(
        Law::TauInversePair,
        sw(1, &|t| {
            inv[t[0]].is_some_and(|ai| q.dot_raw(q.tau_left(t[0]), q.tau_left(ai)) == tau)
        }),
    ));
    checks.push(check_from(
        Law::InverseOfProduct,
        sw(2, &|t| match (inv[q.dot_raw(t[0], t[1])], inv[t[0]], inv[t[1]]) {
            (Some(lhs), Some(ai), Some(bi)) => lhs == q.dot_raw(ai, bi),
            _ => false,
        }),
    ));
    checks.push(check_from(
        Law::InverseOfTau,
        sw(1, &|t| match (inv[q.tau_left(t[0])], inv[t[0]]) {
            (Some(lhs), Some(ai)) => lhs == q.tau_left(ai),
            _ => false,
        }),
    ));

    let chain_law = |law: Law, holds: &(dyn Fn(&[usize]) -> bool + Sync)| {
        let mut acc = SweepOutcome {
            witness: None,
            checked: 0,
            sampled: false,
        };
        for p in 2..=opts.depth {
            acc = acc.merge(sw(p, holds));
            if acc.witness.is_some() {
                break;
            }
        }
        let mut check = check_from(law, acc);
        check.note = Some(format!("up to {} factors", opts.depth.max(1)));
        check
    };

    checks.push(chain_law(Law::ChainInverse, &|t| {
        let Some(lhs) = inv[q.chain_raw(t)] else {
            return false;
        };
        let inverted: Option<Vec<usize>> = t.iter().map(|&x| inv[x]).collect();
        inverted.is_some_and(|v| q.chain_raw(&v) == lhs)
    }));
    checks.push(check_from(
        Law::TripleReversal,
        sw(3, &|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            q.tau_left(q.chain_raw(t)) == q.dot_raw(q.dot_raw(c, q.tau_left(b)), a)
        }),
    ));
    checks.push(chain_law(Law::ChainReversal, &|t| {
        let p = t.len();
        let rhs = (1..p - 1)
            .rev()
            .fold(t[p - 1], |acc, i| q.dot_raw(acc, q.tau_left(t[i])));
        let rhs = q.dot_raw(rhs, t[0]);
        q.tau_left(q.chain_raw(t)) == rhs
    }));

    let assoc = sw(3, &|t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        q.dot_raw(q.dot_raw(a, b), c) == q.dot_raw(a, q.dot_raw(b, c))
    });
    checks.push(LawCheck {
        law: Law::Nonassociativity,
        verdict: assoc.witness.map_or(Verdict::Degenerate, Verdict::Witnessed),
        checked: assoc.checked,
        sampled: assoc.sampled,
        note: None,
    });

    LawReport {
        names: q.names().to_vec(),
        checks,
    }
}
