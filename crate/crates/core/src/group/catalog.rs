//! A few small groups for experiments and tests.

use super::{CayleyTable, FiniteGroup};

/// Cyclic group of order `n`, elements `e, a, a2, ...` with `a^i a^j = a^(i+j)`.
pub fn cyclic_table(n: usize) -> CayleyTable {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let names = (0..n)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    CayleyTable::from_fn(names, 0, |i, j| (i + j) % n).expect("cyclic table is well formed")
}

pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::new(cyclic_table(n)).expect("cyclic group")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Symmetric group on `n` points. Elements are named by their one-line images
/// (1-based), the identity comes first, and `(p q)(i) = p(q(i))`.
pub fn symmetric_table(n: usize) -> CayleyTable {
    assert!((1..=6).contains(&n), "symmetric group supported for 1 <= n <= 6");
    let perms = permutations(n);
    let names = perms
        .iter()
        .map(|p| p.iter().map(|v| (v + 1).to_string()).collect::<String>())
        .collect();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    CayleyTable::from_fn(names, 0, |a, b| {
        let composed: Vec<usize> = perms[b].iter().map(|&i| perms[a][i]).collect();
        index(&composed)
    })
    .expect("symmetric table is well formed")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    FiniteGroup::new(symmetric_table(n)).expect("symmetric group")
}
