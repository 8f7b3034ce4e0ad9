//! Commutant dimensions against a singular-value null-space oracle.

mod common;

use common::{oracle_commutant_dimension, random_complex, rng};
use krak::clifford::build_clifford_quasigroup;
use krak::representation::transpose_closed_commutant_dimension;
use krak::{build_gamma_matrices, commutant_dimension, extend_to_representation, Cracovian, Scalar};

/// `blocks` placed along the diagonal of a `d x d` table.
fn block_diagonal(blocks: &[&Cracovian]) -> Cracovian {
    let d: usize = blocks.iter().map(|b| b.n_rows()).sum();
    let mut offsets = Vec::new();
    let mut at = 0;
    for b in blocks {
        offsets.push(at);
        at += b.n_rows();
    }
    Cracovian::from_fn(d, d, |k, l| {
        for (b, &o) in blocks.iter().zip(&offsets) {
            let n = b.n_rows();
            if (o..o + n).contains(&k) && (o..o + n).contains(&l) {
                return b.get(k - o, l - o);
            }
        }
        Scalar::new(0.0, 0.0)
    })
}

#[test]
fn random_sets_match_oracle() {
    let mut r = rng(7);
    for d in 1..=5 {
        for count in 1..=3 {
            let set: Vec<Cracovian> = (0..count).map(|_| random_complex(&mut r, d, d)).collect();
            assert_eq!(
                commutant_dimension(&set).unwrap(),
                oracle_commutant_dimension(&set),
                "d={d} count={count}"
            );
        }
    }
}

#[test]
fn reducible_sets_match_oracle() {
    let mut r = rng(11);
    for (d1, d2) in [(1, 1), (1, 2), (2, 2), (2, 3)] {
        let set: Vec<Cracovian> = (0..3)
            .map(|_| {
                let a = random_complex(&mut r, d1, d1);
                let b = random_complex(&mut r, d2, d2);
                block_diagonal(&[&a, &b])
            })
            .collect();
        let got = commutant_dimension(&set).unwrap();
        assert!(got >= 2);
        assert_eq!(got, oracle_commutant_dimension(&set), "blocks {d1}+{d2}");
    }
}

#[test]
fn clifford_representations_match_oracle() {
    for n in 1..=3 {
        let cq = build_clifford_quasigroup(n).unwrap();
        let gammas = build_gamma_matrices(n).unwrap();
        let rep = extend_to_representation(&cq, &gammas).unwrap();
        let got = commutant_dimension(rep.tables()).unwrap();
        assert_eq!(got, oracle_commutant_dimension(rep.tables()), "N={n}");
        assert_eq!(got, oracle_commutant_dimension(gammas.gammas()), "N={n}");
        let closed = transpose_closed_commutant_dimension(rep.tables()).unwrap();
        // Transposes of the tables are tables of the same set.
        assert_eq!(closed, got);
    }
}
