//! Law suites on catalogue groups and Clifford quasigroups.

use krak::clifford::{
    anticommutator, build_clifford_quasigroup, clifford_elements, structural_condition_violation, CliffordElement,
};
use krak::group::catalog::{cyclic, symmetric};
use krak::quasigroup::right_inverse;
use krak::{build_quasigroup, verify_quasigroup_laws, Involution, InvolutiveGroup, Law, LawOptions, Verdict};

fn with_inversion(g: krak::FiniteGroup) -> InvolutiveGroup {
    let inv = Involution::inversion(&g);
    InvolutiveGroup::new(g, inv).unwrap()
}

#[test]
fn catalogue_groups_with_inversion_pass() {
    for gi in [
        with_inversion(symmetric(3)),
        with_inversion(cyclic(4)),
        with_inversion(cyclic(5)),
    ] {
        let q = build_quasigroup(&gi);
        let report = verify_quasigroup_laws(&q, &gi, &LawOptions::default());
        assert!(report.all_pass(), "{report}");
        assert!(matches!(
            report.get(Law::Nonassociativity).unwrap().verdict,
            Verdict::Witnessed(_)
        ));
    }
}

#[test]
fn clifford_quasigroups_pass() {
    for n in 1..=3 {
        let cq = build_clifford_quasigroup(n).unwrap();
        let report = verify_quasigroup_laws(cq.quasigroup(), cq.group_with_involution(), &LawOptions::default());
        assert!(report.all_pass(), "N={n}\n{report}");
        assert!(report.checks().iter().all(|c| !c.sampled));
    }
}

#[test]
fn quasigroup_inverse_is_involuted_group_inverse() {
    let cq = build_clifford_quasigroup(3).unwrap();
    let gi = cq.group_with_involution();
    for a in 0..cq.order() {
        let x = CliffordElement::from_index(a);
        assert_eq!(right_inverse(gi, a), x.inverse().involution().index());
        assert_eq!(cq.quasigroup().solve_right_inverse(a), Some(right_inverse(gi, a)));
    }
}

#[test]
fn dot_product_matches_element_formula() {
    let cq = build_clifford_quasigroup(3).unwrap();
    for x in clifford_elements(3) {
        for y in clifford_elements(3) {
            assert_eq!(cq.dot(x, y), y.involution() * x);
        }
    }
}

#[test]
fn structural_condition_up_to_six() {
    for n in 1..=6 {
        let cq = build_clifford_quasigroup(n).unwrap();
        assert_eq!(structural_condition_violation(cq.quasigroup(), n), None, "N={n}");
        assert_eq!(anticommutator(cq.quasigroup(), 1, 1).get(&0), Some(&-2));
    }
}
