//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Tolerances are fixed here and printed with each line.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{from_matrix, oracle_inverse, random_complex, random_integer, residual, rng, to_matrix};
use krak::clifford::{build_clifford_quasigroup, structural_condition_violation};
use krak::group::catalog::{cyclic, symmetric};
use krak::representation::io::RepresentationBundle;
use krak::{
    apply_linear_mapping, build_gamma_matrices, build_quasigroup, chain_product, change_basis,
    extend_to_representation, similarity_transform, transposing_cracovian, verify_crac_homomorphism, verify_group,
    verify_quasigroup_laws, Cracovian, FiniteGroup, Involution, InvolutiveGroup, LawOptions, Scalar, Tolerance,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Entry-wise residual bound for floating-point identities.
const RESIDUAL: f64 = 1e-9;
/// Random tables per identity.
const SAMPLES: usize = 1000;
/// Largest table side.
const MAX_SIDE: usize = 16;
/// Time limit for generating and checking the N = 8 Clifford quasigroup.
const ORDER_TIME_LIMIT: Duration = Duration::from_secs(10);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn t(n: usize) -> Cracovian {
    transposing_cracovian(n).unwrap()
}

fn side(r: &mut ChaCha8Rng) -> usize {
    r.random_range(1..=MAX_SIDE)
}

fn with_inversion(g: FiniteGroup) -> InvolutiveGroup {
    let inv = Involution::inversion(&g);
    InvolutiveGroup::new(g, inv).unwrap()
}

fn clifford_orders() -> Outcome {
    let mut detail = Vec::new();
    for n in 1..=8 {
        let start = Instant::now();
        let cq = match build_clifford_quasigroup(n) {
            Ok(cq) => cq,
            Err(e) => return outcome(false, format!("N={n}: {e}")),
        };
        let latin_ok = cq.quasigroup().latin_defect().is_none();
        let elapsed = start.elapsed();
        let expected = 1usize << (n + 1);
        if cq.group().order() != expected || cq.order() != expected || !latin_ok {
            return outcome(
                false,
                format!(
                    "N={n}: group {} quasigroup {} latin {latin_ok}",
                    cq.group().order(),
                    cq.order()
                ),
            );
        }
        if n == 8 {
            if elapsed > ORDER_TIME_LIMIT {
                return outcome(false, format!("N=8 took {elapsed:.2?} > {ORDER_TIME_LIMIT:?}"));
            }
            detail.push(format!(
                "N=8 order {expected} in {elapsed:.2?} (limit {ORDER_TIME_LIMIT:?})"
            ));
        }
    }
    outcome(true, format!("orders 2^(N+1) for N=1..8; {}", detail.join("")))
}

fn law_suite() -> Outcome {
    let mut systems: Vec<(String, InvolutiveGroup, krak::Quasigroup)> = Vec::new();
    for n in 1..=3 {
        let cq = build_clifford_quasigroup(n).unwrap();
        systems.push((
            format!("Clifford N={n}"),
            cq.group_with_involution().clone(),
            cq.quasigroup().clone(),
        ));
    }
    for (name, g) in [("S3", symmetric(3)), ("C4", cyclic(4))] {
        let gi = with_inversion(g);
        let q = build_quasigroup(&gi);
        systems.push((format!("{name} with inversion"), gi, q));
    }
    let opts = LawOptions::default();
    let mut total = 0u64;
    for (name, gi, q) in &systems {
        let report = verify_quasigroup_laws(q, gi, &opts);
        if let Some(c) = report.checks().iter().find(|c| c.sampled) {
            return outcome(false, format!("{name}: {} was sampled, not exhaustive", c.law));
        }
        if let Some(c) = report.violations().next() {
            return outcome(false, format!("{name}: {}", report.render_line(c)));
        }
        total += report.checks().iter().map(|c| c.checked).sum::<u64>();
    }
    outcome(
        true,
        format!(
            "{} systems, chains to length {}, {total} tuples, zero violations",
            systems.len(),
            opts.depth
        ),
    )
}

fn structural_condition() -> Outcome {
    for n in 1..=6 {
        let cq = build_clifford_quasigroup(n).unwrap();
        if let Some((mu, nu)) = structural_condition_violation(cq.quasigroup(), n) {
            return outcome(false, format!("N={n}: fails at (μ, ν) = ({mu}, {nu})"));
        }
    }
    outcome(true, "all μ, ν at N=1..6 with integer coefficients")
}

/// Runs `identity` on `SAMPLES` draws and returns the largest residual.
fn worst(seed: u64, identity: impl Fn(&mut ChaCha8Rng) -> f64) -> f64 {
    let mut r = rng(seed);
    (0..SAMPLES).map(|_| identity(&mut r)).fold(0.0, f64::max)
}

fn nonsingular(r: &mut ChaCha8Rng, n: usize) -> Cracovian {
    loop {
        let a = random_complex(r, n, n);
        if oracle_inverse(&a).is_some() {
            return a;
        }
    }
}

type Identity = (&'static str, Box<dyn Fn(&mut ChaCha8Rng) -> f64>);
type Criterion = (&'static str, fn() -> Outcome);

fn cracovian_identities() -> Outcome {
    let identities: Vec<Identity> = vec![
        (
            "A·T = A",
            Box::new(|r| {
                let (c, n) = (side(r), side(r));
                let a = random_complex(r, c, n);
                residual(&a.crac_product(&t(n)).unwrap(), &a)
            }),
        ),
        (
            "(T·A)(k,l) = A(l,k)",
            Box::new(|r| {
                let n = side(r);
                let a = random_complex(r, n, n);
                let ta = t(n).crac_product(&a).unwrap();
                residual(&ta, &Cracovian::from_fn(n, n, |k, l| a.get(l, k)))
            }),
        ),
        (
            "T·T = T",
            Box::new(|r| {
                let n = side(r);
                residual(&t(n).crac_product(&t(n)).unwrap(), &t(n))
            }),
        ),
        (
            "chains associate to the left",
            Box::new(|r| {
                let n = side(r);
                let f: Vec<Cracovian> = (0..3).map(|_| random_complex(r, n, n)).collect();
                let left = f[0].crac_product(&f[1]).unwrap().crac_product(&f[2]).unwrap();
                residual(&chain_product(&f).unwrap(), &left)
            }),
        ),
        (
            "T(TA) = A",
            Box::new(|r| {
                let n = side(r);
                let a = random_complex(r, n, n);
                residual(&t(n).crac_product(&t(n).crac_product(&a).unwrap()).unwrap(), &a)
            }),
        ),
        (
            "T(A·B) = B·A",
            Box::new(|r| {
                let (c, n) = (side(r), side(r));
                let (a, b) = (random_complex(r, c, n), random_complex(r, c, n));
                let ab = a.crac_product(&b).unwrap();
                residual(&t(c).crac_product(&ab).unwrap(), &b.crac_product(&a).unwrap())
            }),
        ),
        (
            "T(A·A) = A·A",
            Box::new(|r| {
                let (c, n) = (side(r), side(r));
                let a = random_complex(r, c, n);
                let aa = a.crac_product(&a).unwrap();
                residual(&t(c).crac_product(&aa).unwrap(), &aa)
            }),
        ),
        (
            "(A·B)·C = A·(C·TB)",
            Box::new(|r| {
                let (m, n, p, rows) = (side(r), side(r), side(r), side(r));
                let (a, b, c) = (
                    random_complex(r, m, rows),
                    random_complex(r, n, rows),
                    random_complex(r, p, n),
                );
                let lhs = a.crac_product(&b).unwrap().crac_product(&c).unwrap();
                let rhs = a.crac_product(&c.crac_product(&b.transpose()).unwrap()).unwrap();
                residual(&lhs, &rhs)
            }),
        ),
        (
            "T[(A·B)·C] = (C·TB)·A",
            Box::new(|r| {
                let (m, n, p, rows) = (side(r), side(r), side(r), side(r));
                let (a, b, c) = (
                    random_complex(r, m, rows),
                    random_complex(r, n, rows),
                    random_complex(r, p, n),
                );
                let lhs = t(p)
                    .crac_product(&a.crac_product(&b).unwrap().crac_product(&c).unwrap())
                    .unwrap();
                let rhs = c.crac_product(&b.transpose()).unwrap().crac_product(&a).unwrap();
                residual(&lhs, &rhs)
            }),
        ),
        (
            "T(A1·...·Ak) = Ak·TA(k-1)·...·TA2·A1",
            Box::new(|r| {
                let (n, k) = (side(r), r.random_range(2..=6));
                let f: Vec<Cracovian> = (0..k).map(|_| random_complex(r, n, n)).collect();
                let lhs = t(n).crac_product(&chain_product(&f).unwrap()).unwrap();
                let mut rhs = f[k - 1].clone();
                for g in f[1..k - 1].iter().rev() {
                    rhs = rhs.crac_product(&g.transpose()).unwrap();
                }
                residual(&lhs, &rhs.crac_product(&f[0]).unwrap())
            }),
        ),
        (
            "A·A⁻¹ = A⁻¹·A = T",
            Box::new(|r| {
                let n = side(r);
                let a = nonsingular(r, n);
                let inv = a.crac_inverse().unwrap();
                residual(&a.crac_product(&inv).unwrap(), &t(n)).max(residual(&inv.crac_product(&a).unwrap(), &t(n)))
            }),
        ),
        (
            "(TA)·(TA⁻¹) = T",
            Box::new(|r| {
                let n = side(r);
                let a = nonsingular(r, n);
                let inv = a.crac_inverse().unwrap();
                residual(&a.transpose().crac_product(&inv.transpose()).unwrap(), &t(n))
            }),
        ),
        (
            "(A1·A2)⁻¹ = A1⁻¹·A2⁻¹",
            Box::new(|r| {
                let n = side(r);
                let (a1, a2) = (nonsingular(r, n), nonsingular(r, n));
                let lhs = a1.crac_product(&a2).unwrap().crac_inverse().unwrap();
                let rhs = a1
                    .crac_inverse()
                    .unwrap()
                    .crac_product(&a2.crac_inverse().unwrap())
                    .unwrap();
                residual(&lhs, &rhs)
            }),
        ),
        (
            "(TA)⁻¹ = TA⁻¹",
            Box::new(|r| {
                let n = side(r);
                let a = nonsingular(r, n);
                let ta = a.transpose();
                residual(&ta.crac_product(&a.crac_inverse().unwrap().transpose()).unwrap(), &t(n))
            }),
        ),
        (
            "matrix inverse = T(cracovian inverse)",
            Box::new(|r| {
                let n = side(r);
                let a = nonsingular(r, n);
                let m = from_matrix(&oracle_inverse(&a).unwrap());
                residual(&t(n).crac_product(&a.crac_inverse().unwrap()).unwrap(), &m)
            }),
        ),
        (
            "change of basis e·S = Sᵀe",
            Box::new(|r| {
                let n = side(r);
                let (e, s) = (random_complex(r, 1, n), random_complex(r, n, n));
                let expected = from_matrix(&(to_matrix(&s).transpose() * to_matrix(&e)));
                residual(&change_basis(&e, &s).unwrap(), &expected)
            }),
        ),
        (
            "components y·TS = Sy",
            Box::new(|r| {
                let n = side(r);
                let (y, s) = (random_complex(r, 1, n), random_complex(r, n, n));
                let expected = from_matrix(&(to_matrix(&s) * to_matrix(&y)));
                residual(&y.crac_product(&s.transpose()).unwrap(), &expected)
            }),
        ),
        (
            "linear mapping x·TA = Ax",
            Box::new(|r| {
                let n = side(r);
                let (x, a) = (random_complex(r, 1, n), random_complex(r, n, n));
                let expected = from_matrix(&(to_matrix(&a) * to_matrix(&x)));
                residual(&apply_linear_mapping(&x, &a).unwrap(), &expected)
            }),
        ),
        (
            "S·TA·S⁻¹ = S⁻¹AS",
            Box::new(|r| {
                let n = side(r);
                let (a, s) = (random_complex(r, n, n), nonsingular(r, n));
                let expected = from_matrix(&(oracle_inverse(&s).unwrap() * to_matrix(&a) * to_matrix(&s)));
                residual(&similarity_transform(&a, &s).unwrap(), &expected)
            }),
        ),
        (
            "A·TB = B·TA exactly when AB = BA",
            Box::new(|r| {
                let n = side(r);
                let a = random_complex(r, n, n);
                // A polynomial in A commutes with A; a random table does not.
                let b = (&a.matrix_product(&a).unwrap() + &a.scale(Scalar::new(2.0, -1.0))).unwrap();
                let lhs = a.crac_product(&b.transpose()).unwrap();
                let rhs = b.crac_product(&a.transpose()).unwrap();
                let c = random_complex(r, n, n);
                if n > 1 && c.commutes(&a, Tolerance::Absolute(RESIDUAL)).unwrap() {
                    return f64::INFINITY;
                }
                residual(&lhs, &rhs)
            }),
        ),
    ];
    let mut worst_seen = 0.0f64;
    for (i, (name, identity)) in identities.iter().enumerate() {
        let w = worst(1000 + i as u64, identity);
        if w.is_nan() || w > RESIDUAL {
            return outcome(false, format!("{name}: max residual {w:e} > {RESIDUAL:e}"));
        }
        worst_seen = worst_seen.max(w);
    }
    outcome(
        true,
        format!(
            "{} identities x {SAMPLES} tables, sides 1..={MAX_SIDE}, max residual {worst_seen:.1e} <= {RESIDUAL:e}",
            identities.len()
        ),
    )
}

fn bridge_and_inverse() -> Outcome {
    let mut r = rng(42);
    for i in 0..SAMPLES {
        let (m, k, n, p) = (side(&mut r), side(&mut r), side(&mut r), side(&mut r));
        // Displays: A is m x k, B is k x n, C is n x p.
        let a = random_integer(&mut r, k, m);
        let b = random_integer(&mut r, n, k);
        let c = random_integer(&mut r, p, n);
        let ab = from_matrix(&(to_matrix(&a) * to_matrix(&b)));
        let abc = from_matrix(&(to_matrix(&a) * to_matrix(&b) * to_matrix(&c)));
        let checks = [
            ("AB = B·TA", b.crac_product(&a.transpose()).unwrap() == ab),
            (
                "ABC = C·TB·TA",
                chain_product(&[c.clone(), b.transpose(), a.transpose()]).unwrap() == abc,
            ),
            ("AB via matrix_product", a.matrix_product(&b).unwrap() == ab),
        ];
        if let Some((name, _)) = checks.iter().find(|(_, ok)| !ok) {
            return outcome(false, format!("sample {i}: {name} not bit-exact"));
        }
        // BᵀA = A·B and CᵀBᵀA = A·B·C; A and B share their row count and
        // C has as many rows as A·B.
        let (rows, ca, cb, cc) = (side(&mut r), side(&mut r), side(&mut r), side(&mut r));
        let a = random_integer(&mut r, ca, rows);
        let b = random_integer(&mut r, cb, rows);
        let c = random_integer(&mut r, cc, cb);
        let (am, bm, cm) = (to_matrix(&a), to_matrix(&b), to_matrix(&c));
        if a.crac_product(&b).unwrap() != from_matrix(&(bm.transpose() * &am)) {
            return outcome(false, format!("sample {i}: BᵀA = A·B not bit-exact"));
        }
        if chain_product(&[a, b, c]).unwrap() != from_matrix(&(cm.transpose() * bm.transpose() * &am)) {
            return outcome(false, format!("sample {i}: CᵀBᵀA = A·B·C not bit-exact"));
        }
    }
    let mut worst_inv = 0.0f64;
    let mut r = rng(43);
    let mut tested = 0;
    while tested < SAMPLES {
        let n = side(&mut r);
        let a = random_complex(&mut r, n, n);
        let Some(m) = oracle_inverse(&a) else { continue };
        tested += 1;
        let w = residual(&a.crac_inverse().unwrap().transpose(), &from_matrix(&m));
        worst_inv = worst_inv.max(w);
    }
    if worst_inv.is_nan() || worst_inv > RESIDUAL {
        return outcome(
            false,
            format!("inverse vs elimination oracle: residual {worst_inv:e} > {RESIDUAL:e}"),
        );
    }
    outcome(
        true,
        format!("bridge bit-exact on {SAMPLES} integer samples; inverse vs LU oracle max residual {worst_inv:.1e} <= {RESIDUAL:e}"),
    )
}

fn homomorphism() -> Outcome {
    let mut pairs = Vec::new();
    for n in 1..=4 {
        let cq = build_clifford_quasigroup(n).unwrap();
        let rep = extend_to_representation(&cq, &build_gamma_matrices(n).unwrap()).unwrap();
        // Go through the bundle format so the check covers what is written out.
        let bundle =
            RepresentationBundle::from_json(&RepresentationBundle::from_representation(&rep).to_json()).unwrap();
        let rep = bundle.to_representation().unwrap();
        if !rep.is_gaussian_integer() {
            return outcome(false, format!("N={n}: tables are not Gaussian integers"));
        }
        let report = verify_crac_homomorphism(cq.quasigroup(), &rep, Tolerance::Exact).unwrap();
        if !report.tau_is_transposing {
            return outcome(false, format!("N={n}: C(τ) ≠ T"));
        }
        if let Some(v) = report.violation {
            return outcome(false, format!("N={n}: C({})·C({}) ≠ C({})", v.left, v.right, v.product));
        }
        pairs.push(format!("N={n}: {} pairs", report.pairs_checked));
    }
    outcome(true, format!("exact; C(τ) = T in every bundle; {}", pairs.join(", ")))
}

fn negative_controls() -> Outcome {
    let mut lines = Vec::new();

    // Group tables.
    let g = symmetric(3);
    let broken = g.table().with_entry(1, 2, 0).unwrap();
    match verify_group(&broken, 512) {
        Err(e) if e.is_violation() => lines.push(format!("group: {e}")),
        other => return outcome(false, format!("corrupted Cayley table not caught: {other:?}")),
    }

    // Law suite.
    let gi = with_inversion(symmetric(3));
    let q = build_quasigroup(&gi).with_swapped(2, 0, 1);
    let report = verify_quasigroup_laws(&q, &gi, &LawOptions::default());
    match report.violations().next() {
        Some(c) => lines.push(format!(
            "laws: {}",
            report.render_line(c).split_whitespace().collect::<Vec<_>>().join(" ")
        )),
        None => return outcome(false, "swapped quasigroup entries not caught"),
    }

    // Structural condition with the wrong involution.
    let cq = build_clifford_quasigroup(2).unwrap();
    let wrong = with_inversion(cq.group().clone());
    match structural_condition_violation(&build_quasigroup(&wrong), 2) {
        Some((mu, nu)) => lines.push(format!("structure: inversion involution fails at ({mu}, {nu})")),
        None => return outcome(false, "inversion involution passed the structural condition"),
    }

    // Cracovian identity with a corrupted inverse.
    let mut r = rng(5);
    let a = nonsingular(&mut r, 4);
    let bad = a.crac_inverse().unwrap();
    let bad = bad.with_entry(2, 1, bad.get(2, 1) + Scalar::new(1e-6, 0.0)).unwrap();
    match a
        .crac_product(&bad)
        .unwrap()
        .first_mismatch(&t(4), Tolerance::Absolute(RESIDUAL))
    {
        Some((k, l)) => lines.push(format!("inverse: A·X ≠ T at ({k}, {l})")),
        None => return outcome(false, "corrupted inverse not caught"),
    }

    // Bridge identity with a corrupted table.
    let a = random_integer(&mut r, 3, 3);
    let b = random_integer(&mut r, 3, 3);
    let ab = from_matrix(&(to_matrix(&a) * to_matrix(&b)));
    let bad_b = b.with_entry(0, 0, b.get(0, 0) + Scalar::new(1.0, 0.0)).unwrap();
    match bad_b
        .crac_product(&a.transpose())
        .unwrap()
        .first_mismatch(&ab, Tolerance::Exact)
    {
        Some((k, l)) => lines.push(format!("bridge: mismatch at ({k}, {l})")),
        None => return outcome(false, "corrupted bridge input not caught"),
    }

    // Homomorphism with a symmetric Γ.
    let gammas = build_gamma_matrices(2).unwrap();
    let d = gammas.dimension();
    let flip = Cracovian::from_fn(d, d, |k, l| Scalar::new(if k + l == d - 1 { 1.0 } else { 0.0 }, 0.0));
    let rep = extend_to_representation(&cq, &gammas.with_gamma(1, flip)).unwrap();
    match verify_crac_homomorphism(cq.quasigroup(), &rep, Tolerance::Exact)
        .unwrap()
        .violation
    {
        Some(v) => lines.push(format!("homomorphism: C({})·C({}) ≠ C({})", v.left, v.right, v.product)),
        None => return outcome(false, "tampered Γ not caught"),
    }

    outcome(true, lines.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("Clifford group and quasigroup orders", clifford_orders),
        ("exhaustive quasigroup law suite", law_suite),
        ("anticommutation structural condition", structural_condition),
        ("cracovian identity suite", cracovian_identities),
        ("bridge identities and inverse oracle", bridge_and_inverse),
        ("cracovian representation homomorphism", homomorphism),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed += 1;
        }
        println!("{status} [{}] {name}: {} ({:.2?})", i + 1, o.detail, start.elapsed());
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
