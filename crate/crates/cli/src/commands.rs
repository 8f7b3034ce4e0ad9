use std::fs;
use std::path::Path;

use krak::clifford::build_clifford_quasigroup;
use krak::cracovian::io::{from_csv, from_json, to_csv, to_json};
use krak::group::io::{GroupFile, InvolutionFile};
use krak::representation::io::RepresentationBundle;
use krak::representation::{element_mismatch, transpose_closed_commutant_dimension};
use krak::{
    build_gamma_matrices, build_quasigroup, commutant_dimension, extend_to_representation, verify_crac_homomorphism,
    verify_quasigroup_laws, Cracovian, FiniteGroup, InvolutiveGroup, LawOptions, Quasigroup, RepresentationError,
};

use crate::error::CliError;
use crate::{CracOp, GlobalOpts};

/// Largest generator count accepted by `gen-clifford`: at N = 10 the table
/// files already hold four million names each.
pub const GEN_CLIFFORD_MAX_N: usize = 10;

/// Largest generator count for which `gen-clifford` writes a representation
/// bundle; beyond it the bundle runs to tens of megabytes.
pub const REPRESENTATION_MAX_N: usize = 6;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| CliError::input(path, e))
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

/// Table files are written on one line; `quasigroup.csv` is the readable copy.
fn compact<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes") + "\n"
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn gen_clifford(n: usize, out: &Path) -> Result<(), CliError> {
    let cq = build_clifford_quasigroup(n).map_err(|e| CliError::Input(e.to_string()))?;
    fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
    let group = cq.group();
    let mut files = vec![
        ("group.json", compact(&GroupFile::from_table(group.table()))),
        (
            "involution.json",
            pretty(&InvolutionFile::from_involution(
                group.names(),
                cq.group_with_involution().involution(),
            )),
        ),
        ("quasigroup.json", compact(&cq.quasigroup().to_file())),
        ("quasigroup.csv", cq.quasigroup().to_csv()),
    ];
    let mut notes = Vec::new();
    if n <= REPRESENTATION_MAX_N {
        let gammas = build_gamma_matrices(n)?;
        let rep = extend_to_representation(&cq, &gammas)?;
        files.push((
            "representation.json",
            compact(&RepresentationBundle::from_representation(&rep)),
        ));
        notes.push(format!("representation dimension {}", rep.dimension()));
    } else {
        notes.push(format!(
            "representation.json skipped (written for N <= {REPRESENTATION_MAX_N})"
        ));
    }
    println!("group order {}, quasigroup order {}", group.order(), cq.order());
    for (name, text) in &files {
        let path = out.join(name);
        write(&path, text)?;
        println!("wrote {}", path.display());
    }
    for note in notes {
        println!("{note}");
    }
    Ok(())
}

pub fn verify(group_path: &Path, involution_path: &Path, depth: usize, assoc_cap: usize) -> Result<(), CliError> {
    let table = parse_json::<GroupFile>(group_path)?
        .to_table()
        .map_err(|e| CliError::input(group_path, e))?;
    let group = match FiniteGroup::with_cap(table, assoc_cap) {
        Ok(g) => g,
        Err(e) if e.is_violation() => {
            println!("group: FAIL {e}");
            return Err(e.into());
        }
        Err(e) => return Err(CliError::input(group_path, e)),
    };
    println!("group: order {}, unit {}: ok", group.order(), group.name(group.unit()));
    let involution = parse_json::<InvolutionFile>(involution_path)?
        .to_involution(group.names())
        .map_err(|e| CliError::input(involution_path, e))?;
    let gi = match InvolutiveGroup::new(group, involution) {
        Ok(gi) => gi,
        Err(e) if e.is_violation() => {
            println!("involution: FAIL {e}");
            return Err(e.into());
        }
        Err(e) => return Err(CliError::input(involution_path, e)),
    };
    println!("involution: ok");
    let q = build_quasigroup(&gi);
    println!("quasigroup: order {}, τ = {}", q.order(), q.name(q.tau()));
    let opts = LawOptions {
        depth,
        ..LawOptions::default()
    };
    let report = verify_quasigroup_laws(&q, &gi, &opts);
    print!("{report}");
    let failed = report.violations().count();
    if failed > 0 {
        return Err(CliError::Violation(format!("{failed} law(s) violated")));
    }
    println!("all laws pass");
    Ok(())
}

fn load_table(path: &Path) -> Result<Cracovian, CliError> {
    let text = read(path)?;
    let parsed = if is_json(path) {
        from_json(&text)
    } else {
        from_csv(&text)
    };
    parsed.map_err(|e| CliError::input(path, e))
}

pub fn crac(
    op: CracOp,
    inputs: &[std::path::PathBuf],
    out: Option<&Path>,
    global: &GlobalOpts,
) -> Result<(), CliError> {
    let arity = match op {
        CracOp::Mul | CracOp::Commute => 2,
        CracOp::Inv | CracOp::Transpose => 1,
    };
    if inputs.len() != arity {
        return Err(CliError::Input(
            format!("{op:?} takes {arity} input table(s), got {}", inputs.len()).to_lowercase(),
        ));
    }
    let tables = inputs.iter().map(|p| load_table(p)).collect::<Result<Vec<_>, _>>()?;
    let result = match op {
        CracOp::Mul => tables[0].crac_product(&tables[1])?,
        CracOp::Inv => match tables[0].crac_inverse() {
            Ok(inv) => inv,
            Err(e @ krak::CracovianError::Singular { .. }) => {
                return Err(CliError::Violation(format!("singular: {e}")))
            }
            Err(e) => return Err(e.into()),
        },
        CracOp::Transpose => tables[0].transpose(),
        CracOp::Commute => {
            let tol = global.tolerance(tables.iter().all(Cracovian::is_gaussian_integer));
            println!("{}", tables[0].commutes(&tables[1], tol)?);
            return Ok(());
        }
    };
    match out {
        Some(path) => {
            let text = if is_json(path) {
                to_json(&result) + "\n"
            } else {
                to_csv(&result)
            };
            write(path, &text)?;
            println!("wrote {} ({})", path.display(), result.shape());
        }
        None => print!("{}", to_csv(&result)),
    }
    Ok(())
}

pub fn rep_check(q_path: &Path, rep_path: &Path, global: &GlobalOpts) -> Result<(), CliError> {
    let q = Quasigroup::from_file(&parse_json::<GroupFile>(q_path)?).map_err(|e| CliError::input(q_path, e))?;
    let rep = RepresentationBundle::from_json(&read(rep_path)?)
        .and_then(|b| b.to_representation())
        .map_err(|e| CliError::input(rep_path, e))?;
    let (missing, extra) = element_mismatch(q.names(), rep.names());
    if !missing.is_empty() || !extra.is_empty() {
        return Err(CliError::input(
            rep_path,
            RepresentationError::ElementMismatch { missing, extra },
        ));
    }
    let tol = global.tolerance(rep.is_gaussian_integer());
    let report = verify_crac_homomorphism(&q, &rep, tol)?;
    println!("elements: {}, dimension {}", q.order(), rep.dimension());
    println!("C(τ) = T: {}", if report.tau_is_transposing { "yes" } else { "NO" });
    match &report.violation {
        None => println!(
            "homomorphism: holds over {} pairs (tolerance {})",
            report.pairs_checked, report.tolerance
        ),
        Some(v) => {
            let at = v
                .entry
                .map_or("shape".to_string(), |(k, l)| format!("entry ({k}, {l})"));
            println!(
                "homomorphism: FAIL C({})·C({}) != C({}) at {at} (tolerance {})",
                v.left, v.right, v.product, report.tolerance
            );
        }
    }
    if let Some(name) = rep.first_singular() {
        println!("singular table: {name}");
    }
    println!("commutant dimension: {}", commutant_dimension(rep.tables())?);
    println!(
        "transpose-closed commutant dimension: {}",
        transpose_closed_commutant_dimension(rep.tables())?
    );
    if report.holds() {
        Ok(())
    } else {
        Err(CliError::Violation("cracovian homomorphism does not hold".into()))
    }
}
