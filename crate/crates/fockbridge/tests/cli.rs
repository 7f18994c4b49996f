use std::path::Path;
use std::process::{Command, Output};

use fockbridge::json::{BundleJson, ReportJson, SymFuncJson};
use fockbridge::render::TableauxJson;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockbridge"))
        .args(args)
        .env_remove("FOCKBRIDGE_DEGREE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn exported_bundle(dir: &Path) -> BundleJson {
    let o = run(&["bundle", "--rep", "fermionic", "--dmax", "3", "--kmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let json: BundleJson = serde_json::from_slice(&o.stdout).unwrap();
    std::fs::write(dir.join("good.json"), &o.stdout).unwrap();
    json
}

#[test]
fn expand_schur_image() {
    let o = run(&[
        "expand",
        "--rep",
        "fermionic",
        "--shape",
        "[2,1]",
        "--base",
        "[]",
        "--fn",
        "F",
        "--basis",
        "s",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "s[2,1]\n");
}

#[test]
fn expand_macdonald_json() {
    let o = run(&[
        "expand",
        "--rep",
        "macdonald",
        "--shape",
        "[1]",
        "--base",
        "[]",
        "--fn",
        "G",
        "--basis",
        "m",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let f: SymFuncJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(f.basis, "m");
    assert_eq!(f.terms.len(), 1);
    assert_eq!(f.terms[0].partition, vec![1]);
    assert_eq!(f.terms[0].coeff, "1");
}

#[test]
fn expand_negative_degree_is_zero() {
    let o = run(&[
        "expand",
        "--rep",
        "fermionic",
        "--shape",
        "[1]",
        "--base",
        "[2]",
        "--fn",
        "F",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn unknown_rep_is_usage_error() {
    let o = run(&["expand", "--rep", "bosonic", "--shape", "[1]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown rep"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(run(&["expand", "--shape", "[1,2]"]).status.code(), Some(2));
    assert_eq!(
        run(&["tableaux", "--shape", "[1]", "--weight", "1,0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "pieri", "--spec", "z=1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "pieri", "--rep", "llt1:1"]).status.code(), Some(2));
}

#[test]
fn verify_pieri_macdonald_passes() {
    let o = run(&[
        "verify",
        "pieri",
        "--rep",
        "macdonald",
        "--kmax",
        "2",
        "--dmax",
        "4",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r: ReportJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r.identity, "genPieri");
    assert!(r.passed && r.checked > 0 && r.failures.is_empty());
}

#[test]
fn verify_cauchy_fermionic_passes() {
    let o = run(&[
        "verify",
        "cauchy",
        "--rep",
        "fermionic",
        "--xvars",
        "3",
        "--yvars",
        "3",
        "--dmax",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("genCauchy: PASS"));
}

#[test]
fn verify_other_reps_and_suites() {
    for args in [
        &[
            "verify",
            "heisenberg",
            "--rep",
            "tensor:fermionic^2",
            "--kmax",
            "2",
            "--dmax",
            "3",
        ][..],
        &["verify", "du", "--rep", "llt1:2", "--abmax", "2", "--dmax", "4"],
        &["verify", "bf", "--rep", "macdonald", "--dmax", "3"],
        &[
            "verify",
            "pieri",
            "--rep",
            "macdonald",
            "--spec",
            "q=0",
            "--kmax",
            "2",
            "--dmax",
            "3",
        ],
        &["verify", "converse", "--rep", "fermionic", "--dmax", "3"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn degree_cap_bounds_verifiers() {
    assert_eq!(run(&["verify", "pieri", "--dmax", "9"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "pieri", "--dmax", "3", "--degree-cap", "2"])
            .status
            .code(),
        Some(2)
    );
    let o = Command::new(env!("CARGO_BIN_EXE_fockbridge"))
        .args(["verify", "pieri", "--dmax", "3"])
        .env("FOCKBRIDGE_DEGREE_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corrupt_bundle_fails_du() {
    let dir = tempfile::tempdir().unwrap();
    let mut bundle = exported_bundle(dir.path());
    let good = dir.path().join("good.json");
    let o = run(&[
        "verify",
        "du",
        "--rep",
        &format!("bundle:{}", good.display()),
        "--abmax",
        "2",
        "--dmax",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let op = bundle
        .operators
        .iter_mut()
        .find(|op| op.op == "D" && op.k == 1 && op.degree == 3)
        .unwrap();
    op.matrix[0][1] = "3".into();
    let corrupt = dir.path().join("corrupt.json");
    std::fs::write(&corrupt, serde_json::to_string(&bundle).unwrap()).unwrap();
    let rep = format!("bundle:{}", corrupt.display());

    let o = run(&[
        "verify", "du", "--rep", &rep, "--abmax", "2", "--dmax", "3", "--out", "json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let r: ReportJson = serde_json::from_slice(&o.stdout).unwrap();
    assert!(!r.passed && !r.failures.is_empty());

    let o = run(&["verify", "converse", "--rep", &rep, "--dmax", "3", "--out", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let r: ReportJson = serde_json::from_slice(&o.stdout).unwrap();
    let c = r.converse.unwrap();
    assert!(!c.heisenberg_action && !c.pieri && !c.cauchy && c.equivalent);
}

#[test]
fn malformed_bundles_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let mut bundle = exported_bundle(dir.path());
    let missing = dir.path().join("missing.json");
    let o = run(&["verify", "du", "--rep", &format!("bundle:{}", missing.display())]);
    assert_eq!(o.status.code(), Some(2));

    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, r#"{"degree_step":1}"#).unwrap();
    let o = run(&["verify", "du", "--rep", &format!("bundle:{}", truncated.display())]);
    assert_eq!(o.status.code(), Some(2));

    bundle.operators[0].matrix.push(vec!["1".into()]);
    let shape = dir.path().join("shape.json");
    std::fs::write(&shape, serde_json::to_string(&bundle).unwrap()).unwrap();
    let o = run(&["verify", "du", "--rep", &format!("bundle:{}", shape.display())]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("should be"));
}

#[test]
fn tableaux_fermionic_lists_chains() {
    let o = run(&[
        "tableaux",
        "--rep",
        "fermionic",
        "--shape",
        "[2,1]",
        "--base",
        "[]",
        "--weight",
        "1,1,1",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t: TableauxJson = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(t.coefficient, "2");
    let chains = t.chains.unwrap();
    assert_eq!(chains.len(), 2);
    assert!(chains
        .iter()
        .all(|c| c.first() == Some(&vec![]) && c.last() == Some(&vec![2, 1])));
}

#[test]
fn tableaux_empty_weight_is_identity() {
    let o = run(&["tableaux", "--shape", "[3,1]", "--base", "[3,1]", "--weight", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("coefficient: 1\n"));
}

#[test]
fn tableaux_macdonald_is_product_of_phi() {
    let o = run(&[
        "tableaux",
        "--rep",
        "macdonald",
        "--shape",
        "[2]",
        "--base",
        "[]",
        "--weight",
        "(1,1)",
        "--out",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let t: TableauxJson = serde_json::from_slice(&o.stdout).unwrap();
    assert!(t.chains.is_none());
    let got: fockbridge_core::Scalar = t.coefficient.parse().unwrap();
    let phi: fockbridge_core::Scalar = "(1 - t)/(1 - q)".parse().unwrap();
    assert_eq!(got, &phi * &phi);
}

#[test]
fn text_output_is_stable() {
    let a = run(&[
        "expand",
        "--rep",
        "macdonald",
        "--shape",
        "[2,1]",
        "--fn",
        "G",
        "--basis",
        "s",
    ]);
    let b = run(&[
        "expand",
        "--rep",
        "macdonald",
        "--shape",
        "[2,1]",
        "--fn",
        "G",
        "--basis",
        "s",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
