use std::sync::Arc;

use fockbridge_core::heisenberg::{HModule, HeisenbergParams, Representation};
use fockbridge_core::identities::{
    diagnose_converse, verify_bf, verify_cauchy, verify_commutation, verify_du, verify_heisenberg, verify_pieri,
};
use fockbridge_core::partition::Partition;
use fockbridge_core::reps::{extract_bundle, FermionicRep, LltRep, MacdonaldRep, Tensor};
use fockbridge_core::Scalar;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn fermionic_suite() {
    let f = HModule::new(FermionicRep::new());
    for report in [
        verify_pieri(&f, 2, 3).unwrap(),
        verify_du(&f, 2, 3).unwrap(),
        verify_heisenberg(&f, 3, 3).unwrap(),
        verify_commutation(&f, 3, 3).unwrap(),
        verify_bf(&f, 3, &[-2, -1, 1, 2]).unwrap(),
        verify_cauchy(&f, 2, 2, 3, &p(&[]), &p(&[])).unwrap(),
        verify_cauchy(&f, 2, 2, 3, &p(&[1]), &p(&[])).unwrap(),
    ] {
        assert!(report.passed(), "{report:?}");
        assert!(!report.checked.is_empty());
    }
}

#[test]
fn vacuum_instances() {
    let f = HModule::new(FermionicRep::new());
    let r = verify_pieri(&f, 2, 0).unwrap();
    assert!(r.passed());
    let r = verify_du(&f, 2, 0).unwrap();
    assert!(r.passed() && r.checked.len() == 4);
    let r = verify_cauchy(&f, 1, 1, 2, &p(&[]), &p(&[])).unwrap();
    assert!(r.passed());
}

#[test]
fn macdonald_suite() {
    let m = HModule::new(MacdonaldRep::new());
    assert!(verify_pieri(&m, 1, 2).unwrap().passed());
    assert!(verify_du(&m, 2, 2).unwrap().passed());
    assert!(verify_bf(&m, 2, &[-1, 1]).unwrap().passed());
    assert!(verify_cauchy(&m, 1, 1, 2, &p(&[]), &p(&[])).unwrap().passed());
}

#[test]
fn wrong_parameters_are_caught() {
    let m = HModule::new(MacdonaldRep::with_params(HeisenbergParams::ones()));
    assert!(!verify_du(&m, 2, 2).unwrap().passed());
    assert!(!verify_heisenberg(&m, 2, 2).unwrap().passed());
    let f = HModule::new(FermionicRep::new());
    assert!(verify_du(&f, 1, 1).unwrap().passed());
}

#[test]
fn other_reps_pass() {
    let llt = HModule::new(LltRep::new(2).unwrap());
    assert!(verify_heisenberg(&llt, 2, 4).unwrap().passed());
    assert!(verify_du(&llt, 2, 4).unwrap().passed());
    let fm = Arc::new(HModule::new(FermionicRep::new()));
    let t = HModule::new(Tensor::new(fm.clone(), fm).unwrap());
    assert!(verify_pieri(&t, 1, 2).unwrap().passed());
}

#[test]
fn converse_on_genuine_and_corrupted_bundles() {
    let f = HModule::new(FermionicRep::new());
    let bundle = extract_bundle(&f, 4, 4).unwrap();
    let ones = HeisenbergParams::ones();
    let report = diagnose_converse(&bundle, &ones, 3).unwrap();
    assert!(report.independent());
    assert!(report.heisenberg_action() && report.pieri_holds() && report.cauchy_holds());

    let wrong = diagnose_converse(&bundle, &HeisenbergParams::constant(&Scalar::from_int(2)), 3).unwrap();
    assert!(!wrong.du.passed());
    assert!(wrong.equivalent());

    let mut perturbed = bundle.clone();
    let op = perturbed
        .operators
        .iter_mut()
        .find(|op| op.kind == fockbridge_core::reps::LadderKind::U && op.k == 1 && op.degree == 2)
        .unwrap();
    // U_1 [1,1] gains [3], which is not a strip over [1,1]
    let row = bundle.basis[&3].iter().position(|l| l == "[3]").unwrap();
    let col = bundle.basis[&2].iter().position(|l| l == "[1,1]").unwrap();
    op.matrix.set(row, col, Scalar::one());
    let bad = diagnose_converse(&perturbed, &ones, 3).unwrap();
    assert!(!bad.du.passed());
    assert!(!bad.pieri.passed());
    let _ = f.rep().name();
}
