use proptest::prelude::*;

use fockbridge::json::{BundleJson, ReportJson, SymFuncJson};
use fockbridge_core::heisenberg::HModule;
use fockbridge_core::identities::{diagnose_converse, verify_du};
use fockbridge_core::partition::partitions_up_to;
use fockbridge_core::reps::{extract_bundle, MacdonaldRep, MatrixBundle};
use fockbridge_core::symfunc::{Basis, SymFunc};
use fockbridge_core::Scalar;

fn reserialize<T: serde::Serialize + serde::de::DeserializeOwned>(text: &str) -> String {
    let value: T = serde_json::from_str(text).unwrap();
    serde_json::to_string(&value).unwrap()
}

#[test]
fn symfunc_example_parses() {
    let text = r#"{"basis":"p","terms":[{"partition":[2,1],"coeff":"(1-t)/(1-q)"}]}"#;
    let j: SymFuncJson = serde_json::from_str(text).unwrap();
    let f = SymFunc::try_from(&j).unwrap();
    let c: Scalar = "(1 - t)/(1 - q)".parse().unwrap();
    assert_eq!(f.coeff(&"[2,1]".parse().unwrap()), c);
}

#[test]
fn symfunc_rejects_bad_input() {
    for text in [
        r#"{"basis":"x","terms":[]}"#,
        r#"{"basis":"p","terms":[{"partition":[1,2],"coeff":"1"}]}"#,
        r#"{"basis":"p","terms":[{"partition":[1],"coeff":"1/("}]}"#,
        r#"{"basis":"p","terms":[{"partition":[1],"coeff":"1"},{"partition":[1],"coeff":"2"}]}"#,
    ] {
        let j: SymFuncJson = serde_json::from_str(text).unwrap();
        assert!(SymFunc::try_from(&j).is_err(), "{text}");
    }
}

#[test]
fn terms_are_reverse_lexicographic() {
    let f = SymFunc::from_terms(Basis::S, partitions_up_to(4).into_iter().map(|p| (p, Scalar::one())));
    let j = SymFuncJson::from(&f);
    assert!(j.terms.windows(2).all(|w| w[0].partition > w[1].partition));
}

#[test]
fn report_round_trips() {
    let m = HModule::new(MacdonaldRep::new());
    let r = ReportJson::from(&verify_du(&m, 2, 3).unwrap());
    let text = serde_json::to_string(&r).unwrap();
    assert!(text.starts_with(r#"{"identity":"du","passed":true,"checked":"#));
    assert_eq!(reserialize::<ReportJson>(&text), text);

    let bundle = extract_bundle(&m, 3, 3).unwrap();
    let c = ReportJson::from(&diagnose_converse(&bundle, &bundle.params, 3).unwrap());
    let text = serde_json::to_string(&c).unwrap();
    assert!(c.passed);
    assert_eq!(reserialize::<ReportJson>(&text), text);
}

#[test]
fn bundle_round_trips() {
    let m = HModule::new(MacdonaldRep::new());
    let bundle = extract_bundle(&m, 3, 3).unwrap();
    let j = BundleJson::from(&bundle);
    let text = serde_json::to_string(&j).unwrap();
    assert_eq!(reserialize::<BundleJson>(&text), text);
    let back = MatrixBundle::try_from(&j).unwrap();
    assert_eq!(back.operators, bundle.operators);
    assert_eq!(back.basis, bundle.basis);
    assert!(back.params.same_as(&bundle.params));
    assert_eq!(BundleJson::from(&back), j);
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 0u32..3, 0u32..3, 1i64..=4, 0u32..2).prop_map(|(a, i, j, b, k)| {
        let num: Scalar = format!("{a}*q^{i}*t^{j} + 1").parse().unwrap();
        let den: Scalar = format!("{b} - q^{k}*t").parse().unwrap();
        num.checked_div(&den).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symfunc_json_round_trips(
        basis in prop::sample::select(Basis::ALL.to_vec()),
        coeffs in prop::collection::vec(scalar(), 1..8),
        pick in prop::collection::vec(0usize..12, 1..8),
    ) {
        let parts = partitions_up_to(4);
        let f = SymFunc::from_terms(
            basis,
            pick.iter().zip(&coeffs).map(|(&i, c)| (parts[i % parts.len()].clone(), c.clone())),
        );
        let j = SymFuncJson::from(&f);
        let text = serde_json::to_string(&j).unwrap();
        prop_assert_eq!(reserialize::<SymFuncJson>(&text), text.clone());
        let back = SymFunc::try_from(&serde_json::from_str::<SymFuncJson>(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }
}
