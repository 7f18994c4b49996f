use proptest::prelude::*;

use fockbridge_core::{Bindings, Error, Scalar};

fn poly_text(coeffs: &[(i64, u32, u32)]) -> String {
    let mut s = String::from("0");
    for &(c, i, j) in coeffs {
        s.push_str(&format!(" + ({c})*q^{i}*t^{j}"));
    }
    s
}

fn scalar() -> impl Strategy<Value = Scalar> {
    let poly = prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..4);
    (poly.clone(), poly).prop_map(|(n, d)| {
        let num: Scalar = poly_text(&n).parse().unwrap();
        let den: Scalar = poly_text(&d).parse().unwrap();
        if den.is_zero() {
            num
        } else {
            num.checked_div(&den).unwrap()
        }
    })
}

fn small_int() -> impl Strategy<Value = Scalar> {
    (-3i64..=3).prop_map(Scalar::from_int)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &Scalar::zero(), a.clone());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(a.checked_div(&a).unwrap(), Scalar::one());
        } else {
            prop_assert_eq!(a.inv(), Err(Error::DivisionByZero));
        }
    }

    #[test]
    fn text_round_trips(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn specialization_is_a_homomorphism(a in scalar(), b in scalar(), q in small_int(), t in small_int()) {
        let bind = Bindings { q: Some(q), t: Some(t) };
        if let (Ok(sa), Ok(sb)) = (a.specialize(&bind), b.specialize(&bind)) {
            prop_assert_eq!((&a + &b).specialize(&bind).unwrap(), &sa + &sb);
            prop_assert_eq!((&a * &b).specialize(&bind).unwrap(), &sa * &sb);
            prop_assert!(sa.as_rational().is_some());
        }
    }

    #[test]
    fn partial_specialization_composes(a in scalar(), q in small_int(), t in small_int()) {
        let full = a.specialize(&Bindings { q: Some(q.clone()), t: Some(t.clone()) });
        let staged = a.specialize(&Bindings::q(q)).and_then(|b| b.specialize(&Bindings::t(t)));
        if let (Ok(x), Ok(y)) = (full, staged) {
            prop_assert_eq!(x, y);
        }
    }
}

#[test]
fn pole_is_reported() {
    let a: Scalar = "1/(1 - q)".parse().unwrap();
    assert!(matches!(
        a.specialize(&Bindings::q(Scalar::one())),
        Err(Error::Pole { .. })
    ));
}
