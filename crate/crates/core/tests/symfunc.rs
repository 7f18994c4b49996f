use proptest::prelude::*;

use fockbridge_core::heisenberg::{HModule, HeisenbergParams};
use fockbridge_core::identities::cauchy_kernel;
use fockbridge_core::partition::{horizontal_strips, partitions_of, partitions_up_to, Partition};
use fockbridge_core::reps::{FermionicRep, MacdonaldRep};
use fockbridge_core::symfunc::{
    evaluate_vars, h, hall_inner, kappa_eval, multiply, perp_apply, Basis, SymFunc, Var, VarPoly,
};
use fockbridge_core::Scalar;

fn symfunc(max_degree: usize) -> impl Strategy<Value = SymFunc> {
    let parts = partitions_up_to(max_degree);
    let n = parts.len();
    (
        prop::sample::select(Basis::ALL.to_vec()),
        prop::collection::vec((0..n, -3i64..=3), 1..6),
    )
        .prop_map(move |(b, terms)| {
            SymFunc::from_terms(
                b,
                terms.into_iter().map(|(i, c)| (parts[i].clone(), Scalar::from_int(c))),
            )
        })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

fn schur(lambda: &Partition) -> SymFunc {
    SymFunc::basis_element(Basis::S, lambda.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conversions_round_trip(f in symfunc(6), b in basis()) {
        let there = f.convert(b).unwrap();
        prop_assert_eq!(there.basis(), b);
        prop_assert_eq!(there.convert(f.basis()).unwrap(), f.clone());
        prop_assert!(f.same_element(&there).unwrap());
    }

    #[test]
    fn perp_is_adjoint_to_multiplication(f in symfunc(4), g in symfunc(2), k in symfunc(2)) {
        let lhs = hall_inner(&perp_apply(&g, &f).unwrap(), &k).unwrap();
        let rhs = hall_inner(&f, &multiply(&g, &k).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_commutative(f in symfunc(3), g in symfunc(3)) {
        let fg = multiply(&f, &g).unwrap();
        let gf = multiply(&g, &f).unwrap();
        prop_assert!(fg.same_element(&gf).unwrap());
    }
}

#[test]
fn schur_functions_are_orthonormal() {
    for d in 0..=5 {
        for a in partitions_of(d) {
            for b in partitions_of(d) {
                let expect = if a == b { Scalar::one() } else { Scalar::zero() };
                assert_eq!(hall_inner(&schur(&a), &schur(&b)).unwrap(), expect);
            }
        }
    }
}

#[test]
fn pieri_rule_for_schur_functions() {
    for d in 0..=4 {
        for lambda in partitions_of(d) {
            for k in 0..=3u32 {
                let lhs = multiply(&h(k), &schur(&lambda)).unwrap().convert(Basis::S).unwrap();
                let rhs = SymFunc::from_terms(
                    Basis::S,
                    horizontal_strips(&lambda, k as usize)
                        .into_iter()
                        .map(|mu| (mu, Scalar::one())),
                );
                assert_eq!(lhs, rhs, "h_{k} s_{lambda}");
            }
        }
    }
}

#[test]
fn classical_cauchy_identity() {
    let (xs, ys) = (Var::family('x', 3), Var::family('y', 3));
    let d_max = 4u32;
    let mut lhs = VarPoly::zero();
    for d in 0..=(d_max / 2) as usize {
        for lambda in partitions_of(d) {
            let fx = evaluate_vars(&schur(&lambda), &xs).unwrap();
            let fy = evaluate_vars(&schur(&lambda), &ys).unwrap();
            lhs = sum(&lhs, &fx.mul_truncated(&fy, d_max));
        }
    }
    let kernel = cauchy_kernel(&HeisenbergParams::ones(), &xs, &ys, d_max).unwrap();
    assert_eq!(lhs, kernel);
}

fn sum(a: &VarPoly, b: &VarPoly) -> VarPoly {
    let mut out = a.clone();
    for (m, c) in b.terms() {
        out.add_term(m.clone(), c);
    }
    out
}

#[test]
fn kappa_of_h_is_the_bracket() {
    for params in [
        HeisenbergParams::ones(),
        HeisenbergParams::macdonald(),
        HeisenbergParams::ribbon(2),
    ] {
        for k in 0..=5 {
            assert_eq!(
                kappa_eval(&h(k), &params).unwrap(),
                params.h_bracket(k).unwrap(),
                "{params} k={k}"
            );
        }
    }
    assert!((0..=5).all(|k| HeisenbergParams::ones().h_bracket(k).unwrap().is_one()));
}

#[test]
fn fermionic_f_equals_g() {
    let f = HModule::new(FermionicRep::new());
    for s in partitions_up_to(5) {
        for t in partitions_up_to(s.size()) {
            let (fs, gs) = (f.compute_f(&s, &t).unwrap(), f.compute_g(&s, &t).unwrap());
            assert_eq!(fs, gs, "{s}/{t}");
        }
    }
}

#[test]
fn macdonald_g_is_unitriangular() {
    let m = HModule::new(MacdonaldRep::new());
    let e = Partition::empty();
    for lambda in partitions_up_to(4) {
        let g = m.compute_g(&lambda, &e).unwrap().convert(Basis::M).unwrap();
        assert!(g.coeff(&lambda).is_one(), "{lambda}");
        assert!(g.terms().all(|(mu, _)| lambda.dominates(mu)), "{lambda}: {g}");
    }
}
