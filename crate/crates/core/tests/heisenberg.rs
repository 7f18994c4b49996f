use fockbridge_core::heisenberg::{act_on_lambda, Generator, HModule, HeisenbergParams, Route, StateVec};
use fockbridge_core::partition::{compositions_of, partitions_of, Partition, SkewShape};
use fockbridge_core::reps::{FermionicRep, MacdonaldRep};
use fockbridge_core::symfunc::{schur_tableaux, Basis, SymFunc};
use fockbridge_core::Scalar;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn v(terms: &[(&[u32], i64)]) -> StateVec<Partition> {
    StateVec::from_terms(terms.iter().map(|(l, c)| (p(l), Scalar::from_int(*c))))
}

fn basis(parts: &[u32]) -> StateVec<Partition> {
    StateVec::basis(p(parts))
}

#[test]
fn fermionic_boson_action() {
    let f = HModule::new(FermionicRep::new());
    assert!(f.apply_b(1, &basis(&[])).unwrap().is_zero());
    assert_eq!(f.apply_b(-1, &basis(&[])).unwrap(), basis(&[1]));
    assert_eq!(f.apply_b(-2, &basis(&[])).unwrap(), v(&[(&[2], 1), (&[1, 1], -1)]));
    assert_eq!(f.apply_b(-1, &basis(&[1])).unwrap(), v(&[(&[2], 1), (&[1, 1], 1)]));
    assert_eq!(f.apply_b(2, &basis(&[2])).unwrap(), basis(&[]));
    assert!(f.act(Generator::B(0), &p(&[])).is_err());
}

#[test]
fn derived_ladder_operators() {
    let f = HModule::new(FermionicRep::new());
    assert_eq!(f.apply_u(2, &basis(&[])).unwrap(), basis(&[2]));
    assert_eq!(f.apply_u(2, &basis(&[1])).unwrap(), v(&[(&[3], 1), (&[2, 1], 1)]));
    assert_eq!(f.apply_u(0, &basis(&[1])).unwrap(), basis(&[1]));
    let m = HModule::new(MacdonaldRep::new());
    assert_eq!(m.apply_d(1, &basis(&[1])).unwrap(), basis(&[]));
}

#[test]
fn generating_functions() {
    let f = HModule::new(FermionicRep::new());
    assert_eq!(f.compute_f(&p(&[]), &p(&[])).unwrap(), SymFunc::one(Basis::P));
    let skew = f.compute_f(&p(&[2, 1]), &p(&[1])).unwrap().convert(Basis::S).unwrap();
    let expected = SymFunc::from_terms(Basis::S, [(p(&[2]), Scalar::one()), (p(&[1, 1]), Scalar::one())]);
    assert_eq!(skew, expected);
    let oracle = schur_tableaux(&SkewShape::new(p(&[2, 1]), p(&[1])).unwrap()).unwrap();
    assert!(oracle.same_element(&skew).unwrap());
    assert!(f.compute_f(&p(&[1]), &p(&[2])).unwrap().is_zero());

    let m = HModule::new(MacdonaldRep::new());
    assert_eq!(
        m.compute_g(&p(&[1]), &p(&[])).unwrap(),
        SymFunc::basis_element(Basis::P, p(&[1]))
    );
    let q1 = m.compute_f(&p(&[1]), &p(&[])).unwrap();
    assert_eq!(q1.coeff(&p(&[1])), "(1-t)/(1-q)".parse().unwrap());
}

#[test]
fn both_routes_agree() {
    let m = HModule::new(MacdonaldRep::new());
    for d in 0..=3 {
        for s in partitions_of(d) {
            for t in partitions_of(d.saturating_sub(2)) {
                let a = m.compute_f_via(&s, &t, Route::PowerSum).unwrap();
                let b = m.compute_f_via(&s, &t, Route::Monomial).unwrap();
                assert_eq!(a, b, "F_{s}/{t}");
                let a = m.compute_g_via(&s, &t, Route::PowerSum).unwrap();
                let b = m.compute_g_via(&s, &t, Route::Monomial).unwrap();
                assert_eq!(a, b, "G_{s}/{t}");
            }
        }
    }
}

#[test]
fn monomial_coefficients() {
    let f = HModule::new(FermionicRep::new());
    assert_eq!(f.monomial_coeff(&p(&[2, 1]), &p(&[]), &[2, 1]).unwrap(), Scalar::one());
    assert_eq!(
        f.monomial_coeff(&p(&[2, 1]), &p(&[]), &[1, 1, 1]).unwrap(),
        Scalar::from_int(2)
    );
    assert_eq!(f.monomial_coeff(&p(&[3]), &p(&[3]), &[]).unwrap(), Scalar::one());
    // every composition's coefficient matches the m-expansion of F
    for d in 1..=4 {
        for s in partitions_of(d) {
            let fm = f.compute_f(&s, &p(&[])).unwrap().convert(Basis::M).unwrap();
            for alpha in compositions_of(d) {
                let sorted = Partition::from_unsorted(alpha.clone());
                assert_eq!(f.monomial_coeff(&s, &p(&[]), &alpha).unwrap(), fm.coeff(&sorted));
            }
        }
    }
}

#[test]
fn phi_sends_wedges_to_schur_functions() {
    let f = HModule::new(FermionicRep::new());
    assert_eq!(f.phi_map(&basis(&[])).unwrap(), SymFunc::one(Basis::P));
    for d in 0..=4 {
        for lambda in partitions_of(d) {
            let image = f.phi_map(&basis(lambda.parts())).unwrap();
            assert!(image
                .same_element(&SymFunc::basis_element(Basis::S, lambda.clone()))
                .unwrap());
        }
    }
}

#[test]
fn phi_intertwines_small_cases() {
    let m = HModule::new(MacdonaldRep::new());
    let a = m.params().clone();
    for lambda in partitions_of(2) {
        for l in [-2i64, -1, 1, 2] {
            let lhs = m.phi_map(&m.apply_b(l, &basis(lambda.parts())).unwrap()).unwrap();
            let rhs = act_on_lambda(&a, l, &m.phi_map(&basis(lambda.parts())).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "l = {l}, λ = {lambda}");
        }
    }
}

#[test]
fn corrected_commutation_with_b_lambda() {
    // B_λ B_{-k} = B_{-k} B_λ + k a_k m_k(λ) B_μ with μ = λ minus one part k
    let m = HModule::new(MacdonaldRep::new());
    let a = HeisenbergParams::macdonald();
    for (vb, lambda) in [
        (&[][..], p(&[1])),
        (&[2, 1], p(&[2, 1])),
        (&[1, 1], p(&[1, 1])),
        (&[2], p(&[2, 2])),
    ] {
        let vb = basis(vb);
        for k in 1..=2u32 {
            let b_lambda: Vec<Generator> = lambda.parts().iter().map(|&x| Generator::B(x as i64)).collect();
            let mut with_k = vec![Generator::B(-(k as i64))];
            with_k.extend(&b_lambda);
            let lhs = m.apply_seq(&with_k, &vb).unwrap();
            let mut k_after = b_lambda.clone();
            k_after.push(Generator::B(-(k as i64)));
            let mut rhs = m.apply_seq(&k_after, &vb).unwrap();
            if let Some(mu) = lambda.without_part(k) {
                let b_mu: Vec<Generator> = mu.parts().iter().map(|&x| Generator::B(x as i64)).collect();
                let c = &a.a(k).unwrap() * &Scalar::from_int((k as usize * lambda.multiplicity(k)) as i64);
                rhs.add_scaled(&m.apply_seq(&b_mu, &vb).unwrap(), &c);
            }
            assert_eq!(lhs, rhs, "λ = {lambda}, k = {k}");
        }
    }
}
