use std::collections::BTreeSet;

use proptest::prelude::*;

use fockbridge_core::partition::{
    core_quotient, from_core_quotient, horizontal_strips, horizontal_strips_below, is_core, partitions_of,
    partitions_up_to, Partition,
};

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|d| {
        let all = partitions_of(d);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// `μ/λ` is a horizontal strip when `μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ …`.
fn interlaces(mu: &Partition, lambda: &Partition) -> bool {
    (1..=mu.len().max(lambda.len()) + 1).all(|i| mu.part(i) >= lambda.part(i) && lambda.part(i) >= mu.part(i + 1))
}

fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    lambda
        .cells()
        .map(|c| {
            let (a, l) = lambda.arm_leg(c).unwrap();
            a + l + 1
        })
        .collect()
}

#[test]
fn partition_counts_and_order() {
    let counts: Vec<usize> = (0..=10).map(|d| partitions_of(d).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    for d in 0..=8 {
        let ps = partitions_of(d);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|p| p.size() == d));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn conjugation(lambda in partition(12)) {
        let c = lambda.conjugate();
        prop_assert_eq!(c.conjugate(), lambda.clone());
        prop_assert_eq!(c.size(), lambda.size());
        for j in 1..=lambda.part(1) as usize {
            let count = lambda.parts().iter().filter(|&&p| p as usize >= j).count();
            prop_assert_eq!(c.part(j) as usize, count);
        }
    }

    #[test]
    fn strips_match_interlacing(lambda in partition(7), k in 0usize..4) {
        let up: BTreeSet<Partition> = horizontal_strips(&lambda, k).into_iter().collect();
        let want: BTreeSet<Partition> = partitions_of(lambda.size() + k)
            .into_iter()
            .filter(|mu| interlaces(mu, &lambda))
            .collect();
        prop_assert_eq!(up, want);

        let down: BTreeSet<Partition> = horizontal_strips_below(&lambda, k).into_iter().collect();
        let want: BTreeSet<Partition> = if k > lambda.size() {
            BTreeSet::new()
        } else {
            partitions_of(lambda.size() - k).into_iter().filter(|mu| interlaces(&lambda, mu)).collect()
        };
        prop_assert_eq!(down, want);
    }

    #[test]
    fn dominance_is_a_partial_order(a in partition(6), b in partition(6)) {
        prop_assert!(a.dominates(&a));
        if a.size() == b.size() && a.dominates(&b) && b.dominates(&a) {
            prop_assert_eq!(a.clone(), b.clone());
        }
        if a.size() == b.size() && a.dominates(&b) {
            prop_assert!(b.conjugate().dominates(&a.conjugate()));
        }
    }
}

#[test]
fn core_quotient_round_trips() {
    for n in 2..=4usize {
        for lambda in partitions_up_to(10) {
            let (core, quotient) = core_quotient(&lambda, n).unwrap();
            assert_eq!(quotient.len(), n);
            assert!(is_core(&core, n));
            assert!(
                hook_lengths(&core).iter().all(|h| h % n as u32 != 0),
                "{core} is not a {n}-core"
            );
            let weight: usize = quotient.iter().map(Partition::size).sum();
            assert_eq!(lambda.size(), core.size() + n * weight);
            assert_eq!(from_core_quotient(&core, &quotient, n).unwrap(), lambda);
        }
    }
}

#[test]
fn core_detection_matches_hooks() {
    for n in 2..=4usize {
        for lambda in partitions_up_to(10) {
            let hooks_ok = hook_lengths(&lambda).iter().all(|h| h % n as u32 != 0);
            assert_eq!(is_core(&lambda, n), hooks_ok, "{lambda} n={n}");
        }
    }
}
