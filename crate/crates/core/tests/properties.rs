//! Randomized invariants: serialization round trips, polynomial ring
//! axioms, and statistic identities.

use proptest::collection::vec;
use proptest::prelude::*;

use colperm::stats::{
    derangement_part, descent_set, fixed_points, fmaj, insert_fixed_point, major_index,
    stat_summary,
};
use colperm::{ColoredPermutation, IntPartition, QPolynomial};

fn colored_permutation() -> impl Strategy<Value = ColoredPermutation> {
    (0usize..=8, 1usize..=4).prop_flat_map(|(n, k)| {
        let values = Just((1..=n).collect::<Vec<usize>>()).prop_shuffle();
        let colors = vec(0..k, n);
        (values, colors).prop_map(move |(values, colors)| {
            ColoredPermutation::new(k, values, colors).expect("valid by construction")
        })
    })
}

fn partition() -> impl Strategy<Value = IntPartition> {
    vec(0u64..=30, 0..=8).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let capacity = parts.len();
        IntPartition::new(parts, capacity).expect("sorted parts form a partition")
    })
}

fn qpolynomial() -> impl Strategy<Value = QPolynomial> {
    vec(-50i64..=50, 0..=12).prop_map(|coeffs| QPolynomial::from_i64_coeffs(&coeffs))
}

proptest! {
    #[test]
    fn window_text_round_trip(pi in colored_permutation()) {
        let text = pi.to_string();
        prop_assert_eq!(ColoredPermutation::parse(&text, pi.k()).unwrap(), pi);
    }

    #[test]
    fn window_json_round_trip(pi in colored_permutation()) {
        let json = serde_json::to_string(&pi).unwrap();
        prop_assert_eq!(serde_json::from_str::<ColoredPermutation>(&json).unwrap(), pi);
    }

    #[test]
    fn partition_text_round_trip(lambda in partition()) {
        prop_assert_eq!(IntPartition::parse(&lambda.to_string()).unwrap(), lambda);
    }

    #[test]
    fn partition_json_round_trip(lambda in partition()) {
        let json = serde_json::to_string(&lambda).unwrap();
        prop_assert_eq!(serde_json::from_str::<IntPartition>(&json).unwrap(), lambda);
    }

    #[test]
    fn polynomial_json_round_trip(p in qpolynomial()) {
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<QPolynomial>(&json).unwrap(), p);
    }

    #[test]
    fn ring_axioms(a in qpolynomial(), b in qpolynomial(), c in qpolynomial()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&b).add(&b), a);
    }

    #[test]
    fn substitution_is_an_involution(p in qpolynomial()) {
        prop_assert_eq!(p.substitute_neg_q().substitute_neg_q(), p);
    }

    #[test]
    fn flag_major_index_recomputes_from_parts(pi in colored_permutation()) {
        let summary = stat_summary(&pi);
        let weighted: u64 = summary
            .color_counts
            .iter()
            .enumerate()
            .map(|(j, &c)| j as u64 * c)
            .sum();
        prop_assert_eq!(summary.fmaj, pi.k() as u64 * summary.maj + weighted);
        prop_assert_eq!(summary.fmaj, fmaj(&pi));
        prop_assert_eq!(summary.maj, major_index(&pi));
        prop_assert_eq!(summary.descent_set, descent_set(&pi));
        prop_assert_eq!(summary.color_counts.iter().sum::<u64>(), pi.n() as u64);
    }

    #[test]
    fn derangement_part_and_insertion(pi in colored_permutation()) {
        let dp = derangement_part(&pi);
        prop_assert!(fixed_points(&dp).is_empty());
        prop_assert_eq!(dp.n() + fixed_points(&pi).len(), pi.n());

        // Re-inserting the fixed points in ascending order rebuilds the
        // original window exactly.
        let mut rebuilt = dp.clone();
        for j in fixed_points(&pi) {
            rebuilt = insert_fixed_point(&rebuilt, j).unwrap();
        }
        prop_assert_eq!(rebuilt, pi);
    }
}
