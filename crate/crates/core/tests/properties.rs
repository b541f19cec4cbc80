mod common;

use proptest::prelude::*;
use rich_subset::numeric::{rat, RatVec, Rational};
use rich_subset::oracle::{brute_min_rich, greedy_top_k};
use rich_subset::selector::{is_rich, select_rich_subset, upper_bound_f};
use rich_subset::{Instance, TargetRatio};

fn ratio() -> impl Strategy<Value = TargetRatio> {
    (1u64..10)
        .prop_flat_map(|q| (0..=q, Just(q)))
        .prop_map(|(p, q)| TargetRatio::new(p, q).unwrap())
}

fn coordinate() -> impl Strategy<Value = Rational> {
    prop_oneof![
        1 => Just(rat(0, 1)),
        3 => (1i64..50, 1i64..20).prop_map(|(n, m)| rat(n, m)),
    ]
}

fn instance(max_n: usize, max_d: usize) -> impl Strategy<Value = Instance> {
    (1..=max_d, 1..=max_n).prop_flat_map(|(d, n)| {
        proptest::collection::vec(proptest::collection::vec(coordinate(), d), n).prop_map(
            move |rows| Instance::new(d, rows.into_iter().map(RatVec::new).collect()).unwrap(),
        )
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn scale_coordinates(inst: &Instance, factors: &[Rational]) -> Instance {
    let vectors = inst
        .vectors()
        .iter()
        .map(|v| RatVec::new(v.iter().zip(factors).map(|(x, c)| x * c).collect()))
        .collect();
    Instance::new(inst.d(), vectors).unwrap()
}

fn positive_factors(d: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((1i64..30, 1i64..30).prop_map(|(n, m)| rat(n, m)), d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn selection_is_rich_and_within_bound(inst in instance(30, 5), r in ratio()) {
        let sel = select_rich_subset(&inst, r).unwrap();
        prop_assert!(is_rich(&inst, r, &sel.indices).unwrap());
        prop_assert!(sel.size() <= upper_bound_f(inst.n(), inst.d(), r));
        prop_assert_eq!(sel.sum, inst.subset_sum(&sel.indices));
        prop_assert!(sel.indices.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn selection_survives_permutation(
        (inst, order) in instance(25, 4).prop_flat_map(|i| {
            let n = i.n();
            (Just(i), shuffled(n))
        }),
        r in ratio(),
    ) {
        let moved = inst.permuted(&order).unwrap();
        let sel = select_rich_subset(&moved, r).unwrap();
        prop_assert!(sel.size() <= upper_bound_f(inst.n(), inst.d(), r));
        let back: Vec<usize> = sel.indices.iter().map(|&i| order[i]).collect();
        prop_assert!(is_rich(&inst, r, &back).unwrap());
    }

    #[test]
    fn selection_survives_coordinate_scaling(
        (inst, factors) in instance(25, 4).prop_flat_map(|i| {
            let d = i.d();
            (Just(i), positive_factors(d))
        }),
        r in ratio(),
    ) {
        let scaled = scale_coordinates(&inst, &factors);
        let sel = select_rich_subset(&scaled, r).unwrap();
        prop_assert!(sel.size() <= upper_bound_f(inst.n(), inst.d(), r));
        prop_assert!(is_rich(&inst, r, &sel.indices).unwrap());
    }

    #[test]
    fn scalar_instances_match_greedy(inst in instance(30, 1), r in ratio()) {
        let greedy = greedy_top_k(&inst, r).unwrap();
        let f = upper_bound_f(inst.n(), 1, r);
        prop_assert_eq!(greedy.size(), f);
        prop_assert!(is_rich(&inst, r, &greedy.indices).unwrap());
        prop_assert!(select_rich_subset(&inst, r).unwrap().size() <= f);
    }

    #[test]
    fn oracle_sits_below_selection(inst in instance(12, 4), r in ratio()) {
        let best = brute_min_rich(&inst, r, 12).unwrap();
        let sel = select_rich_subset(&inst, r).unwrap();
        prop_assert!(is_rich(&inst, r, &best.witness).unwrap());
        prop_assert_eq!(best.witness.len(), best.min_size);
        prop_assert!(best.min_size <= sel.size());
        prop_assert!(sel.size() <= upper_bound_f(inst.n(), inst.d(), r));
    }

    #[test]
    fn oracle_minimum_is_invariant(
        (inst, order, factors) in instance(10, 3).prop_flat_map(|i| {
            let (n, d) = (i.n(), i.d());
            (Just(i), shuffled(n), positive_factors(d))
        }),
        r in ratio(),
    ) {
        let base = brute_min_rich(&inst, r, 10).unwrap().min_size;
        let moved = brute_min_rich(&inst.permuted(&order).unwrap(), r, 10).unwrap();
        let scaled = brute_min_rich(&scale_coordinates(&inst, &factors), r, 10).unwrap();
        prop_assert_eq!(moved.min_size, base);
        prop_assert_eq!(scaled.min_size, base);
    }
}

#[test]
fn corpus_selections_are_rich() {
    for c in common::random_corpus(200, 20, 4, 900) {
        let sel = select_rich_subset(&c.inst, c.ratio).unwrap();
        assert!(
            is_rich(&c.inst, c.ratio, &sel.indices).unwrap(),
            "seed {}",
            c.seed
        );
        assert!(sel.size() <= upper_bound_f(c.inst.n(), c.inst.d(), c.ratio));
    }
}
