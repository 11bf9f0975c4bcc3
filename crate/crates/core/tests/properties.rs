mod common;

use std::collections::BTreeSet;

use metdim_core::families::{kneser, paley};
use metdim_core::graph::{distance_matrix, parse_graph6, to_graph6};
use metdim_core::metricdim::is_resolving;
use metdim_core::symsearch::orbit_reps_with;
use metdim_core::{automorphism_group, metric_dimension, Graph, SearchOptions, Strategy as Search};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.2f64..0.8, any::<u64>()).prop_map(|(n, p, seed)| common::random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, p))
}

fn dim(g: &Graph) -> usize {
    metric_dimension(g, &SearchOptions::default()).unwrap().dimension
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn relabelling_preserves_dimension_and_group(g in graph_strategy(4, 12), seed in any::<u64>()) {
        let (h, _) = common::shuffled(&g, seed);
        prop_assert_eq!(dim(&g), dim(&h));
        prop_assert_eq!(automorphism_group(&g).order(), automorphism_group(&h).order());
    }

    #[test]
    fn supersets_of_resolving_sets_resolve(g in graph_strategy(4, 12), extra in any::<u32>()) {
        let r = metric_dimension(&g, &SearchOptions::default()).unwrap();
        let dm = distance_matrix(&g);
        let mut bigger = r.witness.clone();
        let v = extra % g.n() as u32;
        if !bigger.contains(&v) {
            bigger.push(v);
            bigger.sort_unstable();
        }
        prop_assert!(is_resolving(&dm, &bigger).unwrap());
    }

    #[test]
    fn group_order_matches_exhaustive_count(g in graph_strategy(3, 8)) {
        prop_assert_eq!(automorphism_group(&g).order(), common::count_automorphisms_exhaustive(&g).into());
    }

    #[test]
    fn deterministic_witness_is_independent_of_strategy(g in graph_strategy(5, 12)) {
        let run = |strategy, threads| {
            metric_dimension(&g, &SearchOptions { strategy, threads: Some(threads), deterministic: true, ..SearchOptions::default() }).unwrap().witness
        };
        let plain = run(Search::Plain, 1);
        prop_assert_eq!(&plain, &run(Search::Plain, 3));
        prop_assert_eq!(run(Search::Orbit, 1).len(), plain.len());
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(2, 40)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn self_complementary_paley_graphs() {
    for q in [13, 17] {
        let g = paley(q).unwrap();
        assert_eq!(dim(&g), dim(&g.complement()), "P{q}");
        assert_eq!(dim(&g), 4);
    }
}

/// One representative per orbit, each the least element of its orbit, for
/// orbits computed by closing under the generators.
#[test]
fn orbit_representatives_against_explicit_orbits() {
    for g in [kneser(5, 2).unwrap(), metdim_core::expr::build("hamming(3,2)").unwrap(), metdim_core::expr::build("cycle(8)").unwrap()] {
        let n = g.n();
        let group = automorphism_group(&g);
        for k in 1..=4 {
            let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
            let mut minima = BTreeSet::new();
            let all = (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n as u32).filter(|i| m >> i & 1 == 1).collect::<Vec<_>>());
            for s in all {
                if seen.contains(&s) {
                    continue;
                }
                let mut orbit = BTreeSet::from([s.clone()]);
                let mut frontier = vec![s];
                while let Some(t) = frontier.pop() {
                    for p in group.generators() {
                        let mut img: Vec<u32> = t.iter().map(|&x| p.apply(x)).collect();
                        img.sort_unstable();
                        if orbit.insert(img.clone()) {
                            frontier.push(img);
                        }
                    }
                }
                minima.insert(orbit.first().unwrap().clone());
                seen.extend(orbit);
            }
            let reps: BTreeSet<Vec<u32>> = orbit_reps_with(&group, n, k, 1.0).collect();
            assert_eq!(reps, minima, "n = {n}, k = {k}");
        }
    }
}
