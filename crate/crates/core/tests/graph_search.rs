mod common;

use std::collections::HashSet;

use itertools::Itertools;
use leafsearch::gadgets::{gen_family, Family};
use leafsearch::pool::{exhaustive_pool, random_pool};
use leafsearch::{
    all_orderings, bfs_layers, complete_from_clique_prefix, ftree_from_ordering, ordering_bandwidth, run_plus,
    validate_ordering, Graph, Ordering, Paradigm,
};
use proptest::prelude::*;

const LAYERED: [Paradigm; 2] = [Paradigm::Bfs, Paradigm::Lbfs];

fn ord(v: &[usize]) -> Ordering {
    Ordering::new(v.to_vec()).unwrap()
}

proptest! {
    #[test]
    fn tree_partitions_vertices((g, rho) in common::graph_and_perm(2, 9), p in prop::sample::select(Paradigm::ALL.to_vec())) {
        let sigma = run_plus(&g, p, &ord(&rho));
        prop_assert!(validate_ordering(&g, &sigma, p));
        let t = ftree_from_ordering(&g, &sigma).unwrap();
        prop_assert_eq!(t.leaf_count() + t.internal_count(), g.n());
        prop_assert!(t.internal().contains(&t.root()));
        prop_assert!(!t.leaves().contains(&t.root()));
        for v in 0..g.n() {
            if let Some(p) = t.parent(v) {
                prop_assert!(g.has_edge(v, p));
                prop_assert!(sigma.pos(p) < sigma.pos(v));
            }
        }
    }

    #[test]
    fn layered_bandwidth_and_layer_bounds((g, rho) in common::graph_and_perm(2, 9), p in prop::sample::select(LAYERED.to_vec())) {
        let sigma = run_plus(&g, p, &ord(&rho));
        let k = ftree_from_ordering(&g, &sigma).unwrap().leaf_count();
        let bw = ordering_bandwidth(&g, &sigma);
        prop_assert!(bw < 2 * k);
        if p == Paradigm::Bfs {
            prop_assert!(bw <= k);
        }
        prop_assert!(k >= bfs_layers(&g, sigma.seq()[0]).max_layer_size());
    }

    #[test]
    fn layers_are_local(g in common::graph(1, 10), r in any::<prop::sample::Index>()) {
        let root = r.index(g.n());
        let layers = bfs_layers(&g, root);
        prop_assert_eq!(layers.layer(0), &[root][..]);
        prop_assert!(layers.is_edge_local(&g));
        let mut seen: Vec<usize> = layers.layers().concat();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn run_plus_is_deterministic((g, rho) in common::graph_and_perm(1, 9), p in prop::sample::select(Paradigm::ALL.to_vec())) {
        prop_assert_eq!(run_plus(&g, p, &ord(&rho)), run_plus(&g, p, &ord(&rho)));
    }
}

#[test]
fn enumeration_matches_permutation_filter() {
    for g in exhaustive_pool(1, 6) {
        for p in Paradigm::ALL {
            let listed: Vec<Vec<usize>> = all_orderings(&g, p).into_iter().map(Ordering::into_vec).collect();
            let unique: HashSet<&Vec<usize>> = listed.iter().collect();
            assert_eq!(unique.len(), listed.len(), "duplicates for {p} on {g:?}");
            let filtered: HashSet<Vec<usize>> = (0..g.n())
                .permutations(g.n())
                .filter(|s| validate_ordering(&g, &ord(s), p))
                .collect();
            assert_eq!(unique, filtered.iter().collect(), "{p} on {g:?}");
        }
    }
}

#[test]
fn run_plus_output_is_enumerated() {
    for g in exhaustive_pool(2, 5) {
        for p in Paradigm::ALL {
            let all: HashSet<Vec<usize>> = all_orderings(&g, p).into_iter().map(Ordering::into_vec).collect();
            for rho in (0..g.n()).permutations(g.n()) {
                assert!(all.contains(run_plus(&g, p, &ord(&rho)).seq()));
            }
        }
    }
}

fn ordered_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=g.n() {
        for set in (0..g.n()).combinations(size) {
            if set.iter().tuple_combinations().all(|(&a, &b)| g.has_edge(a, b)) {
                out.extend(set.iter().copied().permutations(size));
            }
        }
    }
    out
}

#[test]
fn every_clique_prefix_starts_a_search() {
    let mut pool = exhaustive_pool(1, 6);
    pool.extend(random_pool(7, 8, 40, 11));
    for g in &pool {
        for prefix in ordered_cliques(g) {
            for p in Paradigm::ALL {
                let sigma = complete_from_clique_prefix(g, p, &prefix).unwrap();
                assert_eq!(&sigma.seq()[..prefix.len()], &prefix[..]);
                assert!(validate_ordering(g, &sigma, p));
            }
        }
    }
}

#[test]
fn spec_search_examples() {
    let c4 = Graph::new(4, &[(0, 1), (0, 3), (1, 2), (2, 3)]).unwrap();
    assert_eq!(run_plus(&c4, Paradigm::Bfs, &ord(&[0, 1, 2, 3])).seq(), &[0, 1, 3, 2]);
    let k4 = gen_family(Family::Complete(4)).unwrap();
    assert_eq!(run_plus(&k4, Paradigm::Lbfs, &ord(&[2, 0, 1, 3])).seq(), &[2, 0, 1, 3]);
    let p4 = gen_family(Family::Path(4)).unwrap();
    assert_eq!(run_plus(&p4, Paradigm::Gs, &ord(&[1, 3, 0, 2])).seq(), &[1, 0, 2, 3]);
    assert!(complete_from_clique_prefix(&p4, Paradigm::Bfs, &[0, 2]).is_err());
    assert_eq!(&complete_from_clique_prefix(&k4, Paradigm::Lbfs, &[3, 1]).unwrap().seq()[..2], &[3, 1]);

    let k3 = gen_family(Family::Complete(3)).unwrap();
    assert_eq!(all_orderings(&k3, Paradigm::Gs).len(), 6);
    let p3 = gen_family(Family::Path(3)).unwrap();
    let bfs: Vec<Vec<usize>> = all_orderings(&p3, Paradigm::Bfs).into_iter().map(Ordering::into_vec).collect();
    assert_eq!(bfs.len(), 4);
    for s in [[0, 1, 2], [1, 0, 2], [1, 2, 0], [2, 1, 0]] {
        assert!(bfs.contains(&s.to_vec()));
    }
    assert_eq!(all_orderings(&c4, Paradigm::Lbfs).len(), 8);
}
