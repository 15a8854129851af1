mod common;

use itertools::Itertools;
use leafsearch::layered::{layer_transition_valid, optimum, solve};
use leafsearch::oracle::brute_leaf_range;
use leafsearch::pool::exhaustive_pool;
use leafsearch::{bfs_layers, ftree_from_ordering, validate_ordering, Graph, Objective, Ordering, Paradigm};
use proptest::prelude::*;

const LAYERED: [Paradigm; 2] = [Paradigm::Bfs, Paradigm::Lbfs];

fn check_against_oracle(g: &Graph) {
    for p in LAYERED {
        let r = brute_leaf_range(g, p);
        for k in 1..=g.n() {
            for obj in [Objective::Min, Objective::Max] {
                let d = solve(g, p, obj, k).unwrap();
                let expect = match obj {
                    Objective::Min => r.min <= k,
                    Objective::Max => r.max >= k,
                };
                assert_eq!(d.yes, expect, "{p} {obj} k={k} on {g:?}");
                if let Some(w) = d.witness {
                    assert!(validate_ordering(g, &w, p));
                    let leaves = ftree_from_ordering(g, &w).unwrap().leaf_count();
                    assert!(match obj {
                        Objective::Min => leaves <= k,
                        Objective::Max => leaves >= k,
                    });
                }
            }
        }
        assert_eq!(optimum(g, p, Objective::Min).unwrap(), r.min);
        assert_eq!(optimum(g, p, Objective::Max).unwrap(), r.max);
    }
}

#[test]
fn exact_on_small_graphs() {
    for g in exhaustive_pool(2, 6) {
        check_against_oracle(&g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn exact_on_random_graphs(g in common::graph(7, 8)) {
        check_against_oracle(&g);
    }
}

/// Every chain of accepted layer orderings assembles to a valid search.
fn chains_are_valid(g: &Graph, p: Paradigm, root: usize) {
    let layers = bfs_layers(g, root);
    let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![vec![root]]];
    for i in 1..layers.len() {
        let layer = layers.layer(i);
        let mut next = Vec::new();
        for chain in &chains {
            for tau in layer.iter().copied().permutations(layer.len()) {
                if layer_transition_valid(g, &layers, i, chain.last().unwrap(), &tau, p) {
                    let mut c = chain.clone();
                    c.push(tau);
                    next.push(c);
                }
            }
        }
        chains = next;
    }
    assert!(!chains.is_empty());
    for chain in chains {
        let sigma = Ordering::new(chain.concat()).unwrap();
        assert!(validate_ordering(g, &sigma, p), "{p} {:?} on {g:?}", sigma.seq());
    }
}

#[test]
fn markov_property() {
    for g in exhaustive_pool(2, 6) {
        for p in LAYERED {
            for r in 0..g.n() {
                chains_are_valid(&g, p, r);
            }
        }
    }
}

#[test]
fn layer_pruning_never_changes_the_answer() {
    for g in exhaustive_pool(2, 6) {
        for p in LAYERED {
            let unpruned = optimum(&g, p, Objective::Min).unwrap();
            for k in 1..=g.n() {
                assert_eq!(solve(&g, p, Objective::Min, k).unwrap().yes, unpruned <= k);
            }
        }
    }
}
