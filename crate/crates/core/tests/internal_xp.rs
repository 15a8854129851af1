mod common;

use leafsearch::internal::{
    bfs_internal_xp, build_wcs_circuit, counterexample_graph, counterexample_reference, eval_wcs,
    gs_max_internal_xp, gs_min_internal_xp, plus_from_prefix, COUNTEREXAMPLE_S,
};
use leafsearch::oracle::{brute_leaf_range, brute_min_cds};
use leafsearch::{ftree_from_ordering, validate_ordering, Graph, Objective, Paradigm};

fn internal_of(g: &Graph, sigma: &leafsearch::Ordering) -> usize {
    ftree_from_ordering(g, sigma).unwrap().internal_count()
}

#[test]
fn gs_solvers_agree_with_oracle_and_circuit() {
    for g in common::mixed_pool(2, 6, 30, 8, 0x1e55) {
        let n = g.n();
        let range = brute_leaf_range(&g, Paradigm::Gs);
        let cds = brute_min_cds(&g).len();
        for k in 1..=4.min(n) {
            let max = gs_max_internal_xp(&g, k);
            let circuit = eval_wcs(&build_wcs_circuit(&g, k)).is_some();
            let expect = n - range.min >= k;
            assert_eq!(max.yes, expect, "max k={k} on {:?}", g.edges());
            assert_eq!(circuit, expect, "circuit k={k} on {:?}", g.edges());
            if let Some(sigma) = &max.witness {
                assert!(validate_ordering(&g, sigma, Paradigm::Gs));
                assert!(internal_of(&g, sigma) >= k);
            }
            let min = gs_min_internal_xp(&g, k);
            assert_eq!(min.yes, n - range.max <= k, "min k={k} on {:?}", g.edges());
            assert_eq!(min.yes, cds <= k);
            if let Some(sigma) = &min.witness {
                assert!(validate_ordering(&g, sigma, Paradigm::Gs));
                assert!(internal_of(&g, sigma) <= k);
            }
        }
    }
}

#[test]
fn bfs_solver_agrees_with_oracle() {
    for g in common::mixed_pool(2, 6, 20, 7, 0xbf5) {
        let n = g.n();
        let range = brute_leaf_range(&g, Paradigm::Bfs);
        for k in 1..=3.min(n) {
            for (obj, expect) in [(Objective::Min, n - range.max <= k), (Objective::Max, n - range.min >= k)] {
                let d = bfs_internal_xp(&g, k, obj);
                assert_eq!(d.yes, expect, "{obj} k={k} on {:?}", g.edges());
                if let Some(sigma) = &d.witness {
                    assert!(validate_ordering(&g, sigma, Paradigm::Bfs));
                }
            }
        }
    }
}

#[test]
fn circuit_witness_has_target_weight() {
    for g in common::mixed_pool(3, 5, 0, 0, 0) {
        for k in 1..=3 {
            let c = build_wcs_circuit(&g, k);
            if let Some(chosen) = eval_wcs(&c) {
                assert_eq!(chosen.len(), c.target_weight());
                assert!(c.satisfied_by(&chosen));
            }
        }
    }
}

#[test]
fn tie_break_argument_fails_for_lbfs() {
    let g = counterexample_graph();
    let reference = counterexample_reference();
    let tree = ftree_from_ordering(&g, &reference).unwrap();
    let bfs = plus_from_prefix(&g, Paradigm::Bfs, &COUNTEREXAMPLE_S);
    let lbfs = plus_from_prefix(&g, Paradigm::Lbfs, &COUNTEREXAMPLE_S);
    assert!(validate_ordering(&g, &bfs, Paradigm::Bfs));
    assert!(validate_ordering(&g, &lbfs, Paradigm::Lbfs));
    let bfs_tree = ftree_from_ordering(&g, &bfs).unwrap();
    let lbfs_tree = ftree_from_ordering(&g, &lbfs).unwrap();
    let sorted = |t: &leafsearch::FTree, v: usize| {
        let mut c = t.children(v).to_vec();
        c.sort_unstable();
        c
    };
    for v in COUNTEREXAMPLE_S {
        assert_eq!(sorted(&bfs_tree, v), sorted(&tree, v), "BFS children of {v}");
    }
    assert!(COUNTEREXAMPLE_S.iter().any(|&v| sorted(&lbfs_tree, v) != sorted(&tree, v)));
    assert!(lbfs_tree.internal_count() < tree.internal_count());
    for v in [4, 5] {
        assert_ne!(sorted(&lbfs_tree, v), sorted(&tree, v), "LBFS children of {v}");
    }
}
