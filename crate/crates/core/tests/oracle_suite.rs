mod common;

use leafsearch::gadgets::{gen_family, Family};
use leafsearch::oracle::{
    brute_leaf_range, brute_longest_zsequence, brute_min_cds, brute_min_zstar, brute_spanning_leaf_range,
    find_internal_between, is_weakly_chordal, zstar_forcing_sequence,
};
use leafsearch::{ftree_from_ordering, validate_ordering, Graph, Paradigm};

fn pool() -> Vec<Graph> {
    common::mixed_pool(2, 6, 25, 8, 0x0a11)
}

#[test]
fn witnesses_realise_the_range() {
    for g in pool() {
        for p in Paradigm::ALL {
            let r = brute_leaf_range(&g, p);
            assert!(r.min <= r.max);
            for (w, count) in [(&r.min_witness, r.min), (&r.max_witness, r.max)] {
                assert!(validate_ordering(&g, w, p));
                assert_eq!(ftree_from_ordering(&g, w).unwrap().leaf_count(), count);
            }
        }
    }
}

#[test]
fn zstar_and_zsequence_equivalence() {
    for g in pool() {
        let gs_min = brute_leaf_range(&g, Paradigm::Gs).min;
        let (set, rules) = brute_min_zstar(&g);
        assert!(rules.is_complete(&g));
        assert_eq!(gs_min, set.len(), "{g:?}");
        assert_eq!(gs_min, g.n() - brute_longest_zsequence(&g).len(), "{g:?}");
    }
}

#[test]
fn cds_and_spanning_tree_equivalence() {
    for g in pool() {
        let gs = brute_leaf_range(&g, Paradigm::Gs);
        let st = brute_spanning_leaf_range(&g);
        assert_eq!(gs.max, st.max, "{g:?}");
        assert_eq!(gs.max, g.n() - brute_min_cds(&g).len(), "{g:?}");
        for p in Paradigm::ALL {
            let r = brute_leaf_range(&g, p);
            assert!(st.min <= r.min && r.max <= st.max);
        }
    }
}

#[test]
fn few_internal_vertices_iff_small_cds() {
    for g in pool() {
        let cds = brute_min_cds(&g).len();
        for k in 1..=2 {
            for p in Paradigm::ALL {
                let found = find_internal_between(&g, p, 1, k);
                assert_eq!(found.is_some(), cds <= k, "{p} k={k} on {g:?}");
                if let Some(sigma) = found {
                    assert!(validate_ordering(&g, &sigma, p));
                    assert!(ftree_from_ordering(&g, &sigma).unwrap().internal_count() <= k);
                }
            }
        }
    }
}

#[test]
fn spec_oracle_examples() {
    let star = gen_family(Family::Star(3)).unwrap();
    let r = brute_leaf_range(&star, Paradigm::Gs);
    assert_eq!((r.min, r.max), (2, 3));
    assert_eq!(brute_min_cds(&star), vec![0]);
    assert_eq!(brute_min_zstar(&star).0.len(), 2);

    let c4 = gen_family(Family::Cycle(4)).unwrap();
    let r = brute_leaf_range(&c4, Paradigm::Bfs);
    assert_eq!((r.min, r.max), (2, 2));
    assert_eq!(brute_min_cds(&c4).len(), 2);
    assert_eq!(brute_longest_zsequence(&c4).len(), 2);
    assert!(is_weakly_chordal(&c4));

    let p5 = gen_family(Family::Path(5)).unwrap();
    assert_eq!(brute_min_cds(&p5), vec![1, 2, 3]);
    assert_eq!(brute_min_zstar(&p5).0.len(), 1);
    let p4 = gen_family(Family::Path(4)).unwrap();
    assert_eq!(brute_longest_zsequence(&p4).len(), 3);

    let k4 = gen_family(Family::Complete(4)).unwrap();
    assert_eq!(brute_min_zstar(&k4).0.len(), 3);
    assert_eq!(brute_longest_zsequence(&gen_family(Family::Complete(5)).unwrap()).len(), 1);
    let k3 = gen_family(Family::Complete(3)).unwrap();
    let st = brute_spanning_leaf_range(&k3);
    assert_eq!((st.min, st.max), (1, 2));

    let pot = gen_family(Family::PathOfTriangles(2)).unwrap();
    assert!(brute_leaf_range(&pot, Paradigm::Bfs).min >= 3);
    assert_eq!(brute_spanning_leaf_range(&pot).min, 1);
    let sol = gen_family(Family::StarOfLadders(2)).unwrap();
    assert_eq!(brute_spanning_leaf_range(&sol).max, 4);

    assert!(!is_weakly_chordal(&gen_family(Family::Cycle(5)).unwrap()));
}

#[test]
fn forcing_replay_rejects_too_small_sets() {
    let k4 = gen_family(Family::Complete(4)).unwrap();
    assert!(zstar_forcing_sequence(&k4, &[0, 1]).is_none());
    assert!(zstar_forcing_sequence(&k4, &[0, 1, 2]).is_some());
}
