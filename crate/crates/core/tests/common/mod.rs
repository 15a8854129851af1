#![allow(dead_code)]

use leafsearch::pool::{exhaustive_pool, random_pool};
use leafsearch::Graph;
use proptest::prelude::*;

/// A connected graph with `lo..=hi` vertices, drawn through the seeded pool.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, any::<u64>()).prop_map(|(n, seed)| random_pool(n, n, 1, seed).pop().unwrap())
}

/// A graph together with a permutation of its vertices.
pub fn graph_and_perm(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Every connected graph on `lo..=hi` vertices plus `extra` seeded random
/// graphs on `extra_n` vertices.
pub fn mixed_pool(lo: usize, hi: usize, extra: usize, extra_n: usize, seed: u64) -> Vec<Graph> {
    let mut pool = exhaustive_pool(lo, hi);
    pool.extend(random_pool(extra_n, extra_n, extra, seed));
    pool
}

use leafsearch::gadgets::{Cnf, GrundyInstance, SetCoverInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Set-cover instances over `universe` elements with `1..=max_sets` sets,
/// every element in some but not all sets.
pub fn set_cover_instances(universe: usize, max_sets: usize) -> Vec<SetCoverInstance> {
    let subsets: Vec<Vec<usize>> = (1u32..1 << universe)
        .map(|m| (0..universe).filter(|e| m >> e & 1 == 1).collect())
        .collect();
    let mut out = Vec::new();
    fn rec(subsets: &[Vec<usize>], from: usize, cur: &mut Vec<usize>, max: usize, u: usize, out: &mut Vec<SetCoverInstance>) {
        if !cur.is_empty() {
            let ok = (0..u).all(|e| {
                let c = cur.iter().filter(|&&i| subsets[i].contains(&e)).count();
                c > 0 && c < cur.len()
            });
            if ok {
                out.push(SetCoverInstance {
                    universe: u,
                    sets: cur.iter().map(|&i| subsets[i].clone()).collect(),
                });
            }
        }
        if cur.len() == max {
            return;
        }
        for i in from..subsets.len() {
            cur.push(i);
            rec(subsets, i, cur, max, u, out);
            cur.pop();
        }
    }
    rec(&subsets, 0, &mut Vec::new(), max_sets, universe, &mut out);
    out
}

/// Smallest number of sets covering the universe.
pub fn min_cover(inst: &SetCoverInstance) -> usize {
    let p = inst.sets.len();
    (1u32..1 << p)
        .filter(|m| {
            (0..inst.universe).all(|e| (0..p).any(|i| m >> i & 1 == 1 && inst.sets[i].contains(&e)))
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap()
}

/// Every bipartite graph on `x` and `y` vertices without isolated vertices.
pub fn grundy_instances(x: usize, y: usize) -> Vec<GrundyInstance> {
    let pairs: Vec<(usize, usize)> = (0..x).flat_map(|a| (0..y).map(move |b| (a, b))).collect();
    (0u32..1 << pairs.len())
        .map(|m| GrundyInstance {
            x,
            y,
            edges: (0..pairs.len()).filter(|i| m >> i & 1 == 1).map(|i| pairs[i]).collect(),
        })
        .filter(|g| (0..x).all(|a| g.edges.iter().any(|e| e.0 == a)) && (0..y).all(|b| g.edges.iter().any(|e| e.1 == b)))
        .collect()
}

/// `count` random Grundy instances with `1..=max` vertices per side.
pub fn random_grundy(count: usize, max: usize, seed: u64) -> Vec<GrundyInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let (x, y) = (rng.gen_range(1..=max), rng.gen_range(1..=max));
        let edges: Vec<(usize, usize)> = (0..x)
            .flat_map(|a| (0..y).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let inst = GrundyInstance { x, y, edges };
        if (0..x).all(|a| inst.edges.iter().any(|e| e.0 == a)) && (0..y).all(|b| inst.edges.iter().any(|e| e.1 == b)) {
            out.push(inst);
        }
    }
    out
}

/// Formulas on three variables with one or two clauses, each clause using
/// all three variables.
pub fn small_cnfs() -> Vec<Cnf> {
    let clauses: Vec<Vec<i32>> = (0..8)
        .map(|s| (1..=3).map(|v| if s >> (v - 1) & 1 == 1 { -v } else { v }).collect())
        .collect();
    let mut out: Vec<Cnf> = clauses.iter().map(|c| Cnf { vars: 3, clauses: vec![c.clone()] }).collect();
    for i in 0..8 {
        for j in i..8 {
            out.push(Cnf { vars: 3, clauses: vec![clauses[i].clone(), clauses[j].clone()] });
        }
    }
    out
}

/// All eight sign patterns on three variables.
pub fn unsat_cnf() -> Cnf {
    Cnf {
        vars: 3,
        clauses: (0..8)
            .map(|s| (1..=3).map(|v| if s >> (v - 1) & 1 == 1 { -v } else { v }).collect())
            .collect(),
    }
}

/// [`grundy_instances`] with one instance per class under relabelling of
/// `X` and of `Y`.
pub fn grundy_instances_upto_iso(x: usize, y: usize) -> Vec<GrundyInstance> {
    use itertools::Itertools;
    let px: Vec<Vec<usize>> = (0..x).permutations(x).collect();
    let py: Vec<Vec<usize>> = (0..y).permutations(y).collect();
    let mut seen = std::collections::HashSet::new();
    grundy_instances(x, y)
        .into_iter()
        .filter(|inst| {
            let code = px
                .iter()
                .flat_map(|a| py.iter().map(move |b| (a, b)))
                .map(|(a, b)| inst.edges.iter().fold(0u32, |m, &(i, j)| m | 1 << (a[i] * y + b[j])))
                .min()
                .unwrap();
            seen.insert(code)
        })
        .collect()
}
