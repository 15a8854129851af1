//! Test graph pools: every connected graph up to isomorphism for small `n`,
//! and seeded random connected graphs.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Largest `n` for [`connected_graphs`].
pub const EXHAUSTIVE_LIMIT: usize = 7;

/// Upper-triangle adjacency code of `adj` relabelled by `order`
/// (`order[p]` is the vertex placed at position `p`).
fn code_of(adj: &[u16], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for p in 1..order.len() {
        for q in 0..p {
            code = code << 1 | (adj[order[p]] >> order[q] & 1) as u64;
        }
    }
    code
}

/// Largest code over the relabellings that respect a degree-based vertex
/// partition; equal for isomorphic graphs.
fn canonical(adj: &[u16]) -> u64 {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
    let inv: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut verts: Vec<usize> = (0..n).collect();
    verts.sort_by(|&a, &b| inv[b].cmp(&inv[a]));
    // cell[p] is the invariant class allowed at position p.
    let cells: Vec<&(u32, Vec<u32>)> = verts.iter().map(|&v| &inv[v]).collect();

    fn rec(
        adj: &[u16],
        inv: &[(u32, Vec<u32>)],
        cells: &[&(u32, Vec<u32>)],
        order: &mut Vec<usize>,
        used: u16,
        best: &mut u64,
    ) {
        let n = adj.len();
        if order.len() == n {
            *best = (*best).max(code_of(adj, order));
            return;
        }
        let p = order.len();
        for v in 0..n {
            if used >> v & 1 == 0 && &inv[v] == cells[p] {
                order.push(v);
                rec(adj, inv, cells, order, used | 1 << v, best);
                order.pop();
            }
        }
    }
    let mut best = 0;
    rec(adj, &inv, &cells, &mut Vec::with_capacity(n), 0, &mut best);
    best
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = n * (n - 1) / 2;
    for p in 1..n {
        for q in 0..p {
            bit -= 1;
            if code >> bit & 1 == 1 {
                edges.push((q, p));
            }
        }
    }
    Graph::new(n, &edges).expect("pool graphs are connected")
}

/// Every connected graph on `n` vertices, one per isomorphism class, in a
/// deterministic order. Built by attaching a new vertex to every non-empty
/// neighbour set of each smaller graph, since every connected graph has a
/// vertex whose removal keeps it connected.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=EXHAUSTIVE_LIMIT).contains(&n), "exhaustive generation is limited to 1..={EXHAUSTIVE_LIMIT}");
    let mut level: Vec<Vec<u16>> = vec![vec![0]];
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for adj in &level {
            for subset in 1u16..1 << (size - 1) {
                let mut a = adj.clone();
                for (w, row) in a.iter_mut().enumerate() {
                    if subset >> w & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                a.push(subset);
                if seen.insert(canonical(&a)) {
                    next.push(a);
                }
            }
        }
        level = next;
    }
    let mut codes: Vec<u64> = level.iter().map(|a| canonical(a)).collect();
    codes.sort_unstable();
    codes.into_iter().map(|c| decode(n, c)).collect()
}

/// All connected graphs with `lo..=hi` vertices.
pub fn exhaustive_pool(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi).flat_map(connected_graphs).collect()
}

/// A connected graph drawn from `G(n, p)` by rejection.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if let Ok(g) = Graph::new(n, &edges) {
            return g;
        }
    }
}

/// `count` random connected graphs with `n` drawn from `lo..=hi` and edge
/// density from `[0.25, 0.75]`, reproducible from `seed`.
pub fn random_pool(lo: usize, hi: usize, count: usize, seed: u64) -> Vec<Graph> {
    random_pool_density(lo, hi, count, seed, 0.25, 0.75)
}

/// Like [`random_pool`] with edge density drawn from `[p_lo, p_hi)`.
pub fn random_pool_density(lo: usize, hi: usize, count: usize, seed: u64, p_lo: f64, p_hi: f64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(p_lo..p_hi);
            random_connected(&mut rng, n, p)
        })
        .collect()
}
