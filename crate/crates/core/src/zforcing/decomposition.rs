//! Tree decompositions: validation, elimination-order heuristics and an exact
//! subset dynamic program for small graphs.

use std::collections::BTreeSet;

use super::TdError;
use crate::graph::Graph;

/// Largest graph for which [`heuristic_td`] also tries the exact width.
pub const EXACT_IMPROVE_LIMIT: usize = 14;
/// Hard limit of the exact subset dynamic program.
pub const EXACT_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between bag indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        TreeDecomposition { bags, edges }
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks that the tree is a tree and the three decomposition axioms.
    pub fn validate(&self, g: &Graph) -> Result<(), TdError> {
        let nb = self.bags.len();
        let invalid = |msg: String| Err(TdError::InvalidDecomposition(msg));
        if nb == 0 {
            return invalid("no bags".into());
        }
        if self.edges.len() != nb - 1 {
            return invalid(format!("{} tree edges for {} bags", self.edges.len(), nb));
        }
        for &(a, b) in &self.edges {
            if a >= nb || b >= nb || a == b {
                return invalid(format!("bad tree edge {a}-{b}"));
            }
        }
        let adj = self.tree_adjacency();
        let mut seen = vec![false; nb];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return invalid("tree is disconnected".into());
        }
        let n = g.n();
        let mut holders = vec![Vec::new(); n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return invalid(format!("vertex {v} out of range"));
                }
                holders[v].push(i);
            }
        }
        for (v, h) in holders.iter().enumerate() {
            if h.is_empty() {
                return invalid(format!("vertex {v} is in no bag"));
            }
            // The bags holding v must induce a connected subtree.
            let inside: Vec<bool> = (0..nb).map(|i| self.bags[i].binary_search(&v).is_ok()).collect();
            let mut reach = vec![false; nb];
            let mut stack = vec![h[0]];
            reach[h[0]] = true;
            let mut count = 1;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if inside[y] && !reach[y] {
                        reach[y] = true;
                        count += 1;
                        stack.push(y);
                    }
                }
            }
            if count != h.len() {
                return invalid(format!("bags containing {v} are not connected"));
            }
        }
        for (u, v) in g.edges() {
            if !holders[u].iter().any(|&i| self.bags[i].binary_search(&v).is_ok()) {
                return invalid(format!("edge {u}-{v} is not covered"));
            }
        }
        Ok(())
    }
}

/// Decomposition induced by eliminating vertices in the given order.
pub fn td_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    for &v in order {
        let higher: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in higher.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &higher[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        parent[v] = higher.iter().copied().min_by_key(|&w| pos[w]);
        let mut bag = higher;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    // Bag i belongs to order[i].
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        match parent[v] {
            Some(p) => edges.push((i, pos[p])),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges)
}

fn greedy_order(g: &Graph, score: impl Fn(&[BTreeSet<usize>], usize) -> (usize, usize, usize)) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut alive: BTreeSet<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while !alive.is_empty() {
        let v = *alive.iter().min_by_key(|&&v| score(&adj, v)).unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        alive.remove(&v);
        order.push(v);
    }
    order
}

fn fill_in(adj: &[BTreeSet<usize>], v: usize) -> usize {
    let nb: Vec<usize> = adj[v].iter().copied().collect();
    let mut fill = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !adj[a].contains(&b) {
                fill += 1;
            }
        }
    }
    fill
}

/// Min-fill elimination (ties by degree, then smallest id).
pub fn min_fill_td(g: &Graph) -> TreeDecomposition {
    let order = greedy_order(g, |adj, v| (fill_in(adj, v), adj[v].len(), v));
    td_from_elimination(g, &order)
}

/// Min-degree elimination with ties going to the largest id.
pub fn min_degree_td(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    let order = greedy_order(g, |adj, v| (adj[v].len(), n - v, 0));
    td_from_elimination(g, &order)
}

/// Min-fill decomposition, replaced by an exact one when that is narrower and
/// the graph is small.
pub fn heuristic_td(g: &Graph) -> TreeDecomposition {
    let td = min_fill_td(g);
    if g.n() <= EXACT_IMPROVE_LIMIT && td.width() > 1 {
        let exact = exact_treewidth_td(g);
        if exact.width() < td.width() {
            return exact;
        }
    }
    td
}

/// Optimal decomposition via the subset recurrence
/// `TW(S) = min_v max(TW(S - v), |Q(S - v, v)|)`, where `Q(S, v)` are the
/// vertices outside `S + v` reachable from `v` through `S`.
pub fn exact_treewidth_td(g: &Graph) -> TreeDecomposition {
    let n = g.n();
    assert!(n <= EXACT_LIMIT, "exact treewidth limited to {EXACT_LIMIT} vertices");
    if n == 1 {
        return TreeDecomposition::new(vec![vec![0]], Vec::new());
    }
    let adj: Vec<u32> = (0..n).map(|v| g.nmask(v) as u32).collect();
    let full = (1u32 << n) - 1;
    let q = |s: u32, v: usize| -> u32 {
        let mut reach = 1u32 << v;
        let mut frontier = reach;
        let mut out = 0u32;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let nb = adj[x] & !reach;
            reach |= nb;
            out |= nb & !s;
            frontier |= nb & s;
        }
        (out & !(1 << v)).count_ones()
    };
    let size = 1usize << n;
    let mut tw = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    tw[0] = 0;
    for s in 1..size as u32 {
        let mut best = u8::MAX;
        let mut arg = 0;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = s & !(1 << v);
            let val = tw[prev as usize].max(q(prev, v) as u8);
            if val < best {
                best = val;
                arg = v as u8;
            }
        }
        tw[s as usize] = best;
        choice[s as usize] = arg;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let v = choice[s as usize] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let td = td_from_elimination(g, &order);
    debug_assert_eq!(td.width(), tw[full as usize] as usize);
    td
}
