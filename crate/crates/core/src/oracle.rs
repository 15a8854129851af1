//! Exhaustive reference solvers. They are exponential by design and serve as
//! ground truth for the fast solvers at desk scale.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;

use crate::bits::ones;
use crate::graph::{mask_connected, Graph, Ordering, Paradigm};
use crate::gs::{RuleSequence, ZSequence};
use crate::search::{explore, SearchState, Visit};

/// Minimum and maximum leaf counts over all orderings of a paradigm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafRange {
    pub min: usize,
    pub max: usize,
    pub min_witness: Ordering,
    pub max_witness: Ordering,
}

fn settle(state: &SearchState<'_>) -> Ordering {
    let mut s = state.clone();
    let rank: Vec<usize> = (0..s.graph().n()).collect();
    s.finish_by_rank(&rank);
    s.to_ordering()
}

/// Exact leaf range of the first-in trees of `paradigm` on `g`.
///
/// Prefixes after which every unvisited vertex already has a visited
/// neighbour are not expanded further: all remaining vertices are leaves.
pub fn brute_leaf_range(g: &Graph, paradigm: Paradigm) -> LeafRange {
    let n = g.n();
    if n == 1 {
        let w = Ordering::identity(1);
        return LeafRange {
            min: 0,
            max: 0,
            min_witness: w.clone(),
            max_witness: w,
        };
    }
    let mut best_min: Option<(usize, Ordering)> = None;
    let mut best_max: Option<(usize, Ordering)> = None;
    let mut state = SearchState::new(g, paradigm);
    let _ = explore(&mut state, &mut |s| {
        if !(s.is_settled() || s.is_complete()) {
            return Visit::Descend;
        }
        let leaves = n - s.internal();
        if best_min.as_ref().is_none_or(|(m, _)| leaves < *m) {
            best_min = Some((leaves, settle(s)));
        }
        if best_max.as_ref().is_none_or(|(m, _)| leaves > *m) {
            best_max = Some((leaves, settle(s)));
        }
        Visit::Skip
    });
    let (min, min_witness) = best_min.expect("connected graph has an ordering");
    let (max, max_witness) = best_max.expect("connected graph has an ordering");
    LeafRange {
        min,
        max,
        min_witness,
        max_witness,
    }
}

/// Searches for an ordering whose first-in tree has between `lo` and `hi`
/// internal vertices (inclusive).
pub fn find_internal_between(
    g: &Graph,
    paradigm: Paradigm,
    lo: usize,
    hi: usize,
) -> Option<Ordering> {
    let n = g.n();
    let mut found = None;
    let mut state = SearchState::new(g, paradigm);
    let _ = explore(&mut state, &mut |s| {
        if s.len() == 0 {
            return Visit::Descend;
        }
        if s.internal() > hi {
            return Visit::Skip;
        }
        if s.is_settled() || s.is_complete() {
            if s.internal() >= lo {
                found = Some(settle(s));
                return Visit::Stop;
            }
            return Visit::Skip;
        }
        // An unvisited vertex can still become internal only if it has a
        // neighbour nobody has discovered yet.
        let potential = (0..n)
            .filter(|&w| {
                !s.is_visited(w)
                    && g
                        .neighbors(w)
                        .iter()
                        .any(|&x| !s.is_visited(x) && s.first(x).is_none())
            })
            .count();
        if s.internal() + potential < lo {
            Visit::Skip
        } else {
            Visit::Descend
        }
    });
    found
}

/// A minimum connected dominating set, by subset enumeration in increasing size.
pub fn brute_min_cds(g: &Graph) -> Vec<usize> {
    let all = g.all_mask();
    for size in 1..=g.n() {
        for set in (0..g.n()).combinations(size) {
            let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
            let dominated = set.iter().fold(0u64, |m, &v| m | g.cmask(v));
            if dominated == all && mask_connected(g, mask) {
                return set;
            }
        }
    }
    unreachable!("the whole vertex set is a connected dominating set")
}

/// A spanning tree given by its edge list and a chosen root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedSpanningTree {
    pub root: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningLeafRange {
    pub min: usize,
    pub max: usize,
    pub min_tree: RootedSpanningTree,
    pub max_tree: RootedSpanningTree,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        x = parent[x];
    }
    x
}

fn spans(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut comps = n;
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps == 1
}

/// Leaf range over all spanning trees and all root choices; the root is not
/// counted as a leaf.
pub fn brute_spanning_leaf_range(g: &Graph) -> SpanningLeafRange {
    let n = g.n();
    if n == 1 {
        let t = RootedSpanningTree {
            root: 0,
            edges: Vec::new(),
        };
        return SpanningLeafRange {
            min: 0,
            max: 0,
            min_tree: t.clone(),
            max_tree: t,
        };
    }
    let edges = g.edges();
    let mut best: Option<SpanningLeafRange> = None;
    let mut chosen = Vec::with_capacity(n - 1);
    let mut parent: Vec<usize> = (0..n).collect();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        n: usize,
        edges: &[(usize, usize)],
        chosen: &mut Vec<usize>,
        parent: &mut Vec<usize>,
        best: &mut Option<SpanningLeafRange>,
    ) {
        if chosen.len() == n - 1 {
            record(n, edges, chosen, best);
            return;
        }
        if i == edges.len() || chosen.len() + (edges.len() - i) < n - 1 {
            return;
        }
        let (u, v) = edges[i];
        let (a, b) = (find(parent, u), find(parent, v));
        if a != b {
            parent[a] = b;
            chosen.push(i);
            rec(i + 1, n, edges, chosen, parent, best);
            chosen.pop();
            parent[a] = a;
        }
        let rest = chosen
            .iter()
            .map(|&j| edges[j])
            .chain(edges[i + 1..].iter().copied());
        if spans(n, rest) {
            rec(i + 1, n, edges, chosen, parent, best);
        }
    }

    fn record(
        n: usize,
        edges: &[(usize, usize)],
        chosen: &[usize],
        best: &mut Option<SpanningLeafRange>,
    ) {
        let mut deg = vec![0usize; n];
        for &j in chosen {
            deg[edges[j].0] += 1;
            deg[edges[j].1] += 1;
        }
        let ones_count = deg.iter().filter(|&&d| d == 1).count();
        let leaf_root = (0..n).find(|&v| deg[v] == 1).expect("trees have leaves");
        let (max, max_root) = match (0..n).find(|&v| deg[v] >= 2) {
            Some(r) => (ones_count, r),
            None => (ones_count - 1, leaf_root),
        };
        let min = ones_count - 1;
        let tree_edges: Vec<_> = chosen.iter().map(|&j| edges[j]).collect();
        match best {
            None => {
                *best = Some(SpanningLeafRange {
                    min,
                    max,
                    min_tree: RootedSpanningTree {
                        root: leaf_root,
                        edges: tree_edges.clone(),
                    },
                    max_tree: RootedSpanningTree {
                        root: max_root,
                        edges: tree_edges,
                    },
                })
            }
            Some(b) => {
                if min < b.min {
                    b.min = min;
                    b.min_tree = RootedSpanningTree {
                        root: leaf_root,
                        edges: tree_edges.clone(),
                    };
                }
                if max > b.max {
                    b.max = max;
                    b.max_tree = RootedSpanningTree {
                        root: max_root,
                        edges: tree_edges,
                    };
                }
            }
        }
    }

    rec(0, n, &edges, &mut chosen, &mut parent, &mut best);
    best.expect("connected graph has a spanning tree")
}

/// A longest generic Z-sequence, by memoised search over the set of chosen
/// vertices (feasibility of extensions depends only on that set).
pub fn brute_longest_zsequence(g: &Graph) -> ZSequence {
    let mut memo: HashMap<u64, usize> = HashMap::new();

    fn candidates(g: &Graph, chosen: u64) -> Vec<usize> {
        let closed = ones(chosen).fold(0u64, |m, v| m | g.cmask(v));
        (0..g.n())
            .filter(|&v| {
                chosen >> v & 1 == 0
                    && (chosen == 0 || g.nmask(v) & chosen != 0)
                    && g.nmask(v) & !closed != 0
            })
            .collect()
    }

    fn extend(g: &Graph, chosen: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if let Some(&r) = memo.get(&chosen) {
            return r;
        }
        let best = candidates(g, chosen)
            .into_iter()
            .map(|v| 1 + extend(g, chosen | 1 << v, memo))
            .max()
            .unwrap_or(0);
        memo.insert(chosen, best);
        best
    }

    let total = extend(g, 0, &mut memo);
    let mut seq = Vec::with_capacity(total);
    let mut chosen = 0u64;
    while seq.len() < total {
        let need = total - seq.len();
        let v = candidates(g, chosen)
            .into_iter()
            .find(|&v| 1 + extend(g, chosen | 1 << v, &mut memo) == need)
            .expect("memo is consistent");
        seq.push(v);
        chosen |= 1 << v;
    }
    ZSequence::new(g, seq).expect("search only builds valid sequences")
}

fn words(n: usize) -> usize {
    n.div_ceil(64)
}

fn get(s: &[u64], v: usize) -> bool {
    s[v / 64] >> (v % 64) & 1 == 1
}

fn set(s: &mut [u64], v: usize) {
    s[v / 64] |= 1 << (v % 64);
}

/// Rules applicable in the blue state `blue`, one per forced vertex (the
/// forcing vertex is the smallest id that can do it).
fn applicable_rules(g: &Graph, blue: &[u64], white_count: usize) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out: Vec<(usize, usize)> = Vec::new();
    let mut taken = vec![false; n];
    for u in 0..n {
        if !get(blue, u) {
            continue;
        }
        let mut white = g.neighbors(u).iter().filter(|&&x| !get(blue, x));
        let (Some(&w), None) = (white.next(), white.next()) else {
            continue;
        };
        if taken[w] {
            continue;
        }
        let ok = white_count == 1 || g.neighbors(w).iter().any(|&x| !get(blue, x));
        if ok {
            taken[w] = true;
            out.push((u, w));
        }
    }
    out
}

/// Searches for an order of Z*-rule applications that colours every vertex
/// blue from `initial`. The rule is not assumed to be confluent, so all
/// application orders are explored, with failed blue sets memoised.
pub fn zstar_forcing_sequence(g: &Graph, initial: &[usize]) -> Option<RuleSequence> {
    let n = g.n();
    let mut blue = vec![0u64; words(n)];
    for &v in initial {
        set(&mut blue, v);
    }
    let white = n - ones_count(&blue);
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut rules = Vec::new();

    fn rec(
        g: &Graph,
        blue: &mut Vec<u64>,
        white: usize,
        rules: &mut Vec<(usize, usize)>,
        failed: &mut HashSet<Vec<u64>>,
    ) -> bool {
        if white == 0 {
            return true;
        }
        if failed.contains(blue) {
            return false;
        }
        for (u, w) in applicable_rules(g, blue, white) {
            set(blue, w);
            rules.push((u, w));
            if rec(g, blue, white - 1, rules, failed) {
                return true;
            }
            rules.pop();
            blue[w / 64] &= !(1 << (w % 64));
        }
        failed.insert(blue.clone());
        false
    }

    rec(g, &mut blue, white, &mut rules, &mut failed).then(|| RuleSequence {
        initial: initial.to_vec(),
        rules,
    })
}

fn ones_count(s: &[u64]) -> usize {
    s.iter().map(|w| w.count_ones() as usize).sum()
}

/// A minimum Z*-forcing set with a rule sequence proving it.
pub fn brute_min_zstar(g: &Graph) -> (Vec<usize>, RuleSequence) {
    for size in 1..=g.n() {
        for set in (0..g.n()).combinations(size) {
            if let Some(rules) = zstar_forcing_sequence(g, &set) {
                return (set, rules);
            }
        }
    }
    unreachable!("the full vertex set is forcing")
}

/// No induced cycle of length at least five in `g` or its complement.
pub fn is_weakly_chordal(g: &Graph) -> bool {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.nmask(v)).collect();
    let all = g.all_mask();
    let co: Vec<u64> = (0..n).map(|v| !adj[v] & all & !(1u64 << v)).collect();
    !has_long_hole(&adj) && !has_long_hole(&co)
}

/// Whether the graph given by neighbourhood masks has a chordless cycle of
/// length at least five. Cycles are found from their smallest vertex by
/// growing induced paths.
fn has_long_hole(adj: &[u64]) -> bool {
    fn grow(adj: &[u64], start: usize, path: &mut Vec<usize>, inner: u64) -> bool {
        let last = *path.last().unwrap();
        let used = path.iter().fold(0u64, |m, &v| m | 1 << v);
        for x in ones(adj[last] & !used) {
            if x < start || adj[x] & inner != 0 {
                continue;
            }
            if adj[x] >> start & 1 == 1 {
                if path.len() + 1 >= 5 {
                    return true;
                }
                continue;
            }
            // `inner` holds the path vertices other than the start and the
            // endpoint; later vertices must avoid them.
            path.push(x);
            let hit = grow(adj, start, path, inner | 1 << last);
            path.pop();
            if hit {
                return true;
            }
        }
        false
    }
    (0..adj.len()).any(|s| {
        ones(adj[s]).filter(|&x| x > s).any(|x| {
            let mut path = vec![s, x];
            grow(adj, s, &mut path, 0)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{gen_family, Family};

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        gen_family(Family::Complete(n)).unwrap()
    }

    fn star3() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3)])
    }

    fn c4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
    }

    #[test]
    fn leaf_ranges() {
        let r = brute_leaf_range(&star3(), Paradigm::Gs);
        assert_eq!((r.min, r.max), (2, 3));
        let r = brute_leaf_range(&c4(), Paradigm::Bfs);
        assert_eq!((r.min, r.max), (2, 2));
        let pot = gen_family(Family::PathOfTriangles(2)).unwrap();
        let r = brute_leaf_range(&pot, Paradigm::Bfs);
        assert!(r.min >= 3);
    }

    #[test]
    fn cds_examples() {
        assert_eq!(brute_min_cds(&star3()), vec![0]);
        let p5 = gen_family(Family::Path(5)).unwrap();
        assert_eq!(brute_min_cds(&p5), vec![1, 2, 3]);
        let s = brute_min_cds(&c4());
        assert_eq!(s.len(), 2);
        assert!(c4().has_edge(s[0], s[1]));
    }

    #[test]
    fn spanning_examples() {
        let pot = gen_family(Family::PathOfTriangles(2)).unwrap();
        assert_eq!(brute_spanning_leaf_range(&pot).min, 1);
        let sol = gen_family(Family::StarOfLadders(2)).unwrap();
        assert_eq!(brute_spanning_leaf_range(&sol).max, 4);
        let r = brute_spanning_leaf_range(&complete(3));
        assert_eq!((r.min, r.max), (1, 2));
    }

    #[test]
    fn zsequence_examples() {
        assert_eq!(brute_longest_zsequence(&complete(5)).len(), 1);
        let p4 = gen_family(Family::Path(4)).unwrap();
        assert_eq!(brute_longest_zsequence(&p4).len(), 3);
        assert_eq!(brute_longest_zsequence(&c4()).len(), 2);
    }

    #[test]
    fn zstar_examples() {
        for n in 2..=6 {
            let p = gen_family(Family::Path(n)).unwrap();
            let (s, rules) = brute_min_zstar(&p);
            assert_eq!(s.len(), 1);
            assert!(s[0] == 0 || s[0] == n - 1);
            assert!(rules.is_complete(&p));
        }
        assert_eq!(brute_min_zstar(&complete(4)).0.len(), 3);
        assert_eq!(brute_min_zstar(&star3()).0.len(), 2);
    }

    #[test]
    fn weakly_chordal_examples() {
        assert!(!is_weakly_chordal(&gen_family(Family::Cycle(5)).unwrap()));
        assert!(is_weakly_chordal(&c4()));
        assert!(!is_weakly_chordal(&gen_family(Family::Cycle(6)).unwrap()));
        // complement of C6 contains no long hole but C6 itself does; P6's
        // complement has none either.
        assert!(is_weakly_chordal(&gen_family(Family::Path(6)).unwrap()));
    }

    #[test]
    fn exact_internal_search() {
        let p = gen_family(Family::Path(5)).unwrap();
        assert!(find_internal_between(&p, Paradigm::Bfs, 4, 4).is_some());
        assert!(find_internal_between(&p, Paradigm::Bfs, 5, 5).is_none());
        assert!(find_internal_between(&p, Paradigm::Gs, 2, 2).is_none());
        assert!(find_internal_between(&p, Paradigm::Gs, 3, 3).is_some());
    }
}
