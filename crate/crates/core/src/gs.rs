//! Generic Search solvers. Maximum leaves reduce to a minimum connected
//! dominating set; minimum leaves reduce to a minimum Z*-forcing set, which
//! in turn corresponds to a longest generic Z-sequence.

use thiserror::Error;

use crate::bits::ones;
use crate::graph::{ftree_from_ordering, validate_ordering, Graph, Ordering, Paradigm};
use crate::oracle::zstar_forcing_sequence;
use crate::search::run_plus;
use crate::zforcing::{self, TdError, TreeDecomposition};
use crate::Decision;

/// Largest graph handled by the exact treewidth fallback in [`min_leaf_gs`].
pub const EXACT_TREEWIDTH_LIMIT: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GsError {
    #[error("ordering is not a GS ordering")]
    NotGsOrdering,
    #[error("invalid Z-sequence: {0}")]
    InvalidSequence(String),
    #[error("rule {index} ({from} -> {to}) is not applicable")]
    InvalidRule { index: usize, from: usize, to: usize },
    #[error("graph has {0} vertices; this solver handles at most 64")]
    TooLarge(usize),
    #[error("no tree decomposition of usable width; supply one with --td")]
    DecompositionUnavailable,
    #[error(transparent)]
    Decomposition(#[from] TdError),
}

/// A generic Z-sequence: a GS prefix in which every member has a neighbour
/// outside the closed neighbourhoods of its predecessors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZSequence {
    seq: Vec<usize>,
    fresh: Vec<usize>,
}

impl ZSequence {
    /// Validates `seq` and records the smallest fresh neighbour of each member.
    pub fn new(g: &Graph, seq: Vec<usize>) -> Result<Self, GsError> {
        let n = g.n();
        let mut closed = vec![false; n];
        let mut used = vec![false; n];
        let mut fresh = Vec::with_capacity(seq.len());
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || used[v] {
                return Err(GsError::InvalidSequence(format!("vertex {v} repeated or out of range")));
            }
            if i > 0 && !g.neighbors(v).iter().any(|&u| used[u]) {
                return Err(GsError::InvalidSequence(format!("{v} has no earlier neighbour")));
            }
            let f = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&w| !closed[w])
                .ok_or_else(|| GsError::InvalidSequence(format!("{v} has no fresh neighbour")))?;
            fresh.push(f);
            used[v] = true;
            closed[v] = true;
            for &w in g.neighbors(v) {
                closed[w] = true;
            }
        }
        Ok(ZSequence { seq, fresh })
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    /// For each member, a neighbour not dominated by the earlier members.
    pub fn fresh(&self) -> &[usize] {
        &self.fresh
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }
}

/// An initial blue set and the Z*-rules `(u, w)` (u forces w) applied in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSequence {
    pub initial: Vec<usize>,
    pub rules: Vec<(usize, usize)>,
}

impl RuleSequence {
    /// Replays the rules and returns the final blue vector.
    pub fn replay(&self, g: &Graph) -> Result<Vec<bool>, GsError> {
        let n = g.n();
        let mut blue = vec![false; n];
        for &v in &self.initial {
            blue[v] = true;
        }
        let mut white = blue.iter().filter(|&&b| !b).count();
        for (index, &(u, w)) in self.rules.iter().enumerate() {
            let bad = GsError::InvalidRule { index, from: u, to: w };
            if u >= n || w >= n || !blue[u] || blue[w] || !g.has_edge(u, w) {
                return Err(bad);
            }
            if g.neighbors(u).iter().any(|&x| x != w && !blue[x]) {
                return Err(bad);
            }
            if white != 1 && !g.neighbors(w).iter().any(|&x| !blue[x]) {
                return Err(bad);
            }
            blue[w] = true;
            white -= 1;
        }
        Ok(blue)
    }

    pub fn is_complete(&self, g: &Graph) -> bool {
        self.replay(g).is_ok_and(|b| b.iter().all(|&x| x))
    }
}

/// Bags of a path decomposition in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<usize>>,
}

impl PathDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Coverage of vertices and edges, and contiguity of each vertex's bags.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let n = g.n();
        let mut first = vec![usize::MAX; n];
        let mut last = vec![0; n];
        let mut count = vec![0; n];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return false;
                }
                first[v] = first[v].min(i);
                last[v] = i;
                count[v] += 1;
            }
        }
        if (0..n).any(|v| count[v] == 0 || last[v] - first[v] + 1 != count[v]) {
            return false;
        }
        g.edges().iter().all(|&(u, v)| {
            self.bags
                .iter()
                .any(|b| b.contains(&u) && b.contains(&v))
        })
    }
}

/// Exact minimum connected dominating set by branch and bound, or `None`
/// when every connected dominating set is larger than `limit`.
///
/// The set is grown from its smallest vertex `s`, branching on whether a
/// frontier vertex joins. Branches die when some undominated vertex has its
/// whole closed neighbourhood excluded or when the part still reachable from
/// the set cannot dominate the graph.
pub fn min_cds(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>, GsError> {
    let n = g.n();
    if n > 64 {
        return Err(GsError::TooLarge(n));
    }
    if n == 1 {
        return Ok((limit >= 1).then(|| vec![0]));
    }
    let all = g.all_mask();
    let maxdeg = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut best: Option<u64> = None;
    let mut bound = limit;

    struct Ctx<'a> {
        g: &'a Graph,
        all: u64,
        maxdeg: usize,
    }

    fn rec(ctx: &Ctx<'_>, set: u64, excluded: u64, best: &mut Option<u64>, bound: &mut usize) {
        let g = ctx.g;
        let size = set.count_ones() as usize;
        let dominated = ones(set).fold(0u64, |m, v| m | g.cmask(v));
        let undominated = ctx.all & !dominated;
        if undominated == 0 {
            if size <= *bound {
                *best = Some(set);
                *bound = size - 1;
            }
            return;
        }
        let lb = (undominated.count_ones() as usize).div_ceil(ctx.maxdeg + 1);
        if size + lb > *bound {
            return;
        }
        if ones(undominated).any(|u| g.cmask(u) & !excluded == 0) {
            return;
        }
        let open = ctx.all & !excluded;
        let mut reach = set;
        loop {
            let next = ones(reach).fold(reach, |m, v| m | (g.nmask(v) & open));
            if next == reach {
                break;
            }
            reach = next;
        }
        if ones(reach).fold(0u64, |m, v| m | g.cmask(v)) != ctx.all {
            return;
        }
        let frontier = ones(set).fold(0u64, |m, v| m | g.nmask(v)) & !set & !excluded;
        let Some(c) = ones(frontier).max_by_key(|&c| {
            ((g.cmask(c) & undominated).count_ones(), std::cmp::Reverse(c))
        }) else {
            return;
        };
        rec(ctx, set | 1 << c, excluded, best, bound);
        rec(ctx, set, excluded | 1 << c, best, bound);
    }

    let ctx = Ctx { g, all, maxdeg };
    for s in 0..n {
        let excluded = (1u64 << s) - 1;
        rec(&ctx, 1 << s, excluded, &mut best, &mut bound);
    }
    Ok(best.map(crate::bits::to_vec))
}

/// GS ordering that visits the connected set `set` first.
fn ordering_from_connected_set(g: &Graph, set: &[usize]) -> Ordering {
    let rho = Ordering::with_prefix(g.n(), set).expect("set is a vertex subset");
    run_plus(g, Paradigm::Gs, &rho)
}

/// Is there a GS first-in tree with at least `k` leaves?
pub fn max_leaf_gs(g: &Graph, k: usize) -> Result<Decision, GsError> {
    let n = g.n();
    if k == 0 {
        return Ok(Decision::yes(Ordering::identity(n)));
    }
    if n == 1 || k >= n {
        return Ok(Decision::no());
    }
    match min_cds(g, n - k)? {
        Some(cds) => {
            let sigma = ordering_from_connected_set(g, &cds);
            debug_assert!(ftree_from_ordering(g, &sigma).unwrap().leaf_count() >= k);
            Ok(Decision::yes(sigma))
        }
        None => Ok(Decision::no()),
    }
}

/// Is there a GS first-in tree with at most `k` leaves? Uses `td` when given,
/// otherwise a heuristic decomposition.
pub fn min_leaf_gs(
    g: &Graph,
    k: usize,
    td: Option<&TreeDecomposition>,
) -> Result<Decision, GsError> {
    let n = g.n();
    if n == 1 {
        return Ok(Decision::yes(Ordering::identity(1)));
    }
    if k == 0 {
        return Ok(Decision::no());
    }
    let owned;
    let mut td = match td {
        Some(t) => {
            t.validate(g)?;
            t
        }
        None => {
            owned = zforcing::heuristic_td(g);
            &owned
        }
    };
    // Treewidth is a lower bound on the minimum leaf count, so an exact
    // treewidth above k settles the answer.
    let exact;
    if td.width() > k {
        if n > EXACT_TREEWIDTH_LIMIT {
            if td.width() > zforcing::MAX_DP_WIDTH {
                return Err(GsError::DecompositionUnavailable);
            }
        } else {
            exact = zforcing::exact_treewidth_td(g);
            if exact.width() > k {
                return Ok(Decision::no());
            }
            td = &exact;
        }
    }
    if td.width() > zforcing::MAX_DP_WIDTH {
        return Err(GsError::DecompositionUnavailable);
    }
    let (size, set) = zforcing::min_zstar_tw_witness(g, td)?;
    if size > k {
        return Ok(Decision::no());
    }
    let rules = zstar_forcing_sequence(g, &set).expect("witness set is forcing");
    let z = rules_to_zsequence(g, &rules)?;
    let sigma = zsequence_to_ordering(g, &z)?;
    debug_assert!(ftree_from_ordering(g, &sigma).unwrap().leaf_count() <= k);
    Ok(Decision::yes(sigma))
}

/// The forced vertices in reverse order form a generic Z-sequence; each
/// forcing vertex is a fresh neighbour of the vertex it forced.
pub fn rules_to_zsequence(g: &Graph, rules: &RuleSequence) -> Result<ZSequence, GsError> {
    rules.replay(g)?;
    let seq: Vec<usize> = rules.rules.iter().rev().map(|&(_, w)| w).collect();
    ZSequence::new(g, seq)
}

/// GS ordering starting with the sequence; every member becomes internal.
pub fn zsequence_to_ordering(g: &Graph, z: &ZSequence) -> Result<Ordering, GsError> {
    if z.is_empty() {
        return Ok(Ordering::identity(g.n()));
    }
    let z = ZSequence::new(g, z.seq().to_vec())?;
    let rho = Ordering::with_prefix(g.n(), z.seq())
        .map_err(|e| GsError::InvalidSequence(e.to_string()))?;
    let sigma = run_plus(g, Paradigm::Gs, &rho);
    if &sigma.seq()[..z.len()] != z.seq() {
        return Err(GsError::InvalidSequence("sequence is not a GS prefix".into()));
    }
    Ok(sigma)
}

/// Leaves of the first-in tree form a Z*-forcing set: internal vertices are
/// coloured from last to first, each by one of its children.
pub fn ftree_to_zstar(g: &Graph, sigma: &Ordering) -> Result<(Vec<usize>, RuleSequence), GsError> {
    if !validate_ordering(g, sigma, Paradigm::Gs) {
        return Err(GsError::NotGsOrdering);
    }
    let tree = ftree_from_ordering(g, sigma).map_err(|_| GsError::NotGsOrdering)?;
    let leaves = tree.leaves();
    let mut rules = Vec::new();
    for &v in sigma.seq().iter().rev() {
        if let Some(&c) = tree.children(v).first() {
            rules.push((c, v));
        }
    }
    Ok((
        leaves.clone(),
        RuleSequence {
            initial: leaves,
            rules,
        },
    ))
}

/// Moves the leaves of the first-in tree to the end, keeping the relative
/// order of the internal vertices and of the leaves. Parents are unchanged:
/// a leaf's parent precedes it and is internal, and internal vertices only
/// have internal parents.
pub fn leaf_suffix_normalize(g: &Graph, sigma: &Ordering) -> Result<Ordering, GsError> {
    let tree = ftree_from_ordering(g, sigma).map_err(|_| GsError::NotGsOrdering)?;
    let (internal, leaves): (Vec<usize>, Vec<usize>) =
        sigma.seq().iter().partition(|&&v| !tree.is_leaf(v));
    let normalized = Ordering::new(internal.into_iter().chain(leaves).collect()).unwrap();
    debug_assert_eq!(
        ftree_from_ordering(g, &normalized).unwrap().parents(),
        tree.parents()
    );
    Ok(normalized)
}

/// Path decomposition of width at most the leaf count of the GS ordering's
/// first-in tree. Starts from the leaf set, then walks the internal vertices
/// backwards, adding each one and dropping its children.
pub fn pathdecomp_from_gs(g: &Graph, sigma: &Ordering) -> Result<PathDecomposition, GsError> {
    if !validate_ordering(g, sigma, Paradigm::Gs) {
        return Err(GsError::NotGsOrdering);
    }
    let sigma = leaf_suffix_normalize(g, sigma)?;
    let tree = ftree_from_ordering(g, &sigma).unwrap();
    let mut bag: Vec<usize> = tree.leaves();
    let mut bags = vec![bag.clone()];
    let internal: Vec<usize> = sigma.seq().iter().copied().filter(|&v| !tree.is_leaf(v)).collect();
    for &v in internal.iter().rev() {
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag.clone());
        bag.retain(|w| !tree.children(v).contains(w));
        bags.push(bag.clone());
    }
    bags.retain(|b| !b.is_empty());
    bags.dedup();
    let pd = PathDecomposition { bags };
    debug_assert!(pd.is_valid(g));
    Ok(pd)
}
