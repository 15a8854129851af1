//! Tie-broken search runners and exhaustive ordering enumeration.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{Graph, Ordering, Paradigm};

const NONE: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("prefix is not a clique: {0} and {1} are not adjacent")]
    NotAClique(usize, usize),
    #[error("prefix contains a repeated or out-of-range vertex")]
    BadPrefix,
    #[error("search did not reproduce the requested prefix")]
    PrefixNotRealized,
}

/// Incremental state of a partially executed search.
///
/// Besides the visited prefix it tracks, for every unvisited vertex, its
/// earliest visited neighbour (its future parent in the first-in tree) and,
/// for LBFS, the label built from visited neighbours. Leaf status of a visited
/// vertex is final once it is pushed, so the internal-vertex count is exact
/// for the prefix.
#[derive(Clone)]
pub(crate) struct SearchState<'g> {
    g: &'g Graph,
    paradigm: Paradigm,
    order: Vec<usize>,
    pos: Vec<usize>,
    first: Vec<usize>,
    claimed: Vec<u32>,
    // LBFS label entries are n - position, so the standard lexicographic
    // order on Vec<u32> (longer wins on a shared prefix) ranks labels.
    labels: Vec<Vec<u32>>,
    internal: usize,
    unclaimed: usize,
}

impl<'g> SearchState<'g> {
    pub fn new(g: &'g Graph, paradigm: Paradigm) -> Self {
        let n = g.n();
        SearchState {
            g,
            paradigm,
            order: Vec::with_capacity(n),
            pos: vec![NONE; n],
            first: vec![NONE; n],
            claimed: vec![0; n],
            labels: if paradigm == Paradigm::Lbfs {
                vec![Vec::new(); n]
            } else {
                Vec::new()
            },
            internal: 0,
            unclaimed: n,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_complete(&self) -> bool {
        self.order.len() == self.g.n()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn is_visited(&self, v: usize) -> bool {
        self.pos[v] != NONE
    }

    /// Earliest visited neighbour of `v`, if any.
    pub fn first(&self, v: usize) -> Option<usize> {
        (self.first[v] != NONE).then_some(self.first[v])
    }

    /// Internal vertices among the visited ones (the root always counts).
    pub fn internal(&self) -> usize {
        self.internal
    }

    /// Once every unvisited vertex has a visited neighbour, the remaining
    /// vertices all become leaves whatever order they are visited in.
    pub fn is_settled(&self) -> bool {
        !self.order.is_empty() && self.unclaimed == 0
    }

    pub fn push(&mut self, v: usize) {
        debug_assert_eq!(self.pos[v], NONE);
        let p = self.order.len();
        if self.first[v] == NONE {
            self.unclaimed -= 1;
        }
        self.pos[v] = p;
        self.order.push(v);
        let n = self.g.n() as u32;
        let mut claimed = 0;
        for &w in self.g.neighbors(v) {
            if self.pos[w] != NONE {
                continue;
            }
            if self.first[w] == NONE {
                self.first[w] = v;
                claimed += 1;
            }
            if self.paradigm == Paradigm::Lbfs {
                self.labels[w].push(n - p as u32);
            }
        }
        self.unclaimed -= claimed as usize;
        self.claimed[v] = claimed;
        if p == 0 || claimed > 0 {
            self.internal += 1;
        }
    }

    pub fn pop(&mut self) -> usize {
        let v = self.order.pop().expect("pop on empty search state");
        let p = self.order.len();
        for &w in self.g.neighbors(v) {
            if self.pos[w] != NONE {
                continue;
            }
            if self.paradigm == Paradigm::Lbfs {
                self.labels[w].pop();
            }
            if self.first[w] == v {
                self.first[w] = NONE;
            }
        }
        let claimed = self.claimed[v];
        self.unclaimed += claimed as usize;
        if p == 0 || claimed > 0 {
            self.internal -= 1;
        }
        self.claimed[v] = 0;
        self.pos[v] = NONE;
        if self.first[v] == NONE {
            self.unclaimed += 1;
        }
        v
    }

    /// Vertices the paradigm may visit next, in ascending id order.
    pub fn eligible(&self, out: &mut Vec<usize>) {
        out.clear();
        let n = self.g.n();
        if self.order.is_empty() {
            out.extend(0..n);
            return;
        }
        let frontier = (0..n).filter(|&w| self.pos[w] == NONE && self.first[w] != NONE);
        match self.paradigm {
            Paradigm::Gs => out.extend(frontier),
            Paradigm::Bfs => {
                // Head group of the queue: the unvisited vertices discovered
                // by the earliest visited vertex that still has any.
                let mut best = NONE;
                for w in frontier {
                    let d = self.pos[self.first[w]];
                    if d < best {
                        best = d;
                        out.clear();
                    }
                    if d == best {
                        out.push(w);
                    }
                }
            }
            Paradigm::Lbfs => {
                let mut best: Option<&Vec<u32>> = None;
                for w in frontier {
                    let label = &self.labels[w];
                    match best.map(|b| label.cmp(b)) {
                        None | Some(std::cmp::Ordering::Greater) => {
                            best = Some(label);
                            out.clear();
                            out.push(w);
                        }
                        Some(std::cmp::Ordering::Equal) => out.push(w),
                        Some(std::cmp::Ordering::Less) => {}
                    }
                }
            }
        }
    }

    /// Visits the remaining vertices, resolving ties by `rank` (lower wins).
    pub fn finish_by_rank(&mut self, rank: &[usize]) {
        let mut eligible = Vec::new();
        while !self.is_complete() {
            self.eligible(&mut eligible);
            let v = *eligible
                .iter()
                .min_by_key(|&&w| rank[w])
                .expect("connected graph always has an eligible vertex");
            self.push(v);
        }
    }

    pub fn to_ordering(&self) -> Ordering {
        Ordering::new(self.order.clone()).expect("complete search state is a permutation")
    }
}

/// Outcome of a visit callback during [`explore`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Visit {
    Descend,
    Skip,
    Stop,
}

/// Depth-first walk over all search prefixes. `f` sees every prefix,
/// including the empty one and every complete ordering.
pub(crate) fn explore<F>(state: &mut SearchState<'_>, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&SearchState<'_>) -> Visit,
{
    match f(state) {
        Visit::Stop => return ControlFlow::Break(()),
        Visit::Skip => return ControlFlow::Continue(()),
        Visit::Descend => {}
    }
    if state.is_complete() {
        return ControlFlow::Continue(());
    }
    let mut eligible = Vec::new();
    state.eligible(&mut eligible);
    for v in eligible {
        state.push(v);
        let flow = explore(state, f);
        state.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// The paradigm ordering in which every tie is broken towards the vertex
/// appearing leftmost in `rho`; the start vertex is `rho[0]`.
pub fn run_plus(g: &Graph, paradigm: Paradigm, rho: &Ordering) -> Ordering {
    assert_eq!(rho.len(), g.n(), "tie-break ordering must cover every vertex");
    let rank: Vec<usize> = (0..g.n()).map(|v| rho.pos(v)).collect();
    let mut state = SearchState::new(g, paradigm);
    state.push(rho.seq()[0]);
    state.finish_by_rank(&rank);
    state.to_ordering()
}

/// A paradigm ordering that begins with the given clique.
pub fn complete_from_clique_prefix(
    g: &Graph,
    paradigm: Paradigm,
    prefix: &[usize],
) -> Result<Ordering, SearchError> {
    for (i, &u) in prefix.iter().enumerate() {
        for &v in &prefix[i + 1..] {
            if u == v || u >= g.n() || v >= g.n() {
                return Err(SearchError::BadPrefix);
            }
            if !g.has_edge(u, v) {
                return Err(SearchError::NotAClique(u, v));
            }
        }
    }
    let rho = Ordering::with_prefix(g.n(), prefix).map_err(|_| SearchError::BadPrefix)?;
    let sigma = run_plus(g, paradigm, &rho);
    if &sigma.seq()[..prefix.len()] != prefix {
        return Err(SearchError::PrefixNotRealized);
    }
    Ok(sigma)
}

/// Streams every ordering of the paradigm exactly once; the visitor may stop
/// early by returning `ControlFlow::Break`.
pub fn enumerate_orderings<F>(g: &Graph, paradigm: Paradigm, mut visitor: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut state = SearchState::new(g, paradigm);
    let _ = explore(&mut state, &mut |s| {
        if s.is_complete() {
            match visitor(s.order()) {
                ControlFlow::Continue(()) => Visit::Descend,
                ControlFlow::Break(()) => Visit::Stop,
            }
        } else {
            Visit::Descend
        }
    });
}

/// Collects [`enumerate_orderings`] into a vector.
pub fn all_orderings(g: &Graph, paradigm: Paradigm) -> Vec<Ordering> {
    let mut out = Vec::new();
    enumerate_orderings(g, paradigm, |s| {
        out.push(Ordering::new(s.to_vec()).unwrap());
        ControlFlow::Continue(())
    });
    out
}
