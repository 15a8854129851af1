//! XP solvers for first-in trees with few or many internal vertices, and the
//! weighted circuit encoding of the Generic Search maximisation problem.

use std::collections::HashSet;

use itertools::Itertools;

use crate::bits::ones;
use crate::graph::{ftree_from_ordering, mask_connected, Graph, Ordering, Paradigm};
use crate::gs::{zsequence_to_ordering, ZSequence};
use crate::search::run_plus;
use crate::{Decision, Objective};

/// Paradigm search with ties broken by `prefix`, then by vertex id.
pub fn plus_from_prefix(g: &Graph, paradigm: Paradigm, prefix: &[usize]) -> Ordering {
    let rho = Ordering::with_prefix(g.n(), prefix).expect("prefix is a set of vertices");
    run_plus(g, paradigm, &rho)
}

/// BFS first-in tree with at most (`Min`) or at least (`Max`) `k` internal
/// vertices, found by trying every ordered candidate set of internal vertices
/// as the head of the tie-break order.
pub fn bfs_internal_xp(g: &Graph, k: usize, objective: Objective) -> Decision {
    let n = g.n();
    let sizes = match objective {
        Objective::Min => 1..=k.min(n),
        Objective::Max => k..=k,
    };
    for size in sizes {
        if size == 0 || size > n {
            continue;
        }
        for rho in (0..n).permutations(size) {
            let sigma = plus_from_prefix(g, Paradigm::Bfs, &rho);
            let internal = ftree_from_ordering(g, &sigma).unwrap().internal_count();
            let ok = match objective {
                Objective::Min => internal <= k,
                Objective::Max => internal >= k,
            };
            if ok {
                return Decision::yes(sigma);
            }
        }
    }
    Decision::no()
}

/// GS first-in tree with at most `k` internal vertices, i.e. a connected
/// dominating set of size at most `k`.
pub fn gs_min_internal_xp(g: &Graph, k: usize) -> Decision {
    let n = g.n();
    assert!(n <= 64, "subset enumeration uses 64-bit masks");
    let all = g.all_mask();
    for size in 1..=k.min(n) {
        for set in (0..n).combinations(size) {
            let mask = crate::bits::mask_of(&set);
            let dominated = ones(mask).fold(0u64, |m, v| m | g.cmask(v));
            if dominated == all && mask_connected(g, mask) {
                let sigma = plus_from_prefix(g, Paradigm::Gs, &set);
                debug_assert!(ftree_from_ordering(g, &sigma).unwrap().internal_count() <= k);
                return Decision::yes(sigma);
            }
        }
    }
    Decision::no()
}

/// GS first-in tree with at least `k` internal vertices, via a generic
/// Z-sequence of length `k`.
pub fn gs_max_internal_xp(g: &Graph, k: usize) -> Decision {
    let n = g.n();
    assert!(n <= 64, "sequence search uses 64-bit masks");
    if k == 0 {
        return Decision::yes(Ordering::identity(n));
    }
    fn grow(g: &Graph, k: usize, seq: &mut Vec<usize>, used: u64, closed: u64, dead: &mut HashSet<u64>) -> bool {
        if seq.len() == k {
            return true;
        }
        if dead.contains(&used) {
            return false;
        }
        let reach = if seq.is_empty() {
            g.all_mask()
        } else {
            ones(used).fold(0u64, |m, v| m | g.nmask(v)) & !used
        };
        for v in ones(reach) {
            if g.nmask(v) & !closed == 0 {
                continue;
            }
            seq.push(v);
            if grow(g, k, seq, used | 1 << v, closed | g.cmask(v), dead) {
                return true;
            }
            seq.pop();
        }
        dead.insert(used);
        false
    }
    let mut seq = Vec::with_capacity(k);
    if k > n || !grow(g, k, &mut seq, 0, 0, &mut HashSet::new()) {
        return Decision::no();
    }
    let z = ZSequence::new(g, seq).expect("search only builds valid sequences");
    let sigma = zsequence_to_ordering(g, &z).expect("valid sequences are GS prefixes");
    debug_assert!(ftree_from_ordering(g, &sigma).unwrap().internal_count() >= k);
    Decision::yes(sigma)
}

/// Circuit variables; slot indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// `v` is the `i`-th internal vertex.
    X(usize, usize),
    /// `v` is a child of the `i`-th internal vertex.
    Y(usize, usize),
    /// The `i`-th internal vertex is adjacent to the `j`-th one, `j < i`.
    Z(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClauseGroup {
    X,
    Y,
    Z,
    XPrime,
    A,
    B,
    C,
}

/// Conjunction of clauses; every literal is negated, so a clause is violated
/// exactly when all of its variables are true.
#[derive(Debug, Clone)]
pub struct CircuitInstance {
    pub n: usize,
    pub k: usize,
    pub vars: Vec<Var>,
    pub clauses: Vec<(ClauseGroup, Vec<usize>)>,
}

impl CircuitInstance {
    pub fn target_weight(&self) -> usize {
        3 * self.k - 1
    }

    pub fn var_index(&self, var: Var) -> usize {
        let (n, k) = (self.n, self.k);
        match var {
            Var::X(v, i) => i * n + v,
            Var::Y(v, i) => k * n + i * n + v,
            Var::Z(j, i) => 2 * k * n + i * (i - 1) / 2 + j,
        }
    }

    pub fn group_size(&self, group: ClauseGroup) -> usize {
        self.clauses.iter().filter(|c| c.0 == group).count()
    }

    /// Whether the assignment making exactly `true_vars` true satisfies
    /// every clause.
    pub fn satisfied_by(&self, true_vars: &[usize]) -> bool {
        let mut on = vec![false; self.vars.len()];
        for &t in true_vars {
            on[t] = true;
        }
        self.clauses.iter().all(|(_, c)| !c.iter().all(|&x| on[x]))
    }
}

pub fn build_wcs_circuit(g: &Graph, k: usize) -> CircuitInstance {
    assert!(k >= 1, "k must be positive");
    let n = g.n();
    let mut vars = Vec::new();
    for i in 0..k {
        vars.extend((0..n).map(|v| Var::X(v, i)));
    }
    for i in 0..k {
        vars.extend((0..n).map(|v| Var::Y(v, i)));
    }
    for i in 1..k {
        vars.extend((0..i).map(|j| Var::Z(j, i)));
    }
    let mut c = CircuitInstance {
        n,
        k,
        vars,
        clauses: Vec::new(),
    };
    let mut out = Vec::new();
    let idx = |var: Var| c.var_index(var);
    for i in 0..k {
        for (v, w) in (0..n).tuple_combinations() {
            out.push((ClauseGroup::X, vec![idx(Var::X(v, i)), idx(Var::X(w, i))]));
            out.push((ClauseGroup::Y, vec![idx(Var::Y(v, i)), idx(Var::Y(w, i))]));
        }
    }
    for i in 1..k {
        for (j, j2) in (0..i).tuple_combinations() {
            out.push((ClauseGroup::Z, vec![idx(Var::Z(j, i)), idx(Var::Z(j2, i))]));
        }
    }
    for v in 0..n {
        for (i, j) in (0..k).tuple_combinations() {
            out.push((ClauseGroup::XPrime, vec![idx(Var::X(v, i)), idx(Var::X(v, j))]));
        }
    }
    for i in 0..k {
        for j in 0..i {
            for v in 0..n {
                for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
                    out.push((ClauseGroup::A, vec![idx(Var::Y(w, i)), idx(Var::X(v, j))]));
                }
            }
        }
    }
    for i in 0..k {
        for v in 0..n {
            for w in (0..n).filter(|&w| !g.has_edge(v, w)) {
                out.push((ClauseGroup::B, vec![idx(Var::Y(w, i)), idx(Var::X(v, i))]));
            }
        }
    }
    for i in 1..k {
        for j in 0..i {
            for v in 0..n {
                for w in (0..n).filter(|&w| !g.has_edge(v, w)) {
                    out.push((
                        ClauseGroup::C,
                        vec![idx(Var::Z(j, i)), idx(Var::X(v, j)), idx(Var::X(w, i))],
                    ));
                }
            }
        }
    }
    c.clauses = out;
    c
}

/// Whether the circuit has a satisfying assignment of weight `3k - 1`.
///
/// The at-most-one clauses of groups X, Y and Z leave room for at most one
/// true variable per slot, so an assignment of the target weight picks
/// exactly one variable for each x-slot, y-slot and z-slot. Those choices are
/// enumerated depth-first, dropping a branch as soon as some clause has all
/// of its variables chosen. Returns the true variables of a solution.
pub fn eval_wcs(c: &CircuitInstance) -> Option<Vec<usize>> {
    let mut slots: Vec<Vec<usize>> = Vec::new();
    for i in 0..c.k {
        slots.push((0..c.n).map(|v| c.var_index(Var::X(v, i))).collect());
        if i > 0 {
            slots.push((0..i).map(|j| c.var_index(Var::Z(j, i))).collect());
        }
        slots.push((0..c.n).map(|v| c.var_index(Var::Y(v, i))).collect());
    }
    let mut by_var: Vec<Vec<usize>> = vec![Vec::new(); c.vars.len()];
    for (ci, (_, clause)) in c.clauses.iter().enumerate() {
        for &x in clause {
            by_var[x].push(ci);
        }
    }
    fn go(
        c: &CircuitInstance,
        slots: &[Vec<usize>],
        by_var: &[Vec<usize>],
        on: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
    ) -> bool {
        let Some(options) = slots.get(chosen.len()) else {
            return true;
        };
        for &x in options {
            on[x] = true;
            let violated = by_var[x].iter().any(|&ci| c.clauses[ci].1.iter().all(|&y| on[y]));
            if !violated {
                chosen.push(x);
                if go(c, slots, by_var, on, chosen) {
                    return true;
                }
                chosen.pop();
            }
            on[x] = false;
        }
        false
    }
    let mut on = vec![false; c.vars.len()];
    let mut chosen = Vec::new();
    if go(c, &slots, &by_var, &mut on, &mut chosen) {
        debug_assert_eq!(chosen.len(), c.target_weight());
        debug_assert!(c.satisfied_by(&chosen));
        Some(chosen)
    } else {
        None
    }
}

/// The eight-vertex graph on which the tie-break argument for BFS does not
/// carry over to LBFS.
pub fn counterexample_graph() -> Graph {
    Graph::new(
        8,
        &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (3, 5), (4, 6), (4, 7), (5, 7)],
    )
    .unwrap()
}

/// Internal vertices of the reference tree, in their visiting order.
pub const COUNTEREXAMPLE_S: [usize; 4] = [0, 1, 5, 4];

/// An ordering that is both a BFS and an LBFS ordering of
/// [`counterexample_graph`] whose first internal vertices are
/// [`COUNTEREXAMPLE_S`] in order.
pub fn counterexample_reference() -> Ordering {
    Ordering::new(vec![0, 1, 3, 2, 5, 4, 7, 6]).unwrap()
}
