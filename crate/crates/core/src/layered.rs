//! Layer-by-layer dynamic program for BFS and LBFS first-in trees with few or
//! many leaves.
//!
//! For a fixed start vertex the BFS layers are fixed, and an ordering of layer
//! `i` together with the ordering of layer `i - 1` decides both whether the
//! pair can occur in a search and which vertices of layer `i` get children.
//! The table keeps, per ordering of a layer, the best leaf count of any valid
//! chain of layer orderings ending there.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{bfs_layers, ftree_from_ordering, validate_ordering, Graph, LayerPartition, Ordering, Paradigm};
use crate::search::run_plus;
use crate::{Decision, Objective};

/// Default bound on materialised orderings of a single layer (8!).
pub const DEFAULT_MAX_ORDERINGS: usize = 40320;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LayeredError {
    #[error("the layered program only handles BFS and LBFS, not {0}")]
    UnsupportedParadigm(Paradigm),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("layer {layer} from root {root} has {size} vertices; {size}! orderings exceed the cap {cap}")]
    BudgetExceeded {
        root: usize,
        layer: usize,
        size: usize,
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LayeredConfig {
    pub max_orderings: usize,
}

impl Default for LayeredConfig {
    fn default() -> Self {
        LayeredConfig {
            max_orderings: DEFAULT_MAX_ORDERINGS,
        }
    }
}

fn factorial_exceeds(size: usize, cap: usize) -> bool {
    let mut f: usize = 1;
    for i in 2..=size {
        f = match f.checked_mul(i) {
            Some(x) => x,
            None => return true,
        };
        if f > cap {
            return true;
        }
    }
    f > cap
}

/// Whether `tau` can follow `sigma_prev` as the visiting order of layer `i`.
pub fn layer_transition_valid(
    g: &Graph,
    layers: &LayerPartition,
    i: usize,
    sigma_prev: &[usize],
    tau: &[usize],
    paradigm: Paradigm,
) -> bool {
    assert!(i >= 1 && i < layers.len(), "layer {i} has no predecessor");
    let n = g.n();
    let mut rank = vec![usize::MAX; n];
    for (p, &v) in sigma_prev.iter().enumerate() {
        rank[v] = p;
    }
    match paradigm {
        Paradigm::Bfs => {
            let f = |v: usize| g.neighbors(v).iter().map(|&w| rank[w]).min().unwrap();
            tau.windows(2).all(|w| f(w[0]) <= f(w[1]))
        }
        Paradigm::Lbfs => {
            // Labels list visited neighbours by rank, earliest first; an
            // earlier neighbour beats a later one, and a longer label wins on
            // a shared prefix, so entries are stored as `big - rank`.
            let big = sigma_prev.len() + tau.len();
            let label = |v: usize, rank: &[usize]| -> Vec<usize> {
                let mut l: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .filter(|&&w| rank[w] != usize::MAX)
                    .map(|&w| big - rank[w])
                    .collect();
                l.sort_unstable_by(|a, b| b.cmp(a));
                l
            };
            for j in 0..tau.len() {
                let mine = label(tau[j], &rank);
                if tau[j + 1..].iter().any(|&x| label(x, &rank) > mine) {
                    return false;
                }
                rank[tau[j]] = sigma_prev.len() + j;
            }
            true
        }
        Paradigm::Gs => panic!("generic search is not layered"),
    }
}

/// Leaves of layer `i` when it is visited in order `tau`: vertices that are
/// nobody's leftmost neighbour in the next layer.
pub fn layer_leaf_count(g: &Graph, layers: &LayerPartition, i: usize, tau: &[usize]) -> usize {
    assert!(i + 1 < layers.len(), "the last layer consists of leaves");
    let mut has_child = vec![false; tau.len()];
    for &w in layers.layer(i + 1) {
        if let Some(p) = tau.iter().position(|&v| g.has_edge(v, w)) {
            has_child[p] = true;
        }
    }
    has_child.iter().filter(|&&c| !c).count()
}

struct Entry {
    tau: Vec<usize>,
    value: usize,
    back: usize,
}

fn better(objective: Objective, a: usize, b: usize) -> bool {
    match objective {
        Objective::Min => a < b,
        Objective::Max => a > b,
    }
}

/// Best leaf count from `root`, with an optimal ordering; `None` when min
/// mode can rule out `k` for this root early.
fn solve_root(
    g: &Graph,
    paradigm: Paradigm,
    objective: Objective,
    k: usize,
    root: usize,
    config: &LayeredConfig,
) -> Result<Option<(usize, Ordering)>, LayeredError> {
    let layers = bfs_layers(g, root);
    assert!(layers.is_edge_local(g), "BFS layering must only have edges inside or between consecutive layers");
    if objective == Objective::Min && layers.max_layer_size() > k {
        return Ok(None);
    }
    if objective == Objective::Max && layers.max_layer_size() >= k {
        let sigma = run_plus(g, paradigm, &Ordering::with_prefix(g.n(), &[root]).unwrap());
        let leaves = ftree_from_ordering(g, &sigma).unwrap().leaf_count();
        debug_assert!(leaves >= layers.max_layer_size());
        return Ok(Some((leaves, sigma)));
    }
    for (layer, l) in layers.layers().iter().enumerate() {
        if factorial_exceeds(l.len(), config.max_orderings) {
            return Err(LayeredError::BudgetExceeded {
                root,
                layer,
                size: l.len(),
                cap: config.max_orderings,
            });
        }
    }
    let last = layers.len() - 1;
    let mut tables: Vec<Vec<Entry>> = vec![vec![Entry {
        tau: vec![root],
        value: 0,
        back: 0,
    }]];
    for i in 1..=last {
        let layer = layers.layer(i);
        let prev = &tables[i - 1];
        let mut cur = Vec::new();
        for tau in layer.iter().copied().permutations(layer.len()) {
            let mut best: Option<(usize, usize)> = None;
            for (j, e) in prev.iter().enumerate() {
                if best.is_some_and(|(v, _)| !better(objective, e.value, v)) {
                    continue;
                }
                if layer_transition_valid(g, &layers, i, &e.tau, &tau, paradigm) {
                    best = Some((e.value, j));
                }
            }
            if let Some((v, back)) = best {
                let own = if i == last {
                    layer.len()
                } else {
                    layer_leaf_count(g, &layers, i, &tau)
                };
                cur.push(Entry {
                    tau,
                    value: v + own,
                    back,
                });
            }
        }
        if objective == Objective::Min && cur.iter().all(|e| e.value > k) {
            return Ok(None);
        }
        tables.push(cur);
    }
    let mut idx = 0;
    for (j, e) in tables[last].iter().enumerate() {
        if better(objective, e.value, tables[last][idx].value) {
            idx = j;
        }
    }
    let value = tables[last][idx].value;
    let mut chain = Vec::with_capacity(last + 1);
    for i in (0..=last).rev() {
        let e = &tables[i][idx];
        chain.push(e.tau.clone());
        idx = e.back;
    }
    chain.reverse();
    let sigma = Ordering::new(chain.concat()).expect("layers partition the vertices");
    assert!(validate_ordering(g, &sigma, paradigm), "assembled ordering must be a valid search");
    debug_assert_eq!(ftree_from_ordering(g, &sigma).unwrap().leaf_count(), value);
    Ok(Some((value, sigma)))
}

/// Decides whether some `paradigm` first-in tree has at most (`Min`) or at
/// least (`Max`) `k` leaves.
pub fn solve(g: &Graph, paradigm: Paradigm, objective: Objective, k: usize) -> Result<Decision, LayeredError> {
    solve_with(g, paradigm, objective, k, &LayeredConfig::default())
}

pub fn solve_with(
    g: &Graph,
    paradigm: Paradigm,
    objective: Objective,
    k: usize,
    config: &LayeredConfig,
) -> Result<Decision, LayeredError> {
    if paradigm == Paradigm::Gs {
        return Err(LayeredError::UnsupportedParadigm(paradigm));
    }
    if k == 0 {
        return Err(LayeredError::ZeroK);
    }
    if g.n() < 2 {
        return Err(LayeredError::TooSmall);
    }
    let run = |r: usize| solve_root(g, paradigm, objective, k, r, config);
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        (0..g.n()).into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = (0..g.n()).map(run).collect();

    let mut error = None;
    for res in results {
        match res {
            Ok(Some((value, sigma))) => {
                let ok = match objective {
                    Objective::Min => value <= k,
                    Objective::Max => value >= k,
                };
                if ok {
                    return Ok(Decision::yes(sigma));
                }
            }
            Ok(None) => {}
            Err(e) => {
                error.get_or_insert(e);
            }
        }
    }
    match error {
        Some(e) => Err(e),
        None => Ok(Decision::no()),
    }
}

/// Optimum leaf count over all start vertices (no pruning by `k`).
pub fn optimum(g: &Graph, paradigm: Paradigm, objective: Objective) -> Result<usize, LayeredError> {
    let k = match objective {
        Objective::Min => g.n(),
        Objective::Max => g.n() + 1,
    };
    let mut best: Option<usize> = None;
    for r in 0..g.n() {
        let config = LayeredConfig::default();
        if let Some((v, _)) = solve_root(g, paradigm, objective, k, r, &config)? {
            if best.is_none_or(|b| better(objective, v, b)) {
                best = Some(v);
            }
        }
    }
    Ok(best.expect("some root always yields a search"))
}
