//! Smallest Z*-forcing sets by dynamic programming over tree decompositions.

pub mod decomposition;
pub mod dp;
pub mod nice;

use thiserror::Error;

pub use decomposition::{
    exact_treewidth_td, heuristic_td, min_degree_td, min_fill_td, td_from_elimination,
    TreeDecomposition,
};
pub use dp::{
    process_node, DependencyGraph, EventNode, GammaType, PhiType, Signature, SignatureTable,
    DEFAULT_SIGNATURE_CAP, MAX_DP_WIDTH,
};
pub use nice::{make_nice, make_nice_rooted, NiceKind, NiceNode, NiceTd};

use crate::graph::Graph;
use crate::oracle::zstar_forcing_sequence;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdError {
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("decomposition width {0} exceeds the supported maximum")]
    WidthTooLarge(usize),
    #[error("more than {0} signatures at one node")]
    SignatureCapExceeded(usize),
    #[error("constraints admit no forcing set")]
    Infeasible,
    #[error("witness {0:?} failed Z* replay")]
    WitnessRejected(Vec<usize>),
}

/// Size of an inclusion-minimal forcing set respecting the constraints, found
/// by dropping vertices greedily; `n` if the constraints leave none.
fn greedy_bound(g: &Graph, constraints: Option<&[Option<GammaType>]>) -> usize {
    let n = g.n();
    let allowed = |v: usize| constraints.is_none_or(|c| c[v] != Some(GammaType::Zstar));
    let mut set: Vec<usize> = (0..n).filter(|&v| allowed(v)).collect();
    if zstar_forcing_sequence(g, &set).is_none() {
        return n;
    }
    for v in 0..n {
        if constraints.is_some_and(|c| c[v].is_some()) {
            continue;
        }
        let trial: Vec<usize> = set.iter().copied().filter(|&u| u != v).collect();
        if zstar_forcing_sequence(g, &trial).is_some() {
            set = trial;
        }
    }
    set.len()
}

/// Size of a smallest Z*-forcing set respecting the optional per-vertex
/// constraints (`Bot` forces membership, `Zstar` forbids it).
pub fn min_zstar_tw_size(
    g: &Graph,
    td: &TreeDecomposition,
    constraints: Option<&[Option<GammaType>]>,
) -> Result<usize, TdError> {
    Ok(min_zstar_tw(g, td, constraints)?.0)
}

/// Size and a witness set, read off the table entries that produced the
/// optimum and checked by replaying Z*-rules before it is returned.
pub fn min_zstar_tw(
    g: &Graph,
    td: &TreeDecomposition,
    constraints: Option<&[Option<GammaType>]>,
) -> Result<(usize, Vec<usize>), TdError> {
    let nice = make_nice(g, td)?;
    min_zstar_tw_nice(g, &nice, constraints)
}

/// [`min_zstar_tw`] on an already nice decomposition.
pub fn min_zstar_tw_nice(
    g: &Graph,
    nice: &NiceTd,
    constraints: Option<&[Option<GammaType>]>,
) -> Result<(usize, Vec<usize>), TdError> {
    nice.check(g.n()).map_err(TdError::InvalidDecomposition)?;
    for (u, v) in g.edges() {
        let seen = nice.nodes.iter().any(|t| {
            matches!(t.kind, NiceKind::Rule(x) if x == u || x == v) && t.bag.contains(&u) && t.bag.contains(&v)
        });
        if !seen {
            return Err(TdError::InvalidDecomposition(format!("edge {u}-{v} is never decided")));
        }
    }
    let bound = greedy_bound(g, constraints);
    let (size, set) = dp::run(g, nice, constraints, DEFAULT_SIGNATURE_CAP, bound)?.ok_or(TdError::Infeasible)?;
    let respects = constraints.is_none_or(|c| {
        (0..g.n()).all(|v| match c[v] {
            Some(GammaType::Bot) => set.contains(&v),
            Some(GammaType::Zstar) => !set.contains(&v),
            None => true,
        })
    });
    if set.len() != size || !respects || zstar_forcing_sequence(g, &set).is_none() {
        return Err(TdError::WitnessRejected(set));
    }
    Ok((size, set))
}

/// [`min_zstar_tw`] without constraints.
pub fn min_zstar_tw_witness(g: &Graph, td: &TreeDecomposition) -> Result<(usize, Vec<usize>), TdError> {
    min_zstar_tw(g, td, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{gen_family, Family};
    use crate::oracle::brute_min_zstar;

    #[test]
    fn small_families_match_oracle() {
        let p5 = gen_family(Family::Path(5)).unwrap();
        let path_td = TreeDecomposition::new(
            (0..4).map(|i| vec![i, i + 1]).collect(),
            (0..3).map(|i| (i, i + 1)).collect(),
        );
        assert_eq!(min_zstar_tw_size(&p5, &path_td, None).unwrap(), 1);
        let k4 = gen_family(Family::Complete(4)).unwrap();
        assert_eq!(min_zstar_tw_size(&k4, &heuristic_td(&k4), None).unwrap(), 3);
        for f in [
            Family::Cycle(5),
            Family::Star(3),
            Family::PathOfTriangles(2),
            Family::Cycle(6),
            Family::Complete(5),
        ] {
            let g = gen_family(f).unwrap();
            let expect = brute_min_zstar(&g).0.len();
            let (size, set) = min_zstar_tw(&g, &heuristic_td(&g), None).unwrap();
            assert_eq!(size, expect, "{f:?}");
            assert_eq!(set.len(), expect);
            assert_eq!(min_zstar_tw_size(&g, &min_degree_td(&g), None).unwrap(), expect);
        }
    }
}
