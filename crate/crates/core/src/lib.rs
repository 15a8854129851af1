//! First-in search trees of Generic Search, BFS and LBFS with few or many
//! leaves (equivalently many or few internal vertices).
//!
//! Vertices are dense `0..n` ids throughout. The crate contains exact
//! exponential reference solvers ([`oracle`]), the layered dynamic program for
//! BFS and LBFS ([`layered`]), Generic Search solvers built on connected
//! dominating sets and Z*-forcing sets ([`gs`], [`zforcing`]), XP solvers for
//! internal-vertex objectives ([`internal`]), and the reduction gadgets
//! ([`gadgets`]).

pub mod bits;
pub mod formats;
pub mod gadgets;
pub mod graph;
pub mod gs;
pub mod internal;
pub mod layered;
pub mod oracle;
pub mod pool;
pub mod search;
pub mod zforcing;

pub use graph::{
    bfs_layers, ftree_from_ordering, ordering_bandwidth, validate_ordering, FTree, Graph,
    GraphError, LayerPartition, Ordering, OrderingError, Paradigm,
};
pub use search::{
    all_orderings, complete_from_clique_prefix, enumerate_orderings, run_plus, SearchError,
};

/// Whether an optimisation asks for at most or at least `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Min,
    Max,
}

impl std::fmt::Display for Objective {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Objective::Min => "min",
            Objective::Max => "max",
        })
    }
}

/// Answer of a decision solver with an optional certificate ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub yes: bool,
    pub witness: Option<Ordering>,
}

impl Decision {
    pub fn yes(witness: Ordering) -> Self {
        Decision {
            yes: true,
            witness: Some(witness),
        }
    }

    pub fn no() -> Self {
        Decision {
            yes: false,
            witness: None,
        }
    }
}
