//! Problem dispatch and the result record.

use std::fmt::Write as _;
use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;

use leafsearch::gs::{max_leaf_gs, min_leaf_gs};
use leafsearch::internal::{bfs_internal_xp, gs_max_internal_xp, gs_min_internal_xp};
use leafsearch::layered;
use leafsearch::oracle::brute_leaf_range;
use leafsearch::zforcing::TreeDecomposition;
use leafsearch::{ftree_from_ordering, validate_ordering, Decision, Graph, Objective, Paradigm};

/// Largest graph the exhaustive oracle accepts.
pub const ORACLE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    MinLeaf,
    MaxLeaf,
    MinInternal,
    MaxInternal,
}

impl Problem {
    fn objective(self) -> Objective {
        match self {
            Problem::MinLeaf | Problem::MinInternal => Objective::Min,
            Problem::MaxLeaf | Problem::MaxInternal => Objective::Max,
        }
    }

    fn counts_leaves(self) -> bool {
        matches!(self, Problem::MinLeaf | Problem::MaxLeaf)
    }

    fn name(self) -> &'static str {
        match self {
            Problem::MinLeaf => "min-leaf",
            Problem::MaxLeaf => "max-leaf",
            Problem::MinInternal => "min-internal",
            Problem::MaxInternal => "max-internal",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Dp,
    Xp,
    Tw,
    Oracle,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::Dp => "dp",
            Algo::Xp => "xp",
            Algo::Tw => "tw",
            Algo::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Timings {
    pub solve_ms: f64,
}

/// Output of `solve`. Vertex ids are 1-based as in the input files; the root
/// has parent 0.
#[derive(Debug, Serialize)]
pub struct ResultRecord {
    pub problem: &'static str,
    pub paradigm: String,
    pub objective: String,
    pub k: usize,
    pub algorithm: &'static str,
    pub decision: &'static str,
    pub optimum: Option<usize>,
    pub witness: Option<Vec<usize>>,
    pub parents: Option<Vec<usize>>,
    pub leaves: Option<usize>,
    pub internal: Option<usize>,
    pub timings: Timings,
}

impl ResultRecord {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "{} {} {} k={} ({}): {}\n",
            self.paradigm, self.problem, self.objective, self.k, self.algorithm, self.decision
        );
        if let Some(opt) = self.optimum {
            writeln!(s, "optimum: {opt}").unwrap();
        }
        if let (Some(w), Some(p)) = (&self.witness, &self.parents) {
            let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(s, "ordering: {}", join(w)).unwrap();
            writeln!(s, "parents: {}", join(p)).unwrap();
            writeln!(s, "leaves: {}, internal: {}", self.leaves.unwrap(), self.internal.unwrap()).unwrap();
        }
        s
    }
}

fn unsupported(paradigm: Paradigm, problem: Problem, algo: Algo, supported: &str) -> anyhow::Error {
    anyhow::anyhow!(
        "--algo {} is not available for {paradigm} {}; use one of: {supported}",
        algo.name(),
        problem.name()
    )
}

fn oracle(g: &Graph, paradigm: Paradigm, problem: Problem, k: usize) -> Result<(Decision, Option<usize>)> {
    if g.n() > ORACLE_LIMIT {
        bail!("the exhaustive oracle is limited to {ORACLE_LIMIT} vertices, graph has {}", g.n());
    }
    let n = g.n();
    let r = brute_leaf_range(g, paradigm);
    let (ok, opt, w) = match problem {
        Problem::MinLeaf => (r.min <= k, r.min, r.min_witness),
        Problem::MaxLeaf => (r.max >= k, r.max, r.max_witness),
        Problem::MinInternal => (n - r.max <= k, n - r.max, r.max_witness),
        Problem::MaxInternal => (n - r.min >= k, n - r.min, r.min_witness),
    };
    Ok((if ok { Decision::yes(w) } else { Decision::no() }, Some(opt)))
}

/// Runs the solver chosen by `algo` (or the default for the combination)
/// and re-validates any witness before returning.
pub fn solve(
    g: &Graph,
    paradigm: Paradigm,
    problem: Problem,
    k: usize,
    algo: Algo,
    td: Option<&TreeDecomposition>,
) -> Result<ResultRecord> {
    let n = g.n();
    let objective = problem.objective();
    let start = Instant::now();
    let (used, decision, optimum) = match (paradigm, problem, algo) {
        (_, _, Algo::Oracle) => {
            let (d, opt) = oracle(g, paradigm, problem, k)?;
            (Algo::Oracle, d, opt)
        }
        (Paradigm::Bfs | Paradigm::Lbfs, Problem::MinLeaf | Problem::MaxLeaf, Algo::Auto | Algo::Dp) => {
            if n < 2 && algo == Algo::Auto {
                let (d, opt) = oracle(g, paradigm, problem, k)?;
                (Algo::Oracle, d, opt)
            } else {
                (Algo::Dp, layered::solve(g, paradigm, objective, k)?, None)
            }
        }
        (Paradigm::Bfs | Paradigm::Lbfs, Problem::MinLeaf | Problem::MaxLeaf, _) => {
            return Err(unsupported(paradigm, problem, algo, "auto, dp, oracle"));
        }
        (Paradigm::Gs, Problem::MinLeaf, Algo::Auto | Algo::Tw) => (Algo::Tw, min_leaf_gs(g, k, td)?, None),
        (Paradigm::Gs, Problem::MaxLeaf, Algo::Auto | Algo::Xp) => (Algo::Xp, max_leaf_gs(g, k)?, None),
        (Paradigm::Gs, Problem::MinInternal, Algo::Auto | Algo::Xp) => (Algo::Xp, gs_min_internal_xp(g, k), None),
        (Paradigm::Gs, Problem::MaxInternal, Algo::Auto | Algo::Xp) => (Algo::Xp, gs_max_internal_xp(g, k), None),
        (Paradigm::Gs, Problem::MaxInternal, Algo::Tw) => {
            let d = if k > n { Decision::no() } else { min_leaf_gs(g, n - k, td)? };
            (Algo::Tw, d, None)
        }
        (Paradigm::Gs, Problem::MinLeaf, _) => return Err(unsupported(paradigm, problem, algo, "auto, tw, oracle")),
        (Paradigm::Gs, Problem::MaxInternal, _) => {
            return Err(unsupported(paradigm, problem, algo, "auto, xp, tw, oracle"));
        }
        (Paradigm::Gs, _, _) => return Err(unsupported(paradigm, problem, algo, "auto, xp, oracle")),
        (Paradigm::Bfs, _, Algo::Auto | Algo::Xp) => (Algo::Xp, bfs_internal_xp(g, k, objective), None),
        (Paradigm::Bfs, _, _) => return Err(unsupported(paradigm, problem, algo, "auto, xp, oracle")),
        (Paradigm::Lbfs, Problem::MinInternal, _) => bail!(
            "LBFS min-internal is NP-complete for every fixed k >= 3, even on weakly chordal graphs, so no XP \
             solver exists unless P = NP; rerun with --algo oracle (at most {ORACLE_LIMIT} vertices)"
        ),
        (Paradigm::Lbfs, _, _) => bail!(
            "no XP algorithm is known for LBFS max-internal: the tie-break argument used for BFS fails because \
             leaf order steers later layers; rerun with --algo oracle (at most {ORACLE_LIMIT} vertices)"
        ),
    };
    let solve_ms = start.elapsed().as_secs_f64() * 1e3;
    if td.is_some() && used != Algo::Tw {
        bail!("--td only applies to the treewidth solver (GS min-leaf and max-internal)");
    }

    let mut record = ResultRecord {
        problem: problem.name(),
        paradigm: paradigm.to_string(),
        objective: objective.to_string(),
        k,
        algorithm: used.name(),
        decision: if decision.yes { "yes" } else { "no" },
        optimum,
        witness: None,
        parents: None,
        leaves: None,
        internal: None,
        timings: Timings { solve_ms },
    };
    if let Some(sigma) = decision.witness.filter(|_| decision.yes) {
        let tree = ftree_from_ordering(g, &sigma)?;
        let value = if problem.counts_leaves() { tree.leaf_count() } else { tree.internal_count() };
        let meets = match objective {
            Objective::Min => value <= k,
            Objective::Max => value >= k,
        };
        if !validate_ordering(g, &sigma, paradigm) || !meets {
            bail!("solver returned a witness that fails re-validation");
        }
        record.witness = Some(sigma.seq().iter().map(|v| v + 1).collect());
        record.parents = Some(tree.parents().iter().map(|p| p.map_or(0, |p| p + 1)).collect());
        record.leaves = Some(tree.leaf_count());
        record.internal = Some(tree.internal_count());
    }
    Ok(record)
}
