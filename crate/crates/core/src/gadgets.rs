//! Graph families from the examples and the hardness reductions.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("assumption violated: {0}")]
    AssumptionViolated(String),
    #[error("malformed clause {index}: {reason}")]
    MalformedClause { index: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `t` triangles chained at shared vertices; `2t + 1` vertices.
    PathOfTriangles(usize),
    /// A centre joined to the first rung of `k` ladders with `k` rungs each.
    StarOfLadders(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `K_{1,p}` with centre 0.
    Star(usize),
}

impl Family {
    pub const NAMES: [&'static str; 6] = [
        "path_of_triangles",
        "star_of_ladders",
        "path",
        "cycle",
        "complete",
        "star",
    ];

    pub fn from_name(name: &str, p: usize) -> Option<Family> {
        Some(match name {
            "path_of_triangles" => Family::PathOfTriangles(p),
            "star_of_ladders" => Family::StarOfLadders(p),
            "path" => Family::Path(p),
            "cycle" => Family::Cycle(p),
            "complete" => Family::Complete(p),
            "star" => Family::Star(p),
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, p) = match *self {
            Family::PathOfTriangles(p) => ("path_of_triangles", p),
            Family::StarOfLadders(p) => ("star_of_ladders", p),
            Family::Path(p) => ("path", p),
            Family::Cycle(p) => ("cycle", p),
            Family::Complete(p) => ("complete", p),
            Family::Star(p) => ("star", p),
        };
        write!(f, "{name}({p})")
    }
}

pub fn gen_family(family: Family) -> Result<Graph, GadgetError> {
    let bad = |msg: &str| Err(GadgetError::BadParameter(format!("{family}: {msg}")));
    let mut edges = Vec::new();
    let n = match family {
        Family::PathOfTriangles(t) => {
            if t == 0 {
                return bad("need at least one triangle");
            }
            for i in 0..t {
                let (a, b, c) = (2 * i, 2 * i + 1, 2 * i + 2);
                edges.extend([(a, b), (a, c), (b, c)]);
            }
            2 * t + 1
        }
        Family::StarOfLadders(k) => {
            if k < 2 {
                return bad("need at least two ladders");
            }
            let at = |j: usize, rung: usize, side: usize| 1 + j * 2 * k + 2 * rung + side;
            for j in 0..k {
                edges.push((0, at(j, 0, 0)));
                edges.push((0, at(j, 0, 1)));
                for rung in 0..k {
                    edges.push((at(j, rung, 0), at(j, rung, 1)));
                    if rung + 1 < k {
                        edges.push((at(j, rung, 0), at(j, rung + 1, 0)));
                        edges.push((at(j, rung, 1), at(j, rung + 1, 1)));
                    }
                }
            }
            2 * k * k + 1
        }
        Family::Path(n) => {
            if n == 0 {
                return bad("empty path");
            }
            edges.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        Family::Cycle(n) => {
            if n < 3 {
                return bad("a cycle needs three vertices");
            }
            edges.extend((1..n).map(|i| (i - 1, i)));
            edges.push((0, n - 1));
            n
        }
        Family::Complete(n) => {
            if n == 0 {
                return bad("empty graph");
            }
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            n
        }
        Family::Star(p) => {
            if p == 0 {
                return bad("need at least one leaf");
            }
            edges.extend((1..=p).map(|v| (0, v)));
            p + 1
        }
    };
    Ok(Graph::new(n, &edges)?)
}

/// What a gadget vertex stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Set-cover set vertex, clique side.
    SetVertex(usize),
    /// Set-cover element vertex, independent side.
    Element(usize),
    /// Grundy `X` vertex, clique side.
    XVertex(usize),
    /// Grundy `Y` vertex, independent side.
    YVertex(usize),
    /// Literal of variable `var` (0-based).
    Literal { var: usize, positive: bool },
    Clause(usize),
    B1,
    B2,
    R,
    Q { clause: usize, side: u8 },
    /// Pendant leaf attached to the given vertex.
    Pendant(usize),
    /// Vertex of the path appended at `r`, counted from `r`.
    PathVertex(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::SetVertex(i) => write!(f, "c{}", i + 1),
            Role::Element(j) => write!(f, "a{}", j + 1),
            Role::XVertex(i) => write!(f, "x{}", i + 1),
            Role::YVertex(j) => write!(f, "y{}", j + 1),
            Role::Literal { var, positive: true } => write!(f, "x{}", var + 1),
            Role::Literal { var, positive: false } => write!(f, "~x{}", var + 1),
            Role::Clause(i) => write!(f, "clause{}", i + 1),
            Role::B1 => write!(f, "b1"),
            Role::B2 => write!(f, "b2"),
            Role::R => write!(f, "r"),
            Role::Q { clause, side } => write!(f, "q{side}_{}", clause + 1),
            Role::Pendant(v) => write!(f, "pendant@{v}"),
            Role::PathVertex(i) => write!(f, "path{}", i + 1),
        }
    }
}

/// How the source parameter maps onto the graph parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Translation {
    /// A cover with at most `l` sets iff an F-tree with at most `l` internal vertices.
    CoverToMinInternal,
    /// A one-sided sequence of length `k` iff an F-tree with at least `k + 1` internal vertices.
    SequenceToMaxInternal,
    /// Satisfiable iff an LBFS F-tree with exactly `k` internal vertices.
    SatToExactInternal { k: usize },
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Translation::CoverToMinInternal => write!(f, "cover of size <= l <=> F-tree with <= l internal vertices"),
            Translation::SequenceToMaxInternal => {
                write!(f, "one-sided sequence of length k <=> F-tree with >= k+1 internal vertices")
            }
            Translation::SatToExactInternal { k } => {
                write!(f, "satisfiable <=> LBFS F-tree with exactly {k} internal vertices")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub translation: Translation,
}

impl ReductionOutput {
    pub fn vertices_with(&self, pred: impl Fn(&Role) -> bool) -> Vec<usize> {
        (0..self.roles.len()).filter(|&v| pred(&self.roles[v])).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
}

/// Bipartite graph with sides `0..x` and `0..y`; edges are `(x_i, y_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrundyInstance {
    pub x: usize,
    pub y: usize,
    pub edges: Vec<(usize, usize)>,
}

/// Clauses of signed 1-based literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn is_satisfiable(&self) -> bool {
        (0u64..1 << self.vars).any(|a| {
            self.clauses.iter().all(|c| {
                c.iter().any(|&l| {
                    let v = l.unsigned_abs() as usize - 1;
                    (a >> v & 1 == 1) == (l > 0)
                })
            })
        })
    }
}

/// Sets become a clique, elements an independent set.
pub fn set_cover_to_split(inst: &SetCoverInstance) -> Result<ReductionOutput, GadgetError> {
    let p = inst.sets.len();
    let u = inst.universe;
    let violated = |msg: String| Err(GadgetError::AssumptionViolated(msg));
    if u == 0 || p == 0 {
        return violated("empty universe or family".into());
    }
    let mut count = vec![0; u];
    for (i, s) in inst.sets.iter().enumerate() {
        for &e in s {
            if e >= u {
                return violated(format!("set {} mentions element {} outside the universe", i + 1, e + 1));
            }
            count[e] += 1;
        }
    }
    for (e, &c) in count.iter().enumerate() {
        if c == 0 {
            return violated(format!("element {} is in no set", e + 1));
        }
        if c == p {
            return violated(format!("element {} is in every set", e + 1));
        }
    }
    let mut edges = Vec::new();
    for i in 0..p {
        edges.extend((i + 1..p).map(|j| (i, j)));
        let mut s = inst.sets[i].clone();
        s.sort_unstable();
        s.dedup();
        edges.extend(s.into_iter().map(|e| (i, p + e)));
    }
    let roles = (0..p).map(Role::SetVertex).chain((0..u).map(Role::Element)).collect();
    Ok(ReductionOutput {
        graph: Graph::new(p + u, &edges)?,
        roles,
        translation: Translation::CoverToMinInternal,
    })
}

/// Adds `r` to `X` and turns `X` into a clique. Vertex ids: `X` first, then
/// `r`, then `Y`.
pub fn grundy_instance_to_split(inst: &GrundyInstance) -> Result<ReductionOutput, GadgetError> {
    let (nx, ny) = (inst.x, inst.y);
    let violated = |msg: String| Err(GadgetError::AssumptionViolated(msg));
    let mut deg_x = vec![0; nx];
    let mut deg_y = vec![0; ny];
    for &(a, b) in &inst.edges {
        if a >= nx || b >= ny {
            return violated(format!("edge x{}-y{} out of range", a + 1, b + 1));
        }
        deg_x[a] += 1;
        deg_y[b] += 1;
    }
    if let Some(i) = deg_x.iter().position(|&d| d == 0) {
        return violated(format!("x{} is isolated", i + 1));
    }
    if let Some(j) = deg_y.iter().position(|&d| d == 0) {
        return violated(format!("y{} is isolated, so the split graph is disconnected", j + 1));
    }
    let r = nx;
    let mut edges = Vec::new();
    for a in 0..=nx {
        edges.extend((a + 1..=nx).map(|b| (a, b)));
    }
    edges.extend(inst.edges.iter().map(|&(a, b)| (a, nx + 1 + b)));
    let mut roles: Vec<Role> = (0..nx).map(Role::XVertex).collect();
    roles.push(Role::R);
    roles.extend((0..ny).map(Role::YVertex));
    debug_assert_eq!(roles[r], Role::R);
    Ok(ReductionOutput {
        graph: Graph::new(nx + 1 + ny, &edges)?,
        roles,
        translation: Translation::SequenceToMaxInternal,
    })
}

/// Longest sequence of `X` vertices in which every member has a neighbour
/// not adjacent to any earlier member.
pub fn longest_one_sided_sequence(inst: &GrundyInstance) -> Vec<usize> {
    let nbr: Vec<u64> = (0..inst.x)
        .map(|a| {
            inst.edges
                .iter()
                .filter(|e| e.0 == a)
                .fold(0u64, |m, e| m | 1 << e.1)
        })
        .collect();
    fn go(nbr: &[u64], used: u64, covered: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        if cur.len() > best.len() {
            *best = cur.clone();
        }
        for a in 0..nbr.len() {
            if used >> a & 1 == 0 && nbr[a] & !covered != 0 {
                cur.push(a);
                go(nbr, used | 1 << a, covered | nbr[a], cur, best);
                cur.pop();
            }
        }
    }
    let mut best = Vec::new();
    go(&nbr, 0, 0, &mut Vec::new(), &mut best);
    best
}

/// Literal, clause, `b`/`r`, `q` and pendant gadget; for `k > 3` a path of
/// `k - 2` vertices hangs off `r`.
pub fn sat3_to_weakly_chordal(cnf: &Cnf, k: usize) -> Result<ReductionOutput, GadgetError> {
    if k < 3 {
        return Err(GadgetError::BadParameter(format!("k = {k} must be at least 3")));
    }
    for (index, c) in cnf.clauses.iter().enumerate() {
        let bad = |reason: String| Err(GadgetError::MalformedClause { index: index + 1, reason });
        if c.len() != 3 {
            return bad(format!("{} literals instead of 3", c.len()));
        }
        for &l in c {
            if l == 0 || l.unsigned_abs() as usize > cnf.vars {
                return bad(format!("literal {l} out of range"));
            }
        }
        let mut vars: Vec<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.len() != 3 {
            return bad("literals must use three distinct variables".into());
        }
    }
    let nv = cnf.vars;
    let nc = cnf.clauses.len();
    let lit = |l: i32| 2 * (l.unsigned_abs() as usize - 1) + (l < 0) as usize;
    let clause = |i: usize| 2 * nv + i;
    let b1 = 2 * nv + nc;
    let b2 = b1 + 1;
    let r = b1 + 2;
    let q = |i: usize, side: usize| r + 1 + 2 * i + side;
    let first_pendant = r + 1 + 2 * nc;
    let first_path = first_pendant + 6;
    let path_len = if k > 3 { k - 2 } else { 0 };
    let n = first_path + path_len;

    let mut roles = Vec::with_capacity(n);
    for var in 0..nv {
        roles.push(Role::Literal { var, positive: true });
        roles.push(Role::Literal { var, positive: false });
    }
    roles.extend((0..nc).map(Role::Clause));
    roles.extend([Role::B1, Role::B2, Role::R]);
    for clause in 0..nc {
        roles.push(Role::Q { clause, side: 1 });
        roles.push(Role::Q { clause, side: 2 });
    }
    for owner in [r, b1, b2] {
        roles.extend([Role::Pendant(owner), Role::Pendant(owner)]);
    }
    roles.extend((0..path_len).map(Role::PathVertex));

    let mut edges = Vec::new();
    for a in 0..2 * nv {
        for b in a + 1..2 * nv {
            if a / 2 != b / 2 {
                edges.push((a, b));
            }
        }
    }
    for (i, c) in cnf.clauses.iter().enumerate() {
        let inside: Vec<usize> = c.iter().map(|&l| lit(l)).collect();
        edges.extend((0..2 * nv).filter(|x| !inside.contains(x)).map(|x| (x, clause(i))));
        edges.push((q(i, 0), clause(i)));
        edges.push((q(i, 0), b1));
        edges.push((q(i, 1), clause(i)));
        edges.push((q(i, 1), b2));
    }
    for x in 0..2 * nv + nc {
        edges.extend([(x, b1), (x, b2), (x, r)]);
    }
    edges.extend([(b1, r), (b2, r)]);
    for (i, owner) in [r, r, b1, b1, b2, b2].into_iter().enumerate() {
        edges.push((owner, first_pendant + i));
    }
    for i in 0..path_len {
        let prev = if i == 0 { r } else { first_path + i - 1 };
        edges.push((prev, first_path + i));
    }
    Ok(ReductionOutput {
        graph: Graph::new(n, &edges)?,
        roles,
        translation: Translation::SatToExactInternal { k },
    })
}

/// Whether `(clique, rest)` is a split partition of `g`.
pub fn is_split_partition(g: &Graph, clique: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in clique {
        inside[v] = true;
    }
    g.edges().iter().all(|&(u, v)| inside[u] || inside[v])
        && clique
            .iter()
            .enumerate()
            .all(|(i, &u)| clique[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}
