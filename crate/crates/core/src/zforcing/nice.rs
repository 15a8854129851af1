//! Nice tree decompositions with a rule node below every forget node.

use super::decomposition::TreeDecomposition;
use super::TdError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NiceKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    /// Decides the rules of the vertex forgotten by the parent.
    Rule(usize),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NiceKind,
    /// Sorted bag.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nodes are stored children-first; the last node is the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTd {
    pub nodes: Vec<NiceNode>,
}

impl NiceTd {
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|t| t.bag.len()).max().unwrap_or(1).saturating_sub(1)
    }

    /// Structural checks of the node-type contract.
    pub fn check(&self, n: usize) -> Result<(), String> {
        let mut forgotten = vec![0; n];
        let mut parent_kind = vec![None; self.nodes.len()];
        for (i, t) in self.nodes.iter().enumerate() {
            for &c in &t.children {
                if c >= i {
                    return Err(format!("node {i} has later child {c}"));
                }
                parent_kind[c] = Some(t.kind);
            }
            let child_bag = |j: usize| &self.nodes[t.children[j]].bag;
            match t.kind {
                NiceKind::Leaf => {
                    if !t.bag.is_empty() || !t.children.is_empty() {
                        return Err(format!("leaf {i} malformed"));
                    }
                }
                NiceKind::Introduce(v) => {
                    let mut b = child_bag(0).clone();
                    b.push(v);
                    b.sort_unstable();
                    if t.children.len() != 1 || child_bag(0).contains(&v) || b != t.bag {
                        return Err(format!("introduce {i} malformed"));
                    }
                }
                NiceKind::Forget(v) => {
                    let c = t.children[0];
                    let mut b = t.bag.clone();
                    b.push(v);
                    b.sort_unstable();
                    if t.children.len() != 1 || &b != child_bag(0) {
                        return Err(format!("forget {i} malformed"));
                    }
                    if self.nodes[c].kind != NiceKind::Rule(v) {
                        return Err(format!("forget {i} child is not a rule node"));
                    }
                    forgotten[v] += 1;
                }
                NiceKind::Rule(_) => {
                    if t.children.len() != 1 || child_bag(0) != &t.bag {
                        return Err(format!("rule {i} malformed"));
                    }
                }
                NiceKind::Join => {
                    if t.children.len() != 2 || child_bag(0) != &t.bag || child_bag(1) != &t.bag {
                        return Err(format!("join {i} malformed"));
                    }
                }
            }
        }
        for (i, t) in self.nodes.iter().enumerate() {
            if let NiceKind::Rule(v) = t.kind {
                if parent_kind[i] != Some(NiceKind::Forget(v)) {
                    return Err(format!("rule {i} parent is not forgetting {v}"));
                }
            }
        }
        if !self.nodes[self.root()].bag.is_empty() {
            return Err("root bag not empty".into());
        }
        if forgotten.iter().any(|&c| c != 1) {
            return Err("some vertex is not forgotten exactly once".into());
        }
        Ok(())
    }
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn add(&mut self, kind: NiceKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    fn forget(&mut self, mut top: usize, v: usize) -> usize {
        let bag = self.nodes[top].bag.clone();
        top = self.add(NiceKind::Rule(v), bag.clone(), vec![top]);
        let smaller: Vec<usize> = bag.into_iter().filter(|&w| w != v).collect();
        self.add(NiceKind::Forget(v), smaller, vec![top])
    }

    fn introduce(&mut self, top: usize, v: usize) -> usize {
        let mut bag = self.nodes[top].bag.clone();
        bag.push(v);
        bag.sort_unstable();
        self.add(NiceKind::Introduce(v), bag, vec![top])
    }

    /// Turns the chain ending at `top` into one whose bag is `target`.
    fn morph(&mut self, mut top: usize, target: &[usize]) -> usize {
        let current = self.nodes[top].bag.clone();
        for v in current.iter().copied().filter(|v| !target.contains(v)) {
            top = self.forget(top, v);
        }
        for &v in target.iter().filter(|v| !current.contains(v)) {
            top = self.introduce(top, v);
        }
        top
    }
}

/// Nice form rooted at bag `root`.
pub fn make_nice_rooted(g: &Graph, td: &TreeDecomposition, root: usize) -> Result<NiceTd, TdError> {
    td.validate(g)?;
    if root >= td.bags.len() {
        return Err(TdError::InvalidDecomposition(format!("root {root} out of range")));
    }
    let adj = td.tree_adjacency();
    let mut b = Builder { nodes: Vec::new() };
    // Iterative post-order over the decomposition tree.
    let mut order = Vec::new();
    let mut parent = vec![usize::MAX; td.bags.len()];
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                stack.push(y);
            }
        }
    }
    let mut built = vec![usize::MAX; td.bags.len()];
    for &x in order.iter().rev() {
        let bag = &td.bags[x];
        let subs: Vec<usize> = adj[x]
            .iter()
            .filter(|&&y| parent[y] == x && y != x)
            .map(|&y| {
                let top = built[y];
                b.morph(top, bag)
            })
            .collect();
        let top = match subs.len() {
            0 => {
                let leaf = b.add(NiceKind::Leaf, Vec::new(), Vec::new());
                b.morph(leaf, bag)
            }
            _ => {
                let mut acc = subs[0];
                for &s in &subs[1..] {
                    acc = b.add(NiceKind::Join, bag.clone(), vec![acc, s]);
                }
                acc
            }
        };
        built[x] = top;
    }
    let top = b.morph(built[root], &[]);
    debug_assert_eq!(top, b.nodes.len() - 1);
    let nice = NiceTd { nodes: b.nodes };
    debug_assert_eq!(nice.check(g.n()), Ok(()));
    Ok(nice)
}

pub fn make_nice(g: &Graph, td: &TreeDecomposition) -> Result<NiceTd, TdError> {
    make_nice_rooted(g, td, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{gen_family, Family};
    use crate::zforcing::decomposition::{heuristic_td, min_degree_td};

    #[test]
    fn single_bag_clique() {
        let k3 = gen_family(Family::Complete(3)).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]);
        let nice = make_nice(&k3, &td).unwrap();
        nice.check(3).unwrap();
        let count = |f: fn(&NiceKind) -> bool| nice.nodes.iter().filter(|t| f(&t.kind)).count();
        assert_eq!(count(|k| matches!(k, NiceKind::Introduce(_))), 3);
        assert_eq!(count(|k| matches!(k, NiceKind::Forget(_))), 3);
        assert_eq!(count(|k| matches!(k, NiceKind::Rule(_))), 3);
        assert_eq!(nice.width(), 2);
    }

    #[test]
    fn path_decomposition_of_p4() {
        let p4 = gen_family(Family::Path(4)).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2)]);
        let nice = make_nice(&p4, &td).unwrap();
        nice.check(4).unwrap();
        assert_eq!(nice.width(), 1);
        let nice = make_nice_rooted(&p4, &td, 1).unwrap();
        nice.check(4).unwrap();
    }

    #[test]
    fn rejects_invalid() {
        let p4 = gen_family(Family::Path(4)).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![2, 3]], vec![(0, 1)]);
        assert!(make_nice(&p4, &td).is_err());
    }

    #[test]
    fn joins_appear_for_branching_trees() {
        let g = gen_family(Family::StarOfLadders(2)).unwrap();
        for td in [heuristic_td(&g), min_degree_td(&g)] {
            for root in 0..td.bags.len() {
                let nice = make_nice_rooted(&g, &td, root).unwrap();
                nice.check(g.n()).unwrap();
            }
        }
    }
}
