//! Plain-text formats: graphs, tree decompositions, CNF formulas, set-cover
//! and one-sided Grundy instances, and vertex orderings.
//!
//! Files use 1-based vertex ids and `c` comment lines; everything is 0-based
//! once parsed.

use std::fmt::Write as _;

use thiserror::Error;

use crate::gadgets::{Cnf, GrundyInstance, SetCoverInstance};
use crate::graph::{Graph, Ordering};
use crate::zforcing::TreeDecomposition;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError {
        line,
        message: message.into(),
    })
}

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.first() {
            None => None,
            Some(&"c") => None,
            Some(t) if t.starts_with('#') => None,
            _ => Some((i + 1, toks)),
        }
    })
}

fn num(line: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().or_else(|_| err(line, format!("expected a number, found {tok:?}")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<usize, FormatError> {
    let v = num(line, tok)?;
    if v == 0 || v > n {
        return err(line, format!("vertex {v} outside 1..={n}"));
    }
    Ok(v - 1)
}

/// Header `p <n> <m>` (or `p tw <n> <m>`), then `u v` edge lines.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks[0] == "p" {
            if header.is_some() {
                return err(line, "second header");
            }
            let nums = match toks.len() {
                3 => &toks[1..],
                4 => &toks[2..],
                _ => return err(line, "header must be `p <n> <m>`"),
            };
            header = Some((line, num(line, nums[0])?, num(line, nums[1])?));
            continue;
        }
        let Some((_, n, _)) = header else {
            return err(line, "edge before header");
        };
        if toks.len() != 2 {
            return err(line, "edge lines hold two vertices");
        }
        edges.push((line, vertex(line, toks[0], n)?, vertex(line, toks[1], n)?));
    }
    let Some((hline, n, m)) = header else {
        return err(0, "missing header");
    };
    if edges.len() != m {
        return err(hline, format!("header announces {m} edges, found {}", edges.len()));
    }
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&(_, u, v)| (u, v)).collect();
    Graph::new(n, &pairs).or_else(|e| {
        let at = match e {
            crate::graph::GraphError::SelfLoop(v) => edges.iter().find(|x| x.1 == v && x.2 == v).map(|x| x.0),
            crate::graph::GraphError::DuplicateEdge(u, v) => edges
                .iter()
                .filter(|x| (x.1, x.2) == (u, v) || (x.1, x.2) == (v, u))
                .nth(1)
                .map(|x| x.0),
            _ => None,
        };
        err(at.unwrap_or(hline), e.to_string())
    })
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(s, "{} {}", u + 1, v + 1).unwrap();
    }
    s
}

/// Header `s td <bags> <width+1> <n>`, bag lines `b <id> <v...>`, then tree
/// edges `<id> <id>`; bag ids are 1-based.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, FormatError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (line, toks) in content_lines(text) {
        match toks[0] {
            "s" => {
                if toks.len() != 5 || toks[1] != "td" {
                    return err(line, "header must be `s td <bags> <width+1> <n>`");
                }
                let nb = num(line, toks[2])?;
                header = Some((line, nb, num(line, toks[3])?, num(line, toks[4])?));
                bags = vec![None; nb];
            }
            "b" => {
                let Some((_, nb, _, n)) = header else {
                    return err(line, "bag before header");
                };
                if toks.len() < 2 {
                    return err(line, "bag line needs an id");
                }
                let id = num(line, toks[1])?;
                if id == 0 || id > nb {
                    return err(line, format!("bag id {id} outside 1..={nb}"));
                }
                if bags[id - 1].is_some() {
                    return err(line, format!("bag {id} given twice"));
                }
                let vs = toks[2..].iter().map(|t| vertex(line, t, n)).collect::<Result<_, _>>()?;
                bags[id - 1] = Some(vs);
            }
            _ => {
                let Some((_, nb, _, _)) = header else {
                    return err(line, "tree edge before header");
                };
                if toks.len() != 2 {
                    return err(line, "tree edge lines hold two bag ids");
                }
                let a = num(line, toks[0])?;
                let b = num(line, toks[1])?;
                if a == 0 || a > nb || b == 0 || b > nb {
                    return err(line, "bag id out of range");
                }
                edges.push((a - 1, b - 1));
            }
        }
    }
    let Some((hline, _, width1, _)) = header else {
        return err(0, "missing header");
    };
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or(FormatError { line: hline, message: format!("bag {} missing", i + 1) }))
        .collect::<Result<_, _>>()?;
    let td = TreeDecomposition::new(bags, edges);
    if td.width() + 1 != width1 {
        return err(hline, format!("header says width {}, bags give {}", width1 as isize - 1, td.width()));
    }
    Ok(td)
}

pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut s = format!("s td {} {} {}\n", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        write!(s, "b {}", i + 1).unwrap();
        for v in bag {
            write!(s, " {}", v + 1).unwrap();
        }
        s.push('\n');
    }
    for &(a, b) in &td.edges {
        writeln!(s, "{} {}", a + 1, b + 1).unwrap();
    }
    s
}

/// DIMACS `p cnf <vars> <clauses>` with 0-terminated clause lines.
pub fn parse_cnf(text: &str) -> Result<Cnf, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks[0] == "p" {
            if toks.len() != 4 || toks[1] != "cnf" {
                return err(line, "header must be `p cnf <vars> <clauses>`");
            }
            header = Some((line, num(line, toks[2])?, num(line, toks[3])?));
            continue;
        }
        let Some((_, vars, _)) = header else {
            return err(line, "clause before header");
        };
        let mut lits = Vec::new();
        let mut closed = false;
        for t in &toks {
            let l: i32 = t.parse().or_else(|_| err(line, format!("bad literal {t:?}")))?;
            if l == 0 {
                closed = true;
                break;
            }
            if l.unsigned_abs() as usize > vars {
                return err(line, format!("literal {l} uses a variable beyond {vars}"));
            }
            lits.push(l);
        }
        if !closed {
            return err(line, "clause must end with 0");
        }
        clauses.push(lits);
    }
    let Some((hline, vars, count)) = header else {
        return err(0, "missing header");
    };
    if clauses.len() != count {
        return err(hline, format!("header announces {count} clauses, found {}", clauses.len()));
    }
    Ok(Cnf { vars, clauses })
}

pub fn write_cnf(cnf: &Cnf) -> String {
    let mut s = format!("p cnf {} {}\n", cnf.vars, cnf.clauses.len());
    for c in &cnf.clauses {
        for l in c {
            write!(s, "{l} ").unwrap();
        }
        s.push_str("0\n");
    }
    s
}

/// `p setcover <elements> <sets>`, then one line of 1-based elements per set.
pub fn parse_set_cover(text: &str) -> Result<SetCoverInstance, FormatError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut sets = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks[0] == "p" {
            if toks.len() != 4 || toks[1] != "setcover" {
                return err(line, "header must be `p setcover <elements> <sets>`");
            }
            header = Some((line, num(line, toks[2])?, num(line, toks[3])?));
            continue;
        }
        let Some((_, u, _)) = header else {
            return err(line, "set before header");
        };
        sets.push(toks.iter().map(|t| vertex(line, t, u)).collect::<Result<Vec<_>, _>>()?);
    }
    let Some((hline, universe, count)) = header else {
        return err(0, "missing header");
    };
    if sets.len() != count {
        return err(hline, format!("header announces {count} sets, found {}", sets.len()));
    }
    Ok(SetCoverInstance { universe, sets })
}

pub fn write_set_cover(inst: &SetCoverInstance) -> String {
    let mut s = format!("p setcover {} {}\n", inst.universe, inst.sets.len());
    for set in &inst.sets {
        let line: Vec<String> = set.iter().map(|e| (e + 1).to_string()).collect();
        writeln!(s, "{}", line.join(" ")).unwrap();
    }
    s
}

/// `p grundy <|X|> <|Y|> <m>`, then edge lines `<x> <y>`.
pub fn parse_grundy(text: &str) -> Result<GrundyInstance, FormatError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, toks) in content_lines(text) {
        if toks[0] == "p" {
            if toks.len() != 5 || toks[1] != "grundy" {
                return err(line, "header must be `p grundy <x> <y> <m>`");
            }
            header = Some((line, num(line, toks[2])?, num(line, toks[3])?, num(line, toks[4])?));
            continue;
        }
        let Some((_, x, y, _)) = header else {
            return err(line, "edge before header");
        };
        if toks.len() != 2 {
            return err(line, "edge lines hold an x and a y vertex");
        }
        edges.push((vertex(line, toks[0], x)?, vertex(line, toks[1], y)?));
    }
    let Some((hline, x, y, m)) = header else {
        return err(0, "missing header");
    };
    if edges.len() != m {
        return err(hline, format!("header announces {m} edges, found {}", edges.len()));
    }
    Ok(GrundyInstance { x, y, edges })
}

pub fn write_grundy(inst: &GrundyInstance) -> String {
    let mut s = format!("p grundy {} {} {}\n", inst.x, inst.y, inst.edges.len());
    for &(a, b) in &inst.edges {
        writeln!(s, "{} {}", a + 1, b + 1).unwrap();
    }
    s
}

/// Whitespace or comma separated vertex list. A list containing `0` is read
/// as 0-based, otherwise as 1-based.
pub fn parse_ordering(text: &str, n: usize) -> Result<Ordering, FormatError> {
    let ids: Vec<usize> = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| num(1, t))
        .collect::<Result<_, _>>()?;
    let zero_based = ids.contains(&0);
    let seq: Vec<usize> = if zero_based {
        ids
    } else {
        ids.into_iter().map(|v| v - 1).collect()
    };
    if seq.len() != n {
        return err(1, format!("ordering lists {} vertices, graph has {n}", seq.len()));
    }
    Ordering::new(seq).or_else(|e| err(1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{gen_family, Family};
    use crate::zforcing::heuristic_td;

    #[test]
    fn graph_round_trip() {
        let g = gen_family(Family::StarOfLadders(2)).unwrap();
        let back = parse_graph(&write_graph(&g)).unwrap();
        assert_eq!(back.edges(), g.edges());
        let pace = "c pace style\np tw 3 2\n1 2\n2 3\n";
        assert_eq!(parse_graph(pace).unwrap().m(), 2);
    }

    #[test]
    fn graph_errors_have_lines() {
        let e = parse_graph("p 3 2\n1 2\n2 9\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_graph("p 3 2\n1 2\n2 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_graph("p 4 2\n1 2\n3 4\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(parse_graph("1 2\n").is_err());
    }

    #[test]
    fn td_round_trip() {
        let g = gen_family(Family::Cycle(6)).unwrap();
        let td = heuristic_td(&g);
        let back = parse_td(&write_td(&td, 6)).unwrap();
        assert_eq!(back, td);
        back.validate(&g).unwrap();
        let e = parse_td("s td 1 3 3\nb 1 1 2\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn instance_round_trips() {
        let cnf = Cnf {
            vars: 3,
            clauses: vec![vec![1, -2, 3], vec![-1, 2, 3]],
        };
        assert_eq!(parse_cnf(&write_cnf(&cnf)).unwrap(), cnf);
        assert_eq!(parse_cnf("p cnf 2 1\n1 2\n").unwrap_err().line, 2);
        let sc = SetCoverInstance {
            universe: 3,
            sets: vec![vec![0, 1], vec![1, 2]],
        };
        assert_eq!(parse_set_cover(&write_set_cover(&sc)).unwrap(), sc);
        let gr = GrundyInstance {
            x: 2,
            y: 2,
            edges: vec![(0, 0), (1, 1)],
        };
        assert_eq!(parse_grundy(&write_grundy(&gr)).unwrap(), gr);
    }

    #[test]
    fn orderings() {
        assert_eq!(parse_ordering("0 1 3 2", 4).unwrap().seq(), &[0, 1, 3, 2]);
        assert_eq!(parse_ordering("1,2,4,3", 4).unwrap().seq(), &[0, 1, 3, 2]);
        assert!(parse_ordering("0 1 1 2", 4).is_err());
        assert!(parse_ordering("0 1 2", 4).is_err());
    }
}
