//! Browser bindings: solve one leaf or internal-vertex question, list the
//! exact leaf ranges, and check a hand-typed ordering.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use leafsearch::formats::{parse_graph, parse_ordering, write_graph};
use leafsearch::gadgets::{gen_family, Family};
use leafsearch::gs::{max_leaf_gs, min_leaf_gs};
use leafsearch::internal::{bfs_internal_xp, gs_max_internal_xp, gs_min_internal_xp};
use leafsearch::oracle::brute_leaf_range;
use leafsearch::{ftree_from_ordering, layered, validate_ordering, Decision, Graph, Objective, Ordering, Paradigm};

/// Largest graph sent to the exhaustive search from the page.
pub const BROWSER_ORACLE_LIMIT: usize = 10;

fn graph(text: &str) -> Result<Graph, String> {
    parse_graph(text).map_err(|e| e.to_string())
}

fn paradigm(name: &str) -> Result<Paradigm, String> {
    name.parse()
}

fn tree_json(g: &Graph, sigma: &Ordering) -> Value {
    let t = ftree_from_ordering(g, sigma).expect("validated ordering");
    json!({
        "ordering": sigma.seq().iter().map(|v| v + 1).collect::<Vec<_>>(),
        "parents": t.parents().iter().map(|p| p.map_or(0, |p| p + 1)).collect::<Vec<_>>(),
        "leaves": t.leaf_count(),
        "internal": t.internal_count(),
    })
}

pub fn family_text(name: &str, p: usize) -> Result<String, String> {
    let f = Family::from_name(name, p).ok_or_else(|| format!("unknown family {name:?}"))?;
    Ok(write_graph(&gen_family(f).map_err(|e| e.to_string())?))
}

pub fn solve_text(graph_text: &str, paradigm_name: &str, problem: &str, k: usize) -> Result<String, String> {
    let g = graph(graph_text)?;
    let p = paradigm(paradigm_name)?;
    let n = g.n();
    let small = n <= BROWSER_ORACLE_LIMIT;
    let oracle = |pick: fn(usize, &leafsearch::oracle::LeafRange, usize) -> (bool, Ordering)| {
        if !small {
            return Err(format!("exhaustive search is limited to {BROWSER_ORACLE_LIMIT} vertices here"));
        }
        let (yes, w) = pick(n, &brute_leaf_range(&g, p), k);
        Ok(if yes { Decision::yes(w) } else { Decision::no() })
    };
    let (algo, d): (&str, Decision) = match (p, problem) {
        (_, "min-leaf" | "max-leaf") if n < 2 => ("oracle", Decision::yes(Ordering::identity(1))),
        (Paradigm::Bfs | Paradigm::Lbfs, "min-leaf") => {
            ("layered dp", layered::solve(&g, p, Objective::Min, k).map_err(|e| e.to_string())?)
        }
        (Paradigm::Bfs | Paradigm::Lbfs, "max-leaf") => {
            ("layered dp", layered::solve(&g, p, Objective::Max, k).map_err(|e| e.to_string())?)
        }
        (Paradigm::Gs, "min-leaf") => ("forcing-set dp", min_leaf_gs(&g, k, None).map_err(|e| e.to_string())?),
        (Paradigm::Gs, "max-leaf") => ("connected dominating set", max_leaf_gs(&g, k).map_err(|e| e.to_string())?),
        (Paradigm::Gs, "min-internal") => ("xp", gs_min_internal_xp(&g, k)),
        (Paradigm::Gs, "max-internal") => ("xp", gs_max_internal_xp(&g, k)),
        (Paradigm::Bfs, "min-internal") => ("xp", bfs_internal_xp(&g, k, Objective::Min)),
        (Paradigm::Bfs, "max-internal") => ("xp", bfs_internal_xp(&g, k, Objective::Max)),
        (Paradigm::Lbfs, "min-internal") => (
            "exhaustive",
            oracle(|n, r, k| (n - r.max <= k, r.max_witness.clone()))?,
        ),
        (Paradigm::Lbfs, "max-internal") => (
            "exhaustive",
            oracle(|n, r, k| (n - r.min >= k, r.min_witness.clone()))?,
        ),
        (_, other) => return Err(format!("unknown problem {other:?}")),
    };
    let mut out = json!({ "decision": if d.yes { "yes" } else { "no" }, "algorithm": algo });
    if let Some(w) = d.witness.filter(|_| d.yes) {
        out["tree"] = tree_json(&g, &w);
    }
    Ok(out.to_string())
}

pub fn ranges_text(graph_text: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    if g.n() > BROWSER_ORACLE_LIMIT {
        return Err(format!("exhaustive search is limited to {BROWSER_ORACLE_LIMIT} vertices here"));
    }
    let rows: Vec<Value> = Paradigm::ALL
        .iter()
        .map(|&p| {
            let r = brute_leaf_range(&g, p);
            json!({
                "paradigm": p.to_string(),
                "min": r.min,
                "max": r.max,
                "fewest": tree_json(&g, &r.min_witness),
                "most": tree_json(&g, &r.max_witness),
            })
        })
        .collect();
    Ok(Value::Array(rows).to_string())
}

pub fn check_text(graph_text: &str, ordering: &str, paradigm_name: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    let p = paradigm(paradigm_name)?;
    let sigma = parse_ordering(ordering, g.n()).map_err(|e| e.to_string())?;
    if !validate_ordering(&g, &sigma, p) {
        return Ok(json!({ "valid": false }).to_string());
    }
    Ok(json!({ "valid": true, "tree": tree_json(&g, &sigma) }).to_string())
}

#[wasm_bindgen]
pub fn family(name: &str, p: usize) -> Result<String, JsError> {
    family_text(name, p).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn solve(graph_text: &str, paradigm: &str, problem: &str, k: usize) -> Result<String, JsError> {
    solve_text(graph_text, paradigm, problem, k).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn leaf_ranges(graph_text: &str) -> Result<String, JsError> {
    ranges_text(graph_text).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn check(graph_text: &str, ordering: &str, paradigm: &str) -> Result<String, JsError> {
    check_text(graph_text, ordering, paradigm).map_err(|e| JsError::new(&e))
}
