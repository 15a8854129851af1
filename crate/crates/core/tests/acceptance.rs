mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use leafsearch::gadgets::{
    gen_family, grundy_instance_to_split, is_split_partition, longest_one_sided_sequence,
    sat3_to_weakly_chordal, set_cover_to_split, Cnf, Family, Role,
};
use leafsearch::gs::pathdecomp_from_gs;
use leafsearch::internal::{
    bfs_internal_xp, build_wcs_circuit, counterexample_graph, counterexample_reference, eval_wcs,
    gs_max_internal_xp, gs_min_internal_xp, plus_from_prefix, COUNTEREXAMPLE_S,
};
use leafsearch::layered::{optimum, solve};
use leafsearch::oracle::{
    brute_leaf_range, brute_longest_zsequence, brute_min_cds, brute_min_zstar, brute_spanning_leaf_range,
    find_internal_between, is_weakly_chordal,
};
use leafsearch::pool::{exhaustive_pool, random_pool, random_pool_density};
use leafsearch::zforcing::{make_nice, make_nice_rooted, min_degree_td, heuristic_td, min_zstar_tw_nice};
use leafsearch::{
    all_orderings, ftree_from_ordering, ordering_bandwidth, validate_ordering, FTree, Graph, Objective,
    Ordering, Paradigm,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn leaves(g: &Graph, sigma: &Ordering) -> usize {
    ftree_from_ordering(g, sigma).unwrap().leaf_count()
}

fn layered_vs_brute() -> Outcome {
    let mut pool = exhaustive_pool(2, 7);
    pool.extend(random_pool(8, 8, 500, 0x1a7e));
    let mut calls = 0;
    for g in &pool {
        for p in [Paradigm::Bfs, Paradigm::Lbfs] {
            let r = brute_leaf_range(g, p);
            for k in 1..=g.n() {
                for obj in [Objective::Min, Objective::Max] {
                    let d = solve(g, p, obj, k).map_err(|e| e.to_string())?;
                    let expect = match obj {
                        Objective::Min => r.min <= k,
                        Objective::Max => r.max >= k,
                    };
                    ensure!(d.yes == expect, "{p} {obj} k={k} on {:?}", g.edges());
                    if let Some(w) = &d.witness {
                        let l = leaves(g, w);
                        ensure!(validate_ordering(g, w, p), "invalid witness on {:?}", g.edges());
                        ensure!(
                            if obj == Objective::Min { l <= k } else { l >= k },
                            "witness has {l} leaves for {obj} k={k}"
                        );
                    }
                    calls += 1;
                }
            }
        }
    }
    Ok(format!("{} graphs, {calls} decisions", pool.len()))
}

fn gs_triangle() -> Outcome {
    let mut pool = exhaustive_pool(2, 7);
    pool.extend(random_pool(8, 8, 500, 0x1a7e));
    for g in &pool {
        let n = g.n();
        let via_search = brute_leaf_range(g, Paradigm::Gs).min;
        let via_forcing = brute_min_zstar(g).0.len();
        let via_sequence = n - brute_longest_zsequence(g).len();
        ensure!(
            via_search == via_forcing && via_forcing == via_sequence,
            "{via_search}/{via_forcing}/{via_sequence} on {:?}",
            g.edges()
        );
    }
    Ok(format!("{} graphs", pool.len()))
}

fn zstar_treewidth() -> Outcome {
    let pool = random_pool_density(6, 9, 300, 0x5eed, 0.2, 0.45);
    for g in &pool {
        let expect = brute_min_zstar(g).0.len();
        let first = make_nice(g, &heuristic_td(g)).map_err(|e| e.to_string())?;
        let td2 = min_degree_td(g);
        let second = (0..td2.bags.len())
            .rev()
            .map(|r| make_nice_rooted(g, &td2, r).unwrap())
            .find(|t| *t != first)
            .ok_or_else(|| format!("no second decomposition for {:?}", g.edges()))?;
        let a = min_zstar_tw_nice(g, &first, None).map_err(|e| e.to_string())?.0;
        let b = min_zstar_tw_nice(g, &second, None).map_err(|e| e.to_string())?.0;
        ensure!(a == expect && b == expect, "{a}/{b} vs {expect} on {:?}", g.edges());
    }
    Ok(format!("{} graphs, n 6..=9", pool.len()))
}

fn max_leaf_equivalence() -> Outcome {
    let pool = exhaustive_pool(1, 7);
    for g in &pool {
        let gs = brute_leaf_range(g, Paradigm::Gs).max;
        let st = brute_spanning_leaf_range(g).max;
        let cds = g.n() - brute_min_cds(g).len();
        ensure!(gs == st && st == cds, "{gs}/{st}/{cds} on {:?}", g.edges());
    }
    Ok(format!("{} graphs", pool.len()))
}

fn figure_families() -> Outcome {
    for t in [2, 3, 4] {
        let g = gen_family(Family::PathOfTriangles(t)).unwrap();
        let st = brute_spanning_leaf_range(&g).min;
        let bfs = brute_leaf_range(&g, Paradigm::Bfs).min;
        ensure!(st == 1, "path_of_triangles({t}) spanning min {st}");
        ensure!(bfs >= g.n().div_ceil(2), "path_of_triangles({t}) BFS min {bfs}");
    }
    for k in [2, 3] {
        let g = gen_family(Family::StarOfLadders(k)).unwrap();
        let st = brute_spanning_leaf_range(&g).max;
        let bfs = optimum(&g, Paradigm::Bfs, Objective::Max).map_err(|e| e.to_string())?;
        ensure!(st == k * k, "star_of_ladders({k}) spanning max {st}");
        ensure!(bfs <= 3 * k, "star_of_ladders({k}) BFS max {bfs}");
    }
    Ok("t = 2, 3, 4 and k = 2, 3".into())
}

fn width_bounds() -> Outcome {
    let pool = exhaustive_pool(2, 6);
    let mut orderings = 0;
    for g in &pool {
        for sigma in all_orderings(g, Paradigm::Bfs) {
            let k = leaves(g, &sigma);
            ensure!(ordering_bandwidth(g, &sigma) <= k, "bandwidth above {k} for {sigma:?}");
            orderings += 1;
        }
        for sigma in all_orderings(g, Paradigm::Gs) {
            let pd = pathdecomp_from_gs(g, &sigma).map_err(|e| e.to_string())?;
            ensure!(pd.is_valid(g), "invalid path decomposition for {sigma:?}");
            ensure!(pd.width() <= leaves(g, &sigma), "width above leaves for {sigma:?}");
            orderings += 1;
        }
    }
    for n in [3, 4, 5] {
        let g = gen_family(Family::Complete(n)).unwrap();
        for sigma in all_orderings(&g, Paradigm::Gs) {
            let w = pathdecomp_from_gs(&g, &sigma).map_err(|e| e.to_string())?.width();
            ensure!(w == n - 1, "K_{n} width {w}");
        }
    }
    Ok(format!("{orderings} orderings"))
}

fn xp_solvers() -> Outcome {
    let pool = exhaustive_pool(2, 7);
    for g in &pool {
        let n = g.n();
        let gs = brute_leaf_range(g, Paradigm::Gs);
        let bfs = brute_leaf_range(g, Paradigm::Bfs);
        for k in 1..=n {
            ensure!(gs_min_internal_xp(g, k).yes == (n - gs.max <= k), "gs min k={k} on {:?}", g.edges());
            ensure!(gs_max_internal_xp(g, k).yes == (n - gs.min >= k), "gs max k={k} on {:?}", g.edges());
        }
        for k in 1..=3.min(n) {
            ensure!(
                bfs_internal_xp(g, k, Objective::Min).yes == (n - bfs.max <= k),
                "bfs min k={k} on {:?}",
                g.edges()
            );
            ensure!(
                bfs_internal_xp(g, k, Objective::Max).yes == (n - bfs.min >= k),
                "bfs max k={k} on {:?}",
                g.edges()
            );
            let circuit = eval_wcs(&build_wcs_circuit(g, k)).is_some();
            ensure!(circuit == (n - gs.min >= k), "circuit k={k} on {:?}", g.edges());
        }
    }
    Ok(format!("{} graphs", pool.len()))
}

fn gadget_round_trips() -> Outcome {
    let mut covers = Vec::new();
    for u in 1..=4 {
        covers.extend(common::set_cover_instances(u, 4));
    }
    for inst in &covers {
        let out = set_cover_to_split(inst).map_err(|e| e.to_string())?;
        let clique = out.vertices_with(|r| matches!(r, Role::SetVertex(_)));
        ensure!(is_split_partition(&out.graph, &clique), "not split: {inst:?}");
        let cover = common::min_cover(inst);
        for p in Paradigm::ALL {
            let internal = out.graph.n() - brute_leaf_range(&out.graph, p).max;
            ensure!(internal == cover, "{p}: {internal} internal vs cover {cover} for {inst:?}");
        }
    }
    let mut grundy = Vec::new();
    for x in 1..=4 {
        for y in 1..=4 {
            grundy.extend(common::grundy_instances_upto_iso(x, y));
        }
    }
    for inst in &grundy {
        let out = grundy_instance_to_split(inst).map_err(|e| e.to_string())?;
        let clique = out.vertices_with(|r| matches!(r, Role::XVertex(_) | Role::R));
        ensure!(is_split_partition(&out.graph, &clique), "not split: {inst:?}");
        let longest = longest_one_sided_sequence(inst).len();
        for p in [Paradigm::Gs, Paradigm::Bfs] {
            let internal = out.graph.n() - brute_leaf_range(&out.graph, p).min;
            ensure!(internal == longest + 1, "{p}: {internal} internal vs {longest} for {inst:?}");
        }
    }
    let mut cnfs: Vec<Cnf> = common::small_cnfs();
    cnfs.push(common::unsat_cnf());
    let mut sat_checks = 0;
    for cnf in &cnfs {
        for k in [3, 4] {
            let out = sat3_to_weakly_chordal(cnf, k).map_err(|e| e.to_string())?;
            ensure!(is_weakly_chordal(&out.graph), "not weakly chordal: {cnf:?}");
            let found = find_internal_between(&out.graph, Paradigm::Lbfs, k, k);
            ensure!(found.is_some() == cnf.is_satisfiable(), "k={k} on {cnf:?}");
            if let Some(sigma) = found {
                ensure!(validate_ordering(&out.graph, &sigma, Paradigm::Lbfs), "invalid LBFS witness");
                ensure!(out.graph.n() - leaves(&out.graph, &sigma) == k, "witness not exactly {k} internal");
            }
            sat_checks += 1;
        }
    }
    Ok(format!(
        "{} set cover, {} grundy, {sat_checks} 3-SAT instances",
        covers.len(),
        grundy.len()
    ))
}

fn lbfs_counterexample() -> Outcome {
    let g = counterexample_graph();
    let reference = ftree_from_ordering(&g, &counterexample_reference()).unwrap();
    let children = |t: &FTree, v: usize| {
        let mut c = t.children(v).to_vec();
        c.sort_unstable();
        c
    };
    let bfs = plus_from_prefix(&g, Paradigm::Bfs, &COUNTEREXAMPLE_S);
    let lbfs = plus_from_prefix(&g, Paradigm::Lbfs, &COUNTEREXAMPLE_S);
    ensure!(validate_ordering(&g, &bfs, Paradigm::Bfs), "BFS+ output invalid");
    ensure!(validate_ordering(&g, &lbfs, Paradigm::Lbfs), "LBFS+ output invalid");
    let bfs_tree = ftree_from_ordering(&g, &bfs).unwrap();
    let lbfs_tree = ftree_from_ordering(&g, &lbfs).unwrap();
    for v in COUNTEREXAMPLE_S {
        ensure!(children(&bfs_tree, v) == children(&reference, v), "BFS+ changed children of {v}");
    }
    let changed: Vec<usize> = COUNTEREXAMPLE_S
        .into_iter()
        .filter(|&v| children(&lbfs_tree, v) != children(&reference, v))
        .collect();
    ensure!(!changed.is_empty(), "LBFS+ kept every child set");
    Ok(format!("LBFS+ changes the children of {changed:?}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("layered DP matches brute force for BFS and LBFS", layered_vs_brute, 600),
        ("GS min leaves = min Z*-forcing set = n - longest Z-sequence", gs_triangle, 600),
        ("treewidth DP matches brute force on two decompositions", zstar_treewidth, 900),
        ("GS max leaves = spanning-tree max leaves = n - min CDS", max_leaf_equivalence, 900),
        ("path of triangles and star of ladders leaf counts", figure_families, 300),
        ("BFS bandwidth and GS path decomposition width bounds", width_bounds, 900),
        ("XP solvers and circuit match the oracle", xp_solvers, 900),
        ("reduction gadgets round trip", gadget_round_trips, 900),
        ("BFS+ keeps children, LBFS+ does not", lbfs_counterexample, 900),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if took > Duration::from_secs(budget) => {
                Err(format!("{detail}, but over the {budget} s budget"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail}; {:.1} s)", i + 1, took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({why}; {:.1} s)", i + 1, took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
