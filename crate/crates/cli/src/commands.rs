use std::fmt::Write as _;
use std::path::Path;

use anyhow::{anyhow, Context, Result};

use leafsearch::formats::{parse_cnf, parse_grundy, parse_set_cover, write_graph};
use leafsearch::gadgets::{
    gen_family, grundy_instance_to_split, sat3_to_weakly_chordal, set_cover_to_split, Family,
    ReductionOutput,
};
use leafsearch::oracle::brute_leaf_range;
use leafsearch::{Graph, Ordering, Paradigm};

use crate::solve::ORACLE_LIMIT;
use crate::ReductionKind;

pub fn generate(family: &str, p: usize) -> Result<Graph> {
    let f = Family::from_name(family, p)
        .ok_or_else(|| anyhow!("unknown family {family:?}; known: {}", Family::NAMES.join(", ")))?;
    Ok(gen_family(f)?)
}

fn roles_text(out: &ReductionOutput) -> String {
    let mut s = String::new();
    for (v, r) in out.roles.iter().enumerate() {
        writeln!(s, "{} {r}", v + 1).unwrap();
    }
    s
}

pub fn reduce(kind: ReductionKind, instance: &Path, k: usize, output: Option<&Path>) -> Result<()> {
    let text = std::fs::read_to_string(instance).with_context(|| format!("reading {}", instance.display()))?;
    let ctx = || format!("parsing {}", instance.display());
    let out = match kind {
        ReductionKind::Setcover => set_cover_to_split(&parse_set_cover(&text).with_context(ctx)?)?,
        ReductionKind::Grundy => grundy_instance_to_split(&parse_grundy(&text).with_context(ctx)?)?,
        ReductionKind::Sat3 => sat3_to_weakly_chordal(&parse_cnf(&text).with_context(ctx)?, k)?,
    };
    let graph = format!("c {}\n{}", out.translation, write_graph(&out.graph));
    let roles = roles_text(&out);
    match output {
        Some(path) => {
            std::fs::write(path, &graph).with_context(|| format!("writing {}", path.display()))?;
            let mut side = path.as_os_str().to_owned();
            side.push(".roles");
            std::fs::write(&side, &roles).with_context(|| format!("writing {}", Path::new(&side).display()))?;
        }
        None => {
            let mut text = graph;
            for line in roles.lines() {
                writeln!(text, "c role {line}").unwrap();
            }
            crate::emit(&text);
        }
    }
    Ok(())
}

fn ids(o: &Ordering) -> String {
    o.seq().iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")
}

pub fn oracle_table(g: &Graph, paradigms: &[Paradigm], csv: bool) -> Result<String> {
    if g.n() > ORACLE_LIMIT {
        return Err(anyhow!("the exhaustive oracle is limited to {ORACLE_LIMIT} vertices, graph has {}", g.n()));
    }
    let mut s = String::new();
    if csv {
        s.push_str("paradigm,n,m,min_leaves,max_leaves,min_witness,max_witness\n");
    }
    for &p in paradigms {
        let r = brute_leaf_range(g, p);
        if csv {
            writeln!(s, "{p},{},{},{},{},{},{}", g.n(), g.m(), r.min, r.max, ids(&r.min_witness), ids(&r.max_witness))
                .unwrap();
        } else {
            writeln!(s, "{p}: leaves {}..={}", r.min, r.max).unwrap();
            writeln!(s, "  fewest: {}", ids(&r.min_witness)).unwrap();
            writeln!(s, "  most:   {}", ids(&r.max_witness)).unwrap();
        }
    }
    Ok(s)
}
