use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use leafsearch::formats::{parse_graph, parse_ordering, parse_td, write_graph};
use leafsearch::{ftree_from_ordering, validate_ordering, Graph, Paradigm};

mod commands;
mod solve;

use solve::{Algo, Problem};

#[derive(Parser)]
#[command(name = "leafsearch", version, about = "First-in search trees with few or many leaves")]
struct Cli {
    /// Worker threads for parallel solvers.
    #[arg(long, global = true, env = "LEAFSEARCH_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ParadigmArg {
    Gs,
    Bfs,
    Lbfs,
}

impl From<ParadigmArg> for Paradigm {
    fn from(p: ParadigmArg) -> Paradigm {
        match p {
            ParadigmArg::Gs => Paradigm::Gs,
            ParadigmArg::Bfs => Paradigm::Bfs,
            ParadigmArg::Lbfs => Paradigm::Lbfs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ReductionKind {
    Setcover,
    Grundy,
    #[value(name = "3sat")]
    Sat3,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a leaf or internal-vertex question for one graph.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        paradigm: ParadigmArg,
        #[arg(long, value_enum)]
        problem: Problem,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        /// Tree decomposition for `--algo tw`.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Write a graph from a named family.
    Generate {
        #[arg(long)]
        family: String,
        #[arg(short)]
        p: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a reduction gadget from a source instance.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionKind,
        #[arg(long, alias = "cnf")]
        instance: PathBuf,
        /// Target internal count for 3sat.
        #[arg(short, default_value_t = 3)]
        k: usize,
        /// Graph file; roles go to `<output>.roles`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact leaf ranges by exhaustive search.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        paradigm: Option<ParadigmArg>,
        #[arg(long)]
        csv: bool,
    },
    /// Validate an ordering and report its tree.
    Check {
        #[arg(long)]
        graph: PathBuf,
        /// Vertex ids separated by spaces or commas.
        #[arg(long)]
        ordering: String,
        #[arg(long, value_enum)]
        paradigm: ParadigmArg,
        #[arg(long)]
        json: bool,
    },
}

/// Writes to stdout, ignoring a closed pipe.
pub fn emit(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graph(&text).with_context(|| format!("parsing {}", path.display()))
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(t) = cli.threads {
        if t == 0 {
            bail!("--threads must be at least 1");
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    match cli.command {
        Command::Solve {
            graph,
            paradigm,
            problem,
            k,
            algo,
            td,
            json,
        } => {
            let g = read_graph(&graph)?;
            let td = match td {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    Some(parse_td(&text).with_context(|| format!("parsing {}", path.display()))?)
                }
                None => None,
            };
            let record = solve::solve(&g, paradigm.into(), problem, k, algo, td.as_ref())?;
            if json {
                emit(&(serde_json::to_string_pretty(&record)? + "\n"));
            } else {
                emit(&record.to_text());
            }
            Ok(record.decision == "yes")
        }
        Command::Generate { family, p, output } => {
            let g = commands::generate(&family, p)?;
            let text = format!("c {family} {p}\n{}", write_graph(&g));
            match output {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => emit(&text),
            }
            Ok(true)
        }
        Command::Reduce {
            kind,
            instance,
            k,
            output,
        } => {
            commands::reduce(kind, &instance, k, output.as_deref())?;
            Ok(true)
        }
        Command::Oracle { graph, paradigm, csv } => {
            let g = read_graph(&graph)?;
            let paradigms: Vec<Paradigm> = match paradigm {
                Some(p) => vec![p.into()],
                None => Paradigm::ALL.to_vec(),
            };
            emit(&commands::oracle_table(&g, &paradigms, csv)?);
            Ok(true)
        }
        Command::Check {
            graph,
            ordering,
            paradigm,
            json,
        } => {
            let g = read_graph(&graph)?;
            let sigma = parse_ordering(&ordering, g.n()).context("parsing --ordering")?;
            let p: Paradigm = paradigm.into();
            let valid = validate_ordering(&g, &sigma, p);
            let tree = if valid { Some(ftree_from_ordering(&g, &sigma)?) } else { None };
            if json {
                let v = serde_json::json!({
                    "paradigm": p.to_string(),
                    "valid": valid,
                    "leaves": tree.as_ref().map(|t| t.leaf_count()),
                    "internal": tree.as_ref().map(|t| t.internal_count()),
                });
                emit(&(serde_json::to_string_pretty(&v)? + "\n"));
            } else if let Some(t) = &tree {
                emit(&format!("valid {p} ordering: {} leaves, {} internal\n", t.leaf_count(), t.internal_count()));
            } else {
                emit(&format!("invalid {p} ordering\n"));
            }
            Ok(valid)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
