use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use quiver_cuts::io::{mutation_graph_to_dot, mutation_graph_to_json, quiver_to_dot, truncated_presentation_to_json};
use quiver_cuts::{
    dynkin_quiver, enumerate_cuts, euler_characteristic, h1, has_enough_cuts, is_covered, is_fully_compatible,
    is_simply_connected, morita_split, mutate, mutation_graph, parse_quiver, serialize, tensor_qwc,
    truncated_presentation, validate, ArrowId, Cut, LabeledDynkinSpec, LabeledQuiverWithCycles, MutationDirection,
    VertexId, DEFAULT_COSET_BUDGET,
};

/// Cuts, cut-mutation and canvases of quivers with cycles.
#[derive(Parser)]
#[command(name = "qcuts", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a quiver document and list every broken invariant.
    Validate { file: Option<PathBuf> },
    /// List all cuts, one per line.
    Cuts {
        file: Option<PathBuf>,
        #[arg(long)]
        count_only: bool,
    },
    /// Report the structural properties of a quiver with cycles.
    Check {
        file: Option<PathBuf>,
        /// Cap on live cosets in the simple-connectivity test.
        #[arg(long, default_value_t = DEFAULT_COSET_BUDGET)]
        coset_budget: usize,
    },
    /// Mutate a cut at a strict source (plus) or strict sink (minus).
    Mutate {
        file: Option<PathBuf>,
        #[arg(long)]
        cut: String,
        #[arg(long)]
        vertex: String,
        #[arg(long, value_enum)]
        dir: Dir,
    },
    /// Print the mutation graph on all cuts.
    Graph {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        /// List every mutation with its vertex and direction.
        #[arg(long)]
        labeled: bool,
    },
    /// Graphviz drawing of the quiver, cut arrows dashed.
    Dot {
        file: Option<PathBuf>,
        #[arg(long)]
        cut: Option<String>,
    },
    /// Tensor product of two labelled Dynkin quivers, as a document.
    Tensor {
        /// e.g. `A3`, `B2:2>1`, `E6:1>2>3<4<5,3>6`
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Split every vertex whose algebra is a product of two extensions.
        #[arg(long)]
        split: bool,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        split_count: u32,
    },
    /// Remove the arrows of a cut and list the relations they leave behind.
    Truncate {
        file: Option<PathBuf>,
        #[arg(long)]
        cut: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Plus,
    Minus,
}

fn read_input(file: Option<&PathBuf>) -> Result<String> {
    let mut text = String::new();
    match file {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        }
        _ => {
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
        }
    }
    Ok(text)
}

fn load(file: Option<&PathBuf>) -> Result<LabeledQuiverWithCycles> {
    let text = read_input(file)?;
    Ok(parse_quiver(&text)?)
}

/// Accepts `{a,b}`, `a,b` or `a b`.
fn parse_cut(q: &LabeledQuiverWithCycles, text: &str) -> Result<Cut> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let ids: Vec<ArrowId> =
        inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).map(ArrowId::new).collect();
    for id in &ids {
        if q.qwc.quiver().arrow(id).is_none() {
            bail!("unknown arrow {id}");
        }
    }
    Ok(Cut::new(ids))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool> {
    match cli.command {
        Command::Validate { file } => {
            let q = load(file.as_ref())?;
            let violations = validate(&q.qwc);
            if violations.is_empty() {
                writeln!(out, "ok")?;
            }
            for v in &violations {
                writeln!(out, "{v}")?;
            }
            return Ok(violations.is_empty());
        }
        Command::Cuts { file, count_only } => {
            let q = load(file.as_ref())?;
            if !is_covered(&q.qwc) {
                eprintln!("warning: some arrows lie on no cycle and appear in no cut");
            }
            let cuts = enumerate_cuts(&q.qwc);
            if count_only {
                writeln!(out, "{}", cuts.len())?;
            } else {
                for c in &cuts {
                    writeln!(out, "{c}")?;
                }
            }
        }
        Command::Check { file, coset_budget } => {
            let q = &load(file.as_ref())?.qwc;
            let graph = mutation_graph(q);
            writeln!(out, "cuts: {}", graph.nodes.len())?;
            writeln!(out, "covered: {}", yes_no(is_covered(q)))?;
            writeln!(out, "enough-cuts: {}", yes_no(has_enough_cuts(q)))?;
            writeln!(out, "fully-compatible: {}", yes_no(is_fully_compatible(q)))?;
            writeln!(out, "transitive: {}", yes_no(graph.is_connected()))?;
            writeln!(out, "euler-characteristic: {}", euler_characteristic(q))?;
            writeln!(out, "h1: {}", h1(q))?;
            writeln!(out, "simply-connected: {}", is_simply_connected(q, coset_budget))?;
        }
        Command::Mutate { file, cut, vertex, dir } => {
            let q = load(file.as_ref())?;
            let cut = parse_cut(&q, &cut)?;
            let direction = match dir {
                Dir::Plus => MutationDirection::Plus,
                Dir::Minus => MutationDirection::Minus,
            };
            writeln!(out, "{}", mutate(&q.qwc, &cut, &VertexId::new(vertex), direction)?)?;
        }
        Command::Graph { file, dot, json, labeled } => {
            let q = load(file.as_ref())?;
            let graph = mutation_graph(&q.qwc);
            if dot {
                write!(out, "{}", mutation_graph_to_dot(&graph, labeled))?;
            } else if json {
                write!(out, "{}", mutation_graph_to_json(&graph, labeled))?;
            } else {
                for (i, c) in graph.nodes.iter().enumerate() {
                    writeln!(out, "{i}: {c}")?;
                }
                if labeled {
                    for e in &graph.edges {
                        writeln!(out, "{} -> {} [{}{}]", e.from, e.to, e.vertex, e.direction)?;
                    }
                } else {
                    for (a, b) in graph.undirected_edges() {
                        writeln!(out, "{a} -- {b}")?;
                    }
                }
            }
        }
        Command::Dot { file, cut } => {
            let q = load(file.as_ref())?;
            let cut = cut.map(|c| parse_cut(&q, &c)).transpose()?;
            write!(out, "{}", quiver_to_dot(&q.qwc, cut.as_ref()))?;
        }
        Command::Tensor { left, right, split, split_count } => {
            let factor = |s: &str| -> Result<_> {
                let spec: LabeledDynkinSpec = s.parse()?;
                Ok(dynkin_quiver(&spec.with_split_count(split_count))?)
            };
            let mut t = tensor_qwc(&factor(&left)?, &factor(&right)?);
            if split {
                t = morita_split(&t)?;
            }
            write!(out, "{}", serialize(&t))?;
        }
        Command::Truncate { file, cut, json } => {
            let q = load(file.as_ref())?;
            let cut = parse_cut(&q, &cut)?;
            let p = truncated_presentation(&q.qwc, &cut)?;
            if json {
                write!(out, "{}", truncated_presentation_to_json(&p))?;
            } else {
                for a in p.truncated_quiver.arrows() {
                    writeln!(out, "arrow {}: {} -> {}", a.id, a.source, a.target)?;
                }
                for (a, rels) in &p.relations {
                    let terms: Vec<String> = rels
                        .iter()
                        .map(|r| {
                            let sign = r.sign.map_or(String::new(), |s| s.to_string());
                            let path: Vec<&str> = r.path.iter().map(ArrowId::as_str).collect();
                            format!("{sign}[{}]", path.join(" "))
                        })
                        .collect();
                    writeln!(out, "relation {a}: {}", terms.join(" "))?;
                }
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
