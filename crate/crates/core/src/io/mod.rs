//! JSON documents and Graphviz export.

mod document;

use std::fmt::Write as _;

use serde::Serialize;

pub use document::{
    parse_quiver, serialize, ArrowEntry, CycleEntry, LabelEntry, ParseError, QuiverDocument, VertexEntry,
    FORMAT_VERSION,
};

use crate::cuts::{Cut, TruncatedPresentation};
use crate::mutation::{MutationDirection, MutationGraph};
use crate::quiver::{QuiverWithCycles, Sign};
use crate::tensor::LabeledQuiverWithCycles;

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz digraph of a quiver; arrows of `cut` are dashed.
pub fn quiver_to_dot(q: &QuiverWithCycles, cut: Option<&Cut>) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in q.quiver().vertices() {
        let _ = writeln!(out, "  {};", quoted(v.as_str()));
    }
    for a in q.quiver().arrows() {
        let style = if cut.is_some_and(|c| c.contains(&a.id)) { ", style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  {} -> {} [label={}{style}];",
            quoted(a.source.as_str()),
            quoted(a.target.as_str()),
            quoted(a.id.as_str())
        );
    }
    out.push_str("}\n");
    out
}

fn node_label(c: &Cut) -> String {
    c.arrows().iter().map(|a| a.as_str()).collect::<Vec<_>>().join(",")
}

/// Graphviz export of a mutation graph. Nodes are labelled by their sorted
/// arrow ids. Plain output is an undirected graph; `labeled` gives a digraph
/// whose edges carry the mutation, e.g. `3+`.
pub fn mutation_graph_to_dot(g: &MutationGraph, labeled: bool) -> String {
    let mut out = String::from(if labeled { "digraph mutations {\n" } else { "graph mutations {\n" });
    for (i, c) in g.nodes.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label={}];", quoted(&node_label(c)));
    }
    if labeled {
        for e in &g.edges {
            let _ = writeln!(out, "  n{} -> n{} [label={}];", e.from, e.to, quoted(&format!("{}{}", e.vertex, e.direction)));
        }
    } else {
        for (a, b) in g.undirected_edges() {
            let _ = writeln!(out, "  n{a} -- n{b};");
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson<'a> {
    nodes: Vec<Vec<&'a str>>,
    edges: Vec<EdgeJson<'a>>,
}

#[derive(Serialize)]
struct EdgeJson<'a> {
    from: usize,
    to: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertex: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    direction: Option<&'static str>,
}

/// JSON export of a mutation graph: `nodes` lists each cut's arrow ids,
/// `edges` refer to node positions. With `labeled` every mutation is listed
/// with its vertex and direction, otherwise each joined pair once.
pub fn mutation_graph_to_json(g: &MutationGraph, labeled: bool) -> String {
    let nodes = g.nodes.iter().map(|c| c.arrows().iter().map(|a| a.as_str()).collect()).collect();
    let edges = if labeled {
        g.edges
            .iter()
            .map(|e| EdgeJson {
                from: e.from,
                to: e.to,
                vertex: Some(e.vertex.as_str()),
                direction: Some(match e.direction {
                    MutationDirection::Plus => "plus",
                    MutationDirection::Minus => "minus",
                }),
            })
            .collect()
    } else {
        g.undirected_edges().into_iter().map(|(from, to)| EdgeJson { from, to, vertex: None, direction: None }).collect()
    };
    let mut text = serde_json::to_string_pretty(&GraphJson { nodes, edges }).expect("graphs serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct RelationJson<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    sign: Option<i8>,
    path: Vec<&'a str>,
}

#[derive(Serialize)]
struct TruncatedJson<'a> {
    quiver: QuiverDocument,
    relations: std::collections::BTreeMap<&'a str, Vec<RelationJson<'a>>>,
}

/// JSON export of a truncated presentation: the truncated quiver as a
/// document without cycles, and the relation supports keyed by cut arrow.
pub fn truncated_presentation_to_json(p: &TruncatedPresentation) -> String {
    let q = LabeledQuiverWithCycles::new(QuiverWithCycles::new(p.truncated_quiver.clone(), []), Default::default());
    let relations = p
        .relations
        .iter()
        .map(|(a, rels)| {
            let rels = rels
                .iter()
                .map(|r| RelationJson { sign: r.sign.map(Sign::as_i8), path: r.path.iter().map(|x| x.as_str()).collect() })
                .collect();
            (a.as_str(), rels)
        })
        .collect();
    let mut text =
        serde_json::to_string_pretty(&TruncatedJson { quiver: QuiverDocument::from_quiver(&q), relations }).expect("serializes");
    text.push('\n');
    text
}
