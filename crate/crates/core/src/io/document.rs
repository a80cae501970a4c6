use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quiver::{Arrow, ArrowId, Cycle, Quiver, QuiverWithCycles, Sign, VertexId, Violation};
use crate::tensor::{DivisionLabel, LabelKind, LabeledQuiverWithCycles, VertexLabel};

/// Highest document format this crate reads and the one it writes.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverDocument {
    pub format_version: u32,
    pub vertices: Vec<VertexEntry>,
    #[serde(default)]
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub cycles: Vec<CycleEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<LabelEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelEntry {
    pub kind: LabelKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_count: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub id: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleEntry {
    pub arrows: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("invalid quiver: {}", .0.join("; "))]
    Invariant(Vec<String>),
}

/// Parses a JSON quiver document into a labelled quiver with cycles.
///
/// Connectivity is not required here; [`crate::validate`] reports it. Every
/// other broken invariant fails the parse, all of them listed together.
pub fn parse_quiver(text: &str) -> Result<LabeledQuiverWithCycles, ParseError> {
    let doc: QuiverDocument = serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => ParseError::Schema(e.to_string()),
            _ => ParseError::Syntax { line: e.line(), column: e.column(), message: e.to_string() },
        }
    })?;
    doc.into_quiver()
}

/// Pretty JSON in canonical order: vertices and arrows sorted by id, cycles
/// rotated and sorted.
pub fn serialize(q: &LabeledQuiverWithCycles) -> String {
    let mut text = serde_json::to_string_pretty(&QuiverDocument::from_quiver(q)).expect("documents serialize");
    text.push('\n');
    text
}

impl QuiverDocument {
    pub fn from_quiver(q: &LabeledQuiverWithCycles) -> Self {
        let quiver = q.qwc.quiver();
        let vertices = quiver
            .vertices()
            .iter()
            .map(|v| {
                let label = q.labels.get(v).map(|l| {
                    let l = l.product();
                    LabelEntry { kind: l.kind, split_count: (l.split_count != 1).then_some(l.split_count) }
                });
                VertexEntry { id: v.to_string(), label }
            })
            .collect();
        let arrows = quiver
            .arrows()
            .iter()
            .map(|a| ArrowEntry { id: a.id.to_string(), source: a.source.to_string(), target: a.target.to_string() })
            .collect();
        let cycles = q
            .qwc
            .cycles()
            .iter()
            .map(|c| CycleEntry {
                arrows: c.arrows().iter().map(ToString::to_string).collect(),
                sign: c.sign().map(Sign::as_i8),
            })
            .collect();
        QuiverDocument { format_version: FORMAT_VERSION, vertices, arrows, cycles }
    }

    pub fn into_quiver(self) -> Result<LabeledQuiverWithCycles, ParseError> {
        if self.format_version > FORMAT_VERSION {
            return Err(ParseError::Schema(format!(
                "format_version {} is newer than supported version {FORMAT_VERSION}",
                self.format_version
            )));
        }
        let mut labels = BTreeMap::new();
        let mut vertex_ids = BTreeSet::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if !vertex_ids.insert(v.id.as_str()) {
                return Err(ParseError::Schema(format!("vertices[{i}]: duplicate vertex id {:?}", v.id)));
            }
            if let Some(label) = &v.label {
                let split_count = label.split_count.unwrap_or(1);
                if split_count == 0 {
                    return Err(ParseError::Schema(format!("vertices[{i}].label.split_count: must be positive")));
                }
                if label.kind == LabelKind::Base && split_count != 1 {
                    return Err(ParseError::Schema(format!(
                        "vertices[{i}].label.split_count: a Base vertex cannot split"
                    )));
                }
                labels.insert(
                    VertexId::new(&v.id),
                    VertexLabel::Single(DivisionLabel { kind: label.kind, split_count }),
                );
            }
        }
        let mut arrow_ends: HashMap<&str, (&str, &str)> = HashMap::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if arrow_ends.insert(a.id.as_str(), (a.source.as_str(), a.target.as_str())).is_some() {
                return Err(ParseError::Schema(format!("arrows[{i}]: duplicate arrow id {:?}", a.id)));
            }
        }
        let mut problems = Vec::new();
        if self.vertices.is_empty() {
            problems.push(Violation::NoVertices.to_string());
        }
        for (i, a) in self.arrows.iter().enumerate() {
            for (field, v) in [("source", &a.source), ("target", &a.target)] {
                if !vertex_ids.contains(v.as_str()) {
                    problems.push(format!("arrows[{i}].{field}: arrow {} references undeclared vertex {v}", a.id));
                }
            }
        }
        let mut seen_cycles = HashMap::new();
        let mut cycles = Vec::with_capacity(self.cycles.len());
        for (i, c) in self.cycles.iter().enumerate() {
            let sign = match c.sign {
                None => None,
                Some(s) => match Sign::from_i8(s) {
                    Some(s) => Some(s),
                    None => return Err(ParseError::Schema(format!("cycles[{i}].sign: expected 1 or -1, got {s}"))),
                },
            };
            if c.arrows.is_empty() {
                problems.push(format!("cycles[{i}]: empty cycle"));
                continue;
            }
            let mut ok = true;
            for (k, a) in c.arrows.iter().enumerate() {
                let Some(&(_, t)) = arrow_ends.get(a.as_str()) else {
                    problems.push(format!("cycles[{i}].arrows[{k}]: unknown arrow {a}"));
                    ok = false;
                    continue;
                };
                let next = &c.arrows[(k + 1) % c.arrows.len()];
                if let Some(&(s, _)) = arrow_ends.get(next.as_str()) {
                    if s != t {
                        problems.push(format!("cycles[{i}].arrows[{k}]: arrow {a} does not end where {next} starts"));
                        ok = false;
                    }
                }
            }
            if !ok {
                continue;
            }
            let cycle = Cycle::new(c.arrows.iter().map(ArrowId::new).collect(), sign);
            if let Some(j) = seen_cycles.insert(cycle.arrows().to_vec(), i) {
                problems.push(format!("cycles[{i}]: repeats cycles[{j}]"));
                continue;
            }
            cycles.push(cycle);
        }
        if !problems.is_empty() {
            return Err(ParseError::Invariant(problems));
        }
        let quiver = Quiver::new(
            self.vertices.iter().map(|v| VertexId::new(&v.id)),
            self.arrows.iter().map(|a| Arrow::new(a.id.as_str(), a.source.as_str(), a.target.as_str())),
        );
        Ok(LabeledQuiverWithCycles::new(QuiverWithCycles::new(quiver, cycles), labels))
    }
}
