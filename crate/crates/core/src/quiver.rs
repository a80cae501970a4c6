//! Quivers, walks, cycles and quivers with cycles.
//!
//! Everything here is immutable once built. Vertices, arrows and cycles are
//! kept sorted by identifier so that every derived collection comes out in
//! the same order on every run.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

macro_rules! string_id {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        #[serde(transparent)]
        pub struct $name(String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(id: &str) -> Self {
                Self(id.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(id: String) -> Self {
                Self(id)
            }
        }
    };
}

string_id!(
    /// Opaque vertex identifier, ordered as a string.
    VertexId
);
string_id!(
    /// Opaque arrow identifier, ordered as a string.
    ArrowId
);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub id: ArrowId,
    pub source: VertexId,
    pub target: VertexId,
    pub label: Option<String>,
}

impl Arrow {
    pub fn new(id: impl Into<ArrowId>, source: impl Into<VertexId>, target: impl Into<VertexId>) -> Self {
        Self {
            id: id.into(),
            source: source.into(),
            target: target.into(),
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }
}

/// A finite directed multigraph.
///
/// Construction never fails: identifiers are sorted but not checked. Use
/// [`validate`] (or [`QuiverWithCycles::validate`]) to list invariant
/// violations.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<VertexId>,
    arrows: Vec<Arrow>,
    vertex_pos: HashMap<VertexId, usize>,
    arrow_pos: HashMap<ArrowId, usize>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>, arrows: impl IntoIterator<Item = Arrow>) -> Self {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        let mut arrows: Vec<Arrow> = arrows.into_iter().collect();
        vertices.sort();
        arrows.sort_by(|a, b| a.id.cmp(&b.id));
        let mut vertex_pos = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            vertex_pos.entry(v.clone()).or_insert(i);
        }
        let mut arrow_pos = HashMap::with_capacity(arrows.len());
        for (i, a) in arrows.iter().enumerate() {
            arrow_pos.entry(a.id.clone()).or_insert(i);
        }
        Self {
            vertices,
            arrows,
            vertex_pos,
            arrow_pos,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, id: &ArrowId) -> Option<&Arrow> {
        self.arrow_pos.get(id).map(|&i| &self.arrows[i])
    }

    /// Position of an arrow in the sorted arrow list.
    pub fn arrow_index(&self, id: &ArrowId) -> Option<usize> {
        self.arrow_pos.get(id).copied()
    }

    /// Position of a vertex in the sorted vertex list.
    pub fn vertex_index(&self, id: &VertexId) -> Option<usize> {
        self.vertex_pos.get(id).copied()
    }

    pub fn contains_vertex(&self, id: &VertexId) -> bool {
        self.vertex_pos.contains_key(id)
    }

    /// `(source, target)` vertex positions of the arrow at position `i`, or
    /// `None` when an endpoint is undeclared.
    pub(crate) fn ends(&self, i: usize) -> Option<(usize, usize)> {
        let a = &self.arrows[i];
        Some((self.vertex_index(&a.source)?, self.vertex_index(&a.target)?))
    }

    /// For every vertex position, the arrow positions ending there and starting there.
    pub(crate) fn incidence(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let n = self.vertices.len();
        let mut incoming = vec![Vec::new(); n];
        let mut outgoing = vec![Vec::new(); n];
        for i in 0..self.arrows.len() {
            if let Some((s, t)) = self.ends(i) {
                outgoing[s].push(i);
                incoming[t].push(i);
            }
        }
        (incoming, outgoing)
    }

    /// Arrows (and their endpoints) touching each vertex, ignoring direction.
    fn undirected_adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for i in 0..self.arrows.len() {
            if let Some((s, t)) = self.ends(i) {
                adj[s].push((i, t));
                if s != t {
                    adj[t].push((i, s));
                }
            }
        }
        adj
    }

    /// Vertex positions of each connected component of the underlying
    /// undirected graph, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.undirected_adjacency();
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for start in 0..self.vertices.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(_, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// True iff there is no directed cycle (loops included).
    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..self.arrows.len() {
            if let Some((s, t)) = self.ends(i) {
                out[s].push(t);
                indegree[t] += 1;
            }
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &w in &out[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    stack.push(w);
                }
            }
        }
        removed == n
    }

    /// Breadth-first spanning forest. Each component is rooted at its smallest
    /// vertex (or at `root` for the component containing it) and neighbours are
    /// visited in arrow-id order.
    pub(crate) fn spanning_forest(&self, root: Option<usize>) -> SpanningForest {
        let n = self.vertices.len();
        let adj = self.undirected_adjacency();
        let mut parent: Vec<Option<(usize, usize, bool)>> = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut in_tree = vec![false; self.arrows.len()];
        let order = root.into_iter().chain(0..n);
        for start in order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &(a, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        let toward_parent = self.arrows[a].target == self.vertices[v];
                        parent[w] = Some((a, v, toward_parent));
                        depth[w] = depth[v] + 1;
                        in_tree[a] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest { parent, depth, in_tree }
    }

    /// A basis of the integer cycle space: one cyclic walk per chord of the
    /// spanning tree, made of the chord followed by the tree path back to its
    /// source.
    pub fn cycle_space_basis(&self) -> Result<Vec<Walk>> {
        let components = self.components().len();
        if components != 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(self.cycle_space_basis_forest())
    }

    /// Same as [`cycle_space_basis`](Self::cycle_space_basis) but per
    /// component, so disconnected quivers are accepted.
    pub(crate) fn cycle_space_basis_forest(&self) -> Vec<Walk> {
        let forest = self.spanning_forest(None);
        let mut basis = Vec::new();
        for (i, arrow) in self.arrows.iter().enumerate() {
            if forest.in_tree[i] {
                continue;
            }
            let Some((s, t)) = self.ends(i) else { continue };
            let mut steps = vec![Step::forward(arrow.id.clone())];
            steps.extend(
                forest
                    .tree_path(t, s)
                    .into_iter()
                    .map(|(a, dir)| Step { arrow: self.arrows[a].id.clone(), direction: dir }),
            );
            basis.push(Walk { steps });
        }
        basis
    }

    /// The quiver restricted to the given vertex positions and the arrows
    /// between them.
    pub(crate) fn restrict(&self, vertex_positions: &[usize]) -> Quiver {
        let keep: std::collections::HashSet<usize> = vertex_positions.iter().copied().collect();
        let vertices = vertex_positions.iter().map(|&v| self.vertices[v].clone());
        let arrows = (0..self.arrows.len())
            .filter(|&i| matches!(self.ends(i), Some((s, t)) if keep.contains(&s) && keep.contains(&t)))
            .map(|i| self.arrows[i].clone());
        Quiver::new(vertices, arrows)
    }
}

pub(crate) struct SpanningForest {
    /// `(arrow, parent vertex, arrow points at the parent)` for every non-root vertex.
    parent: Vec<Option<(usize, usize, bool)>>,
    depth: Vec<usize>,
    pub(crate) in_tree: Vec<bool>,
}

impl SpanningForest {
    /// Steps along tree arrows from `from` to `to` (same component).
    pub(crate) fn tree_path(&self, from: usize, to: usize) -> Vec<(usize, Direction)> {
        let mut up = Vec::new();
        let mut down = Vec::new();
        let (mut a, mut b) = (from, to);
        while a != b {
            if self.depth[a] >= self.depth[b] {
                let (arrow, p, toward_parent) = self.parent[a].expect("non-root vertex has a parent");
                up.push((arrow, if toward_parent { Direction::Forward } else { Direction::Backward }));
                a = p;
            } else {
                let (arrow, p, toward_parent) = self.parent[b].expect("non-root vertex has a parent");
                down.push((arrow, if toward_parent { Direction::Backward } else { Direction::Forward }));
                b = p;
            }
        }
        down.reverse();
        up.extend(down);
        up
    }
}

/// Direction of a step in a walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: ArrowId,
    pub direction: Direction,
}

impl Step {
    pub fn forward(arrow: impl Into<ArrowId>) -> Self {
        Self { arrow: arrow.into(), direction: Direction::Forward }
    }

    pub fn backward(arrow: impl Into<ArrowId>) -> Self {
        Self { arrow: arrow.into(), direction: Direction::Backward }
    }
}

/// A path in the doubled quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Walk {
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn new(steps: Vec<Step>) -> Self {
        Self { steps }
    }

    /// The walk traversed backwards.
    pub fn inverse(&self) -> Walk {
        Walk {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step { arrow: s.arrow.clone(), direction: s.direction.reversed() })
                .collect(),
        }
    }

    pub fn concat(&self, other: &Walk) -> Walk {
        Walk { steps: self.steps.iter().chain(&other.steps).cloned().collect() }
    }

    /// Start and end vertex of a non-empty walk, checking that steps chain.
    pub fn endpoints<'q>(&self, quiver: &'q Quiver) -> Result<Option<(&'q VertexId, &'q VertexId)>> {
        let mut start = None;
        let mut current: Option<&VertexId> = None;
        for (position, step) in self.steps.iter().enumerate() {
            let arrow = quiver.arrow(&step.arrow).ok_or_else(|| Error::UnknownArrow(step.arrow.clone()))?;
            let (from, to) = match step.direction {
                Direction::Forward => (&arrow.source, &arrow.target),
                Direction::Backward => (&arrow.target, &arrow.source),
            };
            if let Some(cur) = current {
                if cur != from {
                    return Err(Error::BrokenWalk { position });
                }
            } else {
                start = Some(from);
            }
            current = Some(to);
        }
        Ok(start.zip(current))
    }

    pub fn is_cyclic(&self, quiver: &Quiver) -> Result<bool> {
        Ok(match self.endpoints(quiver)? {
            Some((s, t)) => s == t,
            None => true,
        })
    }

    /// Signed number of traversals of each arrow, indexed by arrow position.
    pub fn signed_counts(&self, quiver: &Quiver) -> Result<Vec<i64>> {
        let mut counts = vec![0; quiver.arrows().len()];
        for step in &self.steps {
            let i = quiver.arrow_index(&step.arrow).ok_or_else(|| Error::UnknownArrow(step.arrow.clone()))?;
            counts[i] += step.direction.sign();
        }
        Ok(counts)
    }
}

/// Sign of a potential term carried by a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(value: i8) -> Option<Self> {
        match value {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// A directed closed path, stored in its lexicographically least rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    arrows: Vec<ArrowId>,
    sign: Option<Sign>,
}

impl Cycle {
    /// Rotates `arrows` to its least rotation without checking that the
    /// arrows chain. [`validate`] reports cycles that do not.
    pub fn new(arrows: Vec<ArrowId>, sign: Option<Sign>) -> Self {
        let mut arrows = arrows;
        let shift = least_rotation(&arrows);
        arrows.rotate_left(shift);
        Self { arrows, sign }
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn sign(&self) -> Option<Sign> {
        self.sign
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn contains(&self, arrow: &ArrowId) -> bool {
        self.arrows.contains(arrow)
    }

    /// Checks that consecutive arrows chain, including the wrap-around.
    pub fn check_closed(&self, quiver: &Quiver) -> Result<()> {
        check_closed_path(quiver, &self.arrows)
    }
}

fn check_closed_path(quiver: &Quiver, arrows: &[ArrowId]) -> Result<()> {
    if arrows.is_empty() {
        return Err(Error::EmptyCycle);
    }
    let resolved: Vec<&Arrow> = arrows
        .iter()
        .map(|id| quiver.arrow(id).ok_or_else(|| Error::UnknownArrow(id.clone())))
        .collect::<Result<_>>()?;
    for i in 0..resolved.len() {
        let a = resolved[i];
        let b = resolved[(i + 1) % resolved.len()];
        if a.target != b.source {
            return Err(Error::NotChaining { first: a.id.clone(), second: b.id.clone() });
        }
    }
    Ok(())
}

/// Offset of the lexicographically least rotation of `items`.
pub fn least_rotation<T: Ord>(items: &[T]) -> usize {
    let n = items.len();
    (0..n)
        .min_by(|&a, &b| {
            (0..n)
                .map(|k| items[(a + k) % n].cmp(&items[(b + k) % n]))
                .find(|o| o.is_ne())
                .unwrap_or(std::cmp::Ordering::Equal)
        })
        .unwrap_or(0)
}

/// Validates that `arrows` is a directed closed path of `quiver` and returns
/// it as a [`Cycle`] in canonical rotation.
pub fn canonicalize_cycle(quiver: &Quiver, arrows: &[ArrowId]) -> Result<Cycle> {
    check_closed_path(quiver, arrows)?;
    Ok(Cycle::new(arrows.to_vec(), None))
}

/// A quiver together with a distinguished set of cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverWithCycles {
    quiver: Quiver,
    cycles: Vec<Cycle>,
}

impl QuiverWithCycles {
    /// Cycles are canonicalized, sorted and exact duplicates dropped.
    pub fn new(quiver: Quiver, cycles: impl IntoIterator<Item = Cycle>) -> Self {
        let mut cycles: Vec<Cycle> = cycles.into_iter().map(|c| Cycle::new(c.arrows, c.sign)).collect();
        cycles.sort();
        cycles.dedup();
        Self { quiver, cycles }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn validate(&self) -> Vec<Violation> {
        validate(self)
    }

    /// Cycles as lists of arrow positions. Cycles mentioning unknown arrows
    /// are skipped.
    pub(crate) fn cycle_indices(&self) -> Vec<Vec<usize>> {
        self.cycles
            .iter()
            .filter_map(|c| c.arrows.iter().map(|a| self.quiver.arrow_index(a)).collect::<Option<Vec<_>>>())
            .collect()
    }

    /// One quiver with cycles per connected component.
    pub fn components(&self) -> Vec<QuiverWithCycles> {
        self.quiver
            .components()
            .into_iter()
            .map(|comp| {
                let quiver = self.quiver.restrict(&comp);
                let cycles = self
                    .cycles
                    .iter()
                    .filter(|c| c.arrows.iter().all(|a| quiver.arrow(a).is_some()))
                    .cloned()
                    .collect::<Vec<_>>();
                QuiverWithCycles::new(quiver, cycles)
            })
            .collect()
    }
}

/// One broken invariant, naming the offending identifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoVertices,
    DuplicateVertex(VertexId),
    DuplicateArrow(ArrowId),
    UndeclaredVertex { arrow: ArrowId, vertex: VertexId },
    EmptyCycle { cycle: usize },
    CycleUnknownArrow { cycle: usize, arrow: ArrowId },
    CycleNotChaining { cycle: usize, first: ArrowId, second: ArrowId },
    DuplicateCycle { cycle: usize },
    NotConnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoVertices => write!(f, "quiver has no vertices"),
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex id {v}"),
            Violation::DuplicateArrow(a) => write!(f, "duplicate arrow id {a}"),
            Violation::UndeclaredVertex { arrow, vertex } => {
                write!(f, "arrow {arrow} references undeclared vertex {vertex}")
            }
            Violation::EmptyCycle { cycle } => write!(f, "cycle #{cycle} is empty"),
            Violation::CycleUnknownArrow { cycle, arrow } => {
                write!(f, "cycle #{cycle} references unknown arrow {arrow}")
            }
            Violation::CycleNotChaining { cycle, first, second } => {
                write!(f, "cycle #{cycle}: arrow {first} does not end where {second} starts")
            }
            Violation::DuplicateCycle { cycle } => write!(f, "cycle #{cycle} repeats another cycle"),
            Violation::NotConnected { components } => {
                write!(f, "quiver is not connected ({components} components)")
            }
        }
    }
}

/// Lists every broken invariant of `q`; empty iff `q` is valid and connected.
pub fn validate(q: &QuiverWithCycles) -> Vec<Violation> {
    let quiver = &q.quiver;
    let mut out = Vec::new();
    if quiver.vertices.is_empty() {
        out.push(Violation::NoVertices);
    }
    for w in quiver.vertices.windows(2) {
        if w[0] == w[1] {
            out.push(Violation::DuplicateVertex(w[0].clone()));
        }
    }
    for w in quiver.arrows.windows(2) {
        if w[0].id == w[1].id {
            out.push(Violation::DuplicateArrow(w[0].id.clone()));
        }
    }
    for a in &quiver.arrows {
        for v in [&a.source, &a.target] {
            if !quiver.contains_vertex(v) {
                out.push(Violation::UndeclaredVertex { arrow: a.id.clone(), vertex: v.clone() });
            }
        }
    }
    for (i, c) in q.cycles.iter().enumerate() {
        match check_closed_path(quiver, &c.arrows) {
            Ok(()) => {}
            Err(Error::EmptyCycle) => out.push(Violation::EmptyCycle { cycle: i }),
            Err(Error::UnknownArrow(arrow)) => out.push(Violation::CycleUnknownArrow { cycle: i, arrow }),
            Err(Error::NotChaining { first, second }) => {
                out.push(Violation::CycleNotChaining { cycle: i, first, second })
            }
            Err(_) => unreachable!("closed-path check only raises the errors above"),
        }
        if i > 0 && q.cycles[i - 1].arrows == c.arrows {
            out.push(Violation::DuplicateCycle { cycle: i });
        }
    }
    let components = quiver.components().len();
    if components > 1 {
        out.push(Violation::NotConnected { components });
    }
    out
}

/// See [`Quiver::is_acyclic`].
pub fn is_acyclic(q: &Quiver) -> bool {
    q.is_acyclic()
}

/// See [`Quiver::cycle_space_basis`].
pub fn cycle_space_basis(q: &Quiver) -> Result<Vec<Walk>> {
    q.cycle_space_basis()
}
