//! Cut-mutation at strict sources and sinks, and the graph it induces on the
//! set of all cuts.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::bits::Bits;
use crate::cuts::{enumerate_cut_bits, is_cut, Cut};
use crate::error::{Error, Result};
use crate::quiver::{QuiverWithCycles, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MutationDirection {
    /// At a strict source: incoming arrows leave the cut, outgoing ones join.
    Plus,
    /// At a strict sink: outgoing arrows leave the cut, incoming ones join.
    Minus,
}

impl fmt::Display for MutationDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MutationDirection::Plus => "+",
            MutationDirection::Minus => "-",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MutationEdge {
    pub from: usize,
    pub to: usize,
    pub vertex: VertexId,
    pub direction: MutationDirection,
}

/// Nodes are all cuts in sorted order; each edge records one mutation
/// `mu_vertex^direction(nodes[from]) = nodes[to]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MutationGraph {
    pub nodes: Vec<Cut>,
    pub edges: Vec<MutationEdge>,
}

impl MutationGraph {
    /// Unordered node pairs joined by at least one mutation, sorted.
    pub fn undirected_edges(&self) -> Vec<(usize, usize)> {
        let set: BTreeSet<(usize, usize)> = self.edges.iter().map(|e| (e.from.min(e.to), e.from.max(e.to))).collect();
        set.into_iter().collect()
    }

    pub fn component_count(&self) -> usize {
        let n = self.nodes.len();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in self.undirected_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn index_of(&self, cut: &Cut) -> Option<usize> {
        self.nodes.binary_search(cut).ok()
    }
}

/// Incidence of a quiver on arrow positions, with isolated vertices skipped.
struct Incidence {
    vertices: Vec<VertexId>,
    incoming: Vec<Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
}

impl Incidence {
    fn new(q: &QuiverWithCycles) -> Self {
        let (incoming, outgoing) = q.quiver().incidence();
        Self { vertices: q.quiver().vertices().to_vec(), incoming, outgoing }
    }

    fn has_arrows(&self, v: usize) -> bool {
        !self.incoming[v].is_empty() || !self.outgoing[v].is_empty()
    }

    fn is_strict_source(&self, cut: &Bits, v: usize) -> bool {
        self.has_arrows(v)
            && self.incoming[v].iter().all(|&a| cut.contains(a))
            && self.outgoing[v].iter().all(|&a| !cut.contains(a))
    }

    fn is_strict_sink(&self, cut: &Bits, v: usize) -> bool {
        self.has_arrows(v)
            && self.outgoing[v].iter().all(|&a| cut.contains(a))
            && self.incoming[v].iter().all(|&a| !cut.contains(a))
    }

    fn mutate(&self, cut: &Bits, v: usize, direction: MutationDirection) -> Bits {
        let (leave, join) = match direction {
            MutationDirection::Plus => (&self.incoming[v], &self.outgoing[v]),
            MutationDirection::Minus => (&self.outgoing[v], &self.incoming[v]),
        };
        let mut out = cut.clone();
        for &a in leave {
            out.remove(a);
        }
        for &a in join {
            out.insert(a);
        }
        out
    }
}

fn checked_bits(q: &QuiverWithCycles, c: &Cut) -> Result<Bits> {
    if !is_cut(q, c) {
        return Err(Error::NotACut(c.to_string()));
    }
    c.to_bits(q.quiver())
}

/// Vertices all of whose incoming arrows are in `c` and none of whose
/// outgoing arrows are.
pub fn strict_sources(q: &QuiverWithCycles, c: &Cut) -> Result<BTreeSet<VertexId>> {
    let bits = checked_bits(q, c)?;
    let inc = Incidence::new(q);
    Ok((0..inc.vertices.len())
        .filter(|&v| inc.is_strict_source(&bits, v))
        .map(|v| inc.vertices[v].clone())
        .collect())
}

/// Vertices all of whose outgoing arrows are in `c` and none of whose
/// incoming arrows are.
pub fn strict_sinks(q: &QuiverWithCycles, c: &Cut) -> Result<BTreeSet<VertexId>> {
    let bits = checked_bits(q, c)?;
    let inc = Incidence::new(q);
    Ok((0..inc.vertices.len())
        .filter(|&v| inc.is_strict_sink(&bits, v))
        .map(|v| inc.vertices[v].clone())
        .collect())
}

pub fn mutate(q: &QuiverWithCycles, c: &Cut, x: &VertexId, direction: MutationDirection) -> Result<Cut> {
    let bits = checked_bits(q, c)?;
    let v = q.quiver().vertex_index(x).ok_or_else(|| Error::UnknownVertex(x.clone()))?;
    let inc = Incidence::new(q);
    match direction {
        MutationDirection::Plus if !inc.is_strict_source(&bits, v) => Err(Error::NotStrictSource(x.clone())),
        MutationDirection::Minus if !inc.is_strict_sink(&bits, v) => Err(Error::NotStrictSink(x.clone())),
        _ => Ok(Cut::from_bits(q.quiver(), &inc.mutate(&bits, v, direction))),
    }
}

/// `mu_x^+`: requires `x` to be a strict source of `c`.
pub fn mutate_plus(q: &QuiverWithCycles, c: &Cut, x: &VertexId) -> Result<Cut> {
    mutate(q, c, x, MutationDirection::Plus)
}

/// `mu_x^-`: requires `x` to be a strict sink of `c`.
pub fn mutate_minus(q: &QuiverWithCycles, c: &Cut, x: &VertexId) -> Result<Cut> {
    mutate(q, c, x, MutationDirection::Minus)
}

/// All cuts, joined by every available single mutation.
///
/// Nodes come from full enumeration rather than from exploring outwards from
/// one cut, so cuts unreachable by mutation still show up as separate
/// components.
pub fn mutation_graph(q: &QuiverWithCycles) -> MutationGraph {
    let quiver = q.quiver();
    let cuts = enumerate_cut_bits(q);
    let index: HashMap<&Bits, usize> = cuts.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let inc = Incidence::new(q);
    let mut edges = Vec::new();
    for (from, cut) in cuts.iter().enumerate() {
        for v in 0..inc.vertices.len() {
            for direction in [MutationDirection::Plus, MutationDirection::Minus] {
                let applies = match direction {
                    MutationDirection::Plus => inc.is_strict_source(cut, v),
                    MutationDirection::Minus => inc.is_strict_sink(cut, v),
                };
                if !applies {
                    continue;
                }
                let target = inc.mutate(cut, v, direction);
                // Mutations that pull in an arrow lying on no cycle leave the
                // enumerated node set; they only occur on uncovered quivers.
                let Some(&to) = index.get(&target) else { continue };
                edges.push(MutationEdge { from, to, vertex: inc.vertices[v].clone(), direction });
            }
        }
    }
    edges.sort();
    edges.dedup();
    MutationGraph { nodes: cuts.iter().map(|b| Cut::from_bits(quiver, b)).collect(), edges }
}

/// True iff every cut is reachable from every other by successive mutations.
pub fn is_transitive(q: &QuiverWithCycles) -> bool {
    mutation_graph(q).is_connected()
}
