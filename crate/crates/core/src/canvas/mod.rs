//! The 2-dimensional cell complex of a quiver with cycles: vertices are
//! 0-cells, arrows are 1-cells and every distinguished cycle bounds a 2-cell.
//!
//! The fundamental group is read off a spanning tree: chords generate, and each
//! 2-cell contributes its boundary word with tree arrows erased. Deciding
//! whether that group is trivial is undecidable in general, so
//! [`is_simply_connected`] answers in three tiers: a nontrivial first homology
//! group proves "no", a Todd-Coxeter run that closes decides either way, and a
//! run that outgrows its coset budget gives "unknown".

mod coset;
mod snf;

use std::fmt;

pub use coset::{enumerate_cosets, CosetOutcome, Letter};
pub use snf::invariant_factors;

use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, QuiverWithCycles, VertexId};

/// Default cap on live cosets for [`is_simply_connected`].
pub const DEFAULT_COSET_BUDGET: usize = 1_000_000;

/// Finite presentation of the edge-path group of the canvas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    /// Chords of the spanning tree.
    pub generators: Vec<ArrowId>,
    /// One word per distinguished cycle, letters indexing `generators`.
    pub relators: Vec<Vec<Letter>>,
}

impl GroupPresentation {
    /// Relator exponent sums, one row per relator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for l in r {
                    row[l.generator] += i64::from(l.exponent);
                }
                row
            })
            .collect()
    }
}

/// A finitely generated abelian group `Z^free_rank + sum Z/t`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}", self.free_rank)?;
        if !self.torsion.is_empty() {
            let parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
            write!(f, ", torsion {}", parts.join(" + "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "Yes",
            Status::No => "No",
            Status::Unknown => "Unknown",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplyConnectedVerdict {
    pub status: Status,
    pub evidence: String,
}

impl fmt::Display for SimplyConnectedVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.status, self.evidence)
    }
}

/// `|Q0| - |Q1| + |Q2|`.
pub fn euler_characteristic(q: &QuiverWithCycles) -> i64 {
    let quiver = q.quiver();
    quiver.vertices().len() as i64 - quiver.arrows().len() as i64 + q.cycles().len() as i64
}

fn presentation_from_forest(q: &QuiverWithCycles, root: Option<usize>) -> GroupPresentation {
    let quiver: &Quiver = q.quiver();
    let forest = quiver.spanning_forest(root);
    let mut generator_of = vec![None; quiver.arrows().len()];
    let mut generators = Vec::new();
    for (i, arrow) in quiver.arrows().iter().enumerate() {
        if !forest.in_tree[i] {
            generator_of[i] = Some(generators.len());
            generators.push(arrow.id.clone());
        }
    }
    let relators = q
        .cycle_indices()
        .into_iter()
        .map(|cycle| {
            cycle
                .into_iter()
                .filter_map(|a| generator_of[a])
                .map(|generator| Letter { generator, exponent: 1 })
                .collect()
        })
        .collect();
    GroupPresentation { generators, relators }
}

/// Presentation of the fundamental group at `basepoint`, using a breadth-first
/// spanning tree rooted there.
pub fn pi1_presentation(q: &QuiverWithCycles, basepoint: &VertexId) -> Result<GroupPresentation> {
    let quiver = q.quiver();
    let root = quiver.vertex_index(basepoint).ok_or_else(|| Error::UnknownVertex(basepoint.clone()))?;
    let components = quiver.components().len();
    if components != 1 {
        return Err(Error::Disconnected { components });
    }
    Ok(presentation_from_forest(q, Some(root)))
}

/// First homology of the canvas. For disconnected quivers this is the direct
/// sum over components.
pub fn h1(q: &QuiverWithCycles) -> AbelianGroup {
    let presentation = presentation_from_forest(q, None);
    let factors = invariant_factors(&presentation.exponent_matrix());
    AbelianGroup {
        free_rank: presentation.generators.len() - factors.len(),
        torsion: factors.into_iter().filter(|&d| d > 1).collect(),
    }
}

fn verdict_connected(q: &QuiverWithCycles, budget: usize) -> SimplyConnectedVerdict {
    let homology = h1(q);
    if !homology.is_trivial() {
        return SimplyConnectedVerdict { status: Status::No, evidence: format!("H1 {homology}") };
    }
    let presentation = presentation_from_forest(q, None);
    if presentation.generators.is_empty() {
        return SimplyConnectedVerdict { status: Status::Yes, evidence: "tree: no generators".into() };
    }
    match enumerate_cosets(presentation.generators.len(), &presentation.relators, budget) {
        CosetOutcome::Closed(1) => {
            SimplyConnectedVerdict { status: Status::Yes, evidence: "coset table closed with 1 coset".into() }
        }
        CosetOutcome::Closed(n) => {
            SimplyConnectedVerdict { status: Status::No, evidence: format!("coset table closed with {n} cosets") }
        }
        CosetOutcome::Exhausted(n) => {
            SimplyConnectedVerdict { status: Status::Unknown, evidence: format!("budget exhausted at {n} cosets") }
        }
    }
}

/// Three-tier simple-connectivity decision, per connected component. All
/// components must be simply connected for a `Yes`.
pub fn is_simply_connected(q: &QuiverWithCycles, budget: usize) -> SimplyConnectedVerdict {
    let components = q.components();
    if components.is_empty() {
        return SimplyConnectedVerdict { status: Status::Yes, evidence: "empty quiver".into() };
    }
    if components.len() == 1 {
        return verdict_connected(q, budget);
    }
    let verdicts: Vec<SimplyConnectedVerdict> = components.iter().map(|c| verdict_connected(c, budget)).collect();
    let status = if verdicts.iter().any(|v| v.status == Status::No) {
        Status::No
    } else if verdicts.iter().any(|v| v.status == Status::Unknown) {
        Status::Unknown
    } else {
        Status::Yes
    };
    let evidence = verdicts
        .iter()
        .enumerate()
        .filter(|(_, v)| status == Status::Yes || v.status == status)
        .map(|(i, v)| format!("component {}: {}", i + 1, v.evidence))
        .collect::<Vec<_>>()
        .join("; ");
    SimplyConnectedVerdict { status, evidence }
}
