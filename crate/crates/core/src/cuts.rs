//! Gradings induced by arrow subsets, cuts and their enumeration, and the
//! structural predicates built on top of them.
//!
//! A subset `C` of arrows gives every arrow degree 1 if it lies in `C` and 0
//! otherwise; a walk's degree is the signed sum over its steps. `C` is a cut
//! when every distinguished cycle has degree exactly 1.
//!
//! Arrows lying on no distinguished cycle are never put into enumerated cuts.
//! The cut condition says nothing about them, so including them would only
//! multiply the count by a power of two.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::quiver::{ArrowId, Quiver, QuiverWithCycles, Sign, Walk};

/// A set of arrows, compared as its sorted id sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cut {
    arrows: BTreeSet<ArrowId>,
}

impl Cut {
    pub fn new<I, A>(arrows: I) -> Self
    where
        I: IntoIterator<Item = A>,
        A: Into<ArrowId>,
    {
        Self { arrows: arrows.into_iter().map(Into::into).collect() }
    }

    pub fn arrows(&self) -> &BTreeSet<ArrowId> {
        &self.arrows
    }

    pub fn contains(&self, arrow: &ArrowId) -> bool {
        self.arrows.contains(arrow)
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub(crate) fn to_bits(&self, quiver: &Quiver) -> Result<Bits> {
        let mut bits = Bits::new(quiver.arrows().len());
        for a in &self.arrows {
            bits.insert(quiver.arrow_index(a).ok_or_else(|| Error::UnknownArrow(a.clone()))?);
        }
        Ok(bits)
    }

    pub(crate) fn from_bits(quiver: &Quiver, bits: &Bits) -> Self {
        Self { arrows: bits.iter().map(|i| quiver.arrows()[i].id.clone()).collect() }
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.arrows.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// Integer degree per arrow.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grading {
    pub degree: BTreeMap<ArrowId, i64>,
}

impl Grading {
    pub fn of(&self, arrow: &ArrowId) -> i64 {
        self.degree.get(arrow).copied().unwrap_or(0)
    }

    /// Degree of a path given as a sequence of arrows.
    pub fn path_degree<'a>(&self, path: impl IntoIterator<Item = &'a ArrowId>) -> i64 {
        path.into_iter().map(|a| self.of(a)).sum()
    }
}

/// The 0/1 indicator grading of `c`.
pub fn grading_from_cut(q: &QuiverWithCycles, c: &Cut) -> Result<Grading> {
    if let Some(a) = c.arrows.iter().find(|a| q.quiver().arrow(a).is_none()) {
        return Err(Error::UnknownArrow(a.clone()));
    }
    let degree = q
        .quiver()
        .arrows()
        .iter()
        .map(|a| (a.id.clone(), i64::from(c.contains(&a.id))))
        .collect();
    Ok(Grading { degree })
}

/// Signed sum of step degrees.
pub fn walk_degree(g: &Grading, w: &Walk) -> i64 {
    w.steps.iter().map(|s| s.direction.sign() * g.of(&s.arrow)).sum()
}

/// True iff every distinguished cycle meets `s` exactly once, counting
/// repeated arrows with multiplicity.
pub fn is_cut(q: &QuiverWithCycles, s: &Cut) -> bool {
    if s.arrows.iter().any(|a| q.quiver().arrow(a).is_none()) {
        return false;
    }
    q.cycles()
        .iter()
        .all(|c| c.arrows().iter().filter(|a| s.contains(a)).count() == 1)
}

fn require_cut(q: &QuiverWithCycles, c: &Cut) -> Result<()> {
    if is_cut(q, c) {
        Ok(())
    } else {
        Err(Error::NotACut(c.to_string()))
    }
}

/// Exact-one search over the distinguished cycles, on arrow positions.
struct CutSearch {
    cycles: Vec<Vec<usize>>,
    /// Cycles through each arrow, without repeats.
    through: Vec<Vec<usize>>,
    satisfied: Vec<bool>,
    blocked: Vec<u32>,
    chosen: Vec<usize>,
    arrow_count: usize,
    found: Vec<Bits>,
}

impl CutSearch {
    fn new(q: &QuiverWithCycles) -> Self {
        let arrow_count = q.quiver().arrows().len();
        let cycles = q.cycle_indices();
        let mut through = vec![Vec::new(); arrow_count];
        let mut blocked = vec![0u32; arrow_count];
        for (ci, cycle) in cycles.iter().enumerate() {
            for (k, &a) in cycle.iter().enumerate() {
                if cycle[..k].contains(&a) {
                    // An arrow repeated inside one cycle would give it degree 2.
                    blocked[a] = 1;
                } else {
                    through[a].push(ci);
                }
            }
        }
        Self {
            satisfied: vec![false; cycles.len()],
            cycles,
            through,
            blocked,
            chosen: Vec::new(),
            arrow_count,
            found: Vec::new(),
        }
    }

    /// Unsatisfied cycle with the fewest open candidates; `None` when all are
    /// satisfied.
    fn pick_cycle(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (ci, cycle) in self.cycles.iter().enumerate() {
            if self.satisfied[ci] {
                continue;
            }
            let open = cycle.iter().filter(|&&a| self.blocked[a] == 0).count();
            if best.is_none_or(|(_, n)| open < n) {
                best = Some((ci, open));
                if open == 0 {
                    break;
                }
            }
        }
        best
    }

    fn run(&mut self) {
        let Some((ci, open)) = self.pick_cycle() else {
            self.found.push(Bits::from_positions(self.arrow_count, self.chosen.iter().copied()));
            return;
        };
        if open == 0 {
            return;
        }
        let mut candidates: Vec<usize> = self.cycles[ci].iter().copied().filter(|&a| self.blocked[a] == 0).collect();
        candidates.sort_unstable();
        candidates.dedup();
        for &a in &candidates {
            self.select(a, true);
            self.chosen.push(a);
            self.run();
            self.chosen.pop();
            self.select(a, false);
            // Later siblings must avoid `a`, so branches stay disjoint.
            self.blocked[a] += 1;
        }
        for &a in &candidates {
            self.blocked[a] -= 1;
        }
    }

    fn select(&mut self, a: usize, on: bool) {
        for &ci in &self.through[a] {
            self.satisfied[ci] = on;
            for &b in &self.cycles[ci] {
                if on {
                    self.blocked[b] += 1;
                } else {
                    self.blocked[b] -= 1;
                }
            }
        }
    }
}

/// All cuts as bit sets, sorted like [`Cut`]s.
pub(crate) fn enumerate_cut_bits(q: &QuiverWithCycles) -> Vec<Bits> {
    if !is_covered(q) {
        log::warn!("quiver is not covered; arrows on no cycle are left out of every cut");
    }
    let mut search = CutSearch::new(q);
    search.run();
    let mut found = search.found;
    let quiver = q.quiver();
    found.sort_by_cached_key(|b| Cut::from_bits(quiver, b));
    found
}

/// Every cut of `q`, sorted as arrow-id sequences.
pub fn enumerate_cuts(q: &QuiverWithCycles) -> Vec<Cut> {
    let quiver = q.quiver();
    enumerate_cut_bits(q).iter().map(|b| Cut::from_bits(quiver, b)).collect()
}

/// True iff every arrow lies on some distinguished cycle.
pub fn is_covered(q: &QuiverWithCycles) -> bool {
    let on_cycle: BTreeSet<&ArrowId> = q.cycles().iter().flat_map(|c| c.arrows()).collect();
    q.quiver().arrows().iter().all(|a| on_cycle.contains(&a.id))
}

/// True iff the enumerated cuts cover every arrow.
pub fn has_enough_cuts(q: &QuiverWithCycles) -> bool {
    let arrows = q.quiver().arrows().len();
    let mut union = Bits::new(arrows);
    for b in enumerate_cut_bits(q) {
        union.union_with(&b);
    }
    union.count() == arrows
}

/// Degrees of a cut on the cycle-space basis walks, given as arrow positions
/// with signs.
fn basis_degrees(basis: &[Vec<(usize, i64)>], cut: &Bits) -> Vec<i64> {
    basis
        .iter()
        .map(|walk| walk.iter().filter(|(a, _)| cut.contains(*a)).map(|(_, s)| s).sum())
        .collect()
}

fn indexed_basis(quiver: &Quiver) -> Vec<Vec<(usize, i64)>> {
    quiver
        .cycle_space_basis_forest()
        .iter()
        .map(|w| {
            w.steps
                .iter()
                .map(|s| (quiver.arrow_index(&s.arrow).expect("basis uses quiver arrows"), s.direction.sign()))
                .collect()
        })
        .collect()
}

/// True iff both cuts give every cyclic walk the same degree. Decided on a
/// cycle-space basis, which suffices because walk degree is linear in the
/// signed arrow counts.
pub fn are_compatible(q: &QuiverWithCycles, c1: &Cut, c2: &Cut) -> Result<bool> {
    require_cut(q, c1)?;
    require_cut(q, c2)?;
    let basis = indexed_basis(q.quiver());
    let b1 = c1.to_bits(q.quiver())?;
    let b2 = c2.to_bits(q.quiver())?;
    Ok(basis_degrees(&basis, &b1) == basis_degrees(&basis, &b2))
}

/// True iff all cuts are pairwise compatible.
pub fn is_fully_compatible(q: &QuiverWithCycles) -> bool {
    let basis = indexed_basis(q.quiver());
    let mut cuts = enumerate_cut_bits(q).into_iter();
    let Some(first) = cuts.next() else { return true };
    let reference = basis_degrees(&basis, &first);
    cuts.all(|c| basis_degrees(&basis, &c) == reference)
}

/// The quiver with the cut arrows removed.
pub fn truncated_quiver(q: &QuiverWithCycles, c: &Cut) -> Result<Quiver> {
    require_cut(q, c)?;
    let quiver = q.quiver();
    Ok(Quiver::new(
        quiver.vertices().iter().cloned(),
        quiver.arrows().iter().filter(|a| !c.contains(&a.id)).cloned(),
    ))
}

/// Support of one relation: the rest of a distinguished cycle after the cut
/// arrow, in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Relation {
    pub sign: Option<Sign>,
    pub path: Vec<ArrowId>,
}

/// Truncated quiver plus, for each cut arrow, the relation paths obtained by
/// rotating each cycle through that arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPresentation {
    pub truncated_quiver: Quiver,
    pub relations: BTreeMap<ArrowId, Vec<Relation>>,
}

pub fn truncated_presentation(q: &QuiverWithCycles, c: &Cut) -> Result<TruncatedPresentation> {
    let truncated_quiver = truncated_quiver(q, c)?;
    let mut relations: BTreeMap<ArrowId, Vec<Relation>> = c.arrows.iter().map(|a| (a.clone(), Vec::new())).collect();
    for cycle in q.cycles() {
        let arrows = cycle.arrows();
        // A cut meets the cycle exactly once.
        let Some(pos) = arrows.iter().position(|a| c.contains(a)) else { continue };
        let path = arrows[pos + 1..].iter().chain(&arrows[..pos]).cloned().collect();
        relations
            .get_mut(&arrows[pos])
            .expect("cut arrows are keys")
            .push(Relation { sign: cycle.sign(), path });
    }
    for rels in relations.values_mut() {
        rels.sort();
    }
    Ok(TruncatedPresentation { truncated_quiver, relations })
}
