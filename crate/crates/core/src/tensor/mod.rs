//! Tensor products of labelled quivers, their standard cuts, and the Morita
//! splitting of vertices whose algebra `G (x) G` is not a division algebra.
//!
//! Identifier scheme for `tensor_qwc(Q1, Q2)`:
//!
//! | object                         | id          |
//! |--------------------------------|-------------|
//! | vertex `(i, j)`                | `i.j`       |
//! | horizontal arrow `(alpha, j)`  | `h:alpha.j` |
//! | vertical arrow `(i, beta)`     | `v:i.beta`  |
//! | diagonal arrow `(alpha*, beta*)` | `d:alpha.beta` |
//!
//! After [`morita_split`] the copies of a split vertex `x` are `x@1 .. x@n`
//! and the copy of an arrow `a` between copies `k` and `k'` is `a@k:k'`.

mod dynkin;
mod labels;

use std::collections::{BTreeMap, BTreeSet};

pub use dynkin::{dynkin_quiver, l_homogeneity, DynkinType, LabeledDynkinSpec};
pub use labels::{DivisionLabel, LabelKind, LabeledQuiver, LabeledQuiverWithCycles, VertexLabel};

use crate::cuts::Cut;
use crate::error::{Error, Result};
use crate::quiver::{Arrow, ArrowId, Cycle, Quiver, QuiverWithCycles, Sign, VertexId};
use labels::Provenance;

fn pair_vertex(i: &VertexId, j: &VertexId) -> VertexId {
    VertexId::new(format!("{i}.{j}"))
}

/// `Q1 (x) Q2` with its two families of triangles: for arrows
/// `alpha: a -> a'` and `beta: b -> b'` the diagonal arrow
/// `(a', b') -> (a, b)` closes a `+` triangle through `(a, b')` and a `-`
/// triangle through `(a', b)`.
pub fn tensor_qwc(q1: &LabeledQuiver, q2: &LabeledQuiver) -> LabeledQuiverWithCycles {
    let (v1, v2) = (q1.quiver.vertices(), q2.quiver.vertices());
    let (a1, a2) = (q1.quiver.arrows(), q2.quiver.arrows());

    let mut vertices = Vec::with_capacity(v1.len() * v2.len());
    let mut labels = BTreeMap::new();
    for i in v1 {
        for j in v2 {
            let v = pair_vertex(i, j);
            labels.insert(v.clone(), VertexLabel::Pair(q1.label(i).product(), q2.label(j).product()));
            vertices.push(v);
        }
    }

    let horizontal = |alpha: &Arrow, j: &VertexId| {
        Arrow::new(format!("h:{}.{j}", alpha.id), pair_vertex(&alpha.source, j), pair_vertex(&alpha.target, j))
    };
    let vertical = |i: &VertexId, beta: &Arrow| {
        Arrow::new(format!("v:{i}.{}", beta.id), pair_vertex(i, &beta.source), pair_vertex(i, &beta.target))
    };
    let diagonal = |alpha: &Arrow, beta: &Arrow| {
        Arrow::new(
            format!("d:{}.{}", alpha.id, beta.id),
            pair_vertex(&alpha.target, &beta.target),
            pair_vertex(&alpha.source, &beta.source),
        )
    };

    let mut arrows = Vec::new();
    let mut provenance = Provenance::default();
    for alpha in a1 {
        for j in v2 {
            let a = horizontal(alpha, j);
            provenance.horizontal.push(a.id.clone());
            arrows.push(a);
        }
    }
    for i in v1 {
        for beta in a2 {
            let a = vertical(i, beta);
            provenance.vertical.push(a.id.clone());
            arrows.push(a);
        }
    }
    let mut cycles = Vec::with_capacity(2 * a1.len() * a2.len());
    for alpha in a1 {
        for beta in a2 {
            let d = diagonal(alpha, beta);
            let up = vec![vertical(&alpha.source, beta).id, horizontal(alpha, &beta.target).id, d.id.clone()];
            let across = vec![horizontal(alpha, &beta.source).id, vertical(&alpha.target, beta).id, d.id.clone()];
            cycles.push(Cycle::new(up, Some(Sign::Plus)));
            cycles.push(Cycle::new(across, Some(Sign::Minus)));
            provenance.diagonal.push(d.id.clone());
            arrows.push(d);
        }
    }
    for class in [&mut provenance.vertical, &mut provenance.horizontal, &mut provenance.diagonal] {
        class.sort();
    }
    let qwc = QuiverWithCycles::new(Quiver::new(vertices, arrows), cycles);
    LabeledQuiverWithCycles { qwc, labels, provenance: Some(provenance) }
}

/// The three standard cuts `(C1, C2, C3)` of a tensor quiver: all vertical,
/// all horizontal and all diagonal arrows. Split quivers keep them, with each
/// arrow replaced by its copies.
pub fn standard_cuts(t: &LabeledQuiverWithCycles) -> Result<(Cut, Cut, Cut)> {
    let p = t.provenance.as_ref().ok_or(Error::NotATensor)?;
    Ok((Cut::new(p.vertical.clone()), Cut::new(p.horizontal.clone()), Cut::new(p.diagonal.clone())))
}

/// Replaces each `Ext (x) Ext` vertex by `n` copies, `n` its split count.
///
/// An arrow between two split vertices is copied once per block (`k -> k`);
/// an arrow touching one split vertex is copied once per copy of it; other
/// arrows are kept. Every lift of a distinguished cycle is distinguished,
/// with the sign of the original. Without split vertices the input is
/// returned unchanged.
pub fn morita_split(t: &LabeledQuiverWithCycles) -> Result<LabeledQuiverWithCycles> {
    let quiver = t.qwc.quiver();
    let mut n: Option<u32> = None;
    let mut copies: Vec<u32> = Vec::with_capacity(quiver.vertices().len());
    for v in quiver.vertices() {
        match t.label(v).split()? {
            Some(k) => {
                if let Some(m) = n.filter(|&m| m != k) {
                    return Err(Error::InconsistentSplit(m, k));
                }
                n = Some(k);
                copies.push(if k > 1 { k } else { 0 });
            }
            None => copies.push(0),
        }
    }
    if copies.iter().all(|&k| k == 0) {
        return Ok(t.clone());
    }

    let is_split = |v: usize| copies[v] > 0;
    let vertex_copy = |v: usize, k: u32| {
        let id = &quiver.vertices()[v];
        if is_split(v) {
            VertexId::new(format!("{id}@{k}"))
        } else {
            id.clone()
        }
    };
    let range = |v: usize| 1..=copies[v].max(1);

    let mut vertices = Vec::new();
    let mut labels = BTreeMap::new();
    for (v, id) in quiver.vertices().iter().enumerate() {
        for k in range(v) {
            let copy = vertex_copy(v, k);
            let label = if is_split(v) { VertexLabel::Single(DivisionLabel::ext(1)) } else { t.label(id) };
            labels.insert(copy.clone(), label);
            vertices.push(copy);
        }
    }

    // Arrow copies keyed by (arrow position, source copy, target copy).
    let arrow_copy = |a: usize, ks: u32, kt: u32| -> Option<ArrowId> {
        let (s, tv) = quiver.ends(a)?;
        if is_split(s) && is_split(tv) && ks != kt {
            return None;
        }
        let id = &quiver.arrows()[a].id;
        Some(if is_split(s) || is_split(tv) { ArrowId::new(format!("{id}@{ks}:{kt}")) } else { id.clone() })
    };
    let mut arrows = Vec::new();
    let mut images: Vec<Vec<ArrowId>> = vec![Vec::new(); quiver.arrows().len()];
    for (a, arrow) in quiver.arrows().iter().enumerate() {
        let (s, tv) = quiver.ends(a).ok_or_else(|| Error::UnknownArrow(arrow.id.clone()))?;
        for ks in range(s) {
            for kt in range(tv) {
                if let Some(id) = arrow_copy(a, ks, kt) {
                    arrows.push(Arrow::new(id.clone(), vertex_copy(s, ks), vertex_copy(tv, kt)));
                    images[a].push(id);
                }
            }
        }
    }

    let mut cycles = Vec::new();
    for (cycle, positions) in t.qwc.cycles().iter().zip(t.qwc.cycle_indices()) {
        // Vertex visited before step i, for each position around the cycle.
        let stops: Vec<usize> = positions.iter().map(|&a| quiver.ends(a).map_or(0, |e| e.0)).collect();
        let mut choice: Vec<u32> = stops.iter().map(|_| 1).collect();
        loop {
            let lift: Option<Vec<ArrowId>> = positions
                .iter()
                .enumerate()
                .map(|(i, &a)| arrow_copy(a, choice[i], choice[(i + 1) % choice.len()]))
                .collect();
            if let Some(lift) = lift {
                cycles.push(Cycle::new(lift, cycle.sign()));
            }
            // Odometer over copy choices at each stop.
            let mut i = 0;
            while i < choice.len() {
                if choice[i] < copies[stops[i]].max(1) {
                    choice[i] += 1;
                    break;
                }
                choice[i] = 1;
                i += 1;
            }
            if i == choice.len() {
                break;
            }
        }
    }

    let provenance = t.provenance.as_ref().map(|p| {
        let lift = |class: &[ArrowId]| -> Vec<ArrowId> {
            let mut out: Vec<ArrowId> = class
                .iter()
                .filter_map(|id| quiver.arrow_index(id))
                .flat_map(|a| images[a].iter().cloned())
                .collect();
            out.sort();
            out
        };
        Provenance { vertical: lift(&p.vertical), horizontal: lift(&p.horizontal), diagonal: lift(&p.diagonal) }
    });
    let qwc = QuiverWithCycles::new(Quiver::new(vertices, arrows), cycles);
    Ok(LabeledQuiverWithCycles { qwc, labels, provenance })
}

/// Arrow ids of each class of a tensor quiver, for inspection.
pub fn arrow_classes(t: &LabeledQuiverWithCycles) -> Result<[BTreeSet<ArrowId>; 3]> {
    let p = t.provenance.as_ref().ok_or(Error::NotATensor)?;
    let set = |v: &Vec<ArrowId>| v.iter().cloned().collect::<BTreeSet<_>>();
    Ok([set(&p.vertical), set(&p.horizontal), set(&p.diagonal)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuts::{enumerate_cuts, is_cut};

    fn dynkin(s: &str) -> LabeledQuiver {
        dynkin_quiver(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn counts() {
        let t = tensor_qwc(&dynkin("A3"), &dynkin("A2"));
        let q = t.qwc.quiver();
        assert_eq!(q.vertices().len(), 6);
        assert_eq!(q.arrows().len(), 2 * 2 + 3 + 2);
        assert_eq!(t.qwc.cycles().len(), 4);
        assert!(t.qwc.validate().is_empty());
    }

    #[test]
    fn standard_cuts_are_cuts() {
        let t = tensor_qwc(&dynkin("A3:1<2>3"), &dynkin("B2"));
        let (c1, c2, c3) = standard_cuts(&t).unwrap();
        for c in [&c1, &c2, &c3] {
            assert!(is_cut(&t.qwc, c), "{c}");
        }
        assert_eq!(enumerate_cuts(&t.qwc).len(), 13);
    }

    #[test]
    fn split_of_b2_square() {
        let t = tensor_qwc(&dynkin("B2:2>1"), &dynkin("B2:2>1"));
        let s = morita_split(&t).unwrap();
        assert_eq!(s.qwc.quiver().vertices().len(), 5);
        assert_eq!(s.qwc.quiver().arrows().len(), 8);
        assert_eq!(s.qwc.cycles().len(), 4);
        assert!(s.qwc.validate().is_empty());
        assert_eq!(enumerate_cuts(&s.qwc).len(), 7);
        let (c1, c2, c3) = standard_cuts(&s).unwrap();
        for c in [&c1, &c2, &c3] {
            assert!(is_cut(&s.qwc, c), "{c}");
        }
    }

    #[test]
    fn split_without_ext_pairs_is_identity() {
        let t = tensor_qwc(&dynkin("A2"), &dynkin("C2"));
        assert_eq!(morita_split(&t).unwrap(), t);
    }

    #[test]
    fn mismatched_split_counts() {
        let l = dynkin_quiver(&"B2".parse::<LabeledDynkinSpec>().unwrap().with_split_count(2)).unwrap();
        let r = dynkin_quiver(&"B2".parse::<LabeledDynkinSpec>().unwrap().with_split_count(3)).unwrap();
        assert_eq!(morita_split(&tensor_qwc(&l, &r)), Err(Error::InconsistentSplit(2, 3)));
    }

    #[test]
    fn not_a_tensor() {
        let t = tensor_qwc(&dynkin("A2"), &dynkin("A2"));
        let plain = LabeledQuiverWithCycles::new(t.qwc.clone(), t.labels.clone());
        assert_eq!(standard_cuts(&plain), Err(Error::NotATensor));
    }
}
