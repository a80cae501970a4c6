#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use quiver_cuts::{
    parse_quiver, Arrow, DivisionLabel, LabeledQuiver, LabeledQuiverWithCycles, Quiver, QuiverWithCycles, VertexId,
    VertexLabel,
};
use rand::Rng;

pub fn fixture(name: &str) -> LabeledQuiverWithCycles {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_quiver(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn ids(cut: &quiver_cuts::Cut) -> BTreeSet<String> {
    cut.arrows().iter().map(|a| a.to_string()).collect()
}

/// Every subset of the arrows lying on a cycle, kept when it meets each
/// cycle exactly once (with multiplicity).
pub fn brute_force_cuts(q: &QuiverWithCycles) -> Vec<BTreeSet<String>> {
    let on_cycle: Vec<String> = q
        .cycles()
        .iter()
        .flat_map(|c| c.arrows().iter().map(|a| a.to_string()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    assert!(on_cycle.len() <= 20, "brute force over {} arrows", on_cycle.len());
    let position: BTreeMap<&str, usize> = on_cycle.iter().enumerate().map(|(i, a)| (a.as_str(), i)).collect();
    let cycles: Vec<Vec<usize>> =
        q.cycles().iter().map(|c| c.arrows().iter().map(|a| position[a.as_str()]).collect()).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << on_cycle.len()) {
        if cycles.iter().all(|c| c.iter().filter(|&&a| mask >> a & 1 == 1).count() == 1) {
            out.push((0..on_cycle.len()).filter(|&a| mask >> a & 1 == 1).map(|a| on_cycle[a].clone()).collect());
        }
    }
    out.sort();
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Cycles as rotation-normalised sequences of arrow positions, with sign.
fn cycle_keys(q: &QuiverWithCycles, arrow_pos: &dyn Fn(&str) -> usize) -> BTreeSet<(Vec<usize>, Option<i8>)> {
    q.cycles()
        .iter()
        .map(|c| {
            let seq: Vec<usize> = c.arrows().iter().map(|a| arrow_pos(a.as_str())).collect();
            let best = (0..seq.len())
                .map(|r| seq[r..].iter().chain(&seq[..r]).copied().collect::<Vec<_>>())
                .min()
                .unwrap_or_default();
            (best, c.sign().map(|s| s.as_i8()))
        })
        .collect()
}

/// Brute-force isomorphism of labelled quivers with signed cycles: tries
/// every vertex bijection preserving labels, then every arrow bijection
/// compatible with it.
pub fn isomorphic(a: &LabeledQuiverWithCycles, b: &LabeledQuiverWithCycles) -> bool {
    let (qa, qb) = (a.qwc.quiver(), b.qwc.quiver());
    let (n, m) = (qa.vertices().len(), qa.arrows().len());
    if n != qb.vertices().len() || m != qb.arrows().len() || a.qwc.cycles().len() != b.qwc.cycles().len() {
        return false;
    }
    let vpos = |q: &Quiver, v: &VertexId| q.vertex_index(v).unwrap();
    let label = |l: &LabeledQuiverWithCycles, v: &VertexId| l.label(v).product();
    let ends_a: Vec<(usize, usize)> = qa.arrows().iter().map(|x| (vpos(qa, &x.source), vpos(qa, &x.target))).collect();
    let ends_b: Vec<(usize, usize)> = qb.arrows().iter().map(|x| (vpos(qb, &x.source), vpos(qb, &x.target))).collect();
    let target_cycles = cycle_keys(&b.qwc, &|id| qb.arrow_index(&id.into()).unwrap());

    for perm in permutations(n) {
        if (0..n).any(|v| label(a, &qa.vertices()[v]) != label(b, &qb.vertices()[perm[v]])) {
            continue;
        }
        // Candidate images of each arrow of `a`.
        let candidates: Vec<Vec<usize>> = ends_a
            .iter()
            .map(|&(s, t)| (0..m).filter(|&j| ends_b[j] == (perm[s], perm[t])).collect())
            .collect();
        if candidates.iter().any(Vec::is_empty) {
            continue;
        }
        let mut image = vec![usize::MAX; m];
        let mut used = vec![false; m];
        if assign_arrows(0, &candidates, &mut image, &mut used, &mut |image| {
            let mapped = cycle_keys(&a.qwc, &|id| image[qa.arrow_index(&id.into()).unwrap()]);
            mapped == target_cycles
        }) {
            return true;
        }
    }
    false
}

fn assign_arrows(
    i: usize,
    candidates: &[Vec<usize>],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if i == candidates.len() {
        return accept(image);
    }
    for &j in &candidates[i] {
        if used[j] {
            continue;
        }
        used[j] = true;
        image[i] = j;
        if assign_arrows(i + 1, candidates, image, used, accept) {
            return true;
        }
        used[j] = false;
    }
    false
}

/// A random oriented tree with random labels when `labels` is set; vertex 1
/// is always `Base`.
pub fn random_tree(rng: &mut impl Rng, sizes: std::ops::RangeInclusive<usize>, labels: bool) -> LabeledQuiver {
    let n = rng.gen_range(sizes);
    let vertices: Vec<VertexId> = (1..=n).map(|i| VertexId::new(format!("{i}"))).collect();
    let mut arrows = Vec::new();
    for i in 2..=n {
        let j = rng.gen_range(1..i);
        let (s, t) = if rng.gen_bool(0.5) { (i, j) } else { (j, i) };
        arrows.push(Arrow::new(format!("{s}-{t}"), format!("{s}"), format!("{t}")));
    }
    let mut map = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        let l = if labels && i > 0 && rng.gen_bool(0.5) { DivisionLabel::ext(2) } else { DivisionLabel::BASE };
        map.insert(v.clone(), VertexLabel::Single(l));
    }
    LabeledQuiver::new(Quiver::new(vertices, arrows), map)
}

/// Undirected mutation edges among `cuts`, from the definition: at a vertex
/// whose incoming arrows all lie in the cut and outgoing arrows none (or the
/// reverse), swap the two sets.
pub fn brute_force_mutation_edges(q: &QuiverWithCycles, cuts: &[BTreeSet<String>]) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for (i, c) in cuts.iter().enumerate() {
        for v in q.quiver().vertices() {
            let incoming: BTreeSet<String> =
                q.quiver().arrows().iter().filter(|a| &a.target == v).map(|a| a.id.to_string()).collect();
            let outgoing: BTreeSet<String> =
                q.quiver().arrows().iter().filter(|a| &a.source == v).map(|a| a.id.to_string()).collect();
            if incoming.is_empty() && outgoing.is_empty() {
                continue;
            }
            for (leave, join) in [(&incoming, &outgoing), (&outgoing, &incoming)] {
                if leave.is_subset(c) && join.is_disjoint(c) {
                    let next: BTreeSet<String> = c.difference(leave).chain(join.iter()).cloned().collect();
                    if let Some(j) = cuts.iter().position(|d| d == &next) {
                        edges.insert((i.min(j), i.max(j)));
                    }
                }
            }
        }
    }
    edges
}
