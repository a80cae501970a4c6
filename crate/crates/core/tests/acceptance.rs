//! End-to-end acceptance checks. Runs as a plain binary and prints one line
//! per criterion.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use quiver_cuts::{
    dynkin_quiver, enumerate_cuts, euler_characteristic, h1, has_enough_cuts, is_covered, is_cut,
    is_fully_compatible, is_simply_connected, morita_split, mutate, mutation_graph, standard_cuts, tensor_qwc,
    truncated_presentation, Arrow, Cut, DivisionLabel, LabeledQuiver, LabeledQuiverWithCycles, MutationDirection,
    Quiver, Sign, Status, VertexId, VertexLabel, DEFAULT_COSET_BUDGET,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{brute_force_cuts, fixture, ids, isomorphic, random_tree};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn dynkin(spec: &str) -> LabeledQuiver {
    dynkin_quiver(&spec.parse().expect("spec parses")).expect("valid spec")
}

fn e6_f4() -> LabeledQuiverWithCycles {
    morita_split(&tensor_qwc(&dynkin("E6"), &dynkin("F4"))).expect("no inconsistent split")
}

fn e6_f4_count() -> Outcome {
    let t = e6_f4();
    let q = t.qwc.quiver();
    ensure!(
        (q.vertices().len(), q.arrows().len(), t.qwc.cycles().len()) == (24, 53, 30),
        "shape {} / {} / {}",
        q.vertices().len(),
        q.arrows().len(),
        t.qwc.cycles().len()
    );
    let n = enumerate_cuts(&t.qwc).len();
    ensure!(n == 16599, "{n} cuts");
    Ok(())
}

fn e6_f4_structure() -> Outcome {
    let t = e6_f4();
    let q = &t.qwc;
    ensure!(is_covered(q), "not covered");
    ensure!(has_enough_cuts(q), "not enough cuts");
    ensure!(is_fully_compatible(q), "not fully compatible");
    let verdict = is_simply_connected(q, DEFAULT_COSET_BUDGET);
    ensure!(verdict.status == Status::Yes, "simply connected: {verdict}");
    let g = mutation_graph(q);
    ensure!(g.nodes.len() == 16599, "{} nodes", g.nodes.len());
    ensure!(g.is_connected(), "{} components", g.component_count());
    Ok(())
}

fn b2_b2_fixture() -> Outcome {
    let t = fixture("b2xb2_split.json");
    let q = &t.qwc;
    let cuts: Vec<BTreeSet<String>> = enumerate_cuts(q).iter().map(ids).collect();
    ensure!(cuts.len() == 7, "{} cuts", cuts.len());
    ensure!(cuts == brute_force_cuts(q), "enumeration disagrees with brute force");
    let g = mutation_graph(q);
    ensure!(g.nodes.len() == 7 && g.is_connected(), "graph: {} nodes, {} components", g.nodes.len(), g.component_count());
    let de = Cut::new(["d", "e"]);
    ensure!(g.index_of(&de).is_some(), "{{d,e}} is not a cut");
    let mutated = mutate(q, &de, &VertexId::new("3"), MutationDirection::Minus).map_err(|e| e.to_string())?;
    ensure!(mutated == Cut::new(["c", "f"]), "mu_3^- {{d,e}} = {mutated}");
    Ok(())
}

fn a3_b2_fixture() -> Outcome {
    let t = fixture("a3xb2.json");
    let q = &t.qwc;
    let cuts: Vec<BTreeSet<String>> = enumerate_cuts(q).iter().map(ids).collect();
    ensure!(cuts.len() == 13, "{} cuts", cuts.len());
    ensure!(cuts == brute_force_cuts(q), "enumeration disagrees with brute force");
    let g = mutation_graph(q);
    ensure!(g.nodes.len() == 13 && g.is_connected(), "graph: {} nodes, {} components", g.nodes.len(), g.component_count());
    let built = tensor_qwc(&dynkin("A3:1<2>3"), &dynkin("B2:2>1"));
    ensure!(built.qwc == t.qwc, "fixture differs from the tensor construction");
    let (c1, c2, c3) = standard_cuts(&built).map_err(|e| e.to_string())?;
    for c in [&c1, &c2, &c3] {
        ensure!(is_cut(q, c), "standard cut {c} is not a cut");
    }
    Ok(())
}

fn circle() -> Outcome {
    let t = fixture("circle.json");
    let q = &t.qwc;
    ensure!(euler_characteristic(q) == 0, "chi = {}", euler_characteristic(q));
    let h = h1(q);
    ensure!(h.free_rank == 1 && h.torsion.is_empty(), "H1 {h}");
    let verdict = is_simply_connected(q, DEFAULT_COSET_BUDGET);
    ensure!(verdict.status == Status::No, "verdict {verdict}");

    // The same diamond from the construction: an extension over one vertex
    // tensored with Base -> Ext -> Base, split in two.
    let point = LabeledQuiver::new(
        Quiver::new([VertexId::new("1")], []),
        [(VertexId::new("1"), VertexLabel::Single(DivisionLabel::ext(2)))].into(),
    );
    let path = LabeledQuiver::new(
        Quiver::new(["1", "2", "3"].map(VertexId::from), [Arrow::new("1-2", "1", "2"), Arrow::new("2-3", "2", "3")]),
        [
            ("1".into(), VertexLabel::Single(DivisionLabel::BASE)),
            ("2".into(), VertexLabel::Single(DivisionLabel::ext(2))),
            ("3".into(), VertexLabel::Single(DivisionLabel::BASE)),
        ]
        .into(),
    );
    let built = morita_split(&tensor_qwc(&point, &path)).map_err(|e| e.to_string())?;
    ensure!(isomorphic(&built, &t), "constructed diamond differs from the fixture");
    Ok(())
}

fn tree_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut brute_checked = 0;
    for instance in 0..200 {
        let (l, r) = (random_tree(&mut rng, 2..=4, false), random_tree(&mut rng, 2..=4, false));
        let t = tensor_qwc(&l, &r);
        let q = &t.qwc;
        let ctx = |what: &str| format!("instance {instance}: {what}");

        ensure!(euler_characteristic(q) == 1, "{}", ctx("chi != 1"));
        let covered = is_covered(q);
        let enough = has_enough_cuts(q);
        ensure!(covered && enough, "{}", ctx("not covered with enough cuts"));

        let cuts = enumerate_cuts(q);
        let cycle_arrows: BTreeSet<_> = q.cycles().iter().flat_map(|c| c.arrows()).collect();
        if cycle_arrows.len() <= 14 {
            brute_checked += 1;
            let got: Vec<BTreeSet<String>> = cuts.iter().map(ids).collect();
            ensure!(got == brute_force_cuts(q), "{}", ctx("enumeration disagrees with brute force"));
        }

        for c in &cuts {
            for v in q.quiver().vertices() {
                for (dir, back) in [
                    (MutationDirection::Plus, MutationDirection::Minus),
                    (MutationDirection::Minus, MutationDirection::Plus),
                ] {
                    let Ok(m) = mutate(q, c, v, dir) else { continue };
                    ensure!(is_cut(q, &m), "{}", ctx(&format!("mutation of {c} at {v} gives non-cut {m}")));
                    let undone = mutate(q, &m, v, back).map_err(|e| ctx(&e.to_string()))?;
                    ensure!(&undone == c, "{}", ctx(&format!("mutation at {v} is not undone on {c}")));
                }
            }
            let truncated = quiver_cuts::truncated_quiver(q, c).map_err(|e| ctx(&e.to_string()))?;
            ensure!(truncated.is_acyclic(), "{}", ctx(&format!("Q_C has a cycle for {c}")));
        }

        let compatible = is_fully_compatible(q);
        if compatible && covered && enough {
            ensure!(mutation_graph(q).is_connected(), "{}", ctx("mutation graph not connected"));
        }
        if is_simply_connected(q, DEFAULT_COSET_BUDGET).status == Status::Yes {
            ensure!(compatible, "{}", ctx("simply connected but not fully compatible"));
        }
    }
    ensure!(brute_checked > 100, "only {brute_checked} instances small enough for brute force");
    Ok(())
}

fn morita_golden() -> Outcome {
    let spec: quiver_cuts::LabeledDynkinSpec = "B2:2>1".parse().map_err(|e: quiver_cuts::Error| e.to_string())?;
    let b2 = dynkin_quiver(&spec.with_split_count(2)).map_err(|e| e.to_string())?;
    let split = morita_split(&tensor_qwc(&b2, &b2)).map_err(|e| e.to_string())?;
    ensure!(isomorphic(&split, &fixture("b2xb2_split.json")), "split is not isomorphic to the fixture");
    Ok(())
}

fn truncation() -> Outcome {
    let t = tensor_qwc(&dynkin("A3:1<2>3"), &dynkin("B2:2>1"));
    let (_, _, c3) = standard_cuts(&t).map_err(|e| e.to_string())?;
    let p = truncated_presentation(&t.qwc, &c3).map_err(|e| e.to_string())?;

    // Commuting grid of the two factor paths: horizontal 2 -> 1, 2 -> 3 in
    // each row, vertical 2 -> 1 in each column.
    let mut expected: Vec<(String, String)> = Vec::new();
    for j in 1..=2 {
        expected.push((format!("2.{j}"), format!("1.{j}")));
        expected.push((format!("2.{j}"), format!("3.{j}")));
    }
    for i in 1..=3 {
        expected.push((format!("{i}.2"), format!("{i}.1")));
    }
    expected.sort();
    let mut got: Vec<(String, String)> =
        p.truncated_quiver.arrows().iter().map(|a| (a.source.to_string(), a.target.to_string())).collect();
    got.sort();
    ensure!(got == expected, "truncated arrows {got:?}");
    let vertices: Vec<String> = p.truncated_quiver.vertices().iter().map(|v| v.to_string()).collect();
    ensure!(vertices == ["1.1", "1.2", "2.1", "2.2", "3.1", "3.2"], "vertices {vertices:?}");

    ensure!(p.relations.len() == 2, "{} diagonal arrows", p.relations.len());
    for (arrow, rels) in &p.relations {
        ensure!(rels.len() == 2, "{arrow} has {} relation paths", rels.len());
        let signs: BTreeSet<_> = rels.iter().map(|r| r.sign).collect();
        ensure!(signs == BTreeSet::from([Some(Sign::Plus), Some(Sign::Minus)]), "{arrow}: signs {signs:?}");
        ensure!(rels.iter().all(|r| r.path.len() == 2), "{arrow}: relation paths of wrong length");
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("E6 x F4 has 16599 cuts", e6_f4_count, Duration::from_secs(10)),
        ("E6 x F4 structural suite", e6_f4_structure, Duration::from_secs(60)),
        ("B2 x B2 split fixture", b2_b2_fixture, Duration::from_secs(1)),
        ("A3 x B2 fixture", a3_b2_fixture, Duration::from_secs(1)),
        ("circle counterexample", circle, Duration::from_secs(1)),
        ("tree x tree property suite", tree_properties, Duration::from_secs(120)),
        ("Morita split golden test", morita_golden, Duration::from_secs(1)),
        ("truncated presentation", truncation, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            if elapsed > limit {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(())
            }
        });
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
