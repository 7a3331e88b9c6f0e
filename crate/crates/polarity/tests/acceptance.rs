//! The ten acceptance criteria. Run with `cargo test --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits nonzero on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;

use polarity::canon::{canonical_form, is_isomorphic, CanonicalForm};
use polarity::decomposition::classify;
use polarity::dp::{evaluate, evaluate_graph, Evaluation};
use polarity::gen::{graphs_up_to_iso, random_parse_tree, random_ps_tree, random_spider, rng};
use polarity::obstructions::{
    build_extremal, cograph_check, decide_2polar, mine, preserves_2polar, verify_catalog, Catalog, GraphClass,
};
use polarity::oracle::{
    brute_force_max_subgraph, certifies, check_property, is_minimal_obstruction, is_sk_polar,
    spider_2polar_equals_split, SKBound, Target,
};
use polarity::{Graph, PropertyKind};

type Outcome = Result<String, String>;

fn small_in_class() -> Vec<(Graph, bool, bool)> {
    (1..=7)
        .flat_map(|n| graphs_up_to_iso(n).unwrap())
        .map(|g| {
            let r = classify(&g);
            (g, r.is_p4_sparse, r.is_p4_extendible)
        })
        .filter(|(_, s, e)| *s || *e)
        .collect()
}

/// Exact agreement with the oracle on all twelve slots.
fn matches_oracle(g: &Graph, ev: &Evaluation) -> Result<(), String> {
    for p in PropertyKind::ALL {
        let got = ev.result(p);
        let want = brute_force_max_subgraph(g, p).map_err(|e| e.to_string())?;
        if got.size != want.size {
            return Err(format!("{p:?} on {}: dp {} vs oracle {}", g.to_graph6(), got.size, want.size));
        }
        let sub = g.induced(&got.witness).map_err(|e| e.to_string())?;
        if check_property(&sub, p).map_err(|e| e.to_string())?.is_none() {
            return Err(format!("{p:?} witness {} fails on {}", got.witness, g.to_graph6()));
        }
        if let Some(c) = &got.partition {
            if !certifies(g, p, &got.witness, c) {
                return Err(format!("{p:?} certificate {c:?} invalid on {}", g.to_graph6()));
            }
        }
    }
    Ok(())
}

fn c1_exhaustive() -> Outcome {
    let (mut sparse, mut ext) = (0, 0);
    for (g, s, e) in small_in_class() {
        matches_oracle(&g, &evaluate_graph(&g).map_err(|e| e.to_string())?)?;
        sparse += s as usize;
        ext += e as usize;
    }
    Ok(format!("{sparse} P4-sparse and {ext} P4-extendible graphs on <= 7 vertices, 12 slots each"))
}

fn c2_random() -> Outcome {
    let mut r = rng(2024);
    for i in 0..1000 {
        let n = 10 + i % 3;
        for tree in [random_ps_tree(n, &mut r), random_parse_tree(n, &mut r)] {
            let g = tree.to_graph();
            matches_oracle(&g, &evaluate_graph(&g).map_err(|e| e.to_string())?)?;
        }
    }
    Ok("1000 P4-sparse + 1000 P4-extendible random graphs, n = 10..12".into())
}

fn c3_catalog() -> Outcome {
    let cat = Catalog::builtin();
    let mut lines = Vec::new();
    for family in [SKBound::TWO_POLAR, SKBound::TWO_ONE] {
        let rep = verify_catalog(cat, family).map_err(|e| e.to_string())?;
        let bad: Vec<String> =
            rep.entries.iter().filter(|e| !e.ok()).map(|e| format!("{}: {}", e.name, e.problems.join("; "))).collect();
        if !bad.is_empty() || !rep.ok() {
            return Err(format!("family {family}: {} sparse, {} extendible; {}", rep.sparse_count, rep.extendible_count, bad.join(" | ")));
        }
        lines.push(format!("({family}) {} P4-sparse / {} P4-extendible", rep.sparse_count, rep.extendible_count));
    }
    Ok(lines.join(", "))
}

fn c4_cographs() -> Outcome {
    let cat = Catalog::builtin();
    let n = cat.members(GraphClass::P4Sparse, SKBound::TWO_POLAR).len();
    let bad = cograph_check(cat);
    if n != 50 || !bad.is_empty() {
        return Err(format!("{n} entries, non-cographs: {bad:?}"));
    }
    Ok("all 50 P4-sparse entries are cographs".into())
}

fn c5_miner() -> Outcome {
    let cat = Catalog::builtin();
    let want: BTreeSet<CanonicalForm> = (1..=5)
        .flat_map(|i| [format!("F{i}"), format!("coF{i}")])
        .map(|name| canonical_form(&cat.get(&name).unwrap().graph).unwrap())
        .collect();
    for class in GraphClass::ALL {
        let got: BTreeSet<CanonicalForm> =
            mine(7, class, SKBound::TWO_POLAR).map_err(|e| e.to_string())?.into_iter().collect();
        if got != want {
            return Err(format!("{class}: mined {} forms, expected the 10 of F1..F5 and complements", got.len()));
        }
    }
    Ok("both classes: exactly F1..F5 and their complements".into())
}

fn c6_extremal() -> Outcome {
    let cat = Catalog::builtin();
    for (l, name) in [(1, "F1"), (2, "F13"), (3, "F21")] {
        let g = build_extremal(2, l).map_err(|e| e.to_string())?;
        let ok = is_isomorphic(&g, &cat.get(name).unwrap().graph)
            && is_minimal_obstruction(&g, Target::Polar(SKBound::TWO_POLAR)).unwrap()
            && g.components().len() == 4;
        if !ok {
            return Err(format!("l = {l} does not give a 4-component minimal obstruction isomorphic to {name}"));
        }
    }
    Ok("l = 1, 2, 3 give F1, F13, F21, minimal with 4 components".into())
}

fn c7_spiders() -> Outcome {
    let mut r = rng(77);
    let (mut split, mut thick) = (0, 0);
    for i in 0..500 {
        let t = r.gen_range(2..=5);
        let h = r.gen_range(0..=14 - 2 * t);
        let thin = i % 2 == 0;
        let (g, _) = random_spider(t, h, thin, r.gen_range(0.2..0.8), &mut r);
        if !spider_2polar_equals_split(&g).map_err(|e| e.to_string())? {
            return Err(format!("law fails on {}", g.to_graph6()));
        }
        split += check_property(&g, PropertyKind::MS).unwrap().is_some() as usize;
        thick += !thin as usize;
    }
    Ok(format!("500 spiders ({thick} thick), {split} split and 2-polar, {} neither", 500 - split))
}

fn c8_partial_complements() -> Outcome {
    let mut r = rng(88);
    let mut done = [0usize; 2];
    while done.iter().sum::<usize>() < 500 {
        let which = done[0] > done[1];
        let n = r.gen_range(4..=12);
        let g = if which { random_parse_tree(n, &mut r).to_graph() } else { random_ps_tree(n, &mut r).to_graph() };
        if is_sk_polar(&g, SKBound::TWO_POLAR).unwrap().is_none() {
            continue;
        }
        if !preserves_2polar(&g).map_err(|e| e.to_string())? {
            return Err(format!("a partial complement of {} leaves 2-polar or the class", g.to_graph6()));
        }
        done[which as usize] += 1;
    }
    Ok(format!("{} P4-sparse and {} P4-extendible 2-polar graphs", done[0], done[1]))
}

fn c9_linear() -> Outcome {
    let mut r = rng(9);
    let mut costs = Vec::new();
    for (n, reps) in [(1_000usize, 200), (10_000, 20), (100_000, 2)] {
        let tree = random_ps_tree(n, &mut r);
        let mut best = Duration::MAX;
        for _ in 0..5 {
            let t = Instant::now();
            for _ in 0..reps {
                std::hint::black_box(evaluate(std::hint::black_box(&tree)).size(PropertyKind::MP));
            }
            best = best.min(t.elapsed() / reps);
        }
        costs.push((n, tree.len(), best.as_secs_f64() * 1e9 / tree.len() as f64));
    }
    let per: Vec<f64> = costs.iter().map(|c| c.2).collect();
    let ratio = per.iter().cloned().fold(0.0, f64::max) / per.iter().cloned().fold(f64::MAX, f64::min);
    let detail = costs.iter().map(|(n, k, c)| format!("n={n}: {k} nodes, {c:.0} ns/node")).collect::<Vec<_>>().join("; ");
    if ratio <= 2.0 {
        Ok(format!("{detail}; max/min per-node ratio {ratio:.2}"))
    } else {
        Err(format!("{detail}; max/min per-node ratio {ratio:.2} > 2"))
    }
}

fn c10_decide() -> Outcome {
    let agree = |g: &Graph| -> Result<bool, String> {
        let d = decide_2polar(g).map_err(|e| e.to_string())?.is_2polar();
        let o = is_sk_polar(g, SKBound::TWO_POLAR).map_err(|e| e.to_string())?.is_some();
        if d != o {
            return Err(format!("decide_2polar says {d}, oracle {o} on {}", g.to_graph6()));
        }
        Ok(d)
    };
    let small = small_in_class();
    for (g, _, _) in &small {
        agree(g)?;
    }
    let mut r = rng(10);
    let mut negatives = 0;
    for i in 0..500 {
        let n = 8 + i % 2;
        let g = if i % 4 < 2 { random_ps_tree(n, &mut r).to_graph() } else { random_parse_tree(n, &mut r).to_graph() };
        negatives += !agree(&g)? as usize;
    }
    Ok(format!("{} small graphs and 500 random (n = 8..9, {negatives} not 2-polar)", small.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("oracle equivalence, exhaustive n <= 7", c1_exhaustive),
        ("oracle equivalence, random n = 10..12", c2_random),
        ("catalog counts 50/82 and 9/13", c3_catalog),
        ("P4-sparse obstructions are cographs", c4_cographs),
        ("miner completeness at order 7", c5_miner),
        ("extremal construction", c6_extremal),
        ("spider law: 2-polar iff split", c7_spiders),
        ("partial complements keep 2-polarity", c8_partial_complements),
        ("linear-time scaling of the DP", c9_linear),
        ("decide_2polar agrees with the oracle", c10_decide),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = run();
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
