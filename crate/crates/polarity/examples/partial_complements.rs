//! Partial complements of an obstruction and the extremal family
//! lK1 + (3-l)K2 + K(l,l).

use polarity::canon::is_isomorphic;
use polarity::obstructions::{build_extremal, closure_under_partial_complement, partial_complements, Catalog};

fn main() -> polarity::Result<()> {
    let cat = Catalog::builtin();
    let f1 = &cat.get("F1").unwrap().graph;
    println!("F1 has {} partial complements up to isomorphism", partial_complements(f1)?.len());
    let closure = closure_under_partial_complement(f1)?;
    let names: Vec<&str> = cat
        .entries
        .iter()
        .filter(|e| closure.iter().any(|c| is_isomorphic(&c.to_graph(), &e.graph)))
        .map(|e| e.name.as_str())
        .collect();
    println!("closure of F1: {names:?}");
    for l in 1..=3 {
        let g = build_extremal(2, l)?;
        let hit = cat.entries.iter().find(|e| is_isomorphic(&e.graph, &g)).map(|e| e.name.as_str());
        println!("l = {l}: {} -> {hit:?}", g.to_graph6());
    }
    Ok(())
}
