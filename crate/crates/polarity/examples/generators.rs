//! Seeded random generators: P4-sparse and P4-extendible graphs of any
//! size, spiders, and all graphs of a small order.

use polarity::decomposition::classify;
use polarity::gen::{graphs_up_to_iso, random_p4_extendible, random_p4_sparse, random_spider, rng};

fn main() -> polarity::Result<()> {
    let mut r = rng(42);
    let g = random_p4_sparse(100_000, &mut r);
    println!("P4-sparse graph: {} vertices, {} edges", g.n(), g.m());
    let h = random_p4_extendible(12, &mut r);
    println!("P4-extendible graph {}: {:?}", h.to_graph6(), classify(&h).is_p4_extendible);
    let (s, sp) = random_spider(4, 3, true, 0.5, &mut r);
    println!("thin spider {} with head {:?}", s.to_graph6(), sp.head);
    for n in 1..=7 {
        println!("order {n}: {} graphs up to isomorphism", graphs_up_to_iso(n)?.len());
    }
    Ok(())
}
