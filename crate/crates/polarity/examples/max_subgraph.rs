//! Largest induced subgraph with each of the twelve properties, with the
//! certifying partition, on a random P4-extendible graph.

use polarity::dp::max_subgraph;
use polarity::gen::{random_p4_extendible, rng};
use polarity::oracle::brute_force_max_subgraph;
use polarity::PropertyKind;

fn main() -> polarity::Result<()> {
    let g = random_p4_extendible(14, &mut rng(7));
    println!("graph {} on {} vertices", g.to_graph6(), g.n());
    for p in PropertyKind::ALL {
        let res = max_subgraph(&g, p)?;
        let check = brute_force_max_subgraph(&g, p)?.size;
        let cert = res.partition.map(|c| format!(" A={} B={}", c.a, c.b)).unwrap_or_default();
        println!("{:>4} ({}): {} = oracle {} {}{cert}", format!("{p:?}"), p.name(), res.size, check, res.witness);
    }
    Ok(())
}
