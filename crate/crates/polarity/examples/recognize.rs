//! Classify a few graphs as cograph, P4-sparse and P4-extendible, printing
//! the offending vertices when a class fails.

use polarity::decomposition::classify;
use polarity::Graph;

fn main() -> polarity::Result<()> {
    let samples = [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("P5", Graph::path(5)),
        ("K3,3", Graph::complete_bipartite(3, 3)),
        ("C5 + pendant P3", Graph::parse_graph6("Ghe?GC")?),
    ];
    for (name, g) in &samples {
        let r = classify(g);
        println!("{name:>16}: cograph {:5} P4-sparse {:5} P4-extendible {}", r.is_cograph, r.is_p4_sparse, r.is_p4_extendible);
        if let Some(w) = r.witness() {
            println!("{:>16}  witness {} ({})", "", w.vertices, w.reason);
        }
    }
    Ok(())
}
