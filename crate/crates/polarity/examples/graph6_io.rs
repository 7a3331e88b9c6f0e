//! Reading and writing graph6 and the edge-list format.

use polarity::Graph;

fn main() -> polarity::Result<()> {
    let g = Graph::parse_graph6("Dhc")?;
    println!("Dhc has {} vertices and edges {:?}", g.n(), g.edges());
    let text = g.to_edge_list();
    print!("{text}");
    assert_eq!(Graph::parse_edge_list(&text)?, g);
    assert_eq!(g.to_graph6(), "Dhc");
    println!("complement: {}", g.complement().to_graph6());
    Ok(())
}
