//! Build the ps-tree of a P4-sparse graph and the parse tree of a
//! P4-extendible one, print them, and rebuild the graphs from the text.

use polarity::decomposition::{build_parse_tree, build_ps_tree, detect_spider, DecompTree};
use polarity::gen::{random_spider, rng};
use polarity::Graph;

fn main() -> polarity::Result<()> {
    let mut r = rng(1);
    let (spider, _) = random_spider(3, 2, false, 0.5, &mut r);
    let sp = detect_spider(&spider).expect("a spider");
    println!("thick spider {}: legs {:?} body {:?} head {:?}", spider.to_graph6(), sp.legs, sp.body, sp.head);

    let g = polarity::graph::disjoint_union(&[spider, Graph::complete(2)]);
    let t = build_ps_tree(&g)?;
    print!("{}", t.to_text());
    assert_eq!(DecompTree::from_text(&t.to_text())?.to_graph(), g);

    // C5 is not P4-sparse but is an extension graph
    assert!(build_ps_tree(&Graph::cycle(5)).is_err());
    let t = build_parse_tree(&Graph::cycle(5))?;
    print!("{}", t.to_text());
    Ok(())
}
