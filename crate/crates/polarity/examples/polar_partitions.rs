//! (s,k)-polar partitions and minimal obstructions with the exact search.

use polarity::oracle::{is_minimal_obstruction, is_sk_polar, SKBound, Target};
use polarity::Graph;

fn main() -> polarity::Result<()> {
    let c5 = Graph::cycle(5);
    for (s, k) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let b = SKBound::new(s, k);
        match is_sk_polar(&c5, b)? {
            Some((a, bb)) => println!("C5 is ({b})-polar: A={a} B={bb}"),
            None => println!("C5 is not ({b})-polar"),
        }
    }
    let c5_split = is_minimal_obstruction(&c5, Target::Polar(SKBound::new(1, 1)))?;
    println!("C5 is a minimal split obstruction: {c5_split}");
    Ok(())
}
