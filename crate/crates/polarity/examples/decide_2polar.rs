//! Decide 2-polarity by searching for catalog obstructions.

use polarity::gen::{random_p4_sparse, rng};
use polarity::obstructions::{decide_2polar, Decision};

fn main() -> polarity::Result<()> {
    let mut r = rng(3);
    for _ in 0..8 {
        let g = random_p4_sparse(9, &mut r);
        match decide_2polar(&g)? {
            Decision::TwoPolar { partition: Some((a, b)) } => println!("{}: 2-polar A={a} B={b}", g.to_graph6()),
            Decision::TwoPolar { partition: None } => println!("{}: 2-polar", g.to_graph6()),
            Decision::Obstructed { name, map } => println!("{}: contains {name} at {map:?}", g.to_graph6()),
        }
    }
    Ok(())
}
