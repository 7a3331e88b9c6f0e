//! Mine minimal obstructions of orders 5 to 8 and match them against the
//! shipped catalog.

use polarity::canon::is_isomorphic;
use polarity::obstructions::{mine, Catalog, GraphClass};
use polarity::oracle::SKBound;

fn main() -> polarity::Result<()> {
    let cat = Catalog::builtin();
    for family in [SKBound::TWO_ONE, SKBound::TWO_POLAR] {
        for n in 5..=8 {
            let found = mine(n, GraphClass::P4Extendible, family)?;
            let names: Vec<String> = found
                .iter()
                .map(|f| {
                    let g = f.to_graph();
                    cat.entries.iter().find(|e| is_isomorphic(&e.graph, &g)).map_or("new".into(), |e| e.name.clone())
                })
                .collect();
            let mut names = names;
            names.sort();
            println!("({family}) order {n}: {} found {names:?}", names.len());
        }
    }
    Ok(())
}
