//! Certify the shipped obstruction catalog: minimality, class tags, order
//! bounds and the per-class counts for both families.

use polarity::obstructions::{cograph_check, verify_catalog, Catalog};
use polarity::oracle::SKBound;

fn main() -> polarity::Result<()> {
    let cat = Catalog::builtin();
    for family in [SKBound::TWO_POLAR, SKBound::TWO_ONE] {
        let report = verify_catalog(cat, family)?;
        for e in report.entries.iter().filter(|e| !e.ok()) {
            println!("{}: {}", e.name, e.problems.join("; "));
        }
        println!(
            "family {}: {} P4-sparse, {} P4-extendible (expected {} and {}) -> {}",
            family,
            report.sparse_count,
            report.extendible_count,
            report.expected.0,
            report.expected.1,
            if report.ok() { "OK" } else { "FAILED" }
        );
    }
    let not_cographs = cograph_check(cat);
    println!("P4-sparse 2-polar obstructions that are not cographs: {not_cographs:?}");
    Ok(())
}
