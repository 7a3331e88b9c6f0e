//! Exhaustive search for minimal obstructions of a given order.
//!
//! Every minimal obstruction on `n` vertices is a one-vertex extension of a
//! graph on `n - 1` vertices that lies in the class and has the property. So
//! instead of scanning all labelled graphs we grow those "good" graphs level
//! by level, one isomorphism class at a time, and test each extension.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::GraphClass;
use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{SKBound, Target};

/// Largest order mined exhaustively. Order 9 takes a few seconds; minimal
/// 2-polar obstructions never exceed it.
pub const MINE_MAX_N: usize = 9;

fn extend(g: &Graph, nbrs: u64) -> Graph {
    let n = g.n();
    let mut h = Graph::new(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    for u in 0..n {
        if nbrs >> u & 1 == 1 {
            h.add_edge(u, n);
        }
    }
    h
}

struct Level {
    good: BTreeSet<CanonicalForm>,
    minimal: BTreeSet<CanonicalForm>,
}

fn next_level(good: &BTreeSet<CanonicalForm>, class: GraphClass, target: Target) -> Result<Level> {
    let parts: Vec<Result<Level>> = good
        .par_iter()
        .map(|f| {
            let g = f.to_graph();
            let mut lvl = Level { good: BTreeSet::new(), minimal: BTreeSet::new() };
            for nbrs in 0u64..1 << g.n() {
                let h = extend(&g, nbrs);
                let c = canonical_form(&h)?;
                if lvl.good.contains(&c) || lvl.minimal.contains(&c) || !class.contains(&h) {
                    continue;
                }
                if target.holds(&h)? {
                    lvl.good.insert(c);
                } else if (0..h.n()).try_fold(true, |ok, v| Ok::<_, Error>(ok && target.holds(&h.delete_vertex(v))?))? {
                    // vertex-deleted subgraphs stay in the class automatically
                    lvl.minimal.insert(c);
                }
            }
            Ok(lvl)
        })
        .collect();
    let mut out = Level { good: BTreeSet::new(), minimal: BTreeSet::new() };
    for p in parts {
        let p = p?;
        out.good.extend(p.good);
        out.minimal.extend(p.minimal);
    }
    Ok(out)
}

/// All minimal `bound`-polar obstructions on exactly `n` vertices inside
/// `class`, as sorted canonical forms. Exhaustive up to `MINE_MAX_N`.
pub fn mine(n: usize, class: GraphClass, bound: SKBound) -> Result<Vec<CanonicalForm>> {
    if n > MINE_MAX_N {
        return Err(Error::TooLarge { what: "exhaustive mining", cap: MINE_MAX_N, n });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let target = Target::Polar(bound);
    let k1 = Graph::new(1);
    let mut good = BTreeSet::new();
    let mut minimal = BTreeSet::new();
    let first = canonical_form(&k1)?;
    if target.holds(&k1)? {
        good.insert(first);
    } else {
        minimal.insert(first);
    }
    for _ in 1..n {
        let lvl = next_level(&good, class, target)?;
        good = lvl.good;
        minimal = lvl.minimal;
    }
    Ok(minimal.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::{copies, disjoint_union};

    #[test]
    fn split_obstructions_in_cographs_are_small() {
        // (1,1)-polar is split: inside P4-sparse graphs the minimal
        // obstructions of order 4 are 2K2 and C4.
        let found = mine(4, GraphClass::P4Sparse, SKBound::new(1, 1)).unwrap();
        let graphs: Vec<Graph> = found.iter().map(CanonicalForm::to_graph).collect();
        assert_eq!(graphs.len(), 2);
        assert!(graphs.iter().any(|g| is_isomorphic(g, &copies(2, &Graph::complete(2)))));
        assert!(graphs.iter().any(|g| is_isomorphic(g, &Graph::cycle(4))));
        assert!(mine(5, GraphClass::P4Sparse, SKBound::new(1, 1)).unwrap().is_empty());
        let c5 = mine(5, GraphClass::P4Extendible, SKBound::new(1, 1)).unwrap();
        assert_eq!(c5.len(), 1);
        assert!(is_isomorphic(&c5[0].to_graph(), &Graph::cycle(5)));
    }

    #[test]
    fn cap_and_small_orders() {
        assert!(mine(10, GraphClass::P4Sparse, SKBound::TWO_POLAR).is_err());
        assert!(mine(3, GraphClass::P4Sparse, SKBound::TWO_POLAR).unwrap().is_empty());
        let e1 = disjoint_union(&[Graph::complete(1), copies(2, &Graph::complete(2))]);
        let five = mine(5, GraphClass::P4Sparse, SKBound::TWO_ONE).unwrap();
        assert!(five.iter().any(|f| is_isomorphic(&f.to_graph(), &e1)));
    }
}
