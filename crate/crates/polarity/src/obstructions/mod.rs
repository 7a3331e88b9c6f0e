//! Minimal 2-polar and (2,1)-polar obstructions inside P4-sparse and
//! P4-extendible graphs: the catalog, partial complements, the extremal
//! construction, obstruction-based 2-polarity and the exhaustive miner.

mod catalog;
mod decide;
mod mine;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use catalog::{cograph_check, verify_catalog, Catalog, CatalogEntry, CatalogReport, EntryStatus};
pub use decide::{decide_2polar, find_induced, Decision};
pub use mine::{mine, MINE_MAX_N};

use crate::canon::{canonical_form, CanonicalForm, CANON_MAX_N};
use crate::decomposition::{classify, ClassReport};
use crate::error::{Error, Result};
use crate::graph::{copies, disjoint_union, Graph, VertexSet};
use crate::oracle::{is_sk_polar, SKBound};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    P4Sparse,
    P4Extendible,
}

impl GraphClass {
    pub const ALL: [GraphClass; 2] = [GraphClass::P4Sparse, GraphClass::P4Extendible];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::P4Sparse => "p4-sparse",
            GraphClass::P4Extendible => "p4-extendible",
        }
    }

    pub fn holds(self, r: &ClassReport) -> bool {
        match self {
            GraphClass::P4Sparse => r.is_p4_sparse,
            GraphClass::P4Extendible => r.is_p4_extendible,
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        self.holds(&classify(g))
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "p4-sparse" | "sparse" | "p4sparse" => Ok(GraphClass::P4Sparse),
            "p4-extendible" | "extendible" | "p4extendible" => Ok(GraphClass::P4Extendible),
            other => Err(Error::Invalid(format!("unknown class {other:?}"))),
        }
    }
}

fn complement_of_parts(g: &Graph, parts: &[&VertexSet]) -> Graph {
    let mut side = VertexSet::new();
    for p in parts {
        side.union_with(p);
    }
    let mut h = g.clone();
    for u in side.iter() {
        for v in side.iter().filter(|&v| v > u) {
            if g.has_edge(u, v) {
                h.remove_edge(u, v);
            } else {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// The full complement and every `co(H1) + co(H2)` over unordered splits of
/// the components into two nonempty groups, deduplicated up to isomorphism.
/// Vertex numbering is kept, so each result is a graph on `V(g)`.
pub fn partial_complements(g: &Graph) -> Result<Vec<Graph>> {
    if g.n() > CANON_MAX_N {
        return Err(Error::TooLarge { what: "partial_complements", cap: CANON_MAX_N, n: g.n() });
    }
    let comps = g.components();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let c = comps.len();
    // Component 0 always sits in H1; the mask picks the rest of H1.
    for mask in 0u64..1 << c.saturating_sub(1) {
        let h1: Vec<&VertexSet> = std::iter::once(&comps[0])
            .chain((1..c).filter(|&i| mask >> (i - 1) & 1 == 1).map(|i| &comps[i]))
            .collect();
        let h2: Vec<&VertexSet> = (1..c).filter(|&i| mask >> (i - 1) & 1 == 0).map(|i| &comps[i]).collect();
        let h = if h2.is_empty() {
            g.complement()
        } else {
            complement_of_parts(&complement_of_parts(g, &h1), &h2)
        };
        if seen.insert(canonical_form(&h)?) {
            out.push(h);
        }
    }
    Ok(out)
}

/// Fixpoint of `partial_complements`, starting from `g`.
pub fn closure_under_partial_complement(g: &Graph) -> Result<BTreeSet<CanonicalForm>> {
    let mut seen = BTreeSet::new();
    seen.insert(canonical_form(g)?);
    let mut queue = vec![g.clone()];
    while let Some(h) = queue.pop() {
        for p in partial_complements(&h)? {
            if seen.insert(canonical_form(&p)?) {
                queue.push(p);
            }
        }
    }
    Ok(seen)
}

/// Whether every partial complement of the 2-polar graph `g` is again 2-polar
/// and stays in every class `g` belongs to.
pub fn preserves_2polar(g: &Graph) -> Result<bool> {
    if g.n() > 14 {
        return Err(Error::TooLarge { what: "preserves_2polar", cap: 14, n: g.n() });
    }
    let r = classify(g);
    let classes: Vec<GraphClass> = GraphClass::ALL.into_iter().filter(|c| c.holds(&r)).collect();
    if classes.is_empty() || is_sk_polar(g, SKBound::TWO_POLAR)?.is_none() {
        return Err(Error::Invalid("preserves_2polar needs a 2-polar P4-sparse or P4-extendible graph".into()));
    }
    for h in partial_complements(g)? {
        let rh = classify(&h);
        if is_sk_polar(&h, SKBound::TWO_POLAR)?.is_none() || classes.iter().any(|c| !c.holds(&rh)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ℓK1 + (k + 1 − ℓ)K2 + K_{ℓ,ℓ}`, the minimal k-polar obstruction with the
/// largest number of components. Only `k = 2` is supported.
pub fn build_extremal(k: usize, l: usize) -> Result<Graph> {
    if k != 2 {
        return Err(Error::Invalid(format!("extremal construction is implemented for k = 2 only, got k = {k}")));
    }
    if !(1..=k + 1).contains(&l) {
        return Err(Error::Invalid(format!("l must lie in 1..={}, got {l}", k + 1)));
    }
    Ok(disjoint_union(&[
        Graph::new(l),
        copies(k + 1 - l, &Graph::complete(2)),
        Graph::complete_bipartite(l, l),
    ]))
}
