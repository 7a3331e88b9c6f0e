//! 2-polarity by forbidden induced subgraphs.

use super::{Catalog, GraphClass};
use crate::decomposition::{classify, Witness};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{is_sk_polar, SKBound, SEARCH_MAX_N};

/// Lexicographically least `map` such that `map[i]` plays vertex `i` of
/// `pattern` in an induced copy inside `host`.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let (p, n) = (pattern.n(), host.n());
    if p > n {
        return None;
    }
    let hdeg: Vec<usize> = (0..n).map(|v| host.degree(v)).collect();
    // A host vertex can play pattern vertex i only with at least as many
    // neighbours and non-neighbours.
    let allowed: Vec<Vec<usize>> = (0..p)
        .map(|i| {
            let d = pattern.degree(i);
            let nd = p - 1 - d;
            (0..n).filter(|&v| hdeg[v] >= d && n - 1 - hdeg[v] >= nd).collect()
        })
        .collect();
    let mut map = Vec::with_capacity(p);
    let mut used = VertexSet::new();
    fn rec(pattern: &Graph, host: &Graph, allowed: &[Vec<usize>], map: &mut Vec<usize>, used: &mut VertexSet) -> bool {
        let i = map.len();
        if i == pattern.n() {
            return true;
        }
        for &v in &allowed[i] {
            if used.contains(v) || !(0..i).all(|t| pattern.has_edge(t, i) == host.has_edge(map[t], v)) {
                continue;
            }
            map.push(v);
            used.insert(v);
            if rec(pattern, host, allowed, map, used) {
                return true;
            }
            used.remove(v);
            map.pop();
        }
        false
    }
    rec(pattern, host, &allowed, &mut map, &mut used).then_some(map)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// No catalog member embeds. The partition is filled in when the graph is
    /// small enough for the exact search.
    TwoPolar { partition: Option<(VertexSet, VertexSet)> },
    /// `map[i]` is the host vertex playing vertex `i` of the named entry.
    Obstructed { name: String, map: Vec<usize> },
}

impl Decision {
    pub fn is_2polar(&self) -> bool {
        matches!(self, Decision::TwoPolar { .. })
    }
}

/// Decide 2-polarity of a P4-sparse or P4-extendible graph by searching for
/// the catalog obstructions of its class, smallest first.
pub fn decide_2polar(g: &Graph) -> Result<Decision> {
    let r = classify(g);
    let class = if r.is_p4_sparse {
        GraphClass::P4Sparse
    } else if r.is_p4_extendible {
        GraphClass::P4Extendible
    } else {
        let witness = r.witness().cloned().unwrap_or(Witness { vertices: VertexSet::new(), reason: "unclassified" });
        return Err(Error::NotInClass { class: "P4-sparse or P4-extendible", witness });
    };
    for e in Catalog::builtin().members(class, SKBound::TWO_POLAR) {
        if let Some(map) = find_induced(&e.graph, g) {
            return Ok(Decision::Obstructed { name: e.name.clone(), map });
        }
    }
    if g.n() > SEARCH_MAX_N {
        return Ok(Decision::TwoPolar { partition: None });
    }
    match is_sk_polar(g, SKBound::TWO_POLAR)? {
        Some(ab) => Ok(Decision::TwoPolar { partition: Some(ab) }),
        None => Err(Error::Invalid(format!(
            "no {class} catalog obstruction embeds, yet the graph is not 2-polar; the catalog is incomplete"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join};

    #[test]
    fn induced_search_respects_non_edges() {
        let c4 = Graph::cycle(4);
        assert!(find_induced(&Graph::path(3), &c4).is_some());
        assert!(find_induced(&Graph::complete(3), &c4).is_none());
        assert!(find_induced(&Graph::new(2), &Graph::complete(5)).is_none());
        assert_eq!(find_induced(&Graph::path(4), &Graph::path(4)), Some(vec![0, 1, 2, 3]));
    }

    #[test]
    fn small_decisions() {
        let split = join(&[Graph::complete(1), disjoint_union(&[Graph::complete(2), Graph::new(2)])]);
        assert!(decide_2polar(&split).unwrap().is_2polar());
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(decide_2polar(&k33).unwrap().is_2polar());
        let f26 = &Catalog::builtin().get("F26").unwrap().graph;
        match decide_2polar(f26).unwrap() {
            Decision::Obstructed { name, .. } => assert_eq!(name, "F26"),
            d => panic!("{d:?}"),
        }
        for v in 0..f26.n() {
            assert!(decide_2polar(&f26.delete_vertex(v)).unwrap().is_2polar());
        }
    }
}
