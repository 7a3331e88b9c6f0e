//! Definition-level ground truth for small graphs.
//!
//! Nothing here is clever: predicates follow the definitions, maximum
//! subgraphs come from a scan over all subsets, and polar partitions from a
//! plain backtracking search. Other modules are tested against these.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet};
use crate::property::PropertyKind::{self, *};

/// Order cap for the subset scan.
pub const SUBSET_MAX_N: usize = 16;
/// Order cap for the partition search.
pub const SEARCH_MAX_N: usize = 20;

/// `(s, k)` with `None` standing for an unbounded count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SKBound {
    pub s: Option<usize>,
    pub k: Option<usize>,
}

impl SKBound {
    pub const POLAR: SKBound = SKBound { s: None, k: None };
    pub const MONOPOLAR: SKBound = SKBound { s: Some(1), k: None };
    pub const TWO_POLAR: SKBound = SKBound { s: Some(2), k: Some(2) };
    pub const TWO_ONE: SKBound = SKBound { s: Some(2), k: Some(1) };

    pub fn new(s: usize, k: usize) -> Self {
        SKBound { s: Some(s), k: Some(k) }
    }

    pub fn swapped(self) -> Self {
        SKBound { s: self.k, k: self.s }
    }
}

impl fmt::Display for SKBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |x: Option<usize>| x.map_or("inf".to_string(), |v| v.to_string());
        write!(f, "{},{}", show(self.s), show(self.k))
    }
}

impl FromStr for SKBound {
    type Err = Error;

    fn from_str(t: &str) -> Result<Self> {
        let t = t.trim().trim_start_matches('(').trim_end_matches(')');
        let parse = |x: &str| -> Result<Option<usize>> {
            match x.trim() {
                "inf" | "∞" | "*" => Ok(None),
                v => v.parse().map(Some).map_err(|_| Error::Invalid(format!("bad bound component {v:?}"))),
            }
        };
        let (a, b) = t.split_once(',').ok_or_else(|| Error::Invalid(format!("bound must be s,k, got {t:?}")))?;
        Ok(SKBound { s: parse(a)?, k: parse(b)? })
    }
}

/// A partition certificate. For properties without a partition the whole
/// witness sits in `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub a: VertexSet,
    pub b: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxSubgraphResult {
    pub property: PropertyKind,
    pub witness: VertexSet,
    pub size: usize,
    pub partition: Option<Certificate>,
}

/// What an obstruction obstructs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Polar(SKBound),
    Kind(PropertyKind),
}

impl Target {
    pub fn holds(&self, g: &Graph) -> Result<bool> {
        Ok(match *self {
            Target::Polar(b) => is_sk_polar(g, b)?.is_some(),
            Target::Kind(p) => check_property(g, p)?.is_some(),
        })
    }
}

// ---------------------------------------------------------------------------
// mask predicates; `m[v]` is the neighbourhood of v, `w` the vertex subset

pub(crate) fn clique(m: &[u64], w: u64) -> bool {
    bits(w).all(|v| w & !m[v] == 1 << v)
}

pub(crate) fn independent(m: &[u64], w: u64) -> bool {
    bits(w).all(|v| m[v] & w == 0)
}

/// P3-free: closed neighbourhoods inside `w` form a partition.
pub(crate) fn cluster(m: &[u64], w: u64) -> bool {
    bits(w).all(|v| {
        let c = (m[v] | 1 << v) & w;
        bits(c).all(|u| (m[u] | 1 << u) & w == c)
    })
}

/// Complement of a cluster: non-neighbourhoods inside `w` form a partition.
pub(crate) fn multipartite(m: &[u64], w: u64) -> bool {
    bits(w).all(|v| {
        let d = w & !m[v];
        bits(d).all(|u| w & !m[u] == d)
    })
}

fn two_colour(m: &[u64], w: u64, complement: bool) -> Option<(u64, u64)> {
    let nb = |v: usize| if complement { w & !m[v] & !(1 << v) } else { m[v] & w };
    let (mut a, mut b) = (0u64, 0u64);
    let mut left = w;
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut frontier = 1u64 << s;
        a |= frontier;
        let mut side_a = true;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= nb(v);
            }
            if side_a {
                if next & a != 0 {
                    return None;
                }
                next &= !b;
                b |= next;
            } else {
                if next & b != 0 {
                    return None;
                }
                next &= !a;
                a |= next;
            }
            left &= !frontier;
            frontier = next;
            side_a = !side_a;
        }
        left &= !(a | b);
    }
    Some((a, b))
}

/// `w` itself (not a subset) induces 2K2, C4 or C5.
pub(crate) fn is_split_obstruction(m: &[u64], w: u64) -> bool {
    let k = w.count_ones();
    if k != 4 && k != 5 {
        return false;
    }
    let degs: Vec<u32> = bits(w).map(|v| (m[v] & w).count_ones()).collect();
    if k == 4 {
        degs.iter().all(|&d| d == 1) || degs.iter().all(|&d| d == 2)
    } else {
        degs.iter().all(|&d| d == 2)
    }
}

fn subsets_of_size(w: u64, k: u32, f: &mut impl FnMut(u64) -> bool) -> bool {
    let verts: Vec<usize> = bits(w).collect();
    let n = verts.len();
    if (k as usize) > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k as usize).collect();
    loop {
        let s = idx.iter().fold(0u64, |a, &i| a | 1 << verts[i]);
        if f(s) {
            return true;
        }
        let mut i = k as usize;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - (k as usize - i) {
                idx[i] += 1;
                for j in i + 1..k as usize {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Split via the forbidden triple {2K2, C4, C5}.
pub(crate) fn split(m: &[u64], w: u64) -> bool {
    !subsets_of_size(w, 4, &mut |s| is_split_obstruction(m, s))
        && !subsets_of_size(w, 5, &mut |s| is_split_obstruction(m, s))
}

/// Side constraints for the partition search.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Shape {
    /// max parts of the multipartite side
    pub s: Option<usize>,
    /// max cliques of the cluster side
    pub k: Option<usize>,
    /// the multipartite side must be a clique
    pub a_clique: bool,
    /// the cluster side must be independent
    pub b_independent: bool,
}

impl Shape {
    pub fn bound(b: SKBound) -> Self {
        Shape { s: b.s, k: b.k, a_clique: false, b_independent: false }
    }
}

struct PolarSearch<'a> {
    m: &'a [u64],
    order: Vec<usize>,
    shape: Shape,
    parts: Vec<u64>,
    cliques: Vec<u64>,
}

impl PolarSearch<'_> {
    fn go(&mut self, i: usize, a: u64, b: u64) -> Option<(u64, u64)> {
        if i == self.order.len() {
            return Some((a, b));
        }
        let v = self.order[i];
        let bit = 1u64 << v;
        // into A
        let non = a & !self.m[v];
        if non == 0 {
            if self.shape.s.map_or(true, |s| self.parts.len() < s) {
                self.parts.push(bit);
                let r = self.go(i + 1, a | bit, b);
                self.parts.pop();
                if r.is_some() {
                    return r;
                }
            }
        } else if !self.shape.a_clique {
            if let Some(p) = self.parts.iter().position(|&p| p == non) {
                self.parts[p] |= bit;
                let r = self.go(i + 1, a | bit, b);
                self.parts[p] &= !bit;
                if r.is_some() {
                    return r;
                }
            }
        }
        // into B
        let adj = b & self.m[v];
        if adj == 0 {
            if self.shape.k.map_or(true, |k| self.cliques.len() < k) {
                self.cliques.push(bit);
                let r = self.go(i + 1, a, b | bit);
                self.cliques.pop();
                if r.is_some() {
                    return r;
                }
            }
        } else if !self.shape.b_independent {
            if let Some(c) = self.cliques.iter().position(|&c| c == adj) {
                self.cliques[c] |= bit;
                let r = self.go(i + 1, a, b | bit);
                self.cliques[c] &= !bit;
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    }
}

/// Find `(A, B)` partitioning `w` with `A` complete multipartite and `B` a
/// cluster, subject to `shape`.
pub(crate) fn polar_partition(m: &[u64], w: u64, shape: Shape) -> Option<(u64, u64)> {
    // high degree first tends to fail fast
    let mut order: Vec<usize> = bits(w).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((m[v] & w).count_ones()));
    let mut s = PolarSearch { m, order, shape, parts: Vec::new(), cliques: Vec::new() };
    s.go(0, 0, 0)
}

/// Certificate for `p` on the subset `w`, if `G[w]` has property `p`.
pub(crate) fn certify_mask(m: &[u64], w: u64, p: PropertyKind) -> Option<(u64, u64)> {
    let sh = |s, k, a_clique, b_independent| Shape { s, k, a_clique, b_independent };
    match p {
        MC => clique(m, w).then_some((w, 0)),
        MI => independent(m, w).then_some((w, 0)),
        MUC => cluster(m, w).then_some((w, 0)),
        MJI => multipartite(m, w).then_some((w, 0)),
        MB => two_colour(m, w, false),
        McB => two_colour(m, w, true),
        MS => polar_partition(m, w, sh(Some(1), Some(1), false, false)),
        MM => polar_partition(m, w, sh(Some(1), None, false, false)),
        McM => polar_partition(m, w, sh(None, Some(1), false, false)),
        MP => polar_partition(m, w, sh(None, None, false, false)),
        MU => polar_partition(m, w, sh(None, None, true, false)),
        McU => polar_partition(m, w, sh(None, None, false, true)),
    }
}

fn has_property_mask(m: &[u64], w: u64, p: PropertyKind) -> bool {
    match p {
        MS => split(m, w),
        _ => certify_mask(m, w, p).is_some(),
    }
}

fn cap(g: &Graph, what: &'static str, c: usize) -> Result<()> {
    if g.n() > c {
        Err(Error::TooLarge { what, cap: c, n: g.n() })
    } else {
        Ok(())
    }
}

/// Decide `p` on the whole graph, returning a certificate when it holds.
pub fn check_property(g: &Graph, p: PropertyKind) -> Result<Option<Certificate>> {
    cap(g, "check_property", SEARCH_MAX_N)?;
    let m = g.masks();
    let w = VertexSet::full(g.n()).mask();
    if p == MS && !split(&m, w) {
        return Ok(None);
    }
    Ok(certify_mask(&m, w, p).map(|(a, b)| Certificate { a: VertexSet::from_mask(a), b: VertexSet::from_mask(b) }))
}

/// `(A, B)` with `G[A]` complete `s`-partite and `G[B]` a `k`-cluster.
pub fn is_sk_polar(g: &Graph, b: SKBound) -> Result<Option<(VertexSet, VertexSet)>> {
    cap(g, "is_sk_polar", SEARCH_MAX_N)?;
    let m = g.masks();
    let w = VertexSet::full(g.n()).mask();
    Ok(polar_partition(&m, w, Shape::bound(b)).map(|(a, b)| (VertexSet::from_mask(a), VertexSet::from_mask(b))))
}

/// Does `(a, b)` certify that `G[a ∪ b]` has property `p`?
pub fn certifies(g: &Graph, p: PropertyKind, witness: &VertexSet, cert: &Certificate) -> bool {
    if g.n() > 64 {
        return false;
    }
    let m = g.masks();
    let (a, b, w) = (cert.a.mask(), cert.b.mask(), witness.mask());
    if a & b != 0 || a | b != w {
        return false;
    }
    let side = |pa: fn(&[u64], u64) -> bool, pb: fn(&[u64], u64) -> bool| pa(&m, a) && pb(&m, b);
    match p {
        MC | MI | MUC | MJI => b == 0 && has_property_mask(&m, w, p),
        MB => side(independent, independent),
        McB => side(clique, clique),
        MS => side(independent, clique),
        MM => side(independent, cluster),
        McM => side(multipartite, clique),
        MP => side(multipartite, cluster),
        MU => side(clique, cluster),
        McU => side(multipartite, independent),
    }
}

/// Whether `G[w]` has property `p`, by definition.
pub fn has_property(g: &Graph, w: &VertexSet, p: PropertyKind) -> bool {
    g.n() <= 64 && w.mask().count_ones() as usize == w.len() && has_property_mask(&g.masks(), w.mask(), p)
}

/// `a` precedes `b` in lexicographic order of sorted member lists
/// (same cardinality assumed).
fn lex_less(a: u64, b: u64) -> bool {
    let d = a ^ b;
    d != 0 && a >> d.trailing_zeros() & 1 == 1
}

/// Maximum witness by exhaustive scan. Every property here is hereditary,
/// so a set is examined only when all its one-smaller subsets passed.
pub fn brute_force_max_subgraph(g: &Graph, p: PropertyKind) -> Result<MaxSubgraphResult> {
    cap(g, "brute_force_max_subgraph", SUBSET_MAX_N)?;
    let n = g.n();
    let m = g.masks();
    let mut good = vec![false; 1 << n];
    let mut best = 0u64;
    for w in 0u64..1 << n {
        let ok = bits(w).all(|v| good[(w & !(1 << v)) as usize])
            && match p {
                // subsets already passed, so only w itself can be forbidden
                MS => !is_split_obstruction(&m, w),
                _ => has_property_mask(&m, w, p),
            };
        good[w as usize] = ok;
        if ok {
            let (c, bc) = (w.count_ones(), best.count_ones());
            if c > bc || (c == bc && lex_less(w, best)) {
                best = w;
            }
        }
    }
    let partition = p.has_partition().then(|| {
        let (a, b) = certify_mask(&m, best, p).expect("winning set has the property");
        Certificate { a: VertexSet::from_mask(a), b: VertexSet::from_mask(b) }
    });
    Ok(MaxSubgraphResult { property: p, witness: VertexSet::from_mask(best), size: best.count_ones() as usize, partition })
}

/// Fails the target while every vertex-deleted subgraph satisfies it.
pub fn is_minimal_obstruction(g: &Graph, t: Target) -> Result<bool> {
    cap(g, "is_minimal_obstruction", SUBSET_MAX_N)?;
    if t.holds(g)? {
        return Ok(false);
    }
    for v in 0..g.n() {
        if !t.holds(&g.delete_vertex(v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One instance of the law "a spider is 2-polar iff it is split".
pub fn spider_2polar_equals_split(g: &Graph) -> Result<bool> {
    cap(g, "spider_2polar_equals_split", SUBSET_MAX_N)?;
    let two = is_sk_polar(g, SKBound::TWO_POLAR)?.is_some();
    let sp = check_property(g, MS)?.is_some();
    Ok(two == sp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{copies, disjoint_union, join};

    fn k(n: usize) -> Graph {
        Graph::complete(n)
    }

    #[test]
    fn split_examples() {
        let two_k2 = copies(2, &k(2));
        assert!(check_property(&two_k2, MS).unwrap().is_none());
        assert!(check_property(&Graph::cycle(4), MS).unwrap().is_none());
        assert!(check_property(&Graph::cycle(5), MS).unwrap().is_none());
        assert!(check_property(&Graph::path(4), MS).unwrap().is_some());
    }

    #[test]
    fn cluster_and_monopolar_examples() {
        let g = disjoint_union(&[k(3), k(2)]);
        assert!(check_property(&g, MUC).unwrap().is_some());
        assert!(is_sk_polar(&g, SKBound::new(0, 2)).unwrap().is_some());
        assert!(is_sk_polar(&g, SKBound::new(0, 1)).unwrap().is_none());
        let k2_2k2 = join(&[k(2), copies(2, &k(2))]);
        assert!(check_property(&k2_2k2, MM).unwrap().is_none());
    }

    #[test]
    fn sk_polar_examples() {
        let f1 = disjoint_union(&[k(1), copies(3, &k(2))]);
        assert!(is_sk_polar(&f1, SKBound::TWO_POLAR).unwrap().is_none());
        assert!(is_sk_polar(&f1.delete_vertex(0), SKBound::TWO_POLAR).unwrap().is_some());
        let k33 = Graph::complete_bipartite(3, 3);
        let (a, b) = is_sk_polar(&k33, SKBound::new(2, 0)).unwrap().unwrap();
        assert_eq!((a.len(), b.len()), (6, 0));
        assert!(is_minimal_obstruction(&copies(2, &k(2)), Target::Kind(MS)).unwrap());
        assert!(!is_minimal_obstruction(&k(3), Target::Polar(SKBound::TWO_POLAR)).unwrap());
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_max_subgraph(&Graph::cycle(5), MU).unwrap().size, 4);
        assert_eq!(brute_force_max_subgraph(&k(5), MC).unwrap().size, 5);
        assert_eq!(brute_force_max_subgraph(&Graph::path(4), MS).unwrap().size, 4);
        assert_eq!(brute_force_max_subgraph(&Graph::cycle(5), MP).unwrap().size, 5);
        let r = brute_force_max_subgraph(&Graph::cycle(5), MM).unwrap();
        assert_eq!(r.size, 5);
        assert!(certifies(&Graph::cycle(5), MM, &r.witness, r.partition.as_ref().unwrap()));
    }

    #[test]
    fn lexicographic_witness() {
        // in P3 = 0-1-2 the only maximum independent set is {0,2}; in 4K1
        // minus nothing, MC ties go to {0}
        assert_eq!(brute_force_max_subgraph(&Graph::new(4), MC).unwrap().witness.to_vec(), vec![0]);
        assert!(lex_less(0b0011, 0b0101));
        assert!(!lex_less(0b0110, 0b0101));
    }

    #[test]
    fn bound_parsing() {
        assert_eq!("2,1".parse::<SKBound>().unwrap(), SKBound::TWO_ONE);
        assert_eq!("(inf,1)".parse::<SKBound>().unwrap(), SKBound { s: None, k: Some(1) });
        assert!("2".parse::<SKBound>().is_err());
    }
}
