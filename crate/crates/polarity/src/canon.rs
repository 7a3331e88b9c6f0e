//! Canonical labelling for graphs of order at most 12.
//!
//! Individualisation-refinement: refine an ordered partition until equitable,
//! branch on the first smallest non-singleton cell, and keep the largest
//! adjacency code seen at a discrete leaf. Automorphisms found at leaves
//! prune sibling branches in the same orbit.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const CANON_MAX_N: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    code: Vec<u8>,
}

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.code
    }

    pub fn order(&self) -> usize {
        self.code[0] as usize
    }

    /// The canonical representative graph.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut bits = 0u128;
        for &b in self.code[1..].iter() {
            bits = bits << 8 | b as u128;
        }
        decode(n, bits)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Canon({})", self.to_graph().to_graph6())
    }
}

fn encode(n: usize, masks: &[u16], order: &[u8]) -> u128 {
    let mut code = 0u128;
    for j in 1..n {
        let vj = order[j] as usize;
        for i in 0..j {
            let vi = order[i];
            code = code << 1 | (masks[vj] >> vi & 1) as u128;
        }
    }
    code
}

fn decode(n: usize, code: u128) -> Graph {
    let mut g = Graph::new(n);
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

struct Search {
    n: usize,
    masks: Vec<u16>,
    /// Best code with its leaf order and search path.
    best: Option<(u128, Vec<u8>, Vec<u8>)>,
    first: Option<(Vec<u8>, Vec<u8>)>,
    /// Automorphisms as images of each vertex.
    autos: Vec<[u8; CANON_MAX_N]>,
}

type Partition = Vec<Vec<u8>>;

fn refine(masks: &[u16], mut p: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut i = 0;
        'splitters: while i < p.len() {
            let splitter: u16 = p[i].iter().fold(0, |m, &v| m | 1 << v);
            for c in 0..p.len() {
                if p[c].len() == 1 {
                    continue;
                }
                let mut keyed: Vec<(u32, u8)> =
                    p[c].iter().map(|&v| ((masks[v as usize] & splitter).count_ones(), v)).collect();
                let k0 = keyed[0].0;
                if keyed.iter().all(|&(k, _)| k == k0) {
                    continue;
                }
                keyed.sort();
                let mut parts: Vec<Vec<u8>> = Vec::new();
                let mut last = u32::MAX;
                for (k, v) in keyed {
                    if k != last {
                        parts.push(Vec::new());
                        last = k;
                    }
                    parts.last_mut().unwrap().push(v);
                }
                p.splice(c..=c, parts);
                changed = true;
                i = 0;
                continue 'splitters;
            }
            i += 1;
        }
        if !changed {
            return p;
        }
    }
}

fn individualize(p: &Partition, cell: usize, v: u8) -> Partition {
    let mut q = p.clone();
    let rest: Vec<u8> = q[cell].iter().copied().filter(|&x| x != v).collect();
    q.splice(cell..=cell, [vec![v], rest]);
    q
}

impl Search {
    /// Returns `Some(level)` to unwind to an ancestor at that depth.
    fn go(&mut self, p: Partition, path: &mut Vec<u8>) -> Option<usize> {
        let target = p
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i);
        let Some(cell) = target else {
            let order: Vec<u8> = p.iter().map(|c| c[0]).collect();
            return self.leaf(order, path);
        };
        let level = path.len();
        let mut tried: Vec<u8> = Vec::new();
        let candidates = p[cell].clone();
        for &v in &candidates {
            if self.same_orbit(path, &tried, v) {
                continue;
            }
            tried.push(v);
            path.push(v);
            let q = refine(&self.masks, individualize(&p, cell, v));
            let jump = self.go(q, path);
            path.pop();
            if let Some(l) = jump {
                if l < level {
                    return Some(l);
                }
            }
        }
        None
    }

    fn leaf(&mut self, order: Vec<u8>, path: &[u8]) -> Option<usize> {
        let code = encode(self.n, &self.masks, &order);
        let Some((first_order, first_path)) = &self.first else {
            self.first = Some((order.clone(), path.to_vec()));
            self.best = Some((code, order, path.to_vec()));
            return None;
        };
        let (best_code, best_order, best_path) = self.best.as_ref().unwrap();
        // A leaf with the same labelled graph as the first or best leaf yields
        // an automorphism, and its whole branch mirrors the earlier one.
        let twin = if code == encode(self.n, &self.masks, first_order) {
            Some((first_order, first_path))
        } else if code == *best_code {
            Some((best_order, best_path))
        } else {
            None
        };
        if let Some((o, p)) = twin {
            let mut img = [0u8; CANON_MAX_N];
            for i in 0..self.n {
                img[order[i] as usize] = o[i];
            }
            self.autos.push(img);
            return Some(path.iter().zip(p).take_while(|(a, b)| a == b).count());
        }
        if code > *best_code {
            self.best = Some((code, order, path.to_vec()));
        }
        None
    }

    fn same_orbit(&self, path: &[u8], tried: &[u8], v: u8) -> bool {
        if tried.is_empty() {
            return false;
        }
        // Orbits under stored automorphisms fixing the current path pointwise.
        let mut comp: Vec<u8> = (0..self.n as u8).collect();
        fn find(c: &mut [u8], x: u8) -> u8 {
            let mut r = x;
            while c[r as usize] != r {
                r = c[r as usize];
            }
            c[x as usize] = r;
            r
        }
        for a in &self.autos {
            if path.iter().all(|&x| a[x as usize] == x) {
                for x in 0..self.n {
                    let (r1, r2) = (find(&mut comp, x as u8), find(&mut comp, a[x]));
                    if r1 != r2 {
                        comp[r1 as usize] = r2;
                    }
                }
            }
        }
        let rv = find(&mut comp, v);
        tried.iter().any(|&t| find(&mut comp, t) == rv)
    }
}

/// Isomorphism-invariant code. Equal codes iff isomorphic.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::TooLarge { what: "canonical_form", cap: CANON_MAX_N, n });
    }
    let masks: Vec<u16> = (0..n).map(|v| g.row(v)[0] as u16).collect();
    let code = if n <= 1 {
        0
    } else {
        let mut s = Search { n, masks, best: None, first: None, autos: Vec::new() };
        let start = refine(&s.masks, vec![(0..n as u8).collect()]);
        s.go(start, &mut Vec::new());
        s.best.unwrap().0
    };
    let mut bytes = vec![n as u8];
    bytes.extend_from_slice(&code.to_be_bytes()[7..]);
    Ok(CanonicalForm { code: bytes })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a).ok() == canonical_form(b).ok()
}
