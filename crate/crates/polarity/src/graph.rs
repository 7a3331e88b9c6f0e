//! Dense bit-row graphs and vertex sets.
//!
//! Every graph handled here is simple and undirected. Row `v` of the adjacency
//! matrix is a run of `u64` words, so neighbourhood algebra is word-parallel.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::io::BufRead;

use crate::error::{Error, Result};

/// Largest order accepted by the graph6 reader.
pub const GRAPH6_MAX_N: usize = 1 << 18;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A set of vertices stored as a bit row. Trailing zero words are never kept,
/// so structural equality is set equality.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet { words: vec![mask] };
        s.trim();
        s
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; words_for(n)];
        if n % 64 != 0 {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % 64)) - 1;
            }
        }
        Self::from_words(words)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The first 64 members as a mask. Only meaningful for small hosts.
    pub fn mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        self.trim();
        had
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        let w = v / 64;
        w < self.words.len() && self.words[w] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(&short.words) {
            *w |= o;
        }
        VertexSet { words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        Self::from_words(words)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
            .collect();
        Self::from_words(words)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Intersection with a raw adjacency row.
    pub fn meet_row(&self, row: &[u64]) -> VertexSet {
        Self::from_words(self.words.iter().zip(row).map(|(a, b)| a & b).collect())
    }

    pub fn count_in_row(&self, row: &[u64]) -> usize {
        self.words.iter().zip(row).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for VertexSet {}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on the sorted member lists.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Iterate the set bits of a single word.
#[inline]
pub fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Graph { n, stride, adj: vec![0; n * stride] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Graph::new(n).complement()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(0, n - 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        join(&[Graph::new(a), Graph::new(b)])
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.stride..(v + 1) * self.stride]
    }

    /// Row `v` as a single mask; the graph must have at most 64 vertices.
    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.adj[v * self.stride]
    }

    pub fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "mask view needs n <= 64");
        (0..self.n).map(|v| self.mask(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.adj[u * self.stride + v / 64] |= 1 << (v % 64);
        self.adj[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v).to_vec())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let full = VertexSet::full(self.n);
        for v in 0..self.n {
            let dst = &mut g.adj[v * self.stride..(v + 1) * self.stride];
            for (i, d) in dst.iter_mut().enumerate() {
                *d = !self.adj[v * self.stride + i] & full.words().get(i).copied().unwrap_or(0);
            }
            dst[v / 64] &= !(1 << (v % 64));
        }
        g
    }

    /// Vertices of `w` relabelled `0..|w|` in ascending order.
    pub fn induced(&self, w: &VertexSet) -> Result<Graph> {
        if let Some(bad) = w.iter().find(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let verts = w.to_vec();
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The graph with vertex `v` renamed `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced(&keep).expect("in range")
    }

    /// Connected components of `G[scope]`, sorted by minimum vertex.
    pub fn components_of(&self, scope: &VertexSet) -> Vec<VertexSet> {
        let mut left = scope.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::new();
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next.union_with(&left.meet_row(self.row(v)));
                }
                next = next.difference(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            left = left.difference(&comp);
            out.push(comp);
        }
        out
    }

    /// Components of the complement of `G[scope]`, without building it.
    pub fn co_components_of(&self, scope: &VertexSet) -> Vec<VertexSet> {
        let mut left = scope.clone();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::new();
            comp.insert(start);
            left.remove(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let non = left.difference(&VertexSet::from_words(self.row(v).to_vec()));
                for u in non.iter() {
                    comp.insert(u);
                    stack.push(u);
                }
                left = left.difference(&non);
            }
            out.push(comp);
        }
        out.sort_by_key(|c| c.first());
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_of(&self.vertices())
    }

    pub fn co_components(&self) -> Vec<VertexSet> {
        self.co_components_of(&self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<_> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            out.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.has_edge(i, j) as u8;
                k += 1;
                if k == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    k = 0;
                }
            }
        }
        if k > 0 {
            out.push((acc << (6 - k)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ascii")
    }

    pub fn parse_graph6(text: &str) -> Result<Graph> {
        let b = text.trim_end_matches(['\n', '\r']).as_bytes();
        let err = |offset: usize, msg: &str| Error::Graph6 { offset, msg: msg.to_string() };
        let b = b.strip_prefix(b">>graph6<<").unwrap_or(b);
        if let Some(i) = b.iter().position(|&c| !(63..=126).contains(&c)) {
            return Err(err(i, "byte outside 63..=126"));
        }
        if b.is_empty() {
            return Err(err(0, "empty input"));
        }
        let (n, mut pos) = if b[0] < 126 {
            ((b[0] - 63) as usize, 1)
        } else if b.len() >= 2 && b[1] == 126 {
            if b.len() < 8 {
                return Err(err(b.len(), "truncated order field"));
            }
            (b[2..8].iter().fold(0usize, |a, &c| a << 6 | (c - 63) as usize), 8)
        } else {
            if b.len() < 4 {
                return Err(err(b.len(), "truncated order field"));
            }
            (b[1..4].iter().fold(0usize, |a, &c| a << 6 | (c - 63) as usize), 4)
        };
        if n > GRAPH6_MAX_N {
            return Err(err(0, &format!("order {n} exceeds {GRAPH6_MAX_N}")));
        }
        let bits = n * n.saturating_sub(1) / 2;
        let need = bits.div_ceil(6);
        if b.len() - pos != need {
            return Err(err(
                b.len().min(pos + need),
                &format!("expected {need} payload bytes for n={n}, found {}", b.len() - pos),
            ));
        }
        let mut g = Graph::new(n);
        let mut k = 0;
        'outer: for j in 1..n {
            for i in 0..j {
                let byte = b[pos + k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
                if k == bits {
                    break 'outer;
                }
            }
        }
        pos += need;
        if bits % 6 != 0 {
            let last = b[pos - 1] - 63;
            if last & ((1 << (6 - bits % 6)) - 1) != 0 {
                return Err(err(pos - 1, "nonzero padding bits"));
            }
        }
        Ok(g)
    }

    /// Edge list text: `n m` then `m` lines `u v`, 0-based.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or(Error::EdgeList { line: 1, msg: "missing header".into() })?;
        let nums = parse_pair(ln, header)?;
        let (n, m) = (nums.0, nums.1);
        let mut g = Graph::new(n);
        let mut seen = 0;
        for (ln, l) in lines {
            let (u, v) = parse_pair(ln, l)?;
            if u >= n || v >= n {
                return Err(Error::EdgeList { line: ln, msg: format!("endpoint out of range 0..{n}") });
            }
            if u == v {
                return Err(Error::EdgeList { line: ln, msg: "self loop".into() });
            }
            g.add_edge(u, v);
            seen += 1;
        }
        if seen != m {
            return Err(Error::EdgeList { line: 1, msg: format!("header promises {m} edges, found {seen}") });
        }
        Ok(g)
    }

    /// Read one edge-list graph from a stream, consuming exactly its lines.
    pub fn read_edge_list<R: BufRead>(r: &mut R) -> Result<Option<Graph>> {
        let mut header = String::new();
        loop {
            header.clear();
            let got = r.read_line(&mut header).map_err(|e| Error::EdgeList { line: 0, msg: e.to_string() })?;
            if got == 0 {
                return Ok(None);
            }
            if !header.trim().is_empty() {
                break;
            }
        }
        let (_, m) = parse_pair(1, header.trim())?;
        let mut text = header.clone();
        for i in 0..m {
            let mut l = String::new();
            if r.read_line(&mut l).map_err(|e| Error::EdgeList { line: i + 2, msg: e.to_string() })? == 0 {
                return Err(Error::EdgeList { line: i + 2, msg: "unexpected end of input".into() });
            }
            text.push_str(&l);
        }
        Graph::parse_edge_list(&text).map(Some)
    }
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::EdgeList { line, msg: format!("expected two integers, got {l:?}") }),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}

/// Block-diagonal sum, inputs numbered consecutively in order.
pub fn disjoint_union(gs: &[Graph]) -> Graph {
    let n = gs.iter().map(Graph::n).sum();
    let mut g = Graph::new(n);
    let mut off = 0;
    for h in gs {
        for (u, v) in h.edges() {
            g.add_edge(off + u, off + v);
        }
        off += h.n();
    }
    g
}

/// Disjoint union plus every edge between different inputs.
pub fn join(gs: &[Graph]) -> Graph {
    let mut g = disjoint_union(gs);
    let mut off = 0;
    for (i, h) in gs.iter().enumerate() {
        let mut off2 = off + h.n();
        for h2 in &gs[i + 1..] {
            for u in off..off + h.n() {
                for v in off2..off2 + h2.n() {
                    g.add_edge(u, v);
                }
            }
            off2 += h2.n();
        }
        off += h.n();
    }
    g
}

/// `k` disjoint copies of `g`.
pub fn copies(k: usize, g: &Graph) -> Graph {
    disjoint_union(&vec![g.clone(); k])
}

/// Every induced P4, each once, as `[a, b, c, d]` along the path with `b < c`.
pub fn list_induced_p4s(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for b in 0..g.n() {
        let nb = g.neighbors(b);
        for c in nb.iter().filter(|&c| c > b) {
            let nc = g.neighbors(c);
            let mut left = nb.difference(&nc);
            left.remove(c);
            let mut right = nc.difference(&nb);
            right.remove(b);
            for a in left.iter() {
                for d in right.iter() {
                    if !g.has_edge(a, d) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}
