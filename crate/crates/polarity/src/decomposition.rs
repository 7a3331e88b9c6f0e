//! Recognition of cographs, P4-sparse and P4-extendible graphs, and their
//! tree representations.
//!
//! Trees are built top-down: a disconnected scope becomes a union node, a
//! co-disconnected scope a join node, and anything else must be a spider
//! (ps-tree), an extension graph or an X-spider with nonempty head (parse
//! tree). Spider and X-spider partitions are stored on the node.

use std::fmt;
use std::sync::OnceLock;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::{list_induced_p4s, Graph, VertexSet};

/// A forbidden configuration found while recognising a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertices: VertexSet,
    pub reason: &'static str,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.reason, self.vertices)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub is_cograph: bool,
    pub is_p4_sparse: bool,
    pub is_p4_extendible: bool,
    pub cograph_witness: Option<Witness>,
    pub sparse_witness: Option<Witness>,
    pub extendible_witness: Option<Witness>,
}

impl ClassReport {
    /// The first failing witness, preferring the sparse one.
    pub fn witness(&self) -> Option<&Witness> {
        self.sparse_witness.as_ref().or(self.extendible_witness.as_ref()).or(self.cograph_witness.as_ref())
    }
}

/// The eight extension graphs. Each is the path 0-1-2-3 (with vertex 4 for
/// the five-vertex ones) plus a few edges at 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionKind {
    P4,
    C5,
    P5,
    /// house
    CoP5,
    /// banner
    P,
    CoP,
    /// chair
    F,
    /// kite
    CoF,
}

impl ExtensionKind {
    pub const ALL: [ExtensionKind; 8] = [Self::P4, Self::C5, Self::P5, Self::CoP5, Self::P, Self::CoP, Self::F, Self::CoF];

    pub fn order(self) -> usize {
        if self == Self::P4 {
            4
        } else {
            5
        }
    }

    fn extra_edges(self) -> &'static [(usize, usize)] {
        match self {
            Self::P4 => &[],
            Self::C5 => &[(4, 0), (4, 3)],
            Self::P5 => &[(4, 0)],
            Self::CoP5 => &[(4, 0), (4, 2), (4, 3)],
            Self::P => &[(4, 0), (4, 2)],
            Self::CoP => &[(4, 0), (4, 1)],
            Self::F => &[(4, 1)],
            Self::CoF => &[(4, 0), (4, 1), (4, 2)],
        }
    }

    pub fn graph(self) -> Graph {
        let mut g = Graph::path(4);
        if self.order() == 5 {
            let mut h = Graph::new(5);
            for (u, v) in g.edges() {
                h.add_edge(u, v);
            }
            g = h;
        }
        for &(u, v) in self.extra_edges() {
            g.add_edge(u, v);
        }
        g
    }

    pub fn is_separable(self) -> bool {
        matches!(self, Self::P4 | Self::P | Self::CoP | Self::F | Self::CoF)
    }

    /// Midpoints of a separable kind, in the named graph's numbering.
    pub fn midpoints(self) -> &'static [usize] {
        match self {
            Self::P4 | Self::CoP | Self::F => &[1, 2],
            Self::P | Self::CoF => &[1, 2, 4],
            _ => &[],
        }
    }

    pub fn endpoints(self) -> &'static [usize] {
        match self {
            Self::P4 => &[0, 3],
            Self::CoP | Self::F => &[0, 3, 4],
            Self::P | Self::CoF => &[0, 3],
            _ => &[],
        }
    }

    pub fn complement(self) -> ExtensionKind {
        match self {
            Self::P4 => Self::P4,
            Self::C5 => Self::C5,
            Self::P5 => Self::CoP5,
            Self::CoP5 => Self::P5,
            Self::P => Self::CoP,
            Self::CoP => Self::P,
            Self::F => Self::CoF,
            Self::CoF => Self::F,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::P4 => "P4",
            Self::C5 => "C5",
            Self::P5 => "P5",
            Self::CoP5 => "coP5",
            Self::P => "P",
            Self::CoP => "coP",
            Self::F => "F",
            Self::CoF => "coF",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == s)
    }

    /// Identify a 4- or 5-vertex graph as an extension graph.
    pub fn identify(g: &Graph) -> Option<ExtensionKind> {
        if g.n() != 4 && g.n() != 5 {
            return None;
        }
        static FORMS: OnceLock<Vec<(CanonicalForm, ExtensionKind)>> = OnceLock::new();
        let forms = FORMS.get_or_init(|| {
            ExtensionKind::ALL.iter().map(|&k| (canonical_form(&k.graph()).unwrap(), k)).collect()
        });
        let c = canonical_form(g).ok()?;
        forms.iter().find(|(f, _)| *f == c).map(|&(_, k)| k)
    }
}

impl fmt::Display for ExtensionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Lexicographically least `map` with `map[i]` the vertex of `g` playing
/// vertex `i` of `pattern`; `verts` are the candidate host vertices.
pub fn least_isomorphism(pattern: &Graph, g: &Graph, verts: &[usize]) -> Option<Vec<usize>> {
    fn rec(p: &Graph, g: &Graph, verts: &[usize], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == p.n() {
            return true;
        }
        for (j, &v) in verts.iter().enumerate() {
            if used[j] {
                continue;
            }
            if (0..i).all(|t| p.has_edge(t, i) == g.has_edge(map[t], v)) {
                used[j] = true;
                map.push(v);
                if rec(p, g, verts, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    if pattern.n() != verts.len() {
        return None;
    }
    let mut sorted = verts.to_vec();
    sorted.sort_unstable();
    let mut map = Vec::new();
    rec(pattern, g, &sorted, &mut map, &mut vec![false; sorted.len()]).then_some(map)
}

/// `(S, K, R)` with `body[i] = f(legs[i])`, legs ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpiderPartition {
    pub legs: Vec<usize>,
    pub body: Vec<usize>,
    pub head: VertexSet,
    pub thin: bool,
}

impl SpiderPartition {
    pub fn legs_set(&self) -> VertexSet {
        self.legs.iter().copied().collect()
    }

    pub fn body_set(&self) -> VertexSet {
        self.body.iter().copied().collect()
    }

    /// Check the defining conditions against `g`.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let (s, k) = (self.legs_set(), self.body_set());
        if self.legs.len() < 2 || self.legs.len() != self.body.len() || !s.is_disjoint(&k) || !self.head.is_disjoint(&s.union(&k)) {
            return false;
        }
        if s.union(&k).union(&self.head) != g.vertices() {
            return false;
        }
        for (i, &x) in self.legs.iter().enumerate() {
            let nb = g.neighbors(x);
            let mut want = if self.thin { VertexSet::new() } else { k.clone() };
            if self.thin {
                want.insert(self.body[i]);
            } else {
                want.remove(self.body[i]);
            }
            if nb != want {
                return false;
            }
        }
        self.body.iter().all(|&y| {
            let mut nb = g.neighbors(y);
            nb.insert(y);
            k.union(&self.head).is_subset(&nb)
        })
    }
}

fn detect_thin(g: &Graph) -> Option<SpiderPartition> {
    let legs: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 1).collect();
    if legs.len() < 2 {
        return None;
    }
    let body: Vec<usize> = legs.iter().map(|&s| g.neighbors(s).first().unwrap()).collect();
    let k: VertexSet = body.iter().copied().collect();
    if k.len() != legs.len() {
        return None;
    }
    let head = g.vertices().difference(&k).difference(&legs.iter().copied().collect());
    let sp = SpiderPartition { legs, body, head, thin: true };
    sp.is_valid(g).then_some(sp)
}

/// The spider partition of `g`, if `g` is a spider. With `|K| = 2` thin and
/// thick coincide and the partition is reported thin.
pub fn detect_spider(g: &Graph) -> Option<SpiderPartition> {
    if g.n() < 4 || !g.is_connected() || !g.complement().is_connected() {
        return None;
    }
    if let Some(sp) = detect_thin(g) {
        return Some(sp);
    }
    // The complement of a thick spider (S, K, R) is the thin spider (K, S, R)
    // with the same pairing.
    let t = detect_thin(&g.complement())?;
    let mut pairs: Vec<(usize, usize)> = t.body.iter().copied().zip(t.legs.iter().copied()).collect();
    pairs.sort_unstable();
    let sp = SpiderPartition {
        legs: pairs.iter().map(|p| p.0).collect(),
        body: pairs.iter().map(|p| p.1).collect(),
        head: t.head,
        thin: false,
    };
    debug_assert!(sp.is_valid(g));
    Some(sp)
}

/// An X-spider partition: `map[i]` plays vertex `i` of `kind.graph()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XSpiderPartition {
    pub kind: ExtensionKind,
    pub map: Vec<usize>,
    pub legs: VertexSet,
    pub body: VertexSet,
    pub head: VertexSet,
}

/// For every vertex, the union of all induced P4s through it.
fn p4_reach(g: &Graph, p4s: &[[usize; 4]]) -> Vec<VertexSet> {
    let mut reach = vec![VertexSet::new(); g.n()];
    for q in p4s {
        let s: VertexSet = q.iter().copied().collect();
        for &v in q {
            reach[v].union_with(&s);
        }
    }
    reach
}

fn ext_set(w: &[usize; 4], reach: &[VertexSet]) -> (VertexSet, VertexSet) {
    let ws: VertexSet = w.iter().copied().collect();
    let mut s = VertexSet::new();
    for &v in w {
        s.union_with(&reach[v]);
    }
    (ws.clone(), s.difference(&ws))
}

/// The separable extension graph `X` and partition `(S, K, R)` with `R`
/// nonempty, if `g` is an X-spider.
pub fn detect_x_spider(g: &Graph) -> Option<XSpiderPartition> {
    if !g.is_connected() || !g.complement().is_connected() {
        return None;
    }
    let p4s = list_induced_p4s(g);
    let reach = p4_reach(g, &p4s);
    for w in &p4s {
        let (ws, sw) = ext_set(w, &reach);
        if sw.len() > 1 {
            continue;
        }
        let d = ws.union(&sw);
        if d.len() == g.n() {
            continue;
        }
        let h = g.induced(&d).ok()?;
        let Some(kind) = ExtensionKind::identify(&h).filter(|k| k.is_separable()) else {
            continue;
        };
        let dv = d.to_vec();
        let local = least_isomorphism(&kind.graph(), &h, &(0..dv.len()).collect::<Vec<_>>())?;
        let map: Vec<usize> = local.iter().map(|&i| dv[i]).collect();
        let body: VertexSet = kind.midpoints().iter().map(|&i| map[i]).collect();
        let legs: VertexSet = kind.endpoints().iter().map(|&i| map[i]).collect();
        let head = g.vertices().difference(&d);
        let ok = head.iter().all(|r| {
            let nb = g.neighbors(r);
            body.is_subset(&nb) && nb.is_disjoint(&legs)
        });
        if ok {
            return Some(XSpiderPartition { kind, map, legs, body, head });
        }
    }
    None
}

/// Class membership with witnesses.
pub fn classify(g: &Graph) -> ClassReport {
    let p4s = list_induced_p4s(g);
    let reach = p4_reach(g, &p4s);
    let mut sparse_witness = None;
    let mut extendible_witness = None;
    for w in &p4s {
        let (ws, sw) = ext_set(w, &reach);
        if sparse_witness.is_none() {
            // Another P4 inside W + v must use v, so v lies in S(W).
            for v in sw.iter() {
                let mut five = ws.clone();
                five.insert(v);
                let h = g.induced(&five).expect("in range");
                if list_induced_p4s(&h).len() > 1 {
                    sparse_witness = Some(Witness { vertices: five, reason: "five vertices inducing two P4s" });
                    break;
                }
            }
        }
        if extendible_witness.is_none() {
            if sw.len() > 1 {
                let mut six = ws.clone();
                for v in sw.iter().take(2) {
                    six.insert(v);
                }
                extendible_witness = Some(Witness { vertices: six, reason: "a P4 and two vertices of its S(W)" });
            } else {
                let d = ws.union(&sw);
                let h = g.induced(&d).expect("in range");
                if ExtensionKind::identify(&h).is_none() {
                    extendible_witness = Some(Witness { vertices: d, reason: "extension set is not an extension graph" });
                }
            }
        }
        if sparse_witness.is_some() && extendible_witness.is_some() {
            break;
        }
    }
    let cograph_witness = p4s.first().map(|w| Witness { vertices: w.iter().copied().collect(), reason: "induced P4" });
    ClassReport {
        is_cograph: cograph_witness.is_none(),
        is_p4_sparse: sparse_witness.is_none(),
        is_p4_extendible: extendible_witness.is_none(),
        cograph_witness,
        sparse_witness,
        extendible_witness,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeKind {
    /// cotree-compatible ps-tree of a P4-sparse graph
    Ps,
    /// parse tree of a P4-extendible graph
    Parse,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(usize),
    Union(Vec<usize>),
    Join(Vec<usize>),
    /// `body[i] = f(legs[i])`; `head` is the child for `G[R]`.
    Spider { legs: Vec<usize>, body: Vec<usize>, thin: bool, head: Option<usize> },
    Extension { kind: ExtensionKind, map: Vec<usize> },
    XSpider { kind: ExtensionKind, map: Vec<usize>, head: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompNode {
    pub kind: NodeKind,
    /// `|V(G_x)|`
    pub size: usize,
    pub min_vertex: usize,
}

/// Nodes are stored children first, so a forward scan is a bottom-up pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompTree {
    pub n: usize,
    pub kind: TreeKind,
    pub nodes: Vec<DecompNode>,
    pub root: usize,
}

impl DecompTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn children(&self, id: usize) -> Vec<usize> {
        match &self.nodes[id].kind {
            NodeKind::Union(c) | NodeKind::Join(c) => c.clone(),
            NodeKind::Spider { head, .. } => head.iter().copied().collect(),
            NodeKind::XSpider { head, .. } => vec![*head],
            _ => vec![],
        }
    }

    /// Vertices owned by the node itself rather than a child.
    pub fn local_vertices(&self, id: usize) -> Vec<usize> {
        match &self.nodes[id].kind {
            NodeKind::Leaf(v) => vec![*v],
            NodeKind::Spider { legs, body, .. } => legs.iter().chain(body).copied().collect(),
            NodeKind::Extension { map, .. } | NodeKind::XSpider { map, .. } => map.clone(),
            _ => vec![],
        }
    }

    /// `V(G_x)`, gathered on demand.
    pub fn scope(&self, id: usize) -> VertexSet {
        let mut s = VertexSet::new();
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for v in self.local_vertices(x) {
                s.insert(v);
            }
            stack.extend(self.children(x));
        }
        s
    }

    fn push(&mut self, kind: NodeKind) -> usize {
        let (size, min_vertex) = {
            let mut size = 0;
            let mut min = usize::MAX;
            let local: Vec<usize> = match &kind {
                NodeKind::Leaf(v) => vec![*v],
                NodeKind::Spider { legs, body, .. } => legs.iter().chain(body).copied().collect(),
                NodeKind::Extension { map, .. } | NodeKind::XSpider { map, .. } => map.clone(),
                _ => vec![],
            };
            size += local.len();
            min = local.iter().copied().fold(min, usize::min);
            let kids: Vec<usize> = match &kind {
                NodeKind::Union(c) | NodeKind::Join(c) => c.clone(),
                NodeKind::Spider { head, .. } => head.iter().copied().collect(),
                NodeKind::XSpider { head, .. } => vec![*head],
                _ => vec![],
            };
            for c in kids {
                size += self.nodes[c].size;
                min = min.min(self.nodes[c].min_vertex);
            }
            (size, min)
        };
        self.nodes.push(DecompNode { kind, size, min_vertex });
        self.nodes.len() - 1
    }

    /// Start an empty tree; nodes are added bottom-up with the `add_*`
    /// methods. Used by generators that never materialise the graph.
    pub fn builder(n: usize, kind: TreeKind) -> Self {
        DecompTree { n, kind, nodes: Vec::new(), root: 0 }
    }

    pub fn add(&mut self, kind: NodeKind) -> usize {
        let id = self.push(kind);
        self.root = id;
        id
    }

    /// The graph the tree represents, vertex for vertex.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        let mut verts: Vec<Vec<usize>> = Vec::with_capacity(self.nodes.len());
        for (id, node) in self.nodes.iter().enumerate() {
            let mut mine = self.local_vertices(id);
            match &node.kind {
                NodeKind::Leaf(_) => {}
                NodeKind::Union(c) => {
                    for &x in c {
                        mine.extend(&verts[x]);
                    }
                }
                NodeKind::Join(c) => {
                    for (i, &x) in c.iter().enumerate() {
                        for &y in &c[i + 1..] {
                            for &u in &verts[x] {
                                for &v in &verts[y] {
                                    g.add_edge(u, v);
                                }
                            }
                        }
                        mine.extend(&verts[x]);
                    }
                }
                NodeKind::Spider { legs, body, thin, head } => {
                    for (i, &k) in body.iter().enumerate() {
                        for &k2 in &body[i + 1..] {
                            g.add_edge(k, k2);
                        }
                        for (j, &s) in legs.iter().enumerate() {
                            if (i == j) == *thin {
                                g.add_edge(s, k);
                            }
                        }
                        if let Some(h) = head {
                            for &r in &verts[*h] {
                                g.add_edge(k, r);
                            }
                        }
                    }
                    if let Some(h) = head {
                        mine.extend(&verts[*h]);
                    }
                }
                NodeKind::Extension { kind, map } | NodeKind::XSpider { kind, map, .. } => {
                    for (u, v) in kind.graph().edges() {
                        g.add_edge(map[u], map[v]);
                    }
                    if let NodeKind::XSpider { head, .. } = &node.kind {
                        for &i in kind.midpoints() {
                            for &r in &verts[*head] {
                                g.add_edge(map[i], r);
                            }
                        }
                        mine.extend(&verts[*head]);
                    }
                }
            }
            verts.push(mine);
        }
        g
    }

    /// One node per line: `id kind [children…] [partition sets…]`.
    pub fn to_text(&self) -> String {
        let list = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let mut s = format!("tree {} n={} root={}\n", if self.kind == TreeKind::Ps { "ps" } else { "parse" }, self.n, self.root);
        for (id, node) in self.nodes.iter().enumerate() {
            let line = match &node.kind {
                NodeKind::Leaf(v) => format!("{id} leaf {v}"),
                NodeKind::Union(c) => format!("{id} union {}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
                NodeKind::Join(c) => format!("{id} join {}", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")),
                NodeKind::Spider { legs, body, thin, head } => format!(
                    "{id} spider {} head={} S={} K={}",
                    if *thin { "thin" } else { "thick" },
                    head.map_or("-".to_string(), |h| h.to_string()),
                    list(legs),
                    list(body)
                ),
                NodeKind::Extension { kind, map } => format!("{id} extension {kind} map={}", list(map)),
                NodeKind::XSpider { kind, map, head } => format!("{id} xspider {kind} head={head} map={}", list(map)),
            };
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<DecompTree> {
        let bad = |line: usize, msg: &str| Error::Invalid(format!("tree line {line}: {msg}"));
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let (_, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
        let h: Vec<&str> = header.split_whitespace().collect();
        if h.len() != 4 || h[0] != "tree" {
            return Err(bad(1, "header must be `tree <ps|parse> n=<n> root=<id>`"));
        }
        let kind = match h[1] {
            "ps" => TreeKind::Ps,
            "parse" => TreeKind::Parse,
            _ => return Err(bad(1, "unknown tree kind")),
        };
        let field = |t: &str, key: &str, line: usize| -> Result<String> {
            t.strip_prefix(key).map(str::to_string).ok_or_else(|| bad(line, &format!("expected {key}")))
        };
        let num = |t: &str, line: usize| -> Result<usize> { t.parse().map_err(|_| bad(line, &format!("bad number {t:?}"))) };
        let nums = |t: &str, line: usize| -> Result<Vec<usize>> {
            if t.is_empty() {
                return Ok(vec![]);
            }
            t.split(',').map(|x| num(x, line)).collect()
        };
        let n = num(&field(h[2], "n=", 1)?, 1)?;
        let root = num(&field(h[3], "root=", 1)?, 1)?;
        let mut tree = DecompTree::builder(n, kind);
        for (i, l) in lines {
            let ln = i + 1;
            let t: Vec<&str> = l.split_whitespace().collect();
            if t.len() < 2 || num(t[0], ln)? != tree.nodes.len() {
                return Err(bad(ln, "node ids must be consecutive from 0"));
            }
            let child_ok = |c: usize| if c < tree.nodes.len() { Ok(c) } else { Err(bad(ln, "child must precede parent")) };
            let kind = match t[1] {
                "leaf" => NodeKind::Leaf(num(t.get(2).ok_or_else(|| bad(ln, "missing vertex"))?, ln)?),
                "union" | "join" => {
                    let c = t[2..].iter().map(|x| num(x, ln).and_then(child_ok)).collect::<Result<Vec<_>>>()?;
                    if c.len() < 2 {
                        return Err(bad(ln, "union/join needs two children"));
                    }
                    if t[1] == "union" {
                        NodeKind::Union(c)
                    } else {
                        NodeKind::Join(c)
                    }
                }
                "spider" => {
                    if t.len() != 6 {
                        return Err(bad(ln, "spider needs thin|thick head= S= K="));
                    }
                    let thin = match t[2] {
                        "thin" => true,
                        "thick" => false,
                        _ => return Err(bad(ln, "spider must be thin or thick")),
                    };
                    let hs = field(t[3], "head=", ln)?;
                    let head = if hs == "-" { None } else { Some(child_ok(num(&hs, ln)?)?) };
                    let legs = nums(&field(t[4], "S=", ln)?, ln)?;
                    let body = nums(&field(t[5], "K=", ln)?, ln)?;
                    if legs.len() != body.len() || legs.len() < 2 {
                        return Err(bad(ln, "legs and body must pair up, at least two"));
                    }
                    NodeKind::Spider { legs, body, thin, head }
                }
                "extension" | "xspider" => {
                    let kind = t.get(2).and_then(|k| ExtensionKind::from_name(k)).ok_or_else(|| bad(ln, "unknown extension kind"))?;
                    let (head, mapf) = if t[1] == "xspider" {
                        (Some(child_ok(num(&field(t.get(3).copied().unwrap_or(""), "head=", ln)?, ln)?)?), t.get(4))
                    } else {
                        (None, t.get(3))
                    };
                    let map = nums(&field(mapf.copied().unwrap_or(""), "map=", ln)?, ln)?;
                    if map.len() != kind.order() {
                        return Err(bad(ln, "map length must match the extension graph"));
                    }
                    match head {
                        Some(head) => NodeKind::XSpider { kind, map, head },
                        None => NodeKind::Extension { kind, map },
                    }
                }
                other => return Err(bad(ln, &format!("unknown node kind {other:?}"))),
            };
            tree.push(kind);
        }
        if root >= tree.nodes.len() {
            return Err(bad(1, "root out of range"));
        }
        tree.root = root;
        Ok(tree)
    }
}

fn build(g: &Graph, scope: VertexSet, tree: &mut DecompTree) -> Result<usize> {
    if scope.len() == 1 {
        return Ok(tree.push(NodeKind::Leaf(scope.first().unwrap())));
    }
    let comps = g.components_of(&scope);
    if comps.len() > 1 {
        let kids = comps.into_iter().map(|c| build(g, c, tree)).collect::<Result<Vec<_>>>()?;
        return Ok(tree.push(NodeKind::Union(kids)));
    }
    let cocomps = g.co_components_of(&scope);
    if cocomps.len() > 1 {
        let kids = cocomps.into_iter().map(|c| build(g, c, tree)).collect::<Result<Vec<_>>>()?;
        return Ok(tree.push(NodeKind::Join(kids)));
    }
    let verts = scope.to_vec();
    let h = g.induced(&scope)?;
    let up = |s: &VertexSet| -> VertexSet { s.iter().map(|i| verts[i]).collect() };
    match tree.kind {
        TreeKind::Ps => {
            let sp = detect_spider(&h).ok_or_else(|| not_in_class(g, "P4-sparse"))?;
            let head = if sp.head.is_empty() { None } else { Some(build(g, up(&sp.head), tree)?) };
            let legs = sp.legs.iter().map(|&i| verts[i]).collect();
            let body = sp.body.iter().map(|&i| verts[i]).collect();
            Ok(tree.push(NodeKind::Spider { legs, body, thin: sp.thin, head }))
        }
        TreeKind::Parse => {
            if let Some(kind) = ExtensionKind::identify(&h) {
                let local = least_isomorphism(&kind.graph(), &h, &(0..verts.len()).collect::<Vec<_>>()).expect("identified");
                let map = local.iter().map(|&i| verts[i]).collect();
                return Ok(tree.push(NodeKind::Extension { kind, map }));
            }
            let xs = detect_x_spider(&h).ok_or_else(|| not_in_class(g, "P4-extendible"))?;
            let head = build(g, up(&xs.head), tree)?;
            let map = xs.map.iter().map(|&i| verts[i]).collect();
            Ok(tree.push(NodeKind::XSpider { kind: xs.kind, map, head }))
        }
    }
}

fn not_in_class(g: &Graph, class: &'static str) -> Error {
    let r = classify(g);
    let w = if class == "P4-sparse" { r.sparse_witness } else { r.extendible_witness };
    Error::NotInClass {
        class,
        witness: w.unwrap_or(Witness { vertices: VertexSet::new(), reason: "no decomposition" }),
    }
}

fn build_tree(g: &Graph, kind: TreeKind) -> Result<DecompTree> {
    let mut tree = DecompTree::builder(g.n(), kind);
    if g.n() == 0 {
        return Err(Error::Invalid("the empty graph has no decomposition tree".into()));
    }
    let root = build(g, g.vertices(), &mut tree)?;
    tree.root = root;
    Ok(tree)
}

/// The ps-tree of a P4-sparse graph.
pub fn build_ps_tree(g: &Graph) -> Result<DecompTree> {
    build_tree(g, TreeKind::Ps)
}

/// The parse tree of a P4-extendible graph.
pub fn build_parse_tree(g: &Graph) -> Result<DecompTree> {
    build_tree(g, TreeKind::Parse)
}

/// Thin/thick read off the graph at a spider node: legs see exactly one body
/// vertex in a thin spider. Must agree with the stored flag.
pub fn thin_or_thick_from_tree(tree: &DecompTree, id: usize, g: &Graph) -> Result<bool> {
    match &tree.nodes[id].kind {
        NodeKind::Spider { legs, body, .. } => {
            let k: VertexSet = body.iter().copied().collect();
            Ok(body.len() == 2 || k.count_in_row(g.row(legs[0])) == 1)
        }
        _ => Err(Error::Invalid(format!("node {id} is not a spider node"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{disjoint_union, join};

    fn net() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
    }

    #[test]
    fn extension_graphs_and_complements() {
        for k in ExtensionKind::ALL {
            let g = k.graph();
            assert_eq!(ExtensionKind::identify(&g), Some(k));
            assert_eq!(ExtensionKind::identify(&g.complement()), Some(k.complement()));
            assert!(g.is_connected() && g.complement().is_connected());
        }
    }

    #[test]
    fn classify_examples() {
        let r = classify(&Graph::path(4));
        assert!(!r.is_cograph && r.is_p4_sparse && r.is_p4_extendible);
        let r = classify(&Graph::cycle(5));
        assert!(!r.is_p4_sparse && r.is_p4_extendible);
        let r = classify(&net());
        assert!(r.is_p4_sparse && !r.is_p4_extendible);
        assert!(r.extendible_witness.unwrap().vertices.len() <= 7);
    }

    #[test]
    fn spider_detection() {
        let sp = detect_spider(&Graph::path(4)).unwrap();
        assert!(sp.thin);
        assert_eq!(sp.legs, vec![0, 3]);
        assert_eq!(sp.body, vec![1, 2]);
        assert!(detect_spider(&Graph::complete(3)).is_none());
        let thick = net().complement();
        let sp = detect_spider(&thick).unwrap();
        assert!(!sp.thin);
        assert_eq!(sp.legs.len(), 3);
    }

    #[test]
    fn x_spider_p4_with_head() {
        // P4 0-1-2-3 plus 4 adjacent to the midpoints
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]);
        let xs = detect_x_spider(&g).unwrap();
        assert_eq!(xs.kind, ExtensionKind::P4);
        assert_eq!(xs.head.to_vec(), vec![4]);
        assert!(detect_x_spider(&Graph::cycle(5)).is_none());
    }

    #[test]
    fn trees_rebuild_exactly() {
        let g = join(&[disjoint_union(&[Graph::path(4), Graph::complete(2)]), Graph::new(2)]);
        let t = build_ps_tree(&g).unwrap();
        assert_eq!(t.to_graph(), g);
        assert_eq!(DecompTree::from_text(&t.to_text()).unwrap(), t);
        let t = build_parse_tree(&Graph::cycle(5)).unwrap();
        assert!(matches!(t.nodes[t.root].kind, NodeKind::Extension { kind: ExtensionKind::C5, .. }));
        assert!(build_ps_tree(&Graph::cycle(5)).is_err());
        let k3 = build_ps_tree(&Graph::complete(3)).unwrap();
        assert!(matches!(&k3.nodes[k3.root].kind, NodeKind::Join(c) if c.len() == 3));
    }

    #[test]
    fn thin_flag_cross_check() {
        for g in [Graph::path(4), net(), net().complement()] {
            let t = build_ps_tree(&g).unwrap();
            let NodeKind::Spider { thin, .. } = t.nodes[t.root].kind else { panic!() };
            assert_eq!(thin_or_thick_from_tree(&t, t.root, &g).unwrap(), thin);
        }
    }
}
