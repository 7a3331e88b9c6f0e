//! One bottom-up pass over a decomposition tree computing all twelve
//! maximum-subgraph slots at every node.
//!
//! Each slot stores its size and a recipe: the alternative that won, as a
//! list of pieces (a child slot, a single vertex, or a spider's legs or body
//! minus at most one vertex). Witnesses and certificates are rebuilt by one
//! top-down walk over the recipes, which keeps the pass linear in tree size.
//!
//! Join nodes, thick spiders and P/coF-spiders are evaluated in the
//! complement: the union, thin-spider, coP- and F-spider rules run on dual
//! slots, and the recipe is mapped back (slot `p` becomes `dual(p)`, sides of
//! the certificate swap).

use std::sync::OnceLock;

use crate::decomposition::{least_isomorphism, build_parse_tree, build_ps_tree, classify, DecompTree, ExtensionKind, NodeKind};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet};
use crate::oracle::{self, Certificate, MaxSubgraphResult};
use crate::property::PropertyKind::{self, *};

/// The twelve witness sets of one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyVector {
    pub sets: [VertexSet; 12],
}

impl PropertyVector {
    pub fn get(&self, p: PropertyKind) -> &VertexSet {
        &self.sets[p.index()]
    }

    /// Slot `p` moves to `dual(p)`; the sets themselves are unchanged. This is
    /// the vector of the complement graph.
    pub fn dual(&self) -> PropertyVector {
        PropertyVector { sets: PropertyKind::ALL.map(|p| self.sets[p.dual().index()].clone()) }
    }
}

pub fn dual(v: &PropertyVector) -> PropertyVector {
    v.dual()
}

/// Handle to a vector held by a [`Dp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vid(u32);

impl Vid {
    /// The vector of the empty graph.
    pub const EMPTY: Vid = Vid(0);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    A,
    B,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Where a child's certificate goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Place {
    Same,
    ToA,
    ToB,
}

impl Place {
    fn co(self) -> Place {
        match self {
            Place::ToA => Place::ToB,
            Place::ToB => Place::ToA,
            p => p,
        }
    }
}

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
enum Piece {
    Ref { id: u32, slot: PropertyKind, place: Place },
    Vert { v: u32, side: Side },
    Group { g: u32, except: u32, side: Side },
}

#[derive(Clone, Debug)]
struct Entry {
    sizes: [u32; 12],
    recipe: [(u32, u32); 12],
}

/// The evaluation arena. Every `eval_*` call appends one vector (k-ary
/// unions and joins also leave their intermediate folds behind).
#[derive(Clone, Debug)]
pub struct Dp {
    entries: Vec<Entry>,
    pieces: Vec<Piece>,
    groups: Vec<Vec<u32>>,
}

impl Default for Dp {
    fn default() -> Self {
        Self::new()
    }
}

use Place::*;
use Side::{A as SA, B as SB};

#[inline]
fn r(id: Vid, slot: PropertyKind, place: Place) -> Piece {
    Piece::Ref { id: id.0, slot, place }
}

#[inline]
fn v(x: usize, side: Side) -> Piece {
    Piece::Vert { v: x as u32, side }
}

/// Vertices listed with a side string such as "ABBA".
fn vs(xs: &[usize], sides: &str) -> Vec<Piece> {
    debug_assert_eq!(xs.len(), sides.len());
    xs.iter().zip(sides.bytes()).map(|(&x, s)| v(x, if s == b'A' { SA } else { SB })).collect()
}

struct Eval<'a> {
    dp: &'a mut Dp,
    co: bool,
    id: u32,
}

impl Eval<'_> {
    fn stored(&self, slot: PropertyKind) -> PropertyKind {
        if self.co {
            slot.dual()
        } else {
            slot
        }
    }

    fn size_of(&self, p: &Piece) -> u32 {
        match *p {
            Piece::Ref { id, slot, .. } => self.dp.entries[id as usize].sizes[self.stored(slot).index()],
            Piece::Vert { .. } => 1,
            Piece::Group { g, except, .. } => self.dp.groups[g as usize].len() as u32 - (except != NONE) as u32,
        }
    }

    /// First alternative of maximum size wins.
    fn pick(&mut self, slot: PropertyKind, alts: &[&[Piece]]) {
        let mut best = 0;
        let mut best_size = 0;
        for (i, alt) in alts.iter().enumerate() {
            let s: u32 = alt.iter().map(|p| self.size_of(p)).sum();
            if i == 0 || s > best_size {
                best = i;
                best_size = s;
            }
        }
        let start = self.dp.pieces.len() as u32;
        for p in alts[best] {
            let q = match *p {
                Piece::Ref { id, slot, place } if self.co => Piece::Ref { id, slot: slot.dual(), place: place.co() },
                Piece::Vert { v, side } if self.co => Piece::Vert { v, side: side.flip() },
                Piece::Group { g, except, side } if self.co => Piece::Group { g, except, side: side.flip() },
                q => q,
            };
            self.dp.pieces.push(q);
        }
        let len = self.dp.pieces.len() as u32 - start;
        let k = self.stored(slot).index();
        let e = &mut self.dp.entries[self.id as usize];
        e.sizes[k] = best_size;
        e.recipe[k] = (start, len);
    }
}

/// Role permutations: `tau[i]` is the vertex of `from`'s numbering that plays
/// vertex `i` of `to` in the complement of `from`.
fn complement_roles(from: ExtensionKind) -> &'static [usize] {
    static P: OnceLock<Vec<usize>> = OnceLock::new();
    static COF: OnceLock<Vec<usize>> = OnceLock::new();
    let make = |k: ExtensionKind| {
        let c = k.graph().complement();
        least_isomorphism(&k.complement().graph(), &c, &[0, 1, 2, 3, 4]).expect("complement pair")
    };
    match from {
        ExtensionKind::P => P.get_or_init(|| make(ExtensionKind::P)),
        ExtensionKind::CoF => COF.get_or_init(|| make(ExtensionKind::CoF)),
        _ => unreachable!("only P and coF are evaluated through their complement"),
    }
}

impl Dp {
    pub fn new() -> Self {
        Dp {
            entries: vec![Entry { sizes: [0; 12], recipe: [(0, 0); 12] }],
            pieces: Vec::new(),
            groups: Vec::new(),
        }
    }

    fn alloc(&mut self) -> u32 {
        self.entries.push(Entry { sizes: [0; 12], recipe: [(0, 0); 12] });
        self.entries.len() as u32 - 1
    }

    fn group(&mut self, xs: &[usize]) -> u32 {
        self.groups.push(xs.iter().map(|&x| x as u32).collect());
        self.groups.len() as u32 - 1
    }

    pub fn sizes(&self, x: Vid) -> [usize; 12] {
        self.entries[x.0 as usize].sizes.map(|s| s as usize)
    }

    pub fn size(&self, x: Vid, p: PropertyKind) -> usize {
        self.entries[x.0 as usize].sizes[p.index()] as usize
    }

    /// Number of stored vectors, including the empty one.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.len() <= 1
    }

    pub fn leaf(&mut self, x: usize) -> Vid {
        let id = self.alloc();
        for p in PropertyKind::ALL {
            let start = self.pieces.len() as u32;
            self.pieces.push(v(x, SA));
            let e = &mut self.entries[id as usize];
            e.sizes[p.index()] = 1;
            e.recipe[p.index()] = (start, 1);
        }
        Vid(id)
    }

    fn union2(&mut self, c0: Vid, c1: Vid, co: bool) -> Vid {
        let id = self.alloc();
        let me = Vid(id);
        let mut e = Eval { dp: self, co, id };
        e.pick(MC, &[&[r(c0, MC, ToA)], &[r(c1, MC, ToA)]]);
        e.pick(MI, &[&[r(c0, MI, ToA), r(c1, MI, ToA)]]);
        e.pick(MB, &[&[r(c0, MB, Same), r(c1, MB, Same)]]);
        e.pick(McB, &[&[r(c0, McB, Same)], &[r(c1, McB, Same)], &[r(c0, MC, ToA), r(c1, MC, ToB)]]);
        e.pick(MS, &[&[r(c0, MI, ToA), r(c1, MS, Same)], &[r(c1, MI, ToA), r(c0, MS, Same)]]);
        e.pick(MUC, &[&[r(c0, MUC, ToA), r(c1, MUC, ToA)]]);
        e.pick(MJI, &[&[r(me, MI, ToA)], &[r(c0, MJI, ToA)], &[r(c1, MJI, ToA)]]);
        e.pick(MM, &[&[r(c0, MM, Same), r(c1, MM, Same)]]);
        e.pick(
            McM,
            &[
                &[r(c0, MS, Same), r(c1, MI, ToA)],
                &[r(c1, MS, Same), r(c0, MI, ToA)],
                &[r(c0, McM, Same)],
                &[r(c1, McM, Same)],
                &[r(c0, MC, ToB), r(c1, MJI, ToA)],
                &[r(c1, MC, ToB), r(c0, MJI, ToA)],
            ],
        );
        e.pick(MP, &[&[r(me, MM, Same)], &[r(c0, MP, Same), r(c1, MUC, ToB)], &[r(c1, MP, Same), r(c0, MUC, ToB)]]);
        e.pick(MU, &[&[r(c0, MU, Same), r(c1, MUC, ToB)], &[r(c1, MU, Same), r(c0, MUC, ToB)]]);
        e.pick(McU, &[&[r(me, MB, Same)], &[r(c0, MI, ToB), r(c1, McU, Same)], &[r(c1, MI, ToB), r(c0, McU, Same)]]);
        me
    }

    fn fold(&mut self, children: &[Vid], co: bool) -> Vid {
        assert!(children.len() >= 2, "union and join need at least two children");
        let mut acc = children[0];
        for &c in &children[1..] {
            let next = self.union2(acc, c, co);
            if co {
                debug_assert_eq!(self.sizes(next), join_direct(&self.sizes(acc), &self.sizes(c)), "join rules disagree with dual union");
            }
            acc = next;
        }
        acc
    }

    /// `G_0 + G_1 + …`, folded left to right.
    pub fn eval_union(&mut self, children: &[Vid]) -> Vid {
        self.fold(children, false)
    }

    /// `G_0 ⊕ G_1 ⊕ …`, evaluated as the dual of the union of the duals.
    pub fn eval_join(&mut self, children: &[Vid]) -> Vid {
        self.fold(children, true)
    }

    /// Thin-spider rules in a possibly complemented world. `legs[i]` pairs
    /// with `body[i]`.
    fn spider(&mut self, legs: &[usize], body: &[usize], h: Vid, co: bool) -> Vid {
        assert!(legs.len() >= 2 && legs.len() == body.len());
        let (gl, gk) = (self.group(legs), self.group(body));
        let id = self.alloc();
        let (s1, s2, k1, k2) = (legs[0], legs[1], body[0], body[1]);
        let legs_ = |side| Piece::Group { g: gl, except: NONE, side };
        let legs_ex = |side| Piece::Group { g: gl, except: s1 as u32, side };
        let body_ = |side| Piece::Group { g: gk, except: NONE, side };
        let body_ex = |side| Piece::Group { g: gk, except: k1 as u32, side };
        let mut e = Eval { dp: self, co, id };
        e.pick(MC, &[&[v(s1, SA), v(k1, SA)], &[body_(SA), r(h, MC, ToA)]]);
        e.pick(MI, &[&[v(k1, SA), legs_ex(SA)], &[legs_(SA), r(h, MI, ToA)]]);
        e.pick(
            MB,
            &[
                &[legs_ex(SA), v(s1, SB), v(k1, SA), v(k2, SB)],
                &[legs_(SA), r(h, MI, ToA), v(k1, SB)],
                &[legs_(SA), r(h, MB, Same)],
            ],
        );
        e.pick(
            McB,
            &[
                &[v(s1, SA), v(k1, SA), v(s2, SB), v(k2, SB)],
                &[v(s1, SA), v(k1, SA), body_ex(SB), r(h, MC, ToB)],
                &[body_(SA), r(h, McB, Same)],
            ],
        );
        e.pick(MS, &[&[legs_(SA), body_(SB), r(h, MS, Same)]]);
        // any member of the family W' works for the last term; K is one
        e.pick(MUC, &[&[legs_(SA), v(k1, SA)], &[legs_(SA), r(h, MUC, ToA)], &[r(h, MC, ToA), body_(SA)]]);
        e.pick(
            MJI,
            &[
                &[v(s1, SA), v(k1, SA), v(k2, SA)],
                &[v(k1, SA), legs_ex(SA)],
                &[v(s1, SA), v(k1, SA), r(h, MI, ToA)],
                &[legs_(SA), r(h, MI, ToA)],
                &[body_(SA), r(h, MJI, ToA)],
            ],
        );
        e.pick(
            MM,
            &[
                &[legs_(SA), body_(SB), r(h, MS, Same)],
                &[v(k1, SA), legs_ex(SA), v(s1, SB), r(h, MUC, ToB)],
                &[legs_(SA), r(h, MM, Same)],
            ],
        );
        e.pick(
            McM,
            &[
                &[legs_(SA), body_(SB), r(h, MS, Same)],
                &[v(s1, SB), v(k1, SB), body_ex(SA), r(h, MJI, ToA)],
                &[body_(SB), r(h, McM, Same)],
            ],
        );
        e.pick(MP, &[&[body_(SA), legs_(SB), r(h, MP, Same)]]);
        e.pick(MU, &[&[body_(SA), legs_(SB), r(h, MU, Same)]]);
        e.pick(McU, &[&[body_(SA), legs_(SB), r(h, McU, Same)]]);
        Vid(id)
    }

    /// Thin spider `(S, K, R)` with `body[i] = f(legs[i])`; `head` is the
    /// vector of `G[R]` or [`Vid::EMPTY`].
    pub fn eval_thin_spider(&mut self, legs: &[usize], body: &[usize], head: Vid) -> Vid {
        let (legs, body) = sorted_pairs(legs, body);
        self.spider(&legs, &body, head, false)
    }

    /// Thick spider, through its complement: the thin spider with legs `K`,
    /// body `S` and the same pairing.
    pub fn eval_thick_spider(&mut self, legs: &[usize], body: &[usize], head: Vid) -> Vid {
        let (body, legs) = sorted_pairs(body, legs);
        let out = self.spider(&body, &legs, head, true);
        debug_assert!(thick_direct_agrees(&self.sizes(out), legs.len(), &self.sizes(head)), "thick spider formulas disagree");
        out
    }

    /// Constant-size brute force over the subsets of an extension graph.
    pub fn eval_extension(&mut self, kind: ExtensionKind, map: &[usize]) -> Vid {
        let g = kind.graph();
        let mut verts: Vec<(usize, usize)> = map.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        verts.sort_unstable();
        // local index j <-> host vertex verts[j].0, ascending
        let k = verts.len();
        let masks: Vec<u64> = (0..k)
            .map(|j| (0..k).filter(|&t| g.has_edge(verts[j].1, verts[t].1)).fold(0, |m, t| m | 1 << t))
            .collect();
        let id = self.alloc();
        for p in PropertyKind::ALL {
            let mut best: Option<(u64, (u64, u64))> = None;
            // descending popcount, then ascending lexicographic order
            let mut subsets: Vec<u64> = (0..1u64 << k).collect();
            subsets.sort_by_key(|&w| (std::cmp::Reverse(w.count_ones()), lex_key(w, k)));
            for w in subsets {
                if let Some(c) = oracle::certify_mask(&masks, w, p) {
                    best = Some((w, c));
                    break;
                }
            }
            let (w, (a, _)) = best.expect("the empty set qualifies");
            let start = self.pieces.len() as u32;
            for j in bits(w) {
                self.pieces.push(v(verts[j].0, if a >> j & 1 == 1 { SA } else { SB }));
            }
            let e = &mut self.entries[id as usize];
            e.sizes[p.index()] = w.count_ones();
            e.recipe[p.index()] = (start, self.pieces.len() as u32 - start);
        }
        Vid(id)
    }

    /// X-spider with nonempty head; `map[i]` plays vertex `i` of
    /// `kind.graph()`.
    pub fn eval_x_spider(&mut self, kind: ExtensionKind, map: &[usize], head: Vid) -> Vid {
        match kind {
            ExtensionKind::P4 => {
                let (legs, body) = sorted_pairs(&[map[0], map[3]], &[map[1], map[2]]);
                self.spider(&legs, &body, head, false)
            }
            ExtensionKind::CoP => self.cop_spider([map[0], map[4], map[1], map[2], map[3]], head, false),
            ExtensionKind::F => self.f_spider([map[0], map[4], map[1], map[2], map[3]], head, false),
            ExtensionKind::P => {
                let t = complement_roles(kind);
                self.cop_spider([map[t[0]], map[t[4]], map[t[1]], map[t[2]], map[t[3]]], head, true)
            }
            ExtensionKind::CoF => {
                let t = complement_roles(kind);
                self.f_spider([map[t[0]], map[t[4]], map[t[1]], map[t[2]], map[t[3]]], head, true)
            }
            _ => panic!("{kind} is not separable"),
        }
    }

    /// Roles `[a, a', b, c, d]`: triangle `a a' b`, path `b c d`.
    fn cop_spider(&mut self, roles: [usize; 5], h: Vid, co: bool) -> Vid {
        let [a, ap, b, c, d] = roles;
        let id = self.alloc();
        let mut e = Eval { dp: self, co, id };
        let with = |mut xs: Vec<Piece>, p: Piece| {
            xs.push(p);
            xs
        };
        e.pick(MC, &[&vs(&[a, ap, b], "AAA"), &with(vs(&[b, c], "AA"), r(h, MC, ToA))]);
        e.pick(
            MI,
            &[
                &vs(&[a, c], "AA"),
                &vs(&[a, d], "AA"),
                &vs(&[ap, c], "AA"),
                &vs(&[ap, d], "AA"),
                &vs(&[b, d], "AA"),
                &with(vs(&[a, d], "AA"), r(h, MI, ToA)),
                &with(vs(&[ap, d], "AA"), r(h, MI, ToA)),
            ],
        );
        e.pick(
            MB,
            &[
                &vs(&[ap, b, c, d], "ABAB"),
                &vs(&[a, b, c, d], "ABAB"),
                &with(vs(&[a, ap, d, c], "ABAB"), r(h, MI, ToA)),
                &with(vs(&[a, ap, d], "ABA"), r(h, MB, Same)),
            ],
        );
        // The middle term is (S ∪ K) minus d, together with MC(H).
        e.pick(
            McB,
            &[
                &vs(&[a, ap, b, c, d], "AAABB"),
                &with(vs(&[a, ap, b, c], "AAAB"), r(h, MC, ToB)),
                &with(vs(&[b, c], "AA"), r(h, McB, Same)),
            ],
        );
        e.pick(
            MS,
            &[
                &vs(&[a, ap, b, d], "ABBA"),
                &vs(&[a, ap, b, c], "ABBA"),
                &vs(&[ap, b, c, d], "ABBA"),
                &vs(&[a, b, c, d], "ABBA"),
                &with(vs(&[a, ap, b, d], "ABBA"), r(h, MI, ToA)),
                &with(vs(&[ap, b, c, d], "ABBA"), r(h, MS, Same)),
                &with(vs(&[a, b, c, d], "ABBA"), r(h, MS, Same)),
            ],
        );
        e.pick(
            MUC,
            &[
                &vs(&[a, ap, b, d], "AAAA"),
                &vs(&[a, ap, c, d], "AAAA"),
                &with(vs(&[a, ap, c], "AAA"), r(h, MC, ToA)),
                &with(vs(&[a, ap, d], "AAA"), r(h, MC, ToA)),
                &with(vs(&[a, ap, d], "AAA"), r(h, MUC, ToA)),
            ],
        );
        e.pick(
            MJI,
            &[
                &vs(&[a, ap, b], "AAA"),
                &vs(&[a, b, c], "AAA"),
                &vs(&[ap, b, c], "AAA"),
                &vs(&[b, c, d], "AAA"),
                &with(vs(&[a, b], "AA"), r(h, MI, ToA)),
                &with(vs(&[ap, b], "AA"), r(h, MI, ToA)),
                &with(vs(&[c, d], "AA"), r(h, MI, ToA)),
                &with(vs(&[a, d], "AA"), r(h, MI, ToA)),
                &with(vs(&[ap, d], "AA"), r(h, MI, ToA)),
                &with(vs(&[b, c], "AA"), r(h, MJI, ToA)),
            ],
        );
        e.pick(
            MM,
            &[
                &with(vs(&[a, ap, b, c, d], "BBABA"), r(h, MC, ToB)),
                &with(vs(&[a, ap, c, d], "ABAB"), r(h, MUC, ToB)),
                &with(vs(&[a, ap, b, d], "BBAA"), r(h, MUC, ToB)),
                &with(vs(&[a, b, c, d], "ABBA"), r(h, MS, Same)),
                &with(vs(&[ap, b, c, d], "ABBA"), r(h, MS, Same)),
                &with(vs(&[a, ap, c, d], "ABBA"), r(h, MS, Same)),
                &with(vs(&[a, ap, d], "ABA"), r(h, MM, Same)),
            ],
        );
        e.pick(
            McM,
            &[
                &with(vs(&[a, ap, b, c, d], "BBBAA"), r(h, MI, ToA)),
                &with(vs(&[a, b, c, d], "ABBA"), r(h, MS, Same)),
                &with(vs(&[ap, b, c, d], "ABBA"), r(h, MS, Same)),
                &with(vs(&[a, ap, b, c], "BBAA"), r(h, MJI, ToA)),
                &with(vs(&[b, c], "AA"), r(h, McM, Same)),
            ],
        );
        e.pick(MP, &[&with(vs(&[a, ap, b, c, d], "BBAAB"), r(h, MP, Same))]);
        e.pick(MU, &[&with(vs(&[a, ap, b, c, d], "BBAAB"), r(h, MU, Same))]);
        e.pick(
            McU,
            &[
                &with(vs(&[a, ap, b, c, d], "ABAAB"), r(h, MI, ToB)),
                &with(vs(&[a, ap, d, b], "ABBA"), r(h, MB, Same)),
                &with(vs(&[b, c, a, d], "AABB"), r(h, McU, Same)),
                &with(vs(&[b, c, ap, d], "AABB"), r(h, McU, Same)),
            ],
        );
        Vid(id)
    }

    /// Roles `[a, a', b, c, d]`: `a` and `a'` pendant at `b`, path `b c d`.
    fn f_spider(&mut self, roles: [usize; 5], h: Vid, co: bool) -> Vid {
        let [a, ap, b, c, d] = roles;
        let id = self.alloc();
        let mut e = Eval { dp: self, co, id };
        let with = |mut xs: Vec<Piece>, p: Piece| {
            xs.push(p);
            xs
        };
        e.pick(
            MC,
            &[
                &vs(&[a, b], "AA"),
                &vs(&[ap, b], "AA"),
                &vs(&[b, c], "AA"),
                &vs(&[c, d], "AA"),
                &with(vs(&[b, c], "AA"), r(h, MC, ToA)),
            ],
        );
        e.pick(MI, &[&vs(&[a, ap, c], "AAA"), &with(vs(&[a, ap, d], "AAA"), r(h, MI, ToA))]);
        e.pick(
            MB,
            &[
                &vs(&[a, ap, b, c, d], "AABAB"),
                &with(vs(&[a, ap, d, c], "AAAB"), r(h, MI, ToA)),
                &with(vs(&[a, ap, d, b], "AAAB"), r(h, MI, ToA)),
                &with(vs(&[a, ap, d], "AAA"), r(h, MB, Same)),
            ],
        );
        e.pick(
            McB,
            &[
                &vs(&[ap, b, c, d], "AABB"),
                &vs(&[a, b, c, d], "AABB"),
                &with(vs(&[b, c, a], "AAB"), r(h, MC, ToA)),
                &with(vs(&[b, c, ap], "AAB"), r(h, MC, ToA)),
                &with(vs(&[b, c, d], "AAB"), r(h, MC, ToA)),
                &with(vs(&[b, c], "AA"), r(h, McB, Same)),
            ],
        );
        e.pick(MS, &[&with(vs(&[a, ap, b, c, d], "AABBA"), r(h, MS, Same))]);
        e.pick(
            MUC,
            &[
                &vs(&[a, ap, c, d], "AAAA"),
                &with(vs(&[a, ap, c], "AAA"), r(h, MC, ToA)),
                &with(vs(&[a, ap, d], "AAA"), r(h, MUC, ToA)),
            ],
        );
        e.pick(
            MJI,
            &[
                &vs(&[a, ap, b, c], "AAAA"),
                &with(vs(&[a, ap, d], "AAA"), r(h, MI, ToA)),
                &with(vs(&[a, ap, b], "AAA"), r(h, MI, ToA)),
                &with(vs(&[b, c], "AA"), r(h, MJI, ToA)),
            ],
        );
        e.pick(
            MM,
            &[
                &with(vs(&[a, ap, b, c, d], "AABBA"), r(h, MS, Same)),
                &with(vs(&[a, ap, b, d], "BBAA"), r(h, MUC, ToB)),
                &with(vs(&[a, ap, c, d], "AAAB"), r(h, MUC, ToB)),
                &with(vs(&[a, ap, d], "AAA"), r(h, MM, Same)),
            ],
        );
        e.pick(
            McM,
            &[
                &with(vs(&[a, ap, b, c, d], "AABBA"), r(h, MS, Same)),
                &with(vs(&[a, b, c], "BAA"), r(h, MJI, ToA)),
                &with(vs(&[ap, b, c], "BAA"), r(h, MJI, ToA)),
                &with(vs(&[b, c, d], "AAB"), r(h, MJI, ToA)),
                &with(vs(&[b, c], "AA"), r(h, McM, Same)),
            ],
        );
        e.pick(MP, &[&with(vs(&[a, ap, b, c, d], "BBAAB"), r(h, MP, Same))]);
        e.pick(MU, &[&with(vs(&[a, ap, b, c, d], "BBAAB"), r(h, MU, Same))]);
        e.pick(McU, &[&with(vs(&[a, ap, b, c, d], "BBAAB"), r(h, McU, Same))]);
        Vid(id)
    }

    /// Rebuild the witness of slot `p` and, for partition slots, its
    /// certificate.
    pub fn result(&self, x: Vid, p: PropertyKind) -> MaxSubgraphResult {
        #[derive(Clone, Copy)]
        enum Mode {
            Cert(bool),
            All(Side),
        }
        let (mut a, mut b) = (VertexSet::new(), VertexSet::new());
        let start = if p.has_partition() { Mode::Cert(false) } else { Mode::All(SA) };
        let mut stack = vec![(x.0, p, start)];
        let put = |a: &mut VertexSet, b: &mut VertexSet, x: u32, side: Side, mode: Mode| {
            let s = match mode {
                Mode::Cert(false) => side,
                Mode::Cert(true) => side.flip(),
                Mode::All(s) => s,
            };
            match s {
                SA => a.insert(x as usize),
                SB => b.insert(x as usize),
            };
        };
        while let Some((id, slot, mode)) = stack.pop() {
            let (start, len) = self.entries[id as usize].recipe[slot.index()];
            for piece in &self.pieces[start as usize..(start + len) as usize] {
                match *piece {
                    Piece::Ref { id, slot, place } => {
                        if id == 0 {
                            continue;
                        }
                        let m = match (mode, place) {
                            (Mode::All(s), _) => Mode::All(s),
                            (Mode::Cert(sw), Same) => Mode::Cert(sw),
                            (Mode::Cert(sw), ToA) => Mode::All(if sw { SB } else { SA }),
                            (Mode::Cert(sw), ToB) => Mode::All(if sw { SA } else { SB }),
                        };
                        stack.push((id, slot, m));
                    }
                    Piece::Vert { v, side } => put(&mut a, &mut b, v, side, mode),
                    Piece::Group { g, except, side } => {
                        for &x in &self.groups[g as usize] {
                            if x != except {
                                put(&mut a, &mut b, x, side, mode);
                            }
                        }
                    }
                }
            }
        }
        let witness = a.union(&b);
        debug_assert_eq!(witness.len(), self.size(x, p), "recipe for {p:?} rebuilt the wrong number of vertices");
        MaxSubgraphResult {
            property: p,
            size: witness.len(),
            witness,
            partition: p.has_partition().then_some(Certificate { a, b }),
        }
    }

    pub fn vector(&self, x: Vid) -> PropertyVector {
        PropertyVector { sets: PropertyKind::ALL.map(|p| self.result(x, p).witness) }
    }
}

fn lex_key(w: u64, k: usize) -> Vec<usize> {
    bits(w).chain(std::iter::repeat(k + 1)).take(k).collect()
}

fn sorted_pairs(legs: &[usize], body: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut pairs: Vec<(usize, usize)> = legs.iter().copied().zip(body.iter().copied()).collect();
    pairs.sort_unstable();
    pairs.into_iter().unzip()
}

/// The join rules written out directly, sizes only.
fn join_direct(s0: &[usize; 12], s1: &[usize; 12]) -> [usize; 12] {
    let g = |s: &[usize; 12], p: PropertyKind| s[p.index()];
    let mut o = [0usize; 12];
    o[MC.index()] = g(s0, MC) + g(s1, MC);
    o[MI.index()] = g(s0, MI).max(g(s1, MI));
    o[MB.index()] = g(s0, MB).max(g(s1, MB)).max(g(s0, MI) + g(s1, MI));
    o[McB.index()] = g(s0, McB) + g(s1, McB);
    o[MS.index()] = (g(s0, MC) + g(s1, MS)).max(g(s1, MC) + g(s0, MS));
    o[MUC.index()] = o[MC.index()].max(g(s0, MUC)).max(g(s1, MUC));
    o[MJI.index()] = g(s0, MJI) + g(s1, MJI);
    let mm = |x: &[usize; 12], y: &[usize; 12]| (g(x, MS) + g(y, MC)).max(g(x, MM)).max(g(x, MI) + g(y, MUC));
    o[MM.index()] = mm(s0, s1).max(mm(s1, s0));
    o[McM.index()] = g(s0, McM) + g(s1, McM);
    o[MP.index()] = o[McM.index()].max(g(s0, MP) + g(s1, MJI)).max(g(s1, MP) + g(s0, MJI));
    o[MU.index()] = o[McB.index()].max(g(s1, MU) + g(s0, MC)).max(g(s0, MU) + g(s1, MC));
    o[McU.index()] = (g(s0, McU) + g(s1, MJI)).max(g(s1, McU) + g(s0, MJI));
    o
}

/// The thick-spider formulas that are spelled out directly, for `|K| = t`.
fn thick_direct_agrees(out: &[usize; 12], t: usize, h: &[usize; 12]) -> bool {
    let g = |p: PropertyKind| h[p.index()];
    let mc = t.max(t + g(MC));
    let mb = 4.max(g(MI) + t + 1).max(g(MB) + t);
    let muc = 3.max(t).max(2 + g(MC)).max(t + g(MC)).max(t + g(MUC));
    let ms = 2 * t + g(MS);
    let mp = 2 * t + g(MP);
    out[MC.index()] == mc && out[MB.index()] == mb && out[MUC.index()] == muc && out[MS.index()] == ms && out[MP.index()] == mp
}

/// A tree together with its evaluated vectors.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub tree: DecompTree,
    pub dp: Dp,
    /// vector handle of every tree node
    pub nodes: Vec<Vid>,
}

impl Evaluation {
    pub fn root(&self) -> Vid {
        self.nodes[self.tree.root]
    }

    pub fn result(&self, p: PropertyKind) -> MaxSubgraphResult {
        self.dp.result(self.root(), p)
    }

    pub fn size(&self, p: PropertyKind) -> usize {
        self.dp.size(self.root(), p)
    }
}

/// The bottom-up pass. Nodes are stored children first, so one forward scan
/// suffices.
pub fn evaluate(tree: &DecompTree) -> Evaluation {
    let mut dp = Dp::new();
    let mut nodes: Vec<Vid> = Vec::with_capacity(tree.len());
    for node in &tree.nodes {
        let id = match &node.kind {
            NodeKind::Leaf(x) => dp.leaf(*x),
            NodeKind::Union(c) => {
                let kids: Vec<Vid> = c.iter().map(|&i| nodes[i]).collect();
                dp.eval_union(&kids)
            }
            NodeKind::Join(c) => {
                let kids: Vec<Vid> = c.iter().map(|&i| nodes[i]).collect();
                dp.eval_join(&kids)
            }
            NodeKind::Spider { legs, body, thin, head } => {
                let h = head.map_or(Vid::EMPTY, |i| nodes[i]);
                if *thin {
                    dp.eval_thin_spider(legs, body, h)
                } else {
                    dp.eval_thick_spider(legs, body, h)
                }
            }
            NodeKind::Extension { kind, map } => dp.eval_extension(*kind, map),
            NodeKind::XSpider { kind, map, head } => dp.eval_x_spider(*kind, map, nodes[*head]),
        };
        nodes.push(id);
    }
    Evaluation { tree: tree.clone(), dp, nodes }
}

/// Decompose `g` (ps-tree when P4-sparse, otherwise parse tree) and
/// evaluate.
pub fn evaluate_graph(g: &Graph) -> Result<Evaluation> {
    let report = classify(g);
    let tree = if report.is_p4_sparse {
        build_ps_tree(g)?
    } else if report.is_p4_extendible {
        build_parse_tree(g)?
    } else {
        return Err(Error::NotInClass {
            class: "P4-sparse or P4-extendible",
            witness: report.witness().cloned().expect("failing classes carry a witness"),
        });
    };
    Ok(evaluate(&tree))
}

/// Maximum induced subgraph of `g` with property `p`, with certificate.
pub fn max_subgraph(g: &Graph, p: PropertyKind) -> Result<MaxSubgraphResult> {
    if g.n() == 0 {
        return Ok(MaxSubgraphResult {
            property: p,
            witness: VertexSet::new(),
            size: 0,
            partition: p.has_partition().then(|| Certificate { a: VertexSet::new(), b: VertexSet::new() }),
        });
    }
    Ok(evaluate_graph(g)?.result(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{copies, disjoint_union, join};
    use crate::oracle::{brute_force_max_subgraph, certifies};

    fn check_all(g: &Graph) {
        let ev = evaluate_graph(g).unwrap();
        for p in PropertyKind::ALL {
            let got = ev.result(p);
            let want = brute_force_max_subgraph(g, p).unwrap();
            assert_eq!(got.size, want.size, "{p:?} on {g:?}");
            if let Some(c) = &got.partition {
                assert!(certifies(g, p, &got.witness, c), "{p:?} certificate {c:?} on {g:?}");
            } else {
                assert!(oracle::has_property(g, &got.witness, p));
            }
        }
    }

    #[test]
    fn spec_examples() {
        let f1 = disjoint_union(&[Graph::complete(1), copies(3, &Graph::complete(2))]);
        assert_eq!(max_subgraph(&f1, MP).unwrap().size, 7);
        assert_eq!(max_subgraph(&copies(2, &Graph::complete(2)), McU).unwrap().size, 4);
        assert_eq!(max_subgraph(&Graph::complete_bipartite(3, 3), MI).unwrap().size, 3);
        let wheel = join(&[Graph::complete(1), Graph::cycle(4)]);
        assert_eq!(max_subgraph(&wheel, MUC).unwrap().size, 3);
        let k2_2k2 = join(&[Graph::complete(2), copies(2, &Graph::complete(2))]);
        assert_eq!(max_subgraph(&k2_2k2, MM).unwrap().size, 5);
        assert_eq!(max_subgraph(&Graph::cycle(5), MP).unwrap().size, 5);
        assert_eq!(max_subgraph(&Graph::cycle(5), MU).unwrap().size, 4);
        assert_eq!(max_subgraph(&Graph::cycle(5), MM).unwrap().size, 5);
        let net = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]);
        assert_eq!(max_subgraph(&net, MU).unwrap().size, 6);
        assert_eq!(max_subgraph(&ExtensionKind::CoF.graph(), MC).unwrap().size, 3);
    }

    #[test]
    fn small_families_match_oracle() {
        let net = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]);
        for g in [
            Graph::path(4),
            Graph::cycle(5),
            net.clone(),
            net.complement(),
            join(&[Graph::path(4), Graph::complete(1)]),
            disjoint_union(&[Graph::path(4), Graph::cycle(4)]),
        ] {
            check_all(&g);
        }
        for k in ExtensionKind::ALL {
            check_all(&k.graph());
        }
    }

    #[test]
    fn random_trees_match_oracle() {
        let mut r = crate::gen::rng(11);
        for i in 0..300 {
            let n = 4 + i % 9;
            for tree in [crate::gen::random_ps_tree(n, &mut r), crate::gen::random_parse_tree(n, &mut r)] {
                let g = tree.to_graph();
                check_all(&g);
                // the generated tree is not canonical, but must give the same sizes
                let direct = evaluate(&tree);
                let built = evaluate_graph(&g).unwrap();
                for p in PropertyKind::ALL {
                    assert_eq!(direct.size(p), built.size(p), "{p:?} on {g:?}");
                    let res = direct.result(p);
                    assert!(oracle::has_property(&g, &res.witness, p));
                }
            }
        }
    }

    #[test]
    fn dual_vector_round_trip() {
        let mut dp = Dp::new();
        let a = dp.leaf(0);
        let b = dp.leaf(1);
        let u = dp.eval_union(&[a, b]);
        let vec = dp.vector(u);
        assert_eq!(vec.dual().dual(), vec);
        assert_eq!(vec.dual().get(MS), vec.get(MS));
        assert_eq!(vec.dual().get(MI), vec.get(MC));
    }
}
