//! Random graphs and random decomposition trees.
//!
//! Trees are grown bottom-up from a pool of finished fragments, so a tree on
//! `n` vertices costs O(n) time and memory and never touches an adjacency
//! matrix. Vertex labels are drawn from a shuffled pool so that the tree
//! structure says nothing about the numbering.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canon::{canonical_form, CanonicalForm, CANON_MAX_N};
use crate::decomposition::{DecompTree, ExtensionKind, NodeKind, SpiderPartition, TreeKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// The RNG used across tests, examples and the CLI.
pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// A uniformly random relabelling of `g`.
pub fn shuffle_labels<R: Rng>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.permute(&perm)
}

struct Grower<'r, R: Rng> {
    rng: &'r mut R,
    tree: DecompTree,
    labels: Vec<usize>,
    pool: Vec<usize>,
}

impl<R: Rng> Grower<'_, R> {
    fn take_labels(&mut self, k: usize) -> Vec<usize> {
        let at = self.labels.len() - k;
        self.labels.split_off(at)
    }

    fn take_fragments(&mut self, k: usize) -> Vec<usize> {
        (0..k)
            .map(|_| {
                let i = self.rng.gen_range(0..self.pool.len());
                self.pool.swap_remove(i)
            })
            .collect()
    }

    fn maybe_head(&mut self) -> Option<usize> {
        (!self.pool.is_empty() && self.rng.gen_bool(0.7)).then(|| self.take_fragments(1)[0])
    }

    fn combine(&mut self) {
        let k = self.rng.gen_range(2..=self.pool.len().min(4));
        let kids = self.take_fragments(k);
        let node = if self.rng.gen_bool(0.5) { NodeKind::Union(kids) } else { NodeKind::Join(kids) };
        let id = self.tree.add(node);
        self.pool.push(id);
    }

    fn leaf(&mut self) {
        let v = self.take_labels(1)[0];
        let id = self.tree.add(NodeKind::Leaf(v));
        self.pool.push(id);
    }

    fn spider(&mut self, max_legs: usize) {
        let t = self.rng.gen_range(2..=max_legs);
        let mut legs = self.take_labels(t);
        legs.sort_unstable();
        let body = self.take_labels(t);
        let thin = self.rng.gen_bool(0.5);
        let head = self.maybe_head();
        let id = self.tree.add(NodeKind::Spider { legs, body, thin, head });
        self.pool.push(id);
    }

    fn extension(&mut self, separable_only: bool) {
        let kinds: Vec<ExtensionKind> = ExtensionKind::ALL
            .into_iter()
            .filter(|k| k.order() <= self.labels.len() && (!separable_only || k.is_separable()))
            .collect();
        let kind = *kinds.choose(self.rng).unwrap();
        let map = self.take_labels(kind.order());
        let node = if separable_only {
            let head = self.take_fragments(1)[0];
            NodeKind::XSpider { kind, map, head }
        } else {
            NodeKind::Extension { kind, map }
        };
        let id = self.tree.add(node);
        self.pool.push(id);
    }

    fn grow(mut self, kind: TreeKind) -> DecompTree {
        while !self.labels.is_empty() || self.pool.len() > 1 {
            let left = self.labels.len();
            let roll: f64 = self.rng.gen();
            if left == 0 || (self.pool.len() >= 2 && roll < 0.35) {
                self.combine();
            } else if left >= 4 && roll < 0.6 {
                match kind {
                    TreeKind::Ps => self.spider((left / 2).min(6)),
                    TreeKind::Parse => {
                        let x_spider = !self.pool.is_empty() && self.rng.gen_bool(0.6);
                        self.extension(x_spider);
                    }
                }
            } else {
                self.leaf();
            }
        }
        self.tree
    }
}

fn grow<R: Rng>(n: usize, kind: TreeKind, rng: &mut R) -> DecompTree {
    assert!(n > 0, "random trees need at least one vertex");
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    Grower { rng, tree: DecompTree::builder(n, kind), labels, pool: Vec::new() }.grow(kind)
}

/// A random ps-tree on exactly `n` vertices: unions, joins and thin or thick
/// spiders with optional heads. Its graph is P4-sparse.
pub fn random_ps_tree<R: Rng>(n: usize, rng: &mut R) -> DecompTree {
    grow(n, TreeKind::Ps, rng)
}

/// A random parse tree on exactly `n` vertices: unions, joins, extension
/// graphs and X-spiders. Its graph is P4-extendible.
pub fn random_parse_tree<R: Rng>(n: usize, rng: &mut R) -> DecompTree {
    grow(n, TreeKind::Parse, rng)
}

pub fn random_p4_sparse<R: Rng>(n: usize, rng: &mut R) -> Graph {
    random_ps_tree(n, rng).to_graph()
}

pub fn random_p4_extendible<R: Rng>(n: usize, rng: &mut R) -> Graph {
    random_parse_tree(n, rng).to_graph()
}

/// A random spider with `t` legs and a `G(h, p)` head, relabelled at random.
pub fn random_spider<R: Rng>(t: usize, h: usize, thin: bool, p: f64, rng: &mut R) -> (Graph, SpiderPartition) {
    assert!(t >= 2, "a spider has at least two legs");
    let n = 2 * t + h;
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let head_graph = random_graph(h, p, rng);
    let mut g = Graph::new(n);
    let leg = |i: usize| perm[i];
    let body = |i: usize| perm[t + i];
    let head = |i: usize| perm[2 * t + i];
    for i in 0..t {
        for j in 0..t {
            if i < j {
                g.add_edge(body(i), body(j));
            }
            if (i == j) == thin {
                g.add_edge(leg(i), body(j));
            }
        }
        for r in 0..h {
            g.add_edge(body(i), head(r));
        }
    }
    for (u, v) in head_graph.edges() {
        g.add_edge(head(u), head(v));
    }
    let mut pairs: Vec<(usize, usize)> = (0..t).map(|i| (leg(i), body(i))).collect();
    pairs.sort_unstable();
    let sp = SpiderPartition {
        legs: pairs.iter().map(|p| p.0).collect(),
        body: pairs.iter().map(|p| p.1).collect(),
        head: (0..h).map(head).collect::<VertexSet>(),
        thin,
    };
    (g, sp)
}

/// One representative per isomorphism class of graphs on `n` vertices, in
/// canonical order. Each order is built from one-vertex extensions of the
/// previous one.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    if n > 9 || n > CANON_MAX_N {
        return Err(Error::TooLarge { what: "graphs_up_to_iso", cap: 9, n });
    }
    let mut level: std::collections::BTreeSet<CanonicalForm> = std::collections::BTreeSet::new();
    level.insert(canonical_form(&Graph::new(n.min(1)))?);
    for m in 1..n {
        let mut next = std::collections::BTreeSet::new();
        for f in &level {
            let g = f.to_graph();
            for nbrs in 0u64..1 << m {
                let mut h = Graph::new(m + 1);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in (0..m).filter(|u| nbrs >> u & 1 == 1) {
                    h.add_edge(u, m);
                }
                next.insert(canonical_form(&h)?);
            }
        }
        level = next;
    }
    Ok(level.iter().map(CanonicalForm::to_graph).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::classify;

    #[test]
    fn trees_have_exact_order_and_class() {
        let mut r = rng(7);
        for n in 1..=14 {
            for _ in 0..20 {
                let t = random_ps_tree(n, &mut r);
                assert_eq!(t.nodes[t.root].size, n);
                let g = t.to_graph();
                assert!(classify(&g).is_p4_sparse, "{g:?}");
                let t = random_parse_tree(n, &mut r);
                assert_eq!(t.nodes[t.root].size, n);
                let g = t.to_graph();
                assert!(classify(&g).is_p4_extendible, "{g:?}");
            }
        }
    }

    #[test]
    fn spiders_are_valid() {
        let mut r = rng(3);
        for t in 2..5 {
            for h in 0..4 {
                for thin in [true, false] {
                    let (g, sp) = random_spider(t, h, thin, 0.5, &mut r);
                    assert!(sp.is_valid(&g));
                }
            }
        }
    }

    #[test]
    fn enumerates_every_graph_once() {
        let counts: Vec<usize> = (0..=7).map(|n| graphs_up_to_iso(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
        assert!(graphs_up_to_iso(10).is_err());
    }

    #[test]
    fn large_tree_is_linear() {
        let t = random_ps_tree(100_000, &mut rng(1));
        assert_eq!(t.nodes[t.root].size, 100_000);
        assert!(t.len() <= 2 * 100_000);
    }
}
