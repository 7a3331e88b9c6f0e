use proptest::prelude::*;

use polarity::canon::canonical_form;
use polarity::graph::{disjoint_union, join};
use polarity::{Graph, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn is_partition(n: usize, parts: &[VertexSet]) -> bool {
    let mut seen = VertexSet::new();
    for p in parts {
        if p.is_empty() || !seen.is_disjoint(p) {
            return false;
        }
        seen.union_with(p);
    }
    seen == VertexSet::full(n)
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(64)) {
        prop_assert_eq!(Graph::parse_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn components_partition_and_never_both_disconnected(g in arb_graph(40)) {
        let n = g.n();
        prop_assert!(is_partition(n, &g.components()));
        prop_assert!(is_partition(n, &g.co_components()));
        if n >= 2 {
            prop_assert!(g.is_connected() || g.complement().is_connected());
        }
        prop_assert_eq!(g.co_components(), g.complement().components());
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let mut r = polarity::gen::rng(seed);
        let h = polarity::gen::shuffle_labels(&g, &mut r);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn union_and_join_are_complementary(a in arb_graph(8), b in arb_graph(8)) {
        let u = disjoint_union(&[a.clone(), b.clone()]);
        let j = join(&[a.complement(), b.complement()]);
        prop_assert_eq!(u.complement(), j);
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in arb_graph(20), mask in any::<u32>()) {
        let w: VertexSet = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        let h = g.induced(&w).unwrap();
        let vs = w.to_vec();
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if i != j {
                    prop_assert_eq!(h.has_edge(i, j), g.has_edge(vs[i], vs[j]));
                }
            }
        }
    }
}

#[test]
fn graph6_known_encodings() {
    assert_eq!(Graph::cycle(5).to_graph6(), "Dhc");
    assert_eq!(Graph::complete(2).to_graph6(), "A_");
    assert!(Graph::parse_graph6("A").is_err());
}
