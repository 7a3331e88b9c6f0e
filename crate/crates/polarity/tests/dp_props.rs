use proptest::prelude::*;

use polarity::dp::{evaluate, evaluate_graph, max_subgraph};
use polarity::gen::{random_parse_tree, random_ps_tree, rng};
use polarity::oracle::{certifies, has_property};
use polarity::PropertyKind;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// The answer for `p` on a graph is the answer for `dual(p)` on its
    /// complement, with the certificate sides exchanged.
    #[test]
    fn duality(n in 1usize..30, seed in any::<u64>(), parse in any::<bool>()) {
        let mut r = rng(seed);
        let g = if parse { random_parse_tree(n, &mut r) } else { random_ps_tree(n, &mut r) }.to_graph();
        let co = g.complement();
        let a = evaluate_graph(&g).unwrap();
        let b = evaluate_graph(&co).unwrap();
        for p in PropertyKind::ALL {
            prop_assert_eq!(a.size(p), b.size(p.dual()), "{:?}", p);
        }
        let va = a.dp.vector(a.root());
        prop_assert_eq!(va.dual().dual(), va);
    }

    #[test]
    fn witnesses_are_valid(n in 1usize..40, seed in any::<u64>(), parse in any::<bool>()) {
        let mut r = rng(seed);
        let tree = if parse { random_parse_tree(n, &mut r) } else { random_ps_tree(n, &mut r) };
        let g = tree.to_graph();
        let direct = evaluate(&tree);
        for p in PropertyKind::ALL {
            let res = max_subgraph(&g, p).unwrap();
            prop_assert_eq!(res.size, direct.size(p));
            prop_assert_eq!(res.size, res.witness.len());
            prop_assert!(has_property(&g, &res.witness, p));
            if let Some(c) = &res.partition {
                prop_assert!(certifies(&g, p, &res.witness, c));
            }
        }
    }

    #[test]
    fn sizes_are_monotone_along_the_hierarchy(n in 1usize..30, seed in any::<u64>()) {
        use PropertyKind::*;
        let mut r = rng(seed);
        let g = random_ps_tree(n, &mut r).to_graph();
        let ev = evaluate_graph(&g).unwrap();
        let s = |p| ev.size(p);
        // each class on the left is contained in the one on the right
        for (small, big) in [(MC, McB), (MI, MB), (MB, MM), (MS, MM), (MS, McM), (McB, McM), (MM, MP), (McM, MP),
                             (MU, MP), (McU, MP), (MUC, MU), (MJI, McU), (MC, MUC), (MI, MJI)] {
            prop_assert!(s(small) <= s(big), "{:?} > {:?}", small, big);
        }
    }
}

#[test]
fn json_free_result_shape() {
    let g = polarity::Graph::cycle(5);
    let r = max_subgraph(&g, PropertyKind::MU).unwrap();
    assert_eq!(r.size, 4);
    let c = r.partition.unwrap();
    assert_eq!(c.a.union(&c.b), r.witness);
}
