use proptest::prelude::*;

use polarity::gen::{random_graph, rng};
use polarity::obstructions::{mine, GraphClass};
use polarity::oracle::{brute_force_max_subgraph, check_property, is_sk_polar, SKBound};
use polarity::{PropertyKind, VertexSet};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn brute_force_is_self_dual(n in 0usize..10, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_graph(n, p, &mut rng(seed));
        let co = g.complement();
        for k in PropertyKind::ALL {
            prop_assert_eq!(
                brute_force_max_subgraph(&g, k).unwrap().size,
                brute_force_max_subgraph(&co, k.dual()).unwrap().size
            );
        }
    }

    #[test]
    fn polarity_swaps_under_complement(n in 0usize..11, p in 0.0f64..1.0, s in 1usize..4, k in 1usize..4, seed in any::<u64>()) {
        let g = random_graph(n, p, &mut rng(seed));
        let b = SKBound::new(s, k);
        let here = is_sk_polar(&g, b).unwrap();
        let there = is_sk_polar(&g.complement(), b.swapped()).unwrap();
        prop_assert_eq!(here.is_some(), there.is_some());
        if let (Some((a1, b1)), Some(_)) = (here, there) {
            prop_assert_eq!(a1.union(&b1), VertexSet::full(n));
        }
    }

    #[test]
    fn properties_are_hereditary(n in 1usize..10, p in 0.0f64..1.0, seed in any::<u64>(), drop in any::<u16>()) {
        let g = random_graph(n, p, &mut rng(seed));
        let w: VertexSet = (0..n).filter(|v| drop >> v & 1 == 0).collect();
        let h = g.induced(&w).unwrap();
        for k in PropertyKind::ALL {
            if check_property(&g, k).unwrap().is_some() {
                prop_assert!(check_property(&h, k).unwrap().is_some(), "{:?}", k);
            }
        }
    }
}

/// Structure of minimal k-polar obstructions: at most k + 2 components, one
/// of them nontrivial, at most k + 1 trivial.
#[test]
fn mined_obstructions_have_few_components() {
    for class in GraphClass::ALL {
        for n in 7..=8 {
            for f in mine(n, class, SKBound::TWO_POLAR).unwrap() {
                let g = f.to_graph();
                let comps = g.components();
                let trivial = comps.iter().filter(|c| c.len() == 1).count();
                let co = g.complement().components().len();
                // either g or its complement is the disconnected one
                let (c, t) = if comps.len() > 1 { (comps.len(), trivial) } else { (co, 0) };
                assert!(c <= 4, "{}", g.to_graph6());
                assert!(t <= 3);
                assert!(comps.iter().any(|c| c.len() > 1) || co > 1);
            }
        }
    }
}
