use polykern::decomp::{is_module, modular_decomposition, nd_partition, split_decomposition, MdKind, SplitTree};
use polykern::graph::generate::FAMILY_NAMES;
use polykern::graph::{gen_family, FamilySpec, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family_graph(family: usize, n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = FamilySpec::random(FAMILY_NAMES[family % FAMILY_NAMES.len()], n, &mut rng).unwrap();
    gen_family(&spec, seed).unwrap().graph
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn modular_nodes_are_modules(family in 0usize..13, n in 1usize..40, seed in any::<u64>()) {
        let g = family_graph(family, n, seed);
        let md = modular_decomposition(&g);
        prop_assert!(md.validate(&g).is_ok());
        for id in md.postorder() {
            prop_assert!(is_module(&g, md.vertices(id)));
            if md.kind(id) == MdKind::Prime {
                let q = md.quotient(id).unwrap();
                prop_assert_eq!(q.n(), md.children(id).len());
                prop_assert!(q.n() >= 4);
            }
        }
        prop_assert!(md.modular_width() <= g.n().max(2));
    }

    #[test]
    fn split_trees_recompose_and_are_reduced(family in 0usize..13, n in 1usize..30, seed in any::<u64>()) {
        let g = family_graph(family, n, seed);
        let st = split_decomposition(&g);
        prop_assert!(st.validate(&g, 16).is_ok());
        prop_assert!(st.is_reduced());
        prop_assert_eq!(st.recompose(), g.clone());
        prop_assert_eq!(&st.bfs_ordered(), &st);
        prop_assert_eq!(SplitTree::from_json(&st.to_json()).unwrap(), st);
    }

    #[test]
    fn generator_split_trees_match_their_graphs(n in 1usize..60, seed in any::<u64>(), composed in any::<bool>()) {
        let spec = if composed {
            FamilySpec::SplitComposition { n, max_prime: 8 }
        } else {
            FamilySpec::DistanceHereditary { n }
        };
        let inst = gen_family(&spec, seed).unwrap();
        let st = inst.annotations.split_tree.unwrap();
        prop_assert!(st.validate(&inst.graph, 12).is_ok());
        let bound = if composed { 8 } else { 2 };
        prop_assert!(st.split_width() <= bound);
    }

    #[test]
    fn twin_classes_partition_the_graph(family in 0usize..13, n in 1usize..40, seed in any::<u64>()) {
        let g = family_graph(family, n, seed);
        let p = nd_partition(&g);
        prop_assert!(p.validate(&g).is_ok());
        prop_assert_eq!(p.quotient.n(), p.nd());
        prop_assert!(p.nd() <= g.n());
        prop_assert_eq!(p.class_of.len(), g.n());
    }
}

#[test]
fn split_width_of_known_graphs() {
    assert_eq!(split_decomposition(&Graph::cycle(7)).split_width(), 7);
    assert_eq!(split_decomposition(&Graph::path(9)).split_width(), 2);
    assert_eq!(split_decomposition(&Graph::complete(5)).split_width(), 2);
}

#[test]
fn modular_width_of_known_graphs() {
    assert_eq!(modular_decomposition(&Graph::path(4)).modular_width(), 4);
    assert_eq!(modular_decomposition(&Graph::complete_bipartite(3, 4)).modular_width(), 2);
    assert_eq!(modular_decomposition(&Graph::cycle(6)).modular_width(), 6);
}
