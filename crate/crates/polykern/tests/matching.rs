use polykern::decomp::modular_decomposition;
use polykern::graph::generate::FAMILY_NAMES;
use polykern::graph::{gen_family, oracle_maximum_matching, FamilySpec, Graph};
use polykern::matching::{
    max_matching_modular, max_matching_modular_with, max_matching_qq3, max_matching_qq3_with, Matching,
    ModularOptions, Qq3Options, StructurePolicy,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn family_graph(family: &str, n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = FamilySpec::random(family, n, &mut rng).unwrap();
    gen_family(&spec, seed).unwrap().graph
}

/// No edge joins two exposed vertices.
fn is_maximal(g: &Graph, f: &Matching) -> bool {
    g.edges().all(|(u, v)| f.is_matched(u) || f.is_matched(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn modular_matching_is_maximum(family in 0usize..13, n in 0usize..80, seed in any::<u64>()) {
        let g = family_graph(FAMILY_NAMES[family], n, seed);
        let md = modular_decomposition(&g);
        let want = oracle_maximum_matching(&g).cardinality();
        let f = max_matching_modular(&g, &md);
        prop_assert!(f.validate(&g).is_ok());
        prop_assert_eq!(f.cardinality(), want);
        prop_assert!(is_maximal(&g, &f));
        let (audited, _) = max_matching_modular_with(&g, &md, ModularOptions { audit: true }).unwrap();
        prop_assert_eq!(audited.cardinality(), want);
    }

    #[test]
    fn qq3_matching_is_maximum(family in 0usize..13, n in 0usize..120, seed in any::<u64>()) {
        let g = family_graph(FAMILY_NAMES[family], n, seed);
        let md = modular_decomposition(&g);
        let want = oracle_maximum_matching(&g).cardinality();
        let f = max_matching_qq3(&g, &md);
        prop_assert!(f.validate(&g).is_ok());
        prop_assert_eq!(f.cardinality(), want);
        prop_assert!(2 * f.cardinality() <= g.n());
    }

    #[test]
    fn strict_policy_holds_on_structured_families(family in 0usize..9, n in 4usize..150, seed in any::<u64>()) {
        // The first nine families are cographs, spiders, discs and chains.
        let g = family_graph(FAMILY_NAMES[family], n, seed);
        let opts = Qq3Options { policy: StructurePolicy::Strict, audit: false };
        let (f, stats) = max_matching_qq3_with(&g, &modular_decomposition(&g), opts).unwrap();
        prop_assert_eq!(stats.fallbacks, 0);
        prop_assert_eq!(f.cardinality(), oracle_maximum_matching(&g).cardinality());
    }
}

#[test]
fn wrong_decomposition_is_rejected() {
    let g = Graph::cycle(6);
    let md = modular_decomposition(&Graph::cycle(5));
    assert!(max_matching_modular_with(&g, &md, ModularOptions::default()).is_err());
    assert!(max_matching_qq3_with(&g, &md, Qq3Options::default()).is_err());
}

#[test]
fn perfect_matchings_of_small_graphs() {
    for g in [Graph::complete(6), Graph::cycle(8), Graph::complete_bipartite(4, 4), Graph::path(10)] {
        let f = max_matching_qq3(&g, &modular_decomposition(&g));
        assert_eq!(2 * f.cardinality(), g.n());
    }
    let star = Graph::star(7);
    assert_eq!(max_matching_modular(&star, &modular_decomposition(&star)).cardinality(), 1);
}
