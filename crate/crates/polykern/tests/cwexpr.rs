use polykern::cwexpr::{
    dp_girth, dp_trace, dp_triangle_count, eval_kexpr, kexpr_from_modular, parse_kexpr, random_irredundant,
    verify_irredundant,
};
use polykern::decomp::modular_decomposition;
use polykern::graph::oracle::oracle_cycle_stats;
use polykern::graph::Graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random spanning tree plus a few chords: long cycles are common.
fn sparse_graph(rng: &mut ChaCha8Rng, n: usize, chords: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for _ in 0..chords {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a != b {
            edges.push((a, b));
        }
    }
    polykern::graph::build_graph(n, &edges).unwrap().graph
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_round_trip(seed in any::<u64>(), n in 1usize..60, k in 2usize..7) {
        let e = random_irredundant(&mut ChaCha8Rng::seed_from_u64(seed), n, k);
        prop_assert_eq!(parse_kexpr(&e.to_text()).unwrap(), e);
    }

    #[test]
    fn dp_matches_oracle(seed in any::<u64>(), n in 1usize..60, k in 2usize..6) {
        let e = random_irredundant(&mut ChaCha8Rng::seed_from_u64(seed), n, k);
        let stats = oracle_cycle_stats(&eval_kexpr(&e).graph);
        prop_assert_eq!(dp_triangle_count(&e).unwrap(), stats.triangles.into());
        prop_assert_eq!(dp_girth(&e).unwrap(), stats.girth);
    }

    #[test]
    fn edge_tables_match_partial_graphs(seed in any::<u64>(), n in 1usize..14, k in 2usize..5) {
        let e = random_irredundant(&mut ChaCha8Rng::seed_from_u64(seed), n, k);
        // Evaluate the subexpression at every node and count label-pair edges.
        let nodes = e.nodes().to_vec();
        let mut failures = Vec::new();
        dp_trace(&e, |id, t| {
            let sub = subexpression(&nodes, id);
            let lg = eval_kexpr(&sub);
            for p in 1..=t.k() {
                for q in 1..=t.k() {
                    let count = lg
                        .graph
                        .edges()
                        .filter(|&(u, v)| {
                            let (a, b) = (lg.labeling[u] as usize, lg.labeling[v] as usize);
                            (a, b) == (p, q) || (b, a) == (p, q)
                        })
                        .count();
                    if *t.m(p, q) != count.into() {
                        failures.push((id, p, q));
                    }
                }
            }
        })
        .unwrap();
        prop_assert!(failures.is_empty(), "{:?}", failures);
    }

    #[test]
    fn modular_expressions_are_faithful(seed in any::<u64>(), n in 1usize..40, chords in 0usize..8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sparse_graph(&mut rng, n, chords);
        let md = modular_decomposition(&g);
        let me = kexpr_from_modular(&g, &md).unwrap();
        prop_assert!(verify_irredundant(&me.expr).irredundant);
        prop_assert!(me.expr.width() as usize <= md.modular_width());
        prop_assert_eq!(eval_kexpr(&me.expr).graph.relabel(&me.vertex_of), g.clone());
        let stats = oracle_cycle_stats(&g);
        prop_assert_eq!(dp_girth(&me.expr).unwrap(), stats.girth);
        prop_assert_eq!(dp_triangle_count(&me.expr).unwrap(), stats.triangles.into());
    }
}

fn subexpression(nodes: &[polykern::cwexpr::KNode], root: usize) -> polykern::cwexpr::KExpression {
    use polykern::cwexpr::KNode;
    let mut b = polykern::cwexpr::ExprBuilder::new();
    for n in &nodes[..=root] {
        match *n {
            KNode::Intro(l) => b.intro(l),
            KNode::Union(x, y) => b.union(x, y),
            KNode::Join(i, j, x) => b.join(i, j, x),
            KNode::Rename(i, j, x) => b.rename(i, j, x),
        };
    }
    b.finish(root).unwrap()
}

#[test]
fn long_cycles_through_modular_expressions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut longest = 0;
    for _ in 0..600 {
        let n = rng.gen_range(3..30);
        let chords = rng.gen_range(0..4);
        let g = sparse_graph(&mut rng, n, chords);
        let me = kexpr_from_modular(&g, &modular_decomposition(&g)).unwrap();
        let girth = dp_girth(&me.expr).unwrap();
        assert_eq!(girth, oracle_cycle_stats(&g).girth);
        longest = longest.max(girth.finite().unwrap_or(0));
    }
    assert!(longest >= 8);
    let c = Graph::cycle(40);
    let me = kexpr_from_modular(&c, &modular_decomposition(&c)).unwrap();
    assert_eq!(dp_girth(&me.expr).unwrap().finite(), Some(40));
}
