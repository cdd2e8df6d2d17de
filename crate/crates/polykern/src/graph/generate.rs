//! Generators for the structured graph families, with ground-truth
//! annotations describing how each instance was built.

use super::Graph;
use crate::decomp::{spiked_pk, spiked_qk, ChainLabeling, SpiderPartition, SplitTree};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A family of graphs with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FamilySpec {
    /// Random cograph on `n` vertices.
    Cograph {
        /// Order.
        n: usize,
    },
    /// Thin spider with `legs = |S| = |K|` and an optional head `G[R]`.
    ThinSpider {
        /// `|S| = |K| >= 2`.
        legs: usize,
        /// Head graph.
        head: Option<Box<FamilySpec>>,
    },
    /// Thick spider with `legs = |S| = |K|` and an optional head `G[R]`.
    ThickSpider {
        /// `|S| = |K| >= 2`.
        legs: usize,
        /// Head graph.
        head: Option<Box<FamilySpec>>,
    },
    /// Cycle `C_n`, `n >= 5`.
    Cycle {
        /// Order.
        n: usize,
    },
    /// Complement of `C_n`, `n >= 5`.
    CoCycle {
        /// Order.
        n: usize,
    },
    /// Spiked p-chain `P_k`.
    SpikedPk {
        /// `k >= 6`.
        k: usize,
        /// Include `x`.
        x: bool,
        /// Include `y`.
        y: bool,
    },
    /// Complement of a spiked p-chain `P_k`.
    SpikedPkBar {
        /// `k >= 6`.
        k: usize,
        /// Include `x`.
        x: bool,
        /// Include `y`.
        y: bool,
    },
    /// Spiked p-chain `Q_k` with the listed `z_i`.
    SpikedQk {
        /// `k >= 6`.
        k: usize,
        /// Increasing indices within `2..=k-5`.
        z: Vec<usize>,
    },
    /// Complement of a spiked p-chain `Q_k`.
    SpikedQkBar {
        /// `k >= 6`.
        k: usize,
        /// Increasing indices within `2..=k-5`.
        z: Vec<usize>,
    },
    /// `G(n, p)`.
    ErdosRenyi {
        /// Order.
        n: usize,
        /// Edge probability.
        p: f64,
    },
    /// Every quotient vertex replaced by the matching part.
    Substitution {
        /// Quotient family.
        quotient: Box<FamilySpec>,
        /// One part per quotient vertex.
        parts: Vec<FamilySpec>,
    },
    /// `K_n`.
    Complete {
        /// Order.
        n: usize,
    },
    /// `n` isolated vertices.
    Edgeless {
        /// Order.
        n: usize,
    },
    /// Random distance-hereditary graph grown by pendant and twin
    /// operations, annotated with a split tree.
    DistanceHereditary {
        /// Order.
        n: usize,
    },
    /// Like `DistanceHereditary`, with some operations inserting a cycle of
    /// order `5..=max_prime` as a prime split component.
    SplitComposition {
        /// Order.
        n: usize,
        /// Largest prime component, `5..=12`.
        max_prime: usize,
    },
}

/// Family names accepted by [`FamilySpec::random`].
pub const FAMILY_NAMES: &[&str] = &[
    "cograph",
    "thin-spider",
    "thick-spider",
    "cycle",
    "co-cycle",
    "spiked-pk",
    "spiked-pk-bar",
    "spiked-qk",
    "spiked-qk-bar",
    "erdos-renyi",
    "substitution",
    "distance-hereditary",
    "split-composition",
];

/// Invalid generator parameters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid family spec: {0}")]
pub struct GenError(pub String);

/// Construction details exposed for downstream checks.
#[derive(Debug, Clone, Default)]
pub struct Annotations {
    /// For substitutions: the vertex block of every quotient vertex.
    pub modules: Option<Vec<Vec<usize>>>,
    /// For substitutions: the quotient instance.
    pub quotient: Option<Box<Instance>>,
    /// For spiders: `(S, K, R)`.
    pub spider: Option<SpiderPartition>,
    /// For spiked p-chains: the labeling (of the complement chain for the
    /// barred families).
    pub chain: Option<ChainLabeling>,
    /// For discs: the cycle order (in the complement for co-cycles).
    pub cycle_order: Option<Vec<usize>>,
    /// For grown families: a split tree of the graph.
    pub split_tree: Option<SplitTree>,
}

/// A generated graph with its annotations.
#[derive(Debug, Clone)]
pub struct Instance {
    /// The graph.
    pub graph: Graph,
    /// How it was built.
    pub annotations: Annotations,
}

impl Instance {
    fn bare(graph: Graph) -> Instance {
        Instance { graph, annotations: Annotations::default() }
    }
}

/// Replaces each quotient vertex `i` by `parts[i]`. Part `i` occupies a
/// contiguous block of ids, in order.
///
/// ```
/// use polykern::graph::{substitute, Graph};
/// let g = substitute(&Graph::path(4), &[Graph::complete(2), Graph::empty(1), Graph::empty(1), Graph::empty(1)]).unwrap();
/// assert_eq!((g.n(), g.m()), (5, 5));
/// ```
pub fn substitute(quotient: &Graph, parts: &[Graph]) -> Result<Graph, GenError> {
    if parts.len() != quotient.n() {
        return Err(GenError(format!("{} parts for a quotient of order {}", parts.len(), quotient.n())));
    }
    let mut offset = Vec::with_capacity(parts.len() + 1);
    offset.push(0);
    for p in parts {
        offset.push(offset.last().unwrap() + p.n());
    }
    let n = *offset.last().unwrap();
    let mut adj: Vec<Vec<usize>> = Vec::with_capacity(n);
    for (i, p) in parts.iter().enumerate() {
        for v in 0..p.n() {
            let mut l: Vec<usize> = p.neighbors(v).iter().map(|&w| offset[i] + w).collect();
            for &j in quotient.neighbors(i) {
                l.extend(offset[j]..offset[j + 1]);
            }
            adj.push(l);
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Generates an instance of `spec`, deterministically from `seed`.
///
/// ```
/// use polykern::graph::{gen_family, FamilySpec};
/// let inst = gen_family(&FamilySpec::Cycle { n: 7 }, 0).unwrap();
/// assert_eq!(inst.graph.m(), 7);
/// assert!(gen_family(&FamilySpec::Cycle { n: 4 }, 0).is_err());
/// ```
pub fn gen_family(spec: &FamilySpec, seed: u64) -> Result<Instance, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    generate(spec, &mut rng)
}

fn check(ok: bool, msg: &str) -> Result<(), GenError> {
    ok.then_some(()).ok_or_else(|| GenError(msg.to_string()))
}

fn check_z(k: usize, z: &[usize]) -> Result<(), GenError> {
    check(k >= 6, "spiked chains need k >= 6")?;
    check(z.windows(2).all(|w| w[0] < w[1]), "z indices must be strictly increasing")?;
    check(z.iter().all(|&i| i >= 2 && i + 5 <= k), "z indices must lie in 2..=k-5")
}

fn generate(spec: &FamilySpec, rng: &mut ChaCha8Rng) -> Result<Instance, GenError> {
    use FamilySpec::*;
    Ok(match spec {
        Cograph { n } => {
            check(*n >= 1, "cograph needs n >= 1")?;
            Instance::bare(random_cograph(*n, rng))
        }
        Complete { n } => Instance::bare(Graph::complete(*n)),
        Edgeless { n } => Instance::bare(Graph::empty(*n)),
        ThinSpider { legs, head } | ThickSpider { legs, head } => {
            check(*legs >= 2, "spiders need |S| = |K| >= 2")?;
            let thick = matches!(spec, ThickSpider { .. });
            let h = match head {
                Some(h) => generate(h, rng)?.graph,
                None => Graph::empty(0),
            };
            spider(*legs, thick, &h)
        }
        Cycle { n } | CoCycle { n } => {
            check(*n >= 5, "discs need n >= 5")?;
            let c = Graph::cycle(*n);
            let g = if matches!(spec, CoCycle { .. }) { c.complement() } else { c };
            let mut inst = Instance::bare(g);
            inst.annotations.cycle_order = Some((0..*n).collect());
            inst
        }
        SpikedPk { k, x, y } | SpikedPkBar { k, x, y } => {
            check(*k >= 6, "spiked chains need k >= 6")?;
            let (g, lab) = spiked_pk(*k, *x, *y);
            let g = if matches!(spec, SpikedPkBar { .. }) { g.complement() } else { g };
            let mut inst = Instance::bare(g);
            inst.annotations.chain = Some(lab);
            inst
        }
        SpikedQk { k, z } | SpikedQkBar { k, z } => {
            check_z(*k, z)?;
            let (g, lab) = spiked_qk(*k, z);
            let g = if matches!(spec, SpikedQkBar { .. }) { g.complement() } else { g };
            let mut inst = Instance::bare(g);
            inst.annotations.chain = Some(lab);
            inst
        }
        ErdosRenyi { n, p } => {
            check((0.0..=1.0).contains(p), "edge probability must lie in [0, 1]")?;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.gen_bool(*p) {
                        edges.push((u, v));
                    }
                }
            }
            Instance::bare(Graph::from_edges(*n, &edges).expect("valid edges"))
        }
        Substitution { quotient, parts } => {
            let q = generate(quotient, rng)?;
            check(parts.len() == q.graph.n(), "substitution needs one part per quotient vertex")?;
            let mut graphs = Vec::with_capacity(parts.len());
            for p in parts {
                let g = generate(p, rng)?.graph;
                check(g.n() >= 1, "substitution parts must be non-empty")?;
                graphs.push(g);
            }
            let g = substitute(&q.graph, &graphs)?;
            let mut modules = Vec::with_capacity(graphs.len());
            let mut at = 0;
            for p in &graphs {
                modules.push((at..at + p.n()).collect());
                at += p.n();
            }
            let mut inst = Instance::bare(g);
            inst.annotations.modules = Some(modules);
            inst.annotations.quotient = Some(Box::new(q));
            inst
        }
        DistanceHereditary { n } => {
            check(*n >= 1, "distance-hereditary graphs need n >= 1")?;
            grow(*n, 0, rng)
        }
        SplitComposition { n, max_prime } => {
            check(*n >= 1, "split compositions need n >= 1")?;
            check((5..=12).contains(max_prime), "max_prime must lie in 5..=12")?;
            grow(*n, *max_prime, rng)
        }
    })
}

fn spider(legs: usize, thick: bool, head: &Graph) -> Instance {
    let r = head.n();
    let n = 2 * legs + r;
    let mut edges = Vec::new();
    for i in 0..legs {
        for j in 0..legs {
            if (i == j) != thick {
                edges.push((i, legs + j));
            }
            if i < j {
                edges.push((legs + i, legs + j));
            }
        }
        for h in 0..r {
            edges.push((legs + i, 2 * legs + h));
        }
    }
    edges.extend(head.edges().map(|(a, b)| (2 * legs + a, 2 * legs + b)));
    let mut inst = Instance::bare(Graph::from_edges(n, &edges).expect("valid spider"));
    inst.annotations.spider = Some(SpiderPartition {
        s: (0..legs).collect(),
        k: (legs..2 * legs).collect(),
        r: (2 * legs..n).collect(),
        thick,
    });
    inst
}

fn random_cograph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    let parts = rng.gen_range(2..=n.min(4));
    let mut cuts: Vec<usize> = (1..n).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(n);
    let subs: Vec<Graph> = cuts.windows(2).map(|w| random_cograph(w[1] - w[0], rng)).collect();
    let q = if rng.gen_bool(0.5) { Graph::complete(parts) } else { Graph::empty(parts) };
    substitute(&q, &subs).expect("arity matches")
}

/// Largest degree at which a vertex may still receive a twin.
const TWIN_DEGREE_CAP: usize = 6;

/// Grows a graph by one-vertex split operations, tracking the split tree.
/// `max_prime >= 5` enables cycle insertions.
fn grow(n: usize, max_prime: usize, rng: &mut ChaCha8Rng) -> Instance {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut comps: Vec<(Vec<usize>, Vec<(usize, usize)>)> = Vec::new();
    let mut home: Vec<(usize, usize)> = vec![(usize::MAX, 0); n];
    let mut links: Vec<(usize, usize)> = Vec::new();
    let start = n.min(3);
    let first: Vec<(usize, usize)> = match start {
        1 => vec![],
        2 => vec![(0, 1)],
        _ if rng.gen_bool(0.5) => vec![(0, 1), (0, 2), (1, 2)],
        _ => {
            let c = rng.gen_range(0..3);
            (0..3).filter(|&v| v != c).map(|v| (c.min(v), c.max(v))).collect()
        }
    };
    for &(a, b) in &first {
        adj[a].push(b);
        adj[b].push(a);
    }
    comps.push(((0..start).collect(), first));
    for (i, h) in home.iter_mut().enumerate().take(start) {
        *h = (0, i);
    }
    let mut next_vertex = start;
    let mut next_marker = n;
    while next_vertex < n {
        let v = rng.gen_range(0..next_vertex);
        let left = n - next_vertex;
        let low = adj[v].len() <= TWIN_DEGREE_CAP;
        let p = if max_prime >= 5 && low && left >= 3 && rng.gen_bool(0.15) {
            rng.gen_range(5..=max_prime.min(left + 2))
        } else {
            0
        };
        let op = if p > 0 {
            3
        } else if low {
            rng.gen_range(0..3)
        } else {
            0
        };
        // Move v into a new component; its old slot becomes a marker.
        let (c, idx) = home[v];
        let (a, a2) = (next_marker, next_marker + 1);
        next_marker += 2;
        comps[c].0[idx] = a;
        links.push((a, a2));
        let nc = comps.len();
        let old_nb = adj[v].clone();
        home[v] = (nc, 1);
        if op < 3 {
            let w = next_vertex;
            next_vertex += 1;
            home[w] = (nc, 2);
            let local = match op {
                0 => vec![(0, 1), (1, 2)],
                1 => vec![(0, 1), (0, 2)],
                _ => vec![(0, 1), (0, 2), (1, 2)],
            };
            comps.push((vec![a2, v, w], local));
            let mut nb = match op {
                0 => vec![v],
                1 => old_nb,
                _ => {
                    let mut l = old_nb;
                    l.push(v);
                    l
                }
            };
            for &u in &nb {
                adj[u].push(w);
            }
            adj[w].append(&mut nb);
        } else {
            // Cycle a2 - v - w_1 - ... - w_{p-2} - a2.
            let ws: Vec<usize> = (next_vertex..next_vertex + p - 2).collect();
            next_vertex += p - 2;
            let mut nodes = vec![a2, v];
            nodes.extend(&ws);
            let local: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
            for (j, &w) in ws.iter().enumerate() {
                home[w] = (nc, j + 2);
            }
            comps.push((nodes, local));
            let mut chain = vec![v];
            chain.extend(&ws);
            for e in chain.windows(2) {
                adj[e[0]].push(e[1]);
                adj[e[1]].push(e[0]);
            }
            let last = *ws.last().unwrap();
            for &u in &old_nb {
                adj[u].push(last);
                adj[last].push(u);
            }
        }
    }
    // Markers were numbered assuming every step adds two; renumber densely.
    let used = next_marker - n;
    debug_assert_eq!(used, 2 * links.len());
    let parts: Vec<(Vec<usize>, Graph)> = comps
        .into_iter()
        .map(|(nodes, local)| {
            let g = Graph::from_edges(nodes.len(), &local).expect("valid component");
            (nodes, g)
        })
        .collect();
    let tree = SplitTree::from_parts(n, parts, &links).expect("grown tree is valid").bfs_ordered();
    let mut inst = Instance::bare(Graph::from_adjacency(adj));
    inst.annotations.split_tree = Some(tree);
    inst
}

impl FamilySpec {
    /// A random spec of the named family with roughly `n` vertices. Chain,
    /// spider and substitution families carry random cograph modules only
    /// where the prime quotient allows nontrivial modules.
    pub fn random<R: Rng>(family: &str, n: usize, rng: &mut R) -> Result<FamilySpec, GenError> {
        use FamilySpec::*;
        let n = n.max(1);
        Ok(match family {
            "cograph" => Cograph { n },
            "cycle" => Cycle { n: n.max(5) },
            "co-cycle" => CoCycle { n: n.max(5) },
            "erdos-renyi" => ErdosRenyi { n, p: rng.gen_range(0.1..0.5) },
            "distance-hereditary" => DistanceHereditary { n },
            "split-composition" => SplitComposition { n, max_prime: 7 },
            "thin-spider" | "thick-spider" => {
                let legs = rng.gen_range(2..=(n / 3).max(2));
                let rest = n.saturating_sub(2 * legs);
                let head = (rest > 0).then(|| Box::new(Cograph { n: rest }));
                if family == "thin-spider" {
                    ThinSpider { legs, head }
                } else {
                    ThickSpider { legs, head }
                }
            }
            "spiked-pk" | "spiked-pk-bar" => {
                let k = rng.gen_range(6..=(n / 2).max(6));
                let (x, y) = (rng.gen_bool(0.6), rng.gen_bool(0.6));
                let q = if family == "spiked-pk" { SpikedPk { k, x, y } } else { SpikedPkBar { k, x, y } };
                let mut slots = vec![0, k - 1];
                if x {
                    slots.push(k);
                }
                if y {
                    slots.push(k + x as usize);
                }
                with_modules(q, k + x as usize + y as usize, &slots, n, rng)
            }
            "spiked-qk" | "spiked-qk-bar" => {
                let k = rng.gen_range(6..=(n / 2).max(6));
                let z: Vec<usize> = (2..=k - 5).filter(|_| rng.gen_bool(0.6)).collect();
                let mut slots = vec![0, k - 1];
                slots.extend(k..k + z.len());
                let order = k + z.len();
                let q = if family == "spiked-qk" { SpikedQk { k, z } } else { SpikedQkBar { k, z } };
                with_modules(q, order, &slots, n, rng)
            }
            "substitution" => {
                let q = rng.gen_range(4..=8usize);
                let quotient = match rng.gen_range(0..3) {
                    0 => Cycle { n: q.max(5) },
                    1 => ErdosRenyi { n: q, p: 0.5 },
                    _ => ThinSpider { legs: 2, head: Some(Box::new(Cograph { n: q.saturating_sub(4).max(1) })) },
                };
                let order = match &quotient {
                    Cycle { n } | ErdosRenyi { n, .. } => *n,
                    ThinSpider { head: Some(h), .. } => match **h {
                        Cograph { n } => 4 + n,
                        _ => unreachable!(),
                    },
                    _ => unreachable!(),
                };
                let budget = (n / order).max(1);
                let parts = (0..order)
                    .map(|_| {
                        let size = rng.gen_range(1..=budget.max(1) * 2 - 1);
                        match rng.gen_range(0..4) {
                            0 => Cograph { n: size },
                            1 => ErdosRenyi { n: size, p: rng.gen_range(0.2..0.8) },
                            2 => Complete { n: size },
                            _ => Edgeless { n: size },
                        }
                    })
                    .collect();
                Substitution { quotient: Box::new(quotient), parts }
            }
            other => return Err(GenError(format!("unknown family {other:?}"))),
        })
    }

    /// Order of the generated graph, when it does not depend on the seed.
    pub fn order(&self) -> Option<usize> {
        use FamilySpec::*;
        match self {
            Cograph { n }
            | Cycle { n }
            | CoCycle { n }
            | ErdosRenyi { n, .. }
            | Complete { n }
            | Edgeless { n }
            | DistanceHereditary { n }
            | SplitComposition { n, .. } => Some(*n),
            ThinSpider { legs, head } | ThickSpider { legs, head } => {
                Some(2 * legs + head.as_ref().map_or(Some(0), |h| h.order())?)
            }
            SpikedPk { k, x, y } | SpikedPkBar { k, x, y } => Some(k + *x as usize + *y as usize),
            SpikedQk { k, z } | SpikedQkBar { k, z } => Some(k + z.len()),
            Substitution { parts, .. } => parts.iter().map(|p| p.order()).sum(),
        }
    }
}

/// Substitutes random cographs at `slots` of a quotient of the given order,
/// spreading about `n - order` extra vertices.
fn with_modules<R: Rng>(q: FamilySpec, order: usize, slots: &[usize], n: usize, rng: &mut R) -> FamilySpec {
    let mut sizes = vec![1usize; order];
    let mut extra = n.saturating_sub(order);
    while extra > 0 {
        let s = *slots.choose(rng).unwrap();
        sizes[s] += 1;
        extra -= 1;
    }
    let parts = sizes
        .into_iter()
        .map(|s| if s == 1 { FamilySpec::Complete { n: 1 } } else { FamilySpec::Cograph { n: s } })
        .collect();
    FamilySpec::Substitution { quotient: Box::new(q), parts }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{classify_prime_graph, modular_decomposition, QuotientClass};

    #[test]
    fn thin_spider_with_k2_head() {
        let spec = FamilySpec::ThinSpider { legs: 4, head: Some(Box::new(FamilySpec::Complete { n: 2 })) };
        let inst = gen_family(&spec, 1).unwrap();
        assert_eq!(inst.graph.n(), 10);
        let p = inst.annotations.spider.unwrap();
        p.verify(&inst.graph).unwrap();
        for (i, &s) in p.s.iter().enumerate() {
            let nk: Vec<usize> = inst.graph.neighbors(s).to_vec();
            assert_eq!(nk, vec![p.k[i]]);
        }
    }

    #[test]
    fn invalid_specs_name_the_constraint() {
        let e = gen_family(&FamilySpec::ThinSpider { legs: 1, head: None }, 0).unwrap_err();
        assert!(e.0.contains("|S| = |K| >= 2"));
        assert!(gen_family(&FamilySpec::SpikedPk { k: 5, x: false, y: false }, 0).is_err());
        assert!(gen_family(&FamilySpec::SpikedQk { k: 8, z: vec![4] }, 0).is_err());
        let bad = FamilySpec::Substitution { quotient: Box::new(FamilySpec::Cycle { n: 5 }), parts: vec![] };
        assert!(gen_family(&bad, 0).is_err());
    }

    #[test]
    fn substitute_c5_recovers_quotient() {
        let parts = vec![Graph::complete(2); 5];
        let g = substitute(&Graph::cycle(5), &parts).unwrap();
        assert_eq!(g.n(), 10);
        let md = modular_decomposition(&g);
        let q = md.quotient(md.root()).unwrap();
        assert_eq!((q.n(), q.m()), (5, 5));
        assert!(matches!(classify_prime_graph(q).unwrap(), QuotientClass::DiscCycle { .. }));
    }

    #[test]
    fn grown_trees_recompose() {
        for seed in 0..20 {
            for (spec, prime) in [
                (FamilySpec::DistanceHereditary { n: 40 }, false),
                (FamilySpec::SplitComposition { n: 40, max_prime: 7 }, true),
            ] {
                let inst = gen_family(&spec, seed).unwrap();
                let st = inst.annotations.split_tree.as_ref().unwrap();
                assert_eq!(st.recompose(), inst.graph);
                if !prime {
                    assert_eq!(st.split_width(), 2);
                }
                assert!(inst.graph.is_connected());
            }
        }
    }

    #[test]
    fn random_specs_generate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for name in FAMILY_NAMES {
            for _ in 0..5 {
                let spec = FamilySpec::random(name, 30, &mut rng).unwrap();
                let inst = gen_family(&spec, 9).unwrap();
                if let Some(n) = spec.order() {
                    assert_eq!(inst.graph.n(), n, "{name}");
                }
            }
        }
    }

    #[test]
    fn determinism() {
        let spec = FamilySpec::SplitComposition { n: 50, max_prime: 6 };
        assert_eq!(gen_family(&spec, 4).unwrap().graph, gen_family(&spec, 4).unwrap().graph);
    }
}
