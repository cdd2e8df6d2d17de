//! Maximum matching for graphs whose large prime quotients are discs,
//! spiders or spiked p-chains.
//!
//! Nodes are solved bottom-up as in [`max_matching_modular`]. A prime node
//! is dispatched on the class of its quotient: discs and spiders have closed
//! forms, spiked p-chains are peeled by the pending-module and join rules,
//! and everything else goes through the witness loop.
//!
//! [`max_matching_modular`]: super::max_matching_modular

use super::joins::{join_sides, split_and_match_sides};
use super::modular::{check_cover, child_blocks, finish_prime, finish_series, ModularStats};
use super::witness::{witness_loop, ModuleLayer, ModuleMatchBook};
use super::{Matching, MatchingError};
use crate::decomp::{
    classify_prime_graph, effective_q, is_module, ChainLabeling, MDTree, MdKind, QuotientClass, SpiderPartition,
};
use crate::graph::Graph;
use std::collections::{BTreeMap, HashMap, HashSet};

/// What to do when a large quotient's nontrivial modules sit where its class
/// forbids them.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum StructurePolicy {
    /// Solve the node with the witness loop instead.
    #[default]
    Fallback,
    /// Fail with [`MatchingError::Structure`].
    Strict,
}

/// Options for [`max_matching_qq3_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Qq3Options {
    /// Handling of module-position violations.
    pub policy: StructurePolicy,
    /// Recompute module books after every augmentation.
    pub audit: bool,
}

/// Counters gathered by [`max_matching_qq3_with`].
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct Qq3Stats {
    /// Witness-loop counters.
    pub modular: ModularStats,
    /// Prime nodes per dispatch route.
    pub routes: BTreeMap<String, usize>,
    /// Large quotients with misplaced modules, solved by the witness loop.
    pub fallbacks: usize,
    /// Chain peels that ended in a witness loop on the residual.
    pub peel_witness: usize,
    /// Largest residual handed to the witness loop by a peel.
    pub max_peel_residual: usize,
}

/// Pairs of a maximum matching of a disc, in the vertex ids of its
/// witness. A cycle takes every other edge. A co-cycle takes `{4i, 4i+2}`
/// and `{4i+1, 4i+3}` along the complement's cycle, then repairs the last
/// few vertices by `n mod 4`.
fn disc_pairs(class: &QuotientClass) -> Option<Vec<(usize, usize)>> {
    match class {
        QuotientClass::DiscCycle { order } => {
            Some((0..order.len() / 2).map(|i| (order[2 * i], order[2 * i + 1])).collect())
        }
        QuotientClass::DiscCoCycle { order } => {
            let n = order.len();
            let mut idx: Vec<(usize, usize)> = Vec::new();
            for i in 0..n / 4 {
                idx.push((4 * i, 4 * i + 2));
                idx.push((4 * i + 1, 4 * i + 3));
            }
            match n % 4 {
                3 => idx.push((n - 3, n - 1)),
                2 => {
                    idx.retain(|&p| p != (0, 2));
                    idx.push((n - 2, 0));
                    idx.push((n - 1, 2));
                }
                _ => {}
            }
            Some(idx.into_iter().map(|(a, b)| (order[a], order[b])).collect())
        }
        _ => None,
    }
}

/// Maximum matching of a disc from its verified class witness.
///
/// ```
/// use polykern::decomp::classify_prime_graph;
/// use polykern::graph::Graph;
/// use polykern::matching::match_disc;
/// let g = Graph::cycle(6).complement();
/// let f = match_disc(&g, &classify_prime_graph(&g).unwrap()).unwrap();
/// assert_eq!(f.cardinality(), 3);
/// ```
pub fn match_disc(g: &Graph, class: &QuotientClass) -> Result<Matching, MatchingError> {
    class.verify(g).map_err(MatchingError::Precondition)?;
    let pairs = disc_pairs(class).ok_or_else(|| MatchingError::Precondition(format!("{} is not a disc", class.tag())))?;
    let f = Matching::from_pairs(g.n(), &pairs)?;
    f.validate(g)?;
    Ok(f)
}

/// `S`-`K` pairs of a spider: `s_i k_i` when thin, `s_i k_{i+1}` when thick.
fn spider_pairs(sp: &SpiderPartition) -> Vec<(usize, usize)> {
    let l = sp.s.len();
    (0..l).map(|i| (sp.s[i], sp.k[if sp.thick { (i + 1) % l } else { i }])).collect()
}

/// Maximum matching of a spider: a perfect `S`-`K` matching plus a maximum
/// matching `r_matching` of the head.
///
/// ```
/// use polykern::decomp::SpiderPartition;
/// use polykern::graph::Graph;
/// use polykern::matching::{match_spider, Matching};
/// // Thin spider with legs 0-3, 1-4, 2-5 and clique {3, 4, 5}.
/// let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5), (3, 4), (3, 5), (4, 5)]).unwrap();
/// let sp = SpiderPartition { s: vec![0, 1, 2], k: vec![3, 4, 5], r: vec![], thick: false };
/// assert_eq!(match_spider(&g, &sp, &Matching::new(6)).unwrap().cardinality(), 3);
/// ```
pub fn match_spider(g: &Graph, sp: &SpiderPartition, r_matching: &Matching) -> Result<Matching, MatchingError> {
    sp.verify(g).map_err(MatchingError::Precondition)?;
    r_matching.validate(g)?;
    let head: HashSet<usize> = sp.r.iter().copied().collect();
    if r_matching.pairs().iter().any(|(u, v)| !head.contains(u) || !head.contains(v)) {
        return Err(MatchingError::Precondition("head matching leaves the head".into()));
    }
    let mut f = r_matching.clone();
    for (s, k) in spider_pairs(sp) {
        f.add(s, k);
    }
    Ok(f)
}

/// Quotient vertices allowed to carry nontrivial modules, or `None` when the
/// class puts no restriction (small primes).
fn allowed_fat(class: &QuotientClass, k: usize) -> Option<Vec<bool>> {
    let mut ok = vec![false; k];
    match class {
        QuotientClass::DiscCycle { .. } | QuotientClass::DiscCoCycle { .. } => {}
        QuotientClass::ThinSpider(sp) | QuotientClass::ThickSpider(sp) => {
            for &r in &sp.r {
                ok[r] = true;
            }
        }
        QuotientClass::SpikedPk(ch) | QuotientClass::SpikedPkBar(ch) => {
            for v in [ch.vi(1), ch.vi(ch.k), ch.x, ch.y].into_iter().flatten() {
                ok[v] = true;
            }
        }
        QuotientClass::SpikedQk(ch) | QuotientClass::SpikedQkBar(ch) => {
            for v in [ch.vi(1), ch.vi(ch.k)].into_iter().flatten().chain(ch.z.iter().map(|&(_, v)| v)) {
                ok[v] = true;
            }
        }
        QuotientClass::SmallPrime { .. } => return None,
    }
    Some(ok)
}

/// First exposed vertex of `block`.
fn exposed_in(f: &Matching, block: &[usize]) -> Option<usize> {
    block.iter().copied().filter(|&u| !f.is_matched(u)).min()
}

/// Solver state for one prime node.
struct Node<'a> {
    blocks: &'a [Vec<usize>],
    quotient: &'a Graph,
}

impl Node<'_> {
    fn single(&self, i: usize) -> usize {
        debug_assert_eq!(self.blocks[i].len(), 1);
        self.blocks[i][0]
    }

    /// Spiked `P_k`: pending modules cascade in from both ends, the rest is
    /// a path.
    fn pk(&self, ch: &ChainLabeling, f: &mut Matching) {
        let k = ch.k;
        let v = |i: usize| ch.vi(i).expect("index within the chain");
        let mut gone = vec![false; k + 1];
        // `end` is v_1 or v_k, `next` its neighbour, `spike` the spike
        // attached to `next`, `far` the vertex after `next`.
        for (end, next, spike, far) in [(1, 2, ch.x, 3), (k, k - 1, ch.y, k - 2)] {
            let nx = self.single(v(next));
            if let Some(u) = exposed_in(f, &self.blocks[v(end)]) {
                f.add(u, nx);
                gone[next] = true;
            }
            // S = M_spike plus `next` when it survived; its maximum matching
            // joins `next` to an exposed vertex of M_spike.
            let mut s: Vec<usize> = spike.map(|x| self.blocks[x].clone()).unwrap_or_default();
            if !gone[next] {
                if let Some(u) = exposed_in(f, &s) {
                    f.add(u, nx);
                }
                s.push(nx);
            }
            if let Some(u) = exposed_in(f, &s) {
                f.add(u, self.single(v(far)));
                gone[far] = true;
            }
            gone[next] = true;
        }
        let rest: Vec<usize> = (3..=k - 2).filter(|&i| !gone[i]).map(|i| self.single(v(i))).collect();
        for p in rest.chunks(2) {
            if p.len() == 2 {
                f.add(p[0], p[1]);
            }
        }
    }

    /// Spiked `P_k` complement: a fixed maximum matching of the chain
    /// interior, then SPLIT-and-MATCH over the four end modules until none
    /// applies.
    fn pk_bar(&self, ch: &ChainLabeling, f: &mut Matching) {
        let k = ch.k;
        let at = |i: usize| self.single(ch.vi(i).expect("index within the chain"));
        let mut pairs = vec![(2, k.div_ceil(2) + 1), (k / 2, k - 1)];
        pairs.extend((3..k / 2).map(|i| (i, k + 1 - i)));
        for (a, b) in pairs {
            debug_assert!(self.quotient.has_edge(ch.vi(a).unwrap(), ch.vi(b).unwrap()));
            f.add(at(a), at(b));
        }
        let mut owner = HashMap::new();
        for (i, b) in self.blocks.iter().enumerate() {
            for &u in b {
                owner.insert(u, i);
            }
        }
        let fat: Vec<usize> = [ch.vi(1), ch.vi(k), ch.x, ch.y].into_iter().flatten().collect();
        loop {
            let mut ops = 0;
            for &m in &fat {
                let scope: Vec<usize> = self.quotient.neighbors(m).iter().flat_map(|&j| self.blocks[j].iter().copied()).collect();
                let in_scope = |w: usize| self.quotient.has_edge(m, owner[&w]);
                ops += split_and_match_sides(f, &self.blocks[m], &scope, &in_scope);
            }
            if ops == 0 {
                break;
            }
        }
    }

    /// Spiked `Q_k` or its complement: peel the quotient from the `v_1` end
    /// by the isolated, pending-module, twin and universal-module rules. A
    /// residual no rule applies to goes through the witness loop.
    fn peel(&self, ch: &ChainLabeling, f: &mut Matching, stats: &mut Qq3Stats, audit: bool) -> Result<(), MatchingError> {
        let k = self.blocks.len();
        // Scan order: chain position, z_i right after v_i.
        let mut order: Vec<(usize, usize)> = (1..=ch.k).map(|i| (2 * i, ch.vi(i).unwrap())).collect();
        order.extend(ch.z.iter().map(|&(i, v)| (2 * i + 1, v)));
        order.sort_unstable();
        let order: Vec<usize> = order.into_iter().map(|(_, v)| v).collect();
        let mut peel = Peel::new(self.blocks, self.quotient);
        let mut joins: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        while peel.alive_count > 0 {
            if let Some(a) = order.iter().copied().find(|&a| peel.alive[a] && peel.degree(a) == 0) {
                peel.kill(a);
                continue;
            }
            let pending = order.iter().copied().find_map(|a| {
                if !peel.alive[a] || peel.degree(a) != 1 {
                    return None;
                }
                let b = peel.neighbors(a)[0];
                (peel.verts[b].len() == 1).then_some((a, b))
            });
            if let Some((a, b)) = pending {
                if let Some(u) = exposed_in(f, &peel.verts[a]) {
                    f.add(u, peel.verts[b][0]);
                    peel.kill(b);
                }
                peel.kill(a);
                continue;
            }
            if let Some((a, b)) = peel.twins(&order) {
                if peel.adjacent(a, b) {
                    let (va, vb) = (peel.verts[a].clone(), peel.verts[b].clone());
                    let (sa, sb): (HashSet<usize>, HashSet<usize>) = (va.iter().copied().collect(), vb.iter().copied().collect());
                    join_sides(f, &va, &vb, &|w| sa.contains(&w), &|w| sb.contains(&w));
                }
                peel.merge(a, b);
                continue;
            }
            if peel.alive_count >= 2 {
                if let Some(a) = order.iter().copied().find(|&a| peel.alive[a] && peel.degree(a) + 1 == peel.alive_count) {
                    let rest: Vec<usize> =
                        (0..k).filter(|&b| b != a && peel.alive[b]).flat_map(|b| peel.verts[b].iter().copied()).collect();
                    joins.push((peel.verts[a].clone(), rest));
                    peel.kill(a);
                    continue;
                }
            }
            let live: Vec<usize> = (0..k).filter(|&a| peel.alive[a]).collect();
            let blocks: Vec<Vec<usize>> = live.iter().map(|&a| peel.verts[a].clone()).collect();
            let mut edges = Vec::new();
            for (i, &a) in live.iter().enumerate() {
                for (j, &b) in live.iter().enumerate().skip(i + 1) {
                    if peel.adjacent(a, b) {
                        edges.push((i, j));
                    }
                }
            }
            stats.peel_witness += 1;
            stats.max_peel_residual = stats.max_peel_residual.max(live.len());
            let layer = ModuleLayer::from_matching(blocks, Graph::from_edges(live.len(), &edges).expect("valid"), f);
            let mut book = ModuleMatchBook::new(&layer, f)?;
            witness_loop(&layer, f, &mut book, &mut stats.modular.witness, audit, &mut Vec::new())?;
            for a in live {
                peel.kill(a);
            }
        }
        for (a, rest) in joins.into_iter().rev() {
            let (sa, sr): (HashSet<usize>, HashSet<usize>) = (a.iter().copied().collect(), rest.iter().copied().collect());
            join_sides(f, &a, &rest, &|w| sa.contains(&w), &|w| sr.contains(&w));
        }
        Ok(())
    }
}

/// Residual quotient of a chain peel: groups of modules with bitset
/// adjacency.
struct Peel {
    verts: Vec<Vec<usize>>,
    adj: Vec<Vec<u64>>,
    alive: Vec<bool>,
    alive_count: usize,
}

impl Peel {
    fn new(blocks: &[Vec<usize>], q: &Graph) -> Peel {
        let k = blocks.len();
        let words = k.div_ceil(64);
        let mut adj = vec![vec![0u64; words]; k];
        for (a, b) in q.edges() {
            adj[a][b / 64] |= 1 << (b % 64);
            adj[b][a / 64] |= 1 << (a % 64);
        }
        Peel { verts: blocks.to_vec(), adj, alive: vec![true; k], alive_count: k }
    }

    fn degree(&self, a: usize) -> usize {
        self.adj[a].iter().map(|w| w.count_ones() as usize).sum()
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b / 64] >> (b % 64) & 1 == 1
    }

    fn neighbors(&self, a: usize) -> Vec<usize> {
        (0..self.verts.len()).filter(|&b| self.adjacent(a, b)).collect()
    }

    fn kill(&mut self, a: usize) {
        self.alive[a] = false;
        self.alive_count -= 1;
        for row in &mut self.adj {
            row[a / 64] &= !(1 << (a % 64));
        }
        self.adj[a].iter_mut().for_each(|w| *w = 0);
    }

    /// First pair of live groups with equal neighbourhoods apart from each
    /// other.
    fn twins(&self, order: &[usize]) -> Option<(usize, usize)> {
        let live: Vec<usize> = order.iter().copied().filter(|&a| self.alive[a]).collect();
        for (i, &a) in live.iter().enumerate() {
            for &b in &live[i + 1..] {
                let same = self.adj[a].iter().zip(&self.adj[b]).enumerate().all(|(w, (&x, &y))| {
                    let mut mask = !0u64;
                    for c in [a, b] {
                        if c / 64 == w {
                            mask &= !(1 << (c % 64));
                        }
                    }
                    x & mask == y & mask
                });
                if same {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Merges twin `b` into `a`.
    fn merge(&mut self, a: usize, b: usize) {
        let moved = std::mem::take(&mut self.verts[b]);
        self.verts[a].extend(moved);
        self.kill(b);
    }
}

/// Maximum matching of a graph whose prime quotient is a spiked p-chain,
/// given its modules (in quotient vertex order), the class of the quotient
/// and a matching `fstar` that is maximum inside every module.
///
/// ```
/// use polykern::decomp::classify_prime_graph;
/// use polykern::graph::Graph;
/// use polykern::matching::{max_matching_prime_ptree, Matching};
/// let g = Graph::path(8);
/// let class = classify_prime_graph(&g).unwrap();
/// let modules: Vec<Vec<usize>> = (0..8).map(|v| vec![v]).collect();
/// let f = max_matching_prime_ptree(&g, &modules, &class, &Matching::new(8)).unwrap();
/// assert_eq!(f.cardinality(), 4);
/// ```
pub fn max_matching_prime_ptree(
    g: &Graph,
    modules: &[Vec<usize>],
    class: &QuotientClass,
    fstar: &Matching,
) -> Result<Matching, MatchingError> {
    fstar.validate(g)?;
    let mut owner = vec![usize::MAX; g.n()];
    for (i, m) in modules.iter().enumerate() {
        if m.is_empty() || !is_module(g, m) {
            return Err(MatchingError::Precondition(format!("part {i} is not a nonempty module")));
        }
        for &v in m {
            if v >= g.n() || owner[v] != usize::MAX {
                return Err(MatchingError::Precondition(format!("vertex {v} repeated or out of range")));
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(MatchingError::Precondition("modules do not cover the graph".into()));
    }
    if fstar.pairs().iter().any(|&(u, v)| owner[u] != owner[v]) {
        return Err(MatchingError::Precondition("module matching crosses modules".into()));
    }
    let reps: Vec<usize> = modules.iter().map(|m| m[0]).collect();
    let q = g.induced(&reps);
    class.verify(&q).map_err(MatchingError::Precondition)?;
    check_positions(class, modules)?;
    let mut f = fstar.clone();
    let node = Node { blocks: modules, quotient: &q };
    match class {
        QuotientClass::SpikedPk(ch) => node.pk(ch, &mut f),
        QuotientClass::SpikedPkBar(ch) => node.pk_bar(ch, &mut f),
        QuotientClass::SpikedQk(ch) | QuotientClass::SpikedQkBar(ch) => {
            node.peel(ch, &mut f, &mut Qq3Stats::default(), false)?
        }
        other => return Err(MatchingError::Precondition(format!("{} is not a spiked p-chain", other.tag()))),
    }
    f.validate(g)?;
    Ok(f)
}

fn check_positions(class: &QuotientClass, blocks: &[Vec<usize>]) -> Result<(), MatchingError> {
    if let Some(ok) = allowed_fat(class, blocks.len()) {
        if let Some(i) = (0..blocks.len()).find(|&i| blocks[i].len() >= 2 && !ok[i]) {
            return Err(MatchingError::Structure(format!(
                "{} quotient of order {} has a nontrivial module at vertex {i}",
                class.tag(),
                blocks.len()
            )));
        }
    }
    Ok(())
}

/// Maximum matching, dispatching each prime quotient on its class.
///
/// ```
/// use polykern::decomp::modular_decomposition;
/// use polykern::graph::Graph;
/// use polykern::matching::max_matching_qq3;
/// let g = Graph::cycle(9).complement();
/// assert_eq!(max_matching_qq3(&g, &modular_decomposition(&g)).cardinality(), 4);
/// ```
pub fn max_matching_qq3(g: &Graph, md: &MDTree) -> Matching {
    max_matching_qq3_with(g, md, Qq3Options::default()).expect("decomposition matches the graph").0
}

/// [`max_matching_qq3`] with options, returning counters.
pub fn max_matching_qq3_with(g: &Graph, md: &MDTree, opts: Qq3Options) -> Result<(Matching, Qq3Stats), MatchingError> {
    check_cover(g, md)?;
    let mut f = Matching::new(g.n());
    let mut stats = Qq3Stats::default();
    if md.is_empty() {
        return Ok((f, stats));
    }
    let q_bound = effective_q(md);
    for id in md.postorder() {
        match md.kind(id) {
            MdKind::Leaf(_) | MdKind::Parallel => {}
            MdKind::Series => finish_series(child_blocks(md, id).into_iter(), &mut f, &mut stats.modular, opts.audit)?,
            MdKind::Prime => {
                let blocks = child_blocks(md, id);
                let q = md.quotient(id).expect("prime nodes carry a quotient");
                let route = solve_prime(&blocks, q, q_bound, &mut f, &mut stats, opts)?;
                *stats.routes.entry(route.into()).or_default() += 1;
            }
        }
    }
    f.validate(g)?;
    Ok((f, stats))
}

fn solve_prime(
    blocks: &[Vec<usize>],
    q: &Graph,
    q_bound: usize,
    f: &mut Matching,
    stats: &mut Qq3Stats,
    opts: Qq3Options,
) -> Result<&'static str, MatchingError> {
    let class = classify_prime_graph(q).map_err(MatchingError::Structure)?;
    let witness = |f: &mut Matching, stats: &mut Qq3Stats| -> Result<&'static str, MatchingError> {
        finish_prime(blocks.to_vec(), q.clone(), f, &mut stats.modular.witness, opts.audit)?;
        stats.modular.prime_nodes += 1;
        Ok("witness")
    };
    if matches!(class, QuotientClass::SmallPrime { .. }) {
        return witness(f, stats);
    }
    if let Err(e) = check_positions(&class, blocks) {
        if q.n() <= q_bound {
            return witness(f, stats);
        }
        return match opts.policy {
            StructurePolicy::Strict => Err(e),
            StructurePolicy::Fallback => {
                stats.fallbacks += 1;
                witness(f, stats)
            }
        };
    }
    let node = Node { blocks, quotient: q };
    let at = |local: usize| blocks[local][0];
    match &class {
        QuotientClass::DiscCycle { .. } | QuotientClass::DiscCoCycle { .. } => {
            for (a, b) in disc_pairs(&class).expect("disc class") {
                f.add(at(a), at(b));
            }
            Ok("disc")
        }
        QuotientClass::ThinSpider(sp) | QuotientClass::ThickSpider(sp) => {
            for (s, k) in spider_pairs(sp) {
                f.add(at(s), at(k));
            }
            Ok("spider")
        }
        QuotientClass::SpikedPk(ch) => {
            node.pk(ch, f);
            Ok("spiked-pk")
        }
        QuotientClass::SpikedPkBar(ch) => {
            node.pk_bar(ch, f);
            Ok("spiked-pk-bar")
        }
        QuotientClass::SpikedQk(ch) | QuotientClass::SpikedQkBar(ch) => {
            node.peel(ch, f, stats, opts.audit)?;
            Ok(if matches!(class, QuotientClass::SpikedQk(_)) { "spiked-qk" } else { "spiked-qk-bar" })
        }
        QuotientClass::SmallPrime { .. } => unreachable!("handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{modular_decomposition, spiked_pk, spiked_qk};
    use crate::graph::generate::{gen_family, FamilySpec};
    use crate::graph::{oracle_maximum_matching, substitute};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn agrees(g: &Graph, policy: StructurePolicy) -> Qq3Stats {
        let md = modular_decomposition(g);
        let (f, stats) = max_matching_qq3_with(g, &md, Qq3Options { policy, audit: true }).unwrap();
        assert_eq!(f.cardinality(), oracle_maximum_matching(g).cardinality(), "{g:?}");
        stats
    }

    #[test]
    fn discs() {
        for n in 5..20 {
            let c = Graph::cycle(n);
            assert_eq!(match_disc(&c, &classify_prime_graph(&c).unwrap()).unwrap().cardinality(), n / 2);
            if n >= 6 {
                let co = c.complement();
                let f = match_disc(&co, &classify_prime_graph(&co).unwrap()).unwrap();
                assert_eq!(f.cardinality(), n / 2, "co-cycle {n}");
            }
        }
        let c7 = Graph::cycle(7);
        assert!(match_disc(&c7, &QuotientClass::DiscCycle { order: vec![0, 2, 1, 3, 4, 5, 6] }).is_err());
    }

    #[test]
    fn spiders() {
        let thick = gen_family(&FamilySpec::ThickSpider { legs: 4, head: Some(Box::new(FamilySpec::Complete { n: 2 })) }, 1).unwrap().graph;
        let s = agrees(&thick, StructurePolicy::Strict);
        assert_eq!(oracle_maximum_matching(&thick).cardinality(), 5);
        assert_eq!(s.routes.get("spider"), Some(&1));
        let thin = gen_family(&FamilySpec::ThinSpider { legs: 3, head: Some(Box::new(FamilySpec::Cycle { n: 5 })) }, 2).unwrap().graph;
        agrees(&thin, StructurePolicy::Strict);
        assert_eq!(max_matching_qq3(&thin, &modular_decomposition(&thin)).cardinality(), 3 + 2);
    }

    #[test]
    fn chains_without_modules() {
        for k in 6..14 {
            for (x, y) in [(false, false), (true, false), (true, true)] {
                let (g, _) = spiked_pk(k, x, y);
                agrees(&g, StructurePolicy::Strict);
                agrees(&g.complement(), StructurePolicy::Strict);
            }
            let zs: Vec<usize> = (2..=k.saturating_sub(5)).collect();
            let (g, _) = spiked_qk(k, &zs);
            agrees(&g, StructurePolicy::Strict);
            agrees(&g.complement(), StructurePolicy::Strict);
        }
        let p8 = Graph::path(8);
        assert_eq!(max_matching_qq3(&p8, &modular_decomposition(&p8)).cardinality(), 4);
    }

    #[test]
    fn chains_with_modules() {
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let families = ["spiked-pk", "spiked-pk-bar", "spiked-qk", "spiked-qk-bar", "thin-spider", "thick-spider", "co-cycle", "cycle"];
        for i in 0..400 {
            let fam = families[i % families.len()];
            let spec = FamilySpec::random(fam, rng.gen_range(12..70), &mut rng).unwrap();
            let g = gen_family(&spec, rng.gen()).unwrap().graph;
            agrees(&g, StructurePolicy::Strict);
        }
    }

    #[test]
    fn pk_bar_with_a_fat_end() {
        let (q, ch) = spiked_pk(9, true, true);
        let q = q.complement();
        let parts: Vec<Graph> = (0..q.n()).map(|v| if v == ch.vi(1).unwrap() { Graph::empty(3) } else { Graph::empty(1) }).collect();
        let g = substitute(&q, &parts).unwrap();
        let s = agrees(&g, StructurePolicy::Strict);
        assert_eq!(s.routes.get("spiked-pk-bar"), Some(&1));
    }

    #[test]
    fn qk_with_modules_on_z() {
        let (q, ch) = spiked_qk(8, &[2, 3]);
        let parts: Vec<Graph> = (0..q.n())
            .map(|v| if ch.z.iter().any(|&(_, z)| z == v) { Graph::complete(3) } else { Graph::empty(1) })
            .collect();
        let g = substitute(&q, &parts).unwrap();
        let s = agrees(&g, StructurePolicy::Strict);
        assert_eq!(s.routes.get("spiked-qk"), Some(&1));
    }

    #[test]
    fn nested_spiders_in_a_chain() {
        let (q, ch) = spiked_qk(10, &[2, 4]);
        let spider = gen_family(&FamilySpec::ThinSpider { legs: 3, head: None }, 3).unwrap().graph;
        let parts: Vec<Graph> = (0..q.n())
            .map(|v| if v == ch.vi(1).unwrap() || ch.z.iter().any(|&(_, z)| z == v) { spider.clone() } else { Graph::empty(1) })
            .collect();
        let g = substitute(&q, &parts).unwrap();
        let s = agrees(&g, StructurePolicy::Strict);
        assert!(s.routes.get("spider").copied().unwrap_or(0) >= 3);
    }

    #[test]
    fn misplaced_modules() {
        // A long cycle with a fat vertex is no (q, q-3) disc.
        let c = Graph::cycle(12);
        let parts: Vec<Graph> = (0..12).map(|v| if v == 0 { Graph::complete(2) } else { Graph::empty(1) }).collect();
        let g = substitute(&c, &parts).unwrap();
        let md = modular_decomposition(&g);
        let strict = Qq3Options { policy: StructurePolicy::Strict, audit: false };
        assert!(matches!(max_matching_qq3_with(&g, &md, strict), Err(MatchingError::Structure(_))));
        let s = agrees(&g, StructurePolicy::Fallback);
        assert_eq!(s.fallbacks, 1);
        // Small quotients are routed to the witness loop either way.
        let g = substitute(&Graph::cycle(5), &vec![Graph::complete(2); 5]).unwrap();
        agrees(&g, StructurePolicy::Strict);
    }

    #[test]
    fn prime_ptree_entry_point() {
        let (q, ch) = spiked_pk(8, true, false);
        let parts: Vec<Graph> = (0..q.n())
            .map(|v| if v == ch.x.unwrap() || v == ch.vi(8).unwrap() { Graph::empty(3) } else { Graph::empty(1) })
            .collect();
        let g = substitute(&q, &parts).unwrap();
        let md = modular_decomposition(&g);
        let modules = child_blocks(&md, md.root());
        let reps: Vec<usize> = modules.iter().map(|m| m[0]).collect();
        let class = classify_prime_graph(&g.induced(&reps)).unwrap();
        let f = max_matching_prime_ptree(&g, &modules, &class, &Matching::new(g.n())).unwrap();
        assert_eq!(f.cardinality(), oracle_maximum_matching(&g).cardinality());
        assert!(max_matching_prime_ptree(&g, &modules, &QuotientClass::SmallPrime { order: 3 }, &Matching::new(g.n())).is_err());
    }
}
