//! Module layers, the per-module matching book and witness subgraphs.
//!
//! A layer is a partition of some vertex set into modules together with
//! their quotient. Inside a module only a matching survives (the reduced
//! graph), so a vertex has at most one internal partner. Between two modules
//! the reduced graph is complete or empty, as the quotient says.

use super::{Matching, MatchingError};
use crate::decomp::{MDTree, MdKind};
use crate::graph::Graph;
use crate::matching::blossom::find_augmenting_path;
use std::collections::{BTreeMap, BTreeSet, HashMap};

type Edge = (usize, usize);

fn edge(u: usize, v: usize) -> Edge {
    (u.min(v), u.max(v))
}

/// Modules of a reduced graph with their quotient.
#[derive(Debug, Clone)]
pub struct ModuleLayer {
    blocks: Vec<Vec<usize>>,
    quotient: Graph,
    block_of: HashMap<usize, usize>,
    inner: HashMap<usize, usize>,
}

impl ModuleLayer {
    /// A layer with the given modules, quotient and internal edges. Fails
    /// when modules overlap, an internal edge leaves its module or a vertex
    /// carries two internal edges.
    pub fn new(blocks: Vec<Vec<usize>>, quotient: Graph, internal: &[Edge]) -> Result<ModuleLayer, MatchingError> {
        if quotient.n() != blocks.len() {
            return Err(MatchingError::Precondition(format!(
                "quotient has {} vertices for {} modules",
                quotient.n(),
                blocks.len()
            )));
        }
        let mut block_of = HashMap::new();
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if block_of.insert(v, i).is_some() {
                    return Err(MatchingError::Precondition(format!("vertex {v} lies in two modules")));
                }
            }
        }
        let mut inner = HashMap::new();
        for &(u, v) in internal {
            match (block_of.get(&u), block_of.get(&v)) {
                (Some(a), Some(b)) if a == b && u != v => {}
                _ => return Err(MatchingError::Precondition(format!("internal edge ({u}, {v}) leaves its module"))),
            }
            for (a, b) in [(u, v), (v, u)] {
                if inner.insert(a, b).is_some() {
                    return Err(MatchingError::Precondition(format!("module around {a} does not induce a matching")));
                }
            }
        }
        Ok(ModuleLayer { blocks, quotient, block_of, inner })
    }

    /// Reads a layer off a reduced graph `g`: every module must induce a
    /// matching and every pair of modules must be completely joined or
    /// anticomplete.
    pub fn from_reduced(g: &Graph, blocks: Vec<Vec<usize>>) -> Result<ModuleLayer, MatchingError> {
        let k = blocks.len();
        let mut block_of = vec![usize::MAX; g.n()];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v >= g.n() {
                    return Err(MatchingError::SizeMismatch { matching: v + 1, graph: g.n() });
                }
                block_of[v] = i;
            }
        }
        let mut internal = Vec::new();
        let mut qedges = Vec::new();
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                let mut seen = vec![0usize; k];
                for &w in g.neighbors(v) {
                    let j = block_of[w];
                    if j == usize::MAX {
                        continue;
                    }
                    if j == i {
                        if v < w {
                            internal.push((v, w));
                        }
                    } else {
                        seen[j] += 1;
                    }
                }
                for (j, &c) in seen.iter().enumerate() {
                    if j != i && c != 0 && c != blocks[j].len() {
                        return Err(MatchingError::Precondition(format!("vertex {v} splits module {j}")));
                    }
                }
                if v == b[0] {
                    qedges.extend((0..k).filter(|&j| j > i && seen[j] > 0).map(|j| (i, j)));
                } else {
                    let first: Vec<bool> = (0..k).map(|j| j != i && g.has_edge(b[0], blocks[j][0])).collect();
                    if (0..k).any(|j| j != i && (seen[j] > 0) != first[j]) {
                        return Err(MatchingError::Precondition(format!("module {i} is not a module")));
                    }
                }
            }
        }
        let quotient = Graph::from_edges(k, &qedges).expect("quotient edges valid");
        ModuleLayer::new(blocks, quotient, &internal)
    }

    /// A layer whose internal edges are the pairs of `f` inside modules.
    pub(crate) fn from_matching(blocks: Vec<Vec<usize>>, quotient: Graph, f: &Matching) -> ModuleLayer {
        let mut block_of = HashMap::new();
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                block_of.insert(v, i);
            }
        }
        let mut inner = HashMap::new();
        for b in &blocks {
            for &v in b {
                if let Some(w) = f.mate(v) {
                    if block_of.get(&w) == block_of.get(&v) {
                        inner.insert(v, w);
                    }
                }
            }
        }
        ModuleLayer { blocks, quotient, block_of, inner }
    }

    /// The modules.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The quotient on the modules.
    pub fn quotient(&self) -> &Graph {
        &self.quotient
    }

    /// Module holding `v`.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.block_of.get(&v).copied()
    }

    /// Internal partner of `v` in the reduced graph.
    pub fn inner(&self, v: usize) -> Option<usize> {
        self.inner.get(&v).copied()
    }

    /// Adjacency in the reduced graph.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match (self.block_of(u), self.block_of(v)) {
            (Some(a), Some(b)) if a == b => self.inner(u) == Some(v),
            (Some(a), Some(b)) => self.quotient.has_edge(a, b),
            _ => false,
        }
    }

    /// The reduced graph on all vertices of the layer, as an induced graph
    /// over `vertices()` order.
    pub fn reduced_graph(&self) -> (Vec<usize>, Graph) {
        let verts = self.vertices();
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        let n = verts.len();
        (verts, Graph::from_edges(n, &edges).expect("valid edges"))
    }

    /// All vertices, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    /// Appends `block` as a new module joined to every existing one; its
    /// internal edges are the pairs of `f` inside it.
    pub(crate) fn push_joined(&mut self, block: Vec<usize>, f: &Matching) {
        let k = self.blocks.len();
        for &v in &block {
            self.block_of.insert(v, k);
        }
        for &v in &block {
            if let Some(w) = f.mate(v) {
                if self.block_of.get(&w) == Some(&k) {
                    self.inner.insert(v, w);
                }
            }
        }
        self.blocks.push(block);
        self.quotient = Graph::complete(k + 1);
    }

    /// Merges the last module into module 0 and resets the internal edges of
    /// `touched` and of the merged vertices to their pairs in `f`. Valid when
    /// `f` keeps every pair inside the merged module.
    pub(crate) fn absorb_last(&mut self, f: &Matching, touched: &[usize]) {
        let last = self.blocks.pop().expect("a module to absorb");
        for &v in &last {
            self.block_of.insert(v, 0);
        }
        for &v in last.iter().chain(touched) {
            match f.mate(v) {
                Some(w) => self.inner.insert(v, w),
                None => self.inner.remove(&v),
            };
        }
        self.blocks[0].extend(last);
        self.quotient = Graph::complete(self.blocks.len());
    }
}

/// Per-module view of the current matching `F`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModuleMatchBook {
    matched_inner: Vec<BTreeSet<Edge>>,
    unmatched_inner: Vec<BTreeSet<Edge>>,
    exposed: Vec<BTreeSet<usize>>,
    cross: BTreeMap<(usize, usize), BTreeSet<Edge>>,
}

impl ModuleMatchBook {
    /// Builds the book. Every endpoint of an internal edge must be matched
    /// and every pair of `f` must be an edge of the reduced graph.
    pub fn new(layer: &ModuleLayer, f: &Matching) -> Result<ModuleMatchBook, MatchingError> {
        let k = layer.blocks.len();
        let mut book = ModuleMatchBook {
            matched_inner: vec![BTreeSet::new(); k],
            unmatched_inner: vec![BTreeSet::new(); k],
            exposed: vec![BTreeSet::new(); k],
            cross: BTreeMap::new(),
        };
        for (i, b) in layer.blocks.iter().enumerate() {
            for &v in b {
                if let Some(w) = layer.inner(v) {
                    if !f.is_matched(v) {
                        return Err(MatchingError::Precondition(format!(
                            "vertex {v} has an internal edge but is exposed"
                        )));
                    }
                    if v < w && !f.contains(v, w) {
                        book.unmatched_inner[i].insert((v, w));
                    }
                }
                match f.mate(v) {
                    None => {
                        book.exposed[i].insert(v);
                    }
                    Some(w) if v < w => {
                        if !layer.adjacent(v, w) {
                            return Err(MatchingError::NotAnEdge { u: v, v: w });
                        }
                        book.insert(layer, v, w);
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(book)
    }

    fn insert(&mut self, layer: &ModuleLayer, u: usize, v: usize) {
        let (a, b) = (layer.block_of[&u], layer.block_of[&v]);
        let e = edge(u, v);
        if a == b {
            self.unmatched_inner[a].remove(&e);
            self.matched_inner[a].insert(e);
        } else {
            self.cross.entry((a.min(b), a.max(b))).or_default().insert(e);
        }
    }

    fn delete(&mut self, layer: &ModuleLayer, u: usize, v: usize) {
        let (a, b) = (layer.block_of[&u], layer.block_of[&v]);
        let e = edge(u, v);
        if a == b {
            self.matched_inner[a].remove(&e);
            self.unmatched_inner[a].insert(e);
        } else {
            let key = (a.min(b), a.max(b));
            let set = self.cross.get_mut(&key).expect("pair recorded");
            set.remove(&e);
            if set.is_empty() {
                self.cross.remove(&key);
            }
        }
    }

    /// Records the flip of `f` along `path`, before `f` itself is changed.
    /// Runs in time linear in the path length, up to logarithmic factors.
    pub(crate) fn record_flip(&mut self, layer: &ModuleLayer, path: &[usize]) {
        for w in path[1..path.len() - 1].chunks(2) {
            self.delete(layer, w[0], w[1]);
        }
        for w in path.chunks(2) {
            self.insert(layer, w[0], w[1]);
        }
        for &end in [path[0], path[path.len() - 1]].iter() {
            let b = layer.block_of[&end];
            self.exposed[b].remove(&end);
        }
    }

    /// `|F ∩ E(G[M])|` for module `m` of the reduced graph.
    pub fn inner_count(&self, m: usize) -> usize {
        self.matched_inner[m].len()
    }

    /// `|F ∩ (M × M')|`.
    pub fn cross_count(&self, a: usize, b: usize) -> usize {
        self.cross.get(&(a.min(b), a.max(b))).map_or(0, BTreeSet::len)
    }

    /// Vertices of module `m` left exposed by `F`.
    pub fn exposed_count(&self, m: usize) -> usize {
        self.exposed[m].len()
    }

    /// Compares the book with one rebuilt from scratch.
    pub fn audit(&self, layer: &ModuleLayer, f: &Matching) -> Result<(), MatchingError> {
        let fresh = ModuleMatchBook::new(layer, f)?;
        if &fresh != self {
            return Err(MatchingError::Precondition("module book out of date".into()));
        }
        Ok(())
    }

    /// Moves the last module's records into module 0. Internal edges of the
    /// merged module become exactly the pairs of `F` inside it.
    pub(crate) fn absorb_last(&mut self) {
        let last = self.matched_inner.len() - 1;
        let mut matched = std::mem::take(&mut self.matched_inner[0]);
        let mut more = self.matched_inner.pop().expect("a module");
        more.extend(self.cross.remove(&(0, last)).unwrap_or_default());
        if matched.len() < more.len() {
            std::mem::swap(&mut matched, &mut more);
        }
        matched.extend(more);
        self.matched_inner[0] = matched;
        self.unmatched_inner.pop();
        self.unmatched_inner[0].clear();
        let mut exposed = std::mem::take(&mut self.exposed[0]);
        let mut more = self.exposed.pop().expect("a module");
        if exposed.len() < more.len() {
            std::mem::swap(&mut exposed, &mut more);
        }
        exposed.extend(more);
        self.exposed[0] = exposed;
    }

    /// Opens records for a module appended by [`ModuleLayer::push_joined`].
    pub(crate) fn push_block(&mut self, layer: &ModuleLayer, f: &Matching) {
        let k = layer.blocks.len() - 1;
        self.matched_inner.push(BTreeSet::new());
        self.unmatched_inner.push(BTreeSet::new());
        self.exposed.push(BTreeSet::new());
        for &v in &layer.blocks[k] {
            match f.mate(v) {
                None => {
                    self.exposed[k].insert(v);
                }
                Some(w) if v < w => {
                    self.matched_inner[k].insert((v, w));
                }
                Some(_) => {}
            }
        }
    }
}

/// A witness subgraph: few vertices per module and module pair, with the
/// matching restricted to them.
#[derive(Debug, Clone)]
pub struct WitnessGraph {
    /// Original vertex of each witness vertex, sorted.
    pub vertices: Vec<usize>,
    /// Induced reduced graph on `vertices`.
    pub graph: Graph,
    /// The matching restricted to `vertices`.
    pub matching: Matching,
}

impl WitnessGraph {
    /// Number of witness vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Maps a path over witness vertices back to original vertices.
    pub fn lift(&self, path: &[usize]) -> Vec<usize> {
        path.iter().map(|&i| self.vertices[i]).collect()
    }
}

/// Selects the witness subgraph of the reduced graph described by `layer`.
///
/// Per module: the smallest matched internal edge, the smallest unmatched
/// internal edge with the two matched edges at its ends, and the two
/// smallest exposed vertices. Per adjacent module pair: the four smallest
/// matched edges between them. The matching has an augmenting path in the
/// reduced graph exactly when its restriction has one in the witness.
///
/// ```
/// use polykern::graph::Graph;
/// use polykern::matching::{build_witness, Matching, ModuleLayer, ModuleMatchBook};
/// // Path of three modules, each an edge matched internally.
/// let layer = ModuleLayer::new(
///     vec![vec![0, 1], vec![2, 3], vec![4, 5]],
///     Graph::path(3),
///     &[(0, 1), (2, 3), (4, 5)],
/// )
/// .unwrap();
/// let f = Matching::from_pairs(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
/// let book = ModuleMatchBook::new(&layer, &f).unwrap();
/// let w = build_witness(&layer, &f, &book).unwrap();
/// assert_eq!(w.order(), 6);
/// assert_eq!(w.matching.cardinality(), 3);
/// ```
pub fn build_witness(layer: &ModuleLayer, f: &Matching, book: &ModuleMatchBook) -> Result<WitnessGraph, MatchingError> {
    let mut pick = BTreeSet::new();
    for m in 0..layer.blocks.len() {
        if let Some(&(u, v)) = book.matched_inner[m].first() {
            pick.extend([u, v]);
        }
        if let Some(&(x, y)) = book.unmatched_inner[m].first() {
            for end in [x, y] {
                let mate = f
                    .mate(end)
                    .ok_or_else(|| MatchingError::Precondition(format!("vertex {end} has an internal edge but is exposed")))?;
                pick.extend([end, mate]);
            }
        }
        pick.extend(book.exposed[m].iter().take(2));
    }
    for set in book.cross.values() {
        for &(u, v) in set.iter().take(4) {
            pick.extend([u, v]);
        }
    }
    let vertices: Vec<usize> = pick.into_iter().collect();
    let pos: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        if let Some(w) = f.mate(u) {
            match pos.get(&w) {
                Some(&j) if j > i => pairs.push((i, j)),
                Some(_) => {}
                None => return Err(MatchingError::Precondition(format!("mate of witness vertex {u} left out"))),
            }
        }
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if layer.adjacent(u, v) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(vertices.len(), &edges).expect("valid edges");
    let matching = Matching::from_pairs(vertices.len(), &pairs)?;
    Ok(WitnessGraph { vertices, graph, matching })
}

/// Counters for a run of the witness loop.
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct WitnessStats {
    /// Witness graphs built.
    pub builds: usize,
    /// Augmentations performed.
    pub augmentations: usize,
    /// Largest witness order seen.
    pub max_order: usize,
    /// Largest `|V(witness)| / |E(G')|` seen.
    pub max_ratio: f64,
}

impl WitnessStats {
    fn observe(&mut self, order: usize, quotient_edges: usize) {
        self.builds += 1;
        self.max_order = self.max_order.max(order);
        let ratio = order as f64 / quotient_edges.max(1) as f64;
        if ratio > self.max_ratio {
            self.max_ratio = ratio;
        }
    }

    /// Folds another run's counters into these.
    pub fn merge(&mut self, other: &WitnessStats) {
        self.builds += other.builds;
        self.augmentations += other.augmentations;
        self.max_order = self.max_order.max(other.max_order);
        self.max_ratio = self.max_ratio.max(other.max_ratio);
    }
}

/// Augments `f` along witness paths until none remains. Vertices whose
/// pair changed are appended to `touched`.
pub(crate) fn witness_loop(
    layer: &ModuleLayer,
    f: &mut Matching,
    book: &mut ModuleMatchBook,
    stats: &mut WitnessStats,
    audit: bool,
    touched: &mut Vec<usize>,
) -> Result<(), MatchingError> {
    loop {
        let w = build_witness(layer, f, book)?;
        stats.observe(w.order(), layer.quotient.m());
        let Some(local) = find_augmenting_path(&w.graph, &w.matching)? else {
            return Ok(());
        };
        let path = w.lift(&local);
        book.record_flip(layer, &path);
        super::flip(f, &path);
        touched.extend_from_slice(&path);
        stats.augmentations += 1;
        if audit {
            book.audit(layer, f)?;
        }
    }
}

/// Replaces the internal edges of every child module of the root by the
/// given matchings, one per child in child order.
///
/// With `strict`, each matching is also checked to be maximum inside its
/// module.
///
/// ```
/// use polykern::decomp::modular_decomposition;
/// use polykern::graph::{substitute, Graph};
/// use polykern::matching::{reduce_module_edges, Matching};
/// let g = substitute(&Graph::path(4), &[Graph::complete(4), Graph::empty(1), Graph::empty(1), Graph::empty(1)]).unwrap();
/// let md = modular_decomposition(&g);
/// let kids = md.children(md.root()).to_vec();
/// let fs: Vec<Matching> = kids
///     .iter()
///     .map(|&c| {
///         let vs = md.vertices(c).to_vec();
///         let pairs: Vec<(usize, usize)> = vs.chunks(2).filter(|p| p.len() == 2).map(|p| (p[0], p[1])).collect();
///         Matching::from_pairs(g.n(), &pairs).unwrap()
///     })
///     .collect();
/// let r = reduce_module_edges(&g, &md, &fs, true).unwrap();
/// assert_eq!(r.m(), g.m() - 4);
/// ```
pub fn reduce_module_edges(g: &Graph, md: &MDTree, module_matchings: &[Matching], strict: bool) -> Result<Graph, MatchingError> {
    if md.is_empty() || md.vertices(md.root()).len() != g.n() {
        return Err(MatchingError::Precondition("modular decomposition does not cover the graph".into()));
    }
    let root = md.root();
    if let MdKind::Leaf(_) = md.kind(root) {
        return Ok(g.clone());
    }
    let kids = md.children(root);
    if kids.len() != module_matchings.len() {
        return Err(MatchingError::Precondition(format!(
            "{} matchings for {} modules",
            module_matchings.len(),
            kids.len()
        )));
    }
    let mut part = vec![0usize; g.n()];
    for (i, &c) in kids.iter().enumerate() {
        for &v in md.vertices(c) {
            part[v] = i;
        }
    }
    let mut edges: Vec<Edge> = g.edges().filter(|&(u, v)| part[u] != part[v]).collect();
    for (i, (&c, f)) in kids.iter().zip(module_matchings).enumerate() {
        f.validate(g)?;
        let pairs = f.pairs();
        if let Some(&(u, v)) = pairs.iter().find(|&&(u, v)| part[u] != i || part[v] != i) {
            return Err(MatchingError::Precondition(format!("pair ({u}, {v}) leaves module {i}")));
        }
        if strict {
            let vs = md.vertices(c);
            let sub = g.induced(vs);
            let pos: HashMap<usize, usize> = vs.iter().enumerate().map(|(j, &v)| (v, j)).collect();
            let local: Vec<Edge> = pairs.iter().map(|&(u, v)| (pos[&u], pos[&v])).collect();
            let lf = Matching::from_pairs(vs.len(), &local)?;
            if find_augmenting_path(&sub, &lf)?.is_some() {
                return Err(MatchingError::Precondition(format!("matching of module {i} is not maximum")));
            }
        }
        edges.extend(pairs);
    }
    Ok(Graph::from_edges(g.n(), &edges).expect("subset of valid edges"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::modular_decomposition;
    use crate::graph::generate::{gen_family, FamilySpec};
    use crate::graph::oracle_maximum_matching;
    use crate::graph::substitute;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reduce_keeps_module_matchings() {
        let g = substitute(&Graph::path(4), &[Graph::complete(4), Graph::complete(2), Graph::empty(2), Graph::complete(3)]).unwrap();
        let md = modular_decomposition(&g);
        let kids = md.children(md.root()).to_vec();
        let fs: Vec<Matching> = kids
            .iter()
            .map(|&c| {
                let sub = g.induced(md.vertices(c));
                let local = oracle_maximum_matching(&sub);
                let vs = md.vertices(c);
                let pairs: Vec<Edge> = local.pairs().iter().map(|&(a, b)| (vs[a], vs[b])).collect();
                Matching::from_pairs(g.n(), &pairs).unwrap()
            })
            .collect();
        let r = reduce_module_edges(&g, &md, &fs, true).unwrap();
        for (&c, f) in kids.iter().zip(&fs) {
            let vs = md.vertices(c);
            let inside = r.induced(vs);
            assert_eq!(inside.m(), f.cardinality());
        }
        assert_eq!(oracle_maximum_matching(&r).cardinality(), oracle_maximum_matching(&g).cardinality());
        // A non-maximum matching for the K4 module is caught in strict mode.
        let mut weak = fs.clone();
        let k4 = kids.iter().position(|&c| md.vertices(c).len() == 4).unwrap();
        let vs = md.vertices(kids[k4]);
        weak[k4] = Matching::from_pairs(g.n(), &[(vs[0], vs[1])]).unwrap();
        assert!(reduce_module_edges(&g, &md, &weak, true).is_err());
        assert!(reduce_module_edges(&g, &md, &weak, false).is_ok());
    }

    #[test]
    fn intra_module_witness_on_prime_quotient() {
        // C5 of K4 modules, every module perfectly matched inside.
        let g = substitute(&Graph::cycle(5), &vec![Graph::complete(4); 5]).unwrap();
        let blocks: Vec<Vec<usize>> = (0..5).map(|i| (4 * i..4 * i + 4).collect()).collect();
        let pairs: Vec<Edge> = (0..10).map(|i| (2 * i, 2 * i + 1)).collect();
        let layer = ModuleLayer::new(blocks, Graph::cycle(5), &pairs).unwrap();
        let f = Matching::from_pairs(g.n(), &pairs).unwrap();
        let book = ModuleMatchBook::new(&layer, &f).unwrap();
        let w = build_witness(&layer, &f, &book).unwrap();
        // One matched edge per module and nothing else.
        assert_eq!(w.order(), 10);
        assert_eq!(w.matching.cardinality(), 5);
        assert!(find_augmenting_path(&w.graph, &w.matching).unwrap().is_none());
    }

    #[test]
    fn cross_edges_capped_at_four() {
        // Two joined modules of six vertices each, matched across.
        let blocks = vec![(0..6).collect::<Vec<_>>(), (6..12).collect()];
        let layer = ModuleLayer::new(blocks, Graph::complete(2), &[]).unwrap();
        let pairs: Vec<Edge> = (0..6).map(|i| (i, i + 6)).collect();
        let f = Matching::from_pairs(12, &pairs).unwrap();
        let book = ModuleMatchBook::new(&layer, &f).unwrap();
        assert_eq!(book.cross_count(0, 1), 6);
        let w = build_witness(&layer, &f, &book).unwrap();
        assert_eq!(w.matching.cardinality(), 4);
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 6, 7, 8, 9]);
    }

    #[test]
    fn precondition_audits() {
        let blocks = vec![vec![0, 1], vec![2]];
        assert!(ModuleLayer::new(blocks.clone(), Graph::complete(2), &[(0, 2)]).is_err());
        let layer = ModuleLayer::new(blocks, Graph::complete(2), &[(0, 1)]).unwrap();
        // Internal edge with an exposed endpoint.
        assert!(ModuleMatchBook::new(&layer, &Matching::new(3)).is_err());
        // Path 0 - 1 - 2 - 3: {1, 2} splits {0, 3}? No: {0, 1} is not a module.
        assert!(ModuleLayer::from_reduced(&Graph::path(4), vec![vec![0, 1], vec![2], vec![3]]).is_err());
    }

    /// A random reduced graph: random quotient, modules inducing random
    /// matchings, and a random matching covering all internal edges' ends.
    fn random_reduced(rng: &mut ChaCha8Rng) -> (ModuleLayer, Matching) {
        let k = rng.gen_range(2..7);
        let q = gen_family(&FamilySpec::ErdosRenyi { n: k, p: 0.5 }, rng.gen()).unwrap().graph;
        let mut next = 0;
        let mut blocks = Vec::new();
        let mut internal = Vec::new();
        for _ in 0..k {
            let size = rng.gen_range(1..7);
            let b: Vec<usize> = (next..next + size).collect();
            next += size;
            let mut shuffled = b.clone();
            shuffled.shuffle(rng);
            for p in shuffled.chunks(2) {
                if p.len() == 2 && rng.gen_bool(0.6) {
                    internal.push(edge(p[0], p[1]));
                }
            }
            blocks.push(b);
        }
        let layer = ModuleLayer::new(blocks, q, &internal).unwrap();
        let (verts, red) = layer.reduced_graph();
        // A maximal-but-random matching, augmented so internal ends are covered.
        let mut f = Matching::new(next);
        let mut order: Vec<usize> = verts.clone();
        order.shuffle(rng);
        for &u in &order {
            if f.is_matched(u) || rng.gen_bool(0.3) {
                continue;
            }
            let cands: Vec<usize> = red.neighbors(u).iter().copied().filter(|&w| !f.is_matched(w)).collect();
            if let Some(&w) = cands.choose(rng) {
                f.add(u, w);
            }
        }
        // Each repair puts one more internal edge into f, so this ends.
        while let Some(&v) = verts.iter().find(|&&v| layer.inner(v).is_some() && !f.is_matched(v)) {
            let w = layer.inner(v).unwrap();
            f.remove(w);
            f.add(v, w);
        }
        (layer, f)
    }

    #[test]
    fn witness_equivalence_against_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let mut improvable = 0;
        for _ in 0..400 {
            let (layer, f) = random_reduced(&mut rng);
            let (_, red) = layer.reduced_graph();
            let book = ModuleMatchBook::new(&layer, &f).unwrap();
            let w = build_witness(&layer, &f, &book).unwrap();
            let witness_says = find_augmenting_path(&w.graph, &w.matching).unwrap().is_some();
            let oracle_says = oracle_maximum_matching(&red).cardinality() > f.cardinality();
            assert_eq!(witness_says, oracle_says);
            improvable += usize::from(oracle_says);
            let ratio = w.order() as f64 / layer.quotient().m().max(1) as f64;
            assert!(ratio <= 24.0, "ratio {ratio}");
        }
        assert!(improvable > 50);
    }

    #[test]
    fn loop_reaches_optimum_and_book_stays_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for _ in 0..200 {
            let (layer, mut f) = random_reduced(&mut rng);
            let (_, red) = layer.reduced_graph();
            let mut book = ModuleMatchBook::new(&layer, &f).unwrap();
            let mut stats = WitnessStats::default();
            let start = f.cardinality();
            witness_loop(&layer, &mut f, &mut book, &mut stats, true, &mut Vec::new()).unwrap();
            assert_eq!(f.cardinality(), oracle_maximum_matching(&red).cardinality());
            assert_eq!(stats.augmentations, f.cardinality() - start);
            assert_eq!(stats.builds, stats.augmentations + 1);
        }
    }
}
