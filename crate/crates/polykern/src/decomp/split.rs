//! Split trees and split decomposition.
//!
//! A split of a connected graph is a bipartition `(A, B)` with `|A|, |B| >= 2`
//! such that every edge between the sides joins `C = N(B) ∩ A` to
//! `D = N(A) ∩ B`, and `C × D` is complete. Decomposing along it replaces the
//! graph by `G[A] + a` and `G[B] + b`, where the marker `a` is adjacent to `C`,
//! `b` is adjacent to `D`, and `a`, `b` are linked.
//!
//! Node ids: original vertices keep their ids `0..n`; marker vertices are
//! numbered from `n` upwards.

use crate::graph::Graph;
use std::collections::VecDeque;

/// Kind of a split component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentKind {
    /// No split and not degenerate.
    Prime,
    /// A star; `center` is a local index.
    Star {
        /// Local index of the center.
        center: usize,
    },
    /// A complete graph.
    Complete,
}

/// One component of a [`SplitTree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitComponent {
    /// Component kind.
    pub kind: ComponentKind,
    /// Node id of each local vertex, sorted.
    pub nodes: Vec<usize>,
    /// Local graph over `0..nodes.len()`.
    pub graph: Graph,
}

impl SplitComponent {
    /// Local index of node `id`.
    pub fn local(&self, id: usize) -> Option<usize> {
        self.nodes.binary_search(&id).ok()
    }
}

/// A split decomposition: components linked through marker pairs. A
/// disconnected input yields a forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitTree {
    n: usize,
    components: Vec<SplitComponent>,
    twin: Vec<usize>,
    home: Vec<(usize, usize)>,
}

/// Errors raised by [`SplitTree::from_parts`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid split tree: {0}")]
pub struct SplitTreeError(pub String);

impl SplitTree {
    /// Assembles a tree from components (node lists with local graphs over
    /// the same order) and marker links. Markers must be exactly
    /// `n..n + 2 * links.len()` and every node must appear once.
    pub fn from_parts(
        n: usize,
        parts: Vec<(Vec<usize>, Graph)>,
        links: &[(usize, usize)],
    ) -> Result<SplitTree, SplitTreeError> {
        let total = n + 2 * links.len();
        let mut twin = vec![usize::MAX; 2 * links.len()];
        for &(a, b) in links {
            for (x, y) in [(a, b), (b, a)] {
                if x < n || x >= total || twin[x - n] != usize::MAX {
                    return Err(SplitTreeError(format!("bad marker {x}")));
                }
                twin[x - n] = y;
            }
        }
        let mut components = Vec::with_capacity(parts.len());
        let mut home = vec![(usize::MAX, usize::MAX); total];
        for (nodes, graph) in parts {
            if nodes.len() != graph.n() {
                return Err(SplitTreeError("node list and graph disagree".into()));
            }
            let mut order: Vec<usize> = (0..nodes.len()).collect();
            order.sort_unstable_by_key(|&i| nodes[i]);
            let sorted: Vec<usize> = order.iter().map(|&i| nodes[i]).collect();
            let mut inv = vec![0; nodes.len()];
            for (new, &old) in order.iter().enumerate() {
                inv[old] = new;
            }
            let graph = graph.relabel(&inv);
            let c = components.len();
            for (i, &id) in sorted.iter().enumerate() {
                if id >= total || home[id].0 != usize::MAX {
                    return Err(SplitTreeError(format!("node {id} repeated or out of range")));
                }
                home[id] = (c, i);
            }
            let kind = classify_degenerate(&graph).unwrap_or(ComponentKind::Prime);
            components.push(SplitComponent { kind, nodes: sorted, graph });
        }
        if home.iter().any(|h| h.0 == usize::MAX) {
            return Err(SplitTreeError("some node belongs to no component".into()));
        }
        for m in n..total {
            if home[m].0 == home[twin[m - n]].0 {
                return Err(SplitTreeError(format!("marker {m} linked inside its component")));
            }
        }
        let tree = SplitTree { n, components, twin, home };
        if !tree.is_forest() {
            return Err(SplitTreeError("component links contain a cycle".into()));
        }
        Ok(tree)
    }

    /// Original vertex count.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Components.
    pub fn components(&self) -> &[SplitComponent] {
        &self.components
    }

    /// Total number of nodes (original plus marker vertices).
    pub fn node_count(&self) -> usize {
        self.home.len()
    }

    /// Whether node `id` is a marker.
    pub fn is_marker(&self, id: usize) -> bool {
        id >= self.n
    }

    /// The marker linked to marker `id`.
    pub fn twin(&self, id: usize) -> usize {
        self.twin[id - self.n]
    }

    /// Component and local index of node `id`.
    pub fn home(&self, id: usize) -> (usize, usize) {
        self.home[id]
    }

    /// Marker links `(a, b)` with `a < b`, sorted.
    pub fn links(&self) -> Vec<(usize, usize)> {
        (self.n..self.node_count()).map(|a| (a, self.twin(a))).filter(|&(a, b)| a < b).collect()
    }

    /// The same tree with components in BFS order, each tree of the forest
    /// rooted at its first component, and markers renumbered component by
    /// component in that order. Traversals of the result read memory mostly
    /// in order.
    pub fn bfs_ordered(&self) -> SplitTree {
        let k = self.components.len();
        let mut seen = vec![false; k];
        let mut order = Vec::with_capacity(k);
        for root in 0..k {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut i = order.len();
            order.push(root);
            while i < order.len() {
                let c = order[i];
                i += 1;
                for &id in &self.components[c].nodes {
                    if self.is_marker(id) {
                        let d = self.home[self.twin(id)].0;
                        if !seen[d] {
                            seen[d] = true;
                            order.push(d);
                        }
                    }
                }
            }
        }
        let mut new_id = vec![usize::MAX; self.node_count()];
        let mut links = Vec::with_capacity((self.node_count() - self.n) / 2);
        let mut next = self.n;
        for &c in &order {
            for &id in &self.components[c].nodes {
                if self.is_marker(id) {
                    new_id[id] = next;
                    next += 1;
                    let t = new_id[self.twin(id)];
                    if t != usize::MAX {
                        links.push((t, new_id[id]));
                    }
                }
            }
        }
        let parts = order
            .iter()
            .map(|&c| {
                let comp = &self.components[c];
                let nodes = comp.nodes.iter().map(|&id| if id < self.n { id } else { new_id[id] }).collect();
                (nodes, comp.graph.clone())
            })
            .collect();
        SplitTree::from_parts(self.n, parts, &links).expect("relabeling keeps a valid tree")
    }

    /// Largest prime component order, floored at 2.
    pub fn split_width(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Prime)
            .map(|c| c.nodes.len())
            .max()
            .unwrap_or(0)
            .max(2)
    }

    fn is_forest(&self) -> bool {
        let k = self.components.len();
        let mut seen = vec![false; k];
        let mut edges = 0usize;
        let mut comps = 0usize;
        for c in 0..k {
            if seen[c] {
                continue;
            }
            comps += 1;
            seen[c] = true;
            let mut stack = vec![c];
            while let Some(x) = stack.pop() {
                for &id in &self.components[x].nodes {
                    if self.is_marker(id) {
                        if id < self.twin(id) {
                            edges += 1;
                        }
                        let y = self.home[self.twin(id)].0;
                        if !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
        }
        edges + comps == k
    }

    /// Rebuilds the graph on the original vertices: `u`, `v` are adjacent
    /// iff an alternating chain of component edges joins them.
    pub fn recompose(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.n];
        for u in 0..self.n {
            let (c, i) = self.home[u];
            let mut stack: Vec<(usize, usize)> = vec![(c, i)];
            while let Some((c, i)) = stack.pop() {
                let comp = &self.components[c];
                for &j in comp.graph.neighbors(i) {
                    let id = comp.nodes[j];
                    if id < self.n {
                        adj[u].push(id);
                    } else {
                        stack.push(self.home[self.twin(id)]);
                    }
                }
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Checks recomposition against `g`, degenerate tags, and that prime
    /// components of at most `prime_check_cap` vertices have no split.
    pub fn validate(&self, g: &Graph, prime_check_cap: usize) -> Result<(), String> {
        if self.recompose() != *g {
            return Err("recomposition differs from the graph".into());
        }
        for (ci, c) in self.components.iter().enumerate() {
            if c.graph.n() > 1 && !c.graph.is_connected() {
                return Err(format!("component {ci} disconnected"));
            }
            match (c.kind, classify_degenerate(&c.graph)) {
                (ComponentKind::Prime, Some(_)) => return Err(format!("component {ci} is degenerate")),
                (ComponentKind::Prime, None) => {
                    if c.nodes.len() <= prime_check_cap && find_split(&c.graph).is_some() {
                        return Err(format!("prime component {ci} has a split"));
                    }
                }
                (k, Some(d)) if k == d => {}
                _ => return Err(format!("component {ci} mis-tagged")),
            }
        }
        Ok(())
    }

    /// True when no two linked degenerate components could be merged.
    pub fn is_reduced(&self) -> bool {
        self.links().into_iter().all(|(a, b)| !self.mergeable(a, b))
    }

    fn mergeable(&self, a: usize, b: usize) -> bool {
        let (ca, ia) = self.home[a];
        let (cb, ib) = self.home[b];
        match (self.components[ca].kind, self.components[cb].kind) {
            (ComponentKind::Complete, ComponentKind::Complete) => true,
            (ComponentKind::Star { center: x }, ComponentKind::Star { center: y }) => {
                (ia == x) != (ib == y)
            }
            _ => false,
        }
    }

    /// JSON view: original vertex count, components with kinds, node lists
    /// and edges in node ids, and marker links.
    pub fn to_json(&self) -> serde_json::Value {
        let comps: Vec<_> = self
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let kind = match c.kind {
                    ComponentKind::Prime => "prime",
                    ComponentKind::Star { .. } => "star",
                    ComponentKind::Complete => "complete",
                };
                let edges: Vec<_> = c.graph.edges().map(|(u, v)| (c.nodes[u], c.nodes[v])).collect();
                let mut obj = serde_json::json!({
                    "id": i, "kind": kind, "nodes": c.nodes, "edges": edges,
                });
                if let ComponentKind::Star { center } = c.kind {
                    obj["center"] = serde_json::json!(c.nodes[center]);
                }
                obj
            })
            .collect();
        serde_json::json!({ "n": self.n, "components": comps, "links": self.links() })
    }

    /// Builds a tree from its JSON view.
    pub fn from_json(v: &serde_json::Value) -> Result<SplitTree, SplitTreeError> {
        let err = |m: &str| SplitTreeError(m.to_string());
        let n = v["n"].as_u64().ok_or_else(|| err("missing n"))? as usize;
        let mut parts = Vec::new();
        for c in v["components"].as_array().ok_or_else(|| err("missing components"))? {
            let nodes: Vec<usize> = serde_json::from_value(c["nodes"].clone()).map_err(|e| err(&e.to_string()))?;
            let edges: Vec<(usize, usize)> =
                serde_json::from_value(c["edges"].clone()).map_err(|e| err(&e.to_string()))?;
            let pos = |id: usize| nodes.iter().position(|&x| x == id).ok_or_else(|| err("edge node"));
            let mut local = Vec::new();
            for (a, b) in edges {
                local.push((pos(a)?, pos(b)?));
            }
            let g = Graph::from_edges(nodes.len(), &local).map_err(|e| err(&e.to_string()))?;
            parts.push((nodes, g));
        }
        let links: Vec<(usize, usize)> =
            serde_json::from_value(v["links"].clone()).map_err(|e| err(&e.to_string()))?;
        SplitTree::from_parts(n, parts, &links)
    }
}

/// `Complete` for `K_1`, `K_2` and larger cliques, `Star` for stars with at
/// least two leaves, `None` otherwise.
pub(crate) fn classify_degenerate(g: &Graph) -> Option<ComponentKind> {
    let n = g.n();
    if g.m() == n * n.saturating_sub(1) / 2 {
        return Some(ComponentKind::Complete);
    }
    if n >= 3 && g.m() == n - 1 {
        if let Some(c) = (0..n).find(|&v| g.degree(v) == n - 1) {
            return Some(ComponentKind::Star { center: c });
        }
    }
    None
}

/// A split `(A, B)` of the connected graph `g` given as the sorted side
/// containing the vertex of minimum degree, or `None`.
pub fn find_split(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 4 || !g.is_connected() {
        return None;
    }
    let v0 = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut cl = Closure::new(n);
    // v0 has a neighbor d across the split.
    for &d in g.neighbors(v0) {
        let mut seeds: Vec<usize> =
            g.neighbors(v0).iter().chain(g.neighbors(d)).copied().filter(|&a| a != v0 && a != d).collect();
        seeds.sort_unstable();
        seeds.dedup();
        for a in seeds {
            if let Some(side) = cl.run(g, &[v0, a], Some(v0), d) {
                return Some(side);
            }
        }
    }
    // v0 has no neighbor across the split.
    let mut near = vec![false; n];
    near[v0] = true;
    for &w in g.neighbors(v0) {
        near[w] = true;
    }
    for d in 0..n {
        if near[d] {
            continue;
        }
        let mut seeds = vec![v0];
        seeds.extend_from_slice(g.neighbors(v0));
        if let Some(side) = cl.run(g, &seeds, None, d) {
            return Some(side);
        }
    }
    None
}

/// Smallest split side containing the seeds, with `d` on the other side
/// and, when given, `c ∈ N(d)` on the seed side.
struct Closure {
    in_a: Vec<bool>,
    queue: VecDeque<usize>,
    touched: Vec<usize>,
}

impl Closure {
    fn new(n: usize) -> Self {
        Closure { in_a: vec![false; n], queue: VecDeque::new(), touched: Vec::new() }
    }

    fn run(&mut self, g: &Graph, seeds: &[usize], c: Option<usize>, d: usize) -> Option<Vec<usize>> {
        for &t in &self.touched {
            self.in_a[t] = false;
        }
        self.touched.clear();
        self.queue.clear();
        let n = g.n();
        let mut c = c;
        let mut size = 0usize;
        let ok = 'outer: {
            for &s in seeds {
                if s == d {
                    break 'outer false;
                }
                if !self.in_a[s] {
                    self.in_a[s] = true;
                    self.touched.push(s);
                    self.queue.push_back(s);
                    size += 1;
                }
            }
            while let Some(v) = self.queue.pop_front() {
                let v_sees_d = g.has_edge(v, d);
                let mut forced: Vec<usize> = Vec::new();
                if !v_sees_d {
                    forced.extend(g.neighbors(v).iter().copied().filter(|&b| !self.in_a[b]));
                } else {
                    match c {
                        None => {
                            c = Some(v);
                            // Earlier members see nothing across; nothing to
                            // compare against yet.
                        }
                        Some(cc) => {
                            for &b in g.neighbors(v) {
                                if !self.in_a[b] && !g.has_edge(b, cc) {
                                    forced.push(b);
                                }
                            }
                            for &b in g.neighbors(cc) {
                                if !self.in_a[b] && !g.has_edge(b, v) {
                                    forced.push(b);
                                }
                            }
                        }
                    }
                }
                for b in forced {
                    if b == d {
                        break 'outer false;
                    }
                    if !self.in_a[b] {
                        self.in_a[b] = true;
                        self.touched.push(b);
                        self.queue.push_back(b);
                        size += 1;
                    }
                }
                if n - size < 2 {
                    break 'outer false;
                }
            }
            true
        };
        if !ok || size < 2 || n - size < 2 {
            return None;
        }
        let mut side: Vec<usize> = self.touched.clone();
        side.sort_unstable();
        Some(side)
    }
}

/// Canonical split decomposition. Disconnected inputs yield a forest with
/// one tree per connected component.
///
/// ```
/// use polykern::decomp::{split_decomposition, ComponentKind};
/// use polykern::graph::Graph;
/// let st = split_decomposition(&Graph::cycle(5));
/// assert_eq!(st.components().len(), 1);
/// assert_eq!(st.components()[0].kind, ComponentKind::Prime);
/// assert_eq!(st.split_width(), 5);
/// ```
pub fn split_decomposition(g: &Graph) -> SplitTree {
    let n = g.n();
    let mut pieces: Vec<(Vec<usize>, Graph)> = Vec::new();
    let mut links: Vec<(usize, usize)> = Vec::new();
    let mut next_marker = n;
    let mut work: Vec<(Vec<usize>, Graph)> = Vec::new();
    for comp in g.components() {
        let h = g.induced(&comp);
        work.push((comp, h));
    }
    work.reverse();
    while let Some((ids, h)) = work.pop() {
        if classify_degenerate(&h).is_some() {
            pieces.push((ids, h));
            continue;
        }
        let Some(side_a) = find_split(&h) else {
            pieces.push((ids, h));
            continue;
        };
        let k = h.n();
        let mut in_a = vec![false; k];
        for &v in &side_a {
            in_a[v] = true;
        }
        let side_b: Vec<usize> = (0..k).filter(|&v| !in_a[v]).collect();
        let (ma, mb) = (next_marker, next_marker + 1);
        next_marker += 2;
        links.push((ma, mb));
        for (side, marker) in [(&side_a, ma), (&side_b, mb)] {
            let mut sub_ids: Vec<usize> = side.iter().map(|&v| ids[v]).collect();
            let mut sub = h.induced(side);
            let attach: Vec<usize> = side
                .iter()
                .enumerate()
                .filter(|&(_, &v)| h.neighbors(v).iter().any(|&w| in_a[w] != in_a[v]))
                .map(|(i, _)| i)
                .collect();
            sub = add_vertex(&sub, &attach);
            sub_ids.push(marker);
            work.push((sub_ids, sub));
        }
    }
    let tree = SplitTree::from_parts(n, pieces, &links).expect("decomposition yields a valid tree");
    reduce(tree).bfs_ordered()
}

/// `g` plus a new last vertex adjacent to `attach`.
fn add_vertex(g: &Graph, attach: &[usize]) -> Graph {
    let k = g.n();
    let mut adj: Vec<Vec<usize>> = (0..k).map(|v| g.neighbors(v).to_vec()).collect();
    adj.push(attach.to_vec());
    for &a in attach {
        adj[a].push(k);
    }
    Graph::from_adjacency(adj)
}

/// Merges linked degenerate components of the same kind until none remain,
/// then renumbers markers densely.
fn reduce(tree: SplitTree) -> SplitTree {
    let n = tree.n;
    let mut comps: Vec<Option<(Vec<usize>, Graph)>> =
        tree.components.iter().map(|c| Some((c.nodes.clone(), c.graph.clone()))).collect();
    let mut twin: std::collections::HashMap<usize, usize> =
        (n..tree.node_count()).map(|m| (m, tree.twin(m))).collect();
    let mut home: std::collections::HashMap<usize, usize> =
        (0..tree.node_count()).map(|id| (id, tree.home(id).0)).collect();
    loop {
        let mut merged = false;
        let mut keys: Vec<usize> = twin.keys().copied().filter(|&a| a < twin[&a]).collect();
        keys.sort_unstable();
        for a in keys {
            let Some(&b) = twin.get(&a) else { continue };
            let (ca, cb) = (home[&a], home[&b]);
            let (na, ga) = comps[ca].as_ref().unwrap();
            let (nb, gb) = comps[cb].as_ref().unwrap();
            let ia = na.iter().position(|&x| x == a).unwrap();
            let ib = nb.iter().position(|&x| x == b).unwrap();
            let ok = match (classify_degenerate(ga), classify_degenerate(gb)) {
                (Some(ComponentKind::Complete), Some(ComponentKind::Complete)) => true,
                (Some(ComponentKind::Star { center: x }), Some(ComponentKind::Star { center: y })) => {
                    (ia == x) != (ib == y)
                }
                _ => false,
            };
            if !ok {
                continue;
            }
            let (nodes, graph) = merge_at(na, ga, ia, nb, gb, ib);
            for &id in &nodes {
                home.insert(id, ca);
            }
            comps[ca] = Some((nodes, graph));
            comps[cb] = None;
            twin.remove(&a);
            twin.remove(&b);
            home.remove(&a);
            home.remove(&b);
            merged = true;
        }
        if !merged {
            break;
        }
    }
    // Renumber surviving markers densely, preserving their relative order.
    let mut old: Vec<usize> = twin.keys().copied().collect();
    old.sort_unstable();
    let remap: std::collections::HashMap<usize, usize> =
        old.iter().enumerate().map(|(i, &m)| (m, n + i)).collect();
    let map = |id: usize| if id < n { id } else { remap[&id] };
    let parts: Vec<(Vec<usize>, Graph)> = comps
        .into_iter()
        .flatten()
        .map(|(nodes, g)| (nodes.into_iter().map(map).collect(), g))
        .collect();
    let links: Vec<(usize, usize)> =
        old.iter().filter(|&&a| a < twin[&a]).map(|&a| (map(a), map(twin[&a]))).collect();
    SplitTree::from_parts(n, parts, &links).expect("reduction keeps a valid tree")
}

/// Component obtained by undoing the split at markers `na[ia]`, `nb[ib]`.
fn merge_at(na: &[usize], ga: &Graph, ia: usize, nb: &[usize], gb: &Graph, ib: usize) -> (Vec<usize>, Graph) {
    let keep_a: Vec<usize> = (0..na.len()).filter(|&i| i != ia).collect();
    let keep_b: Vec<usize> = (0..nb.len()).filter(|&i| i != ib).collect();
    let mut nodes: Vec<usize> = keep_a.iter().map(|&i| na[i]).collect();
    nodes.extend(keep_b.iter().map(|&i| nb[i]));
    let off = keep_a.len();
    let pa = |i: usize| keep_a.iter().position(|&x| x == i).unwrap();
    let pb = |i: usize| off + keep_b.iter().position(|&x| x == i).unwrap();
    let mut edges = Vec::new();
    for (u, v) in ga.edges() {
        if u != ia && v != ia {
            edges.push((pa(u), pa(v)));
        }
    }
    for (u, v) in gb.edges() {
        if u != ib && v != ib {
            edges.push((pb(u), pb(v)));
        }
    }
    for &x in ga.neighbors(ia) {
        for &y in gb.neighbors(ib) {
            edges.push((pa(x), pb(y)));
        }
    }
    (nodes.clone(), Graph::from_edges(nodes.len(), &edges).expect("merge edges valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(g: &Graph) -> SplitTree {
        let st = split_decomposition(g);
        st.validate(g, 64).unwrap();
        assert!(st.is_reduced());
        st
    }

    #[test]
    fn degenerate_shapes() {
        assert_eq!(classify_degenerate(&Graph::complete(1)), Some(ComponentKind::Complete));
        assert_eq!(classify_degenerate(&Graph::complete(2)), Some(ComponentKind::Complete));
        assert_eq!(classify_degenerate(&Graph::star(2)), Some(ComponentKind::Star { center: 0 }));
        assert_eq!(classify_degenerate(&Graph::path(4)), None);
    }

    #[test]
    fn c5_is_prime_and_p4_splits() {
        let st = check(&Graph::cycle(5));
        assert_eq!(st.components().len(), 1);
        assert!(find_split(&Graph::cycle(6)).is_none());
        let st = check(&Graph::path(4));
        assert_eq!(st.components().len(), 2);
        assert!(st.components().iter().all(|c| matches!(c.kind, ComponentKind::Star { .. })));
    }

    #[test]
    fn trees_give_stars() {
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (1, 4), (4, 5), (4, 6), (6, 7)]).unwrap();
        let st = check(&g);
        assert!(st.components().iter().all(|c| matches!(c.kind, ComponentKind::Star { .. })));
        assert_eq!(st.split_width(), 2);
    }

    #[test]
    fn two_halves_across_a_split() {
        // Two C5's; vertices 0,1 of the first are joined to 5,6 of the second.
        let mut edges = Vec::new();
        for base in [0, 5] {
            for i in 0..5 {
                edges.push((base + i, base + (i + 1) % 5));
            }
        }
        for a in [0, 1] {
            for b in [5, 6] {
                edges.push((a, b));
            }
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        let st = check(&g);
        assert_eq!(st.links().len(), 1);
        assert_eq!(st.components().len(), 2);
        assert_eq!(st.split_width(), 6);
    }

    #[test]
    fn complete_and_forest() {
        let st = check(&Graph::complete(6));
        assert_eq!(st.components().len(), 1);
        let g = Graph::path(3).disjoint_union(&Graph::cycle(5)).disjoint_union(&Graph::empty(1));
        let st = check(&g);
        assert_eq!(st.components().len(), 3);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        let st = check(&g);
        let back = SplitTree::from_json(&st.to_json()).unwrap();
        assert_eq!(back, st);
    }

    #[test]
    fn random_graphs_recompose() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..150 {
            let n = rng.gen_range(1..12);
            let p = rng.gen_range(0.15..0.7);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            check(&g);
        }
    }

    #[test]
    fn bfs_order_puts_parents_first_and_keeps_the_graph() {
        let g = crate::graph::generate::gen_family(&crate::graph::generate::FamilySpec::DistanceHereditary { n: 60 }, 5)
            .unwrap()
            .graph
            .disjoint_union(&Graph::cycle(5));
        let st = check(&g);
        let again = st.bfs_ordered();
        assert_eq!(again, st);
        // Every component except a root links to an earlier one, and marker
        // ids grow with the component.
        let mut last_marker = 0;
        for (c, comp) in st.components().iter().enumerate() {
            let markers: Vec<usize> = comp.nodes.iter().copied().filter(|&id| st.is_marker(id)).collect();
            let earlier = markers.iter().filter(|&&m| st.home(st.twin(m)).0 < c).count();
            assert!(earlier <= 1, "component {c}");
            for m in markers {
                assert!(m > last_marker);
                last_marker = m;
            }
        }
        let roots = (0..st.components().len())
            .filter(|&c| st.components()[c].nodes.iter().all(|&id| !st.is_marker(id) || st.home(st.twin(id)).0 > c))
            .count();
        assert_eq!(roots, 2);
    }
}
