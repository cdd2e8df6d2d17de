//! Modular decomposition by recursive component / co-component splitting
//! and, at prime nodes, partition refinement around a pivot vertex.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Kind of an [`MDTree`] node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MdKind {
    /// A single vertex.
    Leaf(usize),
    /// Children pairwise non-adjacent.
    Parallel,
    /// Children pairwise completely joined.
    Series,
    /// Quotient has only trivial modules.
    Prime,
}

/// A node of an [`MDTree`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MdNode {
    /// Node kind.
    pub kind: MdKind,
    /// Child node ids; child `i` is quotient vertex `i`.
    pub children: Vec<usize>,
    /// Sorted vertex set of the module.
    pub vertices: Vec<usize>,
    /// Quotient graph over the children (internal nodes only).
    pub quotient: Option<Graph>,
}

/// Modular decomposition tree.
///
/// ```
/// use polykern::decomp::{modular_decomposition, MdKind};
/// use polykern::graph::Graph;
/// let md = modular_decomposition(&Graph::path(4));
/// assert_eq!(md.kind(md.root()), MdKind::Prime);
/// assert_eq!(md.modular_width(), 4);
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MDTree {
    nodes: Vec<MdNode>,
    root: usize,
    leaf_of: Vec<usize>,
}

impl MDTree {
    /// Root node id (`None`-free: the empty graph has no tree).
    pub fn root(&self) -> usize {
        self.root
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// True when the tree has no nodes.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Node by id.
    pub fn node(&self, id: usize) -> &MdNode {
        &self.nodes[id]
    }

    /// Node kind.
    pub fn kind(&self, id: usize) -> MdKind {
        self.nodes[id].kind
    }

    /// Child ids.
    pub fn children(&self, id: usize) -> &[usize] {
        &self.nodes[id].children
    }

    /// Sorted vertex set of a node.
    pub fn vertices(&self, id: usize) -> &[usize] {
        &self.nodes[id].vertices
    }

    /// Quotient graph of an internal node (edgeless for parallel, complete
    /// for series nodes).
    pub fn quotient(&self, id: usize) -> Option<&Graph> {
        self.nodes[id].quotient.as_ref()
    }

    /// Leaf node of vertex `v`.
    pub fn leaf(&self, v: usize) -> usize {
        self.leaf_of[v]
    }

    /// Node ids with children before parents.
    pub fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        if self.nodes.is_empty() {
            return out;
        }
        let mut stack = vec![(self.root, false)];
        while let Some((id, done)) = stack.pop() {
            if done {
                out.push(id);
            } else {
                stack.push((id, true));
                for &c in self.nodes[id].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Largest prime-quotient order, floored at 2.
    pub fn modular_width(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| n.kind == MdKind::Prime)
            .map(|n| n.children.len())
            .max()
            .unwrap_or(0)
            .max(2)
    }

    /// One representative vertex per child of `id`.
    pub fn representatives(&self, id: usize) -> Vec<usize> {
        self.children(id).iter().map(|&c| self.nodes[c].vertices[0]).collect()
    }

    /// Checks the tree against `g`: leaves biject with vertices, every node
    /// is a module, children kinds and quotients are consistent.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        if n == 0 {
            return if self.nodes.is_empty() { Ok(()) } else { Err("nodes for empty graph".into()) };
        }
        if self.vertices(self.root).len() != n {
            return Err("root does not cover all vertices".into());
        }
        let mut leaves = vec![false; n];
        for node in &self.nodes {
            match node.kind {
                MdKind::Leaf(v) => {
                    if leaves[v] || node.vertices != [v] {
                        return Err(format!("bad leaf for {v}"));
                    }
                    leaves[v] = true;
                    continue;
                }
                _ => {
                    if node.children.len() < 2 {
                        return Err("internal node with fewer than two children".into());
                    }
                }
            }
            let mut seen = vec![false; n];
            let mut total = 0;
            for &c in &node.children {
                for &v in &self.nodes[c].vertices {
                    seen[v] = true;
                    total += 1;
                }
            }
            if total != node.vertices.len() || node.vertices.iter().any(|&v| !seen[v]) {
                return Err("children do not partition the node".into());
            }
            if !is_module(g, &node.vertices) {
                return Err(format!("node over {:?} is not a module", node.vertices));
            }
            let q = node.quotient.as_ref().ok_or("internal node lacks quotient")?;
            let reps = self.representatives_of(node);
            for i in 0..reps.len() {
                for j in i + 1..reps.len() {
                    let (ci, cj) = (&self.nodes[node.children[i]], &self.nodes[node.children[j]]);
                    let adj = g.has_edge(reps[i], reps[j]);
                    if adj != q.has_edge(i, j) {
                        return Err("quotient edge mismatch".into());
                    }
                    for &a in &ci.vertices {
                        for &b in &cj.vertices {
                            if g.has_edge(a, b) != adj {
                                return Err("children not uniformly joined".into());
                            }
                        }
                    }
                }
            }
            match node.kind {
                MdKind::Parallel if q.m() != 0 => return Err("parallel quotient has edges".into()),
                MdKind::Series if q.m() != q.n() * (q.n() - 1) / 2 => {
                    return Err("series quotient not complete".into())
                }
                MdKind::Prime if q.n() < 4 || !q.is_connected() || !q.complement().is_connected() => {
                    return Err("prime quotient degenerate".into())
                }
                _ => {}
            }
        }
        if leaves.iter().any(|&b| !b) {
            return Err("missing leaf".into());
        }
        Ok(())
    }

    fn representatives_of(&self, node: &MdNode) -> Vec<usize> {
        node.children.iter().map(|&c| self.nodes[c].vertices[0]).collect()
    }

    /// JSON view: nodes with kinds, children, vertex sets and quotient
    /// edges.
    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<_> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(id, n)| {
                let kind = match n.kind {
                    MdKind::Leaf(_) => "leaf",
                    MdKind::Parallel => "parallel",
                    MdKind::Series => "series",
                    MdKind::Prime => "prime",
                };
                let mut obj = serde_json::json!({
                    "id": id,
                    "kind": kind,
                    "children": n.children,
                    "vertices": n.vertices,
                });
                if n.kind == MdKind::Prime {
                    let edges: Vec<_> = n.quotient.as_ref().unwrap().edges().collect();
                    obj["quotient_edges"] = serde_json::json!(edges);
                }
                obj
            })
            .collect();
        serde_json::json!({ "root": self.root, "nodes": nodes })
    }
}

/// Whether `set` is a module of `g`.
pub fn is_module(g: &Graph, set: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut count = vec![0usize; g.n()];
    let mut touched = Vec::new();
    for &v in set {
        for &w in g.neighbors(v) {
            if !inside[w] {
                if count[w] == 0 {
                    touched.push(w);
                }
                count[w] += 1;
            }
        }
    }
    touched.iter().all(|&w| count[w] == set.len())
}

/// A module `M` with `1 < |M| < n`, if any.
pub(crate) fn nontrivial_module(g: &Graph) -> Option<Vec<usize>> {
    if g.n() < 3 {
        return None;
    }
    let md = modular_decomposition(g);
    let root = md.root();
    let kids = md.children(root);
    if let Some(&c) = kids.iter().find(|&&c| md.vertices(c).len() > 1) {
        return Some(md.vertices(c).to_vec());
    }
    if md.kind(root) != MdKind::Prime {
        let mut m: Vec<usize> = kids[..2].iter().flat_map(|&c| md.vertices(c).to_vec()).collect();
        m.sort_unstable();
        return Some(m);
    }
    None
}

/// Computes the modular decomposition of `g`.
pub fn modular_decomposition(g: &Graph) -> MDTree {
    let n = g.n();
    let mut tree = MDTree { nodes: Vec::new(), root: 0, leaf_of: vec![usize::MAX; n] };
    if n == 0 {
        return tree;
    }
    let mut scratch = Scratch::new(n);
    // (vertex set, parent node, position among parent's children)
    let mut work: Vec<(Vec<usize>, Option<(usize, usize)>)> = vec![((0..n).collect(), None)];
    while let Some((set, parent)) = work.pop() {
        let id = tree.nodes.len();
        let (kind, parts) = if set.len() == 1 {
            tree.leaf_of[set[0]] = id;
            (MdKind::Leaf(set[0]), Vec::new())
        } else {
            split_node(g, &set, &mut scratch)
        };
        let quotient = (!parts.is_empty()).then(|| {
            let reps: Vec<usize> = parts.iter().map(|p: &Vec<usize>| p[0]).collect();
            match kind {
                MdKind::Parallel => Graph::empty(reps.len()),
                MdKind::Series => Graph::complete(reps.len()),
                _ => g.induced(&reps),
            }
        });
        tree.nodes.push(MdNode { kind, children: vec![usize::MAX; parts.len()], vertices: set, quotient });
        match parent {
            Some((p, i)) => tree.nodes[p].children[i] = id,
            None => tree.root = id,
        }
        for (i, part) in parts.into_iter().enumerate().rev() {
            work.push((part, Some((id, i))));
        }
    }
    tree
}

struct Scratch {
    mark: Vec<u32>,
    stamp: u32,
    part_of: Vec<usize>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch { mark: vec![0; n], stamp: 0, part_of: vec![usize::MAX; n] }
    }

    fn next_stamp(&mut self) -> u32 {
        self.stamp += 1;
        self.stamp
    }
}

/// Kind of the node over `set` and its maximal strong modules, each sorted,
/// ordered by smallest vertex.
fn split_node(g: &Graph, set: &[usize], s: &mut Scratch) -> (MdKind, Vec<Vec<usize>>) {
    let comps = components_within(g, set, s, false);
    if comps.len() > 1 {
        return (MdKind::Parallel, comps);
    }
    let cocomps = components_within(g, set, s, true);
    if cocomps.len() > 1 {
        return (MdKind::Series, cocomps);
    }
    let mut parts = prime_children(g, set, s);
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_unstable_by_key(|p| p[0]);
    (MdKind::Prime, parts)
}

/// Components of `G[set]`, or of its complement when `co` is set.
fn components_within(g: &Graph, set: &[usize], s: &mut Scratch, co: bool) -> Vec<Vec<usize>> {
    let inside = s.next_stamp();
    for &v in set {
        s.mark[v] = inside;
    }
    let mut out = Vec::new();
    if !co {
        let seen = s.next_stamp();
        for &start in set {
            if s.mark[start] == seen {
                continue;
            }
            s.mark[start] = seen;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in g.neighbors(v) {
                    if s.mark[w] == inside {
                        s.mark[w] = seen;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
    } else {
        // Complement BFS keeping an explicit list of unvisited vertices.
        let mut unvisited: Vec<usize> = set.to_vec();
        let mut adj_mark = vec![false; 0];
        adj_mark.resize(g.n(), false);
        while let Some(start) = unvisited.pop() {
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in g.neighbors(v) {
                    adj_mark[w] = true;
                }
                let mut keep = Vec::with_capacity(unvisited.len());
                for &u in &unvisited {
                    if adj_mark[u] {
                        keep.push(u);
                    } else {
                        comp.push(u);
                    }
                }
                unvisited = keep;
                for &w in g.neighbors(v) {
                    adj_mark[w] = false;
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_unstable_by_key(|c| c[0]);
    }
    out
}

/// Maximal strong modules of a node whose graph and complement are both
/// connected.
fn prime_children(g: &Graph, set: &[usize], s: &mut Scratch) -> Vec<Vec<usize>> {
    let v = set[0];
    let parts = maximal_modules_avoiding(g, set, v, s);
    let k = parts.len();
    let adj = |a: usize, b: usize| g.has_edge(a, b);
    // Y -> Z when Z is adjacent to exactly one of v and Y.
    let mut dg = petgraph::graph::DiGraph::<(), ()>::with_capacity(k, 0);
    let ids: Vec<_> = (0..k).map(|_| dg.add_node(())).collect();
    for y in 0..k {
        for z in 0..k {
            if y != z && adj(parts[y][0], parts[z][0]) != adj(v, parts[z][0]) {
                dg.add_edge(ids[y], ids[z], ());
            }
        }
    }
    let sccs = petgraph::algo::tarjan_scc(&dg);
    let mut comp_of = vec![0usize; k];
    for (c, scc) in sccs.iter().enumerate() {
        for nid in scc {
            comp_of[nid.index()] = c;
        }
    }
    let mut has_incoming = vec![false; sccs.len()];
    for e in dg.raw_edges() {
        let (a, b) = (comp_of[e.source().index()], comp_of[e.target().index()]);
        if a != b {
            has_incoming[b] = true;
        }
    }
    let source = (0..sccs.len()).find(|&c| !has_incoming[c]).expect("condensation has a source");
    let mut out = Vec::new();
    let mut mv = vec![v];
    for (i, part) in parts.into_iter().enumerate() {
        if comp_of[i] == source {
            out.push(part);
        } else {
            mv.extend(part);
        }
    }
    out.push(mv);
    out
}

/// Partition of `set \ {v}` into the maximal modules of `G[set]` that avoid
/// `v`, by vertex-pivot refinement.
fn maximal_modules_avoiding(g: &Graph, set: &[usize], v: usize, s: &mut Scratch) -> Vec<Vec<usize>> {
    let inside = s.next_stamp();
    for &u in set {
        s.mark[u] = inside;
    }
    let mut parts: Vec<Vec<usize>> = Vec::new();
    {
        let mut near = Vec::new();
        let mut far = Vec::new();
        let vn = s.next_stamp();
        for &w in g.neighbors(v) {
            if s.mark[w] == inside {
                s.mark[w] = vn;
            }
        }
        for &u in set {
            if u == v {
                continue;
            }
            if s.mark[u] == vn {
                near.push(u);
            } else {
                far.push(u);
            }
        }
        // restore the inside stamp for later membership tests
        for &u in set {
            s.mark[u] = inside;
        }
        for p in [near, far] {
            if !p.is_empty() {
                parts.push(p);
            }
        }
    }
    for (i, p) in parts.iter().enumerate() {
        for &u in p {
            s.part_of[u] = i;
        }
    }
    let mut queued = vec![false; g.n()];
    let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
    for &u in set {
        if u != v {
            queue.push_back(u);
            queued[u] = true;
        }
    }
    let mut hits: Vec<usize> = Vec::new();
    let mut hit_count: Vec<usize> = Vec::new();
    while let Some(z) = queue.pop_front() {
        queued[z] = false;
        let zp = s.part_of[z];
        hits.clear();
        let nb_stamp = s.next_stamp();
        for &w in g.neighbors(z) {
            if w == v || s.mark[w] != inside {
                continue;
            }
            let p = s.part_of[w];
            if p == zp {
                continue;
            }
            if hit_count.len() < parts.len() {
                hit_count.resize(parts.len(), 0);
            }
            if hit_count[p] == 0 {
                hits.push(p);
            }
            hit_count[p] += 1;
            s.mark[w] = nb_stamp;
        }
        for &p in &hits {
            let c = hit_count[p];
            hit_count[p] = 0;
            if c == parts[p].len() {
                continue;
            }
            let (a, b): (Vec<usize>, Vec<usize>) = parts[p].iter().partition(|&&u| s.mark[u] == nb_stamp);
            let new_id = parts.len();
            for &u in &b {
                s.part_of[u] = new_id;
            }
            for &u in a.iter().chain(b.iter()) {
                if !queued[u] {
                    queued[u] = true;
                    queue.push_back(u);
                }
            }
            parts[p] = a;
            parts.push(b);
        }
        for &w in g.neighbors(z) {
            if s.mark[w] == nb_stamp {
                s.mark[w] = inside;
            }
        }
    }
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::substitute;

    fn prime_count(md: &MDTree) -> usize {
        (0..md.len()).filter(|&i| md.kind(i) == MdKind::Prime).count()
    }

    #[test]
    fn small_shapes() {
        let md = modular_decomposition(&Graph::empty(1));
        assert_eq!(md.kind(md.root()), MdKind::Leaf(0));
        let md = modular_decomposition(&Graph::complete(3));
        assert_eq!(md.kind(md.root()), MdKind::Series);
        assert_eq!(md.children(md.root()).len(), 3);
        let md = modular_decomposition(&Graph::empty(3));
        assert_eq!(md.kind(md.root()), MdKind::Parallel);
        let g = Graph::path(4);
        let md = modular_decomposition(&g);
        md.validate(&g).unwrap();
        assert_eq!(md.quotient(md.root()).unwrap(), &g);
    }

    #[test]
    fn cograph_has_no_prime_node() {
        // K_{2,3} joined with a triangle's complement.
        let g = substitute(&Graph::complete(2), &[Graph::empty(2), Graph::complete(3)]).unwrap();
        let md = modular_decomposition(&g);
        md.validate(&g).unwrap();
        assert_eq!(prime_count(&md), 0);
        assert_eq!(md.modular_width(), 2);
    }

    #[test]
    fn substitution_recovers_parts() {
        let parts = vec![Graph::complete(2); 5];
        let g = substitute(&Graph::cycle(5), &parts).unwrap();
        let md = modular_decomposition(&g);
        md.validate(&g).unwrap();
        assert_eq!(md.kind(md.root()), MdKind::Prime);
        let mut kids: Vec<Vec<usize>> =
            md.children(md.root()).iter().map(|&c| md.vertices(c).to_vec()).collect();
        kids.sort();
        assert_eq!(kids, (0..5).map(|i| vec![2 * i, 2 * i + 1]).collect::<Vec<_>>());
        assert_eq!(md.modular_width(), 5);
    }

    #[test]
    fn module_test() {
        let g = Graph::path(4);
        assert!(is_module(&g, &[1, 2, 3]) == false);
        assert!(is_module(&g, &[0, 1, 2, 3]));
        let s = Graph::star(3);
        assert!(is_module(&s, &[1, 2]));
    }

    #[test]
    fn nested_prime_nodes() {
        let inner = substitute(&Graph::path(4), &[Graph::empty(1), Graph::complete(2), Graph::empty(1), Graph::empty(2)])
            .unwrap();
        let parts = vec![inner, Graph::empty(1), Graph::complete(3), Graph::empty(1), Graph::path(4)];
        let g = substitute(&Graph::cycle(5), &parts).unwrap();
        let md = modular_decomposition(&g);
        md.validate(&g).unwrap();
        assert_eq!(prime_count(&md), 3);
    }
}
