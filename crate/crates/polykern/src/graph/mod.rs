//! Simple undirected graphs, distances, exact numeric types, brute-force
//! oracles and structured generators.

mod distance;
pub mod generate;
pub mod io;
mod numeric;
pub mod oracle;

pub use distance::Distance;
pub use generate::{gen_family, substitute, Annotations, FamilySpec, Instance};
pub use numeric::{rational_to_string, HalfInteger, Rational};
pub use oracle::{
    bfs_distances, oracle_betweenness, oracle_cycle_stats, oracle_eccentricities,
    oracle_hyperbolicity, oracle_hyperbolicity_capped, oracle_maximum_matching, CycleStats,
    OracleError, DEFAULT_HYPERBOLICITY_CAP,
};

use thiserror::Error;

/// Errors raised while constructing a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    /// An edge endpoint is not a vertex of the graph.
    #[error("edge {index}: endpoint {vertex} out of range for n = {n}")]
    OutOfRange {
        /// Position of the offending edge in the input sequence.
        index: usize,
        /// The offending endpoint.
        vertex: usize,
        /// Vertex count.
        n: usize,
    },
    /// An edge joins a vertex to itself.
    #[error("edge {index}: self-loop on vertex {vertex}")]
    SelfLoop {
        /// Position of the offending edge in the input sequence.
        index: usize,
        /// The looped vertex.
        vertex: usize,
    },
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Every adjacency list is strictly increasing and the adjacency relation is
/// symmetric.
#[derive(Clone, PartialEq, Eq, Hash, Default, serde::Serialize, serde::Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Serialized form of a [`Graph`]: order plus sorted edge list.
#[derive(serde::Serialize, serde::Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr { n: g.n(), edges: g.edges().collect() }
    }
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = GraphError;
    fn try_from(r: EdgeListRepr) -> Result<Graph, GraphError> {
        Graph::from_edges(r.n, &r.edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Result of [`build_graph`]: the graph and how many duplicate input edges
/// were collapsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuiltGraph {
    /// The canonical graph.
    pub graph: Graph,
    /// Number of input edges that repeated an earlier edge.
    pub duplicate_edges: usize,
}

impl BuiltGraph {
    /// True when at least one duplicate edge was dropped.
    pub fn has_duplicates(&self) -> bool {
        self.duplicate_edges > 0
    }
}

/// Builds a canonical graph from an edge sequence, collapsing duplicates.
///
/// ```
/// use polykern::graph::build_graph;
/// let built = build_graph(3, &[(0, 1), (1, 0)]).unwrap();
/// assert_eq!(built.graph.m(), 1);
/// assert!(built.has_duplicates());
/// assert!(build_graph(2, &[(0, 0)]).is_err());
/// ```
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<BuiltGraph, GraphError> {
    let mut adj = vec![Vec::new(); n];
    for (index, &(u, v)) in edges.iter().enumerate() {
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange { index, vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { index, vertex: u });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut twice = 0;
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
        twice += list.len();
    }
    let m = twice / 2;
    Ok(BuiltGraph { graph: Graph { adj, m }, duplicate_edges: edges.len() - m })
}

impl Graph {
    /// Builds a graph, rejecting bad endpoints and silently collapsing
    /// duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        build_graph(n, edges).map(|b| b.graph)
    }

    /// Builds a graph from adjacency lists that are already symmetric.
    /// Lists are sorted and deduplicated; self-loops are dropped.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut twice = 0;
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            list.retain(|&w| w != v);
            twice += list.len();
        }
        debug_assert!(adj.iter().enumerate().all(|(v, l)| l.iter().all(|&w| adj[w].binary_search(&v).is_ok())));
        Graph { adj, m: twice / 2 }
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let adj = (0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    /// The path `P_n` on vertices `0, 1, ..., n-1` in order.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// The cycle `C_n` (`n >= 3`) on vertices `0, 1, ..., n-1` in order.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    /// The star `K_{1,leaves}` with center `0`.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("valid star")
    }

    /// The complete bipartite graph `K_{a,b}`; the first side is `0..a`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).expect("valid bipartite graph")
    }

    /// The Petersen graph.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("valid Petersen graph")
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Edge count.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Whether `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = std::collections::HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            pos.insert(v, i);
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut l: Vec<usize> =
                    self.adj[v].iter().filter_map(|w| pos.get(w).copied()).collect();
                l.sort_unstable();
                l
            })
            .collect::<Vec<_>>();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut l = Vec::with_capacity(n - 1 - self.adj[v].len());
            let mut it = self.adj[v].iter().peekable();
            for w in 0..n {
                if it.peek() == Some(&&w) {
                    it.next();
                } else if w != v {
                    l.push(w);
                }
            }
            adj.push(l);
        }
        let m = n * n.saturating_sub(1) / 2 - self.m;
        Graph { adj, m }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (v, l) in self.adj.iter().enumerate() {
            adj[perm[v]] = l.iter().map(|&w| perm[w]).collect();
            adj[perm[v]].sort_unstable();
        }
        Graph { adj, m: self.m }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    /// The disjoint union of `self` and `other`; `other`'s vertices are
    /// shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + off).collect()));
        Graph { adj, m: self.m + other.m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_and_c5() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, Graph::cycle(5));
        assert!(c5.neighbors(0) == [1, 4]);
    }

    #[test]
    fn duplicates_are_flagged() {
        let b = build_graph(3, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(b.graph.m(), 1);
        assert_eq!(b.duplicate_edges, 1);
    }

    #[test]
    fn bad_edges_report_index() {
        assert_eq!(
            build_graph(3, &[(0, 1), (1, 3)]),
            Err(GraphError::OutOfRange { index: 1, vertex: 3, n: 3 })
        );
        assert_eq!(build_graph(3, &[(2, 2)]), Err(GraphError::SelfLoop { index: 0, vertex: 2 }));
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c = Graph::cycle(5).complement();
        assert_eq!(c.m(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(Graph::complete(4).complement().m(), 0);
    }

    #[test]
    fn induced_keeps_order() {
        let p = Graph::path(5);
        let h = p.induced(&[4, 3, 1]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn components_and_union() {
        let g = Graph::path(2).disjoint_union(&Graph::cycle(3));
        assert_eq!(g.components(), vec![vec![0, 1], vec![2, 3, 4]]);
        assert!(!g.is_connected());
        assert_eq!(Graph::petersen().m(), 15);
    }
}
