//! Edmonds' blossom algorithm: augmenting-path search and maximum matching.

use super::{Matching, MatchingError};
use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    mate: &'a [usize],
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, mate: &'a [usize]) -> Self {
        let n = g.n();
        Search {
            g,
            mate,
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            blossom: vec![false; n],
            queue: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for i in 0..self.g.n() {
            self.parent[i] = NONE;
            self.base[i] = i;
            self.used[i] = false;
        }
        self.queue.clear();
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.blossom[self.base[v]] = true;
            self.blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Alternating path from `root` to another exposed vertex, listed from
    /// the far end back to `root`.
    fn from_root(&mut self, root: usize) -> Option<Vec<usize>> {
        self.reset();
        self.used[root] = true;
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for i in 0..self.g.neighbors(v).len() {
                let to = self.g.neighbors(v)[i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..self.g.n() {
                        if self.blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        let mut path = Vec::new();
                        let mut x = to;
                        while x != NONE {
                            let px = self.parent[x];
                            path.push(x);
                            path.push(px);
                            x = self.mate[px];
                        }
                        return Some(path);
                    }
                    let mt = self.mate[to];
                    self.used[mt] = true;
                    self.queue.push(mt);
                }
            }
        }
        None
    }
}

fn raw_mates(f: &Matching) -> Vec<usize> {
    (0..f.n()).map(|v| f.mate(v).unwrap_or(NONE)).collect()
}

/// Finds an `f`-augmenting path in `g`, or `None` exactly when `f` is
/// maximum.
///
/// The path is a vertex sequence whose ends are exposed and whose edges
/// alternate between non-matching and matching edges.
///
/// ```
/// use polykern::graph::Graph;
/// use polykern::matching::{find_augmenting_path, Matching};
/// let p3 = Graph::path(3);
/// let path = find_augmenting_path(&p3, &Matching::new(3)).unwrap().unwrap();
/// assert_eq!(path.len(), 2);
/// ```
pub fn find_augmenting_path(g: &Graph, f: &Matching) -> Result<Option<Vec<usize>>, MatchingError> {
    f.validate(g)?;
    let mate = raw_mates(f);
    let mut search = Search::new(g, &mate);
    for root in 0..g.n() {
        if mate[root] == NONE && g.degree(root) > 0 {
            if let Some(path) = search.from_root(root) {
                return Ok(Some(path));
            }
        }
    }
    Ok(None)
}

/// Maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut mate = vec![NONE; n];
    for v in 0..n {
        if mate[v] == NONE {
            if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w] == NONE) {
                mate[v] = w;
                mate[w] = v;
            }
        }
    }
    grow_to_maximum(g, &mut mate);
    Matching::from_raw(mate)
}

/// Augments `mate` until maximum. Roots that fail once never succeed later.
fn grow_to_maximum(g: &Graph, mate: &mut [usize]) {
    for root in 0..g.n() {
        if mate[root] != NONE || g.degree(root) == 0 {
            continue;
        }
        let path = {
            let mut search = Search::new(g, mate);
            search.from_root(root)
        };
        if let Some(path) = path {
            for pair in path.chunks(2) {
                mate[pair[0]] = pair[1];
                mate[pair[1]] = pair[0];
            }
        }
    }
}

/// Extends `f` to a maximum matching of `g`.
pub fn complete_to_maximum(g: &Graph, f: &Matching) -> Matching {
    let mut mate = raw_mates(f);
    grow_to_maximum(g, &mut mate);
    Matching::from_raw(mate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::augment;

    fn brute_force(g: &Graph) -> usize {
        let edges: Vec<_> = g.edges().collect();
        fn go(i: usize, edges: &[(usize, usize)], used: &mut [bool]) -> usize {
            if i == edges.len() {
                return 0;
            }
            let mut best = go(i + 1, edges, used);
            let (u, v) = edges[i];
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                best = best.max(1 + go(i + 1, edges, used));
                used[u] = false;
                used[v] = false;
            }
            best
        }
        go(0, &edges, &mut vec![false; g.n()])
    }

    #[test]
    fn petersen_is_perfect_by_exhaustive_search() {
        let g = Graph::petersen();
        assert_eq!(brute_force(&g), 5);
        assert_eq!(maximum_matching(&g).cardinality(), 5);
    }

    #[test]
    fn one_matched_edge_needs_a_length_three_path() {
        // On C4 the two exposed vertices are adjacent; on P4 they are not.
        let f = Matching::from_pairs(4, &[(1, 2)]).unwrap();
        let c4 = Graph::cycle(4);
        let path = find_augmenting_path(&c4, &f).unwrap().unwrap();
        assert_eq!(augment(&c4, &f, &path).unwrap().cardinality(), 2);
        assert!(augment(&c4, &f, &[0, 1, 2, 3]).is_ok());
        let p4 = Graph::path(4);
        let path = find_augmenting_path(&p4, &f).unwrap().unwrap();
        assert_eq!(path.len(), 4);
        assert_eq!(augment(&p4, &f, &path).unwrap().cardinality(), 2);
    }

    #[test]
    fn blossom_contraction_is_needed() {
        // C5 on 0..5 with a pendant 5 attached to 0; matched {1,2}, {3,4}.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let f = Matching::from_pairs(6, &[(1, 2), (3, 4)]).unwrap();
        assert_eq!(find_augmenting_path(&g, &f).unwrap(), Some(vec![5, 0]));
        // Pendant exposed behind the blossom: 6 hangs off 2.
        let g = Graph::from_edges(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (2, 6)],
        )
        .unwrap();
        let f = Matching::from_pairs(7, &[(0, 5), (1, 2), (3, 4)]).unwrap();
        assert!(find_augmenting_path(&g, &f).unwrap().is_none());
        let f = Matching::from_pairs(7, &[(0, 1), (3, 4)]).unwrap();
        let path = find_augmenting_path(&g, &f).unwrap().unwrap();
        let f2 = augment(&g, &f, &path).unwrap();
        assert_eq!(f2.cardinality(), brute_force(&g));
    }

    #[test]
    fn random_graphs_match_exhaustive_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..11);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let m = maximum_matching(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.cardinality(), brute_force(&g));
            assert!(find_augmenting_path(&g, &m).unwrap().is_none());
        }
    }
}
