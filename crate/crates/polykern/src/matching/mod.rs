//! Maximum matching: the blossom baseline, the witness-subgraph algorithm
//! over modular decompositions, and the structured algorithm for graphs
//! whose prime quotients are discs, spiders or spiked p-chains.

pub mod blossom;
mod joins;
mod modular;
mod qq3;
mod witness;

pub use blossom::find_augmenting_path;
pub use joins::{pending_module_rule, split_and_match, split_and_match_naive, PendingOutcome};
pub use modular::{max_matching_modular, max_matching_modular_with, ModularOptions, ModularStats};
pub use qq3::{
    match_disc, match_spider, max_matching_prime_ptree, max_matching_qq3, max_matching_qq3_with, Qq3Options,
    Qq3Stats, StructurePolicy,
};
pub use witness::{build_witness, reduce_module_edges, ModuleLayer, ModuleMatchBook, WitnessGraph, WitnessStats};

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised by matching operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    /// The mate map is not symmetric at `vertex`.
    #[error("mate map not symmetric at vertex {vertex}")]
    NotSymmetric {
        /// Offending vertex.
        vertex: usize,
    },
    /// A matched pair is not an edge of the host graph.
    #[error("matched pair ({u}, {v}) is not an edge")]
    NotAnEdge {
        /// First endpoint.
        u: usize,
        /// Second endpoint.
        v: usize,
    },
    /// A vertex appears in two pairs, or a pair is a loop.
    #[error("vertex {vertex} matched twice")]
    DoublyMatched {
        /// Offending vertex.
        vertex: usize,
    },
    /// Vertex counts of matching and graph differ.
    #[error("matching covers {matching} vertices, graph has {graph}")]
    SizeMismatch {
        /// Matching size.
        matching: usize,
        /// Graph size.
        graph: usize,
    },
    /// A path offered to [`augment`] is not augmenting.
    #[error("path is not augmenting: {0}")]
    NotAugmenting(String),
    /// A structural precondition failed.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A quotient violates the module-position constraints of its class.
    #[error("structure violation: {0}")]
    Structure(String),
}

/// A matching stored as a mate map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    /// The empty matching on `n` vertices.
    pub fn new(n: usize) -> Matching {
        Matching { mate: vec![None; n] }
    }

    fn from_raw(raw: Vec<usize>) -> Matching {
        Matching { mate: raw.into_iter().map(|x| (x != usize::MAX).then_some(x)).collect() }
    }

    /// Builds a matching from disjoint pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Matching, MatchingError> {
        let mut f = Matching::new(n);
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(MatchingError::SizeMismatch { matching: u.max(v) + 1, graph: n });
            }
            for w in [u, v] {
                if f.mate[w].is_some() || u == v {
                    return Err(MatchingError::DoublyMatched { vertex: w });
                }
            }
            f.mate[u] = Some(v);
            f.mate[v] = Some(u);
        }
        Ok(f)
    }

    /// Vertex count.
    pub fn n(&self) -> usize {
        self.mate.len()
    }

    /// Partner of `v`.
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Whether `v` is matched.
    pub fn is_matched(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    /// Whether `{u, v}` is a matched pair.
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.mate[u] == Some(v)
    }

    /// Number of matched pairs.
    pub fn cardinality(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect()
    }

    /// Adds `{u, v}`; both must be exposed.
    pub(crate) fn add(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && self.mate[u].is_none() && self.mate[v].is_none());
        self.mate[u] = Some(v);
        self.mate[v] = Some(u);
    }

    /// Removes the pair containing `u`, if any.
    pub(crate) fn remove(&mut self, u: usize) {
        if let Some(v) = self.mate[u].take() {
            self.mate[v] = None;
        }
    }

    /// Checks symmetry, disjointness and edge membership.
    pub fn validate(&self, g: &Graph) -> Result<(), MatchingError> {
        if self.n() != g.n() {
            return Err(MatchingError::SizeMismatch { matching: self.n(), graph: g.n() });
        }
        for (u, m) in self.mate.iter().enumerate() {
            if let Some(v) = *m {
                if v >= self.n() || self.mate[v] != Some(u) || v == u {
                    return Err(MatchingError::NotSymmetric { vertex: u });
                }
                if !g.has_edge(u, v) {
                    return Err(MatchingError::NotAnEdge { u: u.min(v), v: u.max(v) });
                }
            }
        }
        Ok(())
    }
}

/// Flips `f` along an augmenting `path`.
///
/// ```
/// use polykern::graph::Graph;
/// use polykern::matching::{augment, Matching};
/// let g = Graph::path(4);
/// let f = Matching::from_pairs(4, &[(1, 2)]).unwrap();
/// assert_eq!(augment(&g, &f, &[0, 1, 2, 3]).unwrap().cardinality(), 2);
/// assert!(augment(&g, &f, &[0, 1]).is_err());
/// ```
pub fn augment(g: &Graph, f: &Matching, path: &[usize]) -> Result<Matching, MatchingError> {
    check_augmenting(g, f, path)?;
    let mut out = f.clone();
    flip(&mut out, path);
    Ok(out)
}

pub(crate) fn check_augmenting(g: &Graph, f: &Matching, path: &[usize]) -> Result<(), MatchingError> {
    let bad = |m: &str| Err(MatchingError::NotAugmenting(m.into()));
    if path.len() < 2 || path.len() % 2 == 1 {
        return bad("length must be a positive even vertex count");
    }
    let mut seen = std::collections::HashSet::new();
    for &v in path {
        if v >= g.n() || !seen.insert(v) {
            return bad("vertices must be distinct and in range");
        }
    }
    if f.is_matched(path[0]) || f.is_matched(path[path.len() - 1]) {
        return bad("endpoints must be exposed");
    }
    for (i, w) in path.windows(2).enumerate() {
        if !g.has_edge(w[0], w[1]) {
            return bad("consecutive vertices must be adjacent");
        }
        if (i % 2 == 1) != f.contains(w[0], w[1]) {
            return bad("edges must alternate starting with a non-matching edge");
        }
    }
    Ok(())
}

pub(crate) fn flip(f: &mut Matching, path: &[usize]) {
    for pair in path.chunks(2) {
        f.mate[pair[0]] = Some(pair[1]);
        f.mate[pair[1]] = Some(pair[0]);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity_checks() {
        let g = Graph::path(4);
        assert!(Matching::from_pairs(4, &[(0, 1), (2, 3)]).unwrap().validate(&g).is_ok());
        let bad = Matching::from_pairs(4, &[(0, 2)]).unwrap();
        assert_eq!(bad.validate(&g), Err(MatchingError::NotAnEdge { u: 0, v: 2 }));
        assert!(Matching::from_pairs(4, &[(0, 1), (1, 2)]).is_err());
        assert!(Matching::new(3).validate(&g).is_err());
    }

    #[test]
    fn pairs_sorted() {
        let f = Matching::from_pairs(5, &[(4, 3), (1, 0)]).unwrap();
        assert_eq!(f.pairs(), vec![(0, 1), (3, 4)]);
        assert_eq!(f.cardinality(), 2);
    }
}
