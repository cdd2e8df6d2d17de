//! Brute-force reference implementations.

use super::{Distance, Graph, HalfInteger, Rational};
use crate::matching::{blossom, Matching};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Default vertex cap for the quartic hyperbolicity scan.
pub const DEFAULT_HYPERBOLICITY_CAP: usize = 40;

/// Errors raised by oracles with preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// The oracle needs a connected graph.
    #[error("graph is disconnected")]
    Disconnected,
    /// The input exceeds the configured size cap.
    #[error("n = {n} exceeds oracle cap {cap}")]
    TooLarge {
        /// Vertex count.
        n: usize,
        /// Active cap.
        cap: usize,
    },
}

/// BFS distances from `source`, with `u32::MAX` for unreachable vertices.
pub(crate) fn bfs_raw(g: &Graph, source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    dist[source] = 0;
    queue.push(source);
    let mut i = 0;
    while i < queue.len() {
        let v = queue[i];
        i += 1;
        let d = dist[v] + 1;
        for &w in g.neighbors(v) {
            if dist[w] == u32::MAX {
                dist[w] = d;
                queue.push(w);
            }
        }
    }
    dist
}

/// All-pairs hop distances, `u32::MAX` for unreachable pairs.
pub(crate) fn all_pairs_raw(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n()).map(|s| bfs_raw(g, s)).collect()
}

/// Exact hop distances from `source`.
///
/// ```
/// use polykern::graph::{bfs_distances, Distance, Graph};
/// let d = bfs_distances(&Graph::cycle(5), 0);
/// assert_eq!(d[2], Distance::Finite(2));
/// ```
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<Distance> {
    assert!(source < g.n(), "source {source} out of range");
    bfs_raw(g, source).into_iter().map(Distance::from_raw).collect()
}

/// Eccentricity of every vertex by BFS from each vertex.
pub fn oracle_eccentricities(g: &Graph) -> Vec<Distance> {
    (0..g.n())
        .map(|s| {
            let d = bfs_raw(g, s);
            Distance::from_raw(d.into_iter().max().unwrap_or(0))
        })
        .collect()
}

/// Triangle count and girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleStats {
    /// Number of triangles.
    pub triangles: u64,
    /// Length of a shortest cycle; unreachable for forests.
    pub girth: Distance,
}

/// Triangles by sorted-neighbor intersection; girth by BFS from every
/// vertex.
pub fn oracle_cycle_stats(g: &Graph) -> CycleStats {
    let mut triangles = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (g.neighbors(u), g.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if a[i] > v {
                        triangles += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    let n = g.n();
    let mut best = u32::MAX;
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        queue.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        queue.push(s);
        let mut i = 0;
        'bfs: while i < queue.len() {
            let v = queue[i];
            i += 1;
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    CycleStats { triangles, girth: Distance::from_raw(best) }
}

/// Largest `L - M` over the three pair sums of one 4-tuple.
#[inline]
pub(crate) fn four_point_gap(s1: u32, s2: u32, s3: u32) -> u32 {
    let (mut a, mut b, c) = (s1, s2, s3);
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    // a >= b; the two largest of {a, b, c}
    if c > a {
        c - a
    } else if c > b {
        a - c
    } else {
        a - b
    }
}

/// `2δ` from a full distance matrix over the listed vertices.
pub(crate) fn twice_delta_from_distances(d: &[Vec<u32>]) -> i64 {
    let n = d.len();
    let mut best = 0u32;
    for u in 0..n {
        for v in u + 1..n {
            let duv = d[u][v];
            for x in v + 1..n {
                let (dux, dvx) = (d[u][x], d[v][x]);
                for y in x + 1..n {
                    let gap = four_point_gap(duv + d[x][y], dux + d[v][y], d[u][y] + dvx);
                    if gap > best {
                        best = gap;
                    }
                }
            }
        }
    }
    best as i64
}

/// Exact hyperbolicity by the four-point condition, capped at
/// [`DEFAULT_HYPERBOLICITY_CAP`] vertices.
pub fn oracle_hyperbolicity(g: &Graph) -> Result<HalfInteger, OracleError> {
    oracle_hyperbolicity_capped(g, DEFAULT_HYPERBOLICITY_CAP)
}

/// [`oracle_hyperbolicity`] with an explicit vertex cap.
///
/// ```
/// use polykern::graph::{oracle_hyperbolicity_capped, Graph, HalfInteger};
/// assert_eq!(oracle_hyperbolicity_capped(&Graph::cycle(4), 40), Ok(HalfInteger::ONE));
/// ```
pub fn oracle_hyperbolicity_capped(g: &Graph, cap: usize) -> Result<HalfInteger, OracleError> {
    if g.n() > cap {
        return Err(OracleError::TooLarge { n: g.n(), cap });
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    Ok(HalfInteger::from_twice(twice_delta_from_distances(&all_pairs_raw(g))))
}

/// Exact betweenness centrality by Brandes accumulation with exact path
/// counts.
///
/// ```
/// use polykern::graph::{oracle_betweenness, rational_to_string, Graph};
/// let bc = oracle_betweenness(&Graph::cycle(4)).unwrap();
/// assert!(bc.iter().all(|b| rational_to_string(b) == "1/2"));
/// ```
pub fn oracle_betweenness(g: &Graph) -> Result<Vec<Rational>, OracleError> {
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let n = g.n();
    let mut bc = vec![Rational::zero(); n];
    let mut order = Vec::with_capacity(n);
    let mut dist = vec![u32::MAX; n];
    let mut sigma: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut delta: Vec<Rational> = vec![Rational::zero(); n];
    for s in 0..n {
        order.clear();
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        sigma.iter_mut().for_each(|x| *x = BigInt::zero());
        dist[s] = 0;
        sigma[s] = BigInt::one();
        order.push(s);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    order.push(w);
                }
                if dist[w] == dist[v] + 1 {
                    let sv = sigma[v].clone();
                    sigma[w] += sv;
                }
            }
        }
        delta.iter_mut().for_each(|x| *x = Rational::zero());
        for &w in order.iter().rev() {
            let coeff = (Rational::one() + &delta[w]) / Rational::from_integer(sigma[w].clone());
            for &v in g.neighbors(w) {
                if dist[v] != u32::MAX && dist[v] + 1 == dist[w] {
                    let add = &coeff * Rational::from_integer(sigma[v].clone());
                    delta[v] += add;
                }
            }
            if w != s {
                bc[w] += &delta[w];
            }
        }
    }
    let two = Rational::from_integer(BigInt::from(2));
    Ok(bc.into_iter().map(|b| b / &two).collect())
}

/// Maximum-cardinality matching by Edmonds' blossom algorithm.
///
/// ```
/// use polykern::graph::{oracle_maximum_matching, Graph};
/// assert_eq!(oracle_maximum_matching(&Graph::petersen()).cardinality(), 5);
/// ```
pub fn oracle_maximum_matching(g: &Graph) -> Matching {
    blossom::maximum_matching(g)
}
