//! Neighbourhood-diversity partition into twin classes.

use crate::graph::Graph;
use serde::Serialize;
use std::collections::HashMap;

/// Whether a twin class is a clique (true twins) or stable (false twins).
/// Singleton classes are tagged `TrueTwins`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TwinKind {
    /// Equal closed neighborhoods; the class is a clique.
    TrueTwins,
    /// Equal open neighborhoods; the class is stable.
    FalseTwins,
}

/// One twin class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwinClass {
    /// Clique or stable.
    pub kind: TwinKind,
    /// Sorted members.
    pub vertices: Vec<usize>,
}

/// Coarsest partition of the vertices into twin classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NDPartition {
    /// Classes, ordered by minimum vertex.
    pub classes: Vec<TwinClass>,
    /// Class index of every vertex.
    pub class_of: Vec<usize>,
    /// Class-level quotient: classes adjacent iff completely joined.
    pub quotient: Graph,
}

impl NDPartition {
    /// Number of classes.
    pub fn nd(&self) -> usize {
        self.classes.len()
    }

    /// Checks that classes partition `V`, match their kinds, and that class
    /// members have equal neighborhoods outside their class.
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let mut count = 0;
        for (ci, c) in self.classes.iter().enumerate() {
            count += c.vertices.len();
            for &v in &c.vertices {
                if self.class_of[v] != ci {
                    return Err(format!("class_of disagrees at {v}"));
                }
            }
            let first = c.vertices[0];
            let outside = |v: usize| -> Vec<usize> {
                g.neighbors(v).iter().copied().filter(|&w| self.class_of[w] != ci).collect()
            };
            let base = outside(first);
            for &v in &c.vertices[1..] {
                if outside(v) != base {
                    return Err(format!("{first} and {v} are not twins"));
                }
                let joined = g.has_edge(first, v);
                if joined != (c.kind == TwinKind::TrueTwins) {
                    return Err(format!("class {ci} mis-tagged"));
                }
            }
        }
        (count == g.n()).then_some(()).ok_or_else(|| "classes do not partition V".into())
    }
}

/// Computes the coarsest twin partition.
///
/// ```
/// use polykern::decomp::nd_partition;
/// use polykern::graph::Graph;
/// assert_eq!(nd_partition(&Graph::star(4)).nd(), 2);
/// assert_eq!(nd_partition(&Graph::complete(5)).nd(), 1);
/// ```
pub fn nd_partition(g: &Graph) -> NDPartition {
    let n = g.n();
    let mut open: HashMap<&[usize], Vec<usize>> = HashMap::new();
    for v in 0..n {
        open.entry(g.neighbors(v)).or_default().push(v);
    }
    let closed_of = |v: usize| -> Vec<usize> {
        let mut c = g.neighbors(v).to_vec();
        let at = c.partition_point(|&w| w < v);
        c.insert(at, v);
        c
    };
    let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for v in 0..n {
        closed.entry(closed_of(v)).or_default().push(v);
    }
    let mut class_of = vec![usize::MAX; n];
    let mut groups: Vec<TwinClass> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let f = &open[g.neighbors(v)];
        let t = &closed[&closed_of(v)];
        let (kind, members) = if f.len() > 1 {
            (TwinKind::FalseTwins, f.clone())
        } else {
            (TwinKind::TrueTwins, t.clone())
        };
        let id = groups.len();
        for &w in &members {
            class_of[w] = id;
        }
        groups.push(TwinClass { kind, vertices: members });
    }
    let reps: Vec<usize> = groups.iter().map(|c| c.vertices[0]).collect();
    let quotient = g.induced(&reps);
    NDPartition { classes: groups, class_of, quotient }
}
