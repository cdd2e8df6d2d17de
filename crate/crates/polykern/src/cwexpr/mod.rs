//! Clique-width k-expressions: AST, text format, evaluation, irredundancy,
//! construction from modular decompositions, and the triangle-counting and
//! girth dynamic programs.
//!
//! Text grammar, whitespace-insensitive:
//!
//! ```text
//! expr := "v(" INT ")" | "(" expr "+" expr ")"
//!       | "eta(" INT "," INT "," expr ")" | "rho(" INT "," INT "," expr ")"
//! ```

mod build;
mod dp;
mod parse;

pub use build::{kexpr_from_modular, random_irredundant, ModularExpression};
pub use dp::{dp_girth, dp_trace, dp_triangle_count, PairTables};
pub use parse::parse_kexpr;

use crate::graph::Graph;
use thiserror::Error;

/// A label; labels are positive.
pub type Label = u32;

/// One node of a [`KExpression`]. Children are indices of earlier nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KNode {
    /// `v(i)`: a new vertex labeled `i`.
    Intro(Label),
    /// Disjoint union.
    Union(usize, usize),
    /// `eta(i, j, e)`: join every `i`-vertex to every `j`-vertex.
    Join(Label, Label, usize),
    /// `rho(i, j, e)`: relabel `i` as `j`.
    Rename(Label, Label, usize),
}

/// A k-expression stored in post-order: every child precedes its parent and
/// the root is last. Left subtrees precede right subtrees, so equal trees
/// have equal arenas.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KExpression {
    nodes: Vec<KNode>,
}

/// Errors raised by expression operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CwError {
    /// Malformed text.
    #[error("syntax error at byte {pos}: {message}")]
    Syntax {
        /// Byte offset.
        pos: usize,
        /// What was expected.
        message: String,
    },
    /// `eta` or `rho` with equal labels.
    #[error("equal labels in {op} at byte {pos}")]
    EqualLabels {
        /// `eta` or `rho`.
        op: &'static str,
        /// Byte offset.
        pos: usize,
    },
    /// Label 0 used.
    #[error("labels must be positive (byte {pos})")]
    ZeroLabel {
        /// Byte offset.
        pos: usize,
    },
    /// A join adds an edge that already exists.
    #[error("redundant join at node {node}")]
    Redundant {
        /// Post-order index of the offending join.
        node: usize,
    },
    /// A builder produced an ill-formed expression.
    #[error("ill-formed expression: {0}")]
    IllFormed(String),
}

/// Incremental construction of a [`KExpression`].
#[derive(Debug, Default, Clone)]
pub struct ExprBuilder {
    nodes: Vec<KNode>,
}

impl ExprBuilder {
    /// Empty builder.
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, n: KNode) -> usize {
        self.nodes.push(n);
        self.nodes.len() - 1
    }

    /// `v(label)`.
    pub fn intro(&mut self, label: Label) -> usize {
        self.push(KNode::Intro(label))
    }

    /// `(a + b)`.
    pub fn union(&mut self, a: usize, b: usize) -> usize {
        self.push(KNode::Union(a, b))
    }

    /// `eta(i, j, a)`.
    pub fn join(&mut self, i: Label, j: Label, a: usize) -> usize {
        self.push(KNode::Join(i, j, a))
    }

    /// `rho(i, j, a)`.
    pub fn rename(&mut self, i: Label, j: Label, a: usize) -> usize {
        self.push(KNode::Rename(i, j, a))
    }

    /// The expression rooted at `root`, laid out in canonical post-order.
    /// Nodes not reachable from `root` are dropped.
    pub fn finish(&self, root: usize) -> Result<KExpression, CwError> {
        self.finish_mapped(root).map(|(e, _)| e)
    }

    /// As [`ExprBuilder::finish`], also returning the new index of every
    /// builder node (`usize::MAX` for dropped nodes).
    pub fn finish_mapped(&self, root: usize) -> Result<(KExpression, Vec<usize>), CwError> {
        let mut out: Vec<KNode> = Vec::new();
        let mut new_id = vec![usize::MAX; self.nodes.len()];
        let mut stack: Vec<(usize, bool)> = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            let node = *self.nodes.get(id).ok_or_else(|| CwError::IllFormed(format!("no node {id}")))?;
            if !expanded {
                stack.push((id, true));
                match node {
                    KNode::Intro(_) => {}
                    KNode::Union(a, b) => {
                        stack.push((b, false));
                        stack.push((a, false));
                    }
                    KNode::Join(_, _, a) | KNode::Rename(_, _, a) => stack.push((a, false)),
                }
                continue;
            }
            let ok = match node {
                KNode::Intro(l) => l > 0,
                KNode::Union(..) => true,
                KNode::Join(i, j, _) | KNode::Rename(i, j, _) => i != j && i > 0 && j > 0,
            };
            if !ok {
                return Err(CwError::IllFormed(format!("bad labels at node {id}")));
            }
            let mapped = match node {
                KNode::Intro(l) => KNode::Intro(l),
                KNode::Union(a, b) => KNode::Union(new_id[a], new_id[b]),
                KNode::Join(i, j, a) => KNode::Join(i, j, new_id[a]),
                KNode::Rename(i, j, a) => KNode::Rename(i, j, new_id[a]),
            };
            out.push(mapped);
            new_id[id] = out.len() - 1;
        }
        Ok((KExpression { nodes: out }, new_id))
    }
}

impl KExpression {
    /// Checks post-order layout, label positivity and `i != j`.
    pub fn from_nodes(nodes: Vec<KNode>) -> Result<KExpression, CwError> {
        if nodes.is_empty() {
            return Err(CwError::IllFormed("empty expression".into()));
        }
        let mut uses = vec![0u8; nodes.len()];
        for (id, n) in nodes.iter().enumerate() {
            let kids = match *n {
                KNode::Intro(_) => [None, None],
                KNode::Union(a, b) => [Some(a), Some(b)],
                KNode::Join(_, _, a) | KNode::Rename(_, _, a) => [Some(a), None],
            };
            for c in kids.into_iter().flatten() {
                if c >= id {
                    return Err(CwError::IllFormed(format!("node {id} refers forward")));
                }
                uses[c] = uses[c].saturating_add(1);
            }
        }
        let root = nodes.len() - 1;
        if uses[..root].iter().any(|&u| u != 1) || uses[root] != 0 {
            return Err(CwError::IllFormed("nodes must form a single tree".into()));
        }
        ExprBuilder { nodes }.finish(root)
    }

    /// Nodes in post-order.
    pub fn nodes(&self) -> &[KNode] {
        &self.nodes
    }

    /// Index of the root node.
    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Largest label used.
    pub fn width(&self) -> Label {
        self.nodes
            .iter()
            .map(|n| match *n {
                KNode::Intro(l) => l,
                KNode::Union(..) => 0,
                KNode::Join(i, j, _) | KNode::Rename(i, j, _) => i.max(j),
            })
            .max()
            .unwrap_or(0)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, KNode::Intro(_))).count()
    }

    /// Text form, accepted by [`parse_kexpr`].
    pub fn to_text(&self) -> String {
        enum Task {
            Node(usize),
            Lit(&'static str),
        }
        let mut out = String::new();
        let mut stack = vec![Task::Node(self.root())];
        while let Some(t) = stack.pop() {
            match t {
                Task::Lit(s) => out.push_str(s),
                Task::Node(id) => match self.nodes[id] {
                    KNode::Intro(l) => out.push_str(&format!("v({l})")),
                    KNode::Union(a, b) => {
                        out.push('(');
                        stack.push(Task::Lit(")"));
                        stack.push(Task::Node(b));
                        stack.push(Task::Lit("+"));
                        stack.push(Task::Node(a));
                    }
                    KNode::Join(i, j, a) | KNode::Rename(i, j, a) => {
                        let op = if matches!(self.nodes[id], KNode::Join(..)) { "eta" } else { "rho" };
                        out.push_str(&format!("{op}({i},{j},"));
                        stack.push(Task::Lit(")"));
                        stack.push(Task::Node(a));
                    }
                },
            }
        }
        out
    }
}

impl std::fmt::Display for KExpression {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A graph with a label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    /// The graph; vertex `i` is the `i`-th `v(..)` in post-order.
    pub graph: Graph,
    /// Label of every vertex.
    pub labeling: Vec<Label>,
}

/// Label classes of a partial result: `classes[l]` lists vertices labeled `l`.
struct Classes {
    classes: Vec<Vec<usize>>,
}

impl Classes {
    fn merge(mut a: Classes, mut b: Classes) -> Classes {
        for (x, y) in a.classes.iter_mut().zip(b.classes.iter_mut()) {
            if x.len() < y.len() {
                std::mem::swap(x, y);
            }
            x.append(y);
        }
        a
    }
}

/// Evaluates `expr`.
///
/// ```
/// use polykern::cwexpr::{eval_kexpr, parse_kexpr};
/// let e = parse_kexpr("eta(1,2,(v(1)+v(2)))").unwrap();
/// let lg = eval_kexpr(&e);
/// assert_eq!((lg.graph.n(), lg.graph.m()), (2, 1));
/// ```
pub fn eval_kexpr(expr: &KExpression) -> LabeledGraph {
    let k = expr.width() as usize + 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut labeling: Vec<Label> = Vec::new();
    let mut stack: Vec<Classes> = Vec::new();
    for node in expr.nodes() {
        match *node {
            KNode::Intro(l) => {
                let mut classes = vec![Vec::new(); k];
                classes[l as usize].push(labeling.len());
                labeling.push(l);
                stack.push(Classes { classes });
            }
            KNode::Union(..) => {
                let b = stack.pop().unwrap();
                let a = stack.pop().unwrap();
                stack.push(Classes::merge(a, b));
            }
            KNode::Join(i, j, _) => {
                let c = stack.last().unwrap();
                for &u in &c.classes[i as usize] {
                    for &v in &c.classes[j as usize] {
                        edges.push((u, v));
                    }
                }
            }
            KNode::Rename(i, j, _) => {
                let c = stack.last_mut().unwrap();
                let mut moved = std::mem::take(&mut c.classes[i as usize]);
                for &v in &moved {
                    labeling[v] = j;
                }
                c.classes[j as usize].append(&mut moved);
            }
        }
    }
    let graph = Graph::from_edges(labeling.len(), &edges).expect("join endpoints are vertices");
    LabeledGraph { graph, labeling }
}

/// Result of [`verify_irredundant`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Irredundancy {
    /// Every join adds only new edges.
    pub irredundant: bool,
    /// Post-order index of the first join that re-adds an edge.
    pub first_violation: Option<usize>,
}

/// Checks that no join adds an edge already present.
///
/// ```
/// use polykern::cwexpr::{parse_kexpr, verify_irredundant};
/// let twice = parse_kexpr("eta(1,2,eta(1,2,(v(1)+v(2))))").unwrap();
/// let r = verify_irredundant(&twice);
/// assert!(!r.irredundant);
/// assert_eq!(r.first_violation, Some(4));
/// ```
pub fn verify_irredundant(expr: &KExpression) -> Irredundancy {
    let k = expr.width() as usize + 1;
    // Per live subresult: class sizes and which label pairs share an edge.
    let mut stack: Vec<(Vec<usize>, Vec<bool>)> = Vec::new();
    for (id, node) in expr.nodes().iter().enumerate() {
        match *node {
            KNode::Intro(l) => {
                let mut size = vec![0; k];
                size[l as usize] = 1;
                stack.push((size, vec![false; k * k]));
            }
            KNode::Union(..) => {
                let (sb, eb) = stack.pop().unwrap();
                let (sa, ea) = stack.last_mut().unwrap();
                for p in 0..k {
                    sa[p] += sb[p];
                }
                for (x, y) in ea.iter_mut().zip(eb) {
                    *x |= y;
                }
            }
            KNode::Join(i, j, _) => {
                let (s, e) = stack.last_mut().unwrap();
                let (i, j) = (i as usize, j as usize);
                if s[i] > 0 && s[j] > 0 {
                    if e[i * k + j] {
                        return Irredundancy { irredundant: false, first_violation: Some(id) };
                    }
                    e[i * k + j] = true;
                    e[j * k + i] = true;
                }
            }
            KNode::Rename(i, j, _) => {
                let (s, e) = stack.last_mut().unwrap();
                let (i, j) = (i as usize, j as usize);
                s[j] += s[i];
                s[i] = 0;
                let ii = e[i * k + i] || e[i * k + j];
                for q in 0..k {
                    if q != i && q != j && e[i * k + q] {
                        e[j * k + q] = true;
                        e[q * k + j] = true;
                    }
                }
                if ii {
                    e[j * k + j] = true;
                }
                for q in 0..k {
                    e[i * k + q] = false;
                    e[q * k + i] = false;
                }
            }
        }
    }
    Irredundancy { irredundant: true, first_violation: None }
}

/// A 3-expression for `P_4` with nine operations, written with explicit
/// unions.
pub const P4_EXPRESSION: &str = "eta(1,2,(rho(2,3,eta(2,1,(rho(1,3,eta(1,2,(v(1)+v(2))))+v(1))))+v(2)))";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_expression_evaluates_to_path() {
        let e = parse_kexpr(P4_EXPRESSION).unwrap();
        // Four introductions, three unions and five labeled operations.
        assert_eq!(e.nodes().len(), 12);
        assert_eq!(e.width(), 3);
        let lg = eval_kexpr(&e);
        assert_eq!(lg.graph, Graph::path(4));
        assert_eq!(lg.labeling, vec![3, 3, 1, 2]);
        assert!(verify_irredundant(&e).irredundant);
    }

    #[test]
    fn small_evaluations() {
        let k1 = eval_kexpr(&parse_kexpr("v(1)").unwrap());
        assert_eq!(k1.graph.n(), 1);
        let two = eval_kexpr(&parse_kexpr("(v(1)+v(2))").unwrap());
        assert_eq!((two.graph.n(), two.graph.m()), (2, 0));
    }

    #[test]
    fn empty_class_join_is_vacuous() {
        let e = parse_kexpr("eta(1,3,eta(1,3,(v(1)+v(2))))").unwrap();
        assert!(verify_irredundant(&e).irredundant);
    }

    #[test]
    fn rename_carries_adjacency() {
        // After rho(1,2) the pair (2,3) already has an edge.
        let e = parse_kexpr("eta(2,3,rho(1,2,eta(1,3,(v(1)+v(3)))))").unwrap();
        assert_eq!(verify_irredundant(&e).first_violation, Some(5));
    }

    #[test]
    fn builder_canonicalizes() {
        let mut b = ExprBuilder::new();
        let y = b.intro(2);
        let x = b.intro(1);
        let u = b.union(x, y);
        let e = b.finish(u).unwrap();
        assert_eq!(e.to_text(), "(v(1)+v(2))");
        assert_eq!(e, parse_kexpr("(v(1)+v(2))").unwrap());
    }
}
