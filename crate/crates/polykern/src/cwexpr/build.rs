use super::{CwError, ExprBuilder, KExpression, KNode, Label};
use crate::decomp::{MDTree, MdKind};
use crate::graph::Graph;
use rand::Rng;

/// A k-expression built from a modular decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularExpression {
    /// The expression; every vertex ends with label 1.
    pub expr: KExpression,
    /// `vertex_of[i]` is the input vertex introduced by the `i`-th `v(..)`.
    pub vertex_of: Vec<usize>,
}

impl ModularExpression {
    /// Inverse of `vertex_of`.
    pub fn intro_index(&self) -> Vec<usize> {
        let mut inv = vec![0; self.vertex_of.len()];
        for (i, &v) in self.vertex_of.iter().enumerate() {
            inv[v] = i;
        }
        inv
    }
}

/// Builds an irredundant expression for `g` with at most
/// `max(2, mw(g))` labels.
///
/// Series nodes use two labels. Prime nodes process their children in
/// quotient order: each child gets the smallest free label, is joined to
/// the earlier children it is adjacent to, and children with no later
/// neighbour are merged into one retired label.
///
/// ```
/// use polykern::cwexpr::{eval_kexpr, kexpr_from_modular};
/// use polykern::decomp::modular_decomposition;
/// use polykern::graph::Graph;
/// let g = Graph::path(4);
/// let me = kexpr_from_modular(&g, &modular_decomposition(&g)).unwrap();
/// assert_eq!(me.expr.width(), 3);
/// let h = eval_kexpr(&me.expr).graph;
/// assert_eq!(h.relabel(&me.vertex_of), g);
/// ```
pub fn kexpr_from_modular(g: &Graph, md: &MDTree) -> Result<ModularExpression, CwError> {
    if md.is_empty() || g.n() == 0 {
        return Err(CwError::IllFormed("no vertices".into()));
    }
    let mut b = ExprBuilder::new();
    let mut intro_vertex: Vec<(usize, usize)> = Vec::new();
    let mut top = vec![usize::MAX; md.len()];
    for id in md.postorder() {
        let kids = md.children(id);
        top[id] = match md.kind(id) {
            MdKind::Leaf(v) => {
                let t = b.intro(1);
                intro_vertex.push((t, v));
                t
            }
            MdKind::Parallel => {
                let mut acc = top[kids[0]];
                for &c in &kids[1..] {
                    acc = b.union(acc, top[c]);
                }
                acc
            }
            MdKind::Series => {
                let mut acc = top[kids[0]];
                for &c in &kids[1..] {
                    let r = b.rename(1, 2, acc);
                    let u = b.union(r, top[c]);
                    let j = b.join(1, 2, u);
                    acc = b.rename(2, 1, j);
                }
                acc
            }
            MdKind::Prime => {
                let q = md.quotient(id).ok_or_else(|| CwError::IllFormed(format!("prime node {id} lacks a quotient")))?;
                prime_node(&mut b, q, &kids.iter().map(|&c| top[c]).collect::<Vec<_>>())
            }
        };
    }
    let (expr, new_id) = b.finish_mapped(top[md.root()])?;
    let mut vertex_of = vec![usize::MAX; expr.order()];
    let mut intro_rank = vec![usize::MAX; expr.nodes().len()];
    let mut r = 0;
    for (i, n) in expr.nodes().iter().enumerate() {
        if matches!(n, KNode::Intro(_)) {
            intro_rank[i] = r;
            r += 1;
        }
    }
    for (t, v) in intro_vertex {
        vertex_of[intro_rank[new_id[t]]] = v;
    }
    if vertex_of.len() != g.n() || vertex_of.contains(&usize::MAX) {
        return Err(CwError::IllFormed("tree does not cover the graph".into()));
    }
    Ok(ModularExpression { expr, vertex_of })
}

fn prime_node(b: &mut ExprBuilder, q: &Graph, kids: &[usize]) -> usize {
    let p = kids.len();
    let last_nbr: Vec<usize> = (0..p).map(|s| q.neighbors(s).last().copied().unwrap_or(0)).collect();
    let mut label_of: Vec<Label> = vec![0; p];
    let mut active: Vec<usize> = Vec::new();
    let mut dead: Option<Label> = None;
    let mut acc: Option<usize> = None;
    for t in 0..p {
        let in_use = |l: Label| active.iter().any(|&s| label_of[s] == l) || dead == Some(l);
        let f = (1..).find(|&l| !in_use(l)).expect("unbounded");
        label_of[t] = f;
        let mut e = if f == 1 { kids[t] } else { b.rename(1, f, kids[t]) };
        if let Some(a) = acc {
            e = b.union(a, e);
        }
        for &s in &active {
            if q.has_edge(s, t) {
                e = b.join(label_of[s], f, e);
            }
        }
        active.push(t);
        let mut keep = Vec::with_capacity(active.len());
        for &s in &active {
            if last_nbr[s] > t {
                keep.push(s);
                continue;
            }
            match dead {
                None => dead = Some(label_of[s]),
                Some(d) => e = b.rename(label_of[s], d, e),
            }
        }
        active = keep;
        acc = Some(e);
    }
    let e = acc.expect("prime nodes have children");
    match dead {
        Some(d) if d != 1 => b.rename(d, 1, e),
        _ => e,
    }
}

/// A random irredundant expression on `n >= 1` vertices with labels in
/// `1..=k`, `k >= 2`. Joins are only applied to pairs of nonempty label
/// classes that share no edge.
///
/// ```
/// use polykern::cwexpr::{random_irredundant, verify_irredundant};
/// use rand::SeedableRng;
/// let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
/// let e = random_irredundant(&mut rng, 30, 4);
/// assert_eq!(e.order(), 30);
/// assert!(verify_irredundant(&e).irredundant);
/// ```
pub fn random_irredundant<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize) -> KExpression {
    assert!(n >= 1 && k >= 2, "need n >= 1 and k >= 2");
    struct Part {
        top: usize,
        size: Vec<usize>,
        has: Vec<bool>,
    }
    let k1 = k + 1;
    let mut b = ExprBuilder::new();
    let mut pool: Vec<Part> = (0..n)
        .map(|_| {
            let l = rng.gen_range(1..=k);
            let mut size = vec![0; k1];
            size[l] = 1;
            Part { top: b.intro(l as Label), size, has: vec![false; k1 * k1] }
        })
        .collect();
    let unary = |b: &mut ExprBuilder, part: &mut Part, rng: &mut R| {
        let nonempty: Vec<usize> = (1..=k).filter(|&l| part.size[l] > 0).collect();
        let pairs: Vec<(usize, usize)> = nonempty
            .iter()
            .flat_map(|&i| nonempty.iter().map(move |&j| (i, j)))
            .filter(|&(i, j)| i < j && !part.has[i * k1 + j])
            .collect();
        if !pairs.is_empty() && rng.gen_bool(0.7) {
            let (i, j) = pairs[rng.gen_range(0..pairs.len())];
            part.top = b.join(i as Label, j as Label, part.top);
            part.has[i * k1 + j] = true;
            part.has[j * k1 + i] = true;
        } else {
            let i = nonempty[rng.gen_range(0..nonempty.len())];
            let mut j = rng.gen_range(1..k);
            if j >= i {
                j += 1;
            }
            part.top = b.rename(i as Label, j as Label, part.top);
            part.size[j] += part.size[i];
            part.size[i] = 0;
            if part.has[i * k1 + i] || part.has[i * k1 + j] {
                part.has[j * k1 + j] = true;
            }
            for x in 1..=k {
                if x != i && x != j && part.has[i * k1 + x] {
                    part.has[j * k1 + x] = true;
                    part.has[x * k1 + j] = true;
                }
            }
            for x in 0..=k {
                part.has[i * k1 + x] = false;
                part.has[x * k1 + i] = false;
            }
        }
    };
    while pool.len() > 1 {
        if rng.gen_bool(0.5) {
            let x = pool.swap_remove(rng.gen_range(0..pool.len()));
            let y = rng.gen_range(0..pool.len());
            let p = pool.swap_remove(y);
            let mut size = p.size.clone();
            for l in 0..k1 {
                size[l] += x.size[l];
            }
            let has = p.has.iter().zip(&x.has).map(|(a, c)| *a || *c).collect();
            pool.push(Part { top: b.union(p.top, x.top), size, has });
        } else {
            let y = rng.gen_range(0..pool.len());
            unary(&mut b, &mut pool[y], rng);
        }
    }
    let mut last = pool.pop().expect("n >= 1");
    for _ in 0..rng.gen_range(0..=k) {
        unary(&mut b, &mut last, rng);
    }
    b.finish(last.top).expect("generated nodes are well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cwexpr::{eval_kexpr, parse_kexpr, verify_irredundant, P4_EXPRESSION};
    use crate::decomp::modular_decomposition;
    use crate::graph::generate::{gen_family, FamilySpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn check(g: &Graph) -> ModularExpression {
        let md = modular_decomposition(g);
        let me = kexpr_from_modular(g, &md).unwrap();
        assert!(verify_irredundant(&me.expr).irredundant);
        assert_eq!(eval_kexpr(&me.expr).graph.relabel(&me.vertex_of), *g);
        assert!(me.expr.width() as usize <= md.modular_width());
        me
    }

    #[test]
    fn p4_uses_three_labels_like_the_reference_expression() {
        let me = check(&Graph::path(4));
        assert_eq!(me.expr.width(), 3);
        let reference = eval_kexpr(&parse_kexpr(P4_EXPRESSION).unwrap()).graph;
        assert_eq!(reference, Graph::path(4));
    }

    #[test]
    fn cographs_use_two_labels() {
        for seed in 0..20 {
            let inst = gen_family(&FamilySpec::Cograph { n: 25 }, seed).unwrap();
            assert!(check(&inst.graph).expr.width() <= 2);
        }
        assert_eq!(check(&Graph::empty(1)).expr.to_text(), "v(1)");
    }

    #[test]
    fn substitution_into_c5() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let spec = FamilySpec::Substitution {
                quotient: Box::new(FamilySpec::Cycle { n: 5 }),
                parts: (0..5).map(|_| FamilySpec::Cograph { n: rng.gen_range(1..5) }).collect(),
            };
            let inst = gen_family(&spec, rng.gen()).unwrap();
            assert!(check(&inst.graph).expr.width() <= 5);
        }
    }

    #[test]
    fn random_graphs_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..40 {
            let n = rng.gen_range(1..30);
            let inst = gen_family(&FamilySpec::ErdosRenyi { n, p: rng.gen_range(0.1..0.9) }, rng.gen()).unwrap();
            check(&inst.graph);
        }
    }

    #[test]
    fn generator_is_irredundant_and_sized() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 1..40 {
            let e = random_irredundant(&mut rng, n, 2 + n % 5);
            assert!(verify_irredundant(&e).irredundant);
            assert_eq!(e.order(), n);
            assert!(e.width() as usize <= 2 + n % 5);
            assert_eq!(parse_kexpr(&e.to_text()).unwrap(), e);
        }
    }
}
