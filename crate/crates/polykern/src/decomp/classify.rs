//! Recognition of the special prime graphs: discs, spiders and spiked
//! p-chains, each with a re-checkable witness.

use super::modular::{MDTree, MdKind};
use crate::graph::Graph;
use serde::Serialize;

/// A spider partition `(S, K, R)`. `s[i]` is paired with `k[i]`: adjacent to
/// it alone (thin) or to every other vertex of `K` (thick).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpiderPartition {
    /// Stable side.
    pub s: Vec<usize>,
    /// Clique side, paired index-wise with `s`.
    pub k: Vec<usize>,
    /// Head, completely joined to `K`.
    pub r: Vec<usize>,
    /// Anti-matching between `S` and `K`.
    pub thick: bool,
}

impl SpiderPartition {
    /// Checks the spider axioms on `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        let n = g.n();
        let mut seen = vec![false; n];
        for &v in self.s.iter().chain(&self.k).chain(&self.r) {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} repeated or out of range"));
            }
        }
        if seen.iter().any(|&b| !b) {
            return Err("(S, K, R) does not cover the vertex set".into());
        }
        if self.s.len() != self.k.len() || self.s.len() < 2 {
            return Err("need |S| = |K| >= 2".into());
        }
        for (i, &a) in self.s.iter().enumerate() {
            for &b in &self.s[i + 1..] {
                if g.has_edge(a, b) {
                    return Err("S is not stable".into());
                }
            }
            for &r in &self.r {
                if g.has_edge(a, r) {
                    return Err("S touches R".into());
                }
            }
            for (j, &c) in self.k.iter().enumerate() {
                if g.has_edge(a, c) != ((i == j) != self.thick) {
                    return Err("S-K edges are not a (anti-)matching".into());
                }
            }
        }
        for (i, &a) in self.k.iter().enumerate() {
            for &b in &self.k[i + 1..] {
                if !g.has_edge(a, b) {
                    return Err("K is not a clique".into());
                }
            }
            for &r in &self.r {
                if !g.has_edge(a, r) {
                    return Err("K-R join incomplete".into());
                }
            }
        }
        Ok(())
    }
}

/// Vertex labeling of a spiked p-chain. Index `i` of `v` holds `v_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainLabeling {
    /// Chain length `k >= 6`.
    pub k: usize,
    /// `v_1..v_k`.
    pub v: Vec<usize>,
    /// Optional `x` (P-chains).
    pub x: Option<usize>,
    /// Optional `y` (P-chains).
    pub y: Option<usize>,
    /// Present `z_i` as `(i, vertex)`, sorted by `i` (Q-chains).
    pub z: Vec<(usize, usize)>,
}

impl ChainLabeling {
    /// Vertex holding `v_i` (1-based).
    pub fn vi(&self, i: usize) -> Option<usize> {
        (1..=self.k).contains(&i).then(|| self.v[i - 1])
    }

    /// Vertex holding `z_i`, if present.
    pub fn zi(&self, i: usize) -> Option<usize> {
        self.z.iter().find(|&&(j, _)| j == i).map(|&(_, v)| v)
    }

    fn all(&self) -> Vec<usize> {
        let mut out = self.v.clone();
        out.extend(self.x);
        out.extend(self.y);
        out.extend(self.z.iter().map(|&(_, v)| v));
        out
    }
}

/// Class of a prime graph with its witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum QuotientClass {
    /// A cycle `C_n`, `n >= 5`, listed in cycle order.
    DiscCycle {
        /// Cycle order.
        order: Vec<usize>,
    },
    /// The complement of `C_n`, `n >= 6`, with the complement's cycle order.
    DiscCoCycle {
        /// Cycle order in the complement.
        order: Vec<usize>,
    },
    /// Thin spider.
    ThinSpider(SpiderPartition),
    /// Thick spider.
    ThickSpider(SpiderPartition),
    /// Spiked p-chain `P_k`.
    SpikedPk(ChainLabeling),
    /// Complement of a spiked p-chain `P_k`.
    SpikedPkBar(ChainLabeling),
    /// Spiked p-chain `Q_k`.
    SpikedQk(ChainLabeling),
    /// Complement of a spiked p-chain `Q_k`.
    SpikedQkBar(ChainLabeling),
    /// None of the above.
    SmallPrime {
        /// Order of the graph.
        order: usize,
    },
}

impl QuotientClass {
    /// Short tag.
    pub fn tag(&self) -> &'static str {
        match self {
            QuotientClass::DiscCycle { .. } => "disc-cycle",
            QuotientClass::DiscCoCycle { .. } => "disc-co-cycle",
            QuotientClass::ThinSpider(_) => "thin-spider",
            QuotientClass::ThickSpider(_) => "thick-spider",
            QuotientClass::SpikedPk(_) => "spiked-pk",
            QuotientClass::SpikedPkBar(_) => "spiked-pk-bar",
            QuotientClass::SpikedQk(_) => "spiked-qk",
            QuotientClass::SpikedQkBar(_) => "spiked-qk-bar",
            QuotientClass::SmallPrime { .. } => "small-prime",
        }
    }

    /// Re-checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        match self {
            QuotientClass::DiscCycle { order } => verify_cycle(g, order),
            QuotientClass::DiscCoCycle { order } => {
                if order.len() < 6 {
                    return Err("co-cycle needs n >= 6".into());
                }
                verify_cycle(&g.complement(), order)
            }
            QuotientClass::ThinSpider(p) => {
                if p.thick && p.s.len() > 2 {
                    return Err("thick partition tagged thin".into());
                }
                p.verify(g)
            }
            QuotientClass::ThickSpider(p) => {
                if !p.thick || p.s.len() < 3 {
                    return Err("thick spider needs an anti-matching and |S| >= 3".into());
                }
                p.verify(g)
            }
            QuotientClass::SpikedPk(l) => verify_chain(g, l, false, false),
            QuotientClass::SpikedPkBar(l) => verify_chain(g, l, false, true),
            QuotientClass::SpikedQk(l) => verify_chain(g, l, true, false),
            QuotientClass::SpikedQkBar(l) => verify_chain(g, l, true, true),
            QuotientClass::SmallPrime { order } => {
                (*order == g.n()).then_some(()).ok_or_else(|| "order mismatch".into())
            }
        }
    }
}

fn verify_cycle(g: &Graph, order: &[usize]) -> Result<(), String> {
    let n = g.n();
    if order.len() != n || n < 5 {
        return Err("cycle order must list all n >= 5 vertices".into());
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err("cycle order repeats a vertex".into());
        }
    }
    if g.m() != n || (0..n).any(|i| !g.has_edge(order[i], order[(i + 1) % n])) {
        return Err("not a cycle in the given order".into());
    }
    Ok(())
}

fn verify_chain(g: &Graph, l: &ChainLabeling, q: bool, bar: bool) -> Result<(), String> {
    if l.k < 6 || l.v.len() != l.k {
        return Err("chain needs k >= 6".into());
    }
    if q && (l.x.is_some() || l.y.is_some()) {
        return Err("Q-chains have no x, y".into());
    }
    if !q && !l.z.is_empty() {
        return Err("P-chains have no z".into());
    }
    let all = l.all();
    if all.len() != g.n() {
        return Err("labeling does not cover the vertex set".into());
    }
    let zs: Vec<usize> = l.z.iter().map(|&(i, _)| i).collect();
    let t = if q {
        if zs.windows(2).any(|w| w[0] >= w[1]) || zs.iter().any(|&i| i < 2 || i + 5 > l.k) {
            return Err("z indices must be increasing within 2..=k-5".into());
        }
        spiked_qk(l.k, &zs).0
    } else {
        spiked_pk(l.k, l.x.is_some(), l.y.is_some()).0
    };
    let t = if bar { t.complement() } else { t };
    let mut seen = vec![false; g.n()];
    for &v in &all {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err("labeling repeats a vertex".into());
        }
    }
    if t.m() != g.m() {
        return Err("edge count differs from the template".into());
    }
    for (a, b) in t.edges() {
        if !g.has_edge(all[a], all[b]) {
            return Err(format!("template edge ({a}, {b}) missing"));
        }
    }
    Ok(())
}

/// Spiked p-chain `P_k` on `v_1..v_k` (ids `0..k`), then `x`, then `y`.
pub fn spiked_pk(k: usize, x: bool, y: bool) -> (Graph, ChainLabeling) {
    assert!(k >= 6, "spiked P_k needs k >= 6");
    let mut edges: Vec<(usize, usize)> = (0..k - 1).map(|i| (i, i + 1)).collect();
    let mut next = k;
    let mut lab = ChainLabeling { k, v: (0..k).collect(), x: None, y: None, z: Vec::new() };
    if x {
        edges.extend([(1, next), (2, next)]);
        lab.x = Some(next);
        next += 1;
    }
    if y {
        edges.extend([(k - 3, next), (k - 2, next)]);
        lab.y = Some(next);
        next += 1;
    }
    (Graph::from_edges(next, &edges).expect("template edges valid"), lab)
}

/// Chain positions used by the `Q_k` adjacency rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    V(usize),
    Z(usize),
}

/// Adjacency of two positions in a spiked `Q_k`. Indices are 1-based and
/// independent of `k`.
pub(crate) fn qk_adjacent(a: Slot, b: Slot) -> bool {
    use Slot::*;
    match (a, b) {
        (V(p), V(q)) => {
            if p == q {
                return false;
            }
            let (o, e) = match (p % 2, q % 2) {
                (0, 0) => return true,
                (1, 1) => return false,
                (1, 0) => (p, q),
                _ => (q, p),
            };
            // N(v_{2i}) ∩ odd = {v_{2j-1} | j >= i, j != i + 1}.
            let (i, j) = (e / 2, o.div_ceil(2));
            j >= i && j != i + 1
        }
        (Z(z), V(p)) | (V(p), Z(z)) => {
            if z % 2 == 1 {
                let i = z.div_ceil(2);
                p % 2 == 0 && p / 2 <= i
            } else {
                let i = z / 2;
                // Non-neighbors: v_{2j-1}, j in [1, i+1].
                !(p % 2 == 1 && p.div_ceil(2) <= i + 1)
            }
        }
        (Z(p), Z(q)) => {
            if p == q {
                return false;
            }
            match (p % 2, q % 2) {
                (0, 0) => true,
                (1, 1) => false,
                (1, 0) => q / 2 < p.div_ceil(2),
                _ => p / 2 < q.div_ceil(2),
            }
        }
    }
}

/// Spiked p-chain `Q_k` on `v_1..v_k` (ids `0..k`) followed by the listed
/// `z_i`, in the given order.
pub fn spiked_qk(k: usize, z: &[usize]) -> (Graph, ChainLabeling) {
    assert!(k >= 6, "spiked Q_k needs k >= 6");
    let mut slots: Vec<Slot> = (1..=k).map(Slot::V).collect();
    slots.extend(z.iter().map(|&i| Slot::Z(i)));
    let mut edges = Vec::new();
    for a in 0..slots.len() {
        for b in a + 1..slots.len() {
            if qk_adjacent(slots[a], slots[b]) {
                edges.push((a, b));
            }
        }
    }
    let lab = ChainLabeling {
        k,
        v: (0..k).collect(),
        x: None,
        y: None,
        z: z.iter().enumerate().map(|(j, &i)| (i, k + j)).collect(),
    };
    (Graph::from_edges(slots.len(), &edges).expect("template edges valid"), lab)
}

/// Classifies a prime graph. Falls back to `SmallPrime` when no class
/// matches; every returned witness has been verified.
///
/// ```
/// use polykern::decomp::{classify_prime_graph, QuotientClass};
/// use polykern::graph::Graph;
/// let c = classify_prime_graph(&Graph::cycle(7)).unwrap();
/// assert!(matches!(c, QuotientClass::DiscCycle { .. }));
/// ```
pub fn classify_prime_graph(g: &Graph) -> Result<QuotientClass, String> {
    let n = g.n();
    if n < 4 {
        return Err(format!("graph of order {n} is not prime"));
    }
    if n <= 64 {
        if let Some(m) = super::modular::nontrivial_module(g) {
            return Err(format!("not prime: module {m:?}"));
        }
    }
    let found = recognize(g);
    if let Some(c) = &found {
        debug_assert!(c.verify(g).is_ok(), "{:?}", c.verify(g));
        if c.verify(g).is_ok() {
            return Ok(found.unwrap());
        }
    }
    Ok(QuotientClass::SmallPrime { order: n })
}

fn recognize(g: &Graph) -> Option<QuotientClass> {
    if let Some(order) = cycle_order(g) {
        return Some(QuotientClass::DiscCycle { order });
    }
    let co = g.complement();
    if g.n() >= 6 {
        if let Some(order) = cycle_order(&co) {
            return Some(QuotientClass::DiscCoCycle { order });
        }
    }
    if let Some(p) = thin_spider(g) {
        return Some(QuotientClass::ThinSpider(p));
    }
    if let Some(p) = thin_spider(&co) {
        let p = SpiderPartition { s: p.k, k: p.s, r: p.r, thick: true };
        return Some(QuotientClass::ThickSpider(p));
    }
    if let Some(l) = pk_labeling(g) {
        return Some(QuotientClass::SpikedPk(l));
    }
    if let Some(l) = pk_labeling(&co) {
        return Some(QuotientClass::SpikedPkBar(l));
    }
    if let Some(l) = qk_labeling(g) {
        return Some(QuotientClass::SpikedQk(l));
    }
    if let Some(l) = qk_labeling(&co) {
        return Some(QuotientClass::SpikedQkBar(l));
    }
    None
}

fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 5 || g.m() != n || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    let mut order = vec![0];
    let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
    while cur != 0 {
        order.push(cur);
        let nb = g.neighbors(cur);
        let next = if nb[0] == prev { nb[1] } else { nb[0] };
        prev = cur;
        cur = next;
    }
    (order.len() == n).then_some(order)
}

fn thin_spider(g: &Graph) -> Option<SpiderPartition> {
    let n = g.n();
    let s: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if s.len() < 2 || 2 * s.len() > n {
        return None;
    }
    let k: Vec<usize> = s.iter().map(|&v| g.neighbors(v)[0]).collect();
    let mut in_sk = vec![false; n];
    for &v in s.iter().chain(&k) {
        if std::mem::replace(&mut in_sk[v], true) {
            return None;
        }
    }
    let r: Vec<usize> = (0..n).filter(|&v| !in_sk[v]).collect();
    let p = SpiderPartition { s, k, r, thick: false };
    p.verify(g).ok().map(|_| p)
}

fn pk_labeling(g: &Graph) -> Option<ChainLabeling> {
    let n = g.n();
    let ends: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if ends.len() != 2 || !g.is_connected() {
        return None;
    }
    let dist = crate::graph::oracle::bfs_raw(g, ends[1]);
    let mut spine = vec![ends[0]];
    let mut cur = ends[0];
    while cur != ends[1] {
        cur = *g.neighbors(cur).iter().filter(|&&w| dist[w] + 1 == dist[cur]).min()?;
        spine.push(cur);
    }
    let k = spine.len();
    if k < 6 || k + 2 < n {
        return None;
    }
    let mut on = vec![false; n];
    for &v in &spine {
        on[v] = true;
    }
    let mut lab = ChainLabeling { k, v: spine.clone(), x: None, y: None, z: Vec::new() };
    for w in (0..n).filter(|&w| !on[w]) {
        let mut nb = g.neighbors(w).to_vec();
        nb.sort_unstable();
        let mut want_x = vec![spine[1], spine[2]];
        want_x.sort_unstable();
        let mut want_y = vec![spine[k - 3], spine[k - 2]];
        want_y.sort_unstable();
        if nb == want_x && lab.x.is_none() {
            lab.x = Some(w);
        } else if nb == want_y && lab.y.is_none() {
            lab.y = Some(w);
        } else {
            return None;
        }
    }
    verify_chain(g, &lab, false, false).ok().map(|_| lab)
}

const QK_BUDGET: usize = 200_000;

fn qk_labeling(g: &Graph) -> Option<ChainLabeling> {
    let n = g.n();
    let ones: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    if ones.len() != 2 || n < 6 {
        return None;
    }
    for (a, b) in [(ones[0], ones[1]), (ones[1], ones[0])] {
        let (na, nb) = (g.neighbors(a)[0], g.neighbors(b)[0]);
        if na == nb {
            continue;
        }
        let mut st = QkSearch {
            g,
            labeled: vec![(a, Slot::V(1)), (na, Slot::V(2)), (b, Slot::V(3)), (nb, Slot::V(4))],
            used: vec![false; n],
            budget: QK_BUDGET,
        };
        for &(v, _) in &st.labeled {
            st.used[v] = true;
        }
        if st.labeled[..].iter().enumerate().any(|(i, &(u, su))| {
            st.labeled[i + 1..].iter().any(|&(w, sw)| g.has_edge(u, w) != qk_adjacent(su, sw))
        }) {
            continue;
        }
        if st.extend(5) {
            let mut v = Vec::new();
            let mut z = Vec::new();
            for &(x, s) in &st.labeled {
                match s {
                    Slot::V(_) => v.push(x),
                    Slot::Z(i) => z.push((i, x)),
                }
            }
            z.sort_unstable();
            let lab = ChainLabeling { k: v.len(), v, x: None, y: None, z };
            if verify_chain(g, &lab, true, false).is_ok() {
                return Some(lab);
            }
        }
    }
    None
}

struct QkSearch<'a> {
    g: &'a Graph,
    labeled: Vec<(usize, Slot)>,
    used: Vec<bool>,
    budget: usize,
}

impl QkSearch<'_> {
    /// Slot sequence: `v_5, v_6, v_7, z_2, v_8, z_3, ...` with `z_i` right
    /// after `v_{i+5}`. Returns true once every vertex is labeled.
    fn extend(&mut self, next_v: usize) -> bool {
        let n = self.g.n();
        if self.labeled.len() == n {
            return next_v >= 7;
        }
        if self.budget == 0 {
            return false;
        }
        self.budget -= 1;
        // Place v_{next_v}, then optionally z_{next_v - 5}.
        for c in self.candidates(Slot::V(next_v)) {
            self.push(c, Slot::V(next_v));
            if next_v >= 7 {
                let zi = next_v - 5;
                for zc in self.candidates(Slot::Z(zi)) {
                    self.push(zc, Slot::Z(zi));
                    if self.extend(next_v + 1) {
                        return true;
                    }
                    self.pop();
                }
            }
            if self.extend(next_v + 1) {
                return true;
            }
            self.pop();
            if self.budget == 0 {
                return false;
            }
        }
        false
    }

    fn candidates(&self, slot: Slot) -> Vec<usize> {
        (0..self.g.n())
            .filter(|&c| {
                !self.used[c]
                    && self.labeled.iter().all(|&(w, s)| self.g.has_edge(c, w) == qk_adjacent(slot, s))
            })
            .collect()
    }

    fn push(&mut self, v: usize, s: Slot) {
        self.used[v] = true;
        self.labeled.push((v, s));
    }

    fn pop(&mut self) {
        let (v, _) = self.labeled.pop().unwrap();
        self.used[v] = false;
    }
}

/// `max(7, largest order of a prime quotient classified SmallPrime)`; an
/// upper-bound surrogate for the P4-sparseness parameter.
pub fn effective_q(md: &MDTree) -> usize {
    let mut q = 7;
    for id in 0..md.len() {
        if md.kind(id) == MdKind::Prime {
            let quo = md.quotient(id).expect("prime nodes carry a quotient");
            if let Ok(QuotientClass::SmallPrime { order }) = classify_prime_graph(quo) {
                q = q.max(order);
            }
        }
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    /// N(v_{2i-1}) and N(v_{2i}) written out directly from the definition.
    fn qk_neighbors_by_formula(k: usize, p: usize) -> Vec<usize> {
        let mut out = Vec::new();
        if p % 2 == 1 {
            let i = p.div_ceil(2);
            for j in 1..=i {
                if j + 1 != i && 2 * j <= k {
                    out.push(2 * j);
                }
            }
        } else {
            let i = p / 2;
            for j in 1..=k / 2 {
                if j != i {
                    out.push(2 * j);
                }
            }
            for j in i..=k.div_ceil(2) {
                if j != i + 1 && 2 * j - 1 <= k {
                    out.push(2 * j - 1);
                }
            }
        }
        out.sort_unstable();
        out
    }

    #[test]
    fn qk_template_matches_formulas() {
        for k in 6..=12 {
            let (g, _) = spiked_qk(k, &[]);
            for p in 1..=k {
                let nb: Vec<usize> = g.neighbors(p - 1).iter().map(|&v| v + 1).collect();
                assert_eq!(nb, qk_neighbors_by_formula(k, p), "k={k} v_{p}");
            }
        }
    }

    #[test]
    fn z_vertices_follow_their_rules() {
        let k = 10;
        let z: Vec<usize> = (2..=k - 5).collect();
        let (g, lab) = spiked_qk(k, &z);
        for &(i, zv) in &lab.z {
            for p in 1..=k {
                let adj = g.has_edge(zv, p - 1);
                let expect = if i % 2 == 1 {
                    p % 2 == 0 && p / 2 <= i.div_ceil(2)
                } else {
                    !(p % 2 == 1 && p.div_ceil(2) <= i / 2 + 1)
                };
                assert_eq!(adj, expect, "z_{i} v_{p}");
            }
        }
    }

    #[test]
    fn classify_discs_and_spiders() {
        assert!(matches!(classify_prime_graph(&Graph::cycle(7)).unwrap(), QuotientClass::DiscCycle { .. }));
        let co = Graph::cycle(8).complement();
        assert!(matches!(classify_prime_graph(&co).unwrap(), QuotientClass::DiscCoCycle { .. }));
        assert!(matches!(classify_prime_graph(&Graph::path(4)).unwrap(), QuotientClass::ThinSpider(_)));
        // Thick spider with |S| = |K| = 3.
        let mut edges = vec![(3, 4), (3, 5), (4, 5)];
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    edges.push((i, 3 + j));
                }
            }
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        match classify_prime_graph(&g).unwrap() {
            QuotientClass::ThickSpider(p) => assert_eq!(p.s, vec![0, 1, 2]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_chains_under_relabeling() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut cases: Vec<(Graph, &str)> = Vec::new();
        for k in 6..=11 {
            for (x, y) in [(false, false), (true, false), (true, true)] {
                let (g, _) = spiked_pk(k, x, y);
                cases.push((g.complement(), "spiked-pk-bar"));
                cases.push((g, "spiked-pk"));
            }
            let z: Vec<usize> = (2..=k - 5).collect();
            for zs in [vec![], z.clone(), z.iter().copied().filter(|i| i % 2 == 0).collect()] {
                let (g, _) = spiked_qk(k, &zs);
                cases.push((g.complement(), "spiked-qk-bar"));
                cases.push((g, "spiked-qk"));
            }
        }
        for (g, tag) in cases {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            let c = classify_prime_graph(&h).unwrap();
            assert_eq!(c.tag(), tag, "n={}", h.n());
            c.verify(&h).unwrap();
        }
    }

    #[test]
    fn non_prime_rejected() {
        assert!(classify_prime_graph(&Graph::complete(5)).is_err());
        assert!(classify_prime_graph(&Graph::cycle(4)).is_err());
    }
}
