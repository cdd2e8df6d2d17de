use super::{verify_irredundant, CwError, KExpression, KNode};
use crate::graph::Distance;
use num_bigint::BigUint;
use num_traits::Zero;

const NONE: usize = usize::MAX;

/// Distances from the vertices of one class to another class: the best
/// value, a vertex attaining it, and the best value over the other
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Top2 {
    best: Distance,
    arg: usize,
    second: Distance,
}

impl Top2 {
    const EMPTY: Top2 = Top2 { best: Distance::Unreachable, arg: NONE, second: Distance::Unreachable };

    /// The same value `c` at every vertex of a class of `size` vertices.
    fn constant(c: Distance, rep: usize, size: usize) -> Top2 {
        if !c.is_finite() {
            return Top2::EMPTY;
        }
        let second = if size >= 2 { c } else { Distance::Unreachable };
        Top2 { best: c, arg: rep, second }
    }

    fn shift(self, c: Distance) -> Top2 {
        if !(self.best + c).is_finite() {
            return Top2::EMPTY;
        }
        Top2 { best: self.best + c, arg: self.arg, second: self.second + c }
    }

    /// Summary of the pointwise minimum of functions on the same vertices
    /// (or on disjoint vertex sets).
    fn min_of(parts: &[Top2]) -> Top2 {
        let Some(win) = parts.iter().filter(|t| t.best.is_finite()).min_by_key(|t| t.best) else {
            return Top2::EMPTY;
        };
        let arg = win.arg;
        let second = parts
            .iter()
            .map(|t| if t.arg == arg { t.second } else { t.best })
            .min()
            .unwrap_or(Distance::Unreachable);
        Top2 { best: win.best, arg, second }
    }
}

/// Dynamic-programming state of one labeled subresult. All tables are
/// indexed by labels `0..=k`; label 0 is never used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairTables {
    k: usize,
    /// Edges with one end labeled `p` and the other `q`.
    m: Vec<BigUint>,
    /// Paths on three vertices, not necessarily induced, with ends labeled
    /// `p` and `q`.
    n3: Vec<BigUint>,
    /// For `p != q`, distances from the vertices of `V_p` to `V_q`.
    far: Vec<Top2>,
    /// Shortest path with two distinct ends in `V_p`, or the length of a
    /// closed walk that certifies an already counted cycle.
    diag: Vec<Distance>,
    sizes: Vec<usize>,
    rep: Vec<usize>,
    triangles: BigUint,
    girth: Distance,
}

impl PairTables {
    fn intro(k: usize, label: usize, vertex: usize) -> PairTables {
        let mut sizes = vec![0; k + 1];
        sizes[label] = 1;
        let mut rep = vec![NONE; k + 1];
        rep[label] = vertex;
        PairTables {
            k,
            m: vec![BigUint::zero(); (k + 1) * (k + 1)],
            n3: vec![BigUint::zero(); (k + 1) * (k + 1)],
            far: vec![Top2::EMPTY; (k + 1) * (k + 1)],
            diag: vec![Distance::Unreachable; k + 1],
            sizes,
            rep,
            triangles: BigUint::zero(),
            girth: Distance::Unreachable,
        }
    }

    fn at(&self, p: usize, q: usize) -> usize {
        p * (self.k + 1) + q
    }

    /// Largest label.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `m_{p,q}`.
    pub fn m(&self, p: usize, q: usize) -> &BigUint {
        &self.m[self.at(p, q)]
    }

    /// `n_{p,q}`.
    pub fn n3(&self, p: usize, q: usize) -> &BigUint {
        &self.n3[self.at(p, q)]
    }

    /// `d_{p,q}`: the `V_p V_q` distance for `p != q`; for `p = q` the
    /// shortest path between two distinct vertices of `V_p`, or a closed
    /// walk length no smaller than the girth.
    pub fn d(&self, p: usize, q: usize) -> Distance {
        if p == q {
            self.diag[p]
        } else {
            self.far[self.at(p, q)].best
        }
    }

    /// `|V_p|`.
    pub fn size(&self, p: usize) -> usize {
        self.sizes[p]
    }

    /// Triangles of the subresult.
    pub fn triangles(&self) -> &BigUint {
        &self.triangles
    }

    /// Girth of the subresult.
    pub fn girth(&self) -> Distance {
        self.girth
    }

    fn set_m(&mut self, p: usize, q: usize, v: BigUint) {
        let (a, b) = (self.at(p, q), self.at(q, p));
        self.m[a] = v.clone();
        self.m[b] = v;
    }

    fn set_n3(&mut self, p: usize, q: usize, v: BigUint) {
        let (a, b) = (self.at(p, q), self.at(q, p));
        self.n3[a] = v.clone();
        self.n3[b] = v;
    }

    fn far(&self, p: usize, q: usize) -> Top2 {
        self.far[self.at(p, q)]
    }

    fn set_far(&mut self, p: usize, q: usize, t: Top2) {
        let a = self.at(p, q);
        self.far[a] = t;
    }

    fn union(&mut self, o: PairTables) {
        for (x, y) in self.m.iter_mut().zip(o.m) {
            *x += y;
        }
        for (x, y) in self.n3.iter_mut().zip(o.n3) {
            *x += y;
        }
        for (x, y) in self.far.iter_mut().zip(o.far) {
            *x = Top2::min_of(&[*x, y]);
        }
        for (x, y) in self.diag.iter_mut().zip(o.diag) {
            *x = (*x).min(y);
        }
        for (x, y) in self.sizes.iter_mut().zip(o.sizes) {
            *x += y;
        }
        for (x, y) in self.rep.iter_mut().zip(o.rep) {
            if *x == NONE {
                *x = y;
            }
        }
        self.triangles += o.triangles;
        self.girth = self.girth.min(o.girth);
    }

    fn rename(&mut self, i: usize, j: usize) {
        let k = self.k;
        let mjj = self.m(i, i) + self.m(i, j) + self.m(j, j);
        let njj = self.n3(i, i) + self.n3(i, j) + self.n3(j, j);
        self.diag[j] = self.diag[i].min(self.d(i, j)).min(self.diag[j]);
        for p in 1..=k {
            if p == i || p == j {
                continue;
            }
            let mp = self.m(p, i) + self.m(p, j);
            self.set_m(p, j, mp);
            let np = self.n3(p, i) + self.n3(p, j);
            self.set_n3(p, j, np);
            self.set_far(p, j, Top2::min_of(&[self.far(p, i), self.far(p, j)]));
            self.set_far(j, p, Top2::min_of(&[self.far(i, p), self.far(j, p)]));
        }
        self.set_m(j, j, mjj);
        self.set_n3(j, j, njj);
        for p in 0..=k {
            self.set_m(p, i, BigUint::zero());
            self.set_n3(p, i, BigUint::zero());
            self.set_far(p, i, Top2::EMPTY);
            self.set_far(i, p, Top2::EMPTY);
        }
        self.set_far(j, j, Top2::EMPTY);
        self.diag[i] = Distance::Unreachable;
        self.sizes[j] += self.sizes[i];
        self.sizes[i] = 0;
        if self.rep[j] == NONE {
            self.rep[j] = self.rep[i];
        }
        self.rep[i] = NONE;
    }

    /// Join between two nonempty classes that share no edge yet.
    fn join(&mut self, i: usize, j: usize) {
        self.join_triangles(i, j);
        self.join_girth(i, j);
    }

    fn join_triangles(&mut self, i: usize, j: usize) {
        let k = self.k;
        let (bi, bj) = (BigUint::from(self.sizes[i]), BigUint::from(self.sizes[j]));
        let (mii, mjj) = (self.m(i, i).clone(), self.m(j, j).clone());
        self.triangles += &bj * &mii + &bi * &mjj + self.n3(i, j);
        let mut n_new = self.n3.clone();
        let at = |p: usize, q: usize| p * (k + 1) + q;
        let mut bump = |p: usize, q: usize, v: BigUint| {
            n_new[at(p, q)] += &v;
            if p != q {
                n_new[at(q, p)] += v;
            }
        };
        bump(i, i, &bj * &bi * (&bi - 1u32) / 2u32);
        bump(j, j, &bi * &bj * (&bj - 1u32) / 2u32);
        bump(i, j, 2u32 * &bj * &mii + 2u32 * &bi * &mjj);
        for q in 1..=k {
            if q != i && q != j {
                bump(i, q, &bi * self.m(j, q));
                bump(j, q, &bj * self.m(i, q));
            }
        }
        self.n3 = n_new;
        self.set_m(i, j, &bi * &bj);
    }

    fn join_girth(&mut self, i: usize, j: usize) {
        let k = self.k;
        let one = Distance::Finite(1);
        let two = Distance::Finite(2);
        let (si, sj) = (self.sizes[i], self.sizes[j]);
        let old = self.clone();

        let mut g = old.girth.min(old.d(i, j) + 1).min(old.diag[i] + 2).min(old.diag[j] + 2);
        if si.min(sj) >= 2 {
            g = g.min(Distance::Finite(4));
        }
        self.girth = g;

        self.diag[i] = if si >= 2 {
            old.diag[i].min(two)
        } else {
            old.diag[i].min(old.d(i, j) + 1).min(old.diag[j] + 2)
        };
        self.diag[j] = if sj >= 2 {
            old.diag[j].min(two)
        } else {
            old.diag[j].min(old.d(i, j) + 1).min(old.diag[i] + 2)
        };
        for p in 1..=k {
            if p == i || p == j || old.sizes[p] == 0 {
                continue;
            }
            // Two distinct ends near V_i (or V_j) meet through one vertex
            // of the other side; otherwise one join edge is used.
            let (pi, pj) = (old.far(p, i), old.far(p, j));
            let d = old.diag[p]
                .min(pi.best + 1 + old.far(j, p).best)
                .min(pi.best + pi.second + 2)
                .min(pj.best + pj.second + 2);
            self.diag[p] = d;
        }

        self.set_far(i, j, Top2::constant(one, old.rep[i], si));
        self.set_far(j, i, Top2::constant(one, old.rep[j], sj));
        for p in 1..=k {
            if p == i || p == j {
                continue;
            }
            self.set_far(p, i, Top2::min_of(&[old.far(p, i), old.far(p, j).shift(one)]));
            self.set_far(p, j, Top2::min_of(&[old.far(p, j), old.far(p, i).shift(one)]));
            self.set_far(i, p, side_to(&old, i, j, p));
            self.set_far(j, p, side_to(&old, j, i, p));
        }
        for p in 1..=k {
            if p == i || p == j {
                continue;
            }
            for q in 1..=k {
                if q == i || q == j || q == p {
                    continue;
                }
                let via_i = old.far(p, i).shift(self.far(j, q).best + 1);
                let via_j = old.far(p, j).shift(self.far(i, q).best + 1);
                self.set_far(p, q, Top2::min_of(&[old.far(p, q), via_i, via_j]));
            }
        }
    }
}

/// Distances from `V_a` to `V_p` after joining `V_a` with `V_b`. A vertex
/// of `V_a` reaches `V_p` directly, through any vertex of `V_b`, or through
/// a vertex of `V_b` and then another vertex of `V_a`.
fn side_to(old: &PairTables, a: usize, b: usize, p: usize) -> Top2 {
    let f = old.far(a, p);
    let via_b = Top2::constant(old.far(b, p).best + 1, old.rep[a], old.sizes[a]);
    let mut t = Top2::min_of(&[f, via_b]);
    if !t.best.is_finite() {
        return t;
    }
    // Every x in V_a reaches x' != x and then V_p at 2 + f(x').
    let size = old.sizes[a];
    let bounce = if size >= 3 || (size == 2 && t.arg == f.arg) {
        f.best + 2
    } else if size == 2 {
        f.second + 2
    } else {
        Distance::Unreachable
    };
    t.second = t.second.min(bounce);
    t
}

/// Runs both dynamic programs, calling `trace(node, tables)` after every
/// node with the state of the subresult rooted there. Rejects redundant
/// expressions.
pub fn dp_trace(
    expr: &KExpression,
    mut trace: impl FnMut(usize, &PairTables),
) -> Result<PairTables, CwError> {
    if let Some(node) = verify_irredundant(expr).first_violation {
        return Err(CwError::Redundant { node });
    }
    let k = expr.width() as usize;
    let mut stack: Vec<PairTables> = Vec::new();
    let mut vertices = 0;
    for (id, node) in expr.nodes().iter().enumerate() {
        match *node {
            KNode::Intro(l) => {
                stack.push(PairTables::intro(k, l as usize, vertices));
                vertices += 1;
            }
            KNode::Union(..) => {
                let b = stack.pop().expect("post-order");
                stack.last_mut().expect("post-order").union(b);
            }
            KNode::Join(i, j, _) => {
                let t = stack.last_mut().expect("post-order");
                let (i, j) = (i as usize, j as usize);
                if t.sizes[i] > 0 && t.sizes[j] > 0 {
                    t.join(i, j);
                }
            }
            KNode::Rename(i, j, _) => stack.last_mut().expect("post-order").rename(i as usize, j as usize),
        }
        trace(id, stack.last().expect("post-order"));
    }
    Ok(stack.pop().expect("nonempty expression"))
}

/// Number of triangles of the evaluated graph.
///
/// ```
/// use polykern::cwexpr::{dp_triangle_count, parse_kexpr};
/// let k3 = parse_kexpr("eta(1,2,(eta(1,2,(v(1)+v(2)))+v(2)))").unwrap();
/// assert!(dp_triangle_count(&k3).is_err()); // second join repeats an edge
/// let k3 = parse_kexpr("eta(1,2,(rho(2,1,eta(1,2,(v(1)+v(2))))+v(2)))").unwrap();
/// assert_eq!(dp_triangle_count(&k3).unwrap(), 1u32.into());
/// ```
pub fn dp_triangle_count(expr: &KExpression) -> Result<BigUint, CwError> {
    dp_trace(expr, |_, _| {}).map(|t| t.triangles)
}

/// Girth of the evaluated graph; unreachable for forests.
///
/// ```
/// use polykern::cwexpr::{dp_girth, parse_kexpr, P4_EXPRESSION};
/// use polykern::graph::Distance;
/// assert_eq!(dp_girth(&parse_kexpr(P4_EXPRESSION).unwrap()).unwrap(), Distance::Unreachable);
/// ```
pub fn dp_girth(expr: &KExpression) -> Result<Distance, CwError> {
    dp_trace(expr, |_, _| {}).map(|t| t.girth)
}
