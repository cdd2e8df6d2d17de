//! SPLIT-and-MATCH over a module and the pending-module rule.

use super::{Matching, MatchingError};
use crate::decomp::is_module;
use crate::graph::Graph;
use crate::matching::blossom::find_augmenting_path;

/// SPLIT-and-MATCH of the vertex set `side` against `scope`, which must be
/// completely joined to it. Exhausts MATCH (an exposed vertex on each side),
/// then SPLIT (two exposed vertices of `side` take over a pair of `f` lying
/// inside `scope`). Vertices are taken in increasing order. Returns the
/// number of operations.
pub(crate) fn split_and_match_sides(f: &mut Matching, side: &[usize], scope: &[usize], in_scope: &dyn Fn(usize) -> bool) -> usize {
    let mut mine: Vec<usize> = side.iter().copied().filter(|&u| !f.is_matched(u)).collect();
    let mut theirs: Vec<usize> = scope.iter().copied().filter(|&v| !f.is_matched(v)).collect();
    mine.sort_unstable();
    theirs.sort_unstable();
    let mut ops = 0;
    let (mut i, mut j) = (0, 0);
    while i < mine.len() && j < theirs.len() {
        f.add(mine[i], theirs[j]);
        i += 1;
        j += 1;
        ops += 1;
    }
    if mine.len() - i < 2 {
        return ops;
    }
    let mut inside: Vec<(usize, usize)> = scope
        .iter()
        .filter_map(|&v| f.mate(v).filter(|&w| v < w && in_scope(w)).map(|w| (v, w)))
        .collect();
    inside.sort_unstable();
    for (v, w) in inside {
        if mine.len() - i < 2 {
            break;
        }
        f.remove(v);
        f.add(mine[i], v);
        f.add(mine[i + 1], w);
        i += 2;
        ops += 1;
    }
    ops
}

/// Joins two solved sides: SPLIT-and-MATCH on `a`, then on `b`.
pub(crate) fn join_sides(f: &mut Matching, a: &[usize], b: &[usize], in_a: &dyn Fn(usize) -> bool, in_b: &dyn Fn(usize) -> bool) {
    split_and_match_sides(f, a, b, in_b);
    split_and_match_sides(f, b, a, in_a);
}

fn module_scope(g: &Graph, module: &[usize]) -> Result<(Vec<bool>, Vec<usize>), MatchingError> {
    if module.is_empty() || module.iter().any(|&v| v >= g.n()) {
        return Err(MatchingError::Precondition("module must be a nonempty vertex set of the graph".into()));
    }
    if !is_module(g, module) {
        return Err(MatchingError::Precondition(format!("{module:?} is not a module")));
    }
    let mut inside = vec![false; g.n()];
    for &v in module {
        inside[v] = true;
    }
    let scope: Vec<usize> = g.neighbors(module[0]).iter().copied().filter(|&w| !inside[w]).collect();
    Ok((inside, scope))
}

/// SPLIT-and-MATCH on the module `module` of `g` against its neighbourhood.
///
/// ```
/// use polykern::graph::Graph;
/// use polykern::matching::{split_and_match, Matching};
/// let g = Graph::complete_bipartite(3, 3);
/// let f = split_and_match(&g, &Matching::new(6), &[0, 1, 2]).unwrap();
/// assert_eq!(f.cardinality(), 3);
/// ```
pub fn split_and_match(g: &Graph, f: &Matching, module: &[usize]) -> Result<Matching, MatchingError> {
    f.validate(g)?;
    let (_, scope) = module_scope(g, module)?;
    let mut in_scope = vec![false; g.n()];
    for &v in &scope {
        in_scope[v] = true;
    }
    let mut out = f.clone();
    split_and_match_sides(&mut out, module, &scope, &|w| in_scope[w]);
    Ok(out)
}

/// Reference SPLIT-and-MATCH that rescans the whole graph before every
/// operation, for differential testing.
pub fn split_and_match_naive(g: &Graph, f: &Matching, module: &[usize]) -> Result<Matching, MatchingError> {
    f.validate(g)?;
    let (inside, scope) = module_scope(g, module)?;
    let mut out = f.clone();
    loop {
        let exposed_m: Vec<usize> = module.iter().copied().filter(|&u| !out.is_matched(u)).collect();
        let exposed_s: Vec<usize> = scope.iter().copied().filter(|&v| !out.is_matched(v)).collect();
        if let (Some(&u), Some(&v)) = (exposed_m.iter().min(), exposed_s.iter().min()) {
            out.add(u, v);
            continue;
        }
        let pair = out.pairs().into_iter().find(|&(v, w)| {
            !inside[v] && !inside[w] && g.has_edge(module[0], v) && g.has_edge(module[0], w)
        });
        match (exposed_m.len() >= 2, pair) {
            (true, Some((v, w))) => {
                let mut e = exposed_m.clone();
                e.sort_unstable();
                out.remove(v);
                out.add(e[0], v);
                out.add(e[1], w);
            }
            _ => return Ok(out),
        }
    }
}

/// Result of [`pending_module_rule`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingOutcome {
    /// Pairs some maximum matching of the graph contains.
    pub retained: Vec<(usize, usize)>,
    /// Vertices settled by the rule, sorted.
    pub discarded: Vec<usize>,
}

/// Settles a pending module `module` whose only outside neighbour is `v`,
/// given a maximum matching `f_module` of its induced subgraph. If that
/// matching leaves a vertex `u` exposed, `{u, v}` joins it and `v` is
/// discarded along with the module.
///
/// ```
/// use polykern::graph::Graph;
/// use polykern::matching::{pending_module_rule, Matching};
/// // Pendant vertex 0 hanging off 1 in the path 0 - 1 - 2.
/// let out = pending_module_rule(&Graph::path(3), &[0], 1, &Matching::new(3)).unwrap();
/// assert_eq!(out.retained, vec![(0, 1)]);
/// assert_eq!(out.discarded, vec![0, 1]);
/// ```
pub fn pending_module_rule(g: &Graph, module: &[usize], v: usize, f_module: &Matching) -> Result<PendingOutcome, MatchingError> {
    f_module.validate(g)?;
    let (inside, scope) = module_scope(g, module)?;
    if scope != [v] {
        return Err(MatchingError::Precondition(format!("module has neighbourhood {scope:?}, not {{{v}}}")));
    }
    let pairs = f_module.pairs();
    if pairs.iter().any(|&(a, b)| !inside[a] || !inside[b]) {
        return Err(MatchingError::Precondition("module matching leaves the module".into()));
    }
    let sub = g.induced(module);
    let pos: std::collections::HashMap<usize, usize> = module.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let local: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (pos[&a], pos[&b])).collect();
    if find_augmenting_path(&sub, &Matching::from_pairs(module.len(), &local)?)?.is_some() {
        return Err(MatchingError::Precondition("module matching is not maximum".into()));
    }
    let mut retained = pairs;
    let mut discarded = module.to_vec();
    if let Some(u) = module.iter().copied().filter(|&u| !f_module.is_matched(u)).min() {
        retained.push((u.min(v), u.max(v)));
        discarded.push(v);
    }
    retained.sort_unstable();
    discarded.sort_unstable();
    Ok(PendingOutcome { retained, discarded })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{gen_family, FamilySpec};
    use crate::graph::{oracle_maximum_matching, substitute};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Joins `a` and `b` with maximum inner matchings, returns the join and
    /// their union.
    fn join_with_matchings(a: &Graph, b: &Graph) -> (Graph, Matching) {
        let g = substitute(&Graph::complete(2), &[a.clone(), b.clone()]).unwrap();
        let mut pairs = oracle_maximum_matching(a).pairs();
        pairs.extend(oracle_maximum_matching(b).pairs().iter().map(|&(u, v)| (u + a.n(), v + a.n())));
        let f = Matching::from_pairs(g.n(), &pairs).unwrap();
        (g, f)
    }

    #[test]
    fn join_examples() {
        let (g, f) = join_with_matchings(&Graph::empty(3), &Graph::empty(3));
        let side: Vec<usize> = (0..3).collect();
        let out = split_and_match(&g, &f, &side).unwrap();
        assert_eq!(out.cardinality(), 3);
        // K2 (matched) joined with 2K1: the two exposed vertices split the pair.
        let (g, f) = join_with_matchings(&Graph::empty(2), &Graph::complete(2));
        let out = split_and_match(&g, &f, &[0, 1]).unwrap();
        assert_eq!(out.cardinality(), 2);
        assert!(out.contains(0, 2) && out.contains(1, 3));
    }

    #[test]
    fn join_of_cographs_is_maximum() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        for _ in 0..150 {
            let a = gen_family(&FamilySpec::Cograph { n: rng.gen_range(1..12) }, rng.gen()).unwrap().graph;
            let b = gen_family(&FamilySpec::ErdosRenyi { n: rng.gen_range(1..12), p: 0.3 }, rng.gen()).unwrap().graph;
            let (g, f) = join_with_matchings(&a, &b);
            let sa: Vec<usize> = (0..a.n()).collect();
            let sb: Vec<usize> = (a.n()..g.n()).collect();
            let mut fast = split_and_match(&g, &f, &sa).unwrap();
            fast = split_and_match(&g, &fast, &sb).unwrap();
            let mut slow = split_and_match_naive(&g, &f, &sa).unwrap();
            slow = split_and_match_naive(&g, &slow, &sb).unwrap();
            let want = oracle_maximum_matching(&g).cardinality();
            assert_eq!(fast.cardinality(), want);
            assert_eq!(slow.cardinality(), want);
        }
    }

    #[test]
    fn pending_rule_cases() {
        // K2 module {0, 1} hanging off 2 in a path 2 - 3.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let fm = Matching::from_pairs(4, &[(0, 1)]).unwrap();
        let out = pending_module_rule(&g, &[0, 1], 2, &fm).unwrap();
        assert_eq!(out.retained, vec![(0, 1)]);
        assert_eq!(out.discarded, vec![0, 1]);
        // 3K1 module {0, 1, 2} hanging off 3, with 3 - 4 - 5 beyond.
        let g = Graph::from_edges(6, &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]).unwrap();
        let out = pending_module_rule(&g, &[0, 1, 2], 3, &Matching::new(6)).unwrap();
        assert_eq!(out.retained, vec![(0, 3)]);
        assert_eq!(out.discarded, vec![0, 1, 2, 3]);
        let mut f = Matching::from_pairs(6, &out.retained).unwrap();
        f.add(4, 5);
        assert_eq!(f.cardinality(), oracle_maximum_matching(&g).cardinality());
        assert!(pending_module_rule(&g, &[0, 1], 4, &Matching::new(6)).is_err());
        assert!(pending_module_rule(&g, &[3, 4], 5, &Matching::new(6)).is_err());
    }
}
