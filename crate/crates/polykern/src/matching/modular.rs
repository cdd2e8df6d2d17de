//! Maximum matching over a modular decomposition.
//!
//! Modules are solved bottom-up into one global matching. At a node, the
//! children's matchings stay fixed as the only edges inside the children
//! (the reduced graph); the node is finished by augmenting along paths found
//! in witness subgraphs. Series nodes are merged one child at a time, each
//! merge a two-module layer over `K2`.

use super::witness::{witness_loop, ModuleLayer, ModuleMatchBook, WitnessStats};
use super::{Matching, MatchingError};
use crate::decomp::{MDTree, MdKind};
use crate::graph::Graph;

/// Options for [`max_matching_modular_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ModularOptions {
    /// Recompute the module book from scratch after every augmentation.
    pub audit: bool,
}

/// Counters gathered by [`max_matching_modular_with`].
#[derive(Debug, Clone, Default, PartialEq, serde::Serialize)]
pub struct ModularStats {
    /// Witness loops over prime quotients.
    pub witness: WitnessStats,
    /// Witness loops over the two-module series merges.
    pub series: WitnessStats,
    /// Prime nodes solved.
    pub prime_nodes: usize,
    /// Series merges performed.
    pub series_merges: usize,
}

pub(crate) fn check_cover(g: &Graph, md: &MDTree) -> Result<(), MatchingError> {
    if g.n() == 0 && md.is_empty() {
        return Ok(());
    }
    if md.is_empty() || md.vertices(md.root()).len() != g.n() {
        return Err(MatchingError::Precondition("modular decomposition does not cover the graph".into()));
    }
    Ok(())
}

/// Completes the matching of a prime node whose children are already solved.
pub(crate) fn finish_prime(
    blocks: Vec<Vec<usize>>,
    quotient: Graph,
    f: &mut Matching,
    stats: &mut WitnessStats,
    audit: bool,
) -> Result<(), MatchingError> {
    let layer = ModuleLayer::from_matching(blocks, quotient, f);
    let mut book = ModuleMatchBook::new(&layer, f)?;
    witness_loop(&layer, f, &mut book, stats, audit, &mut Vec::new())
}

/// Completes the matching of a series node by merging children in order.
pub(crate) fn finish_series(
    mut blocks: impl Iterator<Item = Vec<usize>>,
    f: &mut Matching,
    stats: &mut ModularStats,
    audit: bool,
) -> Result<(), MatchingError> {
    let Some(first) = blocks.next() else { return Ok(()) };
    let mut layer = ModuleLayer::from_matching(vec![first], Graph::empty(1), f);
    let mut book = ModuleMatchBook::new(&layer, f)?;
    let mut touched = Vec::new();
    for b in blocks {
        layer.push_joined(b, f);
        book.push_block(&layer, f);
        touched.clear();
        witness_loop(&layer, f, &mut book, &mut stats.series, audit, &mut touched)?;
        layer.absorb_last(f, &touched);
        book.absorb_last();
        stats.series_merges += 1;
        if audit {
            book.audit(&layer, f)?;
        }
    }
    Ok(())
}

/// Vertex sets of the children of `id`, in child order.
pub(crate) fn child_blocks(md: &MDTree, id: usize) -> Vec<Vec<usize>> {
    md.children(id).iter().map(|&c| md.vertices(c).to_vec()).collect()
}

/// Maximum matching from the modular decomposition.
///
/// ```
/// use polykern::decomp::modular_decomposition;
/// use polykern::graph::{substitute, Graph};
/// use polykern::matching::max_matching_modular;
/// let g = substitute(&Graph::cycle(5), &vec![Graph::complete(2); 5]).unwrap();
/// let f = max_matching_modular(&g, &modular_decomposition(&g));
/// assert_eq!(f.cardinality(), 5);
/// ```
pub fn max_matching_modular(g: &Graph, md: &MDTree) -> Matching {
    max_matching_modular_with(g, md, ModularOptions::default()).expect("decomposition matches the graph").0
}

/// [`max_matching_modular`] with options, returning counters. Fails when
/// `md` does not describe `g`, or when an audit finds a stale book.
pub fn max_matching_modular_with(
    g: &Graph,
    md: &MDTree,
    opts: ModularOptions,
) -> Result<(Matching, ModularStats), MatchingError> {
    check_cover(g, md)?;
    let mut f = Matching::new(g.n());
    let mut stats = ModularStats::default();
    if md.is_empty() {
        return Ok((f, stats));
    }
    for id in md.postorder() {
        match md.kind(id) {
            MdKind::Leaf(_) | MdKind::Parallel => {}
            MdKind::Series => {
                let blocks = child_blocks(md, id);
                finish_series(blocks.into_iter(), &mut f, &mut stats, opts.audit)?;
            }
            MdKind::Prime => {
                let q = md.quotient(id).expect("prime nodes carry a quotient").clone();
                finish_prime(child_blocks(md, id), q, &mut f, &mut stats.witness, opts.audit)?;
                stats.prime_nodes += 1;
            }
        }
    }
    f.validate(g)?;
    Ok((f, stats))
}
