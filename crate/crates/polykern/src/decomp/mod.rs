//! Modular decomposition, split decomposition, twin partitions, width
//! parameters and recognition of special prime graphs.

mod classify;
mod modular;
mod nd;
mod split;

pub use classify::{
    classify_prime_graph, effective_q, spiked_pk, spiked_qk, ChainLabeling, QuotientClass,
    SpiderPartition,
};
pub use modular::{is_module, modular_decomposition, MDTree, MdKind, MdNode};
pub use nd::{nd_partition, NDPartition, TwinClass, TwinKind};
pub use split::{
    find_split, split_decomposition, ComponentKind, SplitComponent, SplitTree, SplitTreeError,
};
