//! Polynomial graph algorithms parameterized by decompositions.
//!
//! The crate is organised by concern:
//!
//! - [`graph`]: the [`Graph`](graph::Graph) type, exact numeric types,
//!   brute-force oracles and structured generators;
//! - [`cwexpr`]: clique-width expressions and the triangle / girth dynamic
//!   programs over them;
//! - [`decomp`]: modular and split decomposition, twin partitions and
//!   recognition of the special prime quotient classes;
//! - [`dist`]: eccentricities, hyperbolicity and betweenness centrality over
//!   split and modular decompositions;
//! - [`matching`]: maximum matching by blossom search, witness subgraphs over
//!   modular decompositions, and structured quotient rules.
//!
//! ```
//! use polykern::graph::Graph;
//! use polykern::decomp::split_decomposition;
//! use polykern::dist::eccentricities_split;
//! use polykern::graph::Distance;
//!
//! let g = Graph::path(5);
//! let st = split_decomposition(&g);
//! let ecc = eccentricities_split(&g, &st).unwrap();
//! assert_eq!(ecc[2], Distance::Finite(2));
//! ```

#![forbid(unsafe_code)]
#![warn(missing_docs, rust_2018_idioms)]

#[cfg(doctest)]
mod book;
pub mod cwexpr;
pub mod decomp;
pub mod dist;
pub mod graph;
pub mod matching;



