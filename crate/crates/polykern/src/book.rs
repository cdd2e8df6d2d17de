// The guide's chapters, compiled as doc-tests so every snippet keeps
// building against the current API.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/decompositions.md")]
pub mod decompositions {}
#[doc = include_str!("../../../book/src/clique-width.md")]
pub mod clique_width {}
#[doc = include_str!("../../../book/src/distances.md")]
pub mod distances {}
#[doc = include_str!("../../../book/src/matching.md")]
pub mod matching {}
#[doc = include_str!("../../../book/src/testing.md")]
pub mod testing {}
