//! Increasing 1,2-trees, Cayley trees, and a bijection between them that
//! turns triangles into twists.
//!
//! An increasing 1,2-tree on `n` vertices is built by attaching vertex `v`
//! either to one earlier vertex or to both ends of an existing edge. A
//! twist of a Cayley tree rooted at 1 is an edge whose parent exceeds the
//! smallest label below it. Both families are counted by `n^(n-2)`, and
//! the bijection refines this by sending `m`-edge trees to trees with
//! `m - n + 1` twists.

pub mod bijection;
pub mod counting;
pub mod doc;
pub mod enumeration;
pub mod par;
pub mod sampling;
pub mod series;
pub mod trees;
