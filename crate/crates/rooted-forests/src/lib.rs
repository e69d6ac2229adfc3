//! Exact computer algebra for the bialgebras carried by rooted forests.
//!
//! The crate provides:
//!
//! * canonical unlabeled rooted trees, forests and edge-marked trees with a
//!   deterministic bracket codec ([`tree`], [`marked`]);
//! * admissible-cut and edge-contraction combinatorics, including the edge
//!   bijections that raise cuts through contractions and trunk inclusions
//!   ([`cut`]);
//! * exact integer linear combinations over any basis sort and the structural
//!   tensor maps ([`lincomb`]);
//! * the Connes–Kreimer coproduct, the contraction coproduct, the degree-zero
//!   quotient and the coaction between them ([`classic`]);
//! * the two doubling bialgebras built on tree/cut and tree/subforest pairs
//!   ([`doubling`]);
//! * the interplay maps between the doublings — the coaction `φ`, the dual
//!   products `⊛` and `♯`, the action `ψ` and the map `ξ` ([`interplay`]);
//! * an exhaustive verifier for every identity these structures satisfy, on
//!   all basis elements up to a vertex bound ([`verify`]).
//!
//! Everything is immutable after construction and all operations are pure, so
//! values can be shared freely across threads; the verifier fans instances
//! out over a worker pool.
//!
//! The `examples/` directory walks through each capability; the `rooted-forests`
//! binary exposes enumeration, coproduct evaluation and law verification on
//! the command line.

#![forbid(unsafe_code)]

pub mod classic;
pub mod cli;
pub mod cut;
pub mod doubling;
pub mod error;
pub mod interplay;
pub mod lincomb;
pub mod marked;
pub mod tree;
pub mod verify;

pub use error::Error;
pub use lincomb::LinComb;
pub use marked::MarkedTree;
pub use tree::{enumerate_forests, enumerate_trees, EdgeSet, Forest, RootedTree};
