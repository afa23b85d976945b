//! Executable partial combinatory algebras.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure
//! algorithms. Text formats, files and the command line live in the
//! `pcalab` companion crate.
//!
//! * [`substrate`]: a small universal language over the naturals with a
//!   step-indexed evaluator, Gödel numbering, S-m-n and the recursion
//!   theorem.
//! * [`pca`]: model-independent machinery (terms, strict evaluation,
//!   Kleene equality as a budgeted verdict, bracket abstraction, checking
//!   the `k`/`s` laws).
//! * [`k1`]: Kleene's first model and the `t_n` ladder.
//! * [`graph`]: Scott's graph model restricted to enumerable sets.
//! * [`presentations`]: numbered presentations and the diagonal refuter.
//! * [`cmpl`]: the two-sorted completion theory and the separator tree.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cmpl;
pub mod coding;
pub mod graph;
pub mod k1;
pub mod pca;
pub mod presentations;
pub mod substrate;

pub use coding::Nat;
pub use pca::{Outcome, Verdict};
