//! The two-sorted completion theory and the tree of separations.
//!
//! Sentences use the signature `N(·), A(·), 0, S, +, ×, f(·), ·` with the
//! sorts as unary predicates. The text form is TPTP `fof`:
//!
//! ```text
//! sentence ::= fof(name, axiom, formula).
//! formula  ::= term = term | n(term) | a(term) | ~ (formula)
//!            | (formula & formula) | (formula | formula) | (formula => formula)
//!            | ! [Var] : (formula) | ? [Var] : (formula)
//! term     ::= Var | zero | s(term) | plus(term,term) | times(term,term)
//!            | f(term) | app(term,term)
//! ```
//!
//! Variables start with an upper case letter, names are `[a-z0-9_]+`.
//! Lines starting with `%` are comments.

mod emit;
mod syntax;
mod tree;

pub use emit::{as_application, certified_triples, emit_cmpl, induction, induction_formulas, render};
pub use syntax::{Formula, Group, Sentence, Term};
pub use tree::{insep_left, insep_right, leftmost_path, sep_viable, Enumerator, SepNode};
