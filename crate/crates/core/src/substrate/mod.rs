//! The computability substrate: a small universal language over the
//! naturals.
//!
//! Programs ([`Expr`]) are numbered by a total decoding ([`decode`]) so
//! every natural is a program. [`run`] is the step-indexed universal
//! function `φ_e(x)`; [`smn`] and [`fix`] give the S-m-n and recursion
//! theorems, and [`insep_pair`] approximates the standard computably
//! inseparable pair.
//!
//! The textual form of programs is an S-expression:
//!
//! ```text
//! e ::= (lit N) | in | (succ e) | (pred e) | (ifz e e e) | (pair e e)
//!     | (fst e) | (snd e) | (app e e) | diverge
//! ```

mod expr;
mod insep;
mod machine;
mod value;
mod recursion;

pub use expr::{decode, encode, Expr, SPECIALIZE_MIN};
pub use insep::{insep_pair, membership, separator_code, Side};
pub use machine::{apply_metered, eval, eval_metered, run, run_counted, run_metered, EmptyOracle, Fuel, Oracle};
pub use value::{Num, SMALL_BITS};
pub use recursion::{fix, fix_code, omega, smn, specializer_code};

