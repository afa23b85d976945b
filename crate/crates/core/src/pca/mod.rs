//! Model-independent PCA machinery.
//!
//! Application in a pca is partial and, in the models here, only
//! semi-decidable, so every question is asked under a budget and answered
//! with an [`Outcome`] or a three-valued [`Verdict`].

mod abstraction;
mod eval;
mod feferman;
mod term;

use core::fmt;

pub use abstraction::{abstract_term, AbstractError};
pub use eval::{eval_term, kleene_eq, TermError};
pub use feferman::{check_feferman, FefermanReport, Tally};
pub use term::Term;

/// Result of a budgeted evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<E> {
    Value(E),
    /// No value within the budget; `spent` steps were used.
    DivergedSoFar { spent: u64 },
}

impl<E> Outcome<E> {
    pub fn value(self) -> Option<E> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::DivergedSoFar { .. } => None,
        }
    }

    pub fn is_value(&self) -> bool {
        matches!(self, Outcome::Value(_))
    }
}

/// Answer to a semi-decidable question.
///
/// `Proven` and `Refuted` are final: more budget never flips them.
/// `Unknown` may later resolve either way.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Proven,
    Refuted,
    Unknown { spent: u64 },
}

impl Verdict {
    pub fn is_proven(self) -> bool {
        self == Verdict::Proven
    }

    pub fn is_refuted(self) -> bool {
        self == Verdict::Refuted
    }

    pub fn is_unknown(self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    /// Whether `later` (obtained with at least as much budget) is a
    /// legal successor of `self`.
    pub fn may_become(self, later: Verdict) -> bool {
        match self {
            Verdict::Proven | Verdict::Refuted => later == self,
            Verdict::Unknown { .. } => true,
        }
    }

    pub fn from_bool(b: bool) -> Verdict {
        if b {
            Verdict::Proven
        } else {
            Verdict::Refuted
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Proven => f.write_str("proven"),
            Verdict::Refuted => f.write_str("refuted"),
            Verdict::Unknown { spent } => write!(f, "unknown (spent {spent})"),
        }
    }
}

/// A partial applicative structure with designated `k` and `s`.
///
/// Implementations must be deterministic and budget-monotone: a value
/// obtained with some budget is obtained, unchanged, with any larger one.
pub trait Pca {
    type Elem: Clone + Eq + fmt::Debug;

    /// `a · b`, drawing steps from `budget`. `None` when the budget runs
    /// out before a value appears.
    fn apply(&self, a: &Self::Elem, b: &Self::Elem, budget: &mut u64) -> Option<Self::Elem>;

    /// Equality of elements. Must never answer `Refuted` for identical
    /// elements.
    fn eq(&self, a: &Self::Elem, b: &Self::Elem, budget: u64) -> Verdict;

    fn k(&self) -> Self::Elem;

    fn s(&self) -> Self::Elem;
}

impl<P: Pca + ?Sized> Pca for &P {
    type Elem = P::Elem;

    fn apply(&self, a: &Self::Elem, b: &Self::Elem, budget: &mut u64) -> Option<Self::Elem> {
        (**self).apply(a, b, budget)
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem, budget: u64) -> Verdict {
        (**self).eq(a, b, budget)
    }

    fn k(&self) -> Self::Elem {
        (**self).k()
    }

    fn s(&self) -> Self::Elem {
        (**self).s()
    }
}
