use alloc::string::{String, ToString};
use core::fmt;

use super::{Outcome, Pca, Term, Verdict};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TermError {
    /// The term still mentions this variable.
    Open(String),
}

impl fmt::Display for TermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermError::Open(x) => write!(f, "term is not closed: free variable `{x}`"),
        }
    }
}

/// Strict left-to-right evaluation of a closed term. Both sides of an
/// application must have values before it is attempted; the budget is
/// shared by the whole evaluation.
pub fn eval_term<P: Pca>(pca: &P, t: &Term<P::Elem>, budget: u64) -> Result<Outcome<P::Elem>, TermError> {
    if let Some(x) = t.first_var() {
        return Err(TermError::Open(x.to_string()));
    }
    let mut left = budget;
    Ok(match go(pca, t, &mut left) {
        Some(v) => Outcome::Value(v),
        None => Outcome::DivergedSoFar { spent: budget - left },
    })
}

fn go<P: Pca>(pca: &P, t: &Term<P::Elem>, left: &mut u64) -> Option<P::Elem> {
    match t {
        Term::Const(c) => Some(c.clone()),
        Term::Var(_) => unreachable!("closed term"),
        Term::App(f, a) => {
            let f = go(pca, f, left)?;
            let a = go(pca, a, left)?;
            pca.apply(&f, &a, left)
        }
    }
}

/// Kleene equality `t ≃ u` under a budget (each side gets the full
/// budget).
///
/// One-sided convergence is `Unknown`: the other side may still converge.
/// Two divergent sides are `Unknown` too, since divergence is never
/// certified.
pub fn kleene_eq<P: Pca>(pca: &P, t: &Term<P::Elem>, u: &Term<P::Elem>, budget: u64) -> Result<Verdict, TermError> {
    let lhs = eval_term(pca, t, budget)?;
    let rhs = eval_term(pca, u, budget)?;
    Ok(match (lhs, rhs) {
        (Outcome::Value(a), Outcome::Value(b)) => pca.eq(&a, &b, budget),
        (Outcome::DivergedSoFar { spent: x }, Outcome::DivergedSoFar { spent: y }) => {
            Verdict::Unknown { spent: x + y }
        }
        (Outcome::DivergedSoFar { spent }, _) | (_, Outcome::DivergedSoFar { spent }) => {
            Verdict::Unknown { spent }
        }
    })
}
