use alloc::string::{String, ToString};
use core::fmt;

use super::{Pca, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbstractError {
    /// A free variable of the body that is not among the abstracted ones.
    StrayVariable(String),
}

impl fmt::Display for AbstractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbstractError::StrayVariable(x) => write!(f, "variable `{x}` is not bound by the abstraction"),
        }
    }
}

/// Combinatory-completeness compiler: returns a closed `b` built from
/// `k`, `s` and the constants of `t` with
///
/// * `b a₁ ⋯ aₙ↓` for all `aᵢ`, and
/// * `b a₁ ⋯ aₙ a ≃ t(a₁, …, aₙ, a)`.
///
/// Abstraction runs over `x`, then `xₙ`, …, `x₁` with the rules
/// `⟨x⟩x = s k k`, `⟨x⟩M = k M` when `x` is not free in `M`, and
/// `⟨x⟩(P Q) = s (⟨x⟩P) (⟨x⟩Q)`. The `k M` rule is only used when `M` is
/// sure to be defined (an atom, or a partial application of `k` or `s` to
/// such terms); otherwise a closed application such as `a b` with
/// `a·b↑` would make `b` itself undefined.
pub fn abstract_term<P: Pca>(
    pca: &P,
    t: &Term<P::Elem>,
    vars: &[&str],
    x: &str,
) -> Result<Term<P::Elem>, AbstractError> {
    for v in t.free_vars() {
        if v != x && !vars.contains(&v) {
            return Err(AbstractError::StrayVariable(v.to_string()));
        }
    }
    let k = Term::Const(pca.k());
    let s = Term::Const(pca.s());
    let mut body = bracket(&k, &s, x, t);
    for v in vars.iter().rev() {
        body = bracket(&k, &s, v, &body);
    }
    Ok(body)
}

fn bracket<E: Clone + Eq>(k: &Term<E>, s: &Term<E>, x: &str, m: &Term<E>) -> Term<E> {
    match m {
        Term::Var(y) if y == x => Term::apps(s.clone(), [k.clone(), k.clone()]),
        _ if !m.has_free(x) && is_defined(k, s, m) => Term::app(k.clone(), m.clone()),
        Term::App(p, q) => Term::apps(s.clone(), [bracket(k, s, x, p), bracket(k, s, x, q)]),
        // atoms are always defined, so the arm above caught them
        Term::Const(_) | Term::Var(_) => unreachable!(),
    }
}

/// Syntactic definedness: atoms, `k M`, `s M` and `s M N` for defined
/// `M`, `N`. Variables stand for elements, so they count as defined.
fn is_defined<E: Eq>(k: &Term<E>, s: &Term<E>, m: &Term<E>) -> bool {
    let (head, args) = m.spine();
    if args.is_empty() {
        return true;
    }
    let head_ok = (head == k && args.len() == 1) || (head == s && args.len() <= 2);
    head_ok && args.iter().all(|a| is_defined(k, s, a))
}
