use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use num_traits::{One, Zero};

use crate::coding::Nat;

/// Terms over `0, S, +, ×, f, ·`. Variables are TPTP variables (upper
/// case initial).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    Zero,
    Succ(Box<Term>),
    Plus(Box<Term>, Box<Term>),
    Times(Box<Term>, Box<Term>),
    F(Box<Term>),
    App(Box<Term>, Box<Term>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Eq(Term, Term),
    /// The sort predicate `N`.
    N(Term),
    /// The sort predicate `A`.
    A(Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

/// Which part of the theory an axiom belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Group {
    Arithmetic,
    Embedding,
    Application,
    Combinators,
}

impl Group {
    pub const ALL: [Group; 4] = [Group::Arithmetic, Group::Embedding, Group::Application, Group::Combinators];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn title(self) -> &'static str {
        match self {
            Group::Arithmetic => "arithmetic for the sort N",
            Group::Embedding => "f maps N injectively into A",
            Group::Application => "f preserves application",
            Group::Combinators => "f(k) and f(s) are combinators",
        }
    }
}

/// A named axiom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sentence {
    pub name: String,
    pub group: Group,
    pub formula: Formula,
}

impl Term {
    pub fn var(x: &str) -> Term {
        Term::Var(x.into())
    }

    pub fn succ(t: Term) -> Term {
        Term::Succ(Box::new(t))
    }

    pub fn plus(a: Term, b: Term) -> Term {
        Term::Plus(Box::new(a), Box::new(b))
    }

    pub fn times(a: Term, b: Term) -> Term {
        Term::Times(Box::new(a), Box::new(b))
    }

    pub fn f(t: Term) -> Term {
        Term::F(Box::new(t))
    }

    pub fn app(a: Term, b: Term) -> Term {
        Term::App(Box::new(a), Box::new(b))
    }

    /// `Sⁿ(0)`.
    pub fn unary(n: u64) -> Term {
        (0..n).fold(Term::Zero, |t, _| Term::succ(t))
    }

    /// A term of size `O(log n)` provably equal to `Sⁿ(0)`:
    /// `2m ↦ S(S(0))×m`, `2m+1 ↦ S(S(S(0))×m)`.
    pub fn binary(n: &Nat) -> Term {
        if n.is_zero() {
            return Term::Zero;
        }
        if n.is_one() {
            return Term::succ(Term::Zero);
        }
        let half = Term::times(Term::unary(2), Term::binary(&(n >> 1u32)));
        if n.bit(0) {
            Term::succ(half)
        } else {
            half
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero => 1,
            Term::Succ(t) | Term::F(t) => 1 + t.size(),
            Term::Plus(a, b) | Term::Times(a, b) | Term::App(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn mentions(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => y == x,
            Term::Zero => false,
            Term::Succ(t) | Term::F(t) => t.mentions(x),
            Term::Plus(a, b) | Term::Times(a, b) | Term::App(a, b) => a.mentions(x) || b.mentions(x),
        }
    }

    pub fn subst(&self, x: &str, by: &Term) -> Term {
        match self {
            Term::Var(y) if y == x => by.clone(),
            Term::Var(_) | Term::Zero => self.clone(),
            Term::Succ(t) => Term::succ(t.subst(x, by)),
            Term::F(t) => Term::f(t.subst(x, by)),
            Term::Plus(a, b) => Term::plus(a.subst(x, by), b.subst(x, by)),
            Term::Times(a, b) => Term::times(a.subst(x, by), b.subst(x, by)),
            Term::App(a, b) => Term::app(a.subst(x, by), b.subst(x, by)),
        }
    }
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn not(p: Formula) -> Formula {
        Formula::Not(Box::new(p))
    }

    pub fn and(p: Formula, q: Formula) -> Formula {
        Formula::And(Box::new(p), Box::new(q))
    }

    pub fn or(p: Formula, q: Formula) -> Formula {
        Formula::Or(Box::new(p), Box::new(q))
    }

    pub fn implies(p: Formula, q: Formula) -> Formula {
        Formula::Implies(Box::new(p), Box::new(q))
    }

    pub fn forall(x: &str, p: Formula) -> Formula {
        Formula::Forall(x.into(), Box::new(p))
    }

    pub fn exists(x: &str, p: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(p))
    }

    /// `∀x₁…xₙ ∈ N. p`, i.e. `∀x₁…xₙ (N(x₁) ∧ … ∧ N(xₙ) → p)`.
    pub fn forall_n(xs: &[&str], p: Formula) -> Formula {
        Self::forall_sorted(xs, Formula::N, p)
    }

    /// `∀x₁…xₙ ∈ A. p`.
    pub fn forall_a(xs: &[&str], p: Formula) -> Formula {
        Self::forall_sorted(xs, Formula::A, p)
    }

    fn forall_sorted(xs: &[&str], sort: fn(Term) -> Formula, p: Formula) -> Formula {
        let Some((first, rest)) = xs.split_first() else { return p };
        let guard = rest.iter().fold(sort(Term::var(first)), |g, x| Formula::and(g, sort(Term::var(x))));
        let body = Formula::implies(guard, p);
        xs.iter().rev().fold(body, |p, x| Formula::forall(x, p))
    }

    /// `∃x ∈ N. p`.
    pub fn exists_n(x: &str, p: Formula) -> Formula {
        Formula::exists(x, Formula::and(Formula::N(Term::var(x)), p))
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Eq(a, b) => 1 + a.size() + b.size(),
            Formula::N(t) | Formula::A(t) => 1 + t.size(),
            Formula::Not(p) => 1 + p.size(),
            Formula::And(p, q) | Formula::Or(p, q) | Formula::Implies(p, q) => 1 + p.size() + q.size(),
            Formula::Forall(_, p) | Formula::Exists(_, p) => 1 + p.size(),
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            Formula::Eq(a, b) => a.mentions(x) || b.mentions(x),
            Formula::N(t) | Formula::A(t) => t.mentions(x),
            Formula::Not(p) => p.has_free(x),
            Formula::And(p, q) | Formula::Or(p, q) | Formula::Implies(p, q) => p.has_free(x) || q.has_free(x),
            Formula::Forall(y, p) | Formula::Exists(y, p) => y != x && p.has_free(x),
        }
    }

    /// Substitution of a closed term (no capture possible).
    pub fn subst(&self, x: &str, by: &Term) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(a.subst(x, by), b.subst(x, by)),
            Formula::N(t) => Formula::N(t.subst(x, by)),
            Formula::A(t) => Formula::A(t.subst(x, by)),
            Formula::Not(p) => Formula::not(p.subst(x, by)),
            Formula::And(p, q) => Formula::and(p.subst(x, by), q.subst(x, by)),
            Formula::Or(p, q) => Formula::or(p.subst(x, by), q.subst(x, by)),
            Formula::Implies(p, q) => Formula::implies(p.subst(x, by), q.subst(x, by)),
            Formula::Forall(y, _) | Formula::Exists(y, _) if y == x => self.clone(),
            Formula::Forall(y, p) => Formula::forall(y, p.subst(x, by)),
            Formula::Exists(y, p) => Formula::exists(y, p.subst(x, by)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => f.write_str(x),
            Term::Zero => f.write_str("zero"),
            Term::Succ(t) => write!(f, "s({t})"),
            Term::Plus(a, b) => write!(f, "plus({a},{b})"),
            Term::Times(a, b) => write!(f, "times({a},{b})"),
            Term::F(t) => write!(f, "f({t})"),
            Term::App(a, b) => write!(f, "app({a},{b})"),
        }
    }
}

/// TPTP first-order syntax, fully parenthesised.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Eq(a, b) => write!(f, "{a} = {b}"),
            Formula::N(t) => write!(f, "n({t})"),
            Formula::A(t) => write!(f, "a({t})"),
            Formula::Not(p) => write!(f, "~ ({p})"),
            Formula::And(p, q) => write!(f, "({p} & {q})"),
            Formula::Or(p, q) => write!(f, "({p} | {q})"),
            Formula::Implies(p, q) => write!(f, "({p} => {q})"),
            Formula::Forall(x, p) => write!(f, "! [{x}] : ({p})"),
            Formula::Exists(x, p) => write!(f, "? [{x}] : ({p})"),
        }
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fof({}, axiom, {}).", self.name, self.formula)
    }
}
