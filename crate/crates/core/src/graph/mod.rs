//! Scott's graph model restricted to enumerable sets.
//!
//! A set is given by a finite description ([`EnumSet`]) together with a
//! fuel-indexed enumeration [`enum_at`]. Application follows the graph
//! formula `X·Y = {x | ∃u (⟨x, u⟩ ∈ X ∧ D_u ⊆ Y)}` with the model pairing
//! `⟨x, u⟩ = 2·cantor(x, u)`, which leaves odd numbers free as markers.
//!
//! Textual form of descriptions:
//!
//! ```text
//! set  ::= (finlit n*) | (graph op) | (app set set) | (embed n) | (kgraph) | (sgraph)
//! op   ::= (var i) | (const set) | (union op op) | (app op op) | (graph op)
//! ```
//!
//! Inside `op`, `(var 0)` is the innermost bound set.

mod embed;
mod eq;
mod value;

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use core::fmt;

use num_traits::Zero;

use crate::coding::{cantor, uncantor, Nat};
use crate::pca::{Pca, Verdict};

pub use embed::{embed_below, embed_k1};
pub use eq::{compare_upto, eq_upto, Comparison};
pub use value::{compactness_witness, enum_at, enum_below, member};

/// Description of an enumerable set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EnumSet {
    FinLit(BTreeSet<Nat>),
    /// The graph of an operator whose argument is `Var(0)`.
    GraphOf(Arc<SetExpr>),
    AppNode(Arc<EnumSet>, Arc<EnumSet>),
    /// The image of a `K₁` element under the embedding.
    EmbedNode(Nat),
}

/// Operator bodies, with de Bruijn indices for the sets bound by the
/// enclosing graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SetExpr {
    Var(usize),
    Const(Arc<EnumSet>),
    Union(Arc<SetExpr>, Arc<SetExpr>),
    App(Arc<SetExpr>, Arc<SetExpr>),
    Graph(Arc<SetExpr>),
}

/// A monotone operator on finite sets; its argument is `Var(0)`.
pub type OperatorDesc = SetExpr;

impl SetExpr {
    pub fn var(i: usize) -> SetExpr {
        SetExpr::Var(i)
    }

    pub fn constant(x: EnumSet) -> SetExpr {
        SetExpr::Const(Arc::new(x))
    }

    pub fn union(a: SetExpr, b: SetExpr) -> SetExpr {
        SetExpr::Union(Arc::new(a), Arc::new(b))
    }

    pub fn app(a: SetExpr, b: SetExpr) -> SetExpr {
        SetExpr::App(Arc::new(a), Arc::new(b))
    }

    pub fn graph(body: SetExpr) -> SetExpr {
        SetExpr::Graph(Arc::new(body))
    }

    /// Number of enclosing binders needed to close the expression.
    pub fn needed_binders(&self) -> usize {
        match self {
            SetExpr::Var(i) => i + 1,
            SetExpr::Const(_) => 0,
            SetExpr::Union(a, b) | SetExpr::App(a, b) => a.needed_binders().max(b.needed_binders()),
            SetExpr::Graph(body) => body.needed_binders().saturating_sub(1),
        }
    }
}

impl EnumSet {
    pub fn fin<I: IntoIterator<Item = u64>>(xs: I) -> EnumSet {
        EnumSet::FinLit(xs.into_iter().map(Nat::from).collect())
    }

    pub fn empty() -> EnumSet {
        EnumSet::FinLit(BTreeSet::new())
    }

    pub fn app(x: EnumSet, y: EnumSet) -> EnumSet {
        EnumSet::AppNode(Arc::new(x), Arc::new(y))
    }

    /// Whether the denoted set is finite and read off exactly at fuel 1:
    /// literals, and applications of such.
    pub fn is_exact(&self) -> bool {
        match self {
            EnumSet::FinLit(_) => true,
            EnumSet::AppNode(a, b) => a.is_exact() && b.is_exact(),
            EnumSet::GraphOf(_) | EnumSet::EmbedNode(_) => false,
        }
    }

    pub fn size(&self) -> usize {
        match self {
            EnumSet::FinLit(_) | EnumSet::EmbedNode(_) => 1,
            EnumSet::GraphOf(body) => 1 + body.size(),
            EnumSet::AppNode(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl SetExpr {
    pub fn size(&self) -> usize {
        match self {
            SetExpr::Var(_) => 1,
            SetExpr::Const(x) => 1 + x.size(),
            SetExpr::Union(a, b) | SetExpr::App(a, b) => 1 + a.size() + b.size(),
            SetExpr::Graph(body) => 1 + body.size(),
        }
    }
}

/// `X·Y` as a description. Application is total.
pub fn g_apply(x: &EnumSet, y: &EnumSet) -> EnumSet {
    EnumSet::app(x.clone(), y.clone())
}

/// The graph `{⟨x, u⟩ | x ∈ F(D_u)}`.
///
/// # Panics
///
/// If `f` refers to variables other than its argument `Var(0)`.
pub fn graphify(f: OperatorDesc) -> EnumSet {
    assert!(f.needed_binders() <= 1, "graphify: operator has free variables beyond its argument");
    EnumSet::GraphOf(Arc::new(f))
}

/// `Y ↦ graph(Z ↦ Y)`.
pub fn k_graph() -> EnumSet {
    graphify(SetExpr::graph(SetExpr::var(1)))
}

/// `X ↦ graph(Y ↦ graph(Z ↦ (X·Z)·(Y·Z)))`.
pub fn s_graph() -> EnumSet {
    let (x, y, z) = (SetExpr::var(2), SetExpr::var(1), SetExpr::var(0));
    let body = SetExpr::app(SetExpr::app(x, z.clone()), SetExpr::app(y, z));
    graphify(SetExpr::graph(SetExpr::graph(body)))
}

/// The model pairing `⟨x, u⟩ = 2·cantor(x, u)`.
pub fn pair(x: &Nat, u: &Nat) -> Nat {
    cantor(x, u) << 1
}

/// Inverse of [`pair`] on even numbers.
pub fn unpair(p: &Nat) -> Option<(Nat, Nat)> {
    if p.bit(0) {
        None
    } else {
        Some(uncantor(&(p >> 1)))
    }
}

/// The graph model as a [`Pca`]. Application costs one unit of budget and
/// never fails otherwise; equality is [`eq_upto`].
#[derive(Clone, Copy, Debug, Default)]
pub struct GraphModel;

impl Pca for GraphModel {
    type Elem = EnumSet;

    fn apply(&self, a: &EnumSet, b: &EnumSet, budget: &mut u64) -> Option<EnumSet> {
        if budget.is_zero() {
            return None;
        }
        *budget -= 1;
        Some(g_apply(a, b))
    }

    fn eq(&self, a: &EnumSet, b: &EnumSet, budget: u64) -> Verdict {
        eq_upto(a, b, budget)
    }

    fn k(&self) -> EnumSet {
        k_graph()
    }

    fn s(&self) -> EnumSet {
        s_graph()
    }
}

impl fmt::Display for EnumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumSet::FinLit(xs) => {
                f.write_str("(finlit")?;
                for x in xs {
                    write!(f, " {x}")?;
                }
                f.write_str(")")
            }
            EnumSet::GraphOf(body) => {
                if *self == k_graph() {
                    f.write_str("(kgraph)")
                } else if *self == s_graph() {
                    f.write_str("(sgraph)")
                } else {
                    write!(f, "(graph {body})")
                }
            }
            EnumSet::AppNode(a, b) => write!(f, "(app {a} {b})"),
            EnumSet::EmbedNode(n) => write!(f, "(embed {n})"),
        }
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetExpr::Var(i) => write!(f, "(var {i})"),
            SetExpr::Const(x) => write!(f, "(const {x})"),
            SetExpr::Union(a, b) => write!(f, "(union {a} {b})"),
            SetExpr::App(a, b) => write!(f, "(app {a} {b})"),
            SetExpr::Graph(body) => write!(f, "(graph {body})"),
        }
    }
}

impl fmt::Debug for EnumSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
pub(crate) mod tests;
