use alloc::sync::Arc;
use core::fmt;

use num_traits::{ToPrimitive, Zero};

use crate::coding::{cantor, nat, uncantor, Nat};

/// Abstract syntax of the universal language.
///
/// Values are naturals. `In` is the program's single input; multi-argument
/// programs read a Cantor-coded tuple. `Apply(c, a)` evaluates `c` to a
/// code, `a` to a value, then runs the decoded program on that value.
/// `Apply(Diverge, a)` is the oracle query (see [`crate::substrate::run`]).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Expr {
    Lit(Nat),
    In,
    Succ(Arc<Expr>),
    Pred(Arc<Expr>),
    IfZ(Arc<Expr>, Arc<Expr>, Arc<Expr>),
    MkPair(Arc<Expr>, Arc<Expr>),
    Fst(Arc<Expr>),
    Snd(Arc<Expr>),
    Apply(Arc<Expr>, Arc<Expr>),
    Diverge,
}

pub(crate) const TAG_LIT: u64 = 0;
pub(crate) const TAG_IN: u64 = 1;
pub(crate) const TAG_SUCC: u64 = 2;
pub(crate) const TAG_PRED: u64 = 3;
pub(crate) const TAG_IFZ: u64 = 4;
pub(crate) const TAG_PAIR: u64 = 5;
pub(crate) const TAG_FST: u64 = 6;
pub(crate) const TAG_SND: u64 = 7;
pub(crate) const TAG_APPLY: u64 = 8;
pub(crate) const TAG_DIVERGE: u64 = 9;

/// Codes `⟨x, y⟩` with `x` at least this large are specialisation codes:
/// they decode to `Apply(Lit x, MkPair(Lit y, In))`.
pub const SPECIALIZE_MIN: u64 = 10;

impl Expr {
    pub fn lit(n: impl Into<Nat>) -> Expr {
        Expr::Lit(n.into())
    }

    pub fn succ(e: Expr) -> Expr {
        Expr::Succ(Arc::new(e))
    }

    pub fn pred(e: Expr) -> Expr {
        Expr::Pred(Arc::new(e))
    }

    pub fn ifz(guard: Expr, then_b: Expr, else_b: Expr) -> Expr {
        Expr::IfZ(Arc::new(guard), Arc::new(then_b), Arc::new(else_b))
    }

    pub fn pair(a: Expr, b: Expr) -> Expr {
        Expr::MkPair(Arc::new(a), Arc::new(b))
    }

    pub fn fst(e: Expr) -> Expr {
        Expr::Fst(Arc::new(e))
    }

    pub fn snd(e: Expr) -> Expr {
        Expr::Snd(Arc::new(e))
    }

    pub fn apply(code: Expr, arg: Expr) -> Expr {
        Expr::Apply(Arc::new(code), Arc::new(arg))
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Expr::Lit(_) | Expr::In | Expr::Diverge => 1,
            Expr::Succ(e) | Expr::Pred(e) | Expr::Fst(e) | Expr::Snd(e) => 1 + e.size(),
            Expr::IfZ(g, t, e) => 1 + g.size() + t.size() + e.size(),
            Expr::MkPair(a, b) | Expr::Apply(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Lit(_) | Expr::In | Expr::Diverge => 1,
            Expr::Succ(e) | Expr::Pred(e) | Expr::Fst(e) | Expr::Snd(e) => 1 + e.depth(),
            Expr::IfZ(g, t, e) => 1 + g.depth().max(t.depth()).max(e.depth()),
            Expr::MkPair(a, b) | Expr::Apply(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Replaces every `In` by `with`. Nested programs are only reachable
    /// through codes, so this is capture-free.
    pub fn subst_input(&self, with: &Expr) -> Expr {
        self.map_leaves(&mut |leaf| match leaf {
            Expr::In => Some(with.clone()),
            _ => None,
        })
    }

    /// Rebuilds the tree, replacing each node for which `f` returns
    /// `Some`. Replaced nodes are not visited further.
    pub fn map_leaves(&self, f: &mut impl FnMut(&Expr) -> Option<Expr>) -> Expr {
        if let Some(e) = f(self) {
            return e;
        }
        let mut go = |e: &Arc<Expr>| Arc::new(e.map_leaves(f));
        match self {
            Expr::Lit(_) | Expr::In | Expr::Diverge => self.clone(),
            Expr::Succ(e) => Expr::Succ(go(e)),
            Expr::Pred(e) => Expr::Pred(go(e)),
            Expr::Fst(e) => Expr::Fst(go(e)),
            Expr::Snd(e) => Expr::Snd(go(e)),
            Expr::IfZ(g, t, e) => {
                let g = go(g);
                let t = go(t);
                Expr::IfZ(g, t, go(e))
            }
            Expr::MkPair(a, b) => {
                let a = go(a);
                Expr::MkPair(a, go(b))
            }
            Expr::Apply(a, b) => {
                let a = go(a);
                Expr::Apply(a, go(b))
            }
        }
    }

    /// If this is `Apply(Lit c, MkPair(Lit a, In))` returns `(c, a)`.
    pub fn as_specialization(&self) -> Option<(&Nat, &Nat)> {
        let Expr::Apply(code, arg) = self else {
            return None;
        };
        let (Expr::Lit(c), Expr::MkPair(a, inp)) = (&**code, &**arg) else {
            return None;
        };
        match (&**a, &**inp) {
            (Expr::Lit(a), Expr::In) => Some((c, a)),
            _ => None,
        }
    }
}

fn tagged(tag: u64, payload: &Nat) -> Nat {
    cantor(&nat(tag), payload)
}

/// Gödel number of an expression.
///
/// Every code is `⟨tag, payload⟩`. Tags `0..=9` name the variants; n-ary
/// payloads are nested pairs. `Apply(Lit c, MkPair(Lit a, In))` with
/// `c ≥ 10` is encoded compactly as `⟨c, a⟩`, which keeps specialised
/// codes (and therefore S-m-n) cheap.
pub fn encode(e: &Expr) -> Nat {
    if let Some((c, a)) = e.as_specialization() {
        if *c >= nat(SPECIALIZE_MIN) {
            return cantor(c, a);
        }
    }
    match e {
        Expr::Lit(n) => tagged(TAG_LIT, n),
        Expr::In => tagged(TAG_IN, &Nat::zero()),
        Expr::Succ(x) => tagged(TAG_SUCC, &encode(x)),
        Expr::Pred(x) => tagged(TAG_PRED, &encode(x)),
        Expr::IfZ(g, t, f) => {
            let rest = cantor(&encode(t), &encode(f));
            tagged(TAG_IFZ, &cantor(&encode(g), &rest))
        }
        Expr::MkPair(a, b) => tagged(TAG_PAIR, &cantor(&encode(a), &encode(b))),
        Expr::Fst(x) => tagged(TAG_FST, &encode(x)),
        Expr::Snd(x) => tagged(TAG_SND, &encode(x)),
        Expr::Apply(a, b) => tagged(TAG_APPLY, &cantor(&encode(a), &encode(b))),
        Expr::Diverge => tagged(TAG_DIVERGE, &Nat::zero()),
    }
}

/// Total decoding of naturals into programs; `decode(encode(e)) == e`.
pub fn decode(n: &Nat) -> Expr {
    let (tag, payload) = uncantor(n);
    let Some(tag) = tag.to_u64().filter(|&t| t < SPECIALIZE_MIN) else {
        return Expr::apply(Expr::Lit(tag), Expr::pair(Expr::Lit(payload), Expr::In));
    };
    let unary = |p: &Nat| Arc::new(decode(p));
    let binary = |p: &Nat| {
        let (a, b) = uncantor(p);
        (Arc::new(decode(&a)), Arc::new(decode(&b)))
    };
    match tag {
        TAG_LIT => Expr::Lit(payload),
        TAG_IN => Expr::In,
        TAG_SUCC => Expr::Succ(unary(&payload)),
        TAG_PRED => Expr::Pred(unary(&payload)),
        TAG_IFZ => {
            let (g, rest) = uncantor(&payload);
            let (t, f) = binary(&rest);
            Expr::IfZ(Arc::new(decode(&g)), t, f)
        }
        TAG_PAIR => {
            let (a, b) = binary(&payload);
            Expr::MkPair(a, b)
        }
        TAG_FST => Expr::Fst(unary(&payload)),
        TAG_SND => Expr::Snd(unary(&payload)),
        TAG_APPLY => {
            let (a, b) = binary(&payload);
            Expr::Apply(a, b)
        }
        _ => Expr::Diverge,
    }
}

/// S-expression form, e.g. `(ifz in (lit 1) (app (lit 12) in))`.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(n) => write!(f, "(lit {n})"),
            Expr::In => f.write_str("in"),
            Expr::Succ(e) => write!(f, "(succ {e})"),
            Expr::Pred(e) => write!(f, "(pred {e})"),
            Expr::IfZ(g, t, e) => write!(f, "(ifz {g} {t} {e})"),
            Expr::MkPair(a, b) => write!(f, "(pair {a} {b})"),
            Expr::Fst(e) => write!(f, "(fst {e})"),
            Expr::Snd(e) => write!(f, "(snd {e})"),
            Expr::Apply(a, b) => write!(f, "(app {a} {b})"),
            Expr::Diverge => f.write_str("diverge"),
        }
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
