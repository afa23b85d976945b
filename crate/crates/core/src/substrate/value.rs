use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::mem;

use num_traits::{ToPrimitive, Zero};

use crate::coding::{cantor, uncantor, Nat};

/// Naturals with at most this many bits are stored as plain numbers.
pub const SMALL_BITS: u64 = 1024;

/// A natural number whose large values are kept as unevaluated Cantor
/// pairs.
///
/// The representation is canonical: a value below `2^SMALL_BITS` is a
/// plain number, anything larger is the pair `⟨x, y⟩` of its Cantor
/// components (each canonical again). So equality is structural, and
/// pairing and unpairing large values cost nothing. Codes built by
/// repeated specialisation grow by a factor of two or four in bit length
/// per level; this keeps them usable.
#[derive(Clone)]
pub struct Num(Repr);

#[derive(Clone)]
enum Repr {
    Small(Nat),
    Pair(Arc<Node>),
}

struct Node {
    x: Num,
    y: Num,
    /// Upper bound on the bit length of the value.
    bits: u64,
}

impl Num {
    pub fn zero() -> Num {
        Num(Repr::Small(Nat::zero()))
    }

    pub fn from_nat(n: &Nat) -> Num {
        if n.bits() <= SMALL_BITS {
            return Num(Repr::Small(n.clone()));
        }
        let (x, y) = uncantor(n);
        Num::big_pair(Num::from_nat(&x), Num::from_nat(&y))
    }

    fn big_pair(x: Num, y: Num) -> Num {
        let bits = x.bits_bound().max(y.bits_bound()).saturating_mul(2).saturating_add(2);
        Num(Repr::Pair(Arc::new(Node { x, y, bits })))
    }

    /// `⟨x, y⟩`.
    pub fn pair(x: &Num, y: &Num) -> Num {
        if let (Some(a), Some(b)) = (x.as_small(), y.as_small()) {
            let p = cantor(a, b);
            if p.bits() <= SMALL_BITS {
                return Num(Repr::Small(p));
            }
        }
        Num::big_pair(x.clone(), y.clone())
    }

    /// The Cantor components.
    pub fn unpair(&self) -> (Num, Num) {
        match &self.0 {
            Repr::Small(n) => {
                let (x, y) = uncantor(n);
                (Num(Repr::Small(x)), Num(Repr::Small(y)))
            }
            Repr::Pair(p) => (p.x.clone(), p.y.clone()),
        }
    }

    pub fn fst(&self) -> Num {
        match &self.0 {
            Repr::Pair(p) => p.x.clone(),
            Repr::Small(_) => self.unpair().0,
        }
    }

    pub fn snd(&self) -> Num {
        match &self.0 {
            Repr::Pair(p) => p.y.clone(),
            Repr::Small(_) => self.unpair().1,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Small(n) if n.is_zero())
    }

    /// The value as a plain number, if it is below `2^SMALL_BITS`.
    pub fn as_small(&self) -> Option<&Nat> {
        match &self.0 {
            Repr::Small(n) => Some(n),
            Repr::Pair(_) => None,
        }
    }

    pub fn is_small(&self) -> bool {
        self.as_small().is_some()
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.as_small().and_then(|n| n.to_u64())
    }

    /// Exact for small values; for pairs an upper bound (at most a few
    /// bits over per level). A function of the value alone.
    pub fn bits_bound(&self) -> u64 {
        match &self.0 {
            Repr::Small(n) => n.bits(),
            Repr::Pair(p) => p.bits,
        }
    }

    /// Evaluates every pair. Can be very expensive; see [`bits_bound`].
    ///
    /// [`bits_bound`]: Num::bits_bound
    pub fn to_nat(&self) -> Nat {
        enum Task<'a> {
            Visit(&'a Num),
            Combine,
        }
        let mut tasks = vec![Task::Visit(self)];
        let mut out: Vec<Nat> = Vec::new();
        while let Some(task) = tasks.pop() {
            match task {
                Task::Visit(n) => match &n.0 {
                    Repr::Small(v) => out.push(v.clone()),
                    Repr::Pair(p) => {
                        tasks.push(Task::Combine);
                        tasks.push(Task::Visit(&p.y));
                        tasks.push(Task::Visit(&p.x));
                    }
                },
                Task::Combine => {
                    let y = out.pop().unwrap_or_default();
                    let x = out.pop().unwrap_or_default();
                    out.push(cantor(&x, &y));
                }
            }
        }
        out.pop().unwrap_or_default()
    }

    pub fn succ(&self) -> Num {
        match &self.0 {
            Repr::Small(n) => Num::from_nat(&(n + 1u32)),
            Repr::Pair(_) => Num::from_nat(&(self.to_nat() + 1u32)),
        }
    }

    /// Truncated predecessor.
    pub fn pred(&self) -> Num {
        match &self.0 {
            Repr::Small(n) if n.is_zero() => self.clone(),
            Repr::Small(n) => Num(Repr::Small(n - 1u32)),
            Repr::Pair(_) => Num::from_nat(&(self.to_nat() - 1u32)),
        }
    }
}

impl Default for Num {
    fn default() -> Self {
        Num::zero()
    }
}

impl From<u64> for Num {
    fn from(n: u64) -> Self {
        Num(Repr::Small(Nat::from(n)))
    }
}

impl From<&Nat> for Num {
    fn from(n: &Nat) -> Self {
        Num::from_nat(n)
    }
}

impl From<Nat> for Num {
    fn from(n: Nat) -> Self {
        Num::from_nat(&n)
    }
}

impl From<&Num> for Nat {
    fn from(n: &Num) -> Self {
        n.to_nat()
    }
}

// Structural equality is numeric equality because the form is canonical.
// Iterative, since lazily built values can be deep.
impl PartialEq for Num {
    fn eq(&self, other: &Num) -> bool {
        let mut stack = vec![(self, other)];
        while let Some((a, b)) = stack.pop() {
            match (&a.0, &b.0) {
                (Repr::Small(x), Repr::Small(y)) => {
                    if x != y {
                        return false;
                    }
                }
                (Repr::Pair(p), Repr::Pair(q)) => {
                    if Arc::ptr_eq(p, q) {
                        continue;
                    }
                    if p.bits != q.bits {
                        return false;
                    }
                    stack.push((&p.y, &q.y));
                    stack.push((&p.x, &q.x));
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Num {}

impl PartialEq<Nat> for Num {
    fn eq(&self, other: &Nat) -> bool {
        *self == Num::from_nat(other)
    }
}

impl Drop for Num {
    fn drop(&mut self) {
        if self.is_small() {
            return;
        }
        let mut stack = vec![mem::replace(&mut self.0, Repr::Small(Nat::zero()))];
        while let Some(repr) = stack.pop() {
            if let Repr::Pair(node) = repr {
                if let Some(mut node) = Arc::into_inner(node) {
                    stack.push(mem::replace(&mut node.x.0, Repr::Small(Nat::zero())));
                    stack.push(mem::replace(&mut node.y.0, Repr::Small(Nat::zero())));
                }
            }
        }
    }
}

/// Decimal, evaluating pairs.
impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n) => fmt::Display::fmt(n, f),
            Repr::Pair(_) => fmt::Display::fmt(&self.to_nat(), f),
        }
    }
}

impl fmt::Debug for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n) => fmt::Display::fmt(n, f),
            Repr::Pair(p) => write!(f, "⟨{:?}, {:?}⟩", p.x, p.y),
        }
    }
}
