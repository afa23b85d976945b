//! The diagonal argument against computable completions of `K₁`.
//!
//! A candidate claims a total application on codes with decidable
//! equality, and a weak embedding `f` of `K₁` given by the codes of
//! `f(0)`, `f(1)`, `f(t)` and `f(e)`. Along `t·…·t·0 = n` the embedding
//! fixes the image of every numeral,
//!
//! ```text
//! f(n) = f(t)·…·f(t)·f(0)        (n applications, left associated)
//! ```
//!
//! so `C = {x | f(e)·f(x) = f(0)}` is computable from the candidate, and
//! it would separate `A = {x | φ_x(x) = 0}` from `B = {x | φ_x(x) = 1}`
//! (`e` maps `A` to 0 and `B` to 1). Since no computable set does, some
//! `x` in `A ∖ C` or `B ∩ C` exists; the refuter looks for it.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::coding::Nat;
use crate::substrate::{membership, Fuel, Side};

/// Codes, in the candidate's numbering, of `f(0)`, `f(1)`, `f(t)`, `f(e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Images {
    pub zero: Nat,
    pub one: Nat,
    pub t: Nat,
    pub e: Nat,
}

pub trait CompletionCandidate {
    /// The claimed total application; `None` means the candidate failed
    /// to answer.
    fn total_apply(&self, n: &Nat, m: &Nat) -> Option<Nat>;

    fn eq(&self, n: &Nat, m: &Nat) -> bool;

    fn images(&self) -> Images;
}

impl<C: CompletionCandidate + ?Sized> CompletionCandidate for &C {
    fn total_apply(&self, n: &Nat, m: &Nat) -> Option<Nat> {
        (**self).total_apply(n, m)
    }
    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        (**self).eq(n, m)
    }
    fn images(&self) -> Images {
        (**self).images()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefuteError {
    /// `total_apply(n, m)` gave no answer.
    Malformed { n: Nat, m: Nat },
    /// Recomputing the witness gave a different answer.
    Unstable { x: u64 },
}

impl fmt::Display for RefuteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefuteError::Malformed { n, m } => write!(f, "candidate is not total: no value for {n}·{m}"),
            RefuteError::Unstable { x } => write!(f, "candidate answers differently on recomputation at x = {x}"),
        }
    }
}

/// An `x` on which `C` disagrees with the pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub x: u64,
    /// Where `φ_x(x)` put `x`.
    pub side: Side,
    /// Whether `f(e)·f(x) = f(0)` held in the candidate.
    pub in_c: bool,
    /// Code of the candidate's `f(x)`.
    pub image: Nat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefuteOutcome {
    Witness(Witness),
    /// No witness among `x < scanned`.
    Unknown { scanned: u64 },
}

fn apply<C: CompletionCandidate>(c: &C, n: &Nat, m: &Nat) -> Result<Nat, RefuteError> {
    c.total_apply(n, m).ok_or_else(|| RefuteError::Malformed { n: n.clone(), m: m.clone() })
}

/// The candidate's code of `f(x) = f(t)·…·f(t)·f(0)`, computed from scratch.
pub fn numeral_image<C: CompletionCandidate>(c: &C, x: u64) -> Result<Nat, RefuteError> {
    let img = c.images();
    if x == 0 {
        return Ok(img.zero);
    }
    let mut p = img.t.clone();
    for _ in 1..x {
        p = apply(c, &p, &img.t)?;
    }
    apply(c, &p, &img.zero)
}

/// Whether `f(e)·image = f(0)` in the candidate.
fn in_c<C: CompletionCandidate>(c: &C, image: &Nat) -> Result<bool, RefuteError> {
    let img = c.images();
    Ok(c.eq(&apply(c, &img.e, image)?, &img.zero))
}

fn contradicts(side: Side, in_c: bool) -> bool {
    match side {
        Side::A => !in_c,
        Side::B => in_c,
    }
}

/// Scans `x = 0, 1, …, budget − 1`; membership of `x` in the pair is
/// decided by running `φ_x(x)` for `budget` steps. Returns the least
/// witness, re-verified from scratch.
pub fn refute_completion<C: CompletionCandidate>(c: &C, budget: u64) -> Result<RefuteOutcome, RefuteError> {
    let img = c.images();
    // prefix = f(t)·…·f(t) with x factors
    let mut prefix: Option<Nat> = None;
    for x in 0..budget {
        let image = if x == 0 {
            img.zero.clone()
        } else {
            let p = match &prefix {
                None => img.t.clone(),
                Some(p) => apply(c, p, &img.t)?,
            };
            let image = apply(c, &p, &img.zero)?;
            prefix = Some(p);
            image
        };
        let Some(side) = membership(x, Fuel(budget)) else { continue };
        let in_c = in_c(c, &image)?;
        if contradicts(side, in_c) {
            let w = Witness { x, side, in_c, image };
            if !verify(c, &w, budget)? {
                return Err(RefuteError::Unstable { x });
            }
            return Ok(RefuteOutcome::Witness(w));
        }
    }
    Ok(RefuteOutcome::Unknown { scanned: budget })
}

/// Checks a witness against its definition: the numeral image, the
/// candidate's `C`, and membership at `budget`.
pub fn verify<C: CompletionCandidate>(c: &C, w: &Witness, budget: u64) -> Result<bool, RefuteError> {
    let image = numeral_image(c, w.x)?;
    let in_c = in_c(c, &image)?;
    Ok(image == w.image
        && in_c == w.in_c
        && membership(w.x, Fuel(budget)) == Some(w.side)
        && contradicts(w.side, in_c))
}

/// How a [`TableCandidate`] decides equality of codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equality {
    /// Classes given by a representative for some codes; all other codes
    /// are alone in their class.
    Classes(BTreeMap<Nat, Nat>),
    /// Nothing is equal, not even a code to itself.
    Never,
    /// Everything is equal.
    Always,
}

/// A candidate given by a finite application table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCandidate {
    pub table: BTreeMap<(Nat, Nat), Nat>,
    /// Value for pairs missing from the table; without one, a missing
    /// pair makes the candidate malformed.
    pub default: Option<Nat>,
    pub equality: Equality,
    pub images: Images,
}

impl TableCandidate {
    pub fn new(images: Images) -> Self {
        TableCandidate { table: BTreeMap::new(), default: None, equality: Equality::Classes(BTreeMap::new()), images }
    }

    fn rep(classes: &BTreeMap<Nat, Nat>, n: &Nat) -> Nat {
        let mut r = n.clone();
        while let Some(next) = classes.get(&r) {
            if *next == r {
                break;
            }
            r = next.clone();
        }
        r
    }

    /// Merges the classes of `a` and `b` (only for [`Equality::Classes`]).
    pub fn declare_equal(&mut self, a: &Nat, b: &Nat) {
        if let Equality::Classes(classes) = &mut self.equality {
            let (ra, rb) = (Self::rep(classes, a), Self::rep(classes, b));
            let (lo, hi) = if ra <= rb { (ra, rb) } else { (rb, ra) };
            if lo != hi {
                classes.insert(hi, lo);
            }
        }
    }
}

impl CompletionCandidate for TableCandidate {
    fn total_apply(&self, n: &Nat, m: &Nat) -> Option<Nat> {
        self.table.get(&(n.clone(), m.clone())).or(self.default.as_ref()).cloned()
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        match &self.equality {
            Equality::Classes(classes) => Self::rep(classes, n) == Self::rep(classes, m),
            Equality::Never => false,
            Equality::Always => true,
        }
    }

    fn images(&self) -> Images {
        self.images.clone()
    }
}
