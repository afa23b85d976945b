//! A weak embedding `f` of `K₁` into the enumerable sets.
//!
//! `f(n)` is enumerated by
//!
//! ```text
//! f(n)_0     = ∅
//! f(n)_{s+1} = {2n+1} ∪ {⟨x, 2^(2b+1)⟩ | b ≤ s, run(n, b, s) = c, x ∈ f(c)_s, x ≤ s}
//! ```
//!
//! The odd marker `2n+1` is the only odd element of `f(n)`, and
//! `2^(2b+1)` codes the singleton `{2b+1}`, so a pair of `f(a)` fires
//! against `f(b)` exactly when its marker is `b`'s. Hence
//! `f(a)·f(b) = f(a·b)` when `a·b↓`, and `∅` otherwise. The cut `x ≤ s`
//! keeps each stage finite and cheap; every element eventually passes it.

use alloc::collections::BTreeSet;

use super::{pair, unpair, EnumSet};
use crate::coding::{nat, pow2, Nat};
use crate::substrate::{run, Fuel};

pub fn embed_k1(n: &Nat) -> EnumSet {
    EnumSet::EmbedNode(n.clone())
}

fn marker(n: &Nat) -> Nat {
    (n << 1) + 1u32
}

fn step(n: &Nat, b: u64, s: u64) -> Option<Nat> {
    run(n, &nat(b), Fuel(s), None)
}

/// `f(n)` at `fuel`, cut at `bound`.
pub fn embed_below(n: &Nat, fuel: u64, bound: Option<&Nat>) -> BTreeSet<Nat> {
    let mut out = BTreeSet::new();
    if fuel == 0 {
        return out;
    }
    let s = fuel - 1;
    let below = |x: &Nat| bound.is_none_or(|b| x < b);
    let m = marker(n);
    if below(&m) {
        out.insert(m);
    }
    let mut x_cut = nat(s + 1);
    if let Some(b) = bound {
        x_cut = x_cut.min(b.sqrt() + 1u32);
    }
    for b in 0..=s {
        let u = pow2(2 * b + 1);
        if !below(&pair(&nat(0), &u)) {
            break;
        }
        let Some(c) = step(n, b, s) else { continue };
        for x in embed_below(&c, s, Some(&x_cut)) {
            let p = pair(&x, &u);
            if below(&p) {
                out.insert(p);
            }
        }
    }
    out
}

/// The `b` with `u = 2^(2b+1)`, if `u` has that form.
fn singleton_marker(u: &Nat) -> Option<u64> {
    let tz = u.trailing_zeros()?;
    (u.count_ones() == 1 && tz % 2 == 1).then(|| (tz - 1) / 2)
}

pub(crate) fn embed_contains(n: &Nat, y: &Nat, fuel: u64) -> bool {
    if fuel == 0 {
        return false;
    }
    let s = fuel - 1;
    let Some((x, u)) = unpair(y) else { return *y == marker(n) };
    let Some(b) = singleton_marker(&u) else { return false };
    if b > s || x > nat(s) {
        return false;
    }
    match step(n, b, s) {
        Some(c) => embed_contains(&c, &x, s),
        None => false,
    }
}

/// `f(n)·W` at `fuel`, given membership in `W`.
pub(crate) fn apply_embed(n: &Nat, in_w: impl Fn(&Nat) -> bool, fuel: u64) -> BTreeSet<Nat> {
    let mut out = BTreeSet::new();
    if fuel == 0 {
        return out;
    }
    let s = fuel - 1;
    for b in 0..=s {
        if in_w(&marker(&nat(b))) {
            if let Some(c) = step(n, b, s) {
                out.extend(embed_below(&c, s, Some(&nat(s + 1))));
            }
        }
    }
    out
}

/// A marker `2b+1 ∈ W` through which `z` enters `f(n)·W`.
pub(crate) fn embed_witness(n: &Nat, in_w: impl Fn(&Nat) -> bool, z: &Nat, fuel: u64) -> Option<Nat> {
    if fuel == 0 || *z >= nat(fuel - 1) {
        return None;
    }
    let s = fuel - 1;
    for b in 0..=s {
        let m = marker(&nat(b));
        if in_w(&m) && step(n, b, s).is_some_and(|c| embed_contains(&c, z, s)) {
            return Some(m);
        }
    }
    None
}
