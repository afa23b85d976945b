//! Numbered presentations of applicative structures.
//!
//! A presentation is a numbering `γ: ω → A` given either by a partial
//! application on codes (`ψ`, [`PcPresentation`]) or by an enumeration of
//! the triples `(n, m, k)` with `γ(n)·γ(m)↓ = γ(k)` ([`CePresentation`]).
//! Equality of codes (`γ(n) = γ(m)`) is decidable in both. Any partial
//! applicative table is accepted; the pca laws are not assumed.

pub mod fixtures;
mod k1;
mod refute;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::coding::Nat;

pub use k1::{K1Ce, K1Pc};
pub use refute::{
    numeral_image, refute_completion, verify, CompletionCandidate, Equality, Images, RefuteError,
    RefuteOutcome, TableCandidate, Witness,
};

pub type Triple = (Nat, Nat, Nat);

/// `γ(n)·γ(m) = γ(ψ(n, m))`, with `ψ` run under a fuel bound.
pub trait PcPresentation {
    /// Fuel-monotone: a present value stays present (up to `eq`).
    fn psi(&self, n: &Nat, m: &Nat, fuel: u64) -> Option<Nat>;

    fn eq(&self, n: &Nat, m: &Nat) -> bool;

    /// All `(n, m) ↦ ψ(n, m, fuel)` with `n, m < fuel`.
    fn defined_below(&self, fuel: u64) -> BTreeMap<(Nat, Nat), Nat> {
        let mut out = BTreeMap::new();
        for n in 0..fuel {
            for m in 0..fuel {
                let (n, m) = (Nat::from(n), Nat::from(m));
                if let Some(k) = self.psi(&n, &m, fuel) {
                    out.insert((n, m), k);
                }
            }
        }
        out
    }

    /// Codes below `bound` that are `eq` to `n`.
    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        (0..bound).map(Nat::from).filter(|k| self.eq(k, n)).collect()
    }
}

/// An enumeration of `{(n, m, k) | γ(n)·γ(m)↓ = γ(k)}`.
pub trait CePresentation {
    /// Monotone in `fuel`; functional modulo `eq`.
    fn triples(&self, fuel: u64) -> BTreeSet<Triple>;

    fn eq(&self, n: &Nat, m: &Nat) -> bool;

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        (0..bound).map(Nat::from).filter(|k| self.eq(k, n)).collect()
    }
}

impl<P: PcPresentation + ?Sized> PcPresentation for &P {
    fn psi(&self, n: &Nat, m: &Nat, fuel: u64) -> Option<Nat> {
        (**self).psi(n, m, fuel)
    }
    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        (**self).eq(n, m)
    }
    fn defined_below(&self, fuel: u64) -> BTreeMap<(Nat, Nat), Nat> {
        (**self).defined_below(fuel)
    }
    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        (**self).class_below(n, bound)
    }
}

impl<P: CePresentation + ?Sized> CePresentation for &P {
    fn triples(&self, fuel: u64) -> BTreeSet<Triple> {
        (**self).triples(fuel)
    }
    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        (**self).eq(n, m)
    }
    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        (**self).class_below(n, bound)
    }
}

/// The c.e. presentation read as a partial computable one: `ψ(n, m)` is
/// the least `k` enumerated with `(n, m, k)`.
#[derive(Clone, Debug)]
pub struct CeAsPc<P>(pub P);

pub fn ce_to_pc<P: CePresentation>(p: P) -> CeAsPc<P> {
    CeAsPc(p)
}

fn least_per_pair(triples: BTreeSet<Triple>) -> BTreeMap<(Nat, Nat), Nat> {
    let mut out = BTreeMap::new();
    // sorted by (n, m, k), so the first k seen is the least
    for (n, m, k) in triples {
        out.entry((n, m)).or_insert(k);
    }
    out
}

impl<P: CePresentation> PcPresentation for CeAsPc<P> {
    fn psi(&self, n: &Nat, m: &Nat, fuel: u64) -> Option<Nat> {
        self.0
            .triples(fuel)
            .into_iter()
            .filter(|(a, b, _)| a == n && b == m)
            .map(|(_, _, k)| k)
            .next()
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        self.0.eq(n, m)
    }

    fn defined_below(&self, fuel: u64) -> BTreeMap<(Nat, Nat), Nat> {
        let bound = Nat::from(fuel);
        let mut all = least_per_pair(self.0.triples(fuel));
        all.retain(|(n, m), _| *n < bound && *m < bound);
        all
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        self.0.class_below(n, bound)
    }
}

/// The partial computable presentation enumerated: `(n, m, k)` with
/// `n, m, k < fuel`, `ψ(n, m, fuel)↓` and `k` equal to it.
#[derive(Clone, Debug)]
pub struct PcAsCe<P>(pub P);

pub fn pc_to_ce<P: PcPresentation>(p: P) -> PcAsCe<P> {
    PcAsCe(p)
}

impl<P: PcPresentation> CePresentation for PcAsCe<P> {
    fn triples(&self, fuel: u64) -> BTreeSet<Triple> {
        let mut out = BTreeSet::new();
        for ((n, m), v) in self.0.defined_below(fuel) {
            for k in self.0.class_below(&v, fuel) {
                out.insert((n.clone(), m.clone(), k));
            }
        }
        out
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        self.0.eq(n, m)
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        self.0.class_below(n, bound)
    }
}

/// `{(n, m, k') | n, m, k' < bound, (n, m, k) ∈ triples, k' eq k}`: the
/// relation a triple set presents, with codes cut at `bound`.
pub fn saturate<P: CePresentation + ?Sized>(p: &P, triples: &BTreeSet<Triple>, bound: u64) -> BTreeSet<Triple> {
    let b = Nat::from(bound);
    let mut out = BTreeSet::new();
    for (n, m, k) in triples {
        if *n < b && *m < b {
            for k2 in p.class_below(k, bound) {
                out.insert((n.clone(), m.clone(), k2));
            }
        }
    }
    out
}

/// Whether `ce → pc → ce` reproduces the relation of `p` at `fuel`.
pub fn round_trip_agrees<P: CePresentation>(p: &P, fuel: u64) -> bool {
    let back = pc_to_ce(ce_to_pc(p)).triples(fuel);
    back == saturate(p, &p.triples(fuel), fuel)
}

#[cfg(test)]
mod tests;
