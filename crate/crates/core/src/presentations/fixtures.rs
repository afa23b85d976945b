//! Small applicative tables for exercising the presentation adapters.
//! None of them is a pca.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{CePresentation, Triple};
use crate::coding::Nat;

fn small(n: &Nat) -> u64 {
    n.to_u64().unwrap_or(u64::MAX)
}

/// `γ(n) = n mod r`, application is addition mod `r`, defined on codes
/// below `cap`. Each result is enumerated under two codes, `k` and `k + r`.
#[derive(Clone, Copy, Debug)]
pub struct ModularSum {
    pub modulus: u64,
    pub cap: u64,
}

impl CePresentation for ModularSum {
    fn triples(&self, fuel: u64) -> BTreeSet<Triple> {
        let r = self.modulus;
        let top = fuel.min(self.cap);
        let mut out = BTreeSet::new();
        for n in 0..top {
            for m in 0..top {
                let k = (n + m) % r;
                out.insert((n.into(), m.into(), k.into()));
                out.insert((n.into(), m.into(), (k + r).into()));
            }
        }
        out
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n % self.modulus == m % self.modulus
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        let start = small(&(n % self.modulus));
        (start..bound).step_by(self.modulus as usize).map(Nat::from).collect()
    }
}

/// `γ(n) = n`, `n·m = m / n` when `n ≠ 0` divides `m`, undefined
/// otherwise. The triple for `(n, m)` shows up only from stage
/// `n + m + 3` on.
#[derive(Clone, Copy, Debug, Default)]
pub struct SlowDivision;

impl CePresentation for SlowDivision {
    fn triples(&self, fuel: u64) -> BTreeSet<Triple> {
        let mut out = BTreeSet::new();
        for n in 1..fuel {
            for m in (0..fuel.saturating_sub(n + 2)).step_by(n as usize) {
                out.insert((n.into(), m.into(), (m / n).into()));
            }
        }
        out
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n == m
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        if small(n) < bound {
            [n.clone()].into()
        } else {
            Vec::new()
        }
    }
}

/// `γ(n) = ⌊n/2⌋`, application multiplies, and is undefined when the
/// product reaches `cap`. Both codes `2p` and `2p + 1` of a product `p`
/// are enumerated.
#[derive(Clone, Copy, Debug)]
pub struct HalvedProduct {
    pub cap: u64,
}

impl CePresentation for HalvedProduct {
    fn triples(&self, fuel: u64) -> BTreeSet<Triple> {
        let mut out = BTreeSet::new();
        for n in 0..fuel {
            for m in 0..fuel {
                let p = (n / 2) * (m / 2);
                if p < self.cap {
                    out.insert((n.into(), m.into(), (2 * p).into()));
                    out.insert((n.into(), m.into(), (2 * p + 1).into()));
                }
            }
        }
        out
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        (n >> 1u32) == (m >> 1u32)
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        let lo = small(&(n >> 1u32)).saturating_mul(2);
        (lo..(lo + 2).min(bound)).map(Nat::from).collect()
    }
}

/// Application is nowhere defined.
#[derive(Clone, Copy, Debug, Default)]
pub struct Nowhere;

impl CePresentation for Nowhere {
    fn triples(&self, _fuel: u64) -> BTreeSet<Triple> {
        BTreeSet::new()
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n == m
    }
}

impl super::PcPresentation for Nowhere {
    fn psi(&self, _n: &Nat, _m: &Nat, _fuel: u64) -> Option<Nat> {
        None
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n == m
    }
}

/// `K₁` cut off at a fixed fuel, made total by answering 0 on timeout;
/// `f` is the identity. A computable candidate the refuter must defeat.
#[derive(Clone, Debug)]
pub struct TruncatedK1 {
    pub fuel: u64,
    t: Nat,
}

impl TruncatedK1 {
    pub fn new(fuel: u64) -> Self {
        TruncatedK1 { fuel, t: crate::k1::Ladder::new().t(1) }
    }
}

impl super::CompletionCandidate for TruncatedK1 {
    fn total_apply(&self, n: &Nat, m: &Nat) -> Option<Nat> {
        Some(crate::substrate::run(n, m, crate::substrate::Fuel(self.fuel), None).unwrap_or_default())
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n == m
    }

    fn images(&self) -> super::Images {
        super::Images {
            zero: Nat::from(0u32),
            one: Nat::from(1u32),
            t: self.t.clone(),
            e: crate::substrate::separator_code(),
        }
    }
}
