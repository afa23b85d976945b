use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::{CePresentation, PcPresentation, Triple};
use crate::coding::{uncantor, Nat};
use crate::substrate::{run, Fuel};

/// `K₁` with the identity numbering: `ψ(n, m) = φ_n(m)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct K1Pc;

impl PcPresentation for K1Pc {
    fn psi(&self, n: &Nat, m: &Nat, fuel: u64) -> Option<Nat> {
        run(n, m, Fuel(fuel), None)
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n == m
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        if *n < Nat::from(bound) {
            vec![n.clone()]
        } else {
            Vec::new()
        }
    }
}

/// `K₁`'s graph of application, dovetailed: at stage `s`, each pair with
/// `cantor(n, m) < s` is run for `s` steps.
#[derive(Clone, Copy, Debug, Default)]
pub struct K1Ce;

impl CePresentation for K1Ce {
    fn triples(&self, fuel: u64) -> BTreeSet<Triple> {
        let mut out = BTreeSet::new();
        for p in 0..fuel {
            let (n, m) = uncantor(&Nat::from(p));
            if let Some(k) = run(&n, &m, Fuel(fuel), None) {
                out.insert((n, m, k));
            }
        }
        out
    }

    fn eq(&self, n: &Nat, m: &Nat) -> bool {
        n == m
    }

    fn class_below(&self, n: &Nat, bound: u64) -> Vec<Nat> {
        K1Pc.class_below(n, bound)
    }
}
