use alloc::collections::BTreeSet;

use num_traits::{One, Zero};

use super::expr::{encode, Expr};
use super::machine::{run, Fuel};
use crate::coding::{nat, Nat};

/// Which side of the pair `A = {x | φ_x(x) = 0}`, `B = {x | φ_x(x) = 1}`
/// an element was found on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// Membership of `x` as certified by a run of `φ_x(x)` within `fuel`.
pub fn membership(x: u64, fuel: Fuel) -> Option<Side> {
    let xn = nat(x);
    match run(&xn, &xn, fuel, None) {
        Some(v) if v.is_zero() => Some(Side::A),
        Some(v) if v.is_one() => Some(Side::B),
        _ => None,
    }
}

/// The stage-`fuel` approximations `A_fuel, B_fuel` of the computably
/// inseparable pair, restricted to `x < fuel`.
pub fn insep_pair(fuel: Fuel) -> (BTreeSet<u64>, BTreeSet<u64>) {
    let mut a = BTreeSet::new();
    let mut b = BTreeSet::new();
    for x in 0..fuel.0 {
        match membership(x, fuel) {
            Some(Side::A) => {
                a.insert(x);
            }
            Some(Side::B) => {
                b.insert(x);
            }
            None => {}
        }
    }
    (a, b)
}

/// A code `e` with `φ_e(x) = 0` on `A`, `1` on `B` and divergent elsewhere.
pub fn separator_code() -> Nat {
    let classify = Expr::ifz(
        Expr::In,
        Expr::lit(0u64),
        Expr::ifz(Expr::pred(Expr::In), Expr::lit(1u64), Expr::Diverge),
    );
    encode(&Expr::apply(
        Expr::Lit(encode(&classify)),
        Expr::apply(Expr::In, Expr::In),
    ))
}
