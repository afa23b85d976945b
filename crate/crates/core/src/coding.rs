//! Arithmetic codings shared by every model: Cantor pairing and canonical
//! codes of finite sets.

use alloc::collections::BTreeSet;

use dashu_int::ops::SquareRoot;
use dashu_int::UBig;
use num_bigint::BigUint;
use num_traits::Zero;

/// Natural numbers. Codes of programs grow quickly, so everything is
/// arbitrary precision.
pub type Nat = BigUint;

/// Shorthand for building a [`Nat`] from a machine integer.
#[inline]
pub fn nat(n: u64) -> Nat {
    Nat::from(n)
}

/// Above this many bits pairing arithmetic goes through `dashu`, whose
/// multiplication and square root are subquadratic.
const BIG: u64 = 1 << 14;

fn to_ubig(n: &Nat) -> UBig {
    UBig::from_le_bytes(&n.to_bytes_le())
}

fn from_ubig(n: &UBig) -> Nat {
    Nat::from_bytes_le(&n.to_le_bytes())
}

/// Cantor pairing `(x + y)(x + y + 1)/2 + y`.
pub fn cantor(x: &Nat, y: &Nat) -> Nat {
    if x.bits().max(y.bits()) > BIG {
        let (x, y) = (to_ubig(x), to_ubig(y));
        let w = &x + &y;
        let tri = (&w * (&w + 1u8)) >> 1;
        return from_ubig(&(tri + y));
    }
    let w = x + y;
    let tri = (&w * (&w + 1u32)) >> 1u32;
    tri + y
}

/// Inverse of [`cantor`].
pub fn uncantor(p: &Nat) -> (Nat, Nat) {
    // w = floor((sqrt(8p + 1) - 1) / 2)
    if p.bits() > 2 * BIG {
        let p = to_ubig(p);
        let root = ((&p << 3) + 1u8).sqrt();
        let w = (root - 1u8) >> 1;
        let tri = (&w * (&w + 1u8)) >> 1;
        let y = p - tri;
        let x = &w - &y;
        return (from_ubig(&x), from_ubig(&y));
    }
    let root = ((p << 3u32) + 1u32).sqrt();
    let w: Nat = (root - 1u32) >> 1u32;
    let tri = (&w * (&w + 1u32)) >> 1u32;
    let y = p - tri;
    let x = &w - &y;
    (x, y)
}

/// Canonical code `Σ_{x∈S} 2^x` of a finite set.
pub fn fset_code<'a, I>(set: I) -> Nat
where
    I: IntoIterator<Item = &'a u64>,
{
    let mut code = Nat::zero();
    for &x in set {
        code.set_bit(x, true);
    }
    code
}

/// The finite set `D_u` with canonical code `u`.
pub fn fset_decode(u: &Nat) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for i in 0..u.bits() {
        if u.bit(i) {
            out.insert(i);
        }
    }
    out
}

/// `D_u ⊆ S` without materialising `D_u`.
pub fn fset_subset_of(u: &Nat, set: &BTreeSet<Nat>) -> bool {
    (0..u.bits()).all(|i| !u.bit(i) || set.contains(&nat(i)))
}

/// `2^k` as a [`Nat`].
pub fn pow2(k: u64) -> Nat {
    let mut n = Nat::zero();
    n.set_bit(k, true);
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cantor_base_case() {
        assert_eq!(cantor(&nat(0), &nat(0)), nat(0));
        assert_eq!(cantor(&nat(1), &nat(0)), nat(1));
        assert_eq!(cantor(&nat(0), &nat(1)), nat(2));
    }

    #[test]
    fn cantor_enumerates_diagonals_in_order() {
        // brute-force enumeration of N² along anti-diagonals
        let mut expected = 0u64;
        for w in 0..60u64 {
            for y in 0..=w {
                let x = w - y;
                assert_eq!(cantor(&nat(x), &nat(y)), nat(expected));
                assert_eq!(uncantor(&nat(expected)), (nat(x), nat(y)));
                expected += 1;
            }
        }
    }

    #[test]
    fn cantor_injective_on_small_square() {
        let mut seen = BTreeSet::new();
        for x in 0..=100u64 {
            for y in 0..=100u64 {
                assert!(seen.insert(cantor(&nat(x), &nat(y))));
            }
        }
    }

    #[test]
    fn fset_examples() {
        assert_eq!(fset_code(&BTreeSet::new()), nat(0));
        let s: BTreeSet<u64> = [0, 2].into_iter().collect();
        assert_eq!(fset_code(&s), nat(5));
        assert_eq!(fset_decode(&nat(5)), s);
    }

    fn big(seed: u64, bits: u64) -> Nat {
        let bytes: alloc::vec::Vec<u8> = (0..bits / 8).map(|i| (i.wrapping_mul(seed) >> 7) as u8).collect();
        Nat::from_bytes_le(&bytes)
    }

    #[test]
    fn large_pairs_agree_with_the_formula() {
        for (sx, sy, bx, by) in [(3, 5, 40_000, 8), (7, 11, 20_000, 70_000), (13, 17, 1 << 15, 1 << 15)] {
            let (x, y) = (big(sx, bx) + 1u32, big(sy, by));
            let w = &x + &y;
            let p = cantor(&x, &y);
            assert_eq!(p, ((&w * (&w + 1u32)) >> 1u32) + &y);
            assert_eq!(uncantor(&p), (x.clone(), y.clone()));
            assert_eq!(uncantor(&(&p + 1u32)), (x - 1u32, y + 1u32));
        }
    }

    proptest! {
        #[test]
        fn uncantor_inverts_cantor(x in any::<u64>(), y in any::<u64>()) {
            let p = cantor(&nat(x), &nat(y));
            prop_assert_eq!(uncantor(&p), (nat(x), nat(y)));
        }

        #[test]
        fn uncantor_is_onto(p in any::<u128>()) {
            let p = Nat::from(p);
            let (x, y) = uncantor(&p);
            prop_assert_eq!(cantor(&x, &y), p);
        }

        #[test]
        fn fset_roundtrip(s in proptest::collection::btree_set(0u64..300, 0..20)) {
            prop_assert_eq!(fset_decode(&fset_code(&s)), s);
        }
    }
}
