use core::fmt;

use num_traits::Zero;

use crate::coding::{nat, Nat};
use crate::substrate::{encode, fix, run_metered, smn, Expr, SPECIALIZE_MIN};

/// Elements `t_n` with `t_n·0 = n` and `t_n·m = t_{n+1}` for `m > 0`.
///
/// `d` is the recursion-theorem fixed point with
/// `φ_d(⟨n, m⟩) = n` if `m = 0`, else `S¹₁(d, n + 1)`; then
/// `t_n = S¹₁(d, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ladder {
    d: Nat,
}

/// The program `d` is asked to be equivalent to, with `self_code` in place
/// of `d`. The specialisation `S¹₁(self_code, n + 1)` is computed as the
/// pair `⟨self_code, n + 1⟩`, which is its code whenever `self_code ≥ 10`.
pub fn ladder_body(self_code: &Nat) -> Expr {
    let n = Expr::fst(Expr::In);
    let m = Expr::snd(Expr::In);
    Expr::ifz(m, n.clone(), Expr::pair(Expr::Lit(self_code.clone()), Expr::succ(n)))
}

impl Ladder {
    pub fn new() -> Self {
        let d = fix(|c| encode(&ladder_body(c)));
        assert!(d >= nat(SPECIALIZE_MIN));
        Ladder { d }
    }

    pub fn d(&self) -> &Nat {
        &self.d
    }

    /// `t_n = S¹₁(d, n)`. Always positive since `d > 0`.
    pub fn t(&self, n: u64) -> Nat {
        let t = smn(&self.d, &nat(n));
        debug_assert!(!t.is_zero());
        t
    }
}

impl Default for Ladder {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NumeralError {
    /// The chain `t·…·t·0` starts at one application.
    Zero,
}

impl fmt::Display for NumeralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumeralError::Zero => f.write_str("numerals start at 1"),
        }
    }
}

/// Evaluates the left-associated `n`-fold application `t·t·…·t·0` with
/// `t = t_1`, within `fuel` steps in total. The value is `n`.
pub fn left_numeral(ladder: &Ladder, n: u64, fuel: u64) -> Result<Option<Nat>, NumeralError> {
    if n == 0 {
        return Err(NumeralError::Zero);
    }
    let t = ladder.t(1);
    let mut left = fuel;
    let mut acc = t.clone();
    for _ in 1..n {
        match run_metered(&acc, &t, &mut left, None) {
            Some(v) => acc = v,
            None => return Ok(None),
        }
    }
    Ok(run_metered(&acc, &Nat::zero(), &mut left, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::substrate::{run, Fuel};
    use alloc::collections::BTreeSet;

    const FUEL: Fuel = Fuel(1_000_000);

    #[test]
    fn t_n_applied_to_zero() {
        let l = Ladder::new();
        for n in 1..=20u64 {
            assert_eq!(run(&l.t(n), &nat(0), FUEL, None), Some(nat(n)));
        }
    }

    #[test]
    fn t_3_steps_up() {
        let l = Ladder::new();
        for m in [1u64, 7, 100] {
            assert_eq!(run(&l.t(3), &nat(m), FUEL, None), Some(l.t(4)));
        }
    }

    #[test]
    fn d_satisfies_its_defining_equation() {
        let l = Ladder::new();
        for n in 0..10u64 {
            for m in 0..5u64 {
                let arg = crate::coding::cantor(&nat(n), &nat(m));
                let want = if m == 0 { nat(n) } else { smn(l.d(), &nat(n + 1)) };
                assert_eq!(run(l.d(), &arg, FUEL, None), Some(want));
            }
        }
    }

    #[test]
    fn t_is_injective_and_positive() {
        let l = Ladder::new();
        let all: BTreeSet<Nat> = (1..=50).map(|n| l.t(n)).collect();
        assert_eq!(all.len(), 50);
        assert!(all.iter().all(|t| !t.is_zero()));
    }

    #[test]
    fn numerals() {
        let l = Ladder::new();
        assert_eq!(left_numeral(&l, 0, 1000), Err(NumeralError::Zero));
        for n in [1u64, 5, 20] {
            assert_eq!(left_numeral(&l, n, 1_000_000), Ok(Some(nat(n))));
        }
        assert_eq!(left_numeral(&l, 5, 3), Ok(None));
    }
}
