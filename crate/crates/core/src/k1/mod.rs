//! Kleene's first model: the naturals with `n·m = φ_n(m)`.

mod ladder;

use rand::Rng;

pub use ladder::{left_numeral, Ladder, NumeralError};

use crate::coding::Nat;
use crate::pca::{Pca, Verdict};
use crate::substrate::{apply_metered, encode, smn, specializer_code, EmptyOracle, Expr, Num, Oracle};

/// Concrete `k` and `s` codes, built with S-m-n.
///
/// * `k = S¹₁(σ, π₁)` where `σ` is the specialiser and `π₁` projects the
///   first component, so `k·a = S¹₁(π₁, a)` and `k·a·b = a`.
/// * `s = S¹₁(σ, s₁)`, `s₁ = S¹₁(σ, s₂)` with
///   `φ_{s₂}(⟨⟨a, b⟩, c⟩) = a·c·(b·c)`.
pub fn k1_combinators() -> (Nat, Nat) {
    let sigma = specializer_code();
    let first = encode(&Expr::fst(Expr::In));
    let k = smn(&sigma, &first);

    let a = Expr::fst(Expr::fst(Expr::In));
    let b = Expr::snd(Expr::fst(Expr::In));
    let c = Expr::snd(Expr::In);
    let s2 = encode(&Expr::apply(
        Expr::apply(a, c.clone()),
        Expr::apply(b, c),
    ));
    let s1 = smn(&sigma, &s2);
    let s = smn(&sigma, &s1);
    (k, s)
}

/// `K₁` as a [`Pca`]. Elements are naturals, held as [`Num`] so that
/// the large codes made by repeated specialisation stay cheap. Equality
/// is equality of naturals.
#[derive(Clone, Debug)]
pub struct K1 {
    k: Num,
    s: Num,
}

impl K1 {
    pub fn new() -> Self {
        let (k, s) = k1_combinators();
        K1 { k: Num::from_nat(&k), s: Num::from_nat(&s) }
    }
}

impl Default for K1 {
    fn default() -> Self {
        Self::new()
    }
}

impl Pca for K1 {
    type Elem = Num;

    fn apply(&self, a: &Num, b: &Num, budget: &mut u64) -> Option<Num> {
        apply_metered(a, b, budget, None)
    }

    fn eq(&self, a: &Num, b: &Num, _budget: u64) -> Verdict {
        Verdict::from_bool(a == b)
    }

    fn k(&self) -> Num {
        self.k.clone()
    }

    fn s(&self) -> Num {
        self.s.clone()
    }
}

/// The relativised model `K₁^X`.
#[derive(Clone, Debug)]
pub struct K1X<O> {
    base: K1,
    oracle: O,
}

impl<O: Oracle> K1X<O> {
    pub fn new(oracle: O) -> Self {
        K1X { base: K1::new(), oracle }
    }

    pub fn oracle(&self) -> &O {
        &self.oracle
    }
}

impl K1X<EmptyOracle> {
    pub fn trivial() -> Self {
        K1X::new(EmptyOracle)
    }
}

impl<O: Oracle> Pca for K1X<O> {
    type Elem = Num;

    fn apply(&self, a: &Num, b: &Num, budget: &mut u64) -> Option<Num> {
        apply_metered(a, b, budget, Some(&self.oracle))
    }

    fn eq(&self, a: &Num, b: &Num, _budget: u64) -> Verdict {
        Verdict::from_bool(a == b)
    }

    fn k(&self) -> Num {
        self.base.k()
    }

    fn s(&self) -> Num {
        self.base.s()
    }
}

/// A random element for law checking: mostly small codes (short
/// programs), some large ones, and now and then a combinator.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, k1: &K1) -> Num {
    match rng.gen_range(0..10u32) {
        0..=4 => Num::from(rng.gen_range(0..2000u64)),
        5..=7 => Num::from(rng.gen::<u32>() as u64),
        8 => k1.k.clone(),
        _ => {
            // a specialisation of k: the constant function
            let mut budget = 1_000;
            let c = Num::from(rng.gen_range(0..100u64));
            k1.apply(&k1.k, &c, &mut budget).unwrap_or_default()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pca::{check_feferman, eval_term, kleene_eq, Outcome, Term};
    use crate::coding::nat;
    use crate::substrate::{omega, run, Fuel};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const FUEL: u64 = 1_000_000;

    fn num(n: u64) -> Num {
        Num::from(n)
    }

    #[test]
    fn k_law_on_small_square() {
        let k1 = K1::new();
        for a in 0..=30u64 {
            for b in 0..=30u64 {
                let t = Term::apps(Term::Const(k1.k()), [Term::Const(num(a)), Term::Const(num(b))]);
                assert_eq!(eval_term(&k1, &t, FUEL).unwrap(), Outcome::Value(num(a)));
            }
        }
    }

    #[test]
    fn s_partial_application_defined() {
        let k1 = K1::new();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let a = random_element(&mut rng, &k1);
            let b = random_element(&mut rng, &k1);
            let t = Term::apps(Term::Const(k1.s()), [Term::Const(a), Term::Const(b)]);
            assert!(eval_term(&k1, &t, FUEL).unwrap().is_value());
        }
    }

    #[test]
    fn skk_is_identity() {
        let k1 = K1::new();
        for a in 0..=20u64 {
            let skk = Term::apps(Term::Const(k1.s()), [Term::Const(k1.k()), Term::Const(k1.k())]);
            let lhs = Term::app(skk, Term::Const(num(a)));
            assert_eq!(kleene_eq(&k1, &lhs, &Term::Const(num(a)), FUEL).unwrap(), Verdict::Proven);
        }
    }

    #[test]
    fn s_law_by_double_evaluation() {
        let k1 = K1::new();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let samples: alloc::vec::Vec<_> = (0..300)
            .map(|_| {
                (
                    random_element(&mut rng, &k1),
                    random_element(&mut rng, &k1),
                    random_element(&mut rng, &k1),
                )
            })
            .collect();
        let report = check_feferman(&k1, &k1.k(), &k1.s(), samples, 100_000);
        assert_eq!(report.refuted(), 0, "{report}");
        assert_eq!(report.k_defined.proven, 300);
        assert_eq!(report.s_defined.proven, 300);
    }

    #[test]
    fn broken_k_is_refuted() {
        let k1 = K1::new();
        let identity = Num::from(encode(&Expr::In));
        let samples = (0..20u64).map(|i| (num(2 * i + 2), num(2 * i + 3), num(0)));
        let report = check_feferman(&k1, &identity, &k1.s(), samples, 10_000);
        assert!(report.k_law.refuted > 0, "{report}");
    }

    #[test]
    fn diverging_term_never_gets_a_value() {
        let k1 = K1::new();
        let w = Num::from(omega());
        let t = Term::app(Term::Const(w), Term::Const(num(3)));
        for budget in [0u64, 1, 10, 1000, 100_000] {
            assert!(matches!(eval_term(&k1, &t, budget).unwrap(), Outcome::DivergedSoFar { .. }));
            assert!(kleene_eq(&k1, &t, &Term::Const(num(0)), budget).unwrap().is_unknown());
        }
    }

    #[test]
    fn trivial_oracle_matches_plain_model() {
        let k1 = K1::new();
        let k1x = K1X::trivial();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..1000 {
            let a = random_element(&mut rng, &k1);
            let b = random_element(&mut rng, &k1);
            let (mut f1, mut f2) = (20_000, 20_000);
            assert_eq!(k1.apply(&a, &b, &mut f1), k1x.apply(&a, &b, &mut f2));
            assert_eq!(f1, f2);
        }
    }

    #[test]
    fn oracle_query_reads_the_set() {
        let evens = |n: &Nat| !n.bit(0);
        let k1x = K1X::new(evens);
        let query = encode(&Expr::apply(Expr::Diverge, Expr::In));
        let q = Num::from(&query);
        for x in 0..20u64 {
            let mut f = 100;
            let want = if x % 2 == 0 { 1u64 } else { 0 };
            assert_eq!(k1x.apply(&q, &num(x), &mut f), Some(num(want)));
        }
        // unrelativised: the empty oracle
        assert_eq!(run(&query, &nat(4), Fuel(100), None), Some(nat(0)));
    }
}
