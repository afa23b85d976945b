use alloc::collections::BTreeSet;

use super::fixtures::{HalvedProduct, ModularSum, Nowhere, SlowDivision, TruncatedK1};
use super::*;
use crate::coding::{nat, uncantor};
use crate::substrate::{insep_pair, run, Fuel, Side};

fn stub(default: u64, equality: Equality) -> TableCandidate {
    let mut c = TableCandidate::new(Images { zero: nat(0), one: nat(1), t: nat(2), e: nat(3) });
    c.default = Some(nat(default));
    c.equality = equality;
    c
}

#[test]
fn empty_presentations() {
    let pc = ce_to_pc(Nowhere);
    for s in [0u64, 1, 50] {
        assert_eq!(pc.psi(&nat(1), &nat(2), s), None);
        assert!(pc_to_ce(Nowhere).triples(s).is_empty());
    }
}

#[test]
fn least_code_wins() {
    let pc = ce_to_pc(HalvedProduct { cap: 20 });
    // γ(3)·γ(5) = 1·2 = 2, coded by 4 and 5
    assert_eq!(pc.psi(&nat(3), &nat(5), 10), Some(nat(4)));
    let pc = ce_to_pc(ModularSum { modulus: 7, cap: 40 });
    assert_eq!(pc.psi(&nat(5), &nat(4), 10), Some(nat(2)));
}

#[test]
fn k1_ce_read_as_pc_is_run() {
    let fuel = 1000;
    let table = ce_to_pc(K1Ce).defined_below(fuel);
    let mut seen = 0;
    for p in 0..fuel {
        let (n, m) = uncantor(&nat(p));
        let direct = run(&n, &m, Fuel(fuel), None);
        assert_eq!(table.get(&(n.clone(), m.clone())), direct.as_ref(), "{n}·{m}");
        seen += 1;
    }
    assert_eq!(seen, 1000);
    assert!(table.len() > 500);
}

#[test]
fn non_injective_equality_lists_whole_classes() {
    let ce = pc_to_ce(ce_to_pc(ModularSum { modulus: 7, cap: 40 }));
    let t = ce.triples(30);
    for k in [3u64, 10, 17, 24] {
        assert!(t.contains(&(nat(1), nat(2), nat(k))));
    }
    assert!(!t.contains(&(nat(1), nat(2), nat(4))));
}

#[test]
fn pc_ce_pc_agrees_modulo_eq() {
    let p = ModularSum { modulus: 5, cap: 40 };
    let pc = ce_to_pc(p);
    let back = ce_to_pc(pc_to_ce(ce_to_pc(p)));
    let fuel = 40;
    let one = pc.defined_below(fuel);
    let two = back.defined_below(fuel);
    assert_eq!(one.len(), 1600);
    for ((n, m), k) in &one {
        assert!(p.eq(k, &two[&(n.clone(), m.clone())]));
    }
}

#[test]
fn round_trips_on_fixtures() {
    for s in 0..=60 {
        assert!(round_trip_agrees(&ModularSum { modulus: 7, cap: 40 }, s), "modular at {s}");
        assert!(round_trip_agrees(&SlowDivision, s), "division at {s}");
        assert!(round_trip_agrees(&HalvedProduct { cap: 20 }, s), "product at {s}");
        assert!(round_trip_agrees(&K1Ce, s), "K1 at {s}");
    }
}

#[test]
fn ce_to_pc_is_monotone_modulo_eq() {
    fn check<P: CePresentation + Copy>(p: P) {
        let pc = ce_to_pc(p);
        for n in 0..12u64 {
            for m in 0..12u64 {
                let mut first = None;
                for s in 0..40 {
                    match (&first, pc.psi(&nat(n), &nat(m), s)) {
                        (None, v) => first = v,
                        (Some(k), Some(v)) => assert!(p.eq(k, &v)),
                        (Some(_), None) => panic!("value lost at {s}"),
                    }
                }
            }
        }
    }
    check(ModularSum { modulus: 3, cap: 40 });
    check(SlowDivision);
    check(HalvedProduct { cap: 20 });
    check(K1Ce);
}

#[test]
fn refuter_zero_budget() {
    let c = stub(0, Equality::Classes(Default::default()));
    assert_eq!(refute_completion(&c, 0), Ok(RefuteOutcome::Unknown { scanned: 0 }));
}

#[test]
fn constant_stub_is_caught_on_b() {
    // everything is f(0), so C is everything; code 1 is `in`, φ_1(1) = 1
    let c = stub(0, Equality::Classes(Default::default()));
    let RefuteOutcome::Witness(w) = refute_completion(&c, 1000).unwrap() else { panic!() };
    assert_eq!((w.x, w.side, w.in_c), (1, Side::B, true));
    let (_, b) = insep_pair(Fuel(1000));
    assert!(b.contains(&w.x));
}

#[test]
fn never_equal_stub_is_caught_on_a() {
    let c = stub(0, Equality::Never);
    let RefuteOutcome::Witness(w) = refute_completion(&c, 1000).unwrap() else { panic!() };
    assert_eq!((w.x, w.side, w.in_c), (0, Side::A, false));
    assert!(verify(&c, &w, 1000).unwrap());
}

#[test]
fn truncated_k1_is_caught() {
    let c = TruncatedK1::new(30);
    let RefuteOutcome::Witness(w) = refute_completion(&c, 10_000).unwrap() else { panic!() };
    assert!(verify(&c, &w, 10_000).unwrap());
    let (a, b) = insep_pair(Fuel(10_000));
    match w.side {
        Side::A => assert!(a.contains(&w.x) && !w.in_c),
        Side::B => assert!(b.contains(&w.x) && w.in_c),
    }
    // the second ladder step needs more than 30 steps, so f(2) = 0
    assert_eq!(numeral_image(&c, 1).unwrap(), nat(1));
    assert_eq!(numeral_image(&c, 2).unwrap(), nat(0));
}

#[test]
fn missing_entries_are_malformed() {
    let mut c = stub(0, Equality::Always);
    c.default = None;
    assert_eq!(
        refute_completion(&c, 100),
        Err(RefuteError::Malformed { n: nat(3), m: nat(0) })
    );
}

#[test]
fn declared_classes_merge() {
    let mut c = stub(0, Equality::Classes(Default::default()));
    c.declare_equal(&nat(5), &nat(9));
    c.declare_equal(&nat(9), &nat(2));
    assert!(CompletionCandidate::eq(&c, &nat(5), &nat(2)));
    assert!(CompletionCandidate::eq(&c, &nat(7), &nat(7)));
    assert!(!CompletionCandidate::eq(&c, &nat(5), &nat(7)));
    let got: BTreeSet<u64> = (0..12).filter(|&k| CompletionCandidate::eq(&c, &nat(k), &nat(9))).collect();
    assert_eq!(got, [2, 5, 9].into());
}
