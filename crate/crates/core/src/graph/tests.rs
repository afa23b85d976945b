use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::coding::{fset_code, fset_decode, nat, pow2};
use crate::pca::check_feferman;
use crate::substrate::{encode, omega, run, Expr, Fuel};

type Set = BTreeSet<Nat>;

fn set(xs: &[u64]) -> Set {
    xs.iter().map(|&x| nat(x)).collect()
}

fn d(u: &Nat) -> Set {
    fset_decode(u).into_iter().map(Nat::from).collect()
}

// Direct transcription of the definitions, fully materialised.

pub(crate) fn naive_app(x: &Set, y: &Set) -> Set {
    x.iter()
        .filter_map(unpair)
        .filter(|(_, u)| d(u).is_subset(y))
        .map(|(x, _)| x)
        .collect()
}

fn naive_graph(body: &SetExpr, env: &[Set], s: u64) -> Set {
    let mut out = Set::new();
    for u in 0..s {
        let u = nat(u);
        let mut env = env.to_vec();
        env.push(d(&u));
        for x in naive_expr(body, &env, s) {
            out.insert(pair(&x, &u));
        }
    }
    out
}

fn naive_expr(e: &SetExpr, env: &[Set], s: u64) -> Set {
    match e {
        SetExpr::Var(i) => env[env.len() - 1 - i].clone(),
        SetExpr::Const(x) => naive(x, s),
        SetExpr::Union(a, b) => naive_expr(a, env, s).union(&naive_expr(b, env, s)).cloned().collect(),
        SetExpr::App(a, b) => naive_app(&naive_expr(a, env, s), &naive_expr(b, env, s)),
        SetExpr::Graph(body) => naive_graph(body, env, s),
    }
}

fn naive_embed(n: &Nat, s: u64) -> Set {
    if s == 0 {
        return Set::new();
    }
    let mut out: Set = [(n << 1) + 1u32].into();
    for b in 0..s {
        if let Some(c) = run(n, &nat(b), Fuel(s - 1), None) {
            for x in naive_embed(&c, s - 1) {
                if x <= nat(s - 1) {
                    out.insert(pair(&x, &pow2(2 * b + 1)));
                }
            }
        }
    }
    out
}

fn naive(x: &EnumSet, s: u64) -> Set {
    if s == 0 {
        return Set::new();
    }
    match x {
        EnumSet::FinLit(xs) => xs.clone(),
        EnumSet::GraphOf(body) => naive_graph(body, &[], s),
        EnumSet::AppNode(a, b) => naive_app(&naive(a, s), &naive(b, s)),
        EnumSet::EmbedNode(n) => naive_embed(n, s),
    }
}

// Random descriptions.

fn arb_elem() -> impl Strategy<Value = Nat> {
    prop_oneof![
        (0u64..40).prop_map(nat),
        (0u64..8, 0u64..16).prop_map(|(x, u)| pair(&nat(x), &nat(u))),
    ]
}

pub(crate) fn arb_finlit() -> impl Strategy<Value = EnumSet> {
    proptest::collection::btree_set(arb_elem(), 0..5).prop_map(EnumSet::FinLit)
}

fn arb_expr(binders: usize, depth: u32) -> BoxedStrategy<SetExpr> {
    let leaf = if binders == 0 {
        arb_finlit().prop_map(SetExpr::constant).boxed()
    } else {
        prop_oneof![
            (0..binders).prop_map(SetExpr::var),
            arb_finlit().prop_map(SetExpr::constant),
        ]
        .boxed()
    };
    if depth == 0 {
        return leaf;
    }
    prop_oneof![
        2 => leaf,
        1 => (arb_expr(binders, depth - 1), arb_expr(binders, depth - 1)).prop_map(|(a, b)| SetExpr::union(a, b)),
        2 => (arb_expr(binders, depth - 1), arb_expr(binders, depth - 1)).prop_map(|(a, b)| SetExpr::app(a, b)),
        1 => arb_expr(binders + 1, depth - 1).prop_map(SetExpr::graph),
    ]
    .boxed()
}

pub(crate) fn arb_enumset() -> impl Strategy<Value = EnumSet> {
    let leaf = prop_oneof![
        4 => arb_finlit(),
        1 => Just(k_graph()),
        1 => Just(s_graph()),
        1 => (0u64..60).prop_map(|n| embed_k1(&nat(n))),
        1 => arb_expr(1, 2).prop_map(graphify),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| EnumSet::app(a, b)))
}

#[test]
fn pairing_round_trip_and_parity() {
    for x in 0..30u64 {
        for u in 0..30u64 {
            let p = pair(&nat(x), &nat(u));
            assert!(!p.bit(0));
            assert_eq!(unpair(&p), Some((nat(x), nat(u))));
        }
    }
    assert_eq!(unpair(&nat(7)), None);
}

#[test]
fn literals_and_zero_fuel() {
    let x = EnumSet::fin([1, 2, 5]);
    assert!(enum_at(&x, 0).is_empty());
    for s in 1..5 {
        assert_eq!(enum_at(&x, s), set(&[1, 2, 5]));
    }
    assert!(enum_at(&k_graph(), 0).is_empty());
    assert!(enum_at(&embed_k1(&nat(3)), 0).is_empty());
}

#[test]
fn application_formula_examples() {
    let ys = [EnumSet::empty(), EnumSet::fin([1]), EnumSet::fin([0, 1, 2, 3]), k_graph()];
    let five = EnumSet::FinLit([pair(&nat(5), &fset_code(&[]))].into());
    for y in &ys {
        assert!(enum_below(&g_apply(&EnumSet::empty(), y), 50, &nat(1000)).is_empty());
        assert_eq!(enum_below(&g_apply(&five, y), 50, &nat(1000)), set(&[5]));
    }
    let three = EnumSet::FinLit([pair(&nat(3), &fset_code(&[1, 2]))].into());
    assert!(enum_at(&g_apply(&three, &EnumSet::fin([1])), 10).is_empty());
    assert_eq!(enum_at(&g_apply(&three, &EnumSet::fin([1, 2])), 10), set(&[3]));
}

#[test]
fn graphify_examples() {
    let empty = graphify(SetExpr::constant(EnumSet::empty()));
    let three = graphify(SetExpr::constant(EnumSet::fin([3])));
    let id = graphify(SetExpr::var(0));
    for ys in [&[][..], &[1], &[0, 2, 3], &[1, 4, 9, 40]] {
        let y = EnumSet::fin(ys.iter().copied());
        assert!(enum_at(&g_apply(&empty, &y), 100).is_empty());
        assert_eq!(enum_at(&g_apply(&three, &y), 100), set(&[3]));
        // at fuel s only D_u with u < s are seen: elements x with 2^x < s
        let small: Set = ys.iter().filter(|&&x| x < 7).map(|&x| nat(x)).collect();
        assert_eq!(enum_at(&g_apply(&id, &y), 100), small);
    }
}

#[test]
#[should_panic(expected = "free variables")]
fn graphify_rejects_open_operators() {
    let _ = graphify(SetExpr::var(1));
}

#[test]
fn k_and_s_reduce_on_literals() {
    let budget = 1000;
    let window = nat(budget);
    let y = EnumSet::fin([0, 2, 5, 9]);
    let z = EnumSet::fin([1, 3]);
    let kyz = g_apply(&g_apply(&k_graph(), &y), &z);
    assert_eq!(enum_below(&kyz, budget, &window), enum_at(&y, 1));
    assert_eq!(compare_upto(&kyz, &y, budget), Comparison { verdict: Verdict::Unknown { spent: budget }, consistent: true });

    let k_empty = g_apply(&g_apply(&k_graph(), &EnumSet::empty()), &z);
    assert!(enum_below(&k_empty, budget, &window).is_empty());

    // 0 = ⟨0, ∅⟩, 4 = ⟨0, {0}⟩, 8 = ⟨1, {0}⟩
    let x = EnumSet::fin([0, 4, 8]);
    let yy = EnumSet::fin([0]);
    let zz = EnumSet::fin([0]);
    let lhs = EnumSet::app(EnumSet::app(EnumSet::app(s_graph(), x.clone()), yy.clone()), zz.clone());
    let rhs = EnumSet::app(EnumSet::app(x.clone(), zz.clone()), EnumSet::app(yy, zz.clone()));
    assert_eq!(enum_below(&EnumSet::app(x, zz), budget, &window), set(&[0, 1]));
    assert_eq!(enum_below(&lhs, budget, &window), set(&[0]));
    assert_eq!(enum_below(&rhs, budget, &window), set(&[0]));
    assert!(!eq_upto(&lhs, &rhs, budget).is_refuted());
}

#[test]
fn feferman_laws_on_literal_samples() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut small = || EnumSet::fin((0..rng.gen_range(0..=4)).map(|_| rng.gen_range(0..10u64)).collect::<Vec<_>>());
    let samples: Vec<_> = (0..60).map(|_| (small(), small(), small())).collect();
    let report = check_feferman(&GraphModel, &k_graph(), &s_graph(), samples, 1000);
    assert_eq!(report.refuted(), 0, "{report}");
    assert_eq!(report.k_defined.proven, 60);
    assert_eq!(report.s_defined.proven, 60);
}

#[test]
fn a_wrong_k_is_refuted() {
    // identity graph as "k": k·a·b = a·b, and {8}·{0} = {1} since 8 = ⟨1, {0}⟩
    let id = graphify(SetExpr::var(0));
    let samples = [(EnumSet::fin([8]), EnumSet::fin([0]), EnumSet::empty())];
    let report = check_feferman(&GraphModel, &id, &s_graph(), samples, 1000);
    let kab = EnumSet::app(EnumSet::app(id.clone(), EnumSet::fin([8])), EnumSet::fin([0]));
    assert_eq!(enum_below(&kab, 1000, &nat(1000)), set(&[1]));
    assert_eq!(report.k_law.refuted, 1, "{report}");
}

#[test]
fn eq_upto_examples() {
    let x = g_apply(&k_graph(), &EnumSet::fin([1]));
    assert_eq!(eq_upto(&x, &x, 10), Verdict::Proven);
    assert_eq!(eq_upto(&EnumSet::fin([1]), &EnumSet::fin([2]), 10), Verdict::Refuted);
    assert_eq!(eq_upto(&EnumSet::fin([1]), &EnumSet::fin([1]), 0), Verdict::Proven);
    let four = EnumSet::FinLit([pair(&nat(4), &nat(0))].into());
    assert_eq!(eq_upto(&g_apply(&four, &EnumSet::empty()), &EnumSet::fin([4]), 3), Verdict::Proven);
    assert!(eq_upto(&g_apply(&four, &k_graph()), &EnumSet::fin([4]), 3).is_unknown());
    let c = compare_upto(&g_apply(&x, &EnumSet::fin([9])), &EnumSet::fin([1]), 1000);
    assert!(c.verdict.is_unknown() && c.consistent);
    // a non-literal side with an element outside the literal
    assert_eq!(eq_upto(&embed_k1(&nat(0)), &EnumSet::fin([3]), 10), Verdict::Refuted);
    assert!(eq_upto(&embed_k1(&nat(1)), &EnumSet::fin([3]), 10).is_unknown());
}

#[test]
fn embedding_markers() {
    for n in 0..=100u64 {
        assert!(member(&embed_k1(&nat(n)), &nat(2 * n + 1), 1));
    }
    for m in 0..=50u64 {
        let xs = enum_at(&embed_k1(&nat(m)), 60);
        for n in 0..=50u64 {
            assert_eq!(xs.contains(&nat(2 * n + 1)), m == n);
        }
    }
}

#[test]
fn embedding_of_successor() {
    let succ = encode(&Expr::succ(Expr::In));
    let budget = 1000;
    let window = nat(budget);
    let lhs = g_apply(&embed_k1(&succ), &embed_k1(&nat(3)));
    let got = enum_below(&lhs, budget, &window);
    assert!(got.contains(&nat(9)));
    assert_eq!(got, enum_below(&embed_k1(&nat(4)), budget, &window));
}

#[test]
fn embedding_of_omega_is_empty() {
    let w = embed_k1(&omega());
    for b in [0u64, 3, 17] {
        let y = g_apply(&w, &embed_k1(&nat(b)));
        for budget in [0u64, 1, 10, 100, 1000] {
            assert!(enum_below(&y, budget, &nat(budget)).is_empty());
        }
    }
}

#[test]
fn embedding_simulates_application() {
    let k = crate::k1::K1::new();
    let ka = crate::pca::Pca::apply(&k, &crate::pca::Pca::k(&k), &5u64.into(), &mut 10_000).unwrap().to_nat();
    for (a, b) in [(ka.clone(), nat(0)), (ka, nat(9)), (encode(&Expr::pair(Expr::In, Expr::In)), nat(2))] {
        let c = run(&a, &b, Fuel(10_000), None).unwrap();
        let lhs = g_apply(&embed_k1(&a), &embed_k1(&b));
        assert_eq!(enum_below(&lhs, 1000, &nat(1000)), enum_below(&embed_k1(&c), 1000, &nat(1000)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn symbolic_matches_definition(x in arb_enumset(), s in 0u64..6) {
        prop_assert_eq!(enum_at(&x, s), naive(&x, s));
    }

    #[test]
    fn membership_matches_enumeration(x in arb_enumset(), s in 0u64..6) {
        let all = naive(&x, s);
        for y in 0..200u64 {
            prop_assert_eq!(member(&x, &nat(y), s), all.contains(&nat(y)));
        }
        for y in &all {
            prop_assert!(member(&x, y, s));
        }
    }

    #[test]
    fn bounded_enumeration_is_a_cut(x in arb_enumset(), s in 0u64..6, bound in 0u64..300) {
        let all = naive(&x, s);
        let cut: Set = all.into_iter().filter(|y| *y < nat(bound)).collect();
        prop_assert_eq!(enum_below(&x, s, &nat(bound)), cut);
    }

    #[test]
    fn enumeration_is_monotone(x in arb_enumset()) {
        let window = nat(400);
        let mut prev = Set::new();
        for s in 0..=200u64 {
            let now = enum_below(&x, s, &window);
            prop_assert!(prev.is_subset(&now), "fuel {}", s);
            prev = now;
        }
    }

    #[test]
    fn application_is_monotone(
        x in proptest::collection::btree_set(arb_elem(), 0..6),
        y in proptest::collection::btree_set(arb_elem(), 0..6),
        xe in proptest::collection::btree_set(arb_elem(), 0..4),
        ye in proptest::collection::btree_set(arb_elem(), 0..4),
        s in 1u64..40,
    ) {
        let x2: Set = x.union(&xe).cloned().collect();
        let y2: Set = y.union(&ye).cloned().collect();
        let small = enum_at(&EnumSet::app(EnumSet::FinLit(x), EnumSet::FinLit(y)), s);
        let big = enum_at(&EnumSet::app(EnumSet::FinLit(x2), EnumSet::FinLit(y2)), s);
        prop_assert!(small.is_subset(&big));
    }

    #[test]
    fn application_is_compact(x in arb_enumset(), y in arb_enumset(), s in 1u64..40) {
        let xy = EnumSet::app(x.clone(), y.clone());
        for z in enum_below(&xy, s, &nat(300)) {
            let dd = compactness_witness(&x, &y, &z, s);
            prop_assert!(dd.is_some(), "no witness for {}", z);
            let dd = dd.unwrap();
            for e in &dd {
                prop_assert!(member(&y, e, s));
            }
            prop_assert!(member(&EnumSet::app(x.clone(), EnumSet::FinLit(dd)), &z, s));
        }
    }

    #[test]
    fn literal_application_is_exact(x in arb_finlit(), y in arb_finlit(), s in 1u64..30) {
        let (EnumSet::FinLit(xs), EnumSet::FinLit(ys)) = (&x, &y) else { unreachable!() };
        prop_assert_eq!(enum_at(&EnumSet::app(x.clone(), y.clone()), s), naive_app(xs, ys));
    }

    #[test]
    fn eq_upto_never_refutes_itself(x in arb_enumset(), b in 0u64..100) {
        prop_assert_eq!(eq_upto(&x, &x, b), Verdict::Proven);
    }

    #[test]
    fn eq_upto_is_budget_monotone(x in arb_enumset(), y in arb_finlit(), b in 0u64..60) {
        let early = eq_upto(&x, &y, b);
        let late = eq_upto(&x, &y, b + 40);
        prop_assert!(early.may_become(late), "{:?} then {:?}", early, late);
    }
}
