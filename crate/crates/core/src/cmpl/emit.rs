use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::syntax::{Formula, Group, Sentence, Term};
use crate::coding::nat;
use crate::k1::k1_combinators;
use crate::substrate::{run, Fuel};

use num_traits::ToPrimitive;

fn axiom(name: &str, group: Group, formula: Formula) -> Sentence {
    Sentence { name: name.into(), group, formula }
}

fn v(x: &str) -> Term {
    Term::var(x)
}

/// The finite fragment of the completion theory at `fuel` and `bound`:
///
/// 1. Peano arithmetic relativised to `N`, with the induction schema cut
///    to the first `bound` formulas of [`induction_formulas`];
/// 2. `f` maps `N` into `A` and is injective;
/// 3. `f(Sᵃ0)·f(Sᵇ0) = f(Sᶜ0)` for `a, b, c ≤ bound` with `φ_a(b) = c`
///    within `fuel`;
/// 4. `f(k)` and `f(s)` obey the `k` and `s` laws on `A` (the codes are
///    written as binary numeral terms, see [`Term::binary`]).
///
/// The order is fixed: by group, then as listed.
pub fn emit_cmpl(fuel: u64, bound: u64) -> Vec<Sentence> {
    let mut out = arithmetic(bound);
    out.extend(embedding());
    out.extend(application(fuel, bound));
    out.extend(combinators());
    out
}

fn arithmetic(bound: u64) -> Vec<Sentence> {
    use Formula as F;
    let g = Group::Arithmetic;
    let n = |t: Term| F::N(t);
    let mut out = vec_of([
        axiom("pa_zero_sort", g, n(Term::Zero)),
        axiom("pa_succ_sort", g, F::forall_n(&["X"], n(Term::succ(v("X"))))),
        axiom("pa_plus_sort", g, F::forall_n(&["X", "Y"], n(Term::plus(v("X"), v("Y"))))),
        axiom("pa_times_sort", g, F::forall_n(&["X", "Y"], n(Term::times(v("X"), v("Y"))))),
        axiom("pa_succ_nonzero", g, F::forall_n(&["X"], F::not(F::eq(Term::succ(v("X")), Term::Zero)))),
        axiom(
            "pa_succ_injective",
            g,
            F::forall_n(
                &["X", "Y"],
                F::implies(F::eq(Term::succ(v("X")), Term::succ(v("Y"))), F::eq(v("X"), v("Y"))),
            ),
        ),
        axiom("pa_plus_zero", g, F::forall_n(&["X"], F::eq(Term::plus(v("X"), Term::Zero), v("X")))),
        axiom(
            "pa_plus_succ",
            g,
            F::forall_n(
                &["X", "Y"],
                F::eq(Term::plus(v("X"), Term::succ(v("Y"))), Term::succ(Term::plus(v("X"), v("Y")))),
            ),
        ),
        axiom("pa_times_zero", g, F::forall_n(&["X"], F::eq(Term::times(v("X"), Term::Zero), Term::Zero))),
        axiom(
            "pa_times_succ",
            g,
            F::forall_n(
                &["X", "Y"],
                F::eq(Term::times(v("X"), Term::succ(v("Y"))), Term::plus(Term::times(v("X"), v("Y")), v("X"))),
            ),
        ),
    ]);
    let count = usize::try_from(bound).unwrap_or(usize::MAX);
    for (i, phi) in induction_formulas(count).iter().enumerate() {
        out.push(axiom(&format!("pa_induction_{i}"), g, induction(phi)));
    }
    out
}

fn vec_of<const K: usize>(items: [Sentence; K]) -> Vec<Sentence> {
    items.into_iter().collect()
}

/// `(φ(0) ∧ ∀X ∈ N (φ(X) → φ(S X))) → ∀X ∈ N φ(X)`, closed over `Y ∈ N`
/// when `Y` is free.
pub fn induction(phi: &Formula) -> Formula {
    use Formula as F;
    let base = phi.subst("X", &Term::Zero);
    let step = F::forall_n(&["X"], F::implies(phi.clone(), phi.subst("X", &Term::succ(v("X")))));
    let body = F::implies(F::and(base, step), F::forall_n(&["X"], phi.clone()));
    if phi.has_free("Y") {
        F::forall_n(&["Y"], body)
    } else {
        body
    }
}

/// The first `count` arithmetic formulas with `X` free, in order of
/// size. Formulas are built from `0, S, +, ×` over `X` and `Y` with `=`,
/// `¬`, `∧` and `∀Y ∈ N`; a sorted quantifier counts as one symbol and
/// only binds a `Y` that occurs. Within a size: equations, negations,
/// conjunctions, quantifications, each in generation order.
pub fn induction_formulas(count: usize) -> Vec<Formula> {
    let mut terms: Vec<Vec<Term>> = vec_empty(1);
    let mut formulas: Vec<Vec<Formula>> = vec_empty(1);
    let mut out = Vec::new();
    let mut size = 0;
    while out.len() < count {
        size += 1;
        terms.push(terms_of_size(&terms, size));
        let level = formulas_of_size(&terms, &formulas, size);
        out.extend(level.iter().filter(|p| p.has_free("X")).take(count - out.len()).cloned());
        formulas.push(level);
    }
    out
}

fn vec_empty<T>(n: usize) -> Vec<Vec<T>> {
    (0..n).map(|_| Vec::new()).collect()
}

fn terms_of_size(terms: &[Vec<Term>], n: usize) -> Vec<Term> {
    if n == 1 {
        return [Term::Zero, v("X"), v("Y")].into();
    }
    let mut out: Vec<Term> = terms[n - 1].iter().cloned().map(Term::succ).collect();
    for l in 1..n - 1 {
        for a in &terms[l] {
            for b in &terms[n - 1 - l] {
                out.push(Term::plus(a.clone(), b.clone()));
                out.push(Term::times(a.clone(), b.clone()));
            }
        }
    }
    out
}

fn formulas_of_size(terms: &[Vec<Term>], formulas: &[Vec<Formula>], n: usize) -> Vec<Formula> {
    use Formula as F;
    let mut out = Vec::new();
    for l in 1..n.saturating_sub(1) {
        for a in &terms[l] {
            for b in &terms[n - 1 - l] {
                out.push(F::eq(a.clone(), b.clone()));
            }
        }
    }
    if n >= 2 {
        out.extend(formulas[n - 1].iter().cloned().map(F::not));
        for l in 1..n - 1 {
            for p in &formulas[l] {
                for q in &formulas[n - 1 - l] {
                    out.push(F::and(p.clone(), q.clone()));
                }
            }
        }
        for p in formulas[n - 1].iter().filter(|p| p.has_free("Y")) {
            out.push(F::forall_n(&["Y"], p.clone()));
        }
    }
    out
}

fn embedding() -> Vec<Sentence> {
    use Formula as F;
    let g = Group::Embedding;
    vec_of([
        axiom("f_sort", g, F::forall_n(&["X"], F::A(Term::f(v("X"))))),
        axiom(
            "f_injective",
            g,
            F::forall_n(&["X", "Y"], F::implies(F::eq(Term::f(v("X")), Term::f(v("Y"))), F::eq(v("X"), v("Y")))),
        ),
    ])
}

/// Triples `(a, b, c)`, all `≤ bound`, with `φ_a(b) = c` within `fuel`,
/// in order of `(a, b)`.
pub fn certified_triples(fuel: u64, bound: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound {
            let c = run(&nat(a), &nat(b), Fuel(fuel), None).and_then(|c| c.to_u64());
            if let Some(c) = c.filter(|&c| c <= bound) {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn application(fuel: u64, bound: u64) -> Vec<Sentence> {
    certified_triples(fuel, bound)
        .into_iter()
        .map(|(a, b, c)| {
            let lhs = Term::app(Term::f(Term::unary(a)), Term::f(Term::unary(b)));
            axiom(&format!("app_{a}_{b}_{c}"), Group::Application, Formula::eq(lhs, Term::f(Term::unary(c))))
        })
        .collect()
}

fn combinators() -> Vec<Sentence> {
    use Formula as F;
    let g = Group::Combinators;
    let (k, s) = k1_combinators();
    let (fk, fs) = (Term::f(Term::binary(&k)), Term::f(Term::binary(&s)));
    let ap = Term::app;
    vec_of([
        axiom("comb_k", g, F::forall_a(&["X", "Y"], F::eq(ap(ap(fk, v("X")), v("Y")), v("X")))),
        axiom(
            "comb_s",
            g,
            F::forall_a(
                &["X", "Y", "Z"],
                F::eq(
                    ap(ap(ap(fs, v("X")), v("Y")), v("Z")),
                    ap(ap(v("X"), v("Z")), ap(v("Y"), v("Z"))),
                ),
            ),
        ),
    ])
}

/// `(a, b, c)` if the sentence has the shape `f(Sᵃ0)·f(Sᵇ0) = f(Sᶜ0)`.
pub fn as_application(formula: &Formula) -> Option<(u64, u64, u64)> {
    fn numeral(t: &Term) -> Option<u64> {
        let mut t = t;
        let mut n = 0;
        while let Term::Succ(u) = t {
            n += 1;
            t = u;
        }
        (*t == Term::Zero).then_some(n)
    }
    fn image(t: &Term) -> Option<u64> {
        match t {
            Term::F(u) => numeral(u),
            _ => None,
        }
    }
    match formula {
        Formula::Eq(Term::App(l, r), c) => Some((image(l)?, image(r)?, image(c)?)),
        _ => None,
    }
}

/// The text form: one `fof` line per sentence, with a `%` comment line
/// opening each group.
pub fn render(sentences: &[Sentence]) -> String {
    let mut out = String::new();
    let mut current = None;
    for s in sentences {
        if current != Some(s.group) {
            current = Some(s.group);
            let _ = writeln!(out, "% group {}: {}", s.group.number(), s.group.title());
        }
        let _ = writeln!(out, "{s}");
    }
    out
}
