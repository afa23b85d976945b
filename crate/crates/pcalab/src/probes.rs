//! Randomised monotonicity probes: each probe asks the same question at
//! two resource levels `r ≤ r'` and checks that the answer at `r'` is a
//! legal successor of the answer at `r` (a value stays the same value, a
//! verdict of proven or refuted stays put, an enumerated element stays
//! enumerated).

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pcalab_core::cmpl::{certified_triples, insep_left, insep_right, sep_viable, SepNode};
use pcalab_core::coding::nat;
use pcalab_core::graph::{embed_below, enum_below, eq_upto, k_graph, s_graph, EnumSet};
use pcalab_core::k1::{random_element, K1};
use pcalab_core::pca::{eval_term, kleene_eq, Outcome, Term};
use pcalab_core::presentations::{ce_to_pc, fixtures, refute_completion, verify, K1Ce, PcPresentation, RefuteOutcome};
use pcalab_core::substrate::{membership, run, Fuel, Num};

/// What the probes exercise; each probe picks one at random.
pub const AREAS: [&str; 9] = [
    "substrate run",
    "insep membership",
    "k1 term evaluation",
    "k1 kleene equality",
    "graph enumeration",
    "graph equality",
    "graph embedding",
    "presentations",
    "cmpl",
];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProbeReport {
    /// Per area: (probes run, violations).
    pub areas: BTreeMap<&'static str, (usize, usize)>,
    /// A description of each violation, in probe order.
    pub violations: Vec<String>,
}

impl ProbeReport {
    pub fn total(&self) -> usize {
        self.areas.values().map(|a| a.0).sum()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn random_set(rng: &mut ChaCha8Rng, depth: u32) -> EnumSet {
    match rng.gen_range(0..if depth == 0 { 3 } else { 5 }) {
        0 => EnumSet::fin((0..rng.gen_range(0..4)).map(|_| rng.gen_range(0..24u64))),
        1 => [k_graph(), s_graph()].choose(rng).cloned().unwrap_or_else(k_graph),
        2 => EnumSet::EmbedNode(nat(rng.gen_range(0..40))),
        _ => EnumSet::app(random_set(rng, depth - 1), random_set(rng, depth - 1)),
    }
}

fn random_k1_term(rng: &mut ChaCha8Rng, k1: &K1, depth: u32) -> Term<Num> {
    if depth == 0 || rng.gen_bool(0.3) {
        Term::Const(random_element(rng, k1))
    } else {
        Term::app(random_k1_term(rng, k1, depth - 1), random_k1_term(rng, k1, depth - 1))
    }
}

fn two_levels(rng: &mut ChaCha8Rng, max: u64) -> (u64, u64) {
    let lo = rng.gen_range(0..=max);
    (lo, lo + rng.gen_range(0..=max))
}

fn outcome_ok<E: PartialEq>(lo: &Outcome<E>, hi: &Outcome<E>) -> bool {
    match lo {
        Outcome::Value(v) => matches!(hi, Outcome::Value(w) if w == v),
        Outcome::DivergedSoFar { .. } => true,
    }
}

/// Runs `count` probes, spread over [`AREAS`] by a generator seeded with
/// `seed`. The report is a function of `(seed, count)`.
pub fn run_probes(seed: u64, count: usize) -> ProbeReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k1 = K1::new();
    let mut report = ProbeReport::default();
    for i in 0..count {
        let area = AREAS[i % AREAS.len()];
        let (ok, what) = probe(area, &mut rng, &k1);
        let entry = report.areas.entry(area).or_default();
        entry.0 += 1;
        if !ok {
            entry.1 += 1;
            report.violations.push(format!("probe {i} ({area}): {what}"));
        }
    }
    report
}

fn probe(area: &str, rng: &mut ChaCha8Rng, k1: &K1) -> (bool, String) {
    match area {
        "substrate run" => {
            let e = nat(rng.gen_range(0..1_000_000));
            let x = nat(rng.gen_range(0..1000));
            let (lo, hi) = two_levels(rng, 3000);
            let (a, b) = (run(&e, &x, Fuel(lo), None), run(&e, &x, Fuel(hi), None));
            (a.is_none() || a == b, format!("φ_{e}({x}) at {lo}: {a:?}, at {hi}: {b:?}"))
        }
        "insep membership" => {
            let x = rng.gen_range(0..2000);
            let (lo, hi) = two_levels(rng, 3000);
            let (a, b) = (membership(x, Fuel(lo)), membership(x, Fuel(hi)));
            (a.is_none() || a == b, format!("membership of {x} at {lo}: {a:?}, at {hi}: {b:?}"))
        }
        "k1 term evaluation" => {
            let t = random_k1_term(rng, k1, 3);
            let (lo, hi) = two_levels(rng, 5000);
            let a = eval_term(k1, &t, lo).expect("closed");
            let b = eval_term(k1, &t, hi).expect("closed");
            (outcome_ok(&a, &b), format!("{t} at {lo}: {a:?}, at {hi}: {b:?}"))
        }
        "k1 kleene equality" => {
            let t = random_k1_term(rng, k1, 2);
            let u = if rng.gen_bool(0.3) { t.clone() } else { random_k1_term(rng, k1, 2) };
            let (lo, hi) = two_levels(rng, 5000);
            let a = kleene_eq(k1, &t, &u, lo).expect("closed");
            let b = kleene_eq(k1, &t, &u, hi).expect("closed");
            (a.may_become(b), format!("{t} ≃ {u} at {lo}: {a}, at {hi}: {b}"))
        }
        "graph enumeration" => {
            let x = random_set(rng, 2);
            let (lo, hi) = two_levels(rng, 120);
            let bound = nat(200);
            let (a, b) = (enum_below(&x, lo, &bound), enum_below(&x, hi, &bound));
            (a.is_subset(&b), format!("{x} below 200 at {lo} not within {hi}"))
        }
        "graph equality" => {
            let x = random_set(rng, 2);
            let y = if rng.gen_bool(0.3) { x.clone() } else { random_set(rng, 2) };
            let (lo, hi) = two_levels(rng, 120);
            let (a, b) = (eq_upto(&x, &y, lo), eq_upto(&x, &y, hi));
            (a.may_become(b), format!("{x} = {y} at {lo}: {a}, at {hi}: {b}"))
        }
        "graph embedding" => {
            let n = nat(rng.gen_range(0..60));
            let (lo, hi) = two_levels(rng, 150);
            let bound = nat(300);
            let (a, b) = (embed_below(&n, lo, Some(&bound)), embed_below(&n, hi, Some(&bound)));
            (a.is_subset(&b), format!("embedding of {n} at {lo} not within {hi}"))
        }
        "presentations" => match rng.gen_range(0..3) {
            0 => {
                let (n, m) = (nat(rng.gen_range(0..12)), nat(rng.gen_range(0..12)));
                let (lo, hi) = two_levels(rng, 60);
                let pc = ce_to_pc(K1Ce);
                let (a, b) = (pc.psi(&n, &m, lo), pc.psi(&n, &m, hi));
                (a.is_none() || a == b, format!("K1 ce as pc {n}·{m} at {lo}: {a:?}, at {hi}: {b:?}"))
            }
            1 => {
                let (n, m) = (nat(rng.gen_range(0..30)), nat(rng.gen_range(0..30)));
                let (lo, hi) = two_levels(rng, 40);
                let p = fixtures::SlowDivision;
                let pc = ce_to_pc(p);
                let (a, b) = (pc.psi(&n, &m, lo), pc.psi(&n, &m, hi));
                (a.is_none() || a == b, format!("division {n}·{m} at {lo}: {a:?}, at {hi}: {b:?}"))
            }
            _ => {
                let c = fixtures::TruncatedK1::new(rng.gen_range(50..300));
                let (lo, hi) = two_levels(rng, 400);
                match refute_completion(&c, lo) {
                    Ok(RefuteOutcome::Witness(w)) => {
                        let still = verify(&c, &w, hi) == Ok(true);
                        (still, format!("witness {} found at {lo} fails at {hi}", w.x))
                    }
                    other => (true, format!("{other:?}")),
                }
            }
        },
        "cmpl" => {
            if rng.gen_bool(0.5) {
                let (flo, fhi) = two_levels(rng, 300);
                let (blo, bhi) = two_levels(rng, 5);
                let a = certified_triples(flo, blo);
                let b = certified_triples(fhi, bhi);
                (a.iter().all(|t| b.contains(t)), format!("triples at ({flo}, {blo}) not within ({fhi}, {bhi})"))
            } else {
                let len = rng.gen_range(0..16);
                let sigma: SepNode = (0..len).map(|_| rng.gen_bool(0.5)).collect::<Vec<_>>().into();
                let (lo, hi) = two_levels(rng, 200);
                let later = sep_viable(&sigma, &insep_left, &insep_right, hi);
                let earlier = sep_viable(&sigma, &insep_left, &insep_right, lo);
                (!later || earlier, format!("{sigma} viable at {hi} but not at {lo}"))
            }
        }
        _ => unreachable!("unknown probe area"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_batch_is_clean_and_reproducible() {
        let r = run_probes(7, 90);
        assert!(r.ok(), "{:?}", r.violations);
        assert_eq!(r.total(), 90);
        assert_eq!(r.areas.len(), AREAS.len());
        assert_eq!(run_probes(7, 90), r);
    }
}
