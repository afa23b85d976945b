use core::fmt;

use super::{eval_term, kleene_eq, Outcome, Pca, Term, Verdict};

/// Counts of verdicts for one law.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub proven: usize,
    pub refuted: usize,
    pub unknown: usize,
}

impl Tally {
    pub fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Proven => self.proven += 1,
            Verdict::Refuted => self.refuted += 1,
            Verdict::Unknown { .. } => self.unknown += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.proven + self.refuted + self.unknown
    }
}

/// Verdicts for `k·a↓`, `k·a·b = a`, `s·a·b↓` and `s·a·b·c ≃ a·c·(b·c)`
/// over a sample of triples.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FefermanReport {
    pub k_defined: Tally,
    pub k_law: Tally,
    pub s_defined: Tally,
    pub s_law: Tally,
}

impl FefermanReport {
    pub fn refuted(&self) -> usize {
        self.k_defined.refuted + self.k_law.refuted + self.s_defined.refuted + self.s_law.refuted
    }

    pub fn laws(&self) -> [(&'static str, Tally); 4] {
        [
            ("k a defined", self.k_defined),
            ("k a b = a", self.k_law),
            ("s a b defined", self.s_defined),
            ("s a b c = a c (b c)", self.s_law),
        ]
    }
}

impl fmt::Display for FefermanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, t) in self.laws() {
            writeln!(
                f,
                "{name:<22} proven {:>6}  refuted {:>6}  unknown {:>6}",
                t.proven, t.refuted, t.unknown
            )?;
        }
        Ok(())
    }
}

fn defined<P: Pca>(pca: &P, t: &Term<P::Elem>, budget: u64) -> Verdict {
    match eval_term(pca, t, budget).expect("closed") {
        Outcome::Value(_) => Verdict::Proven,
        Outcome::DivergedSoFar { spent } => Verdict::Unknown { spent },
    }
}

/// Checks the Feferman axioms for candidate combinators `k`, `s` on each
/// sampled triple `(a, b, c)`.
pub fn check_feferman<P, I>(pca: &P, k: &P::Elem, s: &P::Elem, samples: I, budget: u64) -> FefermanReport
where
    P: Pca,
    I: IntoIterator<Item = (P::Elem, P::Elem, P::Elem)>,
{
    let mut report = FefermanReport::default();
    let c = |e: &P::Elem| Term::Const(e.clone());
    for (a, b, x) in samples {
        let ka = Term::app(c(k), c(&a));
        report.k_defined.record(defined(pca, &ka, budget));

        let kab = Term::app(ka, c(&b));
        let law = kleene_eq(pca, &kab, &c(&a), budget).expect("closed");
        report.k_law.record(law);

        let sab = Term::apps(c(s), [c(&a), c(&b)]);
        report.s_defined.record(defined(pca, &sab, budget));

        let lhs = Term::app(sab, c(&x));
        let rhs = Term::app(Term::app(c(&a), c(&x)), Term::app(c(&b), c(&x)));
        report.s_law.record(kleene_eq(pca, &lhs, &rhs, budget).expect("closed"));
    }
    report
}
