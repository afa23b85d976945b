use alloc::collections::BTreeSet;

use super::value::{eval_set, materialize};
use super::{enum_below, EnumSet};
use crate::coding::Nat;
use crate::pca::Verdict;

/// Outcome of [`compare_upto`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub verdict: Verdict,
    /// Both enumerations at the budget agree on elements below it.
    pub consistent: bool,
}

/// The finite set an exact description denotes.
fn exact_value(x: &EnumSet) -> BTreeSet<Nat> {
    materialize(&eval_set(x, 1), 1, None)
}

/// Budgeted extensional equality.
///
/// `Proven` only for identical descriptions or exact descriptions (see
/// [`EnumSet::is_exact`]) with equal sets. `Refuted` only when one side
/// is exact and the other side's enumeration at `budget` already holds an
/// element outside it: an enumeration never loses elements, whereas a
/// missing element may still turn up. Everything else is `Unknown`,
/// together with whether the two enumerations agree below `budget`.
pub fn compare_upto(x: &EnumSet, y: &EnumSet, budget: u64) -> Comparison {
    let window = Nat::from(budget);
    if x == y {
        return Comparison { verdict: Verdict::Proven, consistent: true };
    }
    let wx = enum_below(x, budget, &window);
    let wy = enum_below(y, budget, &window);
    let consistent = wx == wy;
    let verdict = match (x.is_exact(), y.is_exact()) {
        (true, true) => Verdict::from_bool(exact_value(x) == exact_value(y)),
        (true, false) if !wy.is_subset(&exact_value(x)) => Verdict::Refuted,
        (false, true) if !wx.is_subset(&exact_value(y)) => Verdict::Refuted,
        _ => Verdict::Unknown { spent: budget },
    };
    Comparison { verdict, consistent }
}

pub fn eq_upto(x: &EnumSet, y: &EnumSet, budget: u64) -> Verdict {
    compare_upto(x, y, budget).verdict
}
