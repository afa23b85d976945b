use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::substrate::{insep_pair, Fuel};

/// A fuel-indexed enumeration of a set of naturals. Expected to be
/// monotone in the fuel.
pub trait Enumerator {
    fn at(&self, fuel: u64) -> BTreeSet<u64>;
}

impl<F: Fn(u64) -> BTreeSet<u64>> Enumerator for F {
    fn at(&self, fuel: u64) -> BTreeSet<u64> {
        self(fuel)
    }
}

/// `{x < s | φ_x(x) = 0 within s steps}`.
pub fn insep_left(fuel: u64) -> BTreeSet<u64> {
    insep_pair(Fuel(fuel)).0
}

/// `{x < s | φ_x(x) = 1 within s steps}`.
pub fn insep_right(fuel: u64) -> BTreeSet<u64> {
    insep_pair(Fuel(fuel)).1
}

/// A node of the separator tree, written as a string of `0`s and `1`s.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SepNode {
    pub sigma: Vec<bool>,
}

impl SepNode {
    pub fn parse(s: &str) -> Option<SepNode> {
        let sigma = s
            .chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<bool>>>()?;
        Some(SepNode { sigma })
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

impl From<Vec<bool>> for SepNode {
    fn from(sigma: Vec<bool>) -> Self {
        SepNode { sigma }
    }
}

impl fmt::Display for SepNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.sigma {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

fn consistent(sigma: &[bool], left: &BTreeSet<u64>, right: &BTreeSet<u64>) -> bool {
    let n = sigma.len() as u64;
    left.range(..n).all(|&i| sigma[i as usize]) && right.range(..n).all(|&i| !sigma[i as usize])
}

/// Whether `σ` puts every element of `left(fuel)` below `|σ|` on 1 and
/// every element of `right(fuel)` on 0.
pub fn sep_viable<L: Enumerator, R: Enumerator>(sigma: &SepNode, left: &L, right: &R, fuel: u64) -> bool {
    consistent(&sigma.sigma, &left.at(fuel), &right.at(fuel))
}

/// The lexicographically least viable node of length `depth`, found by
/// depth-first search with 0 before 1. `None` only if the two enumerated
/// sets meet below `depth`.
pub fn leftmost_path<L: Enumerator, R: Enumerator>(left: &L, right: &R, depth: usize, fuel: u64) -> Option<SepNode> {
    let (l, r) = (left.at(fuel), right.at(fuel));
    let mut sigma = Vec::with_capacity(depth);
    // choice stack: for each position, whether 1 has been tried
    let mut tried_one: Vec<bool> = Vec::with_capacity(depth);
    loop {
        if sigma.len() == depth {
            return Some(sigma.into());
        }
        sigma.push(false);
        tried_one.push(false);
        while !consistent(&sigma, &l, &r) {
            // advance the deepest position that still has 1 to try
            while tried_one.last() == Some(&true) {
                sigma.pop();
                tried_one.pop();
            }
            let last = sigma.len().checked_sub(1)?;
            sigma[last] = true;
            tried_one[last] = true;
        }
    }
}
