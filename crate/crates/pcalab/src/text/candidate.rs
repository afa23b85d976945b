//! Candidate completions for the refuter, one directive per line:
//!
//! ```text
//! # comment
//! image zero|one|t|e <code>     the codes of f(0), f(1), f(t), f(e); all four required
//! apply <n> <m> <k>             n·m = k
//! default <k>                   value of every pair not listed
//! equality classes|never|always how codes are compared (default: classes)
//! eq <n> <m>                    n and m are equal codes (classes only)
//! ```
//!
//! Without `default`, a pair missing from the table makes the candidate
//! malformed when the refuter needs it.

use std::collections::BTreeMap;
use std::fmt::Write;

use pcalab_core::presentations::{Equality, Images, TableCandidate};
use pcalab_core::Nat;

use super::{parse_nat, ParseError};

pub fn parse_candidate(text: &str) -> Result<TableCandidate, ParseError> {
    let mut images: [Option<Nat>; 4] = Default::default();
    let mut table = BTreeMap::new();
    let mut default = None;
    let mut equality = None;
    let mut merges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let err = |m: String| ParseError::line(line_no, m);
        let nat = |w: &str| parse_nat(w).map_err(|e| err(e.message));
        let want = |n: usize| {
            if words.len() == n {
                Ok(())
            } else {
                Err(err(format!("`{}` takes {} argument(s)", words[0], n - 1)))
            }
        };
        match words[0] {
            "image" => {
                want(3)?;
                let slot = ["zero", "one", "t", "e"]
                    .iter()
                    .position(|s| *s == words[1])
                    .ok_or_else(|| err(format!("unknown image `{}`", words[1])))?;
                if images[slot].replace(nat(words[2])?).is_some() {
                    return Err(err(format!("image `{}` given twice", words[1])));
                }
            }
            "apply" => {
                want(4)?;
                let key = (nat(words[1])?, nat(words[2])?);
                let k = nat(words[3])?;
                if let Some(old) = table.insert(key, k.clone()) {
                    if old != k {
                        return Err(err(format!("`apply {} {}` given two values", words[1], words[2])));
                    }
                }
            }
            "default" => {
                want(2)?;
                if default.replace(nat(words[1])?).is_some() {
                    return Err(err("`default` given twice".into()));
                }
            }
            "equality" => {
                want(2)?;
                let e = match words[1] {
                    "classes" => Equality::Classes(BTreeMap::new()),
                    "never" => Equality::Never,
                    "always" => Equality::Always,
                    other => return Err(err(format!("unknown equality `{other}`"))),
                };
                if equality.replace(e).is_some() {
                    return Err(err("`equality` given twice".into()));
                }
            }
            "eq" => {
                want(3)?;
                merges.push((line_no, nat(words[1])?, nat(words[2])?));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    let [zero, one, t, e] = images;
    let missing = |name: &str| ParseError::new(format!("missing `image {name}`"));
    let images = Images {
        zero: zero.ok_or_else(|| missing("zero"))?,
        one: one.ok_or_else(|| missing("one"))?,
        t: t.ok_or_else(|| missing("t"))?,
        e: e.ok_or_else(|| missing("e"))?,
    };
    let mut c = TableCandidate::new(images);
    c.table = table;
    c.default = default;
    c.equality = equality.unwrap_or(Equality::Classes(BTreeMap::new()));
    for (line_no, a, b) in merges {
        if !matches!(c.equality, Equality::Classes(_)) {
            return Err(ParseError::line(line_no, "`eq` needs `equality classes`"));
        }
        c.declare_equal(&a, &b);
    }
    Ok(c)
}

/// Writes a candidate in the format [`parse_candidate`] reads.
pub fn render_candidate(c: &TableCandidate) -> String {
    let mut out = String::new();
    let i = &c.images;
    for (name, code) in [("zero", &i.zero), ("one", &i.one), ("t", &i.t), ("e", &i.e)] {
        let _ = writeln!(out, "image {name} {code}");
    }
    match &c.equality {
        Equality::Classes(classes) => {
            let _ = writeln!(out, "equality classes");
            for (a, b) in classes {
                let _ = writeln!(out, "eq {a} {b}");
            }
        }
        Equality::Never => out.push_str("equality never\n"),
        Equality::Always => out.push_str("equality always\n"),
    }
    if let Some(d) = &c.default {
        let _ = writeln!(out, "default {d}");
    }
    for ((n, m), k) in &c.table {
        let _ = writeln!(out, "apply {n} {m} {k}");
    }
    out
}
