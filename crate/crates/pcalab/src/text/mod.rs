//! Text formats.
//!
//! * programs: see [`parse_expr`];
//! * applicative terms: [`parse_term`] for `(app t u)` / `(const c)` /
//!   `(var x)`, [`parse_juxtaposed`] for the printed form `a b (c d)`;
//! * graph-model set descriptions: [`parse_set`];
//! * completion-theory sentences: [`parse_sentences`];
//! * refuter candidates: [`parse_candidate`].

mod candidate;
mod expr;
mod sexpr;
mod set;
mod term;
mod tptp;

use std::fmt;

pub use candidate::{parse_candidate, render_candidate};
pub use expr::parse_expr;
pub use sexpr::{read as read_sexp, Sexp};
pub use set::parse_set;
pub use term::{parse_juxtaposed, parse_nat_term, parse_set_term, parse_term};
pub use tptp::{parse_formula, parse_sentences};

use pcalab_core::Nat;

/// Where parsing failed: a byte offset or a line number, and why.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub location: Location,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Offset(usize),
    Line(usize),
    Unknown,
}

impl ParseError {
    pub fn at(offset: usize, message: impl Into<String>) -> Self {
        ParseError { location: Location::Offset(offset), message: message.into() }
    }

    pub fn line(line: usize, message: impl Into<String>) -> Self {
        ParseError { location: Location::Line(line), message: message.into() }
    }

    pub fn new(message: impl Into<String>) -> Self {
        ParseError { location: Location::Unknown, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Location::Offset(o) => write!(f, "at offset {o}: {}", self.message),
            Location::Line(l) => write!(f, "line {l}: {}", self.message),
            Location::Unknown => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// A decimal natural of any size.
pub fn parse_nat(s: &str) -> Result<Nat, ParseError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(format!("expected a natural number, found `{s}`")));
    }
    s.parse().map_err(|_| ParseError::new(format!("bad number `{s}`")))
}

fn nat_atom(e: &Sexp) -> Result<Nat, ParseError> {
    match e {
        Sexp::Atom(a) => parse_nat(a),
        Sexp::List(_) => Err(ParseError::new("expected a number, found a list")),
    }
}

/// Splits `(head args…)`.
fn form(e: &Sexp) -> Option<(&str, &[Sexp])> {
    match e {
        Sexp::List(items) => {
            let (h, rest) = items.split_first()?;
            Some((h.atom()?, rest))
        }
        Sexp::Atom(_) => None,
    }
}

fn arity(head: &str, args: &[Sexp], n: usize) -> Result<(), ParseError> {
    if args.len() == n {
        Ok(())
    } else {
        Err(ParseError::new(format!("`{head}` takes {n} argument(s), found {}", args.len())))
    }
}
