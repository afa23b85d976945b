use pcalab_core::graph::EnumSet;
use pcalab_core::pca::Term;
use pcalab_core::substrate::Num;

use super::{arity, form, nat_atom, parse_nat, read_sexp, set, ParseError, Sexp};

/// Parses `(app t u)`, `(const c)`, `(var x)`; constants are read by
/// `konst`.
pub fn parse_term<E>(text: &str, konst: &impl Fn(&Sexp) -> Result<E, ParseError>) -> Result<Term<E>, ParseError> {
    term(&read_sexp(text)?, konst)
}

fn term<E>(e: &Sexp, konst: &impl Fn(&Sexp) -> Result<E, ParseError>) -> Result<Term<E>, ParseError> {
    let (head, args) = form(e).ok_or_else(|| ParseError::new("a term is a parenthesised form"))?;
    match head {
        "app" => {
            arity(head, args, 2)?;
            Ok(Term::app(term(&args[0], konst)?, term(&args[1], konst)?))
        }
        "const" => {
            arity(head, args, 1)?;
            Ok(Term::Const(konst(&args[0])?))
        }
        "var" => {
            arity(head, args, 1)?;
            match &args[0] {
                Sexp::Atom(x) if is_var(x) => Ok(Term::var(x)),
                _ => Err(ParseError::new("`var` takes a name")),
            }
        }
        _ => Err(ParseError::new(format!("unknown term form `{head}`"))),
    }
}

fn is_var(x: &str) -> bool {
    x.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_') && x.chars().all(|c| c.is_alphanumeric() || c == '_')
}

/// Terms over `K₁`: constants are decimal codes.
pub fn parse_nat_term(text: &str) -> Result<Term<Num>, ParseError> {
    if is_sexpr_term(text) {
        parse_term(text, &|e: &Sexp| nat_atom(e).map(Num::from))
    } else {
        parse_juxtaposed(text, &|s: &str| parse_nat(s).map(Num::from))
    }
}

/// Terms over the graph model: constants are set descriptions.
pub fn parse_set_term(text: &str) -> Result<Term<EnumSet>, ParseError> {
    if is_sexpr_term(text) {
        parse_term(text, &set::set)
    } else {
        parse_juxtaposed(text, &set::parse_set)
    }
}

fn is_sexpr_term(text: &str) -> bool {
    let t = text.trim_start();
    ["(app ", "(const ", "(var "].iter().any(|p| t.starts_with(p))
}

/// Parses the printed form: juxtaposition associates to the left,
/// parentheses group, bare numerals and `[…]` are constants (read by
/// `konst`), other words are variables.
pub fn parse_juxtaposed<E>(text: &str, konst: &impl Fn(&str) -> Result<E, ParseError>) -> Result<Term<E>, ParseError> {
    let mut p = Juxt { text, pos: 0 };
    let t = p.seq(konst)?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(ParseError::at(p.pos, "unexpected `)`"));
    }
    t.ok_or_else(|| ParseError::at(0, "empty term"))
}

struct Juxt<'a> {
    text: &'a str,
    pos: usize,
}

impl Juxt<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// A maximal sequence of atoms, stopping before `)` or the end.
    fn seq<E>(&mut self, konst: &impl Fn(&str) -> Result<E, ParseError>) -> Result<Option<Term<E>>, ParseError> {
        let mut acc: Option<Term<E>> = None;
        loop {
            self.skip_ws();
            let rest = &self.text[self.pos..];
            let start = self.pos;
            let atom = match rest.chars().next() {
                None | Some(')') => return Ok(acc),
                Some('(') => {
                    self.pos += 1;
                    let inner = self.seq(konst)?.ok_or_else(|| ParseError::at(start, "empty parentheses"))?;
                    self.skip_ws();
                    if !self.text[self.pos..].starts_with(')') {
                        return Err(ParseError::at(start, "unclosed `(`"));
                    }
                    self.pos += 1;
                    inner
                }
                Some('[') => {
                    let end = rest.find(']').ok_or_else(|| ParseError::at(start, "unclosed `[`"))?;
                    self.pos += end + 1;
                    Term::Const(konst(&rest[1..end]).map_err(|e| ParseError::at(start, e.message))?)
                }
                Some(_) => {
                    let len = rest
                        .find(|c: char| c.is_whitespace() || "()[]".contains(c))
                        .unwrap_or(rest.len());
                    let word = &rest[..len];
                    self.pos += len;
                    if word.bytes().all(|b| b.is_ascii_digit()) {
                        Term::Const(konst(word).map_err(|e| ParseError::at(start, e.message))?)
                    } else if is_var(word) {
                        Term::var(word)
                    } else {
                        return Err(ParseError::at(start, format!("bad word `{word}`")));
                    }
                }
            };
            acc = Some(match acc {
                None => atom,
                Some(f) => Term::app(f, atom),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcalab_core::graph::k_graph;
    use proptest::prelude::*;

    fn c(n: u64) -> Term<Num> {
        Term::Const(Num::from(n))
    }

    #[test]
    fn left_association() {
        let t = parse_nat_term("a b c").unwrap();
        assert_eq!(t, Term::apps(Term::var("a"), [Term::var("b"), Term::var("c")]));
        let u = parse_nat_term("a (b 12) c").unwrap();
        assert_eq!(u, Term::apps(Term::var("a"), [Term::app(Term::var("b"), c(12)), Term::var("c")]));
        assert_eq!(u.to_string(), "a (b 12) c");
    }

    #[test]
    fn sexpr_form() {
        let t = parse_nat_term("(app (app (const 3) (var x)) (const 4))").unwrap();
        assert_eq!(t, Term::apps(c(3), [Term::var("x"), c(4)]));
        assert_eq!(parse_nat_term(&t.to_sexpr()).unwrap(), t);
    }

    #[test]
    fn set_constants() {
        let t = parse_set_term("[(kgraph)] x [(finlit 1 2)]").unwrap();
        assert_eq!(t, Term::apps(Term::Const(k_graph()), [Term::var("x"), Term::Const(EnumSet::fin([1, 2]))]));
        assert_eq!(parse_set_term(&t.to_string()).unwrap(), t);
        assert_eq!(parse_set_term(&t.to_sexpr()).unwrap(), t);
    }

    #[test]
    fn rejects() {
        for bad in ["", "()", "a (b", "a b)", "[1", "a-b", "(app (var x))"] {
            assert!(parse_nat_term(bad).is_err(), "{bad:?}");
        }
    }

    fn arb_term() -> impl Strategy<Value = Term<Num>> {
        let leaf = prop_oneof![
            (0u64..1_000_000).prop_map(|n| Term::Const(Num::from(n))),
            prop::sample::select(vec!["x", "y", "z", "k", "s1"]).prop_map(Term::var),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| (inner.clone(), inner).prop_map(|(f, a)| Term::app(f, a)))
    }

    proptest! {
        #[test]
        fn printing_round_trips(t in arb_term()) {
            prop_assert_eq!(parse_nat_term(&t.to_string()).unwrap(), t.clone());
            prop_assert_eq!(parse_nat_term(&t.to_sexpr()).unwrap(), t);
        }
    }
}
