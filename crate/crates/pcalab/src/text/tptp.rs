//! Reader for the sentences written by `cmpl::render`: `fof` lines in TPTP
//! syntax, and `% group N: …` comment lines that set the group of the
//! sentences after them. Other comments are ignored. A sentence before
//! any group line takes its group from its name prefix (`pa_`, `f_`,
//! `app_`, `comb_`).

use pcalab_core::cmpl::{Formula, Group, Sentence, Term};

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Lower(String),
    Upper(String),
    Punct(&'static str),
    GroupMark(u8),
}

const PUNCT: [&str; 13] = ["=>", "(", ")", "[", "]", ",", ".", ":", "!", "?", "~", "&", "|"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim_start();
        if let Some(comment) = trimmed.strip_prefix('%') {
            if let Some(rest) = comment.trim_start().strip_prefix("group ") {
                let n: String = rest.chars().take_while(char::is_ascii_digit).collect();
                let n = n.parse().map_err(|_| ParseError::line(line_no, "bad group number"))?;
                out.push((line_no, Tok::GroupMark(n)));
            }
            continue;
        }
        let mut rest = line;
        loop {
            rest = rest.trim_start();
            let Some(c) = rest.chars().next() else { break };
            if c == '=' && !rest.starts_with("=>") {
                out.push((line_no, Tok::Punct("=")));
                rest = &rest[1..];
            } else if let Some(p) = PUNCT.iter().find(|p| rest.starts_with(**p)) {
                out.push((line_no, Tok::Punct(p)));
                rest = &rest[p.len()..];
            } else if c.is_ascii_alphanumeric() || c == '_' {
                let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
                let word = rest[..len].to_string();
                out.push((line_no, if c.is_ascii_uppercase() { Tok::Upper(word) } else { Tok::Lower(word) }));
                rest = &rest[len..];
            } else {
                return Err(ParseError::line(line_no, format!("unexpected character `{c}`")));
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn line(&self) -> usize {
        self.toks.get(self.pos).or(self.toks.last()).map_or(0, |t| t.0)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::line(self.line(), msg)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn punct(&mut self, p: &str) -> Result<(), ParseError> {
        match self.next() {
            Some(Tok::Punct(q)) if q == p => Ok(()),
            other => Err(self.err(format!("expected `{p}`, found {}", describe(other.as_ref())))),
        }
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn lower(&mut self) -> Result<String, ParseError> {
        match self.next() {
            Some(Tok::Lower(w)) => Ok(w),
            other => Err(self.err(format!("expected a name, found {}", describe(other.as_ref())))),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let first = self.unitary()?;
        if self.is_punct("=>") {
            self.pos += 1;
            let rhs = self.unitary()?;
            return Ok(Formula::implies(first, rhs));
        }
        for (op, mk) in [("&", Formula::and as fn(_, _) -> _), ("|", Formula::or)] {
            if self.is_punct(op) {
                let mut acc = first;
                while self.is_punct(op) {
                    self.pos += 1;
                    acc = mk(acc, self.unitary()?);
                }
                return Ok(acc);
            }
        }
        Ok(first)
    }

    fn unitary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Punct("(")) => {
                self.pos += 1;
                let f = self.formula()?;
                self.punct(")")?;
                Ok(f)
            }
            Some(Tok::Punct("~")) => {
                self.pos += 1;
                Ok(Formula::not(self.unitary()?))
            }
            Some(Tok::Punct(q @ ("!" | "?"))) => {
                let universal = *q == "!";
                self.pos += 1;
                self.punct("[")?;
                let mut vars = Vec::new();
                loop {
                    match self.next() {
                        Some(Tok::Upper(x)) => vars.push(x),
                        other => return Err(self.err(format!("expected a variable, found {}", describe(other.as_ref())))),
                    }
                    if self.is_punct(",") {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.punct("]")?;
                self.punct(":")?;
                let body = self.unitary()?;
                Ok(vars.iter().rev().fold(body, |p, x| {
                    if universal {
                        Formula::forall(x, p)
                    } else {
                        Formula::exists(x, p)
                    }
                }))
            }
            Some(Tok::Lower(w)) if w == "n" || w == "a" => {
                let sort = if w == "n" { Formula::N } else { Formula::A };
                self.pos += 1;
                self.punct("(")?;
                let t = self.term()?;
                self.punct(")")?;
                Ok(sort(t))
            }
            _ => {
                let l = self.term()?;
                self.punct("=")?;
                Ok(Formula::eq(l, self.term()?))
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match self.next() {
            Some(Tok::Upper(x)) => Ok(Term::Var(x)),
            Some(Tok::Lower(w)) => {
                let arity = match w.as_str() {
                    "zero" => return Ok(Term::Zero),
                    "s" | "f" => 1,
                    "plus" | "times" | "app" => 2,
                    _ => return Err(self.err(format!("unknown function symbol `{w}`"))),
                };
                self.punct("(")?;
                let a = self.term()?;
                if arity == 1 {
                    self.punct(")")?;
                    return Ok(if w == "s" { Term::succ(a) } else { Term::f(a) });
                }
                self.punct(",")?;
                let b = self.term()?;
                self.punct(")")?;
                Ok(match w.as_str() {
                    "plus" => Term::plus(a, b),
                    "times" => Term::times(a, b),
                    _ => Term::app(a, b),
                })
            }
            other => Err(self.err(format!("expected a term, found {}", describe(other.as_ref())))),
        }
    }
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Lower(w) | Tok::Upper(w)) => format!("`{w}`"),
        Some(Tok::Punct(p)) => format!("`{p}`"),
        Some(Tok::GroupMark(_)) => "a group comment".into(),
    }
}

fn group_of_number(n: u8) -> Option<Group> {
    Group::ALL.into_iter().find(|g| g.number() == n)
}

fn group_of_name(name: &str) -> Option<Group> {
    [("pa_", Group::Arithmetic), ("f_", Group::Embedding), ("app_", Group::Application), ("comb_", Group::Combinators)]
        .into_iter()
        .find(|(p, _)| name.starts_with(p))
        .map(|(_, g)| g)
}

pub fn parse_sentences(text: &str) -> Result<Vec<Sentence>, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let mut group = None;
    let mut out = Vec::new();
    while let Some(t) = p.peek() {
        if let Tok::GroupMark(n) = t {
            group = Some(group_of_number(*n).ok_or_else(|| p.err(format!("no group {n}")))?);
            p.pos += 1;
            continue;
        }
        let kw = p.lower()?;
        if kw != "fof" {
            return Err(p.err(format!("expected `fof`, found `{kw}`")));
        }
        p.punct("(")?;
        let name = p.lower()?;
        p.punct(",")?;
        let role = p.lower()?;
        if role != "axiom" {
            return Err(p.err(format!("unsupported role `{role}`")));
        }
        p.punct(",")?;
        let formula = p.formula()?;
        p.punct(")")?;
        p.punct(".")?;
        let group = group
            .or_else(|| group_of_name(&name))
            .ok_or_else(|| p.err(format!("cannot tell the group of `{name}`")))?;
        out.push(Sentence { name, group, formula });
    }
    Ok(out)
}

/// A single formula in the same syntax.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let f = p.formula()?;
    if p.pos < p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcalab_core::cmpl::{emit_cmpl, render};

    #[test]
    fn emitted_text_parses_back() {
        let ss = emit_cmpl(400, 6);
        let text = render(&ss);
        let back = parse_sentences(&text).unwrap();
        assert_eq!(back, ss);
        assert_eq!(render(&back), text);
    }

    #[test]
    fn loose_syntax() {
        let f = parse_formula("! [X,Y] : (n(X) & n(Y) & a(f(X)))").unwrap();
        assert_eq!(f.to_string(), "! [X] : (! [Y] : (((n(X) & n(Y)) & a(f(X)))))");
        // mixing connectives needs parentheses, as in TPTP
        assert!(parse_formula("n(X) & n(Y) | X = Y").is_err());
    }

    #[test]
    fn group_from_name_without_header() {
        let ss = parse_sentences("fof(app_1_2_3, axiom, app(f(s(zero)),f(s(s(zero)))) = f(s(s(s(zero))))).").unwrap();
        assert_eq!(ss[0].group, Group::Application);
    }

    #[test]
    fn rejects() {
        for bad in [
            "fof(x, axiom, zero = zero).",
            "fof(pa_x, conjecture, zero = zero).",
            "fof(pa_x, axiom, zero = ).",
            "fof(pa_x, axiom, foo(zero) = zero).",
            "fof(pa_x, axiom, zero = zero)",
            "% group 9: nothing\nfof(pa_x, axiom, zero = zero).",
        ] {
            assert!(parse_sentences(bad).is_err(), "{bad}");
        }
    }
}
