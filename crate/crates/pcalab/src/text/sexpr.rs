//! A minimal S-expression reader: atoms are runs of characters other
//! than whitespace and parentheses.

use super::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

impl Sexp {
    pub fn atom(&self) -> Option<&str> {
        match self {
            Sexp::Atom(a) => Some(a),
            Sexp::List(_) => None,
        }
    }
}

/// Reads exactly one expression; anything but whitespace after it is an
/// error.
pub fn read(text: &str) -> Result<Sexp, ParseError> {
    let mut r = Reader { text, pos: 0 };
    let e = r.expr()?;
    r.skip_ws();
    if r.pos < text.len() {
        return Err(r.error("trailing input"));
    }
    Ok(e)
}

struct Reader<'a> {
    text: &'a str,
    pos: usize,
}

impl Reader<'_> {
    fn error(&self, msg: &str) -> ParseError {
        ParseError::at(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn expr(&mut self) -> Result<Sexp, ParseError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        match rest.chars().next() {
            None => Err(self.error("unexpected end of input")),
            Some(')') => Err(self.error("unexpected `)`")),
            Some('(') => {
                self.pos += 1;
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.text[self.pos..].chars().next() {
                        None => return Err(self.error("unclosed `(`")),
                        Some(')') => {
                            self.pos += 1;
                            return Ok(Sexp::List(items));
                        }
                        Some(_) => items.push(self.expr()?),
                    }
                }
            }
            Some(_) => {
                let len = rest
                    .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
                    .unwrap_or(rest.len());
                self.pos += len;
                Ok(Sexp::Atom(rest[..len].to_string()))
            }
        }
    }
}
