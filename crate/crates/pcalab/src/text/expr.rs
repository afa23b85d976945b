use pcalab_core::substrate::Expr;

use super::{arity, form, nat_atom, read_sexp, ParseError, Sexp};

/// Parses a program in the form printed by `Expr`'s `Display`:
///
/// ```text
/// e ::= (lit N) | in | (succ e) | (pred e) | (ifz e e e) | (pair e e)
///     | (fst e) | (snd e) | (app e e) | diverge
/// ```
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    expr(&read_sexp(text)?)
}

fn expr(e: &Sexp) -> Result<Expr, ParseError> {
    match e {
        Sexp::Atom(a) => match a.as_str() {
            "in" => Ok(Expr::In),
            "diverge" => Ok(Expr::Diverge),
            _ => Err(ParseError::new(format!("unknown program atom `{a}`"))),
        },
        Sexp::List(_) => {
            let (head, args) = form(e).ok_or_else(|| ParseError::new("empty or headless list"))?;
            let one = |f: fn(Expr) -> Expr| -> Result<Expr, ParseError> {
                arity(head, args, 1)?;
                Ok(f(expr(&args[0])?))
            };
            let two = |f: fn(Expr, Expr) -> Expr| -> Result<Expr, ParseError> {
                arity(head, args, 2)?;
                Ok(f(expr(&args[0])?, expr(&args[1])?))
            };
            match head {
                "lit" => {
                    arity(head, args, 1)?;
                    Ok(Expr::Lit(nat_atom(&args[0])?))
                }
                "succ" => one(Expr::succ),
                "pred" => one(Expr::pred),
                "fst" => one(Expr::fst),
                "snd" => one(Expr::snd),
                "pair" => two(Expr::pair),
                "app" => two(Expr::apply),
                "ifz" => {
                    arity(head, args, 3)?;
                    Ok(Expr::ifz(expr(&args[0])?, expr(&args[1])?, expr(&args[2])?))
                }
                _ => Err(ParseError::new(format!("unknown program form `{head}`"))),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example() {
        let e = parse_expr("(ifz in (lit 1) (app (lit 12) in))").unwrap();
        assert_eq!(e, Expr::ifz(Expr::In, Expr::lit(1u64), Expr::apply(Expr::lit(12u64), Expr::In)));
        assert_eq!(e.to_string(), "(ifz in (lit 1) (app (lit 12) in))");
    }

    #[test]
    fn rejects() {
        for bad in ["(lit)", "(lit x)", "(succ in in)", "(foo in)", "out", "()"] {
            assert!(parse_expr(bad).is_err(), "{bad}");
        }
    }
}
