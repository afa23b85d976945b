use std::collections::BTreeSet;
use std::sync::Arc;

use pcalab_core::graph::{k_graph, s_graph, EnumSet, SetExpr};

use super::{arity, form, nat_atom, read_sexp, ParseError, Sexp};

/// Parses a set description:
///
/// ```text
/// set ::= (finlit n*) | (graph op) | (app set set) | (embed n) | (kgraph) | (sgraph)
/// op  ::= (var i) | (const set) | (union op op) | (app op op) | (graph op)
/// ```
///
/// A `(graph op)` may only mention `(var 0)` at its own level.
pub fn parse_set(text: &str) -> Result<EnumSet, ParseError> {
    set(&read_sexp(text)?)
}

pub(super) fn set(e: &Sexp) -> Result<EnumSet, ParseError> {
    let (head, args) = form(e).ok_or_else(|| ParseError::new("a set description is a parenthesised form"))?;
    match head {
        "finlit" => Ok(EnumSet::FinLit(args.iter().map(nat_atom).collect::<Result<BTreeSet<_>, _>>()?)),
        "kgraph" => {
            arity(head, args, 0)?;
            Ok(k_graph())
        }
        "sgraph" => {
            arity(head, args, 0)?;
            Ok(s_graph())
        }
        "embed" => {
            arity(head, args, 1)?;
            Ok(EnumSet::EmbedNode(nat_atom(&args[0])?))
        }
        "app" => {
            arity(head, args, 2)?;
            Ok(EnumSet::app(set(&args[0])?, set(&args[1])?))
        }
        "graph" => {
            arity(head, args, 1)?;
            let body = op(&args[0])?;
            if body.needed_binders() > 1 {
                return Err(ParseError::new("operator refers to sets bound outside it"));
            }
            Ok(EnumSet::GraphOf(Arc::new(body)))
        }
        _ => Err(ParseError::new(format!("unknown set form `{head}`"))),
    }
}

fn op(e: &Sexp) -> Result<SetExpr, ParseError> {
    let (head, args) = form(e).ok_or_else(|| ParseError::new("an operator is a parenthesised form"))?;
    match head {
        "var" => {
            arity(head, args, 1)?;
            let i = args[0]
                .atom()
                .and_then(|a| a.parse::<usize>().ok())
                .ok_or_else(|| ParseError::new("`var` takes an index"))?;
            Ok(SetExpr::var(i))
        }
        "const" => {
            arity(head, args, 1)?;
            Ok(SetExpr::constant(set(&args[0])?))
        }
        "union" => {
            arity(head, args, 2)?;
            Ok(SetExpr::union(op(&args[0])?, op(&args[1])?))
        }
        "app" => {
            arity(head, args, 2)?;
            Ok(SetExpr::app(op(&args[0])?, op(&args[1])?))
        }
        "graph" => {
            arity(head, args, 1)?;
            Ok(SetExpr::graph(op(&args[0])?))
        }
        _ => Err(ParseError::new(format!("unknown operator form `{head}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(parse_set("(finlit 5 1 2 1)").unwrap(), EnumSet::fin([1, 2, 5]));
        assert_eq!(parse_set("(kgraph)").unwrap(), k_graph());
        assert_eq!(parse_set("(sgraph)").unwrap(), s_graph());
        let x = parse_set("(app (kgraph) (embed 7))").unwrap();
        assert_eq!(x.to_string(), "(app (kgraph) (embed 7))");
        let id = parse_set("(graph (var 0))").unwrap();
        assert_eq!(id.to_string(), "(graph (var 0))");
    }

    #[test]
    fn printed_forms_parse_back() {
        for x in [k_graph(), s_graph()] {
            if let EnumSet::GraphOf(body) = &x {
                let written = format!("(graph {body})");
                assert_eq!(parse_set(&written).unwrap(), x);
            }
        }
    }

    #[test]
    fn rejects() {
        for bad in ["(graph (var 1))", "(finlit a)", "(embed)", "(app (kgraph))", "kgraph", "(graph (foo))"] {
            assert!(parse_set(bad).is_err(), "{bad}");
        }
    }
}
