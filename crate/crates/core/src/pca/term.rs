use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use core::fmt;

/// Applicative terms over a pca: constants, variables and application.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term<E> {
    Const(E),
    Var(String),
    App(Box<Term<E>>, Box<Term<E>>),
}

impl<E> Term<E> {
    pub fn var(name: &str) -> Self {
        Term::Var(name.to_string())
    }

    pub fn app(f: Term<E>, a: Term<E>) -> Self {
        Term::App(Box::new(f), Box::new(a))
    }

    /// Left-associated application `head a₁ ⋯ aₙ`.
    pub fn apps(head: Term<E>, args: impl IntoIterator<Item = Term<E>>) -> Self {
        args.into_iter().fold(head, Term::app)
    }

    pub fn free_vars(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Term::Const(_) => {}
            Term::Var(x) => {
                out.insert(x.as_str());
            }
            Term::App(f, a) => {
                f.collect_vars(out);
                a.collect_vars(out);
            }
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            Term::Const(_) => false,
            Term::Var(y) => y == x,
            Term::App(f, a) => f.has_free(x) || a.has_free(x),
        }
    }

    pub fn is_closed(&self) -> bool {
        self.first_var().is_none()
    }

    pub(crate) fn first_var(&self) -> Option<&str> {
        match self {
            Term::Const(_) => None,
            Term::Var(x) => Some(x),
            Term::App(f, a) => f.first_var().or_else(|| a.first_var()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Const(_) | Term::Var(_) => 1,
            Term::App(f, a) => 1 + f.size() + a.size(),
        }
    }

    /// Head and arguments of the application spine.
    pub fn spine(&self) -> (&Term<E>, alloc::vec::Vec<&Term<E>>) {
        let mut args = alloc::vec::Vec::new();
        let mut head = self;
        while let Term::App(f, a) = head {
            args.push(&**a);
            head = f;
        }
        args.reverse();
        (head, args)
    }

    pub fn map_consts<F, G: FnMut(&E) -> F>(&self, f: &mut G) -> Term<F> {
        match self {
            Term::Const(c) => Term::Const(f(c)),
            Term::Var(x) => Term::Var(x.clone()),
            Term::App(g, a) => Term::app(g.map_consts(f), a.map_consts(f)),
        }
    }
}

impl<E: Clone> Term<E> {
    /// Simultaneous substitution of closed terms for variables.
    pub fn subst(&self, x: &str, by: &Term<E>) -> Term<E> {
        match self {
            Term::Var(y) if y == x => by.clone(),
            Term::Const(_) | Term::Var(_) => self.clone(),
            Term::App(f, a) => Term::app(f.subst(x, by), a.subst(x, by)),
        }
    }
}

impl<E: fmt::Display> Term<E> {
    /// The `(app t u)` / `(const c)` / `(var x)` form.
    pub fn to_sexpr(&self) -> String {
        let mut s = String::new();
        self.write_sexpr(&mut s).expect("writing to a String");
        s
    }

    fn write_sexpr(&self, out: &mut impl fmt::Write) -> fmt::Result {
        match self {
            Term::Const(c) => write!(out, "(const {c})"),
            Term::Var(x) => write!(out, "(var {x})"),
            Term::App(f, a) => {
                out.write_str("(app ")?;
                f.write_sexpr(out)?;
                out.write_char(' ')?;
                a.write_sexpr(out)?;
                out.write_char(')')
            }
        }
    }
}

/// Juxtaposition, associating to the left: `a b c` is `(a b) c`.
///
/// Constants whose printed form is not a bare numeral are wrapped in
/// brackets, e.g. `[(finlit 1 2)] x`.
impl<E: fmt::Display> fmt::Display for Term<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Const(c) => {
                let text = c.to_string();
                if !text.is_empty() && text.bytes().all(|b| b.is_ascii_digit()) {
                    f.write_str(&text)
                } else {
                    write!(f, "[{text}]")
                }
            }
            Term::Var(x) => f.write_str(x),
            Term::App(g, a) => {
                write!(f, "{g} ")?;
                match **a {
                    Term::App(..) => write!(f, "({a})"),
                    _ => write!(f, "{a}"),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    #[test]
    fn printing_is_left_associative() {
        let t: Term<u64> = Term::apps(Term::Const(1), [Term::var("x"), Term::Const(3)]);
        assert_eq!(format!("{t}"), "1 x 3");
        let u: Term<u64> = Term::app(Term::Const(1), Term::app(Term::var("x"), Term::Const(3)));
        assert_eq!(format!("{u}"), "1 (x 3)");
        assert_eq!(u.to_sexpr(), "(app (const 1) (app (var x) (const 3)))");
    }

    #[test]
    fn spine_and_vars() {
        let t: Term<u64> = Term::apps(Term::var("f"), [Term::var("x"), Term::Const(3)]);
        let (h, args) = t.spine();
        assert_eq!(h, &Term::var("f"));
        assert_eq!(args.len(), 2);
        assert!(t.has_free("x") && !t.has_free("y"));
        assert_eq!(t.free_vars().into_iter().collect::<alloc::vec::Vec<_>>(), ["f", "x"]);
    }
}
