use super::expr::{decode, encode, Expr, SPECIALIZE_MIN};
use crate::coding::{nat, pow2, Nat};

/// `S¹₁(e, a)`: the code of `Apply(Lit e, MkPair(Lit a, In))`, i.e. of
/// `b ↦ φ_e(⟨a, b⟩)`.
pub fn smn(e: &Nat, a: &Nat) -> Nat {
    encode(&Expr::apply(Expr::Lit(e.clone()), Expr::pair(Expr::Lit(a.clone()), Expr::In)))
}

/// Code of `MkPair(Fst In, Snd In)`. For `e ≥ 10`, running it on `⟨e, a⟩`
/// yields `smn(e, a)`, because specialisation codes are plain pairs.
pub fn specializer_code() -> Nat {
    encode(&specializer_expr())
}

fn specializer_expr() -> Expr {
    Expr::pair(Expr::fst(Expr::In), Expr::snd(Expr::In))
}

/// In-language `smn(x, x)` where `x` is the first component of the input.
/// Valid because the only `x` ever passed is a code `≥ 10`.
fn diag_of_first() -> Expr {
    Expr::pair(Expr::fst(Expr::In), Expr::fst(Expr::In))
}

fn close_diagonal(v: &Expr) -> Nat {
    let vc = encode(v);
    assert!(vc >= nat(SPECIALIZE_MIN), "diagonal program code too small");
    smn(&vc, &vc)
}

/// Recursion theorem for a transform given as a program: returns `n` with
/// `φ_n ≃ φ_{φ_h(n)}`.
///
/// `h` must be total. The construction is Kleene's: `n = S¹₁(v, v)` where
/// `φ_v(⟨x, y⟩) = φ_{φ_h(S¹₁(x, x))}(y)`. Here `v = S¹₁(H, h)` for a fixed
/// helper `H`, so `h` enters the code only once, as a pair component.
pub fn fix_code(h: &Nat) -> Nat {
    let v = smn(&encode(&fix_helper()), h);
    assert!(v >= nat(SPECIALIZE_MIN));
    smn(&v, &v)
}

/// `φ_H(⟨h, ⟨x, y⟩⟩) = φ_{φ_h(⟨x, x⟩)}(y)`.
fn fix_helper() -> Expr {
    let h = Expr::fst(Expr::In);
    let x = Expr::fst(Expr::snd(Expr::In));
    let y = Expr::snd(Expr::snd(Expr::In));
    Expr::apply(Expr::apply(h, Expr::pair(x.clone(), x)), y)
}

/// Recursion theorem for a host-level transform.
///
/// The transform must be syntactic in its argument: `transform(n)` has to be
/// the code of a fixed program context in which `n` may occur as a literal
/// `Lit n`, or as the whole program `decode(n)` spliced in as a subtree.
/// Every program-building function of this crate has that shape. A
/// transform that computes with `n` arithmetically is not accepted and
/// makes this function panic.
///
/// Returns `n` with `φ_n ≃ φ_{transform(n)}`.
pub fn fix(transform: impl Fn(&Nat) -> Nat) -> Nat {
    let probe = |r: Nat| {
        let code = encode(&Expr::Lit(r.clone()));
        let body = decode(&transform(&code));
        (code, r, body)
    };
    let (s1, r1, t1) = probe(pow2(521) + 17u32);
    let (s2, r2, t2) = probe(pow2(607) + 23u32);

    let same_shape = plug(&t1, &s1, &r1, &Expr::Lit(s2.clone()), &Expr::Lit(r2.clone()), None);
    assert!(
        same_shape == t2,
        "fix: transform is not a program context over its argument"
    );

    let code_hole = diag_of_first();
    let prog_hole = Expr::apply(diag_of_first(), Expr::snd(Expr::In));
    let v = plug(&t1, &s1, &r1, &code_hole, &prog_hole, Some(&Expr::snd(Expr::In)));
    close_diagonal(&v)
}

/// Replaces `Lit(code)` by `code_hole`, the subtree `Lit(r)` (that is,
/// `decode(code)`) by `prog_hole`, and optionally `In` by `input`.
fn plug(
    t: &Expr,
    code: &Nat,
    r: &Nat,
    code_hole: &Expr,
    prog_hole: &Expr,
    input: Option<&Expr>,
) -> Expr {
    t.map_leaves(&mut |node| match node {
        Expr::Lit(n) if n == code => Some(code_hole.clone()),
        Expr::Lit(n) if n == r => Some(prog_hole.clone()),
        Expr::In => input.cloned(),
        _ => None,
    })
}

/// A program that diverges on every input: the fixed point of
/// `n ↦ encode(Apply(Lit n, In))`.
pub fn omega() -> Nat {
    fix(|n| encode(&Expr::apply(Expr::Lit(n.clone()), Expr::In)))
}
