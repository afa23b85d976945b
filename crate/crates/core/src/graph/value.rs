//! Evaluation of descriptions at a fixed fuel.
//!
//! Graphs are not materialised: a [`Value`] keeps them as closures (body
//! plus the finite sets bound so far) and only looks inside when asked for
//! a membership or when applied. The enumeration is the same as the one
//! obtained by expanding every graph at the fuel, which the tests check
//! against a direct implementation of the definitions.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use super::embed::{apply_embed, embed_below, embed_contains};
use super::{pair, unpair, EnumSet, SetExpr};
use crate::coding::{fset_code, fset_decode, Nat};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Value {
    fin: BTreeSet<Nat>,
    graphs: BTreeSet<Closure>,
    embeds: BTreeSet<Nat>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Closure {
    body: Arc<SetExpr>,
    /// Innermost binder last.
    env: Vec<Value>,
}

impl Value {
    fn finite(fin: BTreeSet<Nat>) -> Value {
        Value { fin, ..Value::default() }
    }

    fn absorb(&mut self, other: Value) {
        self.fin.extend(other.fin);
        self.graphs.extend(other.graphs);
        self.embeds.extend(other.embeds);
    }
}

pub(crate) fn eval_set(x: &EnumSet, fuel: u64) -> Value {
    if fuel == 0 {
        return Value::default();
    }
    match x {
        EnumSet::FinLit(xs) => Value::finite(xs.clone()),
        EnumSet::GraphOf(body) => closure(body, Vec::new()),
        EnumSet::AppNode(a, b) => apply(&eval_set(a, fuel), &eval_set(b, fuel), fuel),
        EnumSet::EmbedNode(n) => Value { embeds: [n.clone()].into(), ..Value::default() },
    }
}

fn closure(body: &Arc<SetExpr>, env: Vec<Value>) -> Value {
    let mut v = Value::default();
    v.graphs.insert(Closure { body: body.clone(), env });
    v
}

fn eval_expr(e: &SetExpr, env: &[Value], fuel: u64) -> Value {
    match e {
        SetExpr::Var(i) => match env.len().checked_sub(i + 1) {
            Some(j) => env[j].clone(),
            None => Value::default(),
        },
        SetExpr::Const(x) => eval_set(x, fuel),
        SetExpr::Union(a, b) => {
            let mut v = eval_expr(a, env, fuel);
            v.absorb(eval_expr(b, env, fuel));
            v
        }
        SetExpr::App(a, b) => apply(&eval_expr(a, env, fuel), &eval_expr(b, env, fuel), fuel),
        SetExpr::Graph(body) => closure(body, env.to_vec()),
    }
}

fn enter(c: &Closure, arg: Value, fuel: u64) -> Value {
    let mut env = c.env.clone();
    env.push(arg);
    eval_expr(&c.body, &env, fuel)
}

/// Codes `u < fuel` with `D_u ⊆ w`, together with `D_u`.
fn small_subsets(w: &Value, fuel: u64) -> Vec<(u64, BTreeSet<Nat>)> {
    // only x with 2^x < fuel can occur in such a D_u
    let width = 64 - fuel.saturating_sub(1).leading_zeros() as u64;
    let members: Vec<u64> = (0..width).filter(|&x| contains(w, &Nat::from(x), fuel)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << members.len()) {
        let d: Vec<u64> = (0..members.len()).filter(|i| mask >> i & 1 == 1).map(|i| members[i]).collect();
        let u = fset_code(&d).to_u64().unwrap_or(u64::MAX);
        if u < fuel {
            out.push((u, d.into_iter().map(Nat::from).collect()));
        }
    }
    out
}

fn subset_of(u: &Nat, w: &Value, fuel: u64) -> bool {
    fset_decode(u).iter().all(|&x| contains(w, &Nat::from(x), fuel))
}

pub(crate) fn apply(v: &Value, w: &Value, fuel: u64) -> Value {
    let mut out = Value::default();
    for p in &v.fin {
        if let Some((x, u)) = unpair(p) {
            if subset_of(&u, w, fuel) {
                out.fin.insert(x);
            }
        }
    }
    if !v.graphs.is_empty() {
        for (_, d) in small_subsets(w, fuel) {
            for c in &v.graphs {
                out.absorb(enter(c, Value::finite(d.clone()), fuel));
            }
        }
    }
    for n in &v.embeds {
        out.fin.extend(apply_embed(n, |y| contains(w, y, fuel), fuel));
    }
    out
}

pub(crate) fn contains(v: &Value, y: &Nat, fuel: u64) -> bool {
    if v.fin.contains(y) {
        return true;
    }
    if v.embeds.iter().any(|n| embed_contains(n, y, fuel)) {
        return true;
    }
    if v.graphs.is_empty() {
        return false;
    }
    let Some((x, u)) = unpair(y) else { return false };
    if u >= Nat::from(fuel) {
        return false;
    }
    let d: BTreeSet<Nat> = fset_decode(&u).into_iter().map(Nat::from).collect();
    v.graphs.iter().any(|c| contains(&enter(c, Value::finite(d.clone()), fuel), &x, fuel))
}

/// Elements of `v` below `bound` (all of them if `bound` is `None`).
pub(crate) fn materialize(v: &Value, fuel: u64, bound: Option<&Nat>) -> BTreeSet<Nat> {
    let below = |x: &Nat| bound.is_none_or(|b| x < b);
    let mut out: BTreeSet<Nat> = v.fin.iter().filter(|x| below(x)).cloned().collect();
    for n in &v.embeds {
        out.extend(embed_below(n, fuel, bound));
    }
    for c in &v.graphs {
        for u in 0..fuel {
            let u = Nat::from(u);
            if !below(&pair(&Nat::zero(), &u)) {
                break;
            }
            // ⟨x, u⟩ ≥ (x + u)², so x < √bound suffices
            let inner = bound.map(|b| b.sqrt() + 1u32);
            let d = Value::finite(fset_decode(&u).into_iter().map(Nat::from).collect());
            for x in materialize(&enter(c, d, fuel), fuel, inner.as_ref()) {
                let p = pair(&x, &u);
                if below(&p) {
                    out.insert(p);
                }
            }
        }
    }
    out
}

/// The finite set enumerated by `x` at `fuel`.
///
/// Nested graphs make this large quickly (`s_graph` has about `fuel³`
/// elements); [`enum_below`] is the practical variant.
pub fn enum_at(x: &EnumSet, fuel: u64) -> BTreeSet<Nat> {
    materialize(&eval_set(x, fuel), fuel, None)
}

/// `enum_at(x, fuel) ∩ [0, bound)`.
pub fn enum_below(x: &EnumSet, fuel: u64, bound: &Nat) -> BTreeSet<Nat> {
    materialize(&eval_set(x, fuel), fuel, Some(bound))
}

/// `y ∈ enum_at(x, fuel)`, without enumerating.
pub fn member(x: &EnumSet, y: &Nat, fuel: u64) -> bool {
    contains(&eval_set(x, fuel), y, fuel)
}

/// For `z ∈ enum_at(x·y, fuel)`, a finite `D ⊆ enum_at(y, fuel)` with
/// `z ∈ enum_at(x·D, fuel)`: the `D_u` of a pair `⟨z, u⟩` of `x` that
/// put `z` into the application.
pub fn compactness_witness(x: &EnumSet, y: &EnumSet, z: &Nat, fuel: u64) -> Option<BTreeSet<Nat>> {
    let v = eval_set(x, fuel);
    let w = eval_set(y, fuel);
    for p in &v.fin {
        if let Some((x, u)) = unpair(p) {
            if &x == z && subset_of(&u, &w, fuel) {
                return Some(fset_decode(&u).into_iter().map(Nat::from).collect());
            }
        }
    }
    if !v.graphs.is_empty() {
        for (_, d) in small_subsets(&w, fuel) {
            for c in &v.graphs {
                if contains(&enter(c, Value::finite(d.clone()), fuel), z, fuel) {
                    return Some(d);
                }
            }
        }
    }
    for n in &v.embeds {
        let single = |y: &Nat| contains(&w, y, fuel);
        if let Some(marker) = super::embed::embed_witness(n, single, z, fuel) {
            return Some([marker].into());
        }
    }
    None
}
