use alloc::rc::Rc;
use alloc::sync::Arc;
use alloc::vec::Vec;

use core::cell::OnceCell;

use super::expr::{decode, Expr, SPECIALIZE_MIN, TAG_APPLY, TAG_FST, TAG_IFZ, TAG_IN, TAG_LIT, TAG_PAIR, TAG_PRED, TAG_SND, TAG_SUCC};
use super::value::Num;
use crate::coding::Nat;

/// Step budget for the evaluator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fuel(pub u64);

impl Fuel {
    pub const fn steps(self) -> u64 {
        self.0
    }
}

impl From<u64> for Fuel {
    fn from(n: u64) -> Self {
        Fuel(n)
    }
}

/// A total 0/1-valued oracle `X` for relativised computation.
pub trait Oracle {
    fn contains(&self, n: &Nat) -> bool;
}

impl<F: Fn(&Nat) -> bool> Oracle for F {
    fn contains(&self, n: &Nat) -> bool {
        self(n)
    }
}

/// The empty set. Unrelativised runs use this oracle.
#[derive(Clone, Copy, Debug, Default)]
pub struct EmptyOracle;

impl Oracle for EmptyOracle {
    fn contains(&self, _: &Nat) -> bool {
        false
    }
}

/// One step per 256 bits.
#[inline]
fn linear_cost(bits: u64) -> u64 {
    bits >> 8
}

/// Arithmetic on a large value evaluates it, which multiplies; charged by
/// the square of its size in 64-bit limbs.
#[inline]
fn materialize_cost(bits: u64) -> u64 {
    let limbs = bits >> 6;
    linear_cost(bits).saturating_add(limbs.saturating_mul(limbs) / 1024)
}

/// Extra charge for handling `v` as a plain number.
#[inline]
fn small_cost(v: &Num) -> u64 {
    v.as_small().map_or(0, |n| linear_cost(n.bits()))
}

/// Extra charge for arithmetic on `v`.
#[inline]
fn arith_cost(v: &Num) -> u64 {
    match v.as_small() {
        Some(n) => linear_cost(n.bits()),
        None => materialize_cost(v.bits_bound()),
    }
}

/// A program node. Codes are decoded one level at a time: the children of
/// a decoded node are `Code`s until visited.
enum Node {
    Lit(Num),
    In,
    Succ(Rc<Node>),
    Pred(Rc<Node>),
    IfZ(Rc<Node>, Rc<Node>, Rc<Node>),
    MkPair(Rc<Node>, Rc<Node>),
    Fst(Rc<Node>),
    Snd(Rc<Node>),
    Apply(Rc<Node>, Rc<Node>),
    Diverge,
    /// Decoded on first visit.
    Code(Num, OnceCell<Rc<Node>>),
}

impl Node {
    fn lower(e: &Expr) -> Node {
        let go = |e: &Arc<Expr>| Rc::new(Node::lower(e));
        match e {
            Expr::Lit(n) => Node::Lit(Num::from_nat(n)),
            Expr::In => Node::In,
            Expr::Succ(x) => Node::Succ(go(x)),
            Expr::Pred(x) => Node::Pred(go(x)),
            Expr::IfZ(g, t, f) => Node::IfZ(go(g), go(t), go(f)),
            Expr::MkPair(a, b) => Node::MkPair(go(a), go(b)),
            Expr::Fst(x) => Node::Fst(go(x)),
            Expr::Snd(x) => Node::Snd(go(x)),
            Expr::Apply(a, b) => Node::Apply(go(a), go(b)),
            Expr::Diverge => Node::Diverge,
        }
    }

    fn code(c: Num) -> Rc<Node> {
        Rc::new(Node::Code(c, OnceCell::new()))
    }

    /// The program with code `code`; agrees with [`decode`]. Plain codes
    /// are decoded whole, lazy ones one level at a time.
    fn decode(code: &Num) -> Node {
        if let Some(n) = code.as_small() {
            return Node::lower(&decode(n));
        }
        let (tag, payload) = code.unpair();
        let lazy = Node::code;
        let Some(tag) = tag.to_u64().filter(|&t| t < SPECIALIZE_MIN) else {
            let arg = Node::MkPair(Rc::new(Node::Lit(payload)), Rc::new(Node::In));
            return Node::Apply(Rc::new(Node::Lit(tag)), Rc::new(arg));
        };
        match tag {
            TAG_LIT => Node::Lit(payload),
            TAG_IN => Node::In,
            TAG_SUCC => Node::Succ(lazy(payload)),
            TAG_PRED => Node::Pred(lazy(payload)),
            TAG_IFZ => {
                let (g, rest) = payload.unpair();
                let (t, f) = rest.unpair();
                Node::IfZ(lazy(g), lazy(t), lazy(f))
            }
            TAG_PAIR => {
                let (a, b) = payload.unpair();
                Node::MkPair(lazy(a), lazy(b))
            }
            TAG_FST => Node::Fst(lazy(payload)),
            TAG_SND => Node::Snd(lazy(payload)),
            TAG_APPLY => {
                let (a, b) = payload.unpair();
                Node::Apply(lazy(a), lazy(b))
            }
            _ => Node::Diverge,
        }
    }
}

enum Frame {
    Succ,
    Pred,
    IfZ(Rc<Node>, Rc<Node>, Num),
    PairLeft(Rc<Node>, Num),
    PairRight(Num),
    Fst,
    Snd,
    ApplyCode(Rc<Node>, Num),
    ApplyRun(Num),
    Query,
}

enum Mode {
    Eval(Rc<Node>, Num),
    Return(Num),
}

/// Runs a program on `input`, drawing steps from `fuel`.
///
/// Every node visit costs one step and an oracle query one more. Plain
/// numbers cost an extra step per 256 bits when touched. Large values are
/// lazy pairs (see [`Num`]): pairing and unpairing them is free, but
/// `succ`, `pred` and oracle queries evaluate them and are charged by the
/// square of their size. `Apply` runs the callee with whatever is left,
/// as a tail call.
fn exec(prog: Rc<Node>, input: Num, fuel: &mut u64, oracle: Option<&dyn Oracle>) -> Option<Num> {
    let mut stack: Vec<Frame> = Vec::new();
    // the last decoded code; self-applying loops hit it every time
    let mut decoded: Option<(Num, Rc<Node>)> = None;
    let mut mode = Mode::Eval(prog, input);

    macro_rules! charge {
        ($n:expr) => {{
            let n: u64 = $n;
            if *fuel < n {
                *fuel = 0;
                return None;
            }
            *fuel -= n;
        }};
    }

    loop {
        mode = match mode {
            Mode::Eval(e, inp) => {
                if let Node::Code(c, cell) = &*e {
                    // not a visit of its own; the decoded node pays
                    let node = cell.get_or_init(|| Rc::new(Node::decode(c))).clone();
                    mode = Mode::Eval(node, inp);
                    continue;
                }
                charge!(1);
                match &*e {
                    Node::Lit(n) => {
                        charge!(small_cost(n));
                        Mode::Return(n.clone())
                    }
                    Node::In => Mode::Return(inp),
                    Node::Diverge => {
                        *fuel = 0;
                        return None;
                    }
                    Node::Succ(x) => {
                        stack.push(Frame::Succ);
                        Mode::Eval(x.clone(), inp)
                    }
                    Node::Pred(x) => {
                        stack.push(Frame::Pred);
                        Mode::Eval(x.clone(), inp)
                    }
                    Node::IfZ(g, t, f) => {
                        stack.push(Frame::IfZ(t.clone(), f.clone(), inp.clone()));
                        Mode::Eval(g.clone(), inp)
                    }
                    Node::MkPair(a, b) => {
                        stack.push(Frame::PairLeft(b.clone(), inp.clone()));
                        Mode::Eval(a.clone(), inp)
                    }
                    Node::Fst(x) => {
                        stack.push(Frame::Fst);
                        Mode::Eval(x.clone(), inp)
                    }
                    Node::Snd(x) => {
                        stack.push(Frame::Snd);
                        Mode::Eval(x.clone(), inp)
                    }
                    Node::Apply(c, a) => {
                        if matches!(**c, Node::Diverge) {
                            stack.push(Frame::Query);
                            Mode::Eval(a.clone(), inp)
                        } else {
                            // code first, then the argument
                            stack.push(Frame::ApplyCode(a.clone(), inp.clone()));
                            Mode::Eval(c.clone(), inp)
                        }
                    }
                    Node::Code(..) => unreachable!("decoded above"),
                }
            }
            Mode::Return(v) => match stack.pop() {
                None => return Some(v),
                Some(Frame::Succ) => {
                    charge!(arith_cost(&v));
                    Mode::Return(v.succ())
                }
                Some(Frame::Pred) => {
                    charge!(arith_cost(&v));
                    Mode::Return(v.pred())
                }
                Some(Frame::IfZ(t, f, inp)) => {
                    if v.is_zero() {
                        Mode::Eval(t, inp)
                    } else {
                        Mode::Eval(f, inp)
                    }
                }
                Some(Frame::PairLeft(b, inp)) => {
                    stack.push(Frame::PairRight(v));
                    Mode::Eval(b, inp)
                }
                Some(Frame::PairRight(left)) => {
                    charge!(small_cost(&left).max(small_cost(&v)));
                    Mode::Return(Num::pair(&left, &v))
                }
                Some(Frame::Fst) => {
                    charge!(small_cost(&v));
                    Mode::Return(v.fst())
                }
                Some(Frame::Snd) => {
                    charge!(small_cost(&v));
                    Mode::Return(v.snd())
                }
                Some(Frame::ApplyCode(arg, inp)) => {
                    stack.push(Frame::ApplyRun(v));
                    Mode::Eval(arg, inp)
                }
                Some(Frame::ApplyRun(code)) => {
                    charge!(small_cost(&code));
                    let body = match &decoded {
                        Some((c, node)) if *c == code => node.clone(),
                        _ => {
                            let node = Rc::new(Node::decode(&code));
                            decoded = Some((code, node.clone()));
                            node
                        }
                    };
                    Mode::Eval(body, v)
                }
                Some(Frame::Query) => {
                    charge!(1);
                    charge!(arith_cost(&v));
                    let hit = oracle.is_some_and(|o| o.contains(&v.to_nat()));
                    Mode::Return(Num::from(u64::from(hit)))
                }
            },
        };
    }
}

/// Charge for writing a value out as a plain number: nothing below
/// `2^SMALL_BITS`, otherwise what evaluating it costs.
fn output_cost(v: &Num) -> u64 {
    if v.is_small() {
        0
    } else {
        materialize_cost(v.bits_bound())
    }
}

fn charge_output(v: Num, fuel: &mut u64) -> Option<Nat> {
    let cost = output_cost(&v);
    if *fuel < cost {
        *fuel = 0;
        return None;
    }
    *fuel -= cost;
    Some(v.to_nat())
}

/// `e · x` on lazy values, drawing from `fuel`. The result stays lazy and
/// is not charged for, so this agrees step for step with [`run_metered`]
/// whenever the result is below `2^SMALL_BITS`.
pub fn apply_metered(e: &Num, x: &Num, fuel: &mut u64, oracle: Option<&dyn Oracle>) -> Option<Num> {
    if *fuel == 0 {
        return None;
    }
    exec(Node::code(e.clone()), x.clone(), fuel, oracle)
}

/// Runs program `prog` on `input`, drawing steps from `fuel`.
///
/// Returns `None` when the budget runs out; `fuel` is then zero. On success
/// `fuel` holds the unused remainder. A large result is charged for
/// being written out.
pub fn eval_metered(prog: Arc<Expr>, input: Nat, fuel: &mut u64, oracle: Option<&dyn Oracle>) -> Option<Nat> {
    let v = exec(Rc::new(Node::lower(&prog)), Num::from_nat(&input), fuel, oracle)?;
    charge_output(v, fuel)
}

/// `φ_e^X(x)` within `fuel` steps. `None` means "no value yet".
///
/// Without an oracle the run is relativised to the empty set, so the
/// oracle query `Apply(Diverge, a)` answers 0.
pub fn run(e: &Nat, x: &Nat, fuel: Fuel, oracle: Option<&dyn Oracle>) -> Option<Nat> {
    let mut left = fuel.0;
    run_metered(e, x, &mut left, oracle)
}

/// Like [`run`], drawing from a shared step counter.
pub fn run_metered(e: &Nat, x: &Nat, fuel: &mut u64, oracle: Option<&dyn Oracle>) -> Option<Nat> {
    let v = apply_metered(&Num::from_nat(e), &Num::from_nat(x), fuel, oracle)?;
    charge_output(v, fuel)
}

/// Runs `e` on `x` and reports the value with the number of steps it took.
pub fn run_counted(e: &Nat, x: &Nat, fuel: Fuel, oracle: Option<&dyn Oracle>) -> Option<(Nat, u64)> {
    let mut left = fuel.0;
    run_metered(e, x, &mut left, oracle).map(|v| (v, fuel.0 - left))
}

/// Evaluates an expression directly (no decoding of the top level).
pub fn eval(e: &Expr, x: &Nat, fuel: Fuel, oracle: Option<&dyn Oracle>) -> Option<Nat> {
    let mut left = fuel.0;
    if left == 0 {
        return None;
    }
    eval_metered(Arc::new(e.clone()), x.clone(), &mut left, oracle)
}
