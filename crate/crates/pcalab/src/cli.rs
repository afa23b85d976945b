//! The `pcalab` command line.
//!
//! Exit status: 0 success or proven, 1 refuted or witness found, 2 unknown
//! within the given fuel or budget, 64 usage error, 65 malformed input
//! data, 66 unreadable input file, 74 output error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pcalab_core::cmpl::{emit_cmpl, insep_left, insep_right, leftmost_path, render, sep_viable, SepNode};
use pcalab_core::graph::{embed_below, enum_below, g_apply, EnumSet, GraphModel};
use pcalab_core::k1::{left_numeral, random_element, Ladder, NumeralError, K1};
use pcalab_core::pca::{abstract_term, check_feferman, eval_term, kleene_eq, FefermanReport, Outcome, Pca, Term, Verdict};
use pcalab_core::presentations::{refute_completion, RefuteError, RefuteOutcome};
use pcalab_core::substrate::{insep_pair, run, Fuel, Side};
use pcalab_core::Nat;

use crate::probes::run_probes;
use crate::text::{parse_candidate, parse_nat, parse_nat_term, parse_set, parse_set_term, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DATA: i32 = 65;
pub const EXIT_NO_INPUT: i32 = 66;
pub const EXIT_IO: i32 = 74;

#[derive(Parser, Debug)]
#[command(name = "pcalab", version, about = "A workbench for partial combinatory algebras", arg_required_else_help = true)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Settings shared by all subcommands.
#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    /// Step limit for programs of the substrate (K₁ application).
    #[arg(long, global = true, env = "PCALAB_FUEL", default_value_t = 1_000_000)]
    pub fuel: u64,
    /// Budget for graph-model work, term evaluation and the refuter.
    #[arg(long, global = true, env = "PCALAB_BUDGET", default_value_t = 1000)]
    pub budget: u64,
    /// Seed for every random sample.
    #[arg(long, global = true, env = "PCALAB_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(short, long, global = true, env = "PCALAB_OUTPUT")]
    pub output: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { fuel: 1_000_000, budget: 1000, seed: 0, output: None }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kleene's first model.
    #[command(subcommand)]
    K1(K1Command),
    /// The graph model over enumerable sets.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Terms, Kleene equality, bracket abstraction and the k/s laws.
    #[command(subcommand)]
    Pca(PcaCommand),
    /// Look for a diagonal witness against a claimed computable completion.
    Refute {
        /// Candidate file (see the candidate format in the README).
        #[arg(long)]
        candidate: PathBuf,
    },
    /// The completion theory and the separator tree.
    #[command(subcommand)]
    Cmpl(CmplCommand),
    /// Randomised monotonicity probes over all modules.
    Check {
        /// Number of probes.
        #[arg(long, default_value_t = 900)]
        probes: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum K1Command {
    /// `a·b`, run for at most `--fuel` steps.
    Apply { a: String, b: String },
    /// The elements `t_n` with `t_n·0 = n` and `t_n·m = t_{n+1}`.
    Ladder {
        #[arg(long)]
        n: u64,
        /// Check both equations for `n, m ≤ N` instead of printing codes.
        #[arg(long)]
        check: bool,
    },
    /// Evaluate `t·t·…·t·0` (`n` applications), which is `n`.
    Numeral { n: u64 },
}

#[derive(Subcommand, Debug)]
pub enum GraphCommand {
    /// `X·Y` for two set descriptions, enumerated with `--budget`.
    Apply {
        x: String,
        y: String,
        /// Show the elements below this bound.
        #[arg(long, default_value_t = 64)]
        show: u64,
    },
    /// The image of a K₁ element under the embedding.
    Embed {
        n: String,
        #[arg(long, default_value_t = 64)]
        show: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    K1,
    Graph,
}

#[derive(Subcommand, Debug)]
pub enum PcaCommand {
    /// Evaluate a closed term. The variables `k` and `s` denote the model's
    /// combinators.
    Eval {
        term: String,
        #[arg(long, value_enum, default_value_t = Model::K1)]
        model: Model,
    },
    /// Kleene equality of two closed terms.
    Eq {
        t: String,
        u: String,
        #[arg(long, value_enum, default_value_t = Model::K1)]
        model: Model,
    },
    /// Bracket abstraction of `term` over `--vars` then `--var`; prints a
    /// term in `k` and `s`.
    Abstract {
        term: String,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long)]
        var: String,
    },
    /// Check the k and s laws on random samples.
    Feferman {
        #[arg(long, value_enum, default_value_t = Model::K1)]
        model: Model,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum CmplCommand {
    /// Write the finite fragment of the theory for `--fuel` and `--bound`.
    Emit {
        #[arg(long, default_value_t = 10)]
        bound: u64,
    },
    /// The leftmost node of depth `--depth` in the tree of separations of
    /// the inseparable pair, enumerated with `--fuel`.
    Tree {
        #[arg(long)]
        depth: usize,
        /// Test this string for viability instead.
        #[arg(long)]
        check: Option<String>,
    },
}

/// What a run produced: exit status and the texts for the two streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub out: String,
    pub err: String,
}

impl Report {
    fn new(code: i32, out: String) -> Self {
        Report { code, out, err: String::new() }
    }

    fn error(code: i32, err: impl std::fmt::Display) -> Self {
        Report { code, out: String::new(), err: format!("error: {err}\n") }
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Proven => EXIT_OK,
        Verdict::Refuted => EXIT_REFUTED,
        Verdict::Unknown { .. } => EXIT_UNKNOWN,
    }
}

fn usage(e: ParseError) -> Report {
    Report::error(EXIT_USAGE, e)
}

/// Parses `args` (the first item is the program name) and runs the
/// command. Output files named by `--output` are written here.
pub fn dispatch<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Report::new(EXIT_OK, text),
                _ => Report { code: EXIT_USAGE, out: String::new(), err: text },
            };
        }
    };
    let mut report = execute(&cli);
    if let Some(path) = &cli.config.output {
        if let Err(e) = std::fs::write(path, &report.out) {
            return Report::error(EXIT_IO, format!("cannot write {}: {e}", path.display()));
        }
        report.err.push_str(&format!("wrote {}\n", path.display()));
        report.out.clear();
    }
    report
}

pub fn execute(cli: &Cli) -> Report {
    let cfg = &cli.config;
    match &cli.command {
        Command::K1(c) => k1(cfg, c),
        Command::Graph(c) => graph(cfg, c),
        Command::Pca(c) => pca(cfg, c),
        Command::Refute { candidate } => refute(cfg, candidate),
        Command::Cmpl(c) => cmpl(cfg, c),
        Command::Check { probes } => check(cfg, *probes),
    }
}

fn k1(cfg: &RunConfig, c: &K1Command) -> Report {
    match c {
        K1Command::Apply { a, b } => {
            let (a, b) = match (parse_nat(a), parse_nat(b)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage(e),
            };
            match run(&a, &b, Fuel(cfg.fuel), None) {
                Some(v) => Report::new(EXIT_OK, format!("{v}\n")),
                None => Report::new(EXIT_UNKNOWN, format!("no value within {} steps\n", cfg.fuel)),
            }
        }
        K1Command::Ladder { n, check } => {
            let ladder = Ladder::new();
            let mut out = String::new();
            if !check {
                for i in 1..=*n {
                    let _ = writeln!(out, "t_{i} = {}", ladder.t(i));
                }
                return Report::new(EXIT_OK, out);
            }
            let fuel = Fuel(cfg.fuel);
            let (mut wrong, mut open) = (0, 0);
            for i in 1..=*n {
                let t = ladder.t(i);
                let next = ladder.t(i + 1);
                let mut tally = |got: Option<Nat>, want: &Nat| match got {
                    Some(v) if v == *want => {}
                    Some(_) => wrong += 1,
                    None => open += 1,
                };
                tally(run(&t, &Nat::from(0u32), fuel, None), &Nat::from(i));
                for m in 1..=*n {
                    tally(run(&t, &Nat::from(m), fuel, None), &next);
                }
            }
            let total = n * (n + 1);
            let _ = writeln!(out, "checked {total} equations: {} hold, {wrong} fail, {open} unknown", total - wrong - open);
            let code = if wrong > 0 {
                EXIT_REFUTED
            } else if open > 0 {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            Report::new(code, out)
        }
        K1Command::Numeral { n } => match left_numeral(&Ladder::new(), *n, cfg.fuel) {
            Ok(Some(v)) => Report::new(EXIT_OK, format!("{v}\n")),
            Ok(None) => Report::new(EXIT_UNKNOWN, format!("no value within {} steps\n", cfg.fuel)),
            Err(NumeralError::Zero) => Report::error(EXIT_USAGE, NumeralError::Zero),
        },
    }
}

fn show_set(xs: &std::collections::BTreeSet<Nat>) -> String {
    let items: Vec<String> = xs.iter().map(Nat::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn graph(cfg: &RunConfig, c: &GraphCommand) -> Report {
    match c {
        GraphCommand::Apply { x, y, show } => {
            let (x, y) = match (parse_set(x), parse_set(y)) {
                (Ok(x), Ok(y)) => (x, y),
                (Err(e), _) | (_, Err(e)) => return usage(e),
            };
            let z = g_apply(&x, &y);
            let elems = enum_below(&z, cfg.budget, &Nat::from(*show));
            Report::new(EXIT_OK, format!("{z}\nbelow {show} at budget {}: {}\n", cfg.budget, show_set(&elems)))
        }
        GraphCommand::Embed { n, show } => {
            let n = match parse_nat(n) {
                Ok(n) => n,
                Err(e) => return usage(e),
            };
            let elems = embed_below(&n, cfg.budget, Some(&Nat::from(*show)));
            Report::new(EXIT_OK, format!("(embed {n})\nbelow {show} at budget {}: {}\n", cfg.budget, show_set(&elems)))
        }
    }
}

/// Replaces the variables `k` and `s` by the model's combinators; any other
/// variable is an error.
fn close<P: Pca>(pca: &P, t: Term<P::Elem>) -> Result<Term<P::Elem>, ParseError> {
    let t = t.subst("k", &Term::Const(pca.k())).subst("s", &Term::Const(pca.s()));
    let stray = t.free_vars().into_iter().next().map(str::to_string);
    match stray {
        Some(x) => Err(ParseError::new(format!("free variable `{x}` (only k and s are predefined)"))),
        None => Ok(t),
    }
}

/// Writes constants equal to `k` or `s` as those letters.
fn symbolic<P: Pca>(pca: &P, t: &Term<P::Elem>) -> Term<P::Elem> {
    match t {
        Term::Const(c) if *c == pca.k() => Term::var("k"),
        Term::Const(c) if *c == pca.s() => Term::var("s"),
        Term::Const(_) | Term::Var(_) => t.clone(),
        Term::App(f, a) => Term::app(symbolic(pca, f), symbolic(pca, a)),
    }
}

fn eval_report<P: Pca>(pca: &P, t: Term<P::Elem>, budget: u64) -> Report
where
    P::Elem: std::fmt::Display,
{
    let t = match close(pca, t) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    match eval_term(pca, &t, budget).expect("closed") {
        Outcome::Value(v) => Report::new(EXIT_OK, format!("{v}\n")),
        Outcome::DivergedSoFar { spent } => Report::new(EXIT_UNKNOWN, format!("no value yet (spent {spent})\n")),
    }
}

fn eq_report<P: Pca>(pca: &P, t: Term<P::Elem>, u: Term<P::Elem>, budget: u64) -> Report {
    let (t, u) = match (close(pca, t), close(pca, u)) {
        (Ok(t), Ok(u)) => (t, u),
        (Err(e), _) | (_, Err(e)) => return usage(e),
    };
    let v = kleene_eq(pca, &t, &u, budget).expect("closed");
    Report::new(verdict_code(v), format!("{v}\n"))
}

fn feferman_report(r: &FefermanReport) -> Report {
    let code = if r.refuted() > 0 {
        EXIT_REFUTED
    } else if r.laws().iter().any(|(_, t)| t.unknown > 0) {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    };
    Report::new(code, r.to_string())
}

fn pca(cfg: &RunConfig, c: &PcaCommand) -> Report {
    match c {
        PcaCommand::Eval { term, model } => match model {
            Model::K1 => match parse_nat_term(term) {
                Ok(t) => eval_report(&K1::new(), t, cfg.budget),
                Err(e) => usage(e),
            },
            Model::Graph => match parse_set_term(term) {
                Ok(t) => eval_report(&GraphModel, t, cfg.budget),
                Err(e) => usage(e),
            },
        },
        PcaCommand::Eq { t, u, model } => match model {
            Model::K1 => match (parse_nat_term(t), parse_nat_term(u)) {
                (Ok(t), Ok(u)) => eq_report(&K1::new(), t, u, cfg.budget),
                (Err(e), _) | (_, Err(e)) => usage(e),
            },
            Model::Graph => match (parse_set_term(t), parse_set_term(u)) {
                (Ok(t), Ok(u)) => eq_report(&GraphModel, t, u, cfg.budget),
                (Err(e), _) | (_, Err(e)) => usage(e),
            },
        },
        PcaCommand::Abstract { term, vars, var } => {
            let k1 = K1::new();
            let t = match parse_nat_term(term) {
                Ok(t) => t.subst("k", &Term::Const(k1.k())).subst("s", &Term::Const(k1.s())),
                Err(e) => return usage(e),
            };
            let vars: Vec<&str> = vars.iter().map(String::as_str).collect();
            match abstract_term(&k1, &t, &vars, var) {
                Ok(b) => Report::new(EXIT_OK, format!("{}\n", symbolic(&k1, &b))),
                Err(e) => Report::error(EXIT_USAGE, e),
            }
        }
        PcaCommand::Feferman { model, samples } => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            match model {
                Model::K1 => {
                    let k1 = K1::new();
                    let triples: Vec<_> = (0..*samples)
                        .map(|_| (random_element(&mut rng, &k1), random_element(&mut rng, &k1), random_element(&mut rng, &k1)))
                        .collect();
                    feferman_report(&check_feferman(&k1, &k1.k(), &k1.s(), triples, cfg.budget))
                }
                Model::Graph => {
                    let mut lit = || {
                        let size = rng.gen_range(0..=4);
                        EnumSet::fin((0..size).map(|_| rng.gen_range(0..10u64)))
                    };
                    let triples: Vec<_> = (0..*samples).map(|_| (lit(), lit(), lit())).collect();
                    let g = GraphModel;
                    feferman_report(&check_feferman(&g, &g.k(), &g.s(), triples, cfg.budget))
                }
            }
        }
    }
}

fn refute(cfg: &RunConfig, path: &PathBuf) -> Report {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Report::error(EXIT_NO_INPUT, format!("cannot read {}: {e}", path.display())),
    };
    let c = match parse_candidate(&text) {
        Ok(c) => c,
        Err(e) => return Report::error(EXIT_DATA, format!("{}: {e}", path.display())),
    };
    match refute_completion(&c, cfg.budget) {
        Ok(RefuteOutcome::Witness(w)) => {
            let (a, b) = insep_pair(Fuel(cfg.budget));
            let listed = match w.side {
                Side::A => a.contains(&w.x),
                Side::B => b.contains(&w.x),
            };
            let mut out = String::new();
            let side = match w.side {
                Side::A => "A (φ_x(x) = 0)",
                Side::B => "B (φ_x(x) = 1)",
            };
            let _ = writeln!(out, "witness x = {}", w.x);
            let _ = writeln!(out, "side {side}");
            let _ = writeln!(out, "f(x) = {}", w.image);
            let _ = writeln!(out, "f(e)·f(x) = f(0): {}", if w.in_c { "yes" } else { "no" });
            let _ = writeln!(out, "in the inseparable pair at budget {}: {}", cfg.budget, if listed { "yes" } else { "no" });
            Report::new(EXIT_REFUTED, out)
        }
        Ok(RefuteOutcome::Unknown { scanned }) => {
            Report::new(EXIT_UNKNOWN, format!("no witness among x < {scanned}\n"))
        }
        Err(e @ (RefuteError::Malformed { .. } | RefuteError::Unstable { .. })) => Report::error(EXIT_DATA, e),
    }
}

fn cmpl(cfg: &RunConfig, c: &CmplCommand) -> Report {
    match c {
        CmplCommand::Emit { bound } => Report::new(EXIT_OK, render(&emit_cmpl(cfg.fuel, *bound))),
        CmplCommand::Tree { depth, check } => match check {
            Some(sigma) => {
                let Some(node) = SepNode::parse(sigma) else {
                    return Report::error(EXIT_USAGE, format!("`{sigma}` is not a string of 0s and 1s"));
                };
                if sep_viable(&node, &insep_left, &insep_right, cfg.fuel) {
                    Report::new(EXIT_OK, format!("{node} viable\n"))
                } else {
                    Report::new(EXIT_REFUTED, format!("{node} not viable\n"))
                }
            }
            None => match leftmost_path(&insep_left, &insep_right, *depth, cfg.fuel) {
                Some(node) => Report::new(EXIT_OK, format!("{node}\n")),
                None => Report::new(EXIT_REFUTED, "no viable node\n".into()),
            },
        },
    }
}

fn check(cfg: &RunConfig, probes: usize) -> Report {
    let r = run_probes(cfg.seed, probes);
    let mut out = String::new();
    for (area, (n, bad)) in &r.areas {
        let _ = writeln!(out, "{area:<20} {n:>6} probes  {bad:>4} violations");
    }
    for v in &r.violations {
        let _ = writeln!(out, "{v}");
    }
    let _ = writeln!(out, "{} probes, {} violations", r.total(), r.violations.len());
    Report::new(if r.ok() { EXIT_OK } else { EXIT_REFUTED }, out)
}
