use std::path::Path;
use std::process::{Command, Output};

fn pcalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcalab"))
        .args(args)
        .env_remove("PCALAB_FUEL")
        .env_remove("PCALAB_BUDGET")
        .env_remove("PCALAB_SEED")
        .env_remove("PCALAB_OUTPUT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn no_arguments_is_a_usage_error() {
    let o = pcalab(&[]);
    assert_eq!(o.status.code(), Some(64));
    assert!(!o.stderr.is_empty());
}

#[test]
fn unknown_subcommand() {
    assert_eq!(pcalab(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(pcalab(&["k1", "apply", "x", "1"]).status.code(), Some(64));
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(pcalab(&["--help"]).status.code(), Some(0));
    assert_eq!(pcalab(&["--version"]).status.code(), Some(0));
}

#[test]
fn numeral() {
    let o = pcalab(&["k1", "numeral", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5");
}

#[test]
fn ladder_check() {
    let o = pcalab(&["k1", "ladder", "--n", "6", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn k1_apply_and_fuel() {
    // code 1 is the identity
    let o = pcalab(&["k1", "apply", "1", "42"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(0), "42".to_string()));
    assert_eq!(pcalab(&["--fuel", "0", "k1", "apply", "1", "42"]).status.code(), Some(2));
}

#[test]
fn pca_terms() {
    let o = pcalab(&["pca", "eval", "k 3 4"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(0), "3".to_string()));
    assert_eq!(pcalab(&["pca", "eq", "k 3 4", "3"]).status.code(), Some(0));
    assert_eq!(pcalab(&["pca", "eq", "k 3 4", "4"]).status.code(), Some(1));
    assert_eq!(pcalab(&["pca", "eval", "k q"]).status.code(), Some(64));
    let o = pcalab(&["pca", "abstract", "x", "--var", "x"]);
    assert_eq!((o.status.code(), stdout(&o).trim().to_string()), (Some(0), "s k k".to_string()));
}

#[test]
fn refuter_on_the_constant_stub() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.cand", "image zero 0\nimage one 1\nimage t 2\nimage e 3\ndefault 0\n");
    let o = pcalab(&["refute", "--candidate", &path]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness x = 1"));
}

#[test]
fn refuter_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope").to_str().unwrap().to_string();
    assert_eq!(pcalab(&["refute", "--candidate", &missing]).status.code(), Some(66));
    let bad = write(dir.path(), "bad.cand", "image zero 0\napply 1 2\n");
    assert_eq!(pcalab(&["refute", "--candidate", &bad]).status.code(), Some(65));
}

#[test]
fn output_is_deterministic() {
    let one = pcalab(&["--seed", "9", "pca", "feferman", "--samples", "20"]);
    let two = pcalab(&["--seed", "9", "pca", "feferman", "--samples", "20"]);
    assert_eq!(one.status.code(), two.status.code());
    assert_eq!(one.stdout, two.stdout);
    assert_eq!(pcalab(&["cmpl", "emit"]).stdout, pcalab(&["cmpl", "emit"]).stdout);
}

#[test]
fn environment_overrides_defaults() {
    let run = |fuel: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_pcalab"));
        c.args(["k1", "apply", "1", "42"]).env_remove("PCALAB_FUEL");
        if let Some(f) = fuel {
            c.env("PCALAB_FUEL", f);
        }
        c.output().unwrap().status.code()
    };
    assert_eq!(run(None), Some(0));
    assert_eq!(run(Some("0")), Some(2));
    // a flag beats the environment
    let o = Command::new(env!("CARGO_BIN_EXE_pcalab"))
        .args(["--fuel", "100", "k1", "apply", "1", "42"])
        .env("PCALAB_FUEL", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn emit_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cmpl.p");
    let o = pcalab(&["cmpl", "emit", "--bound", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.as_bytes(), pcalab(&["cmpl", "emit", "--bound", "5"]).stdout);
    assert!(pcalab_text_parses(&text));
}

fn pcalab_text_parses(text: &str) -> bool {
    pcalab::text::parse_sentences(text).is_ok_and(|s| !s.is_empty())
}

#[test]
fn unwritable_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.p");
    assert_eq!(pcalab(&["cmpl", "emit", "-o", path.to_str().unwrap()]).status.code(), Some(74));
}

#[test]
fn separator_tree() {
    let o = pcalab(&["--fuel", "300", "cmpl", "tree", "--depth", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let node = stdout(&o).trim().to_string();
    assert_eq!(node.len(), 8);
    assert_eq!(pcalab(&["--fuel", "300", "cmpl", "tree", "--depth", "8", "--check", &node]).status.code(), Some(0));
    assert_eq!(pcalab(&["cmpl", "tree", "--depth", "1", "--check", "01x"]).status.code(), Some(64));
}

#[test]
fn probes() {
    let o = pcalab(&["check", "--probes", "90"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
