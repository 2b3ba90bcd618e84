use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use doxa_core::hilbert::golden_proofs;
use doxa_core::ModelFile;
use tempfile::TempDir;

fn doxa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_doxa"))
        .args(args)
        .env_remove("DOXA_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

const S5_TWO: &str = r#"{
  "states": ["s'", "t'"],
  "relation": [["s'", "s'"], ["s'", "t'"], ["t'", "s'"], ["t'", "t'"]],
  "valuation": {"p": ["s'"]}
}"#;

#[test]
fn eval_examples() {
    let dir = TempDir::new().unwrap();
    let s5 = write(&dir, "s5.json", S5_TWO);
    let o = doxa(&["eval", path(&s5), "s'", "B p"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "false"));
    let o = doxa(&["eval", path(&s5), "s'", "p"]);
    assert_eq!(stdout(&o).trim(), "true");

    let dead = write(&dir, "dead.json", r#"{"states": ["s"], "relation": [], "valuation": {}}"#);
    let o = doxa(&["eval", path(&dead), "s", "W F"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "true"));

    let edge = write(
        &dir,
        "edge.json",
        r#"{"states": ["s", "t"], "relation": [["s", "t"]], "valuation": {"p": ["t"]}}"#,
    );
    let o = doxa(&["eval", path(&edge), "s", "IR p"]);
    assert_eq!(stdout(&o).trim(), "true");
    // under the auxiliary reading IR p is just p
    let o = doxa(&["eval", "--aux", path(&edge), "s", "IR p"]);
    assert_eq!(stdout(&o).trim(), "false");

    let o = doxa(&["--format", "json", "eval", path(&edge), "t", "p"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], true);
}

#[test]
fn eval_input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let s5 = write(&dir, "s5.json", S5_TWO);
    let o = doxa(&["eval", path(&s5), "u", "p"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains('u'), "{}", stderr(&o));
    assert_eq!(code(&doxa(&["eval", path(&s5), "s'", "p &"])), 2);
    let extra = write(
        &dir,
        "extra.json",
        r#"{"states": ["s"], "relation": [], "valuation": {}, "colour": "red"}"#,
    );
    assert_eq!(code(&doxa(&["eval", path(&extra), "s", "p"])), 2);
    assert_eq!(code(&doxa(&["eval", "/nonexistent/model.json", "s", "p"])), 2);
    assert_eq!(code(&doxa(&["eval"])), 2);
}

#[test]
fn valid_and_counter_exit_codes() {
    let o = doxa(&["valid", "W p -> ~p", "--class", "all", "--max-states", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("no-countermodel-up-to-budget"));

    let o = doxa(&["valid", "~W F", "--max-states", "1"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("countermodel-found"));

    let a5 = "W q & ~W(p & q) -> W((W r -> ~W(p & r)) & q)";
    assert_eq!(code(&doxa(&["valid", a5, "--class", "euclidean", "--max-states", "3"])), 0);

    assert_eq!(code(&doxa(&["counter", "~W F", "--max-states", "1"])), 0);
    assert_eq!(code(&doxa(&["counter", "p -> p", "--max-states", "2"])), 1);
    assert_eq!(code(&doxa(&["valid", "p", "--class", "shiny"])), 2);
    assert_eq!(code(&doxa(&["valid", "p & q", "--atoms", "p"])), 2);
}

#[test]
fn witnesses_pipe_back_into_eval() {
    let o = doxa(&["counter", "W p -> W(~W q & p)", "--max-states", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let witness = serde_json::to_string(&v["witness"]).unwrap();
    let file = ModelFile::parse(&witness).unwrap();
    let state = file.designated.clone().unwrap();

    let dir = TempDir::new().unwrap();
    let p = write(&dir, "w.json", &witness);
    let o = doxa(&["eval", path(&p), &state, "W p -> W(~W q & p)"]);
    assert_eq!(stdout(&o).trim(), "false");

    // the text rendering carries the same document after `witness:`
    let o = doxa(&["counter", "W p -> W(~W q & p)", "--max-states", "3"]);
    let text = stdout(&o);
    let doc = text.split_once("witness:\n").unwrap().1;
    assert_eq!(ModelFile::parse(doc).unwrap(), file);
}

#[test]
fn state_budget_from_the_environment() {
    let stronger = "W q -> W((W r -> W(p & r)) & q)";
    let run = |n: &str| {
        Command::new(env!("CARGO_BIN_EXE_doxa"))
            .args(["valid", stronger, "--class", "transitive"])
            .env("DOXA_MAX_STATES", n)
            .output()
            .unwrap()
    };
    assert_eq!(code(&run("2")), 0);
    assert_eq!(code(&run("3")), 1);
}

#[test]
fn translate_examples() {
    let o = doxa(&["translate", "W p", "--direction", "w2ri"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "IR p & ~p"));
    let o = doxa(&["translate", "IR p", "--direction", "ri2w"]);
    assert_eq!(stdout(&o).trim(), "W p | W ~p");
    let o = doxa(&["translate", "B p", "--direction", "w2ri"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains('B'), "{}", stderr(&o));
}

#[test]
fn chain_with_check() {
    let o = doxa(&["chain", "--axiom", "4", "--check"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("(") && !l.contains("<->")).count(), 4);
    assert!(text.contains("3 of 3 steps pass"), "{text}");
    let o = doxa(&["chain", "--axiom", "B"]);
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(code(&doxa(&["chain", "--axiom", "7"])), 2);
}

#[test]
fn prove_golden_and_corrupted_scripts() {
    let dir = TempDir::new().unwrap();
    for g in golden_proofs() {
        let p = write(&dir, &format!("{}.proof", g.name), g.text);
        let o = doxa(&["prove", path(&p)]);
        assert_eq!(code(&o), 0, "{}: {}", g.name, stdout(&o));
        assert!(stdout(&o).starts_with("accepted"));
    }

    let aq = golden_proofs().into_iter().find(|g| g.name == "aq_in_k5w").unwrap();
    let p = write(&dir, "aq.proof", aq.text);
    let o = doxa(&["prove", "--strict", path(&p)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("REW"));

    // swap the two premises of the first modus ponens
    let text = aq.text;
    let line = text.lines().find(|l| l.contains("; mp ")).unwrap();
    let (head, refs) = line.rsplit_once("; mp ").unwrap();
    let (i, j) = refs.trim().split_once(' ').unwrap();
    let label: usize = head.split('.').next().unwrap().trim().parse().unwrap();
    let bad = text.replace(line, &format!("{head}; mp {j} {i}"));
    let p = write(&dir, "bad.proof", &bad);
    let o = doxa(&["prove", path(&p)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with(&format!("rejected at line {label}")), "{}", stdout(&o));

    let p = write(&dir, "syntax.proof", "system: KW\n1. p -> ; taut\n");
    let o = doxa(&["prove", path(&p)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("script line 2"), "{}", stderr(&o));
}

#[test]
fn transform_closure_and_cone() {
    let dir = TempDir::new().unwrap();
    let m = write(
        &dir,
        "m.json",
        r#"{"states": ["a", "b", "c"], "relation": [["a", "b"], ["a", "c"], ["b", "b"], ["c", "c"]],
            "valuation": {"p": ["b"]}}"#,
    );
    let o = doxa(&["transform", "closure", path(&m), "--format", "json", "--check"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let file: ModelFile = serde_json::from_value(v["model"].clone()).unwrap();
    let rel = &file.relation;
    assert_eq!(rel.len(), 6);
    assert!(rel.contains(&("b".into(), "c".into())) && rel.contains(&("c".into(), "b".into())));
    assert!(v["preservation"]["violation"].is_null());

    // the closure output is itself a model file
    let o = doxa(&["transform", "closure", path(&m)]);
    let out = write(&dir, "closed.json", &stdout(&o));
    assert_eq!(stdout(&doxa(&["eval", path(&out), "b", "B p"])).trim(), "false");

    let bare = write(
        &dir,
        "bare.json",
        r#"{"states": ["a", "b"], "relation": [["a", "b"]], "valuation": {"p": ["a"]}}"#,
    );
    let o = doxa(&["transform", "closure", path(&bare), "--check"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("violation at a"), "{}", stdout(&o));

    let cone = write(
        &dir,
        "cone.json",
        r#"{"states": ["s", "t", "u"], "relation": [["s", "t"], ["s", "u"], ["t", "t"], ["u", "u"]],
            "valuation": {"p": ["t"]}, "designated": "s"}"#,
    );
    let o = doxa(&["transform", "cone", path(&cone), "--check", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["model"]["relation"].as_array().unwrap().len(), 6);
    assert_eq!(v["model"]["designated"], "s");

    let o = doxa(&["transform", "generate", path(&cone), "--root", "t"]);
    let g = ModelFile::parse(&stdout(&o)).unwrap();
    assert_eq!(g.states, ["t"]);
    assert_eq!(code(&doxa(&["transform", "cone", path(&bare)])), 2);
}

#[test]
fn verify_paper_filter_and_budget() {
    let o = doxa(&["verify-paper", "--filter", "prop-2.9*"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with("pass")).collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].contains("prop-2.9-property-table") && rows[1].contains("prop-2.9-definability-gap"));

    let o = doxa(&["verify-paper", "--filter", "*-invalid", "--max-states", "1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("budget-insufficient AQ-all-invalid"), "{text}");
    assert!(text.ends_with("4 checks: 2 pass, 0 fail, 2 budget-insufficient\n"), "{text}");

    let o = doxa(&["verify-paper", "--filter", "AD-*", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["checks"], 2);
    assert_eq!(v["results"][0]["status"], "pass");

    assert_eq!(code(&doxa(&["verify-paper", "--filter", "no-such-check"])), 2);
    assert_eq!(code(&doxa(&["verify-paper", "--max-states", "9"])), 2);
}
