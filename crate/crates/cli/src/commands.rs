use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use doxa_core::hilbert::{parse_proof, CheckOptions};
use doxa_core::oracle::{Corpus, SearchBudget};
use doxa_core::transform::{
    almost_def_chain, check_chain, cone_augment, euclidean_closure, generated_submodel, ri_to_w,
    verify_preservation, w_to_ri, ChainAxiom,
};
use doxa_core::{check_proof, find_countermodel, parse, FrameClass, Language, Model, ModelFile};
use serde::Serialize;
use serde_json::json;

use crate::args::{Cli, Command, CorpusArgs, Direction, Format, SearchArgs, TransformKind};
use crate::registry::{self, Settings};

/// What a command prints and the exit code it asks for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn new(text: String, ok: bool) -> Output {
        Output {
            text,
            code: if ok { 0 } else { 1 },
        }
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn load_model(path: &Path) -> Result<(Model, Option<String>)> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let file = ModelFile::parse(&text).with_context(|| format!("in {}", path.display()))?;
    file.to_model().with_context(|| format!("in {}", path.display()))
}

/// Runs one command. Errors are input or usage errors (exit code 2).
pub fn run(cli: &Cli) -> Result<Output> {
    let fmt = cli.format;
    match &cli.command {
        Command::Eval {
            model,
            state,
            formula,
            aux,
        } => {
            let (m, _) = load_model(model)?;
            let g = parse(formula)?;
            let value = if *aux { m.eval_aux(state, &g)? } else { m.eval(state, &g)? };
            let text = match fmt {
                Format::Text => value.to_string(),
                Format::Json => to_json(&json!({ "state": state, "formula": g, "value": value })),
            };
            Ok(Output::new(text, true))
        }
        Command::Valid { formula, search } => search_command(formula, search, fmt, false),
        Command::Counter { formula, search } => search_command(formula, search, fmt, true),
        Command::Translate { formula, direction } => {
            let g = parse(formula)?;
            let out = match direction {
                Direction::W2ri => w_to_ri(&g)?,
                Direction::Ri2w => ri_to_w(&g)?,
            };
            let text = match fmt {
                Format::Text => out.to_string(),
                Format::Json => to_json(&json!({ "input": g, "output": out })),
            };
            Ok(Output::new(text, true))
        }
        Command::Chain {
            axiom,
            check,
            max_states,
        } => chain_command(axiom, *check, *max_states, fmt),
        Command::Prove { script, strict } => prove_command(script, *strict, fmt),
        Command::Transform {
            kind,
            model,
            root,
            check,
            corpus,
        } => transform_command(*kind, model, root.as_deref(), *check, corpus, fmt),
        Command::VerifyPaper {
            filter,
            max_states,
            depth,
            size,
        } => {
            let settings = Settings {
                max_states: *max_states as usize,
                depth: *depth,
                size: *size,
            };
            let report = registry::run(&settings, filter.as_deref())?;
            let text = match fmt {
                Format::Text => report.to_string(),
                Format::Json => to_json(&report),
            };
            Ok(Output::new(text, report.all_as_expected()))
        }
    }
}

fn search_command(formula: &str, args: &SearchArgs, fmt: Format, want_countermodel: bool) -> Result<Output> {
    let g = parse(formula)?;
    let class: FrameClass = args.class.parse()?;
    let budget = if args.atoms.is_empty() {
        SearchBudget::for_formula(args.max_states, &g)
    } else {
        let atoms: Vec<&str> = args.atoms.iter().map(String::as_str).collect();
        SearchBudget::new(args.max_states, &atoms)
    };
    let report = find_countermodel(&g, &class, &budget)?;
    let text = match fmt {
        Format::Text => report.to_string().trim_end().to_string(),
        Format::Json => to_json(&report),
    };
    Ok(Output::new(text, report.found_countermodel() == want_countermodel))
}

fn chain_command(axiom: &str, check: bool, max_states: usize, fmt: Format) -> Result<Output> {
    let ax = ChainAxiom::parse(axiom).ok_or_else(|| anyhow!("unknown axiom `{axiom}`, expected 4, 5 or B"))?;
    let chain = almost_def_chain(ax);
    let report = if check { Some(check_chain(&chain, max_states)?) } else { None };
    let ok = report.as_ref().is_none_or(|r| r.all_pass());
    let text = match fmt {
        Format::Json => to_json(&json!({ "chain": chain, "check": report })),
        Format::Text => {
            let mut out = vec![chain.name.clone()];
            for (i, l) in chain.lines.iter().enumerate() {
                out.push(format!("({}) {l}", i + 1));
            }
            if let Some(r) = &report {
                for s in &r.steps {
                    out.push(format!(
                        "({}) <-> ({}): {} up to {} states",
                        s.from, s.to, s.report.verdict, s.report.max_states
                    ));
                }
                let passing = r.steps.iter().filter(|s| s.report.is_valid_up_to_budget()).count();
                out.push(format!("{passing} of {} steps pass", r.steps.len()));
                out.push(format!(
                    "final line in {}: {}",
                    Language::FalseBelief,
                    if r.final_in_language { "yes" } else { "no" }
                ));
            }
            out.join("\n")
        }
    };
    Ok(Output::new(text, ok))
}

fn prove_command(path: &Path, strict: bool, fmt: Format) -> Result<Output> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let proof = parse_proof(&text).with_context(|| format!("in {}", path.display()))?;
    let result = check_proof(&proof, CheckOptions { strict });
    let ok = result.is_ok();
    let text = match (fmt, result) {
        (Format::Json, Ok(r)) => to_json(&json!({ "accepted": true, "report": r })),
        (Format::Json, Err(e)) => to_json(&json!({ "accepted": false, "line": e.line(), "error": e.to_string() })),
        (Format::Text, Ok(r)) => {
            let rules: Vec<&str> = r.rules_used.iter().map(String::as_str).collect();
            format!(
                "accepted: {} lines in {}\nconclusion: {}\nrules: {}",
                r.lines,
                r.system,
                r.conclusion,
                rules.join(", ")
            )
        }
        (Format::Text, Err(e)) => match e.line().and_then(|k| proof.lines.iter().find(|l| l.index == k)) {
            Some(l) => format!(
                "rejected at line {}: {e}\n  {}. {} ; {}",
                l.index, l.index, l.formula, l.justification
            ),
            None => format!("rejected: {e}"),
        },
    };
    Ok(Output::new(text, ok))
}

fn transform_command(
    kind: TransformKind,
    path: &Path,
    root: Option<&str>,
    check: bool,
    corpus_args: &CorpusArgs,
    fmt: Format,
) -> Result<Output> {
    let (m, designated) = load_model(path)?;
    let root = root.map(str::to_string).or(designated.clone());
    let need_root = || root.clone().ok_or_else(|| anyhow!("this construction needs --root or a designated state"));
    let n = match kind {
        TransformKind::Closure => euclidean_closure(&m),
        TransformKind::Generate => generated_submodel(&m, &need_root()?)?,
        TransformKind::Cone => cone_augment(&m, &need_root()?)?,
    };
    let keep = designated.filter(|d| n.frame().index(d).is_ok());
    let file = ModelFile::from_model(&n, keep.as_deref());
    let report = if check {
        let atoms = if !corpus_args.atoms.is_empty() {
            corpus_args.atoms.clone()
        } else if !m.valuation().is_empty() {
            m.valuation().keys().cloned().collect()
        } else {
            vec!["p".to_string()]
        };
        let corpus = Corpus::for_language(Language::FalseBelief, &atoms, corpus_args.depth, corpus_args.size);
        Some(verify_preservation(&m, &n, None, &corpus)?)
    } else {
        None
    };
    let ok = report.as_ref().is_none_or(|r| r.preserved());
    let text = match fmt {
        Format::Json => to_json(&json!({ "model": file, "preservation": report })),
        Format::Text => match &report {
            None => file.to_json(),
            Some(r) => format!("{}\n{r}", file.to_json()),
        },
    };
    Ok(Output::new(text, ok))
}
