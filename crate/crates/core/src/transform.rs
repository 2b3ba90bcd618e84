//! Syntactic translations between the operators and truth-preserving model
//! constructions.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::oracle::{valid_on, Corpus, OracleError, SearchBudget, VerdictReport};
use crate::semantics::{bit, members, Frame, FrameClass, Model, ModelError, StateSet};
use crate::syntax::{f, Formula, Language, ModalOp};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{op} is not allowed in {language} (in {formula})")]
    OutsideLanguage {
        formula: String,
        language: Language,
        op: String,
    },
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn outside(g: &Formula, language: Language, op: ModalOp) -> TransformError {
    TransformError::OutsideLanguage {
        formula: g.to_string(),
        language,
        op: op.keyword().to_string(),
    }
}

/// Rewrites every `W g` as `IR g' & ~g'`, innermost first.
pub fn w_to_ri(g: &Formula) -> Result<Formula, TransformError> {
    if let Some(op) = g.first_outside(Language::FalseBelief) {
        return Err(outside(g, Language::FalseBelief, op));
    }
    Ok(rewrite(g, &|a| Formula::and(Formula::ir(a.clone()), Formula::not(a))))
}

/// Rewrites every `IR g` as `W g' | W ~g'`, innermost first.
pub fn ri_to_w(g: &Formula) -> Result<Formula, TransformError> {
    if let Some(op) = g.first_outside(Language::RadicalIgnorance) {
        return Err(outside(g, Language::RadicalIgnorance, op));
    }
    Ok(rewrite(g, &|a| Formula::or(Formula::w(a.clone()), Formula::w(Formula::not(a)))))
}

fn rewrite(g: &Formula, modal: &dyn Fn(Formula) -> Formula) -> Formula {
    let r = |a: &Formula| rewrite(a, modal);
    match g {
        Formula::Atom(_) | Formula::Top | Formula::Bot => g.clone(),
        Formula::Not(a) => Formula::not(r(a)),
        Formula::And(a, b) => Formula::and(r(a), r(b)),
        Formula::Or(a, b) => Formula::or(r(a), r(b)),
        Formula::Imp(a, b) => Formula::imp(r(a), r(b)),
        Formula::Iff(a, b) => Formula::iff(r(a), r(b)),
        // only one modality survives the language check
        Formula::W(a) | Formula::Ir(a) => modal(r(a)),
        Formula::Bel(_) | Formula::Fi(_) => unreachable!("excluded by the language check"),
    }
}

// ---------------------------------------------------------------------------
// Translation chains

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ChainAxiom {
    #[serde(rename = "4")]
    Four,
    #[serde(rename = "5")]
    Five,
    #[serde(rename = "B")]
    B,
}

impl ChainAxiom {
    pub fn parse(s: &str) -> Option<ChainAxiom> {
        match s {
            "4" => Some(ChainAxiom::Four),
            "5" => Some(ChainAxiom::Five),
            "B" | "b" => Some(ChainAxiom::B),
            _ => None,
        }
    }

    pub fn chain_name(self) -> &'static str {
        match self {
            ChainAxiom::Four => "A4-chain",
            ChainAxiom::Five => "A5-chain",
            ChainAxiom::B => "AB-chain",
        }
    }
}

/// A modal axiom rewritten step by step into the false-belief language,
/// with `phi := p`, `psi := q`, `chi := r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TranslationChain {
    pub name: String,
    pub lines: Vec<Formula>,
    pub final_line: Formula,
}

pub fn almost_def_chain(axiom: ChainAxiom) -> TranslationChain {
    let lines: [&str; 4] = match axiom {
        ChainAxiom::Four => [
            "W q -> (B p -> B(W r -> B p))",
            "W q -> (W(p & q) -> W((W r -> B p) & q))",
            "W q -> (W(p & q) -> W((W r -> W(p & r)) & q))",
            "W q & W(p & q) -> W((W r -> W(p & r)) & q)",
        ],
        ChainAxiom::Five => [
            "W q -> (~B p -> B(W r -> ~B p))",
            "W q -> (~W(p & q) -> W((W r -> ~B p) & q))",
            "W q -> (~W(p & q) -> W((W r -> ~W(p & r)) & q))",
            "W q & ~W(p & q) -> W((W r -> ~W(p & r)) & q)",
        ],
        ChainAxiom::B => [
            "W q -> (~p -> B(W r -> ~B p))",
            "W q -> (~p -> W((W r -> ~B p) & q))",
            "W q -> (~p -> W((W r -> ~W(p & r)) & q))",
            "W q & ~p -> W((W r -> ~W(p & r)) & q)",
        ],
    };
    let lines: Vec<Formula> = lines.iter().map(|s| f(s)).collect();
    TranslationChain {
        name: axiom.chain_name().to_string(),
        final_line: lines[lines.len() - 1].clone(),
        lines,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub from: usize,
    pub to: usize,
    pub report: VerdictReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub name: String,
    pub steps: Vec<ChainStep>,
    /// The last line is free of the box modality.
    pub final_in_language: bool,
}

impl ChainReport {
    pub fn all_pass(&self) -> bool {
        self.final_in_language && self.steps.iter().all(|s| s.report.is_valid_up_to_budget())
    }
}

/// Bounded check of `L_i <-> L_{i+1}` over all frames, for each step.
pub fn check_chain(chain: &TranslationChain, max_states: usize) -> Result<ChainReport, TransformError> {
    let mut steps = Vec::new();
    for (i, pair) in chain.lines.windows(2).enumerate() {
        let g = Formula::iff(pair[0].clone(), pair[1].clone());
        let report = valid_on(&g, &FrameClass::all(), &SearchBudget::for_formula(max_states, &g))?;
        steps.push(ChainStep {
            from: i + 1,
            to: i + 2,
            report,
        });
    }
    Ok(ChainReport {
        name: chain.name.clone(),
        steps,
        final_in_language: chain.final_line.is_in(Language::FalseBelief),
    })
}

// ---------------------------------------------------------------------------
// Model constructions

/// Adds `(y, z)` for every pair of states that both have an incoming edge.
pub fn euclidean_closure(m: &Model) -> Model {
    let h = m.frame().targets();
    let mut out = m.frame().clone();
    for y in members(h) {
        for z in members(h) {
            out.add_edge(y, z);
        }
    }
    m.with_frame(out)
}

/// States reachable from `s` in zero or more steps.
pub fn reachable(fr: &Frame, s: usize) -> StateSet {
    let mut seen = bit(s);
    let mut frontier = seen;
    while frontier != 0 {
        let next = members(frontier).fold(0, |acc, i| acc | fr.succ_mask(i));
        frontier = next & !seen;
        seen |= next;
    }
    seen
}

/// Restriction of `m` to the states reachable from `s`, in their original order.
pub fn generated_submodel(m: &Model, s: &str) -> Result<Model, TransformError> {
    let fr = m.frame();
    let keep: Vec<usize> = members(reachable(fr, fr.index(s)?)).collect();
    let names: Vec<String> = keep.iter().map(|&i| fr.name(i).to_string()).collect();
    let mut sub = Frame::empty(names)?;
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate() {
            if fr.relates(i, j) {
                sub.add_edge(a, b);
            }
        }
    }
    let val = m
        .valuation()
        .iter()
        .map(|(p, set)| {
            let restricted = keep
                .iter()
                .enumerate()
                .filter(|(_, &i)| set & bit(i) != 0)
                .fold(0, |acc, (a, _)| acc | bit(a));
            (p.clone(), restricted)
        })
        .collect();
    Ok(Model::new(sub, val)?)
}

/// A root and its successor set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeSpec {
    pub root: String,
    pub cone: BTreeSet<String>,
}

impl ConeSpec {
    pub fn of(m: &Model, s: &str) -> Result<ConeSpec, TransformError> {
        Ok(ConeSpec {
            root: s.to_string(),
            cone: m.successors(s)?,
        })
    }
}

/// Adds every pair inside the successor set of `s`.
pub fn cone_augment(m: &Model, s: &str) -> Result<Model, TransformError> {
    let fr = m.frame();
    let z = fr.succ_mask(fr.index(s)?);
    let mut out = fr.clone();
    for i in members(z) {
        for j in members(z) {
            out.add_edge(i, j);
        }
    }
    Ok(m.with_frame(out))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreservationViolation {
    pub state: String,
    pub formula: String,
    pub first: bool,
    pub second: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreservationReport {
    pub states: Vec<String>,
    pub formulas: usize,
    pub violation: Option<PreservationViolation>,
}

impl PreservationReport {
    pub fn preserved(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for PreservationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "preserved: {} formulas agree at {} states",
                self.formulas,
                self.states.len()
            ),
            Some(v) => write!(
                f,
                "violation at {}: {} is {} before and {} after",
                v.state, v.formula, v.first, v.second
            ),
        }
    }
}

/// Compares the two models on every corpus formula at each named state
/// (default: every state of `m2` that also occurs in `m1`). States are
/// matched by name. The first disagreement in (state, corpus) order is
/// reported.
pub fn verify_preservation(
    m1: &Model,
    m2: &Model,
    states: Option<&[String]>,
    corpus: &Corpus,
) -> Result<PreservationReport, TransformError> {
    let shared: Vec<String> = match states {
        Some(list) => list.to_vec(),
        None => m2
            .frame()
            .names()
            .iter()
            .filter(|n| m1.frame().index(n).is_ok())
            .cloned()
            .collect(),
    };
    let pairs = shared
        .iter()
        .map(|n| Ok((bit(m1.frame().index(n)?), bit(m2.frame().index(n)?))))
        .collect::<Result<Vec<_>, ModelError>>()?;
    let e1 = corpus.model_extensions(m1);
    let e2 = corpus.model_extensions(m2);
    for (name, (b1, b2)) in shared.iter().zip(pairs) {
        for (k, (x1, x2)) in e1.iter().zip(&e2).enumerate() {
            let (t1, t2) = (x1 & b1 != 0, x2 & b2 != 0);
            if t1 != t2 {
                return Ok(PreservationReport {
                    states: shared.clone(),
                    formulas: corpus.len(),
                    violation: Some(PreservationViolation {
                        state: name.clone(),
                        formula: corpus.entries()[k].formula.to_string(),
                        first: t1,
                        second: t2,
                    }),
                });
            }
        }
    }
    Ok(PreservationReport {
        states: shared,
        formulas: corpus.len(),
        violation: None,
    })
}
