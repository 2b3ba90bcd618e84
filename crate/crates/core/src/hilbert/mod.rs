//! Hilbert-style systems for false belief and radical ignorance, and a
//! checker for proofs written in them.

mod builder;
mod derived;
mod script;
mod taut;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::semantics::{FrameClass, FrameProperty};
use crate::syntax::{f, Formula, Language};

pub use builder::{LineRef, ProofBuilder};
pub use derived::{
    check_derived_rule, conj_rule_premise, golden_proofs, ri_conj_rule_conclusion, ri_conj_rule_witness,
    w_conj_rule_conclusion, w_conj_rule_witness, DerivedRuleError, DerivedRuleReport, GoldenProof,
};
pub use script::{parse_proof, print_proof, ScriptError};
pub use taut::{abstraction_letters, is_tautology, TooManyLetters, MAX_TAUT_LETTERS};

pub type Substitution = BTreeMap<String, Formula>;

/// Atoms named `phi`, `psi` or `chi`, optionally followed by digits, stand
/// for arbitrary formulas in schema templates.
pub fn is_metavariable(name: &str) -> bool {
    ["phi", "psi", "chi"].iter().any(|stem| {
        name.strip_prefix(stem)
            .is_some_and(|rest| rest.chars().all(|c| c.is_ascii_digit()))
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Schema {
    pub name: String,
    pub template: Formula,
}

impl Schema {
    pub fn new(name: &str, template: &str) -> Schema {
        Schema {
            name: name.to_string(),
            template: f(template),
        }
    }

    pub fn instantiate(&self, sigma: &Substitution) -> Formula {
        self.template.substitute(sigma)
    }
}

const SCHEMA_TEXT: [(&str, &str); 11] = [
    ("A1", "W phi -> ~phi"),
    ("A2", "W phi & W psi -> W(phi & psi)"),
    ("AD", "~W F"),
    ("AT", "~W phi"),
    ("A4", "W psi & W(phi & psi) -> W((W chi -> W(phi & chi)) & psi)"),
    ("A5", "W psi & ~W(phi & psi) -> W((W chi -> ~W(phi & chi)) & psi)"),
    ("AB", "W psi & ~phi -> W((W chi -> ~W(phi & chi)) & psi)"),
    ("RI-Equ", "IR phi <-> IR ~phi"),
    ("RI-Con", "IR phi & ~phi & IR psi & ~psi -> IR(phi & psi)"),
    ("RI-D", "~IR F"),
    (
        "RI-4",
        "IR psi & ~psi & IR(phi & psi) & ~(phi & psi) -> \
         IR((IR chi & ~chi -> IR(phi & chi) & ~(phi & chi)) & psi) & \
         ~((IR chi & ~chi -> IR(phi & chi) & ~(phi & chi)) & psi)",
    ),
];

/// Every axiom schema other than A0 (tautologies), by name.
pub fn schemas() -> &'static [Schema] {
    static CELL: OnceLock<Vec<Schema>> = OnceLock::new();
    CELL.get_or_init(|| SCHEMA_TEXT.iter().map(|(n, t)| Schema::new(n, t)).collect())
}

pub fn schema(name: &str) -> Option<&'static Schema> {
    schemas().iter().find(|s| s.name == name)
}

/// Extends `sigma` so that `template` instantiates to `g`. Metavariables
/// already bound must agree; other atoms must match literally.
pub fn match_into(template: &Formula, g: &Formula, sigma: &mut Substitution) -> bool {
    use Formula::*;
    match (template, g) {
        (Atom(m), _) if is_metavariable(m) => match sigma.get(m) {
            Some(bound) => bound == g,
            None => {
                sigma.insert(m.clone(), g.clone());
                true
            }
        },
        (Atom(a), Atom(b)) => a == b,
        (Top, Top) | (Bot, Bot) => true,
        (Not(a), Not(b)) | (W(a), W(b)) | (Bel(a), Bel(b)) | (Ir(a), Ir(b)) | (Fi(a), Fi(b)) => {
            match_into(a, b, sigma)
        }
        (And(a1, a2), And(b1, b2))
        | (Or(a1, a2), Or(b1, b2))
        | (Imp(a1, a2), Imp(b1, b2))
        | (Iff(a1, a2), Iff(b1, b2)) => match_into(a1, b1, sigma) && match_into(a2, b2, sigma),
        _ => false,
    }
}

/// The substitution making the schema's template equal `g`, if any.
/// Matching is syntactic.
pub fn match_schema(s: &Schema, g: &Formula) -> Option<Substitution> {
    let mut sigma = Substitution::new();
    match_into(&s.template, g, &mut sigma).then_some(sigma)
}

// ---------------------------------------------------------------------------
// Systems

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "MP")]
    Mp,
    #[serde(rename = "R1")]
    R1,
    #[serde(rename = "RI-R")]
    RiR,
    #[serde(rename = "REW")]
    Rew,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Mp => "MP",
            Rule::R1 => "R1",
            Rule::RiR => "RI-R",
            Rule::Rew => "REW",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct System {
    pub name: &'static str,
    pub axioms: Vec<&'static Schema>,
    pub rules: BTreeSet<Rule>,
    pub language: Language,
    /// Frames the system is sound for.
    pub class: FrameClass,
}

const SYSTEM_NAMES: [&str; 12] = [
    "KW", "KDW", "TW", "K4W", "KD4W", "K5W", "K45W", "KD5W", "KD45W", "BW", "KRI", "KD4RI",
];

impl System {
    pub fn names() -> &'static [&'static str] {
        &SYSTEM_NAMES
    }

    pub fn named(name: &str) -> Option<System> {
        use FrameProperty::*;
        let name = *SYSTEM_NAMES.iter().find(|n| **n == name)?;
        let (extra, props): (&[&str], &[FrameProperty]) = match name {
            "KW" => (&[], &[]),
            "KDW" => (&["AD"], &[Serial]),
            "TW" => (&["AT"], &[Reflexive]),
            "K4W" => (&["A4"], &[Transitive]),
            "KD4W" => (&["AD", "A4"], &[Serial, Transitive]),
            "K5W" => (&["A5"], &[Euclidean]),
            "K45W" => (&["A5", "A4"], &[Euclidean]),
            "KD5W" | "KD45W" => (&["A5", "AD"], &[Serial, Transitive, Euclidean]),
            "BW" => (&["AB"], &[Symmetric]),
            "KRI" => (&[], &[]),
            "KD4RI" => (&["RI-D", "RI-4"], &[Serial, Transitive]),
            _ => unreachable!(),
        };
        let ri = name.ends_with("RI");
        let base: &[&str] = if ri { &["RI-Equ", "RI-Con"] } else { &["A1", "A2"] };
        let axioms = base
            .iter()
            .chain(extra)
            .map(|n| schema(n).expect("known schema"))
            .collect();
        let rules = if ri {
            [Rule::Mp, Rule::RiR, Rule::Rew].into()
        } else {
            [Rule::Mp, Rule::R1, Rule::Rew].into()
        };
        Some(System {
            name,
            axioms,
            rules,
            language: if ri { Language::RadicalIgnorance } else { Language::FalseBelief },
            class: FrameClass::of(props.iter().copied()),
        })
    }

    pub fn has_axiom(&self, name: &str) -> bool {
        self.axioms.iter().any(|s| s.name == name)
    }
}

// ---------------------------------------------------------------------------
// Proofs

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// Instance of a named schema; with no substitution given the checker
    /// finds one.
    Axiom {
        schema: String,
        sigma: Option<Substitution>,
    },
    Tautology,
    Premise,
    Mp(usize, usize),
    R1(usize),
    RiR(usize),
    Rew(usize),
}

impl Justification {
    pub fn references(&self) -> Vec<usize> {
        match *self {
            Justification::Mp(i, j) => vec![i, j],
            Justification::R1(i) | Justification::RiR(i) | Justification::Rew(i) => vec![i],
            _ => vec![],
        }
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom { schema, sigma: None } => f.write_str(schema),
            Justification::Axiom {
                schema,
                sigma: Some(sigma),
            } => {
                let parts: Vec<String> = sigma.iter().map(|(k, v)| format!("{k}:={v}")).collect();
                write!(f, "{schema}{{{}}}", parts.join(", "))
            }
            Justification::Tautology => f.write_str("taut"),
            Justification::Premise => f.write_str("premise"),
            Justification::Mp(i, j) => write!(f, "mp {i} {j}"),
            Justification::R1(i) => write!(f, "r1 {i}"),
            Justification::RiR(i) => write!(f, "rir {i}"),
            Justification::Rew(i) => write!(f, "rew {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    /// Label as written; labels increase strictly down the proof.
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Proof {
    pub system: String,
    pub premises: Vec<Formula>,
    pub lines: Vec<ProofLine>,
    /// When present, must equal the last line.
    pub conclusion: Option<Formula>,
}

impl Proof {
    pub fn last(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    /// Relabels lines `1..=n`, rewriting references to match.
    pub fn renumbered(&self, label: impl Fn(usize) -> usize) -> Proof {
        let map: BTreeMap<usize, usize> = self
            .lines
            .iter()
            .enumerate()
            .map(|(pos, l)| (l.index, label(pos)))
            .collect();
        let re = |i: usize| map.get(&i).copied().unwrap_or(i);
        let lines = self
            .lines
            .iter()
            .map(|l| ProofLine {
                index: re(l.index),
                formula: l.formula.clone(),
                justification: match &l.justification {
                    Justification::Mp(i, j) => Justification::Mp(re(*i), re(*j)),
                    Justification::R1(i) => Justification::R1(re(*i)),
                    Justification::RiR(i) => Justification::RiR(re(*i)),
                    Justification::Rew(i) => Justification::Rew(re(*i)),
                    other => other.clone(),
                },
            })
            .collect();
        Proof {
            lines,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    /// Refuse the replacement-of-equivalents rule.
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineErrorKind {
    #[error("label {label} does not increase on the previous line")]
    LabelOrder { label: usize },
    #[error("line {label} is not an earlier line")]
    BadReference { label: usize },
    #[error("{op} is outside {language}")]
    OutsideLanguage { op: String, language: Language },
    #[error("schema {0} is unknown")]
    UnknownSchema(String),
    #[error("schema {schema} is not an axiom of {system}")]
    SchemaNotInSystem { schema: String, system: String },
    #[error("formula is not an instance of {0}")]
    UnmatchedSchema(String),
    #[error("substitution instance of {schema} is {expected}")]
    SubstitutionMismatch { schema: String, expected: String },
    #[error("not a tautology")]
    NotTautology,
    #[error(transparent)]
    TautologyTooLarge(#[from] TooManyLetters),
    #[error("not among the premises")]
    NotPremise,
    #[error("rule {rule} is not available in {system}")]
    RuleNotAvailable { rule: Rule, system: String },
    #[error("{rule}: {detail}")]
    WrongShape { rule: Rule, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("unknown system {0}")]
    UnknownSystem(String),
    #[error("premise {premise}: {kind}")]
    BadPremise { premise: String, kind: LineErrorKind },
    #[error("proof has no lines")]
    Empty,
    #[error("line {line}: {kind}")]
    Line { line: usize, kind: LineErrorKind },
    #[error("last line is {last}, declared conclusion is {declared}")]
    ConclusionMismatch { last: String, declared: String },
}

impl ProofError {
    /// Label of the rejected line, if the error is tied to one.
    pub fn line(&self) -> Option<usize> {
        match self {
            ProofError::Line { line, .. } => Some(*line),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofReport {
    pub system: String,
    pub lines: usize,
    pub conclusion: Formula,
    pub rules_used: BTreeSet<String>,
}

fn shape(rule: Rule, detail: impl Into<String>) -> LineErrorKind {
    LineErrorKind::WrongShape {
        rule,
        detail: detail.into(),
    }
}

fn language_error(g: &Formula, lang: Language) -> Option<LineErrorKind> {
    g.first_outside(lang).map(|op| LineErrorKind::OutsideLanguage {
        op: op.keyword().to_string(),
        language: lang,
    })
}

/// `W a & ~b -> W b` built from `a -> b`.
pub fn r1_conclusion(a: &Formula, b: &Formula) -> Formula {
    Formula::imp(
        Formula::and(Formula::w(a.clone()), Formula::not(b.clone())),
        Formula::w(b.clone()),
    )
}

/// `IR a & ~a -> IR b | b` built from `a -> b`.
pub fn rir_conclusion(a: &Formula, b: &Formula) -> Formula {
    Formula::imp(
        Formula::and(Formula::ir(a.clone()), Formula::not(a.clone())),
        Formula::or(Formula::ir(b.clone()), b.clone()),
    )
}

fn check_line(
    sys: &System,
    proof: &Proof,
    line: &ProofLine,
    earlier: &BTreeMap<usize, &Formula>,
    opts: CheckOptions,
) -> Result<(), LineErrorKind> {
    let g = &line.formula;
    if let Some(e) = language_error(g, sys.language) {
        return Err(e);
    }
    let get = |label: usize| earlier.get(&label).copied().ok_or(LineErrorKind::BadReference { label });
    let need_rule = |rule: Rule| {
        if sys.rules.contains(&rule) && !(rule == Rule::Rew && opts.strict) {
            Ok(())
        } else {
            Err(LineErrorKind::RuleNotAvailable {
                rule,
                system: sys.name.to_string(),
            })
        }
    };
    match &line.justification {
        Justification::Axiom { schema: name, sigma } => {
            let s = schema(name).ok_or_else(|| LineErrorKind::UnknownSchema(name.clone()))?;
            if !sys.has_axiom(name) {
                return Err(LineErrorKind::SchemaNotInSystem {
                    schema: name.clone(),
                    system: sys.name.to_string(),
                });
            }
            match sigma {
                Some(sigma) => {
                    let expected = s.instantiate(sigma);
                    if &expected != g {
                        return Err(LineErrorKind::SubstitutionMismatch {
                            schema: name.clone(),
                            expected: expected.to_string(),
                        });
                    }
                }
                None => {
                    if match_schema(s, g).is_none() {
                        return Err(LineErrorKind::UnmatchedSchema(name.clone()));
                    }
                }
            }
        }
        Justification::Tautology => {
            if !is_tautology(g)? {
                return Err(LineErrorKind::NotTautology);
            }
        }
        Justification::Premise => {
            if !proof.premises.contains(g) {
                return Err(LineErrorKind::NotPremise);
            }
        }
        Justification::Mp(i, j) => {
            need_rule(Rule::Mp)?;
            let (a, imp) = (get(*i)?, get(*j)?);
            let expected = Formula::imp(a.clone(), g.clone());
            if *imp != expected {
                return Err(shape(
                    Rule::Mp,
                    format!("line {j} should be {expected}, found {imp}"),
                ));
            }
        }
        Justification::R1(i) | Justification::RiR(i) => {
            let rule = if matches!(line.justification, Justification::R1(_)) {
                Rule::R1
            } else {
                Rule::RiR
            };
            need_rule(rule)?;
            let Formula::Imp(a, b) = get(*i)? else {
                return Err(shape(rule, format!("line {i} is not an implication")));
            };
            let expected = match rule {
                Rule::R1 => r1_conclusion(a, b),
                _ => rir_conclusion(a, b),
            };
            if *g != expected {
                return Err(shape(rule, format!("expected {expected}")));
            }
        }
        Justification::Rew(i) => {
            need_rule(Rule::Rew)?;
            let Formula::Iff(a, b) = get(*i)? else {
                return Err(shape(Rule::Rew, format!("line {i} is not a biconditional")));
            };
            let ok = match g {
                Formula::Iff(x, y) => match (x.as_ref(), y.as_ref()) {
                    (Formula::W(x), Formula::W(y)) | (Formula::Ir(x), Formula::Ir(y)) => {
                        x.as_ref() == a.as_ref() && y.as_ref() == b.as_ref()
                    }
                    _ => false,
                },
                _ => false,
            };
            if !ok {
                return Err(shape(
                    Rule::Rew,
                    format!("expected W({a}) <-> W({b}) or IR({a}) <-> IR({b})"),
                ));
            }
        }
    }
    Ok(())
}

/// Checks every line in order and reports the first rejected one.
pub fn check_proof(proof: &Proof, opts: CheckOptions) -> Result<ProofReport, ProofError> {
    let sys = System::named(&proof.system).ok_or_else(|| ProofError::UnknownSystem(proof.system.clone()))?;
    for p in &proof.premises {
        if let Some(kind) = language_error(p, sys.language) {
            return Err(ProofError::BadPremise {
                premise: p.to_string(),
                kind,
            });
        }
    }
    let mut earlier: BTreeMap<usize, &Formula> = BTreeMap::new();
    let mut last_label = None;
    let mut rules_used = BTreeSet::new();
    for line in &proof.lines {
        let err = |kind| ProofError::Line {
            line: line.index,
            kind,
        };
        if last_label.is_some_and(|l| line.index <= l) {
            return Err(err(LineErrorKind::LabelOrder { label: line.index }));
        }
        check_line(&sys, proof, line, &earlier, opts).map_err(err)?;
        rules_used.insert(match &line.justification {
            Justification::Axiom { schema, .. } => schema.clone(),
            Justification::Tautology => "A0".to_string(),
            Justification::Premise => "premise".to_string(),
            Justification::Mp(..) => Rule::Mp.to_string(),
            Justification::R1(_) => Rule::R1.to_string(),
            Justification::RiR(_) => Rule::RiR.to_string(),
            Justification::Rew(_) => Rule::Rew.to_string(),
        });
        earlier.insert(line.index, &line.formula);
        last_label = Some(line.index);
    }
    let last = proof.last().ok_or(ProofError::Empty)?;
    if let Some(c) = &proof.conclusion {
        if c != last {
            return Err(ProofError::ConclusionMismatch {
                last: last.to_string(),
                declared: c.to_string(),
            });
        }
    }
    Ok(ProofReport {
        system: sys.name.to_string(),
        lines: proof.lines.len(),
        conclusion: last.clone(),
        rules_used,
    })
}

/// A single-line corruption of a proof, expected to be rejected at `line`.
#[derive(Debug, Clone)]
pub struct Mutation {
    pub line: usize,
    pub description: String,
    pub proof: Proof,
}

/// Negates each line in turn and swaps the arguments of each modus ponens.
/// The declared conclusion is dropped so rejection has to come from the
/// mutated line itself.
pub fn line_mutations(p: &Proof) -> Vec<Mutation> {
    let mut out = Vec::new();
    for (k, line) in p.lines.iter().enumerate() {
        let mut neg = p.clone();
        neg.lines[k].formula = Formula::not(line.formula.clone());
        neg.conclusion = None;
        out.push(Mutation {
            line: line.index,
            description: format!("negate line {}", line.index),
            proof: neg,
        });
        if let Justification::Mp(i, j) = line.justification {
            let mut swapped = p.clone();
            swapped.lines[k].justification = Justification::Mp(j, i);
            swapped.conclusion = None;
            out.push(Mutation {
                line: line.index,
                description: format!("swap mp arguments at line {}", line.index),
                proof: swapped,
            });
        }
    }
    out
}
