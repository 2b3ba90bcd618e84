//! Regression checks for the results the library is built around. Each
//! check states its claim, runs it at the requested budget and compares the
//! outcome with the expected one.

use std::fmt;

use anyhow::{anyhow, Result};
use doxa_core::hilbert::{golden_proofs, line_mutations, CheckOptions};
use doxa_core::oracle::{
    agree_up_to, definability_gaps, enumerate_frames, find_aux_countermodel, frame_validity, models_up_to,
    Corpus, SearchBudget,
};
use doxa_core::syntax::f;
use doxa_core::transform::{
    almost_def_chain, check_chain, cone_augment, euclidean_closure, generated_submodel, reachable, ri_to_w,
    verify_preservation, w_to_ri, ChainAxiom,
};
use doxa_core::{find_countermodel, valid_on, Formula, Frame, FrameClass, FrameProperty as P, Language, Model};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    BoundedValid,
    CountermodelExists,
    Chain,
    Preservation,
    Proof,
    PropertyTable,
    Agreement,
    DefinabilityGap,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::BoundedValid => "bounded-valid",
            CheckKind::CountermodelExists => "countermodel-exists",
            CheckKind::Chain => "chain",
            CheckKind::Preservation => "preservation",
            CheckKind::Proof => "proof",
            CheckKind::PropertyTable => "property-table",
            CheckKind::Agreement => "agreement",
            CheckKind::DefinabilityGap => "definability-gap",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    BudgetInsufficient,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::BudgetInsufficient => "budget-insufficient",
        })
    }
}

/// Budget and corpus bounds shared by all checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    pub max_states: usize,
    pub depth: usize,
    pub size: usize,
}

impl Default for Settings {
    fn default() -> Settings {
        Settings {
            max_states: 3,
            depth: 2,
            size: 7,
        }
    }
}

impl Settings {
    fn corpus(&self, lang: Language) -> Corpus {
        Corpus::for_language(lang, &["p".to_string()], self.depth, self.size)
    }
}

/// Whether a check's claim was confirmed, with a one-line account.
pub struct Finding {
    pub passed: bool,
    pub detail: String,
}

type Runner = Box<dyn Fn(&Settings) -> Result<Finding> + Send + Sync>;

pub struct PaperCheck {
    pub id: String,
    pub kind: CheckKind,
    pub claim: String,
    /// Smallest state budget at which the claim can be confirmed. Only
    /// countermodel checks need more than one state.
    pub min_states: usize,
    run: Runner,
}

impl PaperCheck {
    fn new(
        id: impl Into<String>,
        kind: CheckKind,
        claim: impl Into<String>,
        run: impl Fn(&Settings) -> Result<Finding> + Send + Sync + 'static,
    ) -> PaperCheck {
        PaperCheck {
            id: id.into(),
            kind,
            claim: claim.into(),
            min_states: 1,
            run: Box::new(run),
        }
    }

    fn needing(mut self, states: usize) -> PaperCheck {
        self.min_states = states;
        self
    }

    pub fn evaluate(&self, settings: &Settings) -> CheckResult {
        let (status, detail) = if settings.max_states < self.min_states {
            (
                Status::BudgetInsufficient,
                format!("needs {} states, budget is {}", self.min_states, settings.max_states),
            )
        } else {
            match (self.run)(settings) {
                Ok(Finding { passed: true, detail }) => (Status::Pass, detail),
                Ok(Finding { passed: false, detail }) => (Status::Fail, detail),
                Err(e) => (Status::Fail, format!("error: {e:#}")),
            }
        };
        CheckResult {
            id: self.id.clone(),
            kind: self.kind,
            claim: self.claim.clone(),
            status,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: CheckKind,
    pub claim: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub budget_insufficient: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryReport {
    pub max_states: usize,
    pub depth: usize,
    pub size: usize,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl RegistryReport {
    /// No check contradicted its expected outcome. Budget shortfalls are
    /// not contradictions.
    pub fn all_as_expected(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.results.iter().find(|r| r.id == id).map(|r| r.status)
    }
}

impl fmt::Display for RegistryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "budget: {} states, corpus depth {} size {}",
            self.max_states, self.depth, self.size
        )?;
        let width = self.results.iter().map(|r| r.id.len()).max().unwrap_or(0);
        for r in &self.results {
            writeln!(
                f,
                "{:<19} {:<width$}  {:<19} {}",
                r.status.to_string(),
                r.id,
                r.kind.to_string(),
                r.detail
            )?;
        }
        let s = &self.summary;
        write!(
            f,
            "{} checks: {} pass, {} fail, {} budget-insufficient",
            s.checks, s.pass, s.fail, s.budget_insufficient
        )
    }
}

/// Runs the registry, optionally restricted to ids matching a glob. Checks
/// run in parallel; results keep registry order.
pub fn run(settings: &Settings, filter: Option<&str>) -> Result<RegistryReport> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| anyhow!("bad filter: {e}"))?;
    let checks: Vec<PaperCheck> = registry()
        .into_iter()
        .filter(|c| pattern.as_ref().is_none_or(|p| p.matches(&c.id)))
        .collect();
    if checks.is_empty() {
        return Err(anyhow!("no check matches the filter"));
    }
    let results: Vec<CheckResult> = checks.par_iter().map(|c| c.evaluate(settings)).collect();
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        checks: results.len(),
        pass: count(Status::Pass),
        fail: count(Status::Fail),
        budget_insufficient: count(Status::BudgetInsufficient),
    };
    Ok(RegistryReport {
        max_states: settings.max_states,
        depth: settings.depth,
        size: settings.size,
        results,
        summary,
    })
}

// ---------------------------------------------------------------------------
// Check builders

fn class(props: &[P]) -> FrameClass {
    FrameClass::of(props.iter().copied())
}

fn witness_json(model: &Model, state: &str) -> String {
    let file = doxa_core::ModelFile::from_model(model, Some(state));
    serde_json::to_string(&file).expect("model documents serialize")
}

fn bounded_valid(id: &str, claim: &str, text: &'static str, props: &'static [P]) -> PaperCheck {
    PaperCheck::new(id, CheckKind::BoundedValid, claim, move |s| {
        let g = f(text);
        let c = class(props);
        let r = valid_on(&g, &c, &SearchBudget::for_formula(s.max_states, &g))?;
        Ok(match &r.witness {
            None => Finding {
                passed: true,
                detail: format!(
                    "{text} has no countermodel on {c} frames up to {} states ({} models)",
                    s.max_states, r.stats.models
                ),
            },
            Some(w) => Finding {
                passed: false,
                detail: format!("{text} refuted by {}", witness_json(&w.model, &w.state)),
            },
        })
    })
}

fn countermodel(id: &str, claim: &str, text: &'static str, props: &'static [P], min_states: usize) -> PaperCheck {
    PaperCheck::new(id, CheckKind::CountermodelExists, claim, move |s| {
        let g = f(text);
        let c = class(props);
        let r = find_countermodel(&g, &c, &SearchBudget::for_formula(s.max_states, &g))?;
        Ok(match &r.witness {
            Some(w) => {
                let verified = c.contains(w.model.frame()) && !w.model.eval(&w.state, &g)?;
                Finding {
                    passed: verified,
                    detail: format!(
                        "{text} refuted on {c} frames by {}{}",
                        witness_json(&w.model, &w.state),
                        if verified { "" } else { " (witness did not re-verify)" }
                    ),
                }
            }
            None => Finding {
                passed: false,
                detail: format!("no countermodel for {text} up to {} states", s.max_states),
            },
        })
    })
    .needing(min_states)
}

fn s5_pair() -> (Model, Model) {
    let one = Frame::new(&["s"], &[("s", "s")]).expect("valid frame");
    let m = Model::from_names(one, &[("p", &["s"][..])]).expect("valid model");
    let two = Frame::new(&["s'", "t'"], &[("s'", "s'"), ("s'", "t'"), ("t'", "s'"), ("t'", "t'")])
        .expect("valid frame");
    let m2 = Model::from_names(two, &[("p", &["s'"][..])]).expect("valid model");
    (m, m2)
}

/// The single reflexive point and the three-state frame that agree on
/// every `W` formula.
pub fn witness_frames() -> (Frame, Frame) {
    let fr = Frame::new(&["s"], &[("s", "s")]).expect("valid frame");
    let fr2 = Frame::new(
        &["u'", "s'", "t'"],
        &[("u'", "u'"), ("u'", "s'"), ("s'", "s'"), ("s'", "u'"), ("s'", "t'"), ("t'", "t'")],
    )
    .expect("valid frame");
    (fr, fr2)
}

/// The properties the two witness frames differ on.
pub const UNDEFINABLE: [P; 8] = [
    P::Transitive,
    P::Euclidean,
    P::Symmetric,
    P::Narcissistic,
    P::PartiallyNarcissistic,
    P::PartialFunctional,
    P::WeaklyConnected,
    P::WeaklyDirected,
];

fn reflexive_mask(fr: &Frame) -> u64 {
    (0..fr.len()).filter(|&i| fr.relates(i, i)).fold(0, |acc, i| acc | 1 << i)
}

fn preservation(
    id: &str,
    claim: &str,
    props: &'static [P],
    build: fn(&Model) -> Vec<Model>,
    shape: &'static [P],
) -> PaperCheck {
    PaperCheck::new(id, CheckKind::Preservation, claim, move |s| {
        let corpus = s.corpus(Language::FalseBelief);
        let c = class(props);
        let atoms = vec!["p".to_string()];
        let mut pairs = 0;
        for m in models_up_to(s.max_states, &c, &atoms) {
            for n in build(&m) {
                if let Some(p) = shape.iter().find(|p| !n.frame().has(**p)) {
                    return Ok(Finding {
                        passed: false,
                        detail: format!("result not {p}: {}", witness_json(&n, n.frame().name(0))),
                    });
                }
                let r = verify_preservation(&m, &n, None, &corpus)?;
                if !r.preserved() {
                    return Ok(Finding {
                        passed: false,
                        detail: format!("{r} for {}", witness_json(&m, n.frame().name(0))),
                    });
                }
                pairs += 1;
            }
        }
        Ok(Finding {
            passed: pairs > 0,
            detail: format!(
                "{pairs} constructions on {c} models up to {} states agree on {} formulas",
                s.max_states,
                corpus.len()
            ),
        })
    })
}

fn closure_of(m: &Model) -> Vec<Model> {
    vec![euclidean_closure(m)]
}

fn generated_from_each_state(m: &Model) -> Vec<Model> {
    m.frame()
        .names()
        .iter()
        .map(|s| generated_submodel(m, s).expect("state of the model"))
        .collect()
}

fn cones_at_roots(m: &Model) -> Vec<Model> {
    let fr = m.frame();
    (0..fr.len())
        .filter(|&s| reachable(fr, s) == fr.all())
        .map(|s| cone_augment(m, fr.name(s)).expect("state of the model"))
        .collect()
}

fn translation(id: &str, claim: &str, from: Language, step: fn(&Formula) -> Result<Formula>) -> PaperCheck {
    PaperCheck::new(id, CheckKind::Agreement, claim, move |s| {
        let corpus = s.corpus(from);
        let translated: Vec<Formula> = corpus.formulas().map(step).collect::<Result<_>>()?;
        let atoms = vec!["p".to_string()];
        let mut models = 0;
        for m in models_up_to(s.max_states, &FrameClass::all(), &atoms) {
            let ext = corpus.model_extensions(&m);
            for (k, t) in translated.iter().enumerate() {
                if m.extension(t) != ext[k] {
                    return Ok(Finding {
                        passed: false,
                        detail: format!(
                            "{} and {t} differ on {}",
                            corpus.entries()[k].formula,
                            witness_json(&m, m.frame().name(0))
                        ),
                    });
                }
            }
            models += 1;
        }
        Ok(Finding {
            passed: true,
            detail: format!(
                "{} formulas keep their truth sets on {models} models up to {} states",
                corpus.len(),
                s.max_states
            ),
        })
    })
}

fn golden_check(name: String) -> PaperCheck {
    let id = format!("proof-{name}");
    let claim = format!("golden proof {name} is accepted");
    PaperCheck::new(id, CheckKind::Proof, claim, move |_| {
        let g = golden_proofs()
            .into_iter()
            .find(|g| g.name == name)
            .ok_or_else(|| anyhow!("missing golden proof {name}"))?;
        Ok(match g.check(CheckOptions::default()) {
            Ok(r) => Finding {
                passed: true,
                detail: format!("accepted in {}: {} lines", r.system, r.lines),
            },
            Err(e) => Finding {
                passed: false,
                detail: format!("rejected: {e}"),
            },
        })
    })
}

// ---------------------------------------------------------------------------
// The registry

const A4: &str = "W q & W(p & q) -> W((W r -> W(p & r)) & q)";
const A5: &str = "W q & ~W(p & q) -> W((W r -> ~W(p & r)) & q)";
const STRONGER_A4: &str = "W q -> W((W r -> W(p & r)) & q)";
const AQ: &str = "W p -> W(~W q & p)";
const AB: &str = "W q & ~p -> W((W r -> ~W(p & r)) & q)";
const RI_CON: &str = "IR p & ~p & IR q & ~q -> IR(p & q)";
const RI_4: &str = "IR q & ~q & IR(p & q) & ~(p & q) -> IR((IR r & ~r -> IR(p & r) & ~(p & r)) & q) & \
                    ~((IR r & ~r -> IR(p & r) & ~(p & r)) & q)";

/// Every check in registry order.
pub fn registry() -> Vec<PaperCheck> {
    use CheckKind as K;
    let mut out = vec![
        bounded_valid(
            "prop-2.4",
            "almost definability: W q -> (B p <-> W(p & q)) holds on all frames",
            "W q -> (B p <-> W(p & q))",
            &[],
        ),
        PaperCheck::new(
            "fact-2.5",
            K::BoundedValid,
            "every W formula is false at every reflexive state",
            |s| {
                let corpus = s.corpus(Language::FalseBelief);
                let ws: Vec<usize> = (0..corpus.len())
                    .filter(|&k| matches!(corpus.entries()[k].formula, Formula::W(_)))
                    .collect();
                let atoms = vec!["p".to_string()];
                let mut models = 0;
                for m in models_up_to(s.max_states, &FrameClass::all(), &atoms) {
                    let refl = reflexive_mask(m.frame());
                    let ext = corpus.model_extensions(&m);
                    if let Some(&k) = ws.iter().find(|&&k| ext[k] & refl != 0) {
                        return Ok(Finding {
                            passed: false,
                            detail: format!(
                                "{} true at a reflexive state of {}",
                                corpus.entries()[k].formula,
                                witness_json(&m, m.frame().name(0))
                            ),
                        });
                    }
                    models += 1;
                }
                Ok(Finding {
                    passed: !ws.is_empty(),
                    detail: format!(
                        "{} W formulas false at reflexive states of {models} models up to {} states",
                        ws.len(),
                        s.max_states
                    ),
                })
            },
        ),
        PaperCheck::new(
            "prop-2.6-reflexive-frames",
            K::Agreement,
            "all reflexive frames validate the same W formulas",
            |s| {
                let corpus = s.corpus(Language::FalseBelief);
                let reflexive = class(&[P::Reflexive]);
                let mut first: Option<Vec<bool>> = None;
                let mut frames = 0;
                for fr in enumerate_frames(s.max_states).filter(|fr| reflexive.contains(fr)) {
                    let v = frame_validity(&fr, &corpus)?;
                    match &first {
                        None => first = Some(v),
                        Some(v0) => {
                            if let Some(k) = (0..v.len()).find(|&k| v[k] != v0[k]) {
                                return Ok(Finding {
                                    passed: false,
                                    detail: format!(
                                        "{} separates reflexive frames {:?}",
                                        corpus.entries()[k].formula,
                                        fr.edges()
                                    ),
                                });
                            }
                        }
                    }
                    frames += 1;
                }
                Ok(Finding {
                    passed: true,
                    detail: format!(
                        "{frames} reflexive frames up to {} states agree on {} formulas",
                        s.max_states,
                        corpus.len()
                    ),
                })
            },
        ),
        PaperCheck::new(
            "prop-2.7-agreement",
            K::Agreement,
            "the one-point and two-point S5 models agree on every W formula",
            |s| {
                let (m, m2) = s5_pair();
                let corpus = Corpus::for_language(Language::FalseBelief, &["p".to_string()], s.depth, s.size.max(9));
                let a = agree_up_to(&m, "s", &m2, "s'", &corpus)?;
                Ok(Finding {
                    passed: a.agree,
                    detail: match a.distinguishing {
                        None => format!("agree on {} formulas", a.checked),
                        Some(g) => format!("separated by {g}"),
                    },
                })
            },
        ),
        PaperCheck::new(
            "prop-2.7-separation",
            K::Agreement,
            "the same two models are separated by B p",
            |_| {
                let (m, m2) = s5_pair();
                let g = f("B p");
                let (a, b) = (m.eval("s", &g)?, m2.eval("s'", &g)?);
                Ok(Finding {
                    passed: a && !b,
                    detail: format!("B p is {a} at s and {b} at s'"),
                })
            },
        ),
        bounded_valid(
            "prop-2.8-narcissistic",
            "on narcissistic frames B p, FI p and p coincide",
            "(B p <-> p) & (FI p <-> p)",
            &[P::Narcissistic],
        ),
        PaperCheck::new(
            "prop-2.9-property-table",
            K::PropertyTable,
            "the witness frames differ on all eight properties",
            |_| {
                let (fr, fr2) = witness_frames();
                let bad: Vec<&str> = UNDEFINABLE
                    .iter()
                    .filter(|p| !(fr.has(**p) && !fr2.has(**p)))
                    .map(|p| p.name())
                    .collect();
                Ok(Finding {
                    passed: bad.is_empty(),
                    detail: if bad.is_empty() {
                        format!("{} properties hold on the point and fail on the three-state frame", UNDEFINABLE.len())
                    } else {
                        format!("not separated: {}", bad.join(", "))
                    },
                })
            },
        ),
        PaperCheck::new(
            "prop-2.9-definability-gap",
            K::DefinabilityGap,
            "no W formula separates the witness frames by frame validity",
            |s| {
                let (fr, fr2) = witness_frames();
                let corpus = s.corpus(Language::FalseBelief);
                let gaps = definability_gaps(&fr, &fr2, &UNDEFINABLE, &corpus)?;
                let ok = gaps.iter().all(|g| g.is_undefinability_evidence());
                Ok(Finding {
                    passed: ok,
                    detail: match gaps.first().and_then(|g| g.separating.clone()) {
                        None => format!("frame validity agrees on {} formulas", corpus.len()),
                        Some(g) => format!("separated by {g}"),
                    },
                })
            },
        ),
        bounded_valid("A1-all-sound", "A1 holds on all frames", "W p -> ~p", &[]),
        bounded_valid("A2-all-sound", "A2 holds on all frames", "W p & W q -> W(p & q)", &[]),
        bounded_valid("AD-serial-sound", "AD holds on serial frames", "~W F", &[P::Serial]),
        bounded_valid("AT-reflexive-sound", "~W p holds on reflexive frames", "~W p", &[P::Reflexive]),
        bounded_valid("A4-transitive-sound", "A4 holds on transitive frames", A4, &[P::Transitive]),
        bounded_valid("A5-euclidean-sound", "A5 holds on Euclidean frames", A5, &[P::Euclidean]),
        bounded_valid("A4-euclidean-sound", "A4 holds on Euclidean frames", A4, &[P::Euclidean]),
        bounded_valid(
            "strongerA4-euclidean-sound",
            "the stronger A4 holds on Euclidean frames",
            STRONGER_A4,
            &[P::Euclidean],
        ),
        bounded_valid("AQ-euclidean-sound", "A^Q holds on Euclidean frames", AQ, &[P::Euclidean]),
        bounded_valid("AB-symmetric-sound", "AB holds on symmetric frames", AB, &[P::Symmetric]),
        bounded_valid("RI-Equ-all-sound", "RI-Equ holds on all frames", "IR p <-> IR ~p", &[]),
        bounded_valid("RI-Con-all-sound", "RI-Con holds on all frames", RI_CON, &[]),
        bounded_valid(
            "RI-D-serial-transitive-sound",
            "RI-D holds on serial transitive frames",
            "~IR F",
            &[P::Serial, P::Transitive],
        ),
        bounded_valid(
            "RI-4-serial-transitive-sound",
            "RI-4 holds on serial transitive frames",
            RI_4,
            &[P::Serial, P::Transitive],
        ),
        countermodel(
            "strongerA4-transitive-invalid",
            "the stronger A4 fails on some transitive frame",
            STRONGER_A4,
            &[P::Transitive],
            3,
        ),
        countermodel("AD-all-invalid", "AD fails on some frame", "~W F", &[], 1),
        countermodel("AT-all-invalid", "~W p fails on some frame", "~W p", &[], 1),
        countermodel("AQ-all-invalid", "A^Q fails on some frame", AQ, &[], 2),
    ];

    for (ax, id) in [
        (ChainAxiom::Four, "chain-A4"),
        (ChainAxiom::Five, "chain-A5"),
        (ChainAxiom::B, "chain-AB"),
    ] {
        out.push(PaperCheck::new(
            id,
            K::Chain,
            format!("each step of the {} is an equivalence", ax.chain_name()),
            move |s| {
                let r = check_chain(&almost_def_chain(ax), s.max_states)?;
                let passing = r.steps.iter().filter(|st| st.report.is_valid_up_to_budget()).count();
                Ok(Finding {
                    passed: r.all_pass(),
                    detail: format!(
                        "{passing} of {} steps countermodel-free up to {} states, final line {}",
                        r.steps.len(),
                        s.max_states,
                        if r.final_in_language { "in L(W)" } else { "outside L(W)" }
                    ),
                })
            },
        ));
    }

    out.extend([
        PaperCheck::new(
            "closure-euclidean",
            K::Preservation,
            "the Euclidean closure of any frame is Euclidean",
            |s| {
                let mut frames = 0;
                for fr in enumerate_frames(s.max_states) {
                    let m = euclidean_closure(&Model::new(fr, Default::default())?);
                    if !m.frame().has(P::Euclidean) {
                        return Ok(Finding {
                            passed: false,
                            detail: format!("closure not Euclidean: {:?}", m.frame().edges()),
                        });
                    }
                    frames += 1;
                }
                Ok(Finding {
                    passed: true,
                    detail: format!("{frames} frames up to {} states", s.max_states),
                })
            },
        ),
        preservation(
            "closure-preservation",
            "the Euclidean closure of a secondarily reflexive model preserves every W formula",
            &[P::SecondarilyReflexive],
            closure_of,
            &[P::Euclidean],
        ),
        preservation(
            "generated-preservation",
            "generated submodels preserve every W formula",
            &[],
            generated_from_each_state,
            &[],
        ),
        preservation(
            "cone-preservation",
            "cone augmentation of a rooted transitive secondarily reflexive model is transitive, \
             Euclidean and preserves every W formula",
            &[P::Transitive, P::SecondarilyReflexive],
            cones_at_roots,
            &[P::Transitive, P::Euclidean],
        ),
    ]);

    for g in golden_proofs() {
        out.push(golden_check(g.name));
    }
    out.extend([
        PaperCheck::new(
            "proof-mutation-sweep",
            K::Proof,
            "every single-line corruption of a golden proof is rejected at that line",
            |_| {
                let mut count = 0;
                for g in golden_proofs() {
                    for m in line_mutations(&g.proof()) {
                        let e = doxa_core::check_proof(&m.proof, CheckOptions::default()).err();
                        if e.as_ref().and_then(|e| e.line()) != Some(m.line) {
                            return Ok(Finding {
                                passed: false,
                                detail: format!("{}: {} not rejected at that line", g.name, m.description),
                            });
                        }
                        count += 1;
                    }
                }
                Ok(Finding {
                    passed: count > 0,
                    detail: format!("{count} mutations rejected"),
                })
            },
        ),
        PaperCheck::new(
            "proof-aq_in_k5w-strict",
            K::Proof,
            "without replacement of equivalents the A^Q proof is rejected",
            |_| {
                let g = golden_proofs()
                    .into_iter()
                    .find(|g| g.name == "aq_in_k5w")
                    .ok_or_else(|| anyhow!("missing golden proof aq_in_k5w"))?;
                Ok(match g.check(CheckOptions { strict: true }) {
                    Ok(_) => Finding {
                        passed: false,
                        detail: "accepted in strict mode".into(),
                    },
                    Err(e) => Finding {
                        passed: e.to_string().contains("REW"),
                        detail: format!("rejected: {e}"),
                    },
                })
            },
        ),
    ]);

    out.extend([
        aux_valid(
            "aux-semantics-RI-Con",
            "RI-Con holds when IR g is read as g",
            RI_CON,
        ),
        aux_valid(
            "aux-semantics-RI-R",
            "conclusions of the ignorance rule hold when IR g is read as g",
            "IR p & ~p -> IR q | q",
        ),
        PaperCheck::new(
            "aux-semantics-RI-Equ",
            K::CountermodelExists,
            "RI-Equ fails when IR g is read as g",
            |s| {
                let g = f("IR p <-> IR ~p");
                let r = find_aux_countermodel(&g, &SearchBudget::for_formula(s.max_states, &g))?;
                Ok(match &r.witness {
                    Some(w) => Finding {
                        passed: !w.model.eval_aux(&w.state, &g)?,
                        detail: format!("refuted by {}", witness_json(&w.model, &w.state)),
                    },
                    None => Finding {
                        passed: false,
                        detail: format!("no auxiliary countermodel up to {} states", s.max_states),
                    },
                })
            },
        ),
        bounded_valid(
            "interdefinability-W-by-IR",
            "W p is IR p & ~p",
            "W p <-> IR p & ~p",
            &[],
        ),
        bounded_valid(
            "interdefinability-IR-by-W",
            "IR p is W p | W ~p",
            "IR p <-> W p | W ~p",
            &[],
        ),
        translation(
            "interdefinability-w2ri",
            "translating W formulas into IR formulas preserves truth",
            Language::FalseBelief,
            |g| Ok(w_to_ri(g)?),
        ),
        translation(
            "interdefinability-ri2w",
            "translating IR formulas into W formulas preserves truth",
            Language::RadicalIgnorance,
            |g| Ok(ri_to_w(g)?),
        ),
        translation(
            "interdefinability-roundtrip",
            "translating there and back preserves truth",
            Language::FalseBelief,
            |g| Ok(ri_to_w(&w_to_ri(g)?)?),
        ),
    ]);
    out
}

fn aux_valid(id: &str, claim: &str, text: &'static str) -> PaperCheck {
    PaperCheck::new(id, CheckKind::BoundedValid, claim, move |s| {
        let g = f(text);
        let r = find_aux_countermodel(&g, &SearchBudget::for_formula(s.max_states, &g))?;
        Ok(match &r.witness {
            None => Finding {
                passed: true,
                detail: format!(
                    "{text} holds under the auxiliary reading up to {} states ({} models)",
                    s.max_states, r.stats.models
                ),
            },
            Some(w) => Finding {
                passed: false,
                detail: format!("{text} refuted by {}", witness_json(&w.model, &w.state)),
            },
        })
    })
}
