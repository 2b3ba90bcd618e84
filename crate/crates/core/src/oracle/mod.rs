//! Bounded exhaustive search over small frames and models.
//!
//! A countermodel is conclusive. Finding none only says that no frame with
//! at most `max_states` states refutes the query; reports always carry the
//! budget they were computed under.

mod corpus;
pub(crate) mod program;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::semantics::{bit, members, Frame, FrameClass, FrameProperty, Model, ModelFile, StateSet};
use crate::syntax::Formula;

pub use corpus::{Corpus, CorpusEntry, CorpusOp};
use program::Program;

/// Largest frame size the enumerator accepts (2^(k*k) relations per size).
pub const MAX_ENUM_STATES: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Model(#[from] crate::semantics::ModelError),
    #[error("budget atoms {budget:?} do not cover the formula's atoms {missing:?}")]
    MissingAtoms {
        budget: Vec<String>,
        missing: Vec<String>,
    },
    #[error("max_states must be between 1 and {MAX_ENUM_STATES}, got {0}")]
    BadStateBudget(usize),
    #[error("{states} states x {atoms} atoms is too many valuations to enumerate")]
    TooManyValuations { states: usize, atoms: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_states: usize,
    pub atoms: Vec<String>,
    pub max_modal_depth: usize,
    pub max_size: usize,
}

impl SearchBudget {
    pub fn new(max_states: usize, atoms: &[&str]) -> SearchBudget {
        SearchBudget {
            max_states,
            atoms: atoms.iter().map(|a| a.to_string()).collect(),
            max_modal_depth: 2,
            max_size: 7,
        }
    }

    pub fn with_corpus_bounds(mut self, max_modal_depth: usize, max_size: usize) -> SearchBudget {
        self.max_modal_depth = max_modal_depth;
        self.max_size = max_size;
        self
    }

    /// Budget whose atoms are exactly those of `f`.
    pub fn for_formula(max_states: usize, f: &Formula) -> SearchBudget {
        SearchBudget {
            atoms: f.atoms().into_iter().collect(),
            ..SearchBudget::new(max_states, &[])
        }
    }

    fn check_states(&self) -> Result<(), OracleError> {
        if self.max_states == 0 || self.max_states > MAX_ENUM_STATES {
            return Err(OracleError::BadStateBudget(self.max_states));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Enumeration

/// All labeled frames on `s1..sk`, relation bit `i*k + j` encoding `si R sj`,
/// in increasing order of the relation bitmask.
pub fn frames_of_size(k: usize) -> impl Iterator<Item = Frame> {
    assert!((1..=MAX_ENUM_STATES).contains(&k));
    let row = (1u64 << k) - 1;
    (0..1u64 << (k * k)).map(move |mask| {
        Frame::from_masks((0..k).map(|i| (mask >> (i * k)) & row).collect())
    })
}

/// Frames of every size `1..=n`, smaller sizes first.
pub fn enumerate_frames(n: usize) -> impl Iterator<Item = Frame> {
    (1..=n).flat_map(frames_of_size)
}

/// Atom extensions for valuation number `v`: atom `j` gets bits
/// `j*k .. (j+1)*k` of `v`.
fn decode_valuation(v: u64, k: usize, n_atoms: usize, out: &mut Vec<StateSet>) {
    let row = (1u64 << k) - 1;
    out.clear();
    out.extend((0..n_atoms).map(|j| (v >> (j * k)) & row));
}

fn valuation_count(k: usize, n_atoms: usize) -> Result<u64, OracleError> {
    if k * n_atoms > 30 {
        return Err(OracleError::TooManyValuations {
            states: k,
            atoms: n_atoms,
        });
    }
    Ok(1u64 << (k * n_atoms))
}

/// All valuations of `atoms` over `fr`; `2^(|S|*|atoms|)` models.
pub fn enumerate_models<'a>(
    fr: &'a Frame,
    atoms: &'a [String],
) -> Result<impl Iterator<Item = Model> + 'a, OracleError> {
    let k = fr.len();
    let count = valuation_count(k, atoms.len())?;
    Ok((0..count).map(move |v| {
        let mut sets = Vec::new();
        decode_valuation(v, k, atoms.len(), &mut sets);
        let val = atoms.iter().cloned().zip(sets).collect();
        Model::new(fr.clone(), val).expect("enumerated atoms are valid")
    }))
}

/// Every pointed-model-free model up to `n` states over `atoms`, restricted
/// to frames in `class`. Handy for property tests.
pub fn models_up_to<'a>(
    n: usize,
    class: &'a FrameClass,
    atoms: &'a [String],
) -> impl Iterator<Item = Model> + 'a {
    enumerate_frames(n)
        .filter(move |fr| class.contains(fr))
        .flat_map(move |fr| {
            let k = fr.len();
            let count = valuation_count(k, atoms.len()).expect("small budget");
            (0..count).map(move |v| {
                let mut sets = Vec::new();
                decode_valuation(v, k, atoms.len(), &mut sets);
                Model::new(fr.clone(), atoms.iter().cloned().zip(sets).collect())
                    .expect("enumerated atoms are valid")
            })
        })
}

// ---------------------------------------------------------------------------
// Verdicts

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoCountermodelUpToBudget,
    CountermodelFound,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::NoCountermodelUpToBudget => "no-countermodel-up-to-budget",
            Verdict::CountermodelFound => "countermodel-found",
        })
    }
}

/// A pointed model refuting a query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub model: Model,
    pub state: String,
}

impl Witness {
    pub fn to_file(&self) -> ModelFile {
        ModelFile::from_model(&self.model, Some(&self.state))
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub frames: u64,
    pub models: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictReport {
    pub query: String,
    pub class: String,
    pub max_states: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: SearchStats,
}

impl VerdictReport {
    pub fn is_valid_up_to_budget(&self) -> bool {
        self.verdict == Verdict::NoCountermodelUpToBudget
    }

    pub fn found_countermodel(&self) -> bool {
        self.verdict == Verdict::CountermodelFound
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "query:   {}", self.query)?;
        writeln!(f, "class:   {}", self.class)?;
        match &self.witness {
            None => writeln!(
                f,
                "verdict: {} (frames <= {} states: {}, models: {})",
                self.verdict, self.max_states, self.stats.frames, self.stats.models
            ),
            Some(w) => {
                writeln!(
                    f,
                    "verdict: {} (after {} frames, {} models)",
                    self.verdict, self.stats.frames, self.stats.models
                )?;
                writeln!(f, "witness:")?;
                writeln!(f, "{}", w.to_file().to_json())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Validity search

fn search_countermodel(
    f: &Formula,
    class: &FrameClass,
    budget: &SearchBudget,
) -> Result<VerdictReport, OracleError> {
    budget.check_states()?;
    let f_atoms = f.atoms();
    let missing: Vec<String> = f_atoms
        .iter()
        .filter(|a| !budget.atoms.contains(a))
        .cloned()
        .collect();
    if !missing.is_empty() {
        return Err(OracleError::MissingAtoms {
            budget: budget.atoms.clone(),
            missing,
        });
    }
    // valuations range over the formula's own atoms, in budget order
    let atoms: Vec<String> = budget
        .atoms
        .iter()
        .filter(|a| f_atoms.contains(*a))
        .cloned()
        .collect();
    let mut program = Program::default();
    let root = program.compile(f, &atoms);

    let mut stats = SearchStats::default();
    let mut sets = Vec::with_capacity(atoms.len());
    let mut scratch = Vec::with_capacity(program.len());
    for k in 1..=budget.max_states {
        let count = valuation_count(k, atoms.len())?;
        for fr in frames_of_size(k) {
            if !class.contains(&fr) {
                continue;
            }
            stats.frames += 1;
            let all = fr.all();
            for v in 0..count {
                stats.models += 1;
                decode_valuation(v, k, atoms.len(), &mut sets);
                program.run(&fr, &sets, &mut scratch);
                let false_at = all & !scratch[root];
                if false_at != 0 {
                    let state = false_at.trailing_zeros() as usize;
                    let val = atoms.iter().cloned().zip(sets.iter().copied()).collect();
                    let model = Model::new(fr.clone(), val).expect("enumerated atoms are valid");
                    assert!(
                        !model.eval_at(state, f),
                        "compiled search and direct evaluation disagree on {f}"
                    );
                    let state = model.frame().name(state).to_string();
                    return Ok(VerdictReport {
                        query: f.to_string(),
                        class: class.to_string(),
                        max_states: budget.max_states,
                        verdict: Verdict::CountermodelFound,
                        witness: Some(Witness { model, state }),
                        stats,
                    });
                }
            }
        }
    }
    Ok(VerdictReport {
        query: f.to_string(),
        class: class.to_string(),
        max_states: budget.max_states,
        verdict: Verdict::NoCountermodelUpToBudget,
        witness: None,
        stats,
    })
}

/// Bounded validity of `f` on the frames of `class`.
pub fn valid_on(
    f: &Formula,
    class: &FrameClass,
    budget: &SearchBudget,
) -> Result<VerdictReport, OracleError> {
    search_countermodel(f, class, budget)
}

/// Searches for a pointed model refuting `f`. The report is the same object
/// `valid_on` returns; callers read the verdict the other way round.
pub fn find_countermodel(
    f: &Formula,
    class: &FrameClass,
    budget: &SearchBudget,
) -> Result<VerdictReport, OracleError> {
    search_countermodel(f, class, budget)
}

/// Bounded search for a pointed model falsifying `f` under the auxiliary
/// semantics, where `IR g` is read as `g`. Only formulas of L(IR) qualify.
pub fn find_aux_countermodel(f: &Formula, budget: &SearchBudget) -> Result<VerdictReport, OracleError> {
    if let Some(op) = f.first_outside(crate::syntax::Language::RadicalIgnorance) {
        return Err(crate::semantics::ModelError::OutsideLanguage {
            formula: f.to_string(),
            language: crate::syntax::Language::RadicalIgnorance,
            op: op.keyword(),
        }
        .into());
    }
    let stripped = strip_ignorance(f);
    let mut report = search_countermodel(&stripped, &FrameClass::all(), budget)?;
    if let Some(w) = &report.witness {
        assert!(!w.model.eval_aux(&w.state, f)?, "auxiliary witness does not refute {f}");
    }
    report.query = f.to_string();
    Ok(report)
}

fn strip_ignorance(f: &Formula) -> Formula {
    let r = strip_ignorance;
    match f {
        Formula::Ir(a) => r(a),
        Formula::Not(a) => Formula::not(r(a)),
        Formula::And(a, b) => Formula::and(r(a), r(b)),
        Formula::Or(a, b) => Formula::or(r(a), r(b)),
        Formula::Imp(a, b) => Formula::imp(r(a), r(b)),
        Formula::Iff(a, b) => Formula::iff(r(a), r(b)),
        _ => f.clone(),
    }
}

// ---------------------------------------------------------------------------
// Agreement and definability

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub agree: bool,
    pub checked: usize,
    pub distinguishing: Option<String>,
}

/// Compares two pointed models on every corpus formula; the first formula
/// (in corpus order) with different truth values is reported.
pub fn agree_up_to(m1: &Model, s1: &str, m2: &Model, s2: &str, corpus: &Corpus) -> Result<Agreement, crate::semantics::ModelError> {
    let i1 = bit(m1.frame().index(s1)?);
    let i2 = bit(m2.frame().index(s2)?);
    let e1 = corpus.model_extensions(m1);
    let e2 = corpus.model_extensions(m2);
    let first = e1
        .iter()
        .zip(&e2)
        .position(|(a, b)| (a & i1 != 0) != (b & i2 != 0));
    Ok(Agreement {
        agree: first.is_none(),
        checked: corpus.len(),
        distinguishing: first.map(|i| corpus.entries()[i].formula.to_string()),
    })
}

/// Frame validity of every corpus formula: valid iff true at all states under
/// every valuation of the corpus atoms.
pub fn frame_validity(fr: &Frame, corpus: &Corpus) -> Result<Vec<bool>, OracleError> {
    let k = fr.len();
    let n_atoms = corpus.atoms().len();
    let count = valuation_count(k, n_atoms)?;
    let all = fr.all();
    let mut valid = vec![true; corpus.len()];
    let mut sets = Vec::new();
    let mut ext = Vec::new();
    for v in 0..count {
        decode_valuation(v, k, n_atoms, &mut sets);
        corpus.extensions(fr, &sets, &mut ext);
        for (ok, e) in valid.iter_mut().zip(&ext) {
            *ok &= *e == all;
        }
    }
    Ok(valid)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub property: FrameProperty,
    pub first_has: bool,
    pub second_has: bool,
    /// The frames disagree on the property.
    pub differ: bool,
    /// Corpus formulas compared.
    pub checked: usize,
    /// First corpus formula valid on exactly one of the frames.
    pub separating: Option<String>,
}

impl GapReport {
    /// The pair is evidence that no corpus formula defines the property.
    pub fn is_undefinability_evidence(&self) -> bool {
        self.differ && self.separating.is_none()
    }

    /// Both frames agree on the property, so the pair says nothing.
    pub fn is_degenerate(&self) -> bool {
        !self.differ
    }
}

pub fn definability_gap(
    fr1: &Frame,
    fr2: &Frame,
    property: FrameProperty,
    corpus: &Corpus,
) -> Result<GapReport, OracleError> {
    Ok(definability_gaps(fr1, fr2, &[property], corpus)?.remove(0))
}

/// `definability_gap` for several properties, sharing one validity pass.
pub fn definability_gaps(
    fr1: &Frame,
    fr2: &Frame,
    properties: &[FrameProperty],
    corpus: &Corpus,
) -> Result<Vec<GapReport>, OracleError> {
    let v1 = frame_validity(fr1, corpus)?;
    let v2 = frame_validity(fr2, corpus)?;
    let separating = v1
        .iter()
        .zip(&v2)
        .position(|(a, b)| a != b)
        .map(|i| corpus.entries()[i].formula.to_string());
    Ok(properties
        .iter()
        .map(|&p| {
            let (a, b) = (fr1.has(p), fr2.has(p));
            GapReport {
                property: p,
                first_has: a,
                second_has: b,
                differ: a != b,
                checked: corpus.len(),
                separating: separating.clone(),
            }
        })
        .collect())
}

/// Per-state truth table of a model on named atoms, for debugging output.
pub fn describe_valuation(m: &Model) -> BTreeMap<String, Vec<String>> {
    m.valuation()
        .iter()
        .map(|(a, set)| {
            (
                a.clone(),
                members(*set).map(|i| m.frame().name(i).to_string()).collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::FrameProperty as P;
    use crate::syntax::{f, Language};

    fn atoms(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn frame_counts() {
        assert_eq!(enumerate_frames(1).count(), 2);
        assert_eq!(enumerate_frames(2).count(), 18);
        assert_eq!(frames_of_size(3).count(), 512);
        let first: Vec<_> = enumerate_frames(1).map(|fr| fr.edges().len()).collect();
        assert_eq!(first, vec![0, 1]);
    }

    #[test]
    fn model_counts() {
        let one = Frame::new(&["s"], &[]).unwrap();
        assert_eq!(enumerate_models(&one, &atoms(&["p"])).unwrap().count(), 2);
        let two = Frame::new(&["a", "b"], &[]).unwrap();
        assert_eq!(enumerate_models(&two, &atoms(&["p", "q"])).unwrap().count(), 16);
        let three = Frame::new(&["a", "b", "c"], &[]).unwrap();
        assert_eq!(enumerate_models(&three, &atoms(&["p", "q", "r"])).unwrap().count(), 512);
    }

    #[test]
    fn a1_has_no_small_countermodel() {
        let r = valid_on(&f("W p -> ~p"), &FrameClass::all(), &SearchBudget::new(3, &["p"])).unwrap();
        assert!(r.is_valid_up_to_budget());
        assert!(r.witness.is_none());
        assert_eq!(r.stats.frames, 2 + 16 + 512);
    }

    #[test]
    fn seriality_axiom_fails_on_a_dead_end() {
        let r = valid_on(&f("~W F"), &FrameClass::all(), &SearchBudget::new(1, &[])).unwrap();
        assert!(r.found_countermodel());
        let w = r.witness.unwrap();
        assert_eq!(w.model.frame().edges().len(), 0);
        assert!(!w.model.eval(&w.state, &f("~W F")).unwrap());
    }

    #[test]
    fn a5_instance_holds_on_euclidean_frames() {
        let a5 = f("W q & ~W(p & q) -> W((W r -> ~W(p & r)) & q)");
        let r = valid_on(&a5, &FrameClass::of([P::Euclidean]), &SearchBudget::new(3, &["p", "q", "r"]))
            .unwrap();
        assert!(r.is_valid_up_to_budget());
    }

    #[test]
    fn stronger_a4_fails_on_transitive_frames() {
        let g = f("W q -> W((W r -> W(p & r)) & q)");
        let class = FrameClass::of([P::Transitive]);
        let r = find_countermodel(&g, &class, &SearchBudget::new(3, &["p", "q", "r"])).unwrap();
        assert!(r.found_countermodel());
        let w = r.witness.as_ref().unwrap();
        assert!(class.contains(w.model.frame()));
        assert!(!w.model.eval(&w.state, &g).unwrap());

        // the hand-built witness refutes it as well
        let fr = Frame::new(&["s", "t", "u"], &[("s", "t"), ("t", "u"), ("s", "u")]).unwrap();
        let m = Model::from_names(fr, &[("q", &["t", "u"][..]), ("r", &["u"][..])]).unwrap();
        assert!(m.frame().has(P::Transitive));
        assert!(!m.eval("s", &g).unwrap());
    }

    #[test]
    fn aq_fails_somewhere() {
        let r = find_countermodel(
            &f("W p -> W(~W q & p)"),
            &FrameClass::all(),
            &SearchBudget::new(3, &["p", "q"]),
        )
        .unwrap();
        assert!(r.found_countermodel());
    }

    #[test]
    fn auxiliary_reading_refutes_only_the_symmetry_axiom() {
        let b = SearchBudget::new(3, &["p", "q"]);
        let equ = find_aux_countermodel(&f("IR p <-> IR ~p"), &b).unwrap();
        assert!(equ.found_countermodel());
        assert_eq!(equ.query, "IR p <-> IR ~p");
        let con = find_aux_countermodel(&f("IR p & ~p & IR q & ~q -> IR(p & q)"), &b).unwrap();
        assert!(con.is_valid_up_to_budget());
        assert!(find_aux_countermodel(&f("W p"), &b).is_err());
    }

    #[test]
    fn trivial_tautology_survives() {
        let r = find_countermodel(&f("p -> p"), &FrameClass::all(), &SearchBudget::new(2, &["p"])).unwrap();
        assert!(r.is_valid_up_to_budget());
    }

    #[test]
    fn budget_errors() {
        let e = valid_on(&f("p & q"), &FrameClass::all(), &SearchBudget::new(2, &["p"])).unwrap_err();
        assert_eq!(
            e,
            OracleError::MissingAtoms {
                budget: atoms(&["p"]),
                missing: atoms(&["q"])
            }
        );
        assert_eq!(
            valid_on(&f("p"), &FrameClass::all(), &SearchBudget::new(0, &["p"])).unwrap_err(),
            OracleError::BadStateBudget(0)
        );
    }

    #[test]
    fn witnesses_are_monotone_in_the_budget() {
        let g = f("W p -> W(~W q & p)");
        let at = |n| {
            find_countermodel(&g, &FrameClass::all(), &SearchBudget::new(n, &["p", "q"]))
                .unwrap()
                .witness
        };
        let w2 = at(2);
        assert!(w2.is_some());
        assert_eq!(w2, at(3));
        assert_eq!(w2, at(4));
    }

    fn s5_models() -> (Model, Model) {
        let m = Model::from_names(Frame::new(&["s"], &[("s", "s")]).unwrap(), &[("p", &["s"][..])]).unwrap();
        let fr = Frame::new(
            &["s'", "t'"],
            &[("s'", "s'"), ("s'", "t'"), ("t'", "s'"), ("t'", "t'")],
        )
        .unwrap();
        let m2 = Model::from_names(fr, &[("p", &["s'"][..])]).unwrap();
        (m, m2)
    }

    #[test]
    fn s5_pair_agrees_on_false_belief_language() {
        let (m, m2) = s5_models();
        let corpus = Corpus::for_language(Language::FalseBelief, &atoms(&["p"]), 2, 7);
        let a = agree_up_to(&m, "s", &m2, "s'", &corpus).unwrap();
        assert!(a.agree);
        assert_eq!(a.checked, corpus.len());
        let with_box = Corpus::for_language(Language::Mixed, &atoms(&["p"]), 2, 7);
        let a = agree_up_to(&m, "s", &m2, "s'", &with_box).unwrap();
        assert_eq!(a.distinguishing.as_deref(), Some("B p"));
        assert!(agree_up_to(&m2, "t'", &m2, "t'", &with_box).unwrap().agree);
    }

    fn witness_frames() -> (Frame, Frame) {
        let fr = Frame::new(&["s"], &[("s", "s")]).unwrap();
        let fr2 = Frame::new(
            &["u'", "s'", "t'"],
            &[("u'", "u'"), ("u'", "s'"), ("s'", "s'"), ("s'", "u'"), ("s'", "t'"), ("t'", "t'")],
        )
        .unwrap();
        (fr, fr2)
    }

    #[test]
    fn transitivity_and_euclideanness_have_no_separating_formula() {
        let (fr, fr2) = witness_frames();
        let corpus = Corpus::for_language(Language::FalseBelief, &atoms(&["p"]), 2, 7);
        for p in [P::Transitive, P::Euclidean] {
            let g = definability_gap(&fr, &fr2, p, &corpus).unwrap();
            assert!(g.differ && g.is_undefinability_evidence(), "{p}");
        }
        let same = definability_gap(&fr, &fr, P::Symmetric, &corpus).unwrap();
        assert!(same.is_degenerate());
    }

    #[test]
    fn box_separates_the_witness_frames() {
        // sanity check that frame validity does see differences when they exist
        let (fr, fr2) = witness_frames();
        let corpus = Corpus::for_language(Language::Mixed, &atoms(&["p"]), 2, 8);
        let g = definability_gap(&fr, &fr2, P::Transitive, &corpus).unwrap();
        assert!(g.separating.is_some());
    }
}
