//! Kripke frames and models, the truth definition for every operator, the
//! auxiliary semantics that reads `IR φ` as `φ`, and first-order frame
//! properties.
//!
//! States are stored by index; a set of states is a `u64` bitmask, so a
//! frame holds at most [`MAX_STATES`] states.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::syntax::{Formula, Language, ModalOp};

pub const MAX_STATES: usize = 64;

/// A set of states, one bit per state index.
pub type StateSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a frame needs at least one state")]
    NoStates,
    #[error("too many states ({0}); at most {MAX_STATES} are supported")]
    TooManyStates(usize),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("`{0}` is not a valid atom name")]
    BadAtom(String),
    #[error("{formula} is outside {language}: it uses `{op}`")]
    OutsideLanguage {
        formula: String,
        language: Language,
        op: &'static str,
    },
}

#[inline]
pub(crate) fn bit(i: usize) -> StateSet {
    1u64 << i
}

#[inline]
fn full_set(n: usize) -> StateSet {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the indices of the members of a state set in increasing order.
pub fn members(mut set: StateSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    names: Vec<String>,
    succ: Vec<StateSet>,
}

impl Frame {
    /// Builds a frame from state names and an edge list.
    pub fn new<S: AsRef<str>>(states: &[S], relation: &[(S, S)]) -> Result<Frame, ModelError> {
        let names: Vec<String> = states.iter().map(|s| s.as_ref().to_string()).collect();
        let mut frame = Frame::empty(names)?;
        for (a, b) in relation {
            let i = frame.index(a.as_ref())?;
            let j = frame.index(b.as_ref())?;
            frame.succ[i] |= bit(j);
        }
        Ok(frame)
    }

    /// A frame on the given states with no edges.
    pub fn empty(names: Vec<String>) -> Result<Frame, ModelError> {
        if names.is_empty() {
            return Err(ModelError::NoStates);
        }
        if names.len() > MAX_STATES {
            return Err(ModelError::TooManyStates(names.len()));
        }
        let mut seen = BTreeSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(ModelError::DuplicateState(n.clone()));
            }
        }
        let succ = vec![0; names.len()];
        Ok(Frame { names, succ })
    }

    /// Builds a frame directly from successor masks. Names default to `s1..sk`.
    pub fn from_masks(succ: Vec<StateSet>) -> Frame {
        assert!(!succ.is_empty() && succ.len() <= MAX_STATES);
        let all = full_set(succ.len());
        assert!(succ.iter().all(|m| m & !all == 0), "edge to a missing state");
        let names = (1..=succ.len()).map(|i| format!("s{i}")).collect();
        Frame { names, succ }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn all(&self) -> StateSet {
        full_set(self.len())
    }

    pub fn index(&self, name: &str) -> Result<usize, ModelError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| ModelError::UnknownState(name.to_string()))
    }

    pub fn succ_mask(&self, i: usize) -> StateSet {
        self.succ[i]
    }

    pub fn masks(&self) -> &[StateSet] {
        &self.succ
    }

    pub fn relates(&self, i: usize, j: usize) -> bool {
        self.succ[i] & bit(j) != 0
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.succ[i] |= bit(j);
    }

    /// Successor names of a state.
    pub fn successors(&self, state: &str) -> Result<BTreeSet<String>, ModelError> {
        let i = self.index(state)?;
        Ok(members(self.succ[i]).map(|j| self.names[j].clone()).collect())
    }

    /// Edges as name pairs, in index order.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in members(self.succ[i]) {
                out.push((self.names[i].clone(), self.names[j].clone()));
            }
        }
        out
    }

    /// States with at least one incoming edge.
    pub fn targets(&self) -> StateSet {
        self.succ.iter().fold(0, |acc, m| acc | m)
    }

    pub fn has(&self, p: FrameProperty) -> bool {
        p.holds(self)
    }

    pub fn violation(&self, p: FrameProperty) -> Option<Vec<usize>> {
        p.violation(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    frame: Frame,
    valuation: BTreeMap<String, StateSet>,
}

impl Model {
    pub fn new(frame: Frame, valuation: BTreeMap<String, StateSet>) -> Result<Model, ModelError> {
        let all = frame.all();
        for (atom, set) in &valuation {
            if !crate::syntax::is_atom_name(atom) {
                return Err(ModelError::BadAtom(atom.clone()));
            }
            assert!(set & !all == 0, "valuation of {atom} mentions a missing state");
        }
        Ok(Model { frame, valuation })
    }

    /// Builds a model from names. Every atom maps to a list of state names.
    pub fn from_names<S: AsRef<str>>(
        frame: Frame,
        valuation: &[(S, &[S])],
    ) -> Result<Model, ModelError> {
        let mut val = BTreeMap::new();
        for (atom, states) in valuation {
            let mut set = 0;
            for s in states.iter() {
                set |= bit(frame.index(s.as_ref())?);
            }
            val.insert(atom.as_ref().to_string(), set);
        }
        Model::new(frame, val)
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn valuation(&self) -> &BTreeMap<String, StateSet> {
        &self.valuation
    }

    /// Atoms absent from the valuation are false everywhere.
    pub fn atom_set(&self, atom: &str) -> StateSet {
        self.valuation.get(atom).copied().unwrap_or(0)
    }

    pub fn successors(&self, state: &str) -> Result<BTreeSet<String>, ModelError> {
        self.frame.successors(state)
    }

    /// Replaces the relation, keeping states and valuation.
    pub fn with_frame(&self, frame: Frame) -> Model {
        assert_eq!(frame.names, self.frame.names);
        Model {
            frame,
            valuation: self.valuation.clone(),
        }
    }

    /// Truth value of `f` at the named state.
    pub fn eval(&self, state: &str, f: &Formula) -> Result<bool, ModelError> {
        let i = self.frame.index(state)?;
        Ok(self.eval_at(i, f))
    }

    pub fn eval_at(&self, i: usize, f: &Formula) -> bool {
        self.extension(f) & bit(i) != 0
    }

    /// Truth set of `f` under the standard semantics.
    pub fn extension(&self, f: &Formula) -> StateSet {
        self.ext(f, false)
    }

    /// Truth value under the auxiliary semantics, where `IR φ` means `φ`.
    /// Only formulas of L(IR) are admitted.
    pub fn eval_aux(&self, state: &str, f: &Formula) -> Result<bool, ModelError> {
        let i = self.frame.index(state)?;
        Ok(self.extension_aux(f)? & bit(i) != 0)
    }

    pub fn extension_aux(&self, f: &Formula) -> Result<StateSet, ModelError> {
        if let Some(op) = f.first_outside(Language::RadicalIgnorance) {
            return Err(ModelError::OutsideLanguage {
                formula: f.to_string(),
                language: Language::RadicalIgnorance,
                op: op.keyword(),
            });
        }
        Ok(self.ext(f, true))
    }

    fn ext(&self, f: &Formula, aux: bool) -> StateSet {
        let all = self.frame.all();
        match f {
            Formula::Atom(a) => self.atom_set(a),
            Formula::Top => all,
            Formula::Bot => 0,
            Formula::Not(a) => all & !self.ext(a, aux),
            Formula::And(a, b) => self.ext(a, aux) & self.ext(b, aux),
            Formula::Or(a, b) => self.ext(a, aux) | self.ext(b, aux),
            Formula::Imp(a, b) => (all & !self.ext(a, aux)) | self.ext(b, aux),
            Formula::Iff(a, b) => all & !(self.ext(a, aux) ^ self.ext(b, aux)),
            Formula::Ir(a) if aux => self.ext(a, aux),
            Formula::W(a) | Formula::Bel(a) | Formula::Ir(a) | Formula::Fi(a) => {
                let (op, _) = f.as_modal().expect("modal node");
                modal_extension(&self.frame, op, self.ext(a, aux))
            }
        }
    }
}

/// Truth set of `op φ` given the truth set of `φ`.
pub fn modal_extension(frame: &Frame, op: ModalOp, arg: StateSet) -> StateSet {
    let mut out = 0;
    for (i, &succ) in frame.succ.iter().enumerate() {
        let here = arg & bit(i) != 0;
        let all_true = succ & !arg == 0;
        let holds = match op {
            ModalOp::Bel => all_true,
            ModalOp::W => !here && all_true,
            ModalOp::Ir => (!here && all_true) || (here && succ & arg == 0),
            ModalOp::Fi => here && (succ & !bit(i)) & arg == 0,
        };
        if holds {
            out |= bit(i);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Frame properties

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrameProperty {
    Reflexive,
    Serial,
    Transitive,
    Euclidean,
    Symmetric,
    SecondarilyReflexive,
    Narcissistic,
    PartiallyNarcissistic,
    PartialFunctional,
    WeaklyConnected,
    WeaklyDirected,
}

impl FrameProperty {
    pub const ALL: [FrameProperty; 11] = [
        FrameProperty::Reflexive,
        FrameProperty::Serial,
        FrameProperty::Transitive,
        FrameProperty::Euclidean,
        FrameProperty::Symmetric,
        FrameProperty::SecondarilyReflexive,
        FrameProperty::Narcissistic,
        FrameProperty::PartiallyNarcissistic,
        FrameProperty::PartialFunctional,
        FrameProperty::WeaklyConnected,
        FrameProperty::WeaklyDirected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameProperty::Reflexive => "reflexive",
            FrameProperty::Serial => "serial",
            FrameProperty::Transitive => "transitive",
            FrameProperty::Euclidean => "euclidean",
            FrameProperty::Symmetric => "symmetric",
            FrameProperty::SecondarilyReflexive => "secondarily-reflexive",
            FrameProperty::Narcissistic => "narcissistic",
            FrameProperty::PartiallyNarcissistic => "partially-narcissistic",
            FrameProperty::PartialFunctional => "partial-functional",
            FrameProperty::WeaklyConnected => "weakly-connected",
            FrameProperty::WeaklyDirected => "weakly-directed",
        }
    }

    pub fn holds(self, fr: &Frame) -> bool {
        self.violation(fr).is_none()
    }

    /// The first tuple of state indices falsifying the defining condition,
    /// found by naive quantification in index order.
    pub fn violation(self, fr: &Frame) -> Option<Vec<usize>> {
        let n = fr.len();
        let r = |i: usize, j: usize| fr.relates(i, j);
        let states = 0..n;
        let pairs = || states.clone().flat_map(move |x| (0..n).map(move |y| (x, y)));
        let triples = || pairs().flat_map(move |(x, y)| (0..n).map(move |z| (x, y, z)));
        match self {
            FrameProperty::Reflexive => states.clone().find(|&x| !r(x, x)).map(|x| vec![x]),
            FrameProperty::Serial => states.clone().find(|&x| fr.succ[x] == 0).map(|x| vec![x]),
            FrameProperty::Symmetric => pairs()
                .find(|&(x, y)| r(x, y) && !r(y, x))
                .map(|(x, y)| vec![x, y]),
            FrameProperty::SecondarilyReflexive => pairs()
                .find(|&(x, y)| r(x, y) && !r(y, y))
                .map(|(x, y)| vec![x, y]),
            FrameProperty::PartiallyNarcissistic => pairs()
                .find(|&(x, y)| r(x, y) && x != y)
                .map(|(x, y)| vec![x, y]),
            FrameProperty::Narcissistic => states
                .clone()
                .find(|&x| !r(x, x))
                .map(|x| vec![x])
                .or_else(|| FrameProperty::PartiallyNarcissistic.violation(fr)),
            FrameProperty::Transitive => triples()
                .find(|&(x, y, z)| r(x, y) && r(y, z) && !r(x, z))
                .map(|(x, y, z)| vec![x, y, z]),
            FrameProperty::Euclidean => triples()
                .find(|&(x, y, z)| r(x, y) && r(x, z) && !r(y, z))
                .map(|(x, y, z)| vec![x, y, z]),
            FrameProperty::PartialFunctional => triples()
                .find(|&(x, y, z)| r(x, y) && r(x, z) && y != z)
                .map(|(x, y, z)| vec![x, y, z]),
            FrameProperty::WeaklyConnected => triples()
                .find(|&(x, y, z)| r(x, y) && r(x, z) && !(r(y, z) || y == z || r(z, y)))
                .map(|(x, y, z)| vec![x, y, z]),
            FrameProperty::WeaklyDirected => triples()
                .find(|&(x, y, z)| r(x, y) && r(x, z) && !(0..n).any(|v| r(y, v) && r(z, v)))
                .map(|(x, y, z)| vec![x, y, z]),
        }
    }
}

impl fmt::Display for FrameProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown frame property `{0}`")]
pub struct UnknownProperty(pub String);

impl FromStr for FrameProperty {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FrameProperty::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| UnknownProperty(s.to_string()))
    }
}

/// A conjunction of frame properties. The empty class is the class of all
/// frames.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FrameClass(BTreeSet<FrameProperty>);

impl FrameClass {
    pub fn all() -> FrameClass {
        FrameClass::default()
    }

    pub fn of(props: impl IntoIterator<Item = FrameProperty>) -> FrameClass {
        FrameClass(props.into_iter().collect())
    }

    pub fn properties(&self) -> &BTreeSet<FrameProperty> {
        &self.0
    }

    pub fn contains(&self, fr: &Frame) -> bool {
        self.0.iter().all(|p| p.holds(fr))
    }
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("all");
        }
        let names: Vec<_> = self.0.iter().map(|p| p.name()).collect();
        f.write_str(&names.join("+"))
    }
}

impl FromStr for FrameClass {
    type Err = UnknownProperty;

    /// `all`, or properties joined by `+` or `,`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "all" {
            return Ok(FrameClass::all());
        }
        s.split(['+', ','])
            .map(|p| p.trim().parse())
            .collect::<Result<BTreeSet<_>, _>>()
            .map(FrameClass)
    }
}

// ---------------------------------------------------------------------------
// Model files

/// On-disk model document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub states: Vec<String>,
    pub relation: Vec<(String, String)>,
    pub valuation: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub designated: Option<String>,
}

#[derive(Debug, Error)]
pub enum ModelFileError {
    #[error("malformed model document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl ModelFile {
    pub fn parse(text: &str) -> Result<ModelFile, ModelFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_model(m: &Model, designated: Option<&str>) -> ModelFile {
        let fr = m.frame();
        ModelFile {
            states: fr.names().to_vec(),
            relation: fr.edges(),
            valuation: m
                .valuation()
                .iter()
                .map(|(a, set)| (a.clone(), members(*set).map(|i| fr.name(i).to_string()).collect()))
                .collect(),
            designated: designated.map(str::to_string),
        }
    }

    /// Validates the document and builds the model.
    pub fn to_model(&self) -> Result<(Model, Option<String>), ModelError> {
        let rel: Vec<(&str, &str)> = self
            .relation
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let states: Vec<&str> = self.states.iter().map(String::as_str).collect();
        let frame = Frame::new(&states, &rel)?;
        let mut val = BTreeMap::new();
        for (atom, names) in &self.valuation {
            let mut set = 0;
            for n in names {
                set |= bit(frame.index(n)?);
            }
            val.insert(atom.clone(), set);
        }
        if let Some(d) = &self.designated {
            frame.index(d)?;
        }
        Ok((Model::new(frame, val)?, self.designated.clone()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model documents always serialize")
    }
}
