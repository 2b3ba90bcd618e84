//! Formulas, Kripke semantics, bounded countermodel search, model
//! transformations and Hilbert proof checking for the logics of false
//! belief (`W`) and radical ignorance (`IR`).

pub mod hilbert;
pub mod oracle;
pub mod semantics;
pub mod syntax;
pub mod transform;

pub use hilbert::{check_proof, CheckOptions, Proof, ProofError, System};
pub use oracle::{find_countermodel, valid_on, Corpus, SearchBudget, Verdict, VerdictReport, Witness};
pub use semantics::{Frame, FrameClass, FrameProperty, Model, ModelError, ModelFile, StateSet};
pub use syntax::{parse, Formula, Language, ModalOp, ParseError};

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    ModelFile(#[from] semantics::ModelFileError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Transform(#[from] transform::TransformError),
    #[error(transparent)]
    Proof(#[from] ProofError),
    #[error(transparent)]
    Script(#[from] hilbert::ScriptError),
    #[error(transparent)]
    DerivedRule(#[from] hilbert::DerivedRuleError),
}
