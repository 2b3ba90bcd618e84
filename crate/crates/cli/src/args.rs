use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "doxa", version, about = "Model checking, countermodel search and proof checking for false belief and radical ignorance")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// `W` formulas to `IR` formulas.
    W2ri,
    /// `IR` formulas to `W` formulas.
    Ri2w,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TransformKind {
    /// Euclidean closure.
    Closure,
    /// Submodel generated by the root.
    Generate,
    /// Cone augmentation at the root.
    Cone,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Frame class: `all`, or property names joined by `+`.
    #[arg(long, default_value = "all")]
    pub class: String,

    /// Largest frame size to enumerate.
    #[arg(long, env = "DOXA_MAX_STATES", default_value_t = 3)]
    pub max_states: usize,

    /// Atoms to vary (default: the atoms of the formula).
    #[arg(long, value_delimiter = ',')]
    pub atoms: Vec<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    /// Largest modal depth of corpus formulas.
    #[arg(long, default_value_t = 2)]
    pub depth: usize,

    /// Largest size of corpus formulas.
    #[arg(long, default_value_t = 7)]
    pub size: usize,

    /// Corpus atoms (default: the model's atoms, or `p`).
    #[arg(long, value_delimiter = ',')]
    pub atoms: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula at a state of a model file.
    Eval {
        model: PathBuf,
        state: String,
        formula: String,
        /// Read `IR g` as `g`.
        #[arg(long)]
        aux: bool,
    },
    /// Bounded validity: exit 0 if no countermodel is found.
    Valid {
        formula: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Countermodel search: exit 0 if a countermodel is found.
    Counter {
        formula: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Translate between the `W` and `IR` languages.
    Translate {
        formula: String,
        #[arg(long, value_enum)]
        direction: Direction,
    },
    /// Print an almost-definability translation chain.
    Chain {
        /// One of 4, 5, B.
        #[arg(long)]
        axiom: String,
        /// Check each consecutive equivalence by bounded search.
        #[arg(long)]
        check: bool,
        #[arg(long, env = "DOXA_MAX_STATES", default_value_t = 3)]
        max_states: usize,
    },
    /// Check a proof script.
    Prove {
        script: PathBuf,
        /// Disable replacement of equivalents.
        #[arg(long)]
        strict: bool,
    },
    /// Apply a model construction and print the result as a model file.
    Transform {
        #[arg(value_enum)]
        kind: TransformKind,
        model: PathBuf,
        /// Root state for `generate` and `cone` (default: the designated state).
        #[arg(long)]
        root: Option<String>,
        /// Compare the two models on the `W` corpus at the shared states.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Run the regression registry.
    VerifyPaper {
        /// Only run checks whose id matches this glob.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, env = "DOXA_MAX_STATES", default_value_t = 3, value_parser = clap::value_parser!(u8).range(1..=4))]
        max_states: u8,
        #[arg(long, default_value_t = 2)]
        depth: usize,
        #[arg(long, default_value_t = 7)]
        size: usize,
    },
}
