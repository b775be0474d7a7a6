//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed token or statement in a diagram code.
    #[error("syntax error: {0}")]
    Syntax(String),

    /// An arc label is not used exactly once as an in-slot and once as an
    /// out-slot, or no orientation of the over-strands satisfies that rule.
    #[error("arc consistency error: {0}")]
    ArcConsistency(String),

    /// Zero crossings outside the dedicated `unknot` / `unlink k` literals.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A crossing whose smoothing joins a Seifert circle to itself; the code
    /// does not describe a coherent oriented diagram.
    #[error("loop edge at crossing {crossing}: circle {circle} would connect to itself")]
    LoopEdge { crossing: usize, circle: usize },

    /// The operation is only defined for alternating diagrams.
    #[error("not alternating: {0}")]
    NotAlternating(String),

    /// The operation does not apply to this diagram.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Two catalog entries share a name.
    #[error("duplicate catalog name: {0}")]
    DuplicateName(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by the input text rather than the environment.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}
