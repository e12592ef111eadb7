use knotforge::diagram::DiagramError;
use knotforge::finitetype::FiniteTypeError;
use knotforge::invariants::InvariantError;
use knotforge::notation::NotationError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const PARSE: u8 = 1;
    pub const UNKNOWN_INVARIANT: u8 = 2;
    pub const CERTIFICATE: u8 = 3;
    pub const BUDGET_EXHAUSTED: u8 = 4;
    pub const REJECTED: u8 = 5;
    pub const EVALUATION: u8 = 6;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("parse error: {0}")]
    Notation(#[from] NotationError),
    #[error("{0}")]
    Invariant(#[from] InvariantError),
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("{0}")]
    FiniteType(#[from] FiniteTypeError),
    #[error("census verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Notation(_) => exit::PARSE,
            CliError::Invariant(InvariantError::UnknownInvariant(_)) => exit::UNKNOWN_INVARIANT,
            CliError::Invariant(InvariantError::BadParameter(_)) => exit::UNKNOWN_INVARIANT,
            CliError::Diagram(e) | CliError::FiniteType(FiniteTypeError::Diagram(e)) => match e {
                DiagramError::TwistRejected { .. } | DiagramError::BadRegion(_) | DiagramError::UnknownArc(_) => exit::REJECTED,
                _ => exit::PARSE,
            },
            CliError::FiniteType(FiniteTypeError::OverlappingRegions { .. }) => exit::REJECTED,
            CliError::FiniteType(FiniteTypeError::Invariant(InvariantError::UnknownInvariant(_))) => exit::UNKNOWN_INVARIANT,
            CliError::Invariant(_) | CliError::FiniteType(_) | CliError::Verification(_) => exit::EVALUATION,
        }
    }
}
