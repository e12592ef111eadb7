//! Text and JSON forms of diagrams.
//!
//! PD: `X[a,b,c,d];X[...] / (1..6)(7..10)`. A crossing may carry a trailing `+` or `-`
//! when its sign cannot be read off the component structure (a two-arc component
//! passing over twice). Without a `/` part all arcs form one component.
//!
//! Gauss: tokens `O3+`, `U1-`; one component is written bare, several are each
//! wrapped in parentheses, `()` is a crossingless circle and empty text is the unknot.
//!
//! Braid: `braid: s=3 w=[1,-2,1,-2]` (the `braid:` prefix is optional).

mod braid;
mod gauss;
mod json;
mod pd;
mod scan;

pub use braid::{parse_braid, BraidWord};
pub use gauss::{emit_gauss, parse_gauss, GaussCode, GaussToken};
pub use json::{diagram_from_json, diagram_to_json, DiagramJson};
pub use pd::{emit_pd, parse_pd};

use crate::diagram::{Diagram, DiagramError, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NotationError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid diagram: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("code is not realizable as a planar diagram")]
    NotRealizable,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("malformed JSON diagram: {0}")]
    Json(String),
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub(crate) fn checked(d: Diagram) -> Result<Diagram, NotationError> {
    let v = d.validate();
    if v.is_empty() {
        Ok(d)
    } else {
        Err(NotationError::Invalid(v))
    }
}

/// Reads a diagram in any of the three text grammars, choosing by shape.
pub fn parse_any(text: &str) -> Result<Diagram, NotationError> {
    let t = text.trim_start();
    if t.starts_with("braid:") || t.starts_with("s=") {
        parse_braid(text)?.closure().map_err(NotationError::from)
    } else if t.starts_with('X') || t.starts_with('/') {
        parse_pd(text)
    } else if t.starts_with('{') {
        diagram_from_json(text)
    } else {
        parse_gauss(text)
    }
}
