//! Knot and link diagrams, exact invariants, and alternating sums over crossing changes
//! and twist moves.

pub mod algebra;
pub mod census;
pub mod diagram;
pub mod finitetype;
pub mod invariants;
pub mod notation;

pub use diagram::{Diagram, Sign, TwistRegion};
pub use invariants::{Evaluator, InvariantSpec, Value};
