//! Exact arithmetic: Laurent polynomials, truncated rational power series and
//! integer matrices with Smith normal form.

mod laurent;
mod matrix;
mod series;

pub use laurent::{laurent_mul, LaurentPoly, Var};
pub use matrix::{count_solutions_mod, smith_normal_form, IntMatrix, SmithForm};
pub use series::{substitute_exp, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("variable mismatch: {left} vs {right}")]
    VariableMismatch { left: Var, right: Var },
    #[error("parse error: {0}")]
    Parse(String),
}
