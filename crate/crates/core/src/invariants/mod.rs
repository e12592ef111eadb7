//! Exact invariant engines behind one named interface.

mod alexander;
mod bracket;
mod coloring;
mod conway;
mod value;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use alexander::{alexander, conway_from_alexander, conway_via_alexander, determinant_from_conway};
pub use bracket::{bracket_state_sum, jones, jones_in_t, kauffman_bracket, loop_value, BRACKET_CROSSING_LIMIT, STATE_SUM_CROSSING_LIMIT};
pub use coloring::{coloring_matrix, colorings, colorings_brute_force, determinant, over_arcs};
pub use conway::{conway, conway_coefficient, ConwayMemo};
pub use value::{Value, ValueError, ValueKind};

use crate::algebra::{substitute_exp, LaurentPoly};
use crate::diagram::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("unknown invariant `{0}` (known: jones, conway, det, colorings:m, arf, a:n, c:n, components)")]
    UnknownInvariant(String),
    #[error("{invariant} is defined for knots only; diagram has {components} components")]
    NotAKnot { invariant: String, components: usize },
    #[error("diagram has {crossings} crossings, more than the limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("{0}")]
    BadParameter(String),
}

/// A named invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantSpec {
    Components,
    Jones,
    Conway,
    /// Coefficient of `z^n` in the Conway polynomial.
    ConwayCoefficient(u32),
    Determinant,
    Colorings(u64),
    Arf,
    /// Coefficient of `x^n` after substituting `t = e^x` into the Jones polynomial.
    Vassiliev(u32),
}

impl InvariantSpec {
    pub fn kind(&self) -> ValueKind {
        match self {
            InvariantSpec::Jones | InvariantSpec::Conway => ValueKind::Laurent,
            InvariantSpec::Vassiliev(_) => ValueKind::Rational,
            _ => ValueKind::Integer,
        }
    }

    pub fn requires_knot(&self) -> bool {
        matches!(self, InvariantSpec::Determinant | InvariantSpec::Arf | InvariantSpec::Vassiliev(_))
    }

    /// The invariants exercised by the isotopy and connected-sum suites.
    pub fn registered() -> Vec<InvariantSpec> {
        vec![
            InvariantSpec::Components,
            InvariantSpec::Jones,
            InvariantSpec::Conway,
            InvariantSpec::ConwayCoefficient(2),
            InvariantSpec::ConwayCoefficient(4),
            InvariantSpec::Determinant,
            InvariantSpec::Colorings(2),
            InvariantSpec::Colorings(3),
            InvariantSpec::Colorings(4),
            InvariantSpec::Colorings(5),
            InvariantSpec::Colorings(7),
            InvariantSpec::Arf,
            InvariantSpec::Vassiliev(0),
            InvariantSpec::Vassiliev(1),
            InvariantSpec::Vassiliev(2),
            InvariantSpec::Vassiliev(3),
        ]
    }
}

impl fmt::Display for InvariantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantSpec::Components => write!(f, "components"),
            InvariantSpec::Jones => write!(f, "jones"),
            InvariantSpec::Conway => write!(f, "conway"),
            InvariantSpec::ConwayCoefficient(n) => write!(f, "c:{n}"),
            InvariantSpec::Determinant => write!(f, "det"),
            InvariantSpec::Colorings(m) => write!(f, "colorings:{m}"),
            InvariantSpec::Arf => write!(f, "arf"),
            InvariantSpec::Vassiliev(n) => write!(f, "a:{n}"),
        }
    }
}

impl FromStr for InvariantSpec {
    type Err = InvariantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || InvariantError::UnknownInvariant(s.to_string());
        let s = s.trim();
        Ok(match s {
            "components" => InvariantSpec::Components,
            "jones" => InvariantSpec::Jones,
            "conway" => InvariantSpec::Conway,
            "det" => InvariantSpec::Determinant,
            "arf" => InvariantSpec::Arf,
            _ => {
                let (name, arg) = s.split_once(':').ok_or_else(unknown)?;
                match name {
                    "colorings" => {
                        let m: u64 = arg.parse().map_err(|_| unknown())?;
                        if m < 2 {
                            return Err(InvariantError::BadParameter(format!("coloring modulus must be at least 2, got {m}")));
                        }
                        InvariantSpec::Colorings(m)
                    }
                    "a" => InvariantSpec::Vassiliev(arg.parse().map_err(|_| unknown())?),
                    "c" => InvariantSpec::ConwayCoefficient(arg.parse().map_err(|_| unknown())?),
                    _ => return Err(unknown()),
                }
            }
        })
    }
}

/// `a_n` from a Jones polynomial in `u = t^(1/4)`.
pub fn vassiliev_from_jones(jones_u: &LaurentPoly, n: u32) -> BigRational {
    let scale = BigRational::new(BigInt::from(1), BigInt::from(4));
    substitute_exp(jones_u, &scale, n as usize).coeff(n as usize)
}

pub fn vassiliev_coefficient(d: &Diagram, n: u32) -> Result<BigRational, InvariantError> {
    require_knot(d, &InvariantSpec::Vassiliev(n))?;
    Ok(vassiliev_from_jones(&jones(d)?, n))
}

pub fn arf(d: &Diagram) -> Result<u8, InvariantError> {
    require_knot(d, &InvariantSpec::Arf)?;
    Ok(arf_from_conway(&conway(d)))
}

fn arf_from_conway(p: &LaurentPoly) -> u8 {
    let c2 = p.coeff(2);
    u8::from(!(c2 % 2i32).is_zero())
}

pub fn component_count(d: &Diagram) -> usize {
    d.component_count()
}

fn require_knot(d: &Diagram, spec: &InvariantSpec) -> Result<(), InvariantError> {
    if d.is_knot() {
        Ok(())
    } else {
        Err(InvariantError::NotAKnot { invariant: spec.to_string(), components: d.component_count() })
    }
}

/// Evaluates invariants with Jones and Conway results cached by canonical diagram.
#[derive(Default, Debug)]
pub struct Evaluator {
    conway: ConwayMemo,
    jones: HashMap<Diagram, LaurentPoly>,
    /// Number of `evaluate` calls served.
    pub evaluations: u64,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn jones(&mut self, d: &Diagram) -> Result<LaurentPoly, InvariantError> {
        let key = d.simplify().canonical();
        if let Some(v) = self.jones.get(&key) {
            return Ok(v.clone());
        }
        let v = jones(&key)?;
        self.jones.insert(key, v.clone());
        Ok(v)
    }

    pub fn conway(&mut self, d: &Diagram) -> LaurentPoly {
        self.conway.conway(d)
    }

    pub fn evaluate(&mut self, spec: &InvariantSpec, d: &Diagram) -> Result<Value, InvariantError> {
        self.evaluations += 1;
        if spec.requires_knot() {
            require_knot(d, spec)?;
        }
        Ok(match *spec {
            InvariantSpec::Components => Value::Int(BigInt::from(d.component_count())),
            InvariantSpec::Jones => Value::Poly(self.jones(d)?),
            InvariantSpec::Conway => Value::Poly(self.conway(d)),
            InvariantSpec::ConwayCoefficient(n) => Value::Int(conway_coefficient(&self.conway(d), n)),
            InvariantSpec::Determinant => Value::Int(determinant(d)?),
            InvariantSpec::Colorings(m) => Value::Int(colorings(d, m)?),
            InvariantSpec::Arf => Value::Int(BigInt::from(arf_from_conway(&self.conway(d)))),
            InvariantSpec::Vassiliev(n) => Value::Rational(vassiliev_from_jones(&self.jones(d)?, n)),
        })
    }
}

/// Evaluation through paths independent of [`Evaluator`]: plain state sums, the
/// Alexander matrix, exhaustive coloring search and an unmemoized skein run.
pub fn evaluate_reference(spec: &InvariantSpec, d: &Diagram) -> Result<Value, InvariantError> {
    if spec.requires_knot() {
        require_knot(d, spec)?;
    }
    let reference_jones = |d: &Diagram| -> Result<LaurentPoly, InvariantError> {
        let b = if d.crossing_count() <= STATE_SUM_CROSSING_LIMIT { bracket_state_sum(d)? } else { kauffman_bracket(d)? };
        Ok(bracket::normalize_bracket(&b, d.writhe()))
    };
    let reference_conway = |d: &Diagram| -> LaurentPoly {
        if d.is_knot() {
            conway_via_alexander(d).expect("knot")
        } else {
            conway(d)
        }
    };
    Ok(match *spec {
        InvariantSpec::Components => Value::Int(BigInt::from(d.component_count())),
        InvariantSpec::Jones => Value::Poly(reference_jones(d)?),
        InvariantSpec::Conway => Value::Poly(reference_conway(d)),
        InvariantSpec::ConwayCoefficient(n) => Value::Int(reference_conway(d).coeff(i64::from(n))),
        InvariantSpec::Determinant => Value::Int(determinant_from_conway(&reference_conway(d))),
        InvariantSpec::Colorings(m) => Value::Int(BigInt::from(colorings_brute_force(d, m))),
        InvariantSpec::Arf => Value::Int(BigInt::from(arf_from_conway(&reference_conway(d)))),
        InvariantSpec::Vassiliev(n) => Value::Rational(vassiliev_from_jones(&reference_jones(d)?, n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn names_round_trip() {
        for spec in InvariantSpec::registered() {
            assert_eq!(spec.to_string().parse::<InvariantSpec>().unwrap(), spec);
        }
        assert!(matches!("nope".parse::<InvariantSpec>(), Err(InvariantError::UnknownInvariant(_))));
        assert!(matches!("colorings:x".parse::<InvariantSpec>(), Err(InvariantError::UnknownInvariant(_))));
        assert!("colorings:1".parse::<InvariantSpec>().is_err());
    }

    #[test]
    fn low_vassiliev_coefficients() {
        let t = braid_closure(&[1, 1, 1], 2).unwrap();
        assert_eq!(vassiliev_coefficient(&t, 0).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(vassiliev_coefficient(&t, 1).unwrap(), BigRational::zero());
        // V = t + t^3 - t^4 gives 1 + 9 - 16 over 2
        assert_eq!(vassiliev_coefficient(&t, 2).unwrap(), BigRational::from_integer((-3).into()));
        assert!(vassiliev_coefficient(&Diagram::unlink(2), 2).is_err());
    }

    #[test]
    fn arf_values() {
        assert_eq!(arf(&Diagram::unknot()).unwrap(), 0);
        assert_eq!(arf(&braid_closure(&[1, 1, 1], 2).unwrap()).unwrap(), 1);
        assert_eq!(arf(&braid_closure(&[1, -2, 1, -2], 3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn evaluator_agrees_with_reference() {
        let mut ev = Evaluator::new();
        for (word, s) in [(vec![1, 1, 1], 2), (vec![1, -2, 1, -2], 3), (vec![1, 1, 1, 2, -1, 2], 3)] {
            let d = braid_closure(&word, s).unwrap();
            for spec in InvariantSpec::registered() {
                assert_eq!(ev.evaluate(&spec, &d).unwrap(), evaluate_reference(&spec, &d).unwrap(), "{spec} on {word:?}");
            }
        }
    }
}
