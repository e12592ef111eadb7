use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value as Json};

use crate::algebra::{AlgebraError, LaurentPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Integer,
    Rational,
    Laurent,
}

/// Invariant value; each kind is an abelian group under `add`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Int(BigInt),
    Rational(BigRational),
    Poly(LaurentPoly),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValueError {
    #[error("cannot combine values of kinds {0:?} and {1:?}")]
    KindMismatch(ValueKind, ValueKind),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Int(_) => ValueKind::Integer,
            Value::Rational(_) => ValueKind::Rational,
            Value::Poly(_) => ValueKind::Laurent,
        }
    }

    /// The zero of this value's group.
    pub fn zero_like(&self) -> Value {
        match self {
            Value::Int(_) => Value::Int(BigInt::zero()),
            Value::Rational(_) => Value::Rational(BigRational::zero()),
            Value::Poly(p) => Value::Poly(LaurentPoly::zero(p.var())),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Int(v) => v.is_zero(),
            Value::Rational(v) => v.is_zero(),
            Value::Poly(p) => p.is_zero(),
        }
    }

    pub fn add(&self, other: &Value) -> Result<Value, ValueError> {
        Ok(match (self, other) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Rational(a), Value::Rational(b)) => Value::Rational(a + b),
            (Value::Poly(a), Value::Poly(b)) => Value::Poly(a.try_add(b)?),
            (a, b) => return Err(ValueError::KindMismatch(a.kind(), b.kind())),
        })
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Int(a) => Value::Int(-a),
            Value::Rational(a) => Value::Rational(-a),
            Value::Poly(p) => Value::Poly(-p),
        }
    }

    pub fn sub(&self, other: &Value) -> Result<Value, ValueError> {
        self.add(&other.neg())
    }

    /// Integers fitting in `i64` become JSON numbers, larger ones strings; rationals are
    /// `"p/q"` strings and polynomials use the polynomial JSON form.
    pub fn to_json(&self) -> Json {
        match self {
            Value::Int(v) => match v.to_i64() {
                Some(small) => json!(small),
                None => json!(v.to_string()),
            },
            Value::Rational(r) => json!(r.to_string()),
            Value::Poly(p) => p.to_json(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rational(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "{}", p.to_text()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    #[test]
    fn group_operations() {
        let a = Value::Int(BigInt::from(5));
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.zero_like(), Value::Int(BigInt::zero()));
        let p = Value::Poly(LaurentPoly::monomial(Var::U, 4, 1));
        assert!(p.add(&a).is_err());
        assert!(p.add(&p.neg()).unwrap().is_zero());
        let r = Value::Rational(BigRational::new(1.into(), 2.into()));
        assert_eq!(r.add(&r).unwrap(), Value::Rational(BigRational::from_integer(1.into())));
        assert_eq!(r.to_json(), json!("1/2"));
    }
}
