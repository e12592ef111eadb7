use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value as Json};

use super::AlgebraError;

/// Name of the indeterminate a [`LaurentPoly`] is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(pub char);

impl Var {
    /// Kauffman bracket variable.
    pub const A: Var = Var('A');
    pub const T: Var = Var('t');
    /// Fourth root of `t`; Jones polynomials of links live here.
    pub const U: Var = Var('u');
    pub const Z: Var = Var('z');
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Exact Laurent polynomial with big-integer coefficients in one tagged variable.
///
/// Zero coefficients are never stored, so derived equality is exact equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, BigInt::one())
    }

    pub fn constant(var: Var, c: impl Into<BigInt>) -> Self {
        Self::monomial(var, 0, c)
    }

    pub fn monomial(var: Var, exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(var);
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated exponents accumulate.
    pub fn from_terms<C: Into<BigInt>>(var: Var, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    fn check_var(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_var(other)?;
        let mut out = Self::zero(self.var);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(e, x)| (*e, x * c)))
    }

    /// Non-negative powers only; `pow(0)` is one.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by `var^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly {
            var: self.var,
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Substitutes `var -> new_var^factor`, i.e. every exponent is multiplied by `factor`.
    pub fn substitute_power(&self, new_var: Var, factor: i64) -> Self {
        Self::from_terms(new_var, self.terms.iter().map(|(e, c)| (e * factor, c.clone())))
    }

    /// Divides every exponent by `divisor` when all are multiples of it.
    pub fn compress_exponents(&self, new_var: Var, divisor: i64) -> Option<Self> {
        if divisor == 0 || self.terms.keys().any(|e| e % divisor != 0) {
            return None;
        }
        Some(Self::from_terms(new_var, self.terms.iter().map(|(e, c)| (e / divisor, c.clone()))))
    }

    /// Reverses exponents (`x -> x^-1`).
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(self.var, -1)
    }

    pub fn retag(&self, var: Var) -> Self {
        LaurentPoly { var, terms: self.terms.clone() }
    }

    /// Evaluates at an integer point; fails on negative exponents unless `x` is a unit.
    pub fn eval_integer(&self, x: &BigInt) -> Option<BigInt> {
        let mut acc = BigInt::zero();
        for (e, c) in &self.terms {
            let term = if *e >= 0 {
                num_traits::pow::pow(x.clone(), *e as usize)
            } else if x.abs().is_one() {
                num_traits::pow::pow(x.clone(), e.unsigned_abs() as usize)
            } else {
                return None;
            };
            acc += c * term;
        }
        Some(acc)
    }

    /// Text form, e.g. `-1*t^-4 + 1*t^-3 + 1*t^-1`. Zero is written `0*t^0`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return format!("0*{}^0", self.var);
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{}*{}^{}", c, self.var, e))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn parse_text(text: &str) -> Result<Self, AlgebraError> {
        let bad = |msg: &str| AlgebraError::Parse(format!("{msg} in {text:?}"));
        let mut var = None;
        let mut terms = Vec::new();
        for raw in text.split(" + ") {
            let term = raw.trim();
            let (coeff, rest) = term.split_once('*').ok_or_else(|| bad("missing '*'"))?;
            let (v, exp) = rest.split_once('^').ok_or_else(|| bad("missing '^'"))?;
            let mut chars = v.trim().chars();
            let v = match (chars.next(), chars.next()) {
                (Some(c), None) => Var(c),
                _ => return Err(bad("variable must be one character")),
            };
            if var.is_some_and(|w| w != v) {
                return Err(bad("mixed variables"));
            }
            var = Some(v);
            let c: BigInt = coeff.trim().parse().map_err(|_| bad("bad coefficient"))?;
            let e: i64 = exp.trim().parse().map_err(|_| bad("bad exponent"))?;
            terms.push((e, c));
        }
        let var = var.ok_or_else(|| bad("empty polynomial"))?;
        Ok(Self::from_terms(var, terms))
    }

    /// JSON form `{"var":"t","terms":[[exp,coeff],...]}`; coefficients outside `i64` are strings.
    pub fn to_json(&self) -> Json {
        let terms: Vec<Json> = self
            .terms
            .iter()
            .map(|(e, c)| match c.to_i64() {
                Some(small) => json!([e, small]),
                None => json!([e, c.to_string()]),
            })
            .collect();
        json!({ "var": self.var.0.to_string(), "terms": terms })
    }

    pub fn from_json(value: &Json) -> Result<Self, AlgebraError> {
        let bad = |msg: &str| AlgebraError::Parse(format!("laurent json: {msg}"));
        let var = value
            .get("var")
            .and_then(Json::as_str)
            .and_then(|s| {
                let mut it = s.chars();
                match (it.next(), it.next()) {
                    (Some(c), None) => Some(Var(c)),
                    _ => None,
                }
            })
            .ok_or_else(|| bad("missing var"))?;
        let terms = value.get("terms").and_then(Json::as_array).ok_or_else(|| bad("missing terms"))?;
        let mut p = Self::zero(var);
        for t in terms {
            let pair = t.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("term is not a pair"))?;
            let e = pair[0].as_i64().ok_or_else(|| bad("exponent"))?;
            let c: BigInt = match &pair[1] {
                Json::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| bad("coefficient"))?,
                Json::String(s) => s.parse().map_err(|_| bad("coefficient"))?,
                _ => return Err(bad("coefficient")),
            };
            p.add_term(e, c);
        }
        Ok(p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator impls panic on a variable mismatch; use the `try_*` methods on untrusted input.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("laurent add: variable mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("laurent sub: variable mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("laurent mul: variable mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// Exact product of two polynomials in the same variable.
pub fn laurent_mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, AlgebraError> {
    a.try_mul(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::T, terms.iter().copied())
    }

    #[test]
    fn difference_of_squares() {
        let a = t(&[(1, 1), (-1, 1)]);
        let b = t(&[(1, 1), (-1, -1)]);
        assert_eq!(laurent_mul(&a, &b).unwrap(), t(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn identity_and_binomial() {
        let p = t(&[(-3, 2), (5, -7)]);
        assert_eq!(laurent_mul(&p, &LaurentPoly::one(Var::T)).unwrap(), p);
        let one_plus_t = t(&[(0, 1), (1, 1)]);
        assert_eq!(one_plus_t.pow(3), t(&[(0, 1), (1, 3), (2, 3), (3, 1)]));
    }

    #[test]
    fn degree_bounds_add() {
        let a = t(&[(-2, 1), (3, 4)]);
        let b = t(&[(-1, 5), (2, 1)]);
        let p = &a * &b;
        assert_eq!(p.min_degree(), Some(-3));
        assert_eq!(p.max_degree(), Some(5));
    }

    #[test]
    fn mismatched_variables_rejected() {
        let a = LaurentPoly::one(Var::T);
        let b = LaurentPoly::one(Var::Z);
        assert!(matches!(laurent_mul(&a, &b), Err(AlgebraError::VariableMismatch { .. })));
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = t(&[(1, 1), (2, 1)]);
        let b = t(&[(1, -1)]);
        let s = &a + &b;
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s, t(&[(2, 1)]));
    }

    #[test]
    fn text_form() {
        let p = t(&[(-4, -1), (-3, 1), (-1, 1)]);
        assert_eq!(p.to_text(), "-1*t^-4 + 1*t^-3 + 1*t^-1");
        assert_eq!(LaurentPoly::parse_text(&p.to_text()).unwrap(), p);
        let z = LaurentPoly::zero(Var::Z);
        assert_eq!(LaurentPoly::parse_text(&z.to_text()).unwrap(), z);
        assert!(LaurentPoly::parse_text("1*t^1 + 2*z^2").is_err());
    }

    #[test]
    fn json_form_with_big_coefficient() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let mut p = t(&[(0, 1)]);
        p.add_term(7, big);
        let j = p.to_json();
        assert_eq!(j["var"], "t");
        assert_eq!(LaurentPoly::from_json(&j).unwrap(), p);
    }

    #[test]
    fn evaluation() {
        let p = t(&[(0, 1), (2, -1)]);
        assert_eq!(p.eval_integer(&BigInt::from(3)), Some(BigInt::from(-8)));
        let q = t(&[(-1, 1), (1, 1)]);
        assert_eq!(q.eval_integer(&BigInt::from(-1)), Some(BigInt::from(-2)));
        assert_eq!(q.eval_integer(&BigInt::from(2)), None);
    }
}
