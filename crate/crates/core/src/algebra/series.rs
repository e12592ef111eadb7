use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;

/// Power series in `x` with exact rational coefficients, truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { order, coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Takes the first `order + 1` coefficients, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// Truncation of `exp(rate * x)`.
    pub fn exp_linear(rate: &BigRational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = BigRational::one();
        coeffs.push(term.clone());
        for j in 1..=order {
            term = term * rate / BigRational::from_integer(BigInt::from(j));
            coeffs.push(term.clone());
        }
        TruncatedSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `x^n`; zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> BigRational {
        self.coeffs.get(n).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        Self::from_coeffs(order, (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_coeffs(self.order, self.coeffs.iter().map(|x| x * c))
    }

    /// Cauchy product; the result keeps the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().enumerate().map(|(i, c)| format!("({c})*x^{i}")).collect();
        write!(f, "{} + O(x^{})", parts.join(" + "), self.order + 1)
    }
}

/// Replaces the variable of `p` by `exp(scale * x)` and expands through `x^order`.
///
/// With `scale = 1/4` this turns a Jones polynomial written in `u = t^(1/4)` into the
/// series in `x` obtained from `t = e^x`.
pub fn substitute_exp(p: &LaurentPoly, scale: &BigRational, order: usize) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(order);
    for (k, c) in p.terms() {
        let rate = scale * BigRational::from_integer(BigInt::from(k));
        let term = TruncatedSeries::exp_linear(&rate, order).scale(&BigRational::from_integer(c.clone()));
        acc = acc.add(&term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exp_of_t() {
        let s = substitute_exp(&LaurentPoly::monomial(Var::T, 1, 1), &q(1, 1), 2);
        assert_eq!(s.coeffs(), &[q(1, 1), q(1, 1), q(1, 2)]);
    }

    #[test]
    fn constant_polynomial() {
        let s = substitute_exp(&LaurentPoly::one(Var::U), &q(1, 4), 5);
        assert_eq!(s, TruncatedSeries::one(5));
    }

    #[test]
    fn t_plus_inverse() {
        // e^x + e^-x = 2 + x^2 + O(x^3)
        let p = LaurentPoly::from_terms(Var::T, [(1, 1), (-1, 1)]);
        let s = substitute_exp(&p, &q(1, 1), 2);
        assert_eq!(s.coeffs(), &[q(2, 1), q(0, 1), q(1, 1)]);
    }

    #[test]
    fn truncation_is_respected() {
        let a = TruncatedSeries::exp_linear(&q(1, 1), 3);
        let b = TruncatedSeries::exp_linear(&q(1, 1), 3);
        let p = a.mul(&b);
        assert_eq!(p.coeffs().len(), 4);
        // e^{2x}: 1, 2, 2, 4/3
        assert_eq!(p.coeffs(), &[q(1, 1), q(2, 1), q(2, 1), q(4, 3)]);
        assert_eq!(p.coeff(4), q(0, 1));
    }
}
