//! Alexander polynomial of a knot from the Fox-calculus matrix of the Wirtinger
//! presentation, normalized and rewritten as a Conway polynomial. This path shares
//! nothing with the skein engine and serves as its reference.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coloring::over_arcs;
use super::InvariantError;
use crate::algebra::{LaurentPoly, Var};
use crate::diagram::{Diagram, Sign};

fn tpoly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(Var::T, terms.iter().copied())
}

/// Exact division of Laurent polynomials; `None` if `b` does not divide `a`.
fn divide(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if a.is_zero() {
        return Some(LaurentPoly::zero(a.var()));
    }
    let (bmin, bmax) = (b.min_degree()?, b.max_degree()?);
    let qmin = a.min_degree()? - bmin;
    let lead = b.coeff(bmax);
    let mut rem = a.clone();
    let mut q = LaurentPoly::zero(a.var());
    while let Some(rmax) = rem.max_degree() {
        let e = rmax - bmax;
        let c = rem.coeff(rmax);
        if e < qmin || !(&c % &lead).is_zero() {
            return None;
        }
        let m = LaurentPoly::monomial(a.var(), e, c / &lead);
        rem = &rem - &(&m * b);
        q = &q + &m;
    }
    Some(q)
}

/// Fraction-free determinant over `Z[t, t^-1]`.
fn poly_determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(Var::T);
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(Var::T);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(Var::T),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = divide(&num, &prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(&BigInt::from(sign))
}

/// Normalized Alexander polynomial: symmetric under `t -> 1/t` with value 1 at `t = 1`.
pub fn alexander(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    if !d.is_knot() {
        return Err(InvariantError::NotAKnot { invariant: "alexander".into(), components: d.component_count() });
    }
    if d.crossing_count() == 0 {
        return Ok(LaurentPoly::one(Var::T));
    }
    let (of, count) = over_arcs(d);
    let mut m = vec![vec![LaurentPoly::zero(Var::T); count]; d.crossing_count()];
    for (i, c) in d.crossings().iter().enumerate() {
        let (o, a, b) = (of[c.over_in() as usize], of[c.under_in() as usize], of[c.under_out() as usize]);
        let (ta, tb) = match c.sign {
            Sign::Positive => (tpoly(&[(1, 1)]), tpoly(&[(0, -1)])),
            Sign::Negative => (tpoly(&[(0, -1)]), tpoly(&[(1, 1)])),
        };
        m[i][o] = &m[i][o] + &tpoly(&[(0, 1), (1, -1)]);
        m[i][a] = &m[i][a] + &ta;
        m[i][b] = &m[i][b] + &tb;
    }
    let minor: Vec<Vec<LaurentPoly>> = m[1..].iter().map(|row| row[1..].to_vec()).collect();
    let det = poly_determinant(minor);
    let (lo, hi) = (det.min_degree().unwrap_or(0), det.max_degree().unwrap_or(0));
    if (lo + hi) % 2 != 0 {
        return Err(InvariantError::BadParameter("Alexander polynomial of a knot must have even span".into()));
    }
    let centered = det.shift(-(lo + hi) / 2);
    let at_one: BigInt = centered.terms().map(|(_, c)| c.clone()).sum();
    Ok(if at_one < BigInt::zero() { -&centered } else { centered })
}

/// Rewrites a symmetric Alexander polynomial via `z^2 = t - 2 + t^-1`.
pub fn conway_from_alexander(p: &LaurentPoly) -> LaurentPoly {
    let z2 = tpoly(&[(-1, 1), (0, -2), (1, 1)]);
    let mut rem = p.clone();
    let mut out = LaurentPoly::zero(Var::Z);
    while let Some(top) = rem.max_degree() {
        if top < 0 {
            break;
        }
        let c = rem.coeff(top);
        out.add_term(2 * top, c.clone());
        rem = &rem - &z2.pow(top as u32).scale(&c);
    }
    out
}

/// Conway polynomial of a knot through the Alexander matrix.
pub fn conway_via_alexander(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    Ok(conway_from_alexander(&alexander(d)?))
}

/// `|∇(2i)|`, which is the determinant of a knot.
pub fn determinant_from_conway(p: &LaurentPoly) -> BigInt {
    let mut acc = BigInt::zero();
    let mut power = BigInt::one();
    for e in 0..=p.max_degree().unwrap_or(0).max(0) {
        if e % 2 == 0 {
            acc += p.coeff(e) * &power;
            power *= -4;
        }
    }
    if acc < BigInt::zero() {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;
    use crate::invariants::conway::conway;

    #[test]
    fn known_alexander_polynomials() {
        assert_eq!(alexander(&braid_closure(&[1, 1, 1], 2).unwrap()).unwrap(), tpoly(&[(-1, 1), (0, -1), (1, 1)]));
        assert_eq!(alexander(&braid_closure(&[1, -2, 1, -2], 3).unwrap()).unwrap(), tpoly(&[(-1, -1), (0, 3), (1, -1)]));
    }

    #[test]
    fn matches_skein() {
        for (word, s) in [(vec![1, 1, 1, 1, 1], 2), (vec![1, 1, 1, 2, -1, 2], 3), (vec![1, 1, 2, -1, -3, 2, -3], 4), (vec![1, 1, 1, -2, 1, -2], 3)] {
            let d = braid_closure(&word, s).unwrap();
            assert_eq!(conway_via_alexander(&d).unwrap(), conway(&d), "{word:?}");
        }
    }

    #[test]
    fn determinant_at_2i() {
        let p = LaurentPoly::from_terms(Var::Z, [(0, 1), (2, 1)]);
        assert_eq!(determinant_from_conway(&p), BigInt::from(3));
        let p = LaurentPoly::from_terms(Var::Z, [(0, 1), (2, -1)]);
        assert_eq!(determinant_from_conway(&p), BigInt::from(5));
    }
}
