//! Conway polynomial by the descending-diagram skein algorithm.
//!
//! Components are walked in order from their first arc. The first crossing met from
//! below is switched, which keeps the labels and makes it met from above, and the
//! smoothing is recursed on: `∇(L+) = ∇(L-) + z ∇(L0)`. A diagram in which every
//! crossing is first met from above is a stacked unlink.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::algebra::{LaurentPoly, Var};
use crate::diagram::{Diagram, Sign, Wiring};

/// Memo table of Conway polynomials keyed by canonical diagram.
#[derive(Default, Debug, Clone)]
pub struct ConwayMemo {
    table: HashMap<Diagram, LaurentPoly>,
    /// Number of skein branches expanded, for diagnostics.
    pub expanded: u64,
}

impl ConwayMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn conway(&mut self, d: &Diagram) -> LaurentPoly {
        let mut w = Wiring::from_diagram(d);
        crate::diagram::simplify_wiring(&mut w);
        let split = w.pieces().len() + w.loops.len() > 1;
        if split {
            return LaurentPoly::zero(Var::Z);
        }
        let key = w.canonical_diagram();
        if key.crossing_count() == 0 {
            return LaurentPoly::one(Var::Z);
        }
        if let Some(v) = self.table.get(&key) {
            return v.clone();
        }
        let v = self.expand(&key);
        self.table.insert(key, v.clone());
        v
    }

    fn expand(&mut self, d: &Diagram) -> LaurentPoly {
        let z = LaurentPoly::monomial(Var::Z, 1, 1);
        let mut acc = LaurentPoly::zero(Var::Z);
        let mut current = d.clone();
        let mut last_bad = usize::MAX;
        let mut bad_count = badness(&current);
        while let Some(c) = first_bad_crossing(&current) {
            self.expanded += 1;
            debug_assert!(c != last_bad);
            last_bad = c;
            let sign = current.crossings()[c].sign;
            let smoothed = current.oriented_smoothing(c).expect("crossing index in range");
            let term = &z * &self.conway(&smoothed);
            acc = match sign {
                Sign::Positive => &acc + &term,
                Sign::Negative => &acc - &term,
            };
            current = current.crossing_change(c).expect("crossing index in range");
            let next_count = badness(&current);
            assert!(next_count < bad_count, "skein measure must decrease");
            bad_count = next_count;
        }
        if current.component_count() == 1 {
            acc = &acc + &LaurentPoly::one(Var::Z);
        }
        acc
    }
}

/// Crossings first met from below, walking components in order from their first arcs.
fn bad_crossings(d: &Diagram) -> Vec<usize> {
    let mut head = vec![(usize::MAX, false); d.arc_count() as usize + 1];
    for (ci, c) in d.crossings().iter().enumerate() {
        head[c.under_in() as usize] = (ci, false);
        head[c.over_in() as usize] = (ci, true);
    }
    let mut seen = vec![false; d.crossing_count()];
    let mut bad = Vec::new();
    for comp in d.components() {
        for a in comp.arcs() {
            let (c, over) = head[a as usize];
            if c == usize::MAX || seen[c] {
                continue;
            }
            seen[c] = true;
            if !over {
                bad.push(c);
            }
        }
    }
    bad
}

fn first_bad_crossing(d: &Diagram) -> Option<usize> {
    bad_crossings(d).first().copied()
}

fn badness(d: &Diagram) -> usize {
    bad_crossings(d).len()
}

/// Conway polynomial in `z`.
pub fn conway(d: &Diagram) -> LaurentPoly {
    ConwayMemo::new().conway(d)
}

/// Coefficient of `z^n`.
pub fn conway_coefficient(p: &LaurentPoly, n: u32) -> BigInt {
    p.coeff(i64::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, connected_sum};

    fn zpoly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::Z, terms.iter().copied())
    }

    #[test]
    fn small_knots() {
        assert_eq!(conway(&Diagram::unknot()), zpoly(&[(0, 1)]));
        assert_eq!(conway(&braid_closure(&[1, 1, 1], 2).unwrap()), zpoly(&[(0, 1), (2, 1)]));
        assert_eq!(conway(&braid_closure(&[-1, -1, -1], 2).unwrap()), zpoly(&[(0, 1), (2, 1)]));
        assert_eq!(conway(&braid_closure(&[1, -2, 1, -2], 3).unwrap()), zpoly(&[(0, 1), (2, -1)]));
        assert_eq!(conway(&braid_closure(&[1; 5], 2).unwrap()), zpoly(&[(0, 1), (2, 3), (4, 1)]));
    }

    #[test]
    fn links() {
        assert_eq!(conway(&Diagram::unlink(2)), LaurentPoly::zero(Var::Z));
        // positive Hopf link: z
        assert_eq!(conway(&braid_closure(&[1, 1], 2).unwrap()), zpoly(&[(1, 1)]));
        assert_eq!(conway(&braid_closure(&[-1, -1], 2).unwrap()), zpoly(&[(1, -1)]));
        // split union of a trefoil and a circle
        assert_eq!(conway(&braid_closure(&[1, 1, 1], 3).unwrap()), LaurentPoly::zero(Var::Z));
    }

    #[test]
    fn composite_is_product() {
        let t = braid_closure(&[1, 1, 1], 2).unwrap();
        let f = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        let s = connected_sum(&t, &f, 1, 1).unwrap();
        assert_eq!(conway(&s), zpoly(&[(0, 1), (4, -1)]));
    }

    #[test]
    fn memo_is_reused() {
        let mut memo = ConwayMemo::new();
        let d = braid_closure(&[1, 1, 2, -1, -3, 2, -3], 4).unwrap();
        let first = memo.conway(&d);
        let expanded = memo.expanded;
        assert_eq!(memo.conway(&d), first);
        assert_eq!(memo.expanded, expanded);
        assert_eq!(first, zpoly(&[(0, 1), (2, -2)]));
    }
}
