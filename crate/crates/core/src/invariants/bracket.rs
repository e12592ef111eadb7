//! Kauffman bracket by a sweep over crossings that keeps, for every partial state,
//! only how the strands seen so far pair up their open ends.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::InvariantError;
use crate::algebra::{LaurentPoly, Var};
use crate::diagram::{Arc, Diagram};

/// Largest diagram the sweep accepts.
pub const BRACKET_CROSSING_LIMIT: usize = 40;
/// Largest diagram the plain state sum accepts.
pub const STATE_SUM_CROSSING_LIMIT: usize = 16;

/// `-A^2 - A^-2`
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(Var::A, [(2, -1), (-2, -1)])
}

/// Open ends paired by the strands built so far, stored both ways and sorted.
type Pairing = Vec<(Arc, Arc)>;

fn partner(p: &Pairing, a: Arc) -> Option<Arc> {
    p.binary_search_by_key(&a, |e| e.0).ok().map(|i| p[i].1)
}

fn remove(p: &mut Pairing, a: Arc) {
    if let Ok(i) = p.binary_search_by_key(&a, |e| e.0) {
        p.remove(i);
    }
}

fn insert(p: &mut Pairing, a: Arc, b: Arc) {
    for (x, y) in [(a, b), (b, a)] {
        let i = p.binary_search_by_key(&x, |e| e.0).unwrap_err();
        p.insert(i, (x, y));
    }
}

/// Joins the ends `x` and `y` by a strand; returns whether a loop closed.
fn join(p: &mut Pairing, x: Arc, y: Arc) -> bool {
    if x == y {
        return true;
    }
    match (partner(p, x), partner(p, y)) {
        (Some(px), Some(_)) if px == y => {
            remove(p, x);
            remove(p, y);
            true
        }
        (px, py) => {
            remove(p, x);
            remove(p, y);
            let ex = px.unwrap_or(x);
            let ey = py.unwrap_or(y);
            if px.is_some() {
                remove(p, ex);
            }
            if py.is_some() {
                remove(p, ey);
            }
            insert(p, ex, ey);
            false
        }
    }
}

/// Crossing order that keeps few strands open: repeatedly take the crossing sharing
/// the most arcs with those already taken.
fn sweep_order(d: &Diagram) -> Vec<usize> {
    let n = d.crossing_count();
    let mut done = vec![false; n];
    let mut open: HashMap<Arc, u32> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = d.crossings()[c].slots.iter().filter(|a| open.contains_key(a)).count();
                (shared, std::cmp::Reverse(c))
            })
            .unwrap();
        done[best] = true;
        order.push(best);
        for &a in &d.crossings()[best].slots {
            let e = open.entry(a).or_insert(0);
            *e += 1;
            if *e == 2 {
                open.remove(&a);
            }
        }
    }
    order
}

/// Kauffman bracket in `A`, normalized so the crossingless unknot has bracket 1.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    if d.crossing_count() > BRACKET_CROSSING_LIMIT {
        return Err(InvariantError::TooManyCrossings { crossings: d.crossing_count(), limit: BRACKET_CROSSING_LIMIT });
    }
    let delta = loop_value();
    let free = d.free_loops().len();
    if d.crossing_count() == 0 {
        return Ok(delta.pow(free.saturating_sub(1) as u32));
    }
    // (pairing, some loop already closed) -> weight
    let mut states: HashMap<(Pairing, bool), LaurentPoly> = HashMap::new();
    states.insert((Vec::new(), false), LaurentPoly::one(Var::A));
    for c in sweep_order(d) {
        let [a, b, cc, dd] = d.crossings()[c].slots;
        let mut next: HashMap<(Pairing, bool), LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for ((pairing, closed), w) in &states {
            for (shift, (p1, p2)) in [(1, ((a, b), (cc, dd))), (-1, ((a, dd), (b, cc)))] {
                let mut p = pairing.clone();
                let mut weight = w.shift(shift);
                let mut closed = *closed;
                for (x, y) in [p1, p2] {
                    if join(&mut p, x, y) {
                        if closed {
                            weight = &weight * &delta;
                        }
                        closed = true;
                    }
                }
                let slot = next.entry((p, closed)).or_insert_with(|| LaurentPoly::zero(Var::A));
                *slot = &*slot + &weight;
            }
        }
        states = next;
    }
    let mut total = LaurentPoly::zero(Var::A);
    for ((p, _), w) in states {
        debug_assert!(p.is_empty());
        total = &total + &w;
    }
    Ok(&total * &delta.pow(free as u32))
}

/// The plain `2^c` state sum; independent of the sweep and used to check it.
pub fn bracket_state_sum(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    let n = d.crossing_count();
    if n > STATE_SUM_CROSSING_LIMIT {
        return Err(InvariantError::TooManyCrossings { crossings: n, limit: STATE_SUM_CROSSING_LIMIT });
    }
    let arcs = d.arc_count() as usize;
    let delta = loop_value();
    let mut by_loops: HashMap<(i64, usize), BigInt> = HashMap::new();
    for state in 0u32..(1 << n) {
        let mut parent: Vec<usize> = (0..=arcs).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut a_minus_b = 0i64;
        for (i, c) in d.crossings().iter().enumerate() {
            let [a, b, cc, dd] = c.slots.map(|x| x as usize);
            let pairs = if state >> i & 1 == 0 {
                a_minus_b += 1;
                [(a, b), (cc, dd)]
            } else {
                a_minus_b -= 1;
                [(a, dd), (b, cc)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
        let loops = (1..=arcs).filter(|&x| find(&mut parent, x) == x).count();
        *by_loops.entry((a_minus_b, loops)).or_default() += 1;
    }
    let mut total = LaurentPoly::zero(Var::A);
    for ((e, loops), count) in by_loops {
        let term = delta.pow(loops as u32 - 1).shift(e).scale(&count);
        total = &total + &term;
    }
    Ok(total)
}

/// Jones polynomial in `u` with `t = u^4`: `(-A^3)^(-w) <D>` at `A = u^-1`.
pub fn jones(d: &Diagram) -> Result<LaurentPoly, InvariantError> {
    Ok(normalize_bracket(&kauffman_bracket(d)?, d.writhe()))
}

pub(crate) fn normalize_bracket(bracket: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    bracket.shift(-3 * writhe).scale(&BigInt::from(sign)).invert_variable().retag(Var::U)
}

/// Jones polynomial in `t`, when every exponent in `u` is a multiple of 4 (always so for knots).
pub fn jones_in_t(d: &Diagram) -> Result<Option<LaurentPoly>, InvariantError> {
    Ok(jones(d)?.compress_exponents(Var::T, 4))
}
