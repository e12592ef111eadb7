//! Fox colorings and the determinant, from the coloring matrix on over-arcs.

use num_bigint::BigInt;
use num_traits::Signed;

use super::InvariantError;
use crate::algebra::{count_solutions_mod, IntMatrix};
use crate::diagram::Diagram;

/// Maps every PD arc to its over-arc (the arcs of a diagram between undercrossings).
/// Returns the map (indexed by PD label) and the number of over-arcs.
pub fn over_arcs(d: &Diagram) -> (Vec<usize>, usize) {
    let n = d.arc_count() as usize;
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for c in d.crossings() {
        let (a, b) = (find(&mut parent, c.over_in() as usize), find(&mut parent, c.over_out() as usize));
        parent[a] = b;
    }
    let mut index = vec![usize::MAX; n + 1];
    let mut count = 0;
    let mut of = vec![0; n + 1];
    for (a, slot) in of.iter_mut().enumerate().skip(1) {
        let r = find(&mut parent, a);
        if index[r] == usize::MAX {
            index[r] = count;
            count += 1;
        }
        *slot = index[r];
    }
    (of, count)
}

/// Rows are crossings with relation `2*over - under_in - under_out`; columns are over-arcs.
pub fn coloring_matrix(d: &Diagram) -> IntMatrix {
    let (of, count) = over_arcs(d);
    let mut m = IntMatrix::zeros(d.crossing_count(), count);
    for (i, c) in d.crossings().iter().enumerate() {
        m[(i, of[c.over_in() as usize])] += 2;
        m[(i, of[c.under_in() as usize])] -= 1;
        m[(i, of[c.under_out() as usize])] -= 1;
    }
    m
}

/// Number of Fox `m`-colorings, trivial ones included.
pub fn colorings(d: &Diagram, m: u64) -> Result<BigInt, InvariantError> {
    if m < 2 {
        return Err(InvariantError::BadParameter(format!("coloring modulus must be at least 2, got {m}")));
    }
    Ok(count_solutions_mod(&coloring_matrix(d), m))
}

/// `|det|` of the coloring matrix with its first row and column deleted.
pub fn determinant(d: &Diagram) -> Result<BigInt, InvariantError> {
    if !d.is_knot() {
        return Err(InvariantError::NotAKnot { invariant: "det".into(), components: d.component_count() });
    }
    if d.crossing_count() == 0 {
        return Ok(BigInt::from(1));
    }
    let m = coloring_matrix(d);
    Ok(m.minor(0, 0).determinant().abs())
}

/// Counts colorings by trying every assignment of colors to over-arcs.
pub fn colorings_brute_force(d: &Diagram, m: u64) -> u64 {
    let (of, count) = over_arcs(d);
    let rows: Vec<[usize; 3]> = d
        .crossings()
        .iter()
        .map(|c| [of[c.over_in() as usize], of[c.under_in() as usize], of[c.under_out() as usize]])
        .collect();
    let mut colors = vec![0u64; count];
    let mut total = 0;
    loop {
        if rows.iter().all(|&[o, a, b]| (2 * colors[o] + 2 * m - colors[a] - colors[b]).is_multiple_of(m)) {
            total += 1;
        }
        let mut i = 0;
        loop {
            if i == count {
                return total;
            }
            colors[i] += 1;
            if colors[i] < m {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}
