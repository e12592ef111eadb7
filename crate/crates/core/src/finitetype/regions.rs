//! Enumeration of strand bundles along dual paths.
//!
//! A region is read off a path `F0 -x1- F1 -x2- ... -xk- Fk` in the dual graph: the
//! chord of the disk runs through the faces and crosses arc `x_i` going from `F(i-1)`
//! to `F(i)`; the strand points "up" exactly when `F(i-1)` lies on its left. A path
//! may jump to a split piece of the diagram, provided each piece is visited in one
//! contiguous run. Every enumerated region is checked by an actual insertion.

use std::collections::BTreeSet;

use crate::diagram::wiring::port;
use crate::diagram::{Arc, Diagram, DiagramError, Sign, TwistRegion, Wiring};

#[derive(Clone, Copy, Debug)]
struct ArcSides {
    arc: Arc,
    left: usize,
    right: usize,
    free_loop: bool,
}

struct DualGraph {
    arcs: Vec<ArcSides>,
    /// faces of each piece
    piece_faces: Vec<Vec<usize>>,
}

impl DualGraph {
    fn build(d: &Diagram) -> DualGraph {
        let w = Wiring::from_diagram(d);
        let fm = w.faces();
        let pieces = w.pieces();
        let mut piece_of_crossing = vec![usize::MAX; w.signs.len()];
        for (i, p) in pieces.iter().enumerate() {
            for &c in p {
                piece_of_crossing[c] = i;
            }
        }
        let mut piece_faces = vec![Vec::new(); pieces.len()];
        for (fi, f) in fm.faces.iter().enumerate() {
            piece_faces[piece_of_crossing[f[0] / 4]].push(fi);
        }
        let mut arcs = Vec::new();
        for h in w.alive_in_ports() {
            arcs.push(ArcSides {
                arc: w.key[h] as Arc,
                left: fm.face_of[h],
                right: fm.face_of[w.partner[h]],
                free_loop: false,
            });
        }
        let mut next_face = fm.faces.len();
        for a in d.free_loops() {
            piece_faces.push(vec![next_face, next_face + 1]);
            arcs.push(ArcSides { arc: a, left: next_face, right: next_face + 1, free_loop: true });
            next_face += 2;
        }
        arcs.sort_by_key(|a| a.arc);
        DualGraph { arcs, piece_faces }
    }

    /// Arcs on the boundary of `face`, with the strand direction seen when crossing out of it.
    fn exits(&self, face: usize) -> impl Iterator<Item = (usize, Sign, usize)> + '_ {
        self.arcs.iter().enumerate().flat_map(move |(i, a)| {
            let mut out = Vec::new();
            if a.left == face {
                out.push((i, Sign::Positive, a.right));
            }
            if a.right == face {
                out.push((i, Sign::Negative, a.left));
            }
            out
        })
    }
}

struct Search<'a> {
    g: &'a DualGraph,
    max_k: usize,
    strands: Vec<(Arc, Sign)>,
    uses: Vec<u8>,
    /// faces entered in the current piece, the start face excluded
    faces: Vec<usize>,
    pieces_done: Vec<bool>,
    found: BTreeSet<Vec<(Arc, Sign)>>,
}

impl Search<'_> {
    fn record(&mut self) {
        let r = TwistRegion::new(self.strands.clone());
        let rev = r.reversed();
        self.found.insert(r.strands.min(rev.strands));
    }

    fn start_piece(&mut self, piece: usize) {
        self.pieces_done[piece] = true;
        for &f in &self.g.piece_faces[piece].clone() {
            self.walk(f);
        }
        self.pieces_done[piece] = false;
    }

    fn walk(&mut self, face: usize) {
        if self.strands.len() == self.max_k {
            return;
        }
        // leaving `face` makes it intermediate; intermediate faces are distinct
        if let Some((_, earlier)) = self.faces.split_last() {
            if earlier.contains(&face) {
                return;
            }
        }
        let exits: Vec<_> = self.g.exits(face).collect();
        for (i, sign, to) in exits {
            let a = self.g.arcs[i];
            if self.uses[i] >= if a.free_loop { 2 } else { 1 } {
                continue;
            }
            self.uses[i] += 1;
            self.strands.push((a.arc, sign));
            self.faces.push(to);
            self.record();
            self.walk(to);
            for p in 0..self.g.piece_faces.len() {
                if !self.pieces_done[p] {
                    let saved = std::mem::take(&mut self.faces);
                    self.start_piece(p);
                    self.faces = saved;
                }
            }
            self.faces.pop();
            self.strands.pop();
            self.uses[i] -= 1;
        }
    }
}

/// Regions of at most `max_k` strands whose algebraic strand count `q_j` passes the
/// filter: `q_j = 0` or `q_j` a multiple of `q` (just `q_j = q` when `strict`).
/// Ordered by strand list; a region and its reverse are listed once.
pub fn region_enumerator(d: &Diagram, max_k: usize, q: u64, strict: bool) -> Vec<TwistRegion> {
    if max_k == 0 {
        return Vec::new();
    }
    let g = DualGraph::build(d);
    let mut s = Search {
        g: &g,
        max_k,
        strands: Vec::new(),
        uses: vec![0; g.arcs.len()],
        faces: Vec::new(),
        pieces_done: vec![false; g.piece_faces.len()],
        found: BTreeSet::new(),
    };
    for p in 0..g.piece_faces.len() {
        s.start_piece(p);
    }
    s.found
        .into_iter()
        .map(TwistRegion::new)
        .filter(|r| q_filter(r.q(), q, strict))
        .filter(|r| r.len() < 2 || d.insert_twist(r, 1).is_ok())
        .collect()
}

/// The four two-strand regions hugging the corners of crossing `c`, as
/// `(region, q_signed)`. At a corner with `q = 0`, one full twist of sign `sign(c)`
/// has the effect of changing the crossing. Corners whose two sides are the same arc
/// are left out.
pub fn corner_regions(d: &Diagram, c: usize) -> Result<Vec<TwistRegion>, DiagramError> {
    d.check_crossing(c)?;
    let w = Wiring::from_diagram(d);
    let dart = |p: usize| if w.is_in(p) { (w.key[p] as Arc, true) } else { (w.key[w.partner[p]] as Arc, false) };
    let mut out = Vec::new();
    for s in 0..4 {
        let (x, x_left) = dart(port(c, s));
        let leave = port(c, (s + 3) % 4);
        let (y, _) = dart(leave);
        let y_left = !w.is_in(leave);
        if x == y {
            continue;
        }
        let sx = if x_left { Sign::Negative } else { Sign::Positive };
        let sy = if y_left { Sign::Positive } else { Sign::Negative };
        out.push(TwistRegion::new(vec![(x, sx), (y, sy)]));
    }
    Ok(out)
}

pub fn q_filter(qj: u64, q: u64, strict: bool) -> bool {
    if strict {
        qj == q
    } else if q == 0 {
        qj == 0
    } else {
        qj.is_multiple_of(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn unknot_has_doubled_self_bundle() {
        let rs = region_enumerator(&Diagram::unknot(), 2, 0, false);
        assert!(rs.iter().any(|r| r.len() == 2 && r.q() == 0), "{rs:?}");
        assert!(rs.iter().all(|r| r.q() == 0));
    }

    #[test]
    fn unlink_has_parallel_bundle() {
        let rs = region_enumerator(&Diagram::unlink(2), 2, 2, false);
        assert!(rs.iter().any(|r| r.len() == 2 && r.q() == 2 && r.strands[0].0 != r.strands[1].0), "{rs:?}");
    }

    #[test]
    fn strict_filter_excludes_zero() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        let strict = region_enumerator(&d, 2, 2, true);
        assert!(!strict.is_empty());
        assert!(strict.iter().all(|r| r.q() == 2));
        let loose = region_enumerator(&d, 2, 2, false);
        assert!(loose.iter().any(|r| r.q() == 0));
        assert!(loose.len() > strict.len());
    }

    #[test]
    fn clasp_at_a_corner_changes_the_crossing() {
        let d = braid_closure(&[1, 1, 1, 2, -1, 2], 3).unwrap();
        for c in 0..d.crossing_count() {
            let changed = d.crossing_change(c).unwrap().simplify().canonical();
            let n = d.crossings()[c].sign.value();
            let clasps: Vec<_> = corner_regions(&d, c).unwrap().into_iter().filter(|r| r.q() == 0).collect();
            assert_eq!(clasps.len(), 2);
            for r in clasps {
                let t = d.insert_twist(&r, n).unwrap().diagram;
                assert_eq!(crate::invariants::jones(&t).unwrap(), crate::invariants::jones(&changed).unwrap());
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_insertable() {
        let d = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        let a = region_enumerator(&d, 3, 1, false);
        assert_eq!(a, region_enumerator(&d, 3, 1, false));
        for r in &a {
            for n in [-1, 1, 2] {
                let t = d.insert_twist(r, n).unwrap();
                assert_eq!(t.diagram.validate(), vec![]);
                assert_eq!(t.diagram.component_count(), d.component_count());
            }
        }
    }
}
