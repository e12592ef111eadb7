//! Face traversal of the rotation system.
//!
//! Arriving at slot `s` of a crossing with the face on the left, the walk leaves
//! through slot `s - 1`. Each port is arrived at exactly once over all faces.

use super::wiring::{crossing_of, port, slot_of, Wiring, NONE};
use super::{Arc, Diagram};

/// One side of an arc: `left` is relative to the arc's direction of travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub arc: Arc,
    pub left: bool,
}

#[derive(Clone, Debug)]
pub struct FaceMap {
    /// Arrival ports of each face, in walking order.
    pub(crate) faces: Vec<Vec<usize>>,
    pub(crate) face_of: Vec<usize>,
}

impl FaceMap {
    pub(crate) fn build(w: &Wiring) -> FaceMap {
        let mut face_of = vec![NONE; w.partner.len()];
        let mut faces = Vec::new();
        for c in w.alive_crossings() {
            for s in 0..4 {
                let start = port(c, s);
                if face_of[start] != NONE || w.partner[start] == NONE {
                    continue;
                }
                let id = faces.len();
                let mut cycle = Vec::new();
                let mut p = start;
                loop {
                    face_of[p] = id;
                    cycle.push(p);
                    let leave = port(crossing_of(p), (slot_of(p) + 3) % 4);
                    p = w.partner[leave];
                    if p == start || p == NONE {
                        break;
                    }
                }
                faces.push(cycle);
            }
        }
        FaceMap { faces, face_of }
    }
}

impl Diagram {
    /// Faces as lists of darts, followed by two faces per crossingless circle.
    ///
    /// Arc labels are read from the diagram itself, so this is only meaningful on a
    /// structurally valid diagram.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let w = Wiring::from_diagram(self);
        let fm = w.faces();
        let mut out: Vec<Vec<Dart>> = fm
            .faces
            .iter()
            .map(|f| {
                f.iter()
                    .map(|&p| {
                        if w.is_in(p) {
                            Dart { arc: w.key[p] as Arc, left: true }
                        } else {
                            Dart { arc: w.key[w.partner[p]] as Arc, left: false }
                        }
                    })
                    .collect()
            })
            .collect();
        for a in self.free_loops() {
            out.push(vec![Dart { arc: a, left: true }]);
            out.push(vec![Dart { arc: a, left: false }]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn every_dart_lies_on_one_face() {
        let d = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        let faces = d.faces();
        let mut darts: Vec<Dart> = faces.iter().flatten().copied().collect();
        darts.sort();
        let n = darts.len();
        darts.dedup();
        assert_eq!(n, darts.len());
        assert_eq!(n as u32, 2 * d.arc_count());
        // V - E + F = 2 for a connected diagram
        assert_eq!(faces.len(), d.crossing_count() + 2);
    }

    #[test]
    fn circle_has_two_faces() {
        let faces = Diagram::unknot().faces();
        assert_eq!(faces.len(), 2);
    }
}
