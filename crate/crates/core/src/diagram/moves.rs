use super::build::add_geometric_crossing;
use super::faces::Dart;
use super::wiring::{crossing_of, port, slot_of, through, EdgeRef, Wiring};
use super::{Arc, Crossing, Diagram, DiagramError, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

/// A Reidemeister move together with the site it applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReidemeisterMove {
    /// Adds a kink of the given sign on `arc`, the loop lying on `side` of the arc.
    R1Add { arc: Arc, side: Side, sign: Sign },
    /// Removes a crossing that closes a monogon.
    R1Remove { crossing: usize },
    /// Pushes a finger of `finger`'s arc across their common face and over (or under) `target`'s arc.
    R2Add { finger: Dart, target: Dart, finger_over: bool },
    /// Removes the two crossings of a bigon where one strand is over at both.
    R2Remove { crossings: (usize, usize) },
    /// Slides a strand across the crossing opposite it in a triangular face.
    R3 { crossings: [usize; 3] },
}

impl ReidemeisterMove {
    /// Change in crossing count.
    pub fn crossing_delta(&self) -> i64 {
        match self {
            ReidemeisterMove::R1Add { .. } => 1,
            ReidemeisterMove::R1Remove { .. } => -1,
            ReidemeisterMove::R2Add { .. } => 2,
            ReidemeisterMove::R2Remove { .. } => -2,
            ReidemeisterMove::R3 { .. } => 0,
        }
    }
}

fn not_applicable(msg: impl Into<String>) -> DiagramError {
    DiagramError::MoveNotApplicable(msg.into())
}

pub(crate) fn edge_of(w: &Wiring, a: Arc) -> Option<EdgeRef> {
    let key = u64::from(a);
    if let Some(index) = w.loops.iter().position(|&k| k == key) {
        return Some(EdgeRef::Loop { index });
    }
    w.alive_in_ports().find(|&p| w.key[p] == key).map(|head| EdgeRef::Edge { head })
}

fn geometric_sign(under: (usize, usize), over: (usize, usize)) -> Sign {
    if (over.0 + 4 - under.0) % 4 == 3 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

impl Diagram {
    /// Exchanges over and under at crossing `c`; labels and crossing order are kept.
    pub fn crossing_change(&self, c: usize) -> Result<Diagram, DiagramError> {
        self.change_crossings(&[c])
    }

    /// Changes every listed crossing (each at most once, duplicates toggle twice).
    pub fn change_crossings(&self, cs: &[usize]) -> Result<Diagram, DiagramError> {
        let mut d = self.clone();
        for &c in cs {
            d.check_crossing(c)?;
            let x = d.crossings()[c];
            let [a, b, cc, dd] = x.slots;
            let slots = match x.sign {
                Sign::Positive => [dd, a, b, cc],
                Sign::Negative => [b, cc, dd, a],
            };
            d.crossings_mut()[c] = Crossing { slots, sign: x.sign.flip() };
        }
        Ok(d)
    }

    /// Every crossing changed.
    pub fn mirror(&self) -> Diagram {
        let all: Vec<usize> = (0..self.crossing_count()).collect();
        self.change_crossings(&all).expect("indices in range")
    }

    /// Removes crossing `c` by the orientation-respecting smoothing.
    pub fn oriented_smoothing(&self, c: usize) -> Result<Diagram, DiagramError> {
        self.check_crossing(c)?;
        let mut w = Wiring::from_diagram(self);
        let over_in = port(c, w.over_in_slot(c));
        let over_out = through(over_in);
        w.remove_passage(port(c, 0), over_out);
        w.remove_passage(over_in, port(c, 2));
        w.alive[c] = false;
        Ok(w.to_diagram())
    }

    pub fn apply_reidemeister(&self, mv: ReidemeisterMove) -> Result<Diagram, DiagramError> {
        let mut w = Wiring::from_diagram(self);
        match mv {
            ReidemeisterMove::R1Add { arc, side, sign } => add_kink(&mut w, arc, side, sign)?,
            ReidemeisterMove::R1Remove { crossing } => {
                self.check_crossing(crossing)?;
                if !is_kink(&w, crossing) {
                    return Err(not_applicable(format!("crossing {crossing} does not close a monogon")));
                }
                w.remove_crossing(crossing);
            }
            ReidemeisterMove::R2Add { finger, target, finger_over } => {
                self.r2_add(&mut w, finger, target, finger_over)?;
            }
            ReidemeisterMove::R2Remove { crossings: (a, b) } => {
                self.check_crossing(a)?;
                self.check_crossing(b)?;
                if !removable_bigon(&w, a, b) {
                    return Err(not_applicable(format!("crossings {a},{b} do not bound a removable bigon")));
                }
                w.remove_crossing(a);
                w.remove_crossing(b);
            }
            ReidemeisterMove::R3 { crossings } => {
                for c in crossings {
                    self.check_crossing(c)?;
                }
                let plan = r3_plan(&w, crossings).ok_or_else(|| not_applicable(format!("crossings {crossings:?} are not an R3 triangle")))?;
                let snapshot: Vec<u64> = w.key.clone();
                for (out_p, in_p, key_from) in plan {
                    w.connect(out_p, in_p, snapshot[key_from]);
                }
            }
        }
        w.drop_dead_loops();
        if !w.is_planar() {
            return Err(not_applicable(format!("{mv:?} would leave a non-planar diagram")));
        }
        Ok(w.to_diagram())
    }

    /// All sites at which some move applies, in a deterministic order.
    pub fn reidemeister_sites(&self) -> Vec<ReidemeisterMove> {
        let mut out = Vec::new();
        for arc in 1..=self.arc_count() {
            for side in [Side::Left, Side::Right] {
                for sign in [Sign::Positive, Sign::Negative] {
                    out.push(ReidemeisterMove::R1Add { arc, side, sign });
                }
            }
        }
        let w = Wiring::from_diagram(self);
        for c in 0..self.crossing_count() {
            if is_kink(&w, c) {
                out.push(ReidemeisterMove::R1Remove { crossing: c });
            }
        }
        for face in self.faces() {
            for &f in &face {
                for &t in &face {
                    if f.arc != t.arc {
                        for finger_over in [true, false] {
                            out.push(ReidemeisterMove::R2Add { finger: f, target: t, finger_over });
                        }
                    }
                }
            }
        }
        let fm = w.faces();
        for face in &fm.faces {
            let mut cs: Vec<usize> = face.iter().map(|&p| crossing_of(p)).collect();
            cs.sort();
            cs.dedup();
            if let Some(pair) = bigon_crossings(&w, face) {
                out.push(ReidemeisterMove::R2Remove { crossings: pair });
            }
            if face.len() == 3 && cs.len() == 3 {
                let tri = [cs[0], cs[1], cs[2]];
                if r3_plan(&w, tri).is_some() {
                    out.push(ReidemeisterMove::R3 { crossings: tri });
                }
            }
        }
        out
    }

    fn r2_add(&self, w: &mut Wiring, finger: Dart, target: Dart, finger_over: bool) -> Result<(), DiagramError> {
        if finger.arc == target.arc {
            return Err(not_applicable("R2 needs two different arcs"));
        }
        let shared = self.faces().iter().any(|f| f.contains(&finger) && f.contains(&target));
        if !shared {
            return Err(not_applicable(format!("{finger:?} and {target:?} do not bound a common face")));
        }
        let ex = edge_of(w, finger.arc).ok_or(DiagramError::UnknownArc(finger.arc))?;
        let ey = edge_of(w, target.arc).ok_or(DiagramError::UnknownArc(target.arc))?;
        // Local picture: the finger arc runs along the bottom with the face above it,
        // the target along the top with the face below. Positions: E=0, N=1, W=2, S=3.
        let x_east = finger.left;
        let y_east = !target.left;
        let y_dir = if y_east { (2, 0) } else { (0, 2) };
        let (xa, xb) = if x_east { ((3, 1), (1, 3)) } else { ((1, 3), (3, 1)) };
        let make = |w: &mut Wiring, x_dir: (usize, usize)| {
            if finger_over {
                add_geometric_crossing(w, y_dir, x_dir)
            } else {
                add_geometric_crossing(w, x_dir, y_dir)
            }
        };
        // crossing A is the left leg of the finger, B the right leg
        let a = make(w, xa);
        let b = make(w, xb);
        let top = w.fresh_key();
        if x_east {
            w.route_through(ex, a[3], b[3]);
            w.connect(a[1], b[1], top);
        } else {
            w.route_through(ex, b[3], a[3]);
            w.connect(b[1], a[1], top);
        }
        let mid = w.fresh_key();
        if y_east {
            w.route_through(ey, a[2], b[0]);
            w.connect(a[0], b[2], mid);
        } else {
            w.route_through(ey, b[0], a[2]);
            w.connect(b[2], a[0], mid);
        }
        Ok(())
    }
}

fn add_kink(w: &mut Wiring, arc: Arc, side: Side, sign: Sign) -> Result<(), DiagramError> {
    let edge = edge_of(w, arc).ok_or(DiagramError::UnknownArc(arc))?;
    // enter from S, leave N, loop round to the chosen side, cross back.
    let first = (3, 1);
    let second = match side {
        Side::Right => (0, 2),
        Side::Left => (2, 0),
    };
    let ports = if geometric_sign(second, first) == sign {
        add_geometric_crossing(w, second, first)
    } else {
        add_geometric_crossing(w, first, second)
    };
    let k = w.fresh_key();
    w.connect(ports[first.1], ports[second.0], k);
    w.route_through(edge, ports[first.0], ports[second.1]);
    Ok(())
}

fn is_kink(w: &Wiring, c: usize) -> bool {
    (0..4).any(|s| {
        let p = port(c, s);
        let q = w.partner[p];
        !w.is_in(p) && crossing_of(q) == c && (slot_of(q) + 4 - s) % 2 == 1
    })
}

/// Crossings of a bigon face in which one strand is over at both corners.
fn bigon_crossings(w: &Wiring, f: &[usize]) -> Option<(usize, usize)> {
    if f.len() != 2 {
        return None;
    }
    let (a, b) = (crossing_of(f[0]), crossing_of(f[1]));
    if a == b {
        return None;
    }
    // one edge joins the over slots, the other the under slots
    let parity = |p: usize| (w.is_over(p), w.is_over(w.partner[p]));
    let (e1, e2) = (parity(f[0]), parity(f[1]));
    (e1.0 == e1.1 && e2.0 == e2.1 && e1.0 != e2.0).then_some((a.min(b), a.max(b)))
}

fn removable_bigon(w: &Wiring, a: usize, b: usize) -> bool {
    a != b && w.faces().faces.iter().any(|f| bigon_crossings(w, f) == Some((a.min(b), a.max(b))))
}

/// Removes curls and bigons until none is left.
pub(crate) fn simplify_wiring(w: &mut Wiring) {
    loop {
        let mut changed = false;
        for c in 0..w.signs.len() {
            if w.alive[c] && is_kink(w, c) {
                w.remove_crossing(c);
                changed = true;
            }
        }
        let bigon = w.faces().faces.iter().find_map(|f| bigon_crossings(w, f));
        if let Some((a, b)) = bigon {
            w.remove_crossing(a);
            w.remove_crossing(b);
            changed = true;
        }
        if !changed {
            break;
        }
    }
}

impl Diagram {
    /// Isotopic diagram with every curl and every bigon that a second Reidemeister move
    /// can undo removed, repeatedly.
    pub fn simplify(&self) -> Diagram {
        let mut w = Wiring::from_diagram(self);
        simplify_wiring(&mut w);
        w.to_diagram()
    }
}

/// New connections `(out, in, take key from)` realizing an R3 move on a triangle.
fn r3_plan(w: &Wiring, tri: [usize; 3]) -> Option<Vec<(usize, usize, usize)>> {
    let mut distinct = tri;
    distinct.sort();
    if distinct[0] == distinct[1] || distinct[1] == distinct[2] {
        return None;
    }
    let fm = w.faces();
    let face = fm.faces.iter().find(|f| {
        if f.len() != 3 {
            return false;
        }
        let mut cs: Vec<usize> = f.iter().map(|&p| crossing_of(p)).collect();
        cs.sort();
        cs == distinct
    })?;
    let mut plan = Vec::new();
    let mut some_top = false;
    for &p in face {
        let (in_y, out_x) = if w.is_in(p) { (p, w.partner[p]) } else { (w.partner[p], p) };
        let in_x = through(out_x);
        let out_y = through(in_y);
        let ext_src = w.partner[in_x];
        let ext_dst = w.partner[out_y];
        if distinct.contains(&crossing_of(ext_src)) || distinct.contains(&crossing_of(ext_dst)) {
            return None;
        }
        if w.is_over(in_x) && w.is_over(in_y) {
            some_top = true;
        }
        plan.push((ext_src, in_y, in_x));
        plan.push((out_y, in_x, in_y));
        plan.push((out_x, ext_dst, ext_dst));
    }
    some_top.then_some(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn crossing_change_is_an_involution() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        for c in 0..3 {
            let once = d.crossing_change(c).unwrap();
            assert_eq!(once.writhe(), 1);
            assert_eq!(once.validate(), vec![]);
            assert_eq!(once.crossing_change(c).unwrap(), d);
        }
        assert!(d.crossing_change(3).is_err());
    }

    #[test]
    fn smoothing_trefoil_gives_two_crossing_link() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        for c in 0..3 {
            let s = d.oriented_smoothing(c).unwrap();
            assert_eq!(s.validate(), vec![]);
            assert_eq!(s.crossing_count(), 2);
            assert_eq!(s.component_count(), 2);
            assert_eq!(s.linking_number(0, 1), Ok(1));
        }
    }

    #[test]
    fn kink_add_and_remove() {
        let u = Diagram::unknot();
        for side in [Side::Left, Side::Right] {
            for sign in [Sign::Positive, Sign::Negative] {
                let k = u.apply_reidemeister(ReidemeisterMove::R1Add { arc: 1, side, sign }).unwrap();
                assert_eq!(k.validate(), vec![]);
                assert_eq!(k.writhe(), sign.value());
                let back = k.apply_reidemeister(ReidemeisterMove::R1Remove { crossing: 0 }).unwrap();
                assert_eq!(back, u);
                // smoothing a kink splits off a circle
                assert_eq!(k.oriented_smoothing(0).unwrap().component_count(), 2);
            }
        }
    }

    #[test]
    fn r1_round_trip_on_trefoil() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        for arc in 1..=6 {
            let k = d.apply_reidemeister(ReidemeisterMove::R1Add { arc, side: Side::Left, sign: Sign::Negative }).unwrap();
            assert_eq!(k.validate(), vec![]);
            let back = k.apply_reidemeister(ReidemeisterMove::R1Remove { crossing: 3 }).unwrap();
            assert!(back.same_diagram(&d));
        }
    }

    #[test]
    fn every_listed_site_applies() {
        let d = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        let sites = d.reidemeister_sites();
        assert!(sites.iter().any(|m| matches!(m, ReidemeisterMove::R2Add { .. })));
        for mv in sites {
            let e = d.apply_reidemeister(mv).unwrap_or_else(|err| panic!("{mv:?}: {err}"));
            assert_eq!(e.validate(), vec![], "{mv:?}");
            assert_eq!(e.crossing_count() as i64, d.crossing_count() as i64 + mv.crossing_delta());
        }
    }

    #[test]
    fn r2_add_then_remove() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        let face = d.faces().into_iter().find(|f| f.len() >= 2).unwrap();
        let mv = ReidemeisterMove::R2Add { finger: face[0], target: face[1], finger_over: true };
        let e = d.apply_reidemeister(mv).unwrap();
        let removals: Vec<_> = e
            .reidemeister_sites()
            .into_iter()
            .filter(|m| matches!(m, ReidemeisterMove::R2Remove { crossings } if crossings.1 >= 3))
            .collect();
        assert!(!removals.is_empty());
        let back = e.apply_reidemeister(removals[0]).unwrap();
        assert!(back.same_diagram(&d));
    }

    #[test]
    fn simplify_undoes_added_curls_and_bigons() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        let k = d.apply_reidemeister(ReidemeisterMove::R1Add { arc: 2, side: Side::Right, sign: Sign::Positive }).unwrap();
        let face = k.faces().into_iter().find(|f| f.len() >= 3).unwrap();
        let e = k.apply_reidemeister(ReidemeisterMove::R2Add { finger: face[0], target: face[2], finger_over: false }).unwrap();
        assert_eq!(e.crossing_count(), 6);
        assert!(e.simplify().same_diagram(&d));
        assert_eq!(braid_closure(&[1, -1, 2, -2], 3).unwrap().simplify(), Diagram::unlink(3));
    }

    #[test]
    fn r3_is_an_involution() {
        let mut found = 0;
        for word in [vec![2, 2, 1, 2, 1, 1, 2, 2], vec![-2, 1, 2, 1, -2, 1, 1], vec![1, 2, 1, 2, 1, 2]] {
            let d = braid_closure(&word, 3).unwrap();
            let r3: Vec<_> = d.reidemeister_sites().into_iter().filter(|m| matches!(m, ReidemeisterMove::R3 { .. })).collect();
            found += r3.len();
            check_r3(&d, r3);
        }
        assert!(found > 0);
    }

    fn check_r3(d: &Diagram, r3: Vec<ReidemeisterMove>) {
        for mv in r3 {
            let e = d.apply_reidemeister(mv).unwrap();
            assert_eq!(e.validate(), vec![]);
            let ReidemeisterMove::R3 { crossings } = mv else { unreachable!() };
            let back = e.apply_reidemeister(ReidemeisterMove::R3 { crossings }).unwrap();
            assert!(back.same_diagram(d));
        }
    }
}
