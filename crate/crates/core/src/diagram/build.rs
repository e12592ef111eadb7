use super::wiring::{port, Wiring};
use super::{Arc, Diagram, DiagramError, Sign};

/// Adds a crossing described geometrically: positions `0..4` run counterclockwise and
/// each strand is given as `(entry, exit)` positions. Returns the port at each position.
pub(crate) fn add_geometric_crossing(w: &mut Wiring, under: (usize, usize), over: (usize, usize)) -> [usize; 4] {
    debug_assert_eq!((under.0 + 2) % 4, under.1);
    debug_assert_eq!((over.0 + 2) % 4, over.1);
    let sign = match (over.0 + 4 - under.0) % 4 {
        3 => Sign::Positive,
        1 => Sign::Negative,
        _ => unreachable!("strands of a crossing must be transverse"),
    };
    let c = w.add_crossing(sign);
    let mut ports = [0; 4];
    for (g, p) in ports.iter_mut().enumerate() {
        *p = port(c, (g + 4 - under.0) % 4);
    }
    ports
}

/// Positions of a braid crossing, counterclockwise.
pub(crate) const BL: usize = 0;
pub(crate) const BR: usize = 1;
pub(crate) const TR: usize = 2;
pub(crate) const TL: usize = 3;

/// One braid letter on two adjacent strands. `up_left`/`up_right` say whether the strand
/// entering from the bottom-left / bottom-right travels upward. A positive letter puts the
/// bottom-left to top-right strand on top.
pub(crate) fn add_braid_crossing(w: &mut Wiring, positive: bool, up_left: bool, up_right: bool) -> [usize; 4] {
    let left = if up_left { (BL, TR) } else { (TR, BL) };
    let right = if up_right { (BR, TL) } else { (TL, BR) };
    if positive {
        add_geometric_crossing(w, right, left)
    } else {
        add_geometric_crossing(w, left, right)
    }
}

/// Closure of a braid word on `strands` upward-oriented strands; letter `+i` is a
/// positive crossing of strands `i` and `i + 1`.
pub fn braid_closure(word: &[i32], strands: usize) -> Result<Diagram, DiagramError> {
    if strands == 0 {
        return Err(DiagramError::BraidLetter { letter: 0, strands });
    }
    for &letter in word {
        let i = letter.unsigned_abs() as usize;
        if letter == 0 || i >= strands {
            return Err(DiagramError::BraidLetter { letter, strands });
        }
    }
    let mut w = Wiring::empty();
    // first incoming port and latest outgoing port at each position
    let mut bottom: Vec<Option<usize>> = vec![None; strands];
    let mut top: Vec<Option<usize>> = vec![None; strands];
    for &letter in word {
        let j = letter.unsigned_abs() as usize - 1;
        let ports = add_braid_crossing(&mut w, letter > 0, true, true);
        for (pos, entry) in [(j, ports[BL]), (j + 1, ports[BR])] {
            match top[pos] {
                Some(out) => {
                    let k = w.fresh_key();
                    w.connect(out, entry, k);
                }
                None => bottom[pos] = Some(entry),
            }
        }
        top[j] = Some(ports[TL]);
        top[j + 1] = Some(ports[TR]);
    }
    for pos in 0..strands {
        let k = w.fresh_key();
        match (top[pos], bottom[pos]) {
            (Some(out), Some(entry)) => w.connect(out, entry, k),
            _ => w.loops.push(k),
        }
    }
    Ok(w.to_diagram())
}

/// Band sum of two knots along arc `a1` of `d1` and arc `a2` of `d2`.
pub fn connected_sum(d1: &Diagram, d2: &Diagram, a1: Arc, a2: Arc) -> Result<Diagram, DiagramError> {
    for d in [d1, d2] {
        if !d.is_knot() {
            return Err(DiagramError::NotAKnot(d.component_count()));
        }
    }
    d1.check_arc(a1)?;
    d2.check_arc(a2)?;
    if d2.crossing_count() == 0 {
        return Ok(Wiring::from_diagram(d1).to_diagram());
    }
    if d1.crossing_count() == 0 {
        return Ok(Wiring::from_diagram(d2).to_diagram());
    }
    let mut w = Wiring::from_diagram(d1);
    let w2 = Wiring::from_diagram(d2);
    let offset_ports = w.partner.len();
    let offset_key = u64::from(d1.arc_count());
    let head_of = |w: &Wiring, a: Arc| w.alive_in_ports().find(|&p| w.key[p] == u64::from(a)).unwrap();
    let h1 = head_of(&w, a1);
    let h2 = head_of(&w2, a2) + offset_ports;
    for c in w2.alive_crossings() {
        let nc = w.add_crossing(w2.signs[c]);
        for s in 0..4 {
            let p = port(c, s);
            w.partner[port(nc, s)] = w2.partner[p] + offset_ports;
            w.key[port(nc, s)] = w2.key[p] + offset_key;
        }
    }
    let t1 = w.partner[h1];
    let t2 = w.partner[h2];
    let (k1, k2) = (w.key[h1], w.key[h2]);
    w.connect(t1, h2, k1);
    w.connect(t2, h1, k2);
    Ok(w.to_diagram())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        assert_eq!(d.validate(), vec![]);
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        assert!(d.is_knot());
    }

    #[test]
    fn empty_word_is_unlink() {
        assert_eq!(braid_closure(&[], 1).unwrap(), Diagram::unknot());
        assert_eq!(braid_closure(&[], 3).unwrap(), Diagram::unlink(3));
    }

    #[test]
    fn figure_eight_closure() {
        let d = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        assert_eq!(d.validate(), vec![]);
        assert_eq!(d.writhe(), 0);
        assert!(d.is_knot());
    }

    #[test]
    fn letter_out_of_range() {
        assert!(braid_closure(&[2], 2).is_err());
        assert!(braid_closure(&[0], 3).is_err());
    }

    #[test]
    fn connected_sum_adds_crossings() {
        let t = braid_closure(&[1, 1, 1], 2).unwrap();
        let f = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        for a1 in 1..=t.arc_count() {
            for a2 in 1..=f.arc_count() {
                let s = connected_sum(&t, &f, a1, a2).unwrap();
                assert_eq!(s.validate(), vec![], "arcs {a1} {a2}");
                assert_eq!(s.crossing_count(), 7);
                assert!(s.is_knot());
            }
        }
        assert_eq!(connected_sum(&t, &Diagram::unknot(), 1, 1).unwrap(), t);
        assert!(connected_sum(&t, &Diagram::unlink(2), 1, 1).is_err());
    }
}
