//! Inserting full twists into a bundle of parallel strands.

use std::collections::HashMap;
use std::fmt;

use super::build::{add_braid_crossing, BL, BR, TL, TR};
use super::moves::edge_of;
use super::wiring::{EdgeRef, Wiring, NONE};
use super::{Arc, Diagram, DiagramError, Sign};

/// A disk meeting the diagram in a bundle of strands, listed left to right along a
/// chord of the disk. A strand with sign `Positive` crosses the chord heading "up",
/// i.e. with the region's left side on its left. An arc may appear twice with opposite
/// signs; it then turns back below the chord.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistRegion {
    pub strands: Vec<(Arc, Sign)>,
}

impl TwistRegion {
    pub fn new(strands: Vec<(Arc, Sign)>) -> Self {
        TwistRegion { strands }
    }

    pub fn len(&self) -> usize {
        self.strands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }

    /// Signed count of strands.
    pub fn algebraic_count(&self) -> i64 {
        self.strands.iter().map(|s| s.1.value()).sum()
    }

    /// Algebraic strand count `q_j`, signed.
    pub fn q_signed(&self) -> i64 {
        self.algebraic_count()
    }

    pub fn q(&self) -> u64 {
        self.algebraic_count().unsigned_abs()
    }

    pub fn reversed(&self) -> TwistRegion {
        TwistRegion { strands: self.strands.iter().rev().map(|&(a, s)| (a, s.flip())).collect() }
    }

    /// Parses `3+,5-,1+`.
    pub fn parse(text: &str) -> Result<TwistRegion, DiagramError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(DiagramError::BadRegion("empty region".into()));
        }
        let strands = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                let (num, sign) = match tok.chars().last() {
                    Some('+') => (&tok[..tok.len() - 1], Sign::Positive),
                    Some('-') => (&tok[..tok.len() - 1], Sign::Negative),
                    _ => return Err(DiagramError::BadRegion(format!("strand `{tok}` needs a trailing + or -"))),
                };
                let arc = num.parse::<Arc>().map_err(|_| DiagramError::BadRegion(format!("`{num}` is not an arc label")))?;
                Ok((arc, sign))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TwistRegion { strands })
    }
}

impl fmt::Display for TwistRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, s)) in self.strands.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}{}", if *s == Sign::Positive { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// Result of a twist insertion: the new diagram and, for each region, the strands just
/// below the inserted braid in the new labeling.
#[derive(Clone, Debug)]
pub struct Twisted {
    pub diagram: Diagram,
    pub regions: Vec<TwistRegion>,
}

struct Bundle {
    /// Bottom-most and top-most port at each position.
    first: Vec<usize>,
    last: Vec<usize>,
}

fn build_full_twists(w: &mut Wiring, ups: &[bool], n: i64) -> Option<Bundle> {
    let k = ups.len();
    if k < 2 || n == 0 {
        return None;
    }
    let mut occupant: Vec<usize> = (0..k).collect();
    let mut first = vec![NONE; k];
    let mut last = vec![NONE; k];
    let positive = n > 0;
    let rounds = k * n.unsigned_abs() as usize;
    for _ in 0..rounds {
        for j in 0..k - 1 {
            let (ul, ur) = (ups[occupant[j]], ups[occupant[j + 1]]);
            let ports = add_braid_crossing(w, positive, ul, ur);
            for (pos, bottom, top, up) in [(j, ports[BL], ports[TL], ul), (j + 1, ports[BR], ports[TR], ur)] {
                if last[pos] == NONE {
                    first[pos] = bottom;
                } else {
                    let key = w.fresh_key();
                    if up {
                        w.connect(last[pos], bottom, key);
                    } else {
                        w.connect(bottom, last[pos], key);
                    }
                }
                last[pos] = top;
            }
            occupant.swap(j, j + 1);
        }
    }
    debug_assert!(occupant.iter().enumerate().all(|(i, &o)| i == o));
    Some(Bundle { first, last })
}

impl Diagram {
    /// Inserts `n` full twists in one region.
    pub fn insert_twist(&self, region: &TwistRegion, n: i64) -> Result<Twisted, DiagramError> {
        self.insert_twists(&[(region.clone(), n)])
    }

    /// Inserts twists in several regions at once; arcs refer to this diagram's labels.
    /// Distinct regions must not share arcs.
    pub fn insert_twists(&self, regions: &[(TwistRegion, i64)]) -> Result<Twisted, DiagramError> {
        let mut uses: HashMap<Arc, Vec<(usize, Sign)>> = HashMap::new();
        for (ri, (r, _)) in regions.iter().enumerate() {
            if r.is_empty() {
                return Err(DiagramError::BadRegion(format!("region {ri} is empty")));
            }
            for &(a, s) in &r.strands {
                self.check_arc(a)?;
                uses.entry(a).or_default().push((ri, s));
            }
        }
        for (a, u) in &uses {
            let ok = match u.as_slice() {
                [_] => true,
                [(r1, s1), (r2, s2)] => r1 == r2 && s1 != s2,
                _ => false,
            };
            if !ok {
                return Err(DiagramError::BadRegion(format!("arc {a} is used more than once")));
            }
        }

        let mut w = Wiring::from_diagram(self);
        let mut current: HashMap<Arc, EdgeRef> = uses.keys().map(|&a| (a, edge_of(&w, a).expect("checked arc"))).collect();
        let mut bottoms: Vec<Option<Vec<(usize, bool, Sign)>>> = Vec::new();
        for (r, n) in regions {
            let ups: Vec<bool> = r.strands.iter().map(|s| s.1 == Sign::Positive).collect();
            let Some(bundle) = build_full_twists(&mut w, &ups, *n) else {
                bottoms.push(None);
                continue;
            };
            // an arc met twice is traversed down first, turning back below the chord
            let mut order: Vec<usize> = (0..r.len()).collect();
            order.sort_by_key(|&pos| ups[pos]);
            for pos in order {
                let a = r.strands[pos].0;
                let (entry, exit) = if ups[pos] { (bundle.first[pos], bundle.last[pos]) } else { (bundle.last[pos], bundle.first[pos]) };
                let edge = current[&a];
                w.route_through(edge, entry, exit);
                if let EdgeRef::Loop { .. } = edge {
                    current.insert(a, EdgeRef::Edge { head: entry });
                }
            }
            bottoms.push(Some(
                r.strands.iter().enumerate().map(|(pos, &(_, s))| (bundle.first[pos], ups[pos], s)).collect(),
            ));
        }
        w.drop_dead_loops();
        if !w.is_planar() {
            // the first region whose addition breaks planarity
            let region = (0..regions.len().saturating_sub(1))
                .find(|&i| self.insert_twists(&regions[..=i]).is_err())
                .unwrap_or(regions.len() - 1);
            return Err(DiagramError::TwistRejected {
                region,
                reason: "the strands do not bound a common disk; result is not planar".into(),
            });
        }
        let (diagram, labels) = w.to_diagram_with_labels();
        let regions = regions
            .iter()
            .zip(bottoms)
            .map(|((r, _), b)| match b {
                None => self.relabel_region(r, &w, &labels),
                Some(ports) => TwistRegion {
                    strands: ports
                        .into_iter()
                        .map(|(p, up, s)| (labels[&if up { p } else { w.partner[p] }], s))
                        .collect(),
                },
            })
            .collect();
        Ok(Twisted { diagram, regions })
    }

    fn relabel_region(&self, r: &TwistRegion, w: &Wiring, labels: &HashMap<usize, Arc>) -> TwistRegion {
        let loop_labels: Vec<Arc> = {
            // loops keep their relative order after the strands
            let d = w.to_diagram();
            d.free_loops()
        };
        let mut old_loops: Vec<u64> = w.loops.clone();
        old_loops.sort();
        TwistRegion {
            strands: r
                .strands
                .iter()
                .map(|&(a, s)| {
                    let key = u64::from(a);
                    let new = match w.alive_in_ports().find(|&p| w.key[p] == key) {
                        Some(p) => labels[&p],
                        None => loop_labels[old_loops.iter().position(|&k| k == key).expect("arc survives")],
                    };
                    (new, s)
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    fn up(arcs: &[Arc]) -> TwistRegion {
        TwistRegion::new(arcs.iter().map(|&a| (a, Sign::Positive)).collect())
    }

    #[test]
    fn parse_and_display() {
        let r = TwistRegion::parse("3+, 5-,1+").unwrap();
        assert_eq!(r.strands, vec![(3, Sign::Positive), (5, Sign::Negative), (1, Sign::Positive)]);
        assert_eq!(r.to_string(), "3+,5-,1+");
        assert!(TwistRegion::parse("3").is_err());
        assert!(TwistRegion::parse("").is_err());
    }

    #[test]
    fn two_strand_twists_build_torus_links() {
        // two parallel circles twisted n times give T(2, 2n)
        let u = Diagram::unlink(2);
        let r = up(&[1, 2]);
        let t = u.insert_twist(&r, 1).unwrap();
        assert_eq!(t.diagram.validate(), vec![]);
        assert_eq!(t.diagram.crossing_count(), 2);
        assert_eq!(t.diagram.linking_number(0, 1), Ok(1));
        assert!(t.diagram.same_diagram(&braid_closure(&[1, 1], 2).unwrap()));
        let anti = TwistRegion::new(vec![(1, Sign::Positive), (2, Sign::Negative)]);
        let t = u.insert_twist(&anti, -2).unwrap();
        assert_eq!(t.diagram.validate(), vec![]);
        assert_eq!(t.diagram.crossing_count(), 4);
        assert_eq!(t.diagram.writhe(), 4);
    }

    #[test]
    fn doubled_circle_twist() {
        // a single circle crossed twice, twisted once: a curl pair, still an unknot diagram
        let u = Diagram::unknot();
        let r = TwistRegion::new(vec![(1, Sign::Positive), (1, Sign::Negative)]);
        let t = u.insert_twist(&r, 1).unwrap();
        assert_eq!(t.diagram.validate(), vec![]);
        assert_eq!(t.diagram.component_count(), 1);
        assert_eq!(t.diagram.crossing_count(), 2);
        let same_dir = TwistRegion::new(vec![(1, Sign::Positive), (1, Sign::Positive)]);
        assert!(u.insert_twist(&same_dir, 1).is_err());
    }

    #[test]
    fn identity_cases() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        let r = up(&[1, 4]);
        let t = d.insert_twist(&r, 0).unwrap();
        assert_eq!(t.diagram, d);
        let single = up(&[2]);
        assert_eq!(d.insert_twist(&single, 5).unwrap().diagram, d);
    }

    #[test]
    fn non_planar_region_is_rejected() {
        let d = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        let mut rejected = 0;
        for a in 1..=d.arc_count() {
            for b in 1..=d.arc_count() {
                if a == b {
                    continue;
                }
                match d.insert_twist(&up(&[a, b]), 1) {
                    Ok(t) => assert_eq!(t.diagram.validate(), vec![]),
                    Err(DiagramError::TwistRejected { .. }) => rejected += 1,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        assert!(rejected > 0);
    }

    #[test]
    fn twists_compose() {
        let u = Diagram::unlink(3);
        let r = TwistRegion::new(vec![(1, Sign::Positive), (2, Sign::Negative), (3, Sign::Positive)]);
        for n in [-1i64, 1] {
            let once = u.insert_twist(&r, n).unwrap();
            let twice = once.diagram.insert_twist(&once.regions[0], n).unwrap();
            let direct = u.insert_twist(&r, 2 * n).unwrap();
            assert!(twice.diagram.same_diagram(&direct.diagram));
        }
    }

    #[test]
    fn shared_arcs_are_rejected() {
        let d = braid_closure(&[1, 1, 1], 2).unwrap();
        assert!(d.insert_twists(&[(up(&[1, 2]), 1), (up(&[2, 3]), 1)]).is_err());
    }

    #[test]
    fn doubled_boundary_retwists() {
        let u = Diagram::unknot();
        let r = TwistRegion::parse("1+,1-").unwrap();
        let once = u.insert_twist(&r, 1).unwrap();
        let b = &once.regions[0];
        assert_eq!(b.strands[0].0, b.strands[1].0);
        let twice = once.diagram.insert_twist(b, 1).unwrap();
        assert!(twice.diagram.same_diagram(&u.insert_twist(&r, 2).unwrap().diagram));
    }
}
