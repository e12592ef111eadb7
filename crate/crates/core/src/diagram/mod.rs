//! Oriented link diagrams as PD codes.
//!
//! A crossing lists its four arc labels counterclockwise starting at the incoming
//! under-arc. The under-strand runs slot 0 -> slot 2; the crossing is positive exactly
//! when the over-strand runs slot 3 -> slot 1. Arcs of a component carry consecutive
//! labels in the direction of travel, so the successor of the last arc is the first.

mod build;
mod faces;
mod moves;
mod twist;
pub(crate) mod wiring;

use std::collections::HashMap;
use std::fmt;

pub use build::{braid_closure, connected_sum};
pub use faces::{Dart, FaceMap};
pub use moves::{ReidemeisterMove, Side};
pub use twist::TwistRegion;

pub(crate) use moves::simplify_wiring;
pub(crate) use wiring::Wiring;

/// Arc label; labels of a valid diagram are exactly `1..=arc_count`.
pub type Arc = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn of(x: i64) -> Option<Sign> {
        match x.signum() {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub slots: [Arc; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(slots: [Arc; 4], sign: Sign) -> Self {
        Crossing { slots, sign }
    }

    /// Slot through which the over-strand enters.
    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out_slot(&self) -> usize {
        (self.over_in_slot() + 2) % 4
    }

    pub fn is_incoming_slot(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    pub fn under_in(&self) -> Arc {
        self.slots[0]
    }

    pub fn under_out(&self) -> Arc {
        self.slots[2]
    }

    pub fn over_in(&self) -> Arc {
        self.slots[self.over_in_slot()]
    }

    pub fn over_out(&self) -> Arc {
        self.slots[self.over_out_slot()]
    }
}

/// A link component: arcs `first ..= first + len - 1` in order of travel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub first: Arc,
    pub len: u32,
}

impl Component {
    pub fn last(&self) -> Arc {
        self.first + self.len - 1
    }

    pub fn contains(&self, a: Arc) -> bool {
        a >= self.first && a <= self.last()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> {
        self.first..=self.last()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    components: Vec<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// Components must tile `1..=n` with consecutive, non-empty ranges.
    ComponentLayout,
    ArcMultiplicity,
    /// Slot 2 must follow slot 0, and the over-strand must match the sign.
    Successor,
    Planarity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.rule, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("crossing index {index} out of range (diagram has {count})")]
    CrossingOutOfRange { index: usize, count: usize },
    #[error("arc {0} does not exist")]
    UnknownArc(Arc),
    #[error("component {index} out of range (diagram has {count})")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("operation needs a knot, diagram has {0} components")]
    NotAKnot(usize),
    #[error("braid letter {letter} out of range for {strands} strands")]
    BraidLetter { letter: i32, strands: usize },
    #[error("twist region {region} cannot be realized: {reason}")]
    TwistRejected { region: usize, reason: String },
    #[error("invalid twist region: {0}")]
    BadRegion(String),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

impl Diagram {
    /// Assembles a diagram without checking it; see [`Diagram::validate`].
    pub fn from_parts(crossings: Vec<Crossing>, components: Vec<Component>) -> Self {
        Diagram { crossings, components }
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` crossingless circles.
    pub fn unlink(n: u32) -> Self {
        Diagram {
            crossings: Vec::new(),
            components: (0..n).map(|i| Component { first: i + 1, len: 1 }).collect(),
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn arc_count(&self) -> u32 {
        self.components.iter().map(|c| c.len).sum()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    pub fn component_of(&self, a: Arc) -> Option<usize> {
        self.components.iter().position(|c| c.contains(a))
    }

    pub fn next_arc(&self, a: Arc) -> Option<Arc> {
        let c = self.components.iter().find(|c| c.contains(a))?;
        Some(if a == c.last() { c.first } else { a + 1 })
    }

    /// Labels of crossingless components.
    pub fn free_loops(&self) -> Vec<Arc> {
        let used: std::collections::HashSet<Arc> = self.crossings.iter().flat_map(|c| c.slots).collect();
        self.components.iter().filter(|c| c.len == 1 && !used.contains(&c.first)).map(|c| c.first).collect()
    }

    /// Checks every structural rule and planarity.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = self.structural_violations();
        if out.is_empty() && !self.is_planar() {
            out.push(Violation {
                rule: Rule::Planarity,
                detail: "face count violates V - E + F = 2 on some connected piece".into(),
            });
        }
        out
    }

    fn structural_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut expected = 1;
        for (i, c) in self.components.iter().enumerate() {
            if c.len == 0 || c.first != expected {
                out.push(Violation {
                    rule: Rule::ComponentLayout,
                    detail: format!("component {i} should start at arc {expected} and be non-empty"),
                });
                return out;
            }
            expected += c.len;
        }
        let n = self.arc_count();
        let mut uses: HashMap<Arc, Vec<(usize, usize)>> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (s, &a) in c.slots.iter().enumerate() {
                if a == 0 || a > n {
                    out.push(Violation {
                        rule: Rule::ArcMultiplicity,
                        detail: format!("crossing {ci} slot {s} uses unknown arc {a}"),
                    });
                }
                uses.entry(a).or_default().push((ci, s));
            }
        }
        for a in 1..=n {
            let count = uses.get(&a).map_or(0, Vec::len);
            let comp = self.components.iter().find(|c| c.contains(a)).unwrap();
            let ok = count == 2 || (count == 0 && comp.len == 1);
            if !ok {
                out.push(Violation {
                    rule: Rule::ArcMultiplicity,
                    detail: format!("arc {a} appears {count} times"),
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (ci, c) in self.crossings.iter().enumerate() {
            if self.next_arc(c.under_in()) != Some(c.under_out()) {
                out.push(Violation {
                    rule: Rule::Successor,
                    detail: format!("crossing {ci}: under-strand {} -> {} is not a step along its component", c.slots[0], c.slots[2]),
                });
            }
            if self.next_arc(c.over_in()) != Some(c.over_out()) {
                out.push(Violation {
                    rule: Rule::Successor,
                    detail: format!("crossing {ci}: over-strand {} -> {} disagrees with sign {:?}", c.over_in(), c.over_out(), c.sign),
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        // each arc must end at exactly one crossing and start at exactly one
        for (a, occ) in &uses {
            let heads = occ.iter().filter(|&&(ci, s)| self.crossings[ci].is_incoming_slot(s)).count();
            if heads != 1 {
                out.push(Violation {
                    rule: Rule::Successor,
                    detail: format!("arc {a} enters {heads} crossings"),
                });
            }
        }
        out
    }

    /// Euler-characteristic check on every connected piece of the underlying 4-valent graph.
    pub fn is_planar(&self) -> bool {
        if !self.structural_violations().is_empty() {
            return false;
        }
        Wiring::from_diagram(self).is_planar()
    }

    /// Linking number of two distinct components: half the signed count of their mutual crossings.
    pub fn linking_number(&self, comp1: usize, comp2: usize) -> Result<i64, DiagramError> {
        let count = self.components.len();
        for idx in [comp1, comp2] {
            if idx >= count {
                return Err(DiagramError::ComponentOutOfRange { index: idx, count });
            }
        }
        if comp1 == comp2 {
            return Err(DiagramError::Invalid("linking number needs two distinct components".into()));
        }
        let (a, b) = (self.components[comp1], self.components[comp2]);
        let twice: i64 = self
            .crossings
            .iter()
            .filter(|c| {
                let (u, o) = (c.under_in(), c.over_in());
                (a.contains(u) && b.contains(o)) || (b.contains(u) && a.contains(o))
            })
            .map(|c| c.sign.value())
            .sum();
        Ok(twice / 2)
    }

    /// Form used for equality up to relabeling, crossing order and component order.
    pub fn canonical(&self) -> Diagram {
        Wiring::from_diagram(self).canonical_diagram()
    }

    pub fn same_diagram(&self, other: &Diagram) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn check_crossing(&self, c: usize) -> Result<(), DiagramError> {
        if c < self.crossings.len() {
            Ok(())
        } else {
            Err(DiagramError::CrossingOutOfRange { index: c, count: self.crossings.len() })
        }
    }

    pub fn check_arc(&self, a: Arc) -> Result<(), DiagramError> {
        if a >= 1 && a <= self.arc_count() {
            Ok(())
        } else {
            Err(DiagramError::UnknownArc(a))
        }
    }

    pub(crate) fn crossings_mut(&mut self) -> &mut Vec<Crossing> {
        &mut self.crossings
    }
}
