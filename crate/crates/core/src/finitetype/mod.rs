//! Alternating sums over crossing changes and over twist insertions, and probes that
//! run them across a corpus.

mod probe;
mod regions;

use std::collections::HashMap;

pub use probe::{probe_finite_type, probe_nq_finite, recheck_crossing_certificate, Certificate, CorpusEntry, ProbeKind, ProbeOptions, ProbeReport, ProbeStatus};
pub use regions::{corner_regions, q_filter, region_enumerator};

use crate::diagram::{Arc, Diagram, DiagramError, TwistRegion};
use crate::invariants::{Evaluator, InvariantError, InvariantSpec, Value, ValueError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteTypeError {
    #[error("a collection needs at least one member")]
    EmptyCollection,
    #[error("crossing {0} appears more than once in the collection")]
    DuplicateCrossing(usize),
    #[error("regions {first} and {second} share arc {arc}")]
    OverlappingRegions { first: usize, second: usize, arc: Arc },
    #[error("region {region} has q_j = {qj}, which the filter q = {q}{} rejects", if *.strict { " (strict)" } else { "" })]
    RegionFilter { region: usize, qj: u64, q: u64, strict: bool },
    #[error("twist parameter must be at least 1, got {0}")]
    BadTwistParameter(i64),
    #[error("engine value {engine} and reference value {reference} disagree for collection {collection} on `{diagram}`")]
    CertificateMismatch { diagram: String, collection: String, engine: String, reference: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    Value(#[from] ValueError),
}

/// Distinct crossings `a_1..a_{m+1}` of one diagram.
#[derive(Clone, Debug)]
pub struct CrossingCollection {
    pub diagram: Diagram,
    pub crossings: Vec<usize>,
}

impl CrossingCollection {
    pub fn new(diagram: Diagram, crossings: Vec<usize>) -> Result<Self, FiniteTypeError> {
        if crossings.is_empty() {
            return Err(FiniteTypeError::EmptyCollection);
        }
        for (i, &c) in crossings.iter().enumerate() {
            diagram.check_crossing(c)?;
            if crossings[..i].contains(&c) {
                return Err(FiniteTypeError::DuplicateCrossing(c));
            }
        }
        Ok(CrossingCollection { diagram, crossings })
    }

    /// The order `m` probed by this collection.
    pub fn order(&self) -> usize {
        self.crossings.len() - 1
    }

    /// All `2^(m+1)` resolutions with their parity `|i| mod 2`; bit `j` of the index
    /// switches crossing `a_(j+1)`.
    pub fn resolutions(&self) -> Result<Vec<(bool, Diagram)>, FiniteTypeError> {
        (0u64..1 << self.crossings.len())
            .map(|mask| {
                let chosen: Vec<usize> = select(&self.crossings, mask).copied().collect();
                Ok((mask.count_ones() % 2 == 1, self.diagram.change_crossings(&chosen)?))
            })
            .collect()
    }
}

/// Pairwise arc-disjoint regions of one diagram, each to receive `n` full twists.
#[derive(Clone, Debug)]
pub struct RegionCollection {
    pub diagram: Diagram,
    pub regions: Vec<TwistRegion>,
    pub n: i64,
    pub q: u64,
    pub strict: bool,
}

impl RegionCollection {
    pub fn new(diagram: Diagram, regions: Vec<TwistRegion>, n: i64, q: u64, strict: bool) -> Result<Self, FiniteTypeError> {
        if regions.is_empty() {
            return Err(FiniteTypeError::EmptyCollection);
        }
        if n < 1 {
            return Err(FiniteTypeError::BadTwistParameter(n));
        }
        let mut owner: HashMap<Arc, usize> = HashMap::new();
        for (ri, r) in regions.iter().enumerate() {
            if r.is_empty() {
                return Err(FiniteTypeError::EmptyCollection);
            }
            if !q_filter(r.q(), q, strict) {
                return Err(FiniteTypeError::RegionFilter { region: ri, qj: r.q(), q, strict });
            }
            for &(a, _) in &r.strands {
                diagram.check_arc(a)?;
                if let Some(&first) = owner.get(&a) {
                    if first != ri {
                        return Err(FiniteTypeError::OverlappingRegions { first, second: ri, arc: a });
                    }
                }
                owner.insert(a, ri);
            }
        }
        Ok(RegionCollection { diagram, regions, n, q, strict })
    }

    pub fn order(&self) -> usize {
        self.regions.len() - 1
    }

    /// Twisted diagram for one subset of regions; a rejection names the region by its
    /// position in this collection.
    pub fn twisted(&self, mask: u64) -> Result<Diagram, FiniteTypeError> {
        let idx: Vec<usize> = select(&(0..self.regions.len()).collect::<Vec<_>>(), mask).copied().collect();
        let chosen: Vec<(TwistRegion, i64)> = idx.iter().map(|&i| (self.regions[i].clone(), self.n)).collect();
        match self.diagram.insert_twists(&chosen) {
            Ok(t) => Ok(t.diagram),
            Err(DiagramError::TwistRejected { region, reason }) => {
                Err(DiagramError::TwistRejected { region: idx[region], reason }.into())
            }
            Err(e) => Err(e.into()),
        }
    }

    pub fn resolutions(&self) -> Result<Vec<(bool, Diagram)>, FiniteTypeError> {
        (0u64..1 << self.regions.len()).map(|mask| Ok((mask.count_ones() % 2 == 1, self.twisted(mask)?))).collect()
    }
}

fn select<T>(items: &[T], mask: u64) -> impl Iterator<Item = &T> {
    items.iter().enumerate().filter(move |(j, _)| mask >> j & 1 == 1).map(|(_, x)| x)
}

/// `sum (-1)^|i| f(D_i)` over signed resolutions.
pub fn alternating_sum<F>(resolutions: &[(bool, Diagram)], mut f: F) -> Result<Value, FiniteTypeError>
where
    F: FnMut(&Diagram) -> Result<Value, InvariantError>,
{
    let mut acc: Option<Value> = None;
    for (odd, d) in resolutions {
        let v = f(d)?;
        let term = if *odd { v.neg() } else { v };
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term)?,
        });
    }
    acc.ok_or(FiniteTypeError::EmptyCollection)
}

pub fn alternating_sum_crossings(ev: &mut Evaluator, spec: &InvariantSpec, cc: &CrossingCollection) -> Result<Value, FiniteTypeError> {
    alternating_sum(&cc.resolutions()?, |d| ev.evaluate(spec, d))
}

pub fn alternating_sum_twists(ev: &mut Evaluator, spec: &InvariantSpec, rc: &RegionCollection) -> Result<Value, FiniteTypeError> {
    alternating_sum(&rc.resolutions()?, |d| ev.evaluate(spec, d))
}
