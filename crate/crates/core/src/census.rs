//! Small knot table generated from braid words and connected sums.

use std::collections::BTreeMap;

use crate::diagram::{connected_sum, Diagram, DiagramError};
use crate::finitetype::CorpusEntry;
use crate::invariants::{evaluate_reference, Evaluator, InvariantError, InvariantSpec, Value};
use crate::notation::{emit_pd, BraidWord};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Braid(BraidWord),
    /// Connected sum of two earlier entries, the second optionally mirrored.
    Sum { left: &'static str, right: &'static str, mirror_right: bool },
}

/// Names and constructions, in table order.
pub fn constructions() -> Vec<(&'static str, Construction)> {
    let b = |s: usize, w: &[i32]| Construction::Braid(BraidWord::new(s, w.to_vec()));
    vec![
        ("0_1", b(1, &[])),
        ("3_1", b(2, &[1, 1, 1])),
        ("4_1", b(3, &[1, -2, 1, -2])),
        ("5_1", b(2, &[1, 1, 1, 1, 1])),
        ("5_2", b(3, &[1, 1, 1, 2, -1, 2])),
        ("6_1", b(4, &[1, 1, 2, -1, -3, 2, -3])),
        ("6_2", b(3, &[1, 1, 1, -2, 1, -2])),
        ("6_3", b(3, &[1, 1, -2, 1, -2, -2])),
        ("granny", Construction::Sum { left: "3_1", right: "3_1", mirror_right: false }),
        ("square", Construction::Sum { left: "3_1", right: "3_1", mirror_right: true }),
    ]
}

/// Census diagrams, canonically labeled.
pub fn census_diagrams() -> Result<Vec<CorpusEntry>, DiagramError> {
    let mut built: BTreeMap<&'static str, Diagram> = BTreeMap::new();
    let mut out = Vec::new();
    for (name, c) in constructions() {
        let d = match &c {
            Construction::Braid(w) => w.closure()?,
            Construction::Sum { left, right, mirror_right } => {
                let r = if *mirror_right { built[right].mirror() } else { built[right].clone() };
                connected_sum(&built[left], &r, 1, 1)?
            }
        }
        .canonical();
        built.insert(name, d.clone());
        out.push(CorpusEntry::new(name, d));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub name: &'static str,
    pub construction: Construction,
    pub diagram: Diagram,
    pub pd: String,
    pub values: Vec<(InvariantSpec, Value)>,
}

/// A stored value that differs from a fresh reference evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub name: &'static str,
    pub invariant: InvariantSpec,
    pub cached: Value,
    pub fresh: Value,
}

/// Builds the table with values of `specs` computed by `ev`.
pub fn build_census(ev: &mut Evaluator, specs: &[InvariantSpec]) -> Result<Vec<CensusEntry>, InvariantError> {
    let diagrams = census_diagrams().expect("census constructions are valid");
    diagrams
        .into_iter()
        .zip(constructions())
        .map(|(entry, (name, construction))| {
            let values = specs.iter().map(|s| Ok((*s, ev.evaluate(s, &entry.diagram)?))).collect::<Result<_, InvariantError>>()?;
            Ok(CensusEntry { name, construction, pd: emit_pd(&entry.diagram), diagram: entry.diagram, values })
        })
        .collect()
}

/// Recomputes every cached value through the reference evaluators.
pub fn verify_census(entries: &[CensusEntry]) -> Result<Vec<Mismatch>, InvariantError> {
    let mut out = Vec::new();
    for e in entries {
        for (spec, cached) in &e.values {
            let fresh = evaluate_reference(spec, &e.diagram)?;
            if &fresh != cached {
                out.push(Mismatch { name: e.name, invariant: *spec, cached: cached.clone(), fresh });
            }
        }
    }
    Ok(out)
}
