use itertools::Itertools;
use serde::Serialize;
use serde_json::Value as Json;

use super::{alternating_sum, region_enumerator, CrossingCollection, FiniteTypeError, RegionCollection};
use crate::diagram::{Diagram, DiagramError, TwistRegion};
use crate::invariants::{evaluate_reference, Evaluator, InvariantSpec, Value};
use crate::notation::emit_pd;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub diagram: Diagram,
}

impl CorpusEntry {
    pub fn new(name: impl Into<String>, diagram: Diagram) -> Self {
        CorpusEntry { name: name.into(), diagram }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeKind {
    Ft,
    Nq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeStatus {
    Vanished,
    Certificate,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub diagram_name: String,
    /// The diagram exactly as probed, so crossing indices and arc labels apply.
    pub diagram_pd: String,
    pub collection: Json,
    pub value: Json,
    /// The same sum through the independent reference evaluators.
    pub reference_value: Json,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbeReport {
    pub probe: ProbeKind,
    pub invariant: String,
    pub order: usize,
    pub n: Option<i64>,
    pub q: Option<u64>,
    pub strict: bool,
    pub tested_count: u64,
    /// Collections dropped because their twists cannot be drawn together.
    pub skipped_count: u64,
    pub evaluations: u64,
    pub budget: u64,
    pub corpus_size: usize,
    pub status: ProbeStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub note: &'static str,
}

const NOTE: &str = "vanishing on a finite corpus is evidence of bounded order, not a proof";

#[derive(Clone, Copy, Debug)]
pub struct ProbeOptions {
    /// Upper bound on invariant evaluations.
    pub budget: u64,
    /// Largest strand bundle considered by twist probes.
    pub max_k: usize,
    /// Stop after this many tested collections per diagram.
    pub max_collections_per_diagram: Option<u64>,
}

impl Default for ProbeOptions {
    fn default() -> Self {
        ProbeOptions { budget: 1_000_000, max_k: 2, max_collections_per_diagram: None }
    }
}

struct Run<'a> {
    ev: &'a mut Evaluator,
    spec: InvariantSpec,
    opts: ProbeOptions,
    report: ProbeReport,
}

enum Step {
    Continue,
    Stop,
}

impl Run<'_> {
    /// Evaluates one collection; `Stop` once the report is final.
    fn test(&mut self, entry: &CorpusEntry, collection: Json, res: &[(bool, Diagram)]) -> Result<Step, FiniteTypeError> {
        let cost = res.len() as u64;
        if self.report.evaluations + cost > self.opts.budget {
            self.report.status = ProbeStatus::BudgetExhausted;
            return Ok(Step::Stop);
        }
        self.report.evaluations += cost;
        self.report.tested_count += 1;
        let spec = self.spec;
        let value = alternating_sum(res, |d| self.ev.evaluate(&spec, d))?;
        if value.is_zero() {
            return Ok(Step::Continue);
        }
        let reference = alternating_sum(res, |d| evaluate_reference(&spec, d))?;
        if reference != value {
            return Err(FiniteTypeError::CertificateMismatch {
                diagram: entry.name.clone(),
                collection: collection.to_string(),
                engine: value.to_string(),
                reference: reference.to_string(),
            });
        }
        self.report.status = ProbeStatus::Certificate;
        self.report.certificate = Some(Certificate {
            diagram_name: entry.name.clone(),
            diagram_pd: emit_pd(&entry.diagram),
            collection,
            value: value.to_json(),
            reference_value: reference.to_json(),
        });
        Ok(Step::Stop)
    }
}

fn new_report(probe: ProbeKind, spec: &InvariantSpec, order: usize, corpus: &[CorpusEntry], opts: &ProbeOptions) -> ProbeReport {
    ProbeReport {
        probe,
        invariant: spec.to_string(),
        order,
        n: None,
        q: None,
        strict: false,
        tested_count: 0,
        skipped_count: 0,
        evaluations: 0,
        budget: opts.budget,
        corpus_size: corpus.len(),
        status: ProbeStatus::Vanished,
        certificate: None,
        note: NOTE,
    }
}

/// Runs the crossing-change sum over every `(order+1)`-subset of crossings of each
/// diagram, in corpus order and lexicographic subset order, until a sum is nonzero.
pub fn probe_finite_type(
    ev: &mut Evaluator,
    spec: &InvariantSpec,
    corpus: &[CorpusEntry],
    order: usize,
    opts: ProbeOptions,
) -> Result<ProbeReport, FiniteTypeError> {
    let mut run = Run { ev, spec: *spec, opts, report: new_report(ProbeKind::Ft, spec, order, corpus, &opts) };
    for entry in corpus {
        let cap = opts.max_collections_per_diagram.map_or(usize::MAX, |c| c as usize);
        for subset in (0..entry.diagram.crossing_count()).combinations(order + 1).take(cap) {
            let cc = CrossingCollection::new(entry.diagram.clone(), subset.clone())?;
            if let Step::Stop = run.test(entry, serde_json::json!(subset), &cc.resolutions()?)? {
                return Ok(run.report);
            }
        }
    }
    Ok(run.report)
}

fn disjoint(regions: &[&TwistRegion]) -> bool {
    regions.iter().tuple_combinations().all(|(a, b)| a.strands.iter().all(|s| b.strands.iter().all(|t| s.0 != t.0)))
}

/// Runs the twist sum over `(order+1)`-tuples of pairwise disjoint enumerated regions,
/// each twisted `n` times. Tuples that cannot be drawn simultaneously are skipped.
#[allow(clippy::too_many_arguments)]
pub fn probe_nq_finite(
    ev: &mut Evaluator,
    spec: &InvariantSpec,
    corpus: &[CorpusEntry],
    n: i64,
    q: u64,
    order: usize,
    strict: bool,
    opts: ProbeOptions,
) -> Result<ProbeReport, FiniteTypeError> {
    if n < 1 {
        return Err(FiniteTypeError::BadTwistParameter(n));
    }
    let mut report = new_report(ProbeKind::Nq, spec, order, corpus, &opts);
    report.n = Some(n);
    report.q = Some(q);
    report.strict = strict;
    let mut run = Run { ev, spec: *spec, opts, report };
    for entry in corpus {
        let regions = region_enumerator(&entry.diagram, opts.max_k, q, strict);
        let mut tested = 0;
        for tuple in regions.iter().combinations(order + 1) {
            if opts.max_collections_per_diagram.is_some_and(|cap| tested >= cap) {
                break;
            }
            if !disjoint(&tuple) {
                continue;
            }
            let rc = RegionCollection::new(entry.diagram.clone(), tuple.into_iter().cloned().collect(), n, q, strict)?;
            let res = match rc.resolutions() {
                Ok(res) => res,
                Err(FiniteTypeError::Diagram(DiagramError::TwistRejected { .. })) => {
                    run.report.skipped_count += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            tested += 1;
            let names: Vec<String> = rc.regions.iter().map(|r| r.to_string()).collect();
            if let Step::Stop = run.test(entry, serde_json::json!(names), &res)? {
                return Ok(run.report);
            }
        }
    }
    Ok(run.report)
}

/// Sum value of a report's certificate recomputed by the reference path, for callers
/// re-checking a stored report.
pub fn recheck_crossing_certificate(spec: &InvariantSpec, d: &Diagram, crossings: &[usize]) -> Result<Value, FiniteTypeError> {
    let cc = CrossingCollection::new(d.clone(), crossings.to_vec())?;
    alternating_sum(&cc.resolutions()?, |x| evaluate_reference(spec, x))
}
