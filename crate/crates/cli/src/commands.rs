use std::io::Write;

use knotforge::algebra::{LaurentPoly, Var};
use knotforge::census::{build_census, verify_census, CensusEntry, Construction};
use knotforge::diagram::connected_sum;
use knotforge::finitetype::{probe_finite_type, probe_nq_finite, ProbeOptions, ProbeReport, ProbeStatus};
use knotforge::notation::{diagram_to_json, emit_gauss, emit_pd, parse_any};
use knotforge::{Diagram, Evaluator, InvariantSpec, TwistRegion, Value};
use serde_json::{json, Map, Value as Json};

use crate::error::{exit, CliError};
use crate::input::{read_corpus, read_diagram};
use crate::{Cli, Command, Format, Notation, ProbeCommand, ProbeFlags};

pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let mut out = std::io::stdout().lock();
    let fmt = cli.format;
    match &cli.command {
        Command::Parse { input, to, canonical } => {
            let mut d = read_diagram(input)?;
            if *canonical {
                d = d.canonical();
            }
            parse(&mut out, fmt, &d, *to)
        }
        Command::Invariant { input, names } => {
            let specs = parse_specs(names)?;
            let d = read_diagram(input)?;
            invariant(&mut out, fmt, &d, &specs)
        }
        Command::Probe { kind } => probe(&mut out, kind),
        Command::Twist { input, regions, n } => {
            let regions = regions
                .iter()
                .map(|r| TwistRegion::parse(r).map_err(|e| CliError::Usage(e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            let d = read_diagram(input)?;
            twist(&mut out, fmt, &d, &regions, *n)
        }
        Command::Csum { left, right, left_arc, right_arc } => {
            let (a, b) = (parse_any(left)?, parse_any(right)?);
            let s = connected_sum(&a, &b, *left_arc, *right_arc)?.canonical();
            let pd = emit_pd(&s);
            match fmt {
                Format::Json => print_json(&mut out, &json!({ "pd": pd, "crossings": s.crossing_count() })),
                _ => writeln!(out, "{pd}").ok(),
            };
            Ok(exit::OK)
        }
        Command::Census { verify, names } => {
            let specs = if names.is_empty() { InvariantSpec::registered() } else { parse_specs(names)? };
            census(&mut out, fmt, &specs, *verify)
        }
    }
}

fn parse_specs(names: &[String]) -> Result<Vec<InvariantSpec>, CliError> {
    Ok(names.iter().map(|n| n.parse()).collect::<Result<Vec<InvariantSpec>, _>>()?)
}

fn print_json(out: &mut impl Write, v: &Json) -> Option<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable")).ok()
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out as &mut dyn Write)
}

fn parse(out: &mut impl Write, fmt: Format, d: &Diagram, to: Notation) -> Result<u8, CliError> {
    let form = |n: Notation| match n {
        Notation::Pd => emit_pd(d),
        Notation::Gauss => emit_gauss(d),
        Notation::Json => diagram_to_json(d).to_string(),
    };
    match fmt {
        Format::Text => {
            writeln!(out, "{}", form(to)).ok();
        }
        Format::Json => {
            print_json(
                out,
                &json!({
                    "pd": emit_pd(d),
                    "gauss": emit_gauss(d),
                    "diagram": diagram_to_json(d),
                    "crossings": d.crossing_count(),
                    "components": d.component_count(),
                    "writhe": d.writhe(),
                }),
            );
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["crossings", "components", "writhe", "notation"]).ok();
            w.write_record([d.crossing_count().to_string(), d.component_count().to_string(), d.writhe().to_string(), form(to)]).ok();
            w.flush().ok();
        }
    }
    Ok(exit::OK)
}

/// Jones values print in `t` when the exponents allow it.
fn value_text(spec: &InvariantSpec, v: &Value) -> String {
    match (spec, v) {
        (InvariantSpec::Jones, Value::Poly(p)) => p.compress_exponents(Var::T, 4).unwrap_or_else(|| p.clone()).to_text(),
        _ => v.to_string(),
    }
}

fn poly_summary(p: &LaurentPoly) -> Json {
    match (p.min_degree(), p.max_degree()) {
        (Some(lo), Some(hi)) => json!({
            "span": hi - lo,
            "lowest_coefficient": p.coeff(lo).to_string(),
            "highest_coefficient": p.coeff(hi).to_string(),
        }),
        _ => Json::Null,
    }
}

fn value_json(spec: &InvariantSpec, v: &Value) -> Json {
    let mut m = Map::new();
    m.insert("name".into(), json!(spec.to_string()));
    m.insert("value".into(), v.to_json());
    m.insert("text".into(), json!(value_text(spec, v)));
    if let Value::Poly(p) = v {
        let shown = match spec {
            InvariantSpec::Jones => p.compress_exponents(Var::T, 4).unwrap_or_else(|| p.clone()),
            _ => p.clone(),
        };
        m.insert("summary".into(), poly_summary(&shown));
    }
    Json::Object(m)
}

fn invariant(out: &mut impl Write, fmt: Format, d: &Diagram, specs: &[InvariantSpec]) -> Result<u8, CliError> {
    let mut ev = Evaluator::new();
    let values = specs.iter().map(|s| Ok((*s, ev.evaluate(s, d)?))).collect::<Result<Vec<_>, CliError>>()?;
    match fmt {
        Format::Text if values.len() == 1 => {
            writeln!(out, "{}", value_text(&values[0].0, &values[0].1)).ok();
        }
        Format::Text => {
            for (s, v) in &values {
                writeln!(out, "{s} = {}", value_text(s, v)).ok();
            }
        }
        Format::Json => {
            let vals: Vec<Json> = values.iter().map(|(s, v)| value_json(s, v)).collect();
            print_json(out, &json!({ "crossings": d.crossing_count(), "components": d.component_count(), "invariants": vals }));
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["invariant", "value"]).ok();
            for (s, v) in &values {
                w.write_record([s.to_string(), value_text(s, v)]).ok();
            }
            w.flush().ok();
        }
    }
    Ok(exit::OK)
}

fn probe(out: &mut impl Write, kind: &ProbeCommand) -> Result<u8, CliError> {
    let flags: &ProbeFlags = match kind {
        ProbeCommand::Ft { flags } | ProbeCommand::Nq { flags, .. } => flags,
    };
    let spec: InvariantSpec = flags.invariant.parse()?;
    let corpus = read_corpus(&flags.corpus)?;
    let mut opts = ProbeOptions { budget: flags.budget, max_collections_per_diagram: flags.max_per_diagram, ..ProbeOptions::default() };
    let mut ev = Evaluator::new();
    let mut flag_json = json!({
        "invariant": flags.invariant,
        "order": flags.order,
        "budget": flags.budget,
        "corpus": flags.corpus,
        "max_per_diagram": flags.max_per_diagram,
    });
    let report: ProbeReport = match kind {
        ProbeCommand::Ft { .. } => probe_finite_type(&mut ev, &spec, &corpus, flags.order, opts)?,
        ProbeCommand::Nq { n, q, strict_q, max_k, .. } => {
            opts.max_k = *max_k;
            let extra = json!({ "n": n, "q": q, "strict_q": strict_q, "max_k": max_k });
            flag_json.as_object_mut().unwrap().extend(extra.as_object().unwrap().clone());
            probe_nq_finite(&mut ev, &spec, &corpus, *n, *q, flags.order, *strict_q, opts)?
        }
    };
    let mut doc = serde_json::to_value(&report).expect("serializable");
    let obj = doc.as_object_mut().unwrap();
    obj.insert("tool".into(), json!({ "name": "knotforge", "version": env!("CARGO_PKG_VERSION") }));
    obj.insert("flags".into(), flag_json);
    let text = serde_json::to_string_pretty(&doc).expect("serializable");
    match &flags.output {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            writeln!(out, "{:?}: {} collections tested", report.status, report.tested_count).ok();
        }
        None => {
            writeln!(out, "{text}").ok();
        }
    }
    Ok(match report.status {
        ProbeStatus::Vanished => exit::OK,
        ProbeStatus::Certificate => exit::CERTIFICATE,
        ProbeStatus::BudgetExhausted => exit::BUDGET_EXHAUSTED,
    })
}

fn twist(out: &mut impl Write, fmt: Format, d: &Diagram, regions: &[TwistRegion], n: i64) -> Result<u8, CliError> {
    let spec: Vec<(TwistRegion, i64)> = regions.iter().map(|r| (r.clone(), n)).collect();
    let t = d.insert_twists(&spec)?;
    let result = t.diagram.canonical();
    let pd = emit_pd(&result);
    let delta = result.crossing_count() as i64 - d.crossing_count() as i64;
    match fmt {
        Format::Json => {
            let rs: Vec<Json> = regions.iter().map(|r| json!({ "region": r.to_string(), "q": r.q(), "q_signed": r.q_signed() })).collect();
            print_json(out, &json!({ "pd": pd, "n": n, "regions": rs, "crossing_delta": delta }));
        }
        _ => {
            writeln!(out, "{pd}").ok();
            for r in regions {
                writeln!(out, "q = {} (region {r})", r.q()).ok();
            }
            writeln!(out, "crossing delta = {delta:+}").ok();
        }
    }
    Ok(exit::OK)
}

fn construction_text(c: &Construction) -> String {
    match c {
        Construction::Braid(w) => w.to_string(),
        Construction::Sum { left, right, mirror_right: false } => format!("{left} # {right}"),
        Construction::Sum { left, right, mirror_right: true } => format!("{left} # mirror({right})"),
    }
}

fn census(out: &mut impl Write, fmt: Format, specs: &[InvariantSpec], verify: bool) -> Result<u8, CliError> {
    let mut ev = Evaluator::new();
    let entries: Vec<CensusEntry> = build_census(&mut ev, specs)?;
    if verify {
        let bad = verify_census(&entries)?;
        if !bad.is_empty() {
            let list: Vec<String> = bad.iter().map(|m| format!("{} {}: cached {} fresh {}", m.name, m.invariant, m.cached, m.fresh)).collect();
            return Err(CliError::Verification(list.join("; ")));
        }
    }
    match fmt {
        Format::Json => {
            let rows: Vec<Json> = entries
                .iter()
                .map(|e| {
                    let values: Map<String, Json> = e.values.iter().map(|(s, v)| (s.to_string(), v.to_json())).collect();
                    json!({
                        "name": e.name,
                        "construction": construction_text(&e.construction),
                        "crossings": e.diagram.crossing_count(),
                        "pd": e.pd,
                        "values": values,
                    })
                })
                .collect();
            print_json(out, &json!({ "entries": rows, "verified": verify }));
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            let mut header = vec!["name".to_string(), "construction".into(), "crossings".into(), "pd".into()];
            header.extend(specs.iter().map(ToString::to_string));
            w.write_record(&header).ok();
            for e in &entries {
                let mut row = vec![e.name.to_string(), construction_text(&e.construction), e.diagram.crossing_count().to_string(), e.pd.clone()];
                row.extend(e.values.iter().map(|(s, v)| value_text(s, v)));
                w.write_record(&row).ok();
            }
            w.flush().ok();
        }
        Format::Text => {
            for e in &entries {
                writeln!(out, "{}\t{}\t{}", e.name, construction_text(&e.construction), e.pd).ok();
                for (s, v) in &e.values {
                    writeln!(out, "  {s} = {}", value_text(s, v)).ok();
                }
            }
            if verify {
                writeln!(out, "verified {} values against reference evaluation", entries.iter().map(|e| e.values.len()).sum::<usize>()).ok();
            }
        }
    }
    Ok(exit::OK)
}
