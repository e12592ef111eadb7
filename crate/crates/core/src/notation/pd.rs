use std::collections::HashMap;
use std::fmt::Write;

use super::scan::Scanner;
use super::{checked, NotationError};
use crate::diagram::{Arc, Component, Crossing, Diagram, Sign};

struct RawCrossing {
    slots: [Arc; 4],
    sign: Option<Sign>,
    pos: usize,
}

pub fn parse_pd(text: &str) -> Result<Diagram, NotationError> {
    let mut sc = Scanner::new(text);
    if sc.at_end() {
        return Err(sc.error("empty PD code"));
    }
    let mut raw = Vec::new();
    if !sc.eat('/') {
        loop {
            sc.skip_ws();
            let pos = sc.pos();
            sc.expect('X')?;
            sc.expect('[')?;
            let mut slots = [0; 4];
            for (i, s) in slots.iter_mut().enumerate() {
                if i > 0 {
                    sc.expect(',')?;
                }
                *s = sc.uint()?;
            }
            sc.expect(']')?;
            let sign = if sc.eat('+') {
                Some(Sign::Positive)
            } else if sc.eat('-') {
                Some(Sign::Negative)
            } else {
                None
            };
            raw.push(RawCrossing { slots, sign, pos });
            if !sc.eat(';') {
                break;
            }
            if sc.at_end() {
                break;
            }
        }
        if !sc.at_end() && !sc.eat('/') {
            return Err(sc.error("expected `;` or `/`"));
        }
    }
    let components = if sc.at_end() && !text.contains('/') {
        let max = raw.iter().flat_map(|c| c.slots).max().unwrap_or(0);
        vec![Component { first: 1, len: max.max(1) }]
    } else {
        let mut comps = Vec::new();
        while !sc.at_end() {
            sc.expect('(')?;
            sc.skip_ws();
            let start = sc.pos();
            let first = sc.uint()?;
            let last = if sc.eat_str("..") { sc.uint()? } else { first };
            if first == 0 || last < first {
                return Err(sc.error_at(start, format!("bad arc range {first}..{last}")));
            }
            sc.expect(')')?;
            comps.push(Component { first, len: last - first + 1 });
        }
        if comps.is_empty() {
            return Err(sc.error("expected at least one component after `/`"));
        }
        comps
    };
    let signs = infer_signs(&raw, &components).map_err(|pos| sc.error_at(pos, "crossing sign is ambiguous here; append `+` or `-`"))?;
    let crossings = raw.iter().zip(signs).map(|(r, sign)| Crossing::new(r.slots, sign)).collect();
    checked(Diagram::from_parts(crossings, components))
}

fn successor(components: &[Component], a: Arc) -> Option<Arc> {
    let c = components.iter().find(|c| c.contains(a))?;
    Some(if a == c.last() { c.first } else { a + 1 })
}

/// Resolves unsigned crossings from the component structure; returns the source
/// position of a crossing that stays ambiguous.
fn infer_signs(raw: &[RawCrossing], components: &[Component]) -> Result<Vec<Sign>, usize> {
    let mut signs: Vec<Option<Sign>> = raw
        .iter()
        .map(|r| {
            r.sign.or_else(|| {
                let [_, b, _, d] = r.slots;
                let forward = successor(components, b) == Some(d);
                let backward = successor(components, d) == Some(b);
                match (forward, backward) {
                    (true, true) => None,
                    (true, false) => Some(Sign::Negative),
                    // an inconsistent crossing is left for validation to report
                    _ => Some(Sign::Positive),
                }
            })
        })
        .collect();
    let mut occurrences: HashMap<Arc, Vec<(usize, usize)>> = HashMap::new();
    for (ci, r) in raw.iter().enumerate() {
        for (s, &a) in r.slots.iter().enumerate() {
            occurrences.entry(a).or_default().push((ci, s));
        }
    }
    // Some(true) if the slot is where the arc ends, Some(false) where it starts
    let role = |signs: &[Option<Sign>], ci: usize, s: usize| -> Option<bool> {
        match s {
            0 => Some(true),
            2 => Some(false),
            _ => signs[ci].map(|sign| Crossing::new(raw[ci].slots, sign).is_incoming_slot(s)),
        }
    };
    loop {
        let mut progress = false;
        for ci in 0..raw.len() {
            if signs[ci].is_some() {
                continue;
            }
            let b = raw[ci].slots[1];
            let elsewhere = occurrences[&b].iter().filter(|&&(cj, s)| (cj, s) != (ci, 1)).find_map(|&(cj, s)| role(&signs, cj, s));
            if let Some(ends_elsewhere) = elsewhere {
                signs[ci] = Some(if ends_elsewhere { Sign::Positive } else { Sign::Negative });
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    signs.iter().zip(raw).map(|(s, r)| s.ok_or(r.pos)).collect()
}

fn sign_is_ambiguous(d: &Diagram, c: &Crossing) -> bool {
    let [_, b, _, dd] = c.slots;
    d.next_arc(b) == Some(dd) && d.next_arc(dd) == Some(b)
}

/// PD text of a diagram with its current labels.
pub fn emit_pd(d: &Diagram) -> String {
    let mut out = String::new();
    for (i, c) in d.crossings().iter().enumerate() {
        if i > 0 {
            out.push(';');
        }
        let [a, b, cc, dd] = c.slots;
        write!(out, "X[{a},{b},{cc},{dd}]").unwrap();
        if sign_is_ambiguous(d, c) {
            out.push(if c.sign == Sign::Positive { '+' } else { '-' });
        }
    }
    if !out.is_empty() {
        out.push(' ');
    }
    out.push_str("/ ");
    for comp in d.components() {
        if comp.len == 1 {
            write!(out, "({})", comp.first).unwrap();
        } else {
            write!(out, "({}..{})", comp.first, comp.last()).unwrap();
        }
    }
    out
}
