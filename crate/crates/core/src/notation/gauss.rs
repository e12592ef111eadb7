use std::collections::BTreeMap;
use std::fmt;

use super::scan::Scanner;
use super::NotationError;
use crate::diagram::{Component, Crossing, Diagram, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussToken {
    pub over: bool,
    pub id: u32,
    pub sign: Sign,
}

impl fmt::Display for GaussToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Positive { '+' } else { '-' };
        write!(f, "{}{}{}", if self.over { 'O' } else { 'U' }, self.id, s)
    }
}

/// Signed Gauss code: one token sequence per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCode {
    pub components: Vec<Vec<GaussToken>>,
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bare = self.components.len() == 1 && !self.components[0].is_empty();
        for comp in &self.components {
            if !bare {
                write!(f, "(")?;
            }
            for t in comp {
                write!(f, "{t}")?;
            }
            if !bare {
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

impl GaussCode {
    pub fn parse(text: &str) -> Result<GaussCode, NotationError> {
        let mut sc = Scanner::new(text);
        if sc.at_end() {
            return Ok(GaussCode { components: vec![vec![]] });
        }
        let mut components = Vec::new();
        let mut seen: BTreeMap<(u32, bool), usize> = BTreeMap::new();
        let mut token_pos: BTreeMap<u32, usize> = BTreeMap::new();
        let mut signs: BTreeMap<u32, Sign> = BTreeMap::new();
        let parenthesized = {
            sc.skip_ws();
            sc.peek() == Some('(')
        };
        loop {
            if parenthesized {
                sc.expect('(')?;
            }
            let mut comp = Vec::new();
            loop {
                sc.skip_ws();
                let pos = sc.pos();
                let over = match sc.peek() {
                    Some('O') => true,
                    Some('U') => false,
                    _ => break,
                };
                sc.eat(if over { 'O' } else { 'U' });
                if !matches!(sc.peek(), Some(c) if c.is_ascii_digit()) {
                    return Err(sc.error("expected a crossing id"));
                }
                let id = sc.uint()?;
                let sign = if sc.eat('+') {
                    Sign::Positive
                } else if sc.eat('-') {
                    Sign::Negative
                } else {
                    return Err(sc.error("expected `+` or `-`"));
                };
                if seen.insert((id, over), pos).is_some() {
                    return Err(sc.error_at(pos, format!("crossing {id} is passed {} twice", if over { "over" } else { "under" })));
                }
                if let Some(&s) = signs.get(&id) {
                    if s != sign {
                        return Err(sc.error_at(pos, format!("crossing {id} has inconsistent signs")));
                    }
                }
                signs.insert(id, sign);
                token_pos.insert(id, pos);
                comp.push(GaussToken { over, id, sign });
            }
            components.push(comp);
            if !parenthesized {
                break;
            }
            sc.expect(')')?;
            if sc.at_end() {
                break;
            }
        }
        if !sc.at_end() {
            return Err(sc.error("unexpected character"));
        }
        for (&id, &pos) in &token_pos {
            for over in [true, false] {
                if !seen.contains_key(&(id, over)) {
                    let kind = if over { "over" } else { "under" };
                    return Err(sc.error_at(pos, format!("crossing {id} has no {kind} pass")));
                }
            }
        }
        Ok(GaussCode { components })
    }

    /// PD diagram without the planarity check. The arc entering the `j`-th pass of a
    /// component is that component's `j`-th arc.
    pub fn to_diagram(&self) -> Diagram {
        let mut components = Vec::new();
        // crossing id -> (under in/out, over in/out, sign)
        let mut under: BTreeMap<u32, (u32, u32)> = BTreeMap::new();
        let mut over: BTreeMap<u32, (u32, u32, Sign)> = BTreeMap::new();
        let mut next = 1;
        for comp in &self.components {
            let len = comp.len().max(1) as u32;
            let first = next;
            for (j, t) in comp.iter().enumerate() {
                let arc_in = first + j as u32;
                let arc_out = first + (j as u32 + 1) % len;
                if t.over {
                    over.insert(t.id, (arc_in, arc_out, t.sign));
                } else {
                    under.insert(t.id, (arc_in, arc_out));
                }
            }
            components.push(Component { first, len });
            next += len;
        }
        let crossings = under
            .iter()
            .map(|(id, &(ui, uo))| {
                let (oi, oo, sign) = over[id];
                match sign {
                    Sign::Positive => Crossing::new([ui, oo, uo, oi], sign),
                    Sign::Negative => Crossing::new([ui, oi, uo, oo], sign),
                }
            })
            .collect();
        Diagram::from_parts(crossings, components)
    }

    pub fn of_diagram(d: &Diagram) -> GaussCode {
        let mut heads = vec![(0usize, false); d.arc_count() as usize + 1];
        for (ci, c) in d.crossings().iter().enumerate() {
            heads[c.under_in() as usize] = (ci, false);
            heads[c.over_in() as usize] = (ci, true);
        }
        let loops = d.free_loops();
        let components = d
            .components()
            .iter()
            .map(|comp| {
                if loops.contains(&comp.first) {
                    return vec![];
                }
                comp.arcs()
                    .map(|a| {
                        let (ci, over) = heads[a as usize];
                        GaussToken { over, id: ci as u32 + 1, sign: d.crossings()[ci].sign }
                    })
                    .collect()
            })
            .collect();
        GaussCode { components }
    }
}

/// Parses a Gauss code and requires the result to be a planar diagram.
pub fn parse_gauss(text: &str) -> Result<Diagram, NotationError> {
    let d = GaussCode::parse(text)?.to_diagram();
    let v = d.validate();
    if v.iter().any(|v| v.rule == crate::diagram::Rule::Planarity) {
        return Err(NotationError::NotRealizable);
    }
    if !v.is_empty() {
        return Err(NotationError::Invalid(v));
    }
    Ok(d)
}

pub fn emit_gauss(d: &Diagram) -> String {
    let code = GaussCode::of_diagram(d);
    if d.component_count() == 1 && d.crossing_count() == 0 {
        return String::new();
    }
    code.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn trefoil_from_gauss() {
        let d = parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap();
        assert_eq!(d.writhe(), 3);
        assert!(d.same_diagram(&braid_closure(&[1, 1, 1], 2).unwrap()));
    }

    #[test]
    fn empty_code_is_unknot() {
        assert_eq!(parse_gauss("").unwrap(), Diagram::unknot());
        assert_eq!(parse_gauss("()").unwrap(), Diagram::unknot());
        assert_eq!(parse_gauss("()()").unwrap(), Diagram::unlink(2));
        assert_eq!(emit_gauss(&Diagram::unknot()), "");
        assert_eq!(emit_gauss(&Diagram::unlink(2)), "()()");
    }

    #[test]
    fn virtual_trefoil_is_not_realizable() {
        assert_eq!(parse_gauss("O1+O2+U1+U2+"), Err(NotationError::NotRealizable));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_gauss("O1+U1-"), Err(NotationError::Syntax { .. })));
        assert!(matches!(parse_gauss("O1+O2+"), Err(NotationError::Syntax { .. })));
        assert!(matches!(parse_gauss("O1+U1"), Err(NotationError::Syntax { .. })));
        assert!(matches!(parse_gauss("(O1+U2+)(O2+"), Err(NotationError::Syntax { .. })));
    }

    #[test]
    fn gauss_round_trip_on_links() {
        for (word, s) in [(vec![1, 1], 2), (vec![1, -2, 1, -2], 3), (vec![1, 2, 2, 1], 3), (vec![1], 3)] {
            let d = braid_closure(&word, s).unwrap();
            let text = emit_gauss(&d);
            let back = parse_gauss(&text).unwrap();
            assert!(back.same_diagram(&d), "{text}");
        }
    }
}
