use std::fmt;

use super::scan::Scanner;
use super::NotationError;
use crate::diagram::{braid_closure, Diagram, DiagramError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Self {
        BraidWord { strands, letters }
    }

    pub fn closure(&self) -> Result<Diagram, DiagramError> {
        braid_closure(&self.letters, self.strands)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        write!(f, "braid: s={} w=[{}]", self.strands, w.join(","))
    }
}

/// Parses `braid: s=3 w=[1,-2,1,-2]`; letters are range-checked against `s`.
pub fn parse_braid(text: &str) -> Result<BraidWord, NotationError> {
    let mut sc = Scanner::new(text);
    sc.eat_str("braid:");
    if !sc.eat_str("s") {
        return Err(sc.error("expected `s=<strands>`"));
    }
    sc.expect('=')?;
    let strands = sc.uint()? as usize;
    if strands == 0 {
        return Err(sc.error("a braid needs at least one strand"));
    }
    if !sc.eat_str("w") {
        return Err(sc.error("expected `w=[...]`"));
    }
    sc.expect('=')?;
    sc.expect('[')?;
    let mut letters = Vec::new();
    if !sc.eat(']') {
        loop {
            sc.skip_ws();
            let pos = sc.pos();
            let v = sc.int()?;
            let letter = i32::try_from(v).map_err(|_| sc.error_at(pos, "letter out of range"))?;
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(sc.error_at(pos, format!("letter {letter} out of range for {strands} strands")));
            }
            letters.push(letter);
            if sc.eat(']') {
                break;
            }
            sc.expect(',')?;
        }
    }
    if !sc.at_end() {
        return Err(sc.error("unexpected text after braid word"));
    }
    Ok(BraidWord { strands, letters })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let b = parse_braid("braid: s=3 w=[1,-2,1,-2]").unwrap();
        assert_eq!(b, BraidWord::new(3, vec![1, -2, 1, -2]));
        assert_eq!(parse_braid("s=2 w=[1, 1, 1]").unwrap().letters, vec![1, 1, 1]);
        assert_eq!(parse_braid("s=1 w=[]").unwrap().closure().unwrap(), Diagram::unknot());
        assert_eq!(b.to_string(), "braid: s=3 w=[1,-2,1,-2]");
        assert_eq!(parse_braid(&b.to_string()).unwrap(), b);
    }

    #[test]
    fn errors_have_positions() {
        match parse_braid("s=2 w=[1,2]") {
            Err(NotationError::Syntax { column, .. }) => assert_eq!(column, 10),
            other => panic!("{other:?}"),
        }
        assert!(parse_braid("s=0 w=[]").is_err());
        assert!(parse_braid("w=[1]").is_err());
        assert!(parse_braid("s=2 w=[1").is_err());
    }
}
