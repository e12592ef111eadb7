use serde::{Deserialize, Serialize};

use super::{checked, NotationError};
use crate::diagram::{Component, Crossing, Diagram, Sign};

/// JSON mirror of the PD form: `{"crossings":[{"slots":[1,4,2,5],"sign":-1}],"components":[[1,6]]}`
/// where each component is an inclusive `[first, last]` arc range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub crossings: Vec<CrossingJson>,
    pub components: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub slots: [u32; 4],
    pub sign: i8,
}

impl From<&Diagram> for DiagramJson {
    fn from(d: &Diagram) -> Self {
        DiagramJson {
            crossings: d.crossings().iter().map(|c| CrossingJson { slots: c.slots, sign: c.sign.value() as i8 }).collect(),
            components: d.components().iter().map(|c| [c.first, c.last()]).collect(),
        }
    }
}

impl TryFrom<DiagramJson> for Diagram {
    type Error = NotationError;

    fn try_from(j: DiagramJson) -> Result<Diagram, NotationError> {
        let crossings = j
            .crossings
            .iter()
            .map(|c| {
                let sign = Sign::of(i64::from(c.sign)).ok_or_else(|| NotationError::Json(format!("sign must be +1 or -1, got {}", c.sign)))?;
                Ok(Crossing::new(c.slots, sign))
            })
            .collect::<Result<Vec<_>, NotationError>>()?;
        let components = j
            .components
            .iter()
            .map(|&[first, last]| {
                if first == 0 || last < first {
                    Err(NotationError::Json(format!("bad arc range [{first}, {last}]")))
                } else {
                    Ok(Component { first, len: last - first + 1 })
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        checked(Diagram::from_parts(crossings, components))
    }
}

pub fn diagram_to_json(d: &Diagram) -> serde_json::Value {
    serde_json::to_value(DiagramJson::from(d)).expect("plain data serializes")
}

pub fn diagram_from_json(text: &str) -> Result<Diagram, NotationError> {
    let j: DiagramJson = serde_json::from_str(text).map_err(|e| NotationError::Json(e.to_string()))?;
    Diagram::try_from(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::braid_closure;

    #[test]
    fn json_round_trip() {
        let d = braid_closure(&[1, -2, 1, -2], 3).unwrap();
        let text = diagram_to_json(&d).to_string();
        assert_eq!(diagram_from_json(&text).unwrap(), d);
        let u = diagram_to_json(&Diagram::unknot()).to_string();
        assert_eq!(u, r#"{"components":[[1,1]],"crossings":[]}"#);
    }

    #[test]
    fn json_rejects_bad_sign() {
        let text = r#"{"crossings":[{"slots":[1,1,2,2],"sign":0}],"components":[[1,2]]}"#;
        assert!(matches!(diagram_from_json(text), Err(NotationError::Json(_))));
    }
}
