//! Benchmark inputs shared by the bench targets.

use knotforge::census::census_diagrams;
use knotforge::finitetype::region_enumerator;
use knotforge::Diagram;

/// Census knots by name.
pub fn census_knot(name: &str) -> Diagram {
    census_diagrams().expect("census").into_iter().find(|e| e.name == name).expect("census name").diagram
}

/// A census knot with one full twist in each of its first `count` two-strand regions
/// that can be inserted together.
pub fn twisted(name: &str, count: usize) -> Diagram {
    let d = census_knot(name);
    let mut chosen: Vec<(knotforge::TwistRegion, i64)> = Vec::new();
    for r in region_enumerator(&d, 2, 2, false).into_iter().filter(|r| r.len() == 2) {
        if chosen.len() == count {
            break;
        }
        let used = chosen.iter().any(|(c, _)| c.strands.iter().any(|s| r.strands.iter().any(|t| s.0 == t.0)));
        if used {
            continue;
        }
        chosen.push((r, 1));
        if d.insert_twists(&chosen).is_err() {
            chosen.pop();
        }
    }
    d.insert_twists(&chosen).expect("compatible regions").diagram
}
