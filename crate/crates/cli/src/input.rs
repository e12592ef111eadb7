use std::io::Read;
use std::path::Path;

use knotforge::census::census_diagrams;
use knotforge::finitetype::CorpusEntry;
use knotforge::notation::{diagram_from_json, parse_any, parse_braid, parse_gauss, parse_pd};
use knotforge::Diagram;

use crate::error::CliError;
use crate::DiagramInput;

fn read_path(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

pub fn read_diagram(input: &DiagramInput) -> Result<Diagram, CliError> {
    Ok(if let Some(t) = &input.pd {
        parse_pd(t)?
    } else if let Some(t) = &input.gauss {
        parse_gauss(t)?
    } else if let Some(t) = &input.braid {
        parse_braid(t)?.closure()?
    } else if let Some(t) = &input.diagram_json {
        diagram_from_json(t)?
    } else if let Some(p) = &input.file {
        parse_any(read_path(p)?.trim())?
    } else {
        return Err(CliError::Usage("no input diagram given".into()));
    })
}

/// `census`, or a file with one diagram per line.
pub fn read_corpus(spec: &str) -> Result<Vec<CorpusEntry>, CliError> {
    if spec == "census" {
        return Ok(census_diagrams()?);
    }
    let text = read_path(Path::new(spec))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(CorpusEntry::new(format!("line {}", i + 1), parse_any(line)?));
    }
    Ok(out)
}
