//! Reading graph streams produced by external generators: one graph6 or
//! sparse6 code per line, optionally with a `>>graph6<<` style header.

use std::io::BufRead;
use std::path::Path;

use super::SurveyError;
use crate::codec::{parse_graph6, parse_sparse6, CodeFormat, CodecError, parse_code};
use crate::graph::Multigraph;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Ingested {
    pub graphs: Vec<Multigraph>,
    /// Malformed lines skipped in lenient mode, with 1-based line numbers.
    pub skipped: Vec<(usize, CodecError)>,
}

fn parse_line(line: &str, format: Option<CodeFormat>) -> Result<Multigraph, CodecError> {
    match format {
        None => parse_code(line),
        Some(CodeFormat::Graph6) => parse_graph6(line),
        Some(CodeFormat::Sparse6) => parse_sparse6(line),
    }
}

/// Parse every line of `reader`. `format = None` detects each line's format.
/// In strict mode the first malformed line is an error.
pub fn ingest_reader<R: BufRead>(reader: R, format: Option<CodeFormat>, strict: bool) -> Result<Ingested, SurveyError> {
    let mut out = Ingested::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| SurveyError::Io(e.to_string()))?;
        let mut text = line.trim();
        for header in [">>graph6<<", ">>sparse6<<"] {
            text = text.strip_prefix(header).unwrap_or(text);
        }
        if text.is_empty() {
            continue;
        }
        match parse_line(text, format) {
            Ok(g) => out.graphs.push(g),
            Err(source) if strict => return Err(SurveyError::Malformed { line: i + 1, source }),
            Err(source) => out.skipped.push((i + 1, source)),
        }
    }
    Ok(out)
}

pub fn ingest_stream(path: &Path, format: Option<CodeFormat>, strict: bool) -> Result<Ingested, SurveyError> {
    let file = std::fs::File::open(path).map_err(|e| SurveyError::Io(format!("{}: {e}", path.display())))?;
    ingest_reader(std::io::BufReader::new(file), format, strict)
}
