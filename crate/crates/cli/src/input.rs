//! Where graphs come from: inline codes, files, or standard input.

use std::io::Read;
use std::path::PathBuf;

use clap::Args;

use circix_core::codec::{parse_code, parse_graph6, parse_sparse6};
use circix_core::graph::Multigraph;
use circix_core::survey::{ingest_reader, Source};

use crate::Failure;

#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Inline graph6 code.
    #[arg(long)]
    g6: Option<String>,
    /// Inline sparse6 code.
    #[arg(long)]
    s6: Option<String>,
    /// File whose first line is a graph code.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Read the graph code from standard input.
    #[arg(long)]
    stdin: bool,
}

/// The parsed graph plus whatever followed its code line.
pub struct GraphInput {
    pub graph: Multigraph,
    pub rest: String,
}

fn split_code(text: &str) -> Result<(&str, String), Failure> {
    let mut lines = text.lines();
    for line in lines.by_ref() {
        let mut code = line.trim();
        for header in [">>graph6<<", ">>sparse6<<"] {
            code = code.strip_prefix(header).unwrap_or(code);
        }
        if code.is_empty() || code.starts_with('#') {
            continue;
        }
        let rest: Vec<&str> = lines.collect();
        return Ok((code, rest.join("\n")));
    }
    Err(Failure::usage("no graph code in input"))
}

impl InputArgs {
    pub fn read(&self) -> Result<GraphInput, Failure> {
        let malformed = |e| Failure::usage(format!("malformed graph code: {e}"));
        if let Some(code) = &self.g6 {
            let graph = parse_graph6(code).map_err(malformed)?;
            return Ok(GraphInput { graph, rest: String::new() });
        }
        if let Some(code) = &self.s6 {
            let graph = parse_sparse6(code).map_err(malformed)?;
            return Ok(GraphInput { graph, rest: String::new() });
        }
        let text = match &self.file {
            Some(path) => {
                std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?
            }
            None => {
                let mut text = String::new();
                std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
                text
            }
        };
        let (code, rest) = split_code(&text)?;
        let graph = parse_code(code).map_err(malformed)?;
        Ok(GraphInput { graph, rest })
    }
}

/// Optional graph stream for `survey`, replacing the built-in generator.
#[derive(Args, Clone)]
pub struct StreamArgs {
    /// File with one graph6 or sparse6 code per line.
    #[arg(long, conflicts_with = "stdin")]
    file: Option<PathBuf>,
    /// Read the stream from standard input.
    #[arg(long)]
    stdin: bool,
    /// Fail on the first malformed line instead of skipping it.
    #[arg(long)]
    strict: bool,
}

impl StreamArgs {
    pub fn source(&self) -> Result<Option<Source>, String> {
        if let Some(path) = &self.file {
            return Ok(Some(Source::Stream { path: path.clone(), format: None, strict: self.strict }));
        }
        if !self.stdin {
            return Ok(None);
        }
        let got = ingest_reader(std::io::stdin().lock(), None, self.strict).map_err(|e| e.to_string())?;
        for (line, e) in &got.skipped {
            eprintln!("skipped line {line}: {e}");
        }
        Ok(Some(Source::Graphs(got.graphs)))
    }
}

#[derive(Clone, Debug, Default)]
pub struct Orders(pub Vec<usize>);

/// `3-6`, `3,5,7`, a mix of both, or empty.
pub fn parse_orders(text: &str) -> Result<Orders, String> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("bad order {s:?}"));
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(format!("empty range {part}"));
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(Orders(out))
}
