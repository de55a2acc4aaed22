//! Minimal SAT solver front end: reads a DIMACS CNF file (or standard input)
//! and answers in the SAT-competition format, exiting with 10 or 20.

use std::io::{Read, Write};
use std::process::ExitCode;

fn parse(text: &str) -> Result<(i32, Vec<Vec<i32>>), String> {
    let mut vars = 0;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
            continue;
        }
        if let Some(header) = line.strip_prefix("p cnf") {
            let mut it = header.split_whitespace();
            vars = it
                .next()
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| format!("bad header {line:?}"))?;
            continue;
        }
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| format!("bad literal {tok:?}"))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                vars = vars.max(lit.abs());
                current.push(lit);
            }
        }
    }
    if !current.is_empty() {
        clauses.push(current);
    }
    Ok((vars, clauses))
}

fn main() -> ExitCode {
    let mut text = String::new();
    let read = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map(|t| text = t),
        None => std::io::stdin().read_to_string(&mut text).map(|_| ()),
    };
    if let Err(e) = read {
        eprintln!("c error: {e}");
        return ExitCode::from(1);
    }
    let (vars, clauses) = match parse(&text) {
        Ok(parsed) => parsed,
        Err(e) => {
            eprintln!("c error: {e}");
            return ExitCode::from(1);
        }
    };
    let mut solver: cadical::Solver = cadical::Solver::new();
    for clause in clauses {
        solver.add_clause(clause);
    }
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match solver.solve() {
        Some(true) => {
            let mut line = String::from("v");
            let _ = writeln!(out, "s SATISFIABLE");
            for v in 1..=vars {
                let lit = if solver.value(v) == Some(false) { -v } else { v };
                line.push_str(&format!(" {lit}"));
                if line.len() > 72 {
                    let _ = writeln!(out, "{line}");
                    line = String::from("v");
                }
            }
            let _ = writeln!(out, "{line} 0");
            ExitCode::from(10)
        }
        Some(false) => {
            let _ = writeln!(out, "s UNSATISFIABLE");
            ExitCode::from(20)
        }
        None => {
            let _ = writeln!(out, "s UNKNOWN");
            ExitCode::from(0)
        }
    }
}
