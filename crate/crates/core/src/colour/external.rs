//! External SAT solver back end.
//!
//! The CNF is written to a temporary file and the solver command is run
//! through `sh -c`. A `{cnf}` placeholder in the command is replaced by the
//! file path; without one the path is appended. Standard output is read
//! using the SAT-competition protocol (`s ...` status line, `v ...` model
//! lines), and exit codes 10/20 are accepted as SAT/UNSAT.

use std::io::{Read, Write};
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use super::{
    check_instance, encode_cnf, emit_dimacs, verify_colouring, CnfInstance, ColourError,
    DecisionOutcome, Decider, EdgeColouring, Effort, Verdict,
};
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct External {
    pub command: String,
    pub timeout: Option<Duration>,
}

impl External {
    pub fn new(command: impl Into<String>) -> Self {
        External { command: command.into(), timeout: Some(Duration::from_secs(600)) }
    }

    pub fn with_timeout(mut self, timeout: Option<Duration>) -> Self {
        self.timeout = timeout;
        self
    }
}

impl Decider for External {
    fn decide(&self, g: &Multigraph, p: u32, q: u32) -> Result<DecisionOutcome, ColourError> {
        decide_external(g, p, q, &self.command, self.timeout)
    }
}

/// What a solver run said, before witness decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverAnswer {
    Sat(Vec<i32>),
    Unsat,
    Unknown,
}

/// Parse SAT-competition output. `exit_code` is the process exit code when
/// it exited normally.
pub fn parse_solver_output(stdout: &str, exit_code: Option<i32>) -> Result<SolverAnswer, ColourError> {
    let mut status: Option<&str> = None;
    let mut model = Vec::new();
    for line in stdout.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("s ") {
            let rest = rest.trim();
            if status.is_some_and(|s| s != rest) {
                return Err(ColourError::Protocol("conflicting status lines".into()));
            }
            status = Some(rest);
        } else if let Some(rest) = line.strip_prefix("v ").or(if line == "v" { Some("") } else { None }) {
            for tok in rest.split_whitespace() {
                let lit: i32 = tok
                    .parse()
                    .map_err(|_| ColourError::Protocol(format!("bad literal {tok:?}")))?;
                if lit != 0 {
                    model.push(lit);
                }
            }
        }
    }
    let from_status = match status {
        Some("SATISFIABLE") => Some(true),
        Some("UNSATISFIABLE") => Some(false),
        Some("UNKNOWN") => return Ok(SolverAnswer::Unknown),
        Some(other) => return Err(ColourError::Protocol(format!("unknown status {other:?}"))),
        None => None,
    };
    let from_code = match exit_code {
        Some(10) => Some(true),
        Some(20) => Some(false),
        _ => None,
    };
    let sat = match (from_status, from_code) {
        (Some(a), Some(b)) if a != b => {
            return Err(ColourError::Protocol("status line contradicts exit code".into()))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(ColourError::Protocol("no status line in solver output".into())),
    };
    Ok(if sat { SolverAnswer::Sat(model) } else { SolverAnswer::Unsat })
}

/// Lowest true colour per edge.
fn decode_model(cnf: &CnfInstance, model: &[i32], p: u32, q: u32) -> Result<EdgeColouring, ColourError> {
    let mut colours: Vec<Option<u32>> = vec![None; cnf.edges];
    for &lit in model {
        if lit <= 0 {
            continue;
        }
        if let Some((e, c)) = cnf.edge_colour(lit) {
            let slot = &mut colours[e];
            if slot.is_none_or(|old| c < old) {
                *slot = Some(c);
            }
        }
    }
    let colours = colours.into_iter().collect::<Option<Vec<_>>>().ok_or(ColourError::Integrity)?;
    Ok(EdgeColouring::new(p, q, colours))
}

fn kill_group(child: &mut std::process::Child) {
    #[cfg(unix)]
    if let Ok(pid) = i32::try_from(child.id()) {
        // SAFETY: plain syscall; a stale group id only yields ESRCH.
        unsafe {
            libc::kill(-pid, libc::SIGKILL);
        }
    }
    let _ = child.kill();
}

pub fn decide_external(
    g: &Multigraph,
    p: u32,
    q: u32,
    command: &str,
    timeout: Option<Duration>,
) -> Result<DecisionOutcome, ColourError> {
    check_instance(g, p, q)?;
    let started = Instant::now();
    let cnf = encode_cnf(g, p, q)?;
    let io = |e: std::io::Error| ColourError::Io(e.to_string());
    let mut file = tempfile::Builder::new().prefix("circix-").suffix(".cnf").tempfile().map_err(io)?;
    file.write_all(emit_dimacs(&cnf).as_bytes()).map_err(io)?;
    file.flush().map_err(io)?;
    let path = file.path().to_string_lossy().into_owned();
    let full = if command.contains("{cnf}") {
        command.replace("{cnf}", &path)
    } else {
        format!("{command} {path}")
    };

    let mut command = Command::new("sh");
    command.arg("-c").arg(&full);
    // The solver may be a grandchild of `sh`; its own process group lets a
    // timeout kill everything that holds the output pipe.
    #[cfg(unix)]
    std::os::unix::process::CommandExt::process_group(&mut command, 0);
    let mut child = command
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(io)?;
    let mut stdout = child.stdout.take().expect("piped stdout");
    let reader = thread::spawn(move || {
        let mut buf = String::new();
        stdout.read_to_string(&mut buf).map(|_| buf)
    });

    let status = loop {
        if let Some(status) = child.try_wait().map_err(io)? {
            break Some(status);
        }
        if timeout.is_some_and(|t| started.elapsed() > t) {
            kill_group(&mut child);
            let _ = child.wait();
            break None;
        }
        thread::sleep(Duration::from_millis(2));
    };
    let output = reader.join().expect("reader thread").map_err(io)?;
    let effort = Effort::Elapsed(started.elapsed());
    let unknown = DecisionOutcome { verdict: Verdict::Unknown, witness: None, effort };
    let Some(status) = status else {
        return Ok(unknown);
    };
    let code = status.code();
    let crashed = !matches!(code, Some(0 | 10 | 20));
    let answer = match parse_solver_output(&output, code) {
        Ok(a) => a,
        Err(_) if crashed => return Ok(unknown),
        Err(e) => return Err(e),
    };
    match answer {
        SolverAnswer::Unknown => Ok(unknown),
        SolverAnswer::Unsat => Ok(DecisionOutcome { verdict: Verdict::Unsat, witness: None, effort }),
        SolverAnswer::Sat(model) => {
            let witness = decode_model(&cnf, &model, p, q)?;
            if !verify_colouring(g, &witness)? {
                return Err(ColourError::Integrity);
            }
            Ok(DecisionOutcome { verdict: Verdict::Sat, witness: Some(witness), effort })
        }
    }
}
