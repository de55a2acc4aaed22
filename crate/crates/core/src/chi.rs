//! Chromatic index and circular chromatic index.
//!
//! The circular chromatic index lies in `(χ' - 1, χ']`, and its denominator
//! is at most the matching number `α'`. The search starts from that window,
//! discards candidates below the counting bound `|E| / α'`, then binary
//! searches the candidates of each denominator `q = 2, 3, ...` in turn,
//! using monotonicity of colourability in `p/q`.

use std::fmt;

use thiserror::Error;

use crate::colour::{ColourError, Decider, Verdict};
use crate::fraction::{enumerate_candidates, stage_candidates, Fraction, SearchInterval};
use crate::graph::Multigraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChiError {
    #[error("the graph has a loop, so it has no circular edge-colouring")]
    Loop,
    #[error("the graph has no edges")]
    Edgeless,
    #[error(transparent)]
    Colour(#[from] ColourError),
}

/// Who settled a trace entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// A decision back end.
    Engine,
    /// The `|E| / α'` counting bound, or `Δ`.
    Bound,
    /// Vizing/Shannon upper bound on the chromatic index.
    Theorem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceEntry {
    pub fraction: Fraction,
    pub verdict: Verdict,
    pub source: Source,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.fraction, self.verdict)?;
        match self.source {
            Source::Engine => Ok(()),
            Source::Bound => write!(f, " bound"),
            Source::Theorem => write!(f, " theorem"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiValue {
    Exact(Fraction),
    /// Known to lie in `(lo, hi]`; `hi` is achievable.
    Bounded(SearchInterval),
}

impl ChiValue {
    pub fn exact(&self) -> Option<Fraction> {
        match self {
            ChiValue::Exact(f) => Some(*f),
            ChiValue::Bounded(_) => None,
        }
    }

    pub fn upper(&self) -> Fraction {
        match self {
            ChiValue::Exact(f) => *f,
            ChiValue::Bounded(i) => i.hi(),
        }
    }
}

impl fmt::Display for ChiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChiValue::Exact(x) => write!(f, "{x}"),
            ChiValue::Bounded(i) => write!(f, "interval {i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiResult {
    /// `None` only when the budget ran out before `χ'` was settled.
    pub chromatic_index: Option<u32>,
    pub circular: ChiValue,
    pub trace: Vec<TraceEntry>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChiOptions {
    /// Values at or below this may be left unresolved: once the graph is
    /// known to be colourable at the threshold the search stops.
    pub threshold: Option<Fraction>,
    /// Cap on the denominators searched (never above `α'`).
    pub qmax: Option<u64>,
}

fn check(g: &Multigraph) -> Result<(), ChiError> {
    if g.has_loop() {
        return Err(ChiError::Loop);
    }
    if g.size() == 0 {
        return Err(ChiError::Edgeless);
    }
    Ok(())
}

/// `|E| / α'`, reduced.
pub fn rational_lower_bound(g: &Multigraph) -> Result<Fraction, ChiError> {
    check(g)?;
    Ok(Fraction::new(g.size() as u64, g.max_matching_size() as u64).expect("positive"))
}

/// Upper bound on `χ'`: `Δ + 1` for simple graphs, `min(Δ + μ, ⌊3Δ/2⌋)`
/// otherwise.
pub fn chromatic_index_upper_bound(g: &Multigraph) -> u32 {
    let delta = g.max_degree() as u32;
    if g.is_simple() {
        delta + 1
    } else {
        let mu = g.max_multiplicity() as u32;
        (delta + mu).min(3 * delta / 2).max(delta)
    }
}

enum IndexSearch {
    Exact(u32),
    /// `χ' > lo` and `χ' <= hi`.
    Unknown { lo: u32, hi: u32 },
}

fn index_search(g: &Multigraph, decider: &dyn Decider, trace: &mut Vec<TraceEntry>) -> Result<IndexSearch, ChiError> {
    check(g)?;
    let delta = g.max_degree() as u32;
    let lb = rational_lower_bound(g)?;
    let start = delta.max(lb.ceil() as u32);
    let limit = chromatic_index_upper_bound(g);
    for k in start..limit {
        let out = decider.decide(g, k, 1)?;
        trace.push(TraceEntry { fraction: Fraction::integer(k as u64), verdict: out.verdict, source: Source::Engine });
        match out.verdict {
            Verdict::Sat => return Ok(IndexSearch::Exact(k)),
            Verdict::Unsat => {}
            Verdict::Unknown => return Ok(IndexSearch::Unknown { lo: k - 1, hi: limit }),
        }
    }
    trace.push(TraceEntry { fraction: Fraction::integer(limit as u64), verdict: Verdict::Sat, source: Source::Theorem });
    Ok(IndexSearch::Exact(limit))
}

/// Least `k` with a proper `k`-edge-colouring.
pub fn chromatic_index(g: &Multigraph, decider: &dyn Decider) -> Result<Option<u32>, ChiError> {
    Ok(match index_search(g, decider, &mut Vec::new())? {
        IndexSearch::Exact(k) => Some(k),
        IndexSearch::Unknown { .. } => None,
    })
}

pub fn circular_chromatic_index(
    g: &Multigraph,
    decider: &dyn Decider,
    options: ChiOptions,
) -> Result<ChiResult, ChiError> {
    let mut trace = Vec::new();
    let index = index_search(g, decider, &mut trace)?;
    let chi = match index {
        IndexSearch::Exact(k) => k,
        IndexSearch::Unknown { lo, hi } => {
            let lo = Fraction::integer(lo.max(1) as u64);
            let hi = Fraction::integer(hi as u64);
            return Ok(ChiResult {
                chromatic_index: None,
                circular: ChiValue::Bounded(SearchInterval::new(lo, hi).expect("lo < hi")),
                trace,
            });
        }
    };
    let delta = g.max_degree() as u64;
    let hi = Fraction::integer(chi as u64);
    if chi as u64 == delta || chi == 1 {
        return Ok(ChiResult { chromatic_index: Some(chi), circular: ChiValue::Exact(hi), trace });
    }
    let alpha = g.max_matching_size() as u64;
    let qmax = options.qmax.map_or(alpha, |q| q.min(alpha));
    let bound = rational_lower_bound(g)?.max(Fraction::integer(delta));
    let mut interval = SearchInterval::new(Fraction::integer(chi as u64 - 1), hi).expect("lo < hi");

    // Everything below the counting bound is unachievable.
    for f in enumerate_candidates(interval.lo(), interval.hi(), qmax).expect("nonempty") {
        if f < bound {
            trace.push(TraceEntry { fraction: f, verdict: Verdict::Unsat, source: Source::Bound });
            interval.raise_lo(f);
        }
    }

    let decide = |f: Fraction, interval: &mut SearchInterval, trace: &mut Vec<TraceEntry>| -> Result<Verdict, ChiError> {
        let out = decider.decide(g, f.numer() as u32, f.denom() as u32)?;
        trace.push(TraceEntry { fraction: f, verdict: out.verdict, source: Source::Engine });
        match out.verdict {
            Verdict::Sat => interval.lower_hi(f),
            Verdict::Unsat => interval.raise_lo(f),
            Verdict::Unknown => {}
        }
        Ok(out.verdict)
    };
    let bounded = |interval: SearchInterval, trace: Vec<TraceEntry>| ChiResult {
        chromatic_index: Some(chi),
        circular: ChiValue::Bounded(interval),
        trace,
    };

    if let Some(t) = options.threshold {
        if interval.contains_strictly(t) {
            match decide(t, &mut interval, &mut trace)? {
                Verdict::Sat => {
                    if interval.resolved(qmax) {
                        return Ok(ChiResult { chromatic_index: Some(chi), circular: ChiValue::Exact(t), trace });
                    }
                    return Ok(bounded(interval, trace));
                }
                Verdict::Unknown => return Ok(bounded(interval, trace)),
                Verdict::Unsat => {}
            }
        }
    }

    for q in 2..=qmax {
        loop {
            let stage = stage_candidates(&interval, q);
            if stage.is_empty() {
                break;
            }
            let mid = stage[stage.len() / 2];
            if decide(mid, &mut interval, &mut trace)? == Verdict::Unknown {
                return Ok(bounded(interval, trace));
            }
        }
    }
    Ok(ChiResult { chromatic_index: Some(chi), circular: ChiValue::Exact(interval.hi()), trace })
}
