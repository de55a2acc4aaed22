//! Surveys over families of small graphs: generate or ingest a stream,
//! classify every graph, and aggregate per-order rows of class-2 counts
//! and circular chromatic index values.

mod cache;
mod generate;
mod ingest;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::sync::mpsc;

use rayon::prelude::*;
use thiserror::Error;

pub use cache::Cache;
pub use generate::{generate_graphs, MAX_MULTI_ORDER, MAX_SIMPLE_ORDER};
pub use ingest::{ingest_reader, ingest_stream, Ingested};

use crate::chi::{circular_chromatic_index, ChiError, ChiOptions, ChiValue, TraceEntry};
use crate::codec::{canonical_code, encode_auto, CodeFormat, CodecError};
use crate::colour::{heuristic_class1, make_decider, Decider};
use crate::fraction::Fraction;
use crate::graph::Multigraph;
use crate::mono::{forcing_filter, ForcingCatalog};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurveyError {
    #[error("order {n} is above the internal generator cap of {cap}; ingest a stream instead")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("invalid survey configuration: {0}")]
    Config(String),
    #[error("line {line}: {source}")]
    Malformed { line: usize, source: CodecError },
    #[error("cache line {line} fails its checksum")]
    CacheCorrupt { line: usize },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Chi(#[from] ChiError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Simple,
    Multigraph,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Simple => "simple",
            Family::Multigraph => "multigraph",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Generator,
    Stream { path: PathBuf, format: Option<CodeFormat>, strict: bool },
    /// Graphs already in memory, e.g. read from standard input.
    Graphs(Vec<Multigraph>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyConfig {
    pub family: Family,
    /// Orders to survey. For streams, empty means every order present.
    pub orders: Vec<usize>,
    pub delta: usize,
    pub regular: bool,
    /// Values at or below this may stay unresolved.
    pub threshold: Option<Fraction>,
    pub qmax: Option<u64>,
    pub budget_nodes: Option<u64>,
    pub budget_secs: Option<u64>,
    /// External solver command template; the native engine when `None`.
    pub solver: Option<String>,
    pub source: Source,
    pub cache: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
    /// Heuristic attempts before exact classification; 0 disables it.
    pub trials: u32,
    pub catalog: ForcingCatalog,
}

pub const DEFAULT_SEED: u64 = 0x5eed;

impl SurveyConfig {
    pub fn new(family: Family, delta: usize, orders: impl IntoIterator<Item = usize>) -> Self {
        SurveyConfig {
            family,
            orders: orders.into_iter().collect(),
            delta,
            regular: false,
            threshold: None,
            qmax: None,
            budget_nodes: None,
            budget_secs: None,
            solver: None,
            source: Source::Generator,
            cache: None,
            jobs: 0,
            seed: DEFAULT_SEED,
            trials: 20,
            catalog: ForcingCatalog::builtin(),
        }
    }

    pub fn validate(&self) -> Result<(), SurveyError> {
        if self.delta == 0 {
            return Err(SurveyError::Config("max degree must be at least 1".into()));
        }
        if self.orders.contains(&0) {
            return Err(SurveyError::Config("orders must be at least 1".into()));
        }
        if self.source == Source::Generator && self.orders.is_empty() {
            return Err(SurveyError::Config("the generator needs at least one order".into()));
        }
        if let Some(t) = self.threshold {
            let d = self.delta as u64;
            if t <= Fraction::integer(d) || t > Fraction::integer(d + 1) {
                return Err(SurveyError::Config(format!("threshold {t} is outside (Δ, Δ+1]")));
            }
        }
        Ok(())
    }

    pub fn decider(&self) -> Box<dyn Decider> {
        make_decider(self.solver.as_deref(), self.budget_nodes, self.budget_secs)
    }

    fn wants(&self, g: &Multigraph) -> bool {
        g.order() > 0
            && !g.has_loop()
            && g.max_degree() == self.delta
            && (!self.regular || g.min_degree() == self.delta)
            && (self.family == Family::Multigraph || g.is_simple())
            && (self.orders.is_empty() || self.orders.contains(&g.order()))
            && g.is_connected()
    }
}

/// How a record was settled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Heuristic,
    Forcing,
    Exact,
    Cached,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub code: String,
    /// 1 or 2; `None` when the budget ran out before `χ'` was known.
    pub class: Option<u8>,
    pub chi_c: ChiValue,
    pub trace: Vec<TraceEntry>,
    pub route: Route,
}

/// Canonical code where feasible, otherwise the code of the given labelling.
pub fn record_key(g: &Multigraph) -> String {
    canonical_code(g).unwrap_or_else(|_| encode_auto(&g.with_sorted_edges()).as_str().to_string())
}

pub fn classify(g: &Multigraph, config: &SurveyConfig) -> Result<ClassificationRecord, SurveyError> {
    classify_with(g, config, config.decider().as_ref())
}

fn classify_with(g: &Multigraph, config: &SurveyConfig, decider: &dyn Decider) -> Result<ClassificationRecord, SurveyError> {
    if g.has_loop() {
        return Err(ChiError::Loop.into());
    }
    let code = record_key(g);
    let delta = g.max_degree() as u64;
    if config.trials > 0 && heuristic_class1(g, config.trials, config.seed).is_some() {
        return Ok(ClassificationRecord {
            code,
            class: Some(1),
            chi_c: ChiValue::Exact(Fraction::integer(delta)),
            trace: Vec::new(),
            route: Route::Heuristic,
        });
    }
    // Vizing caps simple graphs at Δ + 1, so a forcer pins the value.
    if g.is_simple() && forcing_filter(g, &config.catalog).is_some() {
        return Ok(ClassificationRecord {
            code,
            class: Some(2),
            chi_c: ChiValue::Exact(Fraction::integer(delta + 1)),
            trace: Vec::new(),
            route: Route::Forcing,
        });
    }
    let opts = ChiOptions { threshold: config.threshold, qmax: config.qmax };
    let res = circular_chromatic_index(g, decider, opts)?;
    let class = match res.chromatic_index {
        Some(k) => Some(if k as u64 > delta { 2 } else { 1 }),
        None => match res.circular {
            ChiValue::Bounded(i) if i.lo() >= Fraction::integer(delta) => Some(2),
            _ => None,
        },
    };
    Ok(ClassificationRecord { code, class, chi_c: res.circular, trace: res.trace, route: Route::Exact })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub order: usize,
    pub count: usize,
    pub class2: usize,
    /// Exact class-2 values, ascending.
    pub values: Vec<Fraction>,
    /// Largest upper end among class-2 graphs left unresolved.
    pub unresolved: Option<Fraction>,
    /// Values appearing here for the first time in the survey.
    pub first: Vec<Fraction>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    /// Rows with at least one class-2 graph, by order.
    pub rows: Vec<SurveyRow>,
    /// Every classified graph with its order, sorted by order then code.
    pub records: Vec<(usize, ClassificationRecord)>,
    /// Stream graphs outside the surveyed family.
    pub skipped: usize,
    /// Records computed in this run rather than read from the cache.
    pub computed: usize,
}

fn collect_graphs(config: &SurveyConfig) -> Result<(Vec<Multigraph>, usize), SurveyError> {
    match &config.source {
        Source::Generator => {
            let mut all = Vec::new();
            for &n in &config.orders {
                all.extend(generate_graphs(config.family, n, config.delta, config.regular)?);
            }
            Ok((all, 0))
        }
        Source::Stream { path, format, strict } => {
            let got = ingest_stream(path, *format, *strict)?;
            let total = got.graphs.len() + got.skipped.len();
            let kept: Vec<Multigraph> = got.graphs.into_iter().filter(|g| config.wants(g)).collect();
            let skipped = total - kept.len();
            Ok((kept, skipped))
        }
        Source::Graphs(graphs) => {
            let kept: Vec<Multigraph> = graphs.iter().filter(|g| config.wants(g)).cloned().collect();
            Ok((kept.clone(), graphs.len() - kept.len()))
        }
    }
}

pub fn run_survey(config: &SurveyConfig) -> Result<SurveyReport, SurveyError> {
    config.validate()?;
    let (graphs, skipped) = collect_graphs(config)?;

    let mut keyed: BTreeMap<String, Multigraph> = BTreeMap::new();
    for g in graphs {
        keyed.entry(record_key(&g)).or_insert(g);
    }

    let mut cache = match &config.cache {
        Some(path) => Some(Cache::open(path)?),
        None => None,
    };
    let mut done: BTreeMap<String, ClassificationRecord> = BTreeMap::new();
    let mut todo = Vec::new();
    for (code, g) in &keyed {
        match cache.as_ref().and_then(|c| c.get(code)) {
            Some(rec) => {
                done.insert(code.clone(), rec.clone());
            }
            None => todo.push(g),
        }
    }
    let computed = todo.len();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| SurveyError::Config(e.to_string()))?;
    let (tx, rx) = mpsc::channel();
    let mut first_error = None;
    std::thread::scope(|s| {
        s.spawn(|| {
            pool.install(|| {
                todo.par_iter().for_each_with(tx, |tx, g| {
                    let decider = config.decider();
                    let _ = tx.send(classify_with(g, config, decider.as_ref()));
                });
            })
        });
        // Single writer: every record passes through here.
        for res in rx {
            let written = res.and_then(|rec| {
                if let Some(c) = cache.as_mut() {
                    c.append(&rec)?;
                }
                Ok(rec)
            });
            match written {
                Ok(rec) => {
                    done.insert(rec.code.clone(), rec);
                }
                Err(e) => {
                    first_error.get_or_insert(e);
                }
            }
        }
    });
    if let Some(e) = first_error {
        return Err(e);
    }

    let mut records: Vec<(usize, ClassificationRecord)> = keyed
        .iter()
        .map(|(code, g)| (g.order(), done.remove(code).expect("classified")))
        .collect();
    records.sort_by(|a, b| (a.0, &a.1.code).cmp(&(b.0, &b.1.code)));
    Ok(SurveyReport { rows: aggregate(&records), records, skipped, computed })
}

fn aggregate(records: &[(usize, ClassificationRecord)]) -> Vec<SurveyRow> {
    let mut by_order: BTreeMap<usize, Vec<&ClassificationRecord>> = BTreeMap::new();
    for (n, r) in records {
        by_order.entry(*n).or_default().push(r);
    }
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for (order, recs) in by_order {
        let class2: Vec<_> = recs.iter().filter(|r| r.class == Some(2)).collect();
        if class2.is_empty() {
            continue;
        }
        let values: BTreeSet<Fraction> = class2.iter().filter_map(|r| r.chi_c.exact()).collect();
        let unresolved = class2
            .iter()
            .filter(|r| r.chi_c.exact().is_none())
            .map(|r| r.chi_c.upper())
            .max();
        let first = values.iter().copied().filter(|v| !seen.contains(v)).collect();
        seen.extend(values.iter().copied());
        rows.push(SurveyRow {
            order,
            count: recs.len(),
            class2: class2.len(),
            values: values.into_iter().collect(),
            unresolved,
            first,
        });
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
}

fn values_cell(row: &SurveyRow, sep: &str) -> String {
    let listed: Vec<String> = row.values.iter().map(|v| v.to_string()).collect();
    let mut cell = String::new();
    if let Some(u) = row.unresolved {
        cell.push_str(&format!("≤ {u}"));
        if !listed.is_empty() {
            cell.push_str("; ");
        }
    }
    cell.push_str(&listed.join(sep));
    cell
}

pub fn emit_table(rows: &[SurveyRow], format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str("order,count,class2,values\n");
            for r in rows {
                out.push_str(&format!("{},{},{},{}\n", r.order, r.count, r.class2, values_cell(r, " ")));
            }
        }
        TableFormat::Markdown => {
            out.push_str("| Order | Graphs | With χ' > Δ | Values of χ'_c |\n");
            out.push_str("|---|---|---|---|\n");
            for r in rows {
                out.push_str(&format!("| {} | {} | {} | {} |\n", r.order, r.count, r.class2, values_cell(r, ", ")));
            }
        }
    }
    out
}
