//! Append-only classification cache.
//!
//! One record per line: `code<TAB>class<TAB>value<TAB>crc32`, where class is
//! `1`, `2` or `?`, value is `p/q` or `(lo,hi]`, and the checksum (8 hex
//! digits) covers the first three fields. Files from parallel runs can be
//! merged by concatenation; the first record per code wins.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use super::{ClassificationRecord, SurveyError};
use crate::chi::ChiValue;
use crate::fraction::{Fraction, SearchInterval};

fn checksum(body: &str) -> String {
    format!("{:08x}", crc32fast::hash(body.as_bytes()))
}

fn value_text(v: &ChiValue) -> String {
    match v {
        ChiValue::Exact(f) => f.to_string(),
        ChiValue::Bounded(i) => i.to_string(),
    }
}

fn parse_value(s: &str) -> Option<ChiValue> {
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(']')) {
        let (lo, hi) = inner.split_once(',')?;
        let lo: Fraction = lo.parse().ok()?;
        let hi: Fraction = hi.parse().ok()?;
        return SearchInterval::new(lo, hi).ok().map(ChiValue::Bounded);
    }
    s.parse().ok().map(ChiValue::Exact)
}

pub fn format_line(rec: &ClassificationRecord) -> String {
    let class = rec.class.map_or("?".to_string(), |c| c.to_string());
    let body = format!("{}\t{}\t{}", rec.code, class, value_text(&rec.chi_c));
    format!("{body}\t{}", checksum(&body))
}

pub fn parse_line(line: &str) -> Option<ClassificationRecord> {
    let (body, crc) = line.rsplit_once('\t')?;
    if checksum(body) != crc {
        return None;
    }
    let mut fields = body.split('\t');
    let code = fields.next()?.to_string();
    let class = match fields.next()? {
        "?" => None,
        c => Some(c.parse().ok().filter(|&c: &u8| c == 1 || c == 2)?),
    };
    let chi_c = parse_value(fields.next()?)?;
    if fields.next().is_some() {
        return None;
    }
    Some(ClassificationRecord { code, class, chi_c, trace: Vec::new(), route: super::Route::Cached })
}

pub struct Cache {
    path: PathBuf,
    records: HashMap<String, ClassificationRecord>,
    writer: Option<File>,
}

impl Cache {
    /// Load `path` if it exists. A line failing its checksum is corruption.
    pub fn open(path: &Path) -> Result<Self, SurveyError> {
        let io = |e: std::io::Error| SurveyError::Io(format!("{}: {e}", path.display()));
        let mut records = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path).map_err(io)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line.map_err(io)?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec = parse_line(&line).ok_or(SurveyError::CacheCorrupt { line: i + 1 })?;
                records.entry(rec.code.clone()).or_insert(rec);
            }
        }
        Ok(Cache { path: path.to_path_buf(), records, writer: None })
    }

    pub fn get(&self, code: &str) -> Option<&ClassificationRecord> {
        self.records.get(code)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Append a record unless its code is already cached.
    pub fn append(&mut self, rec: &ClassificationRecord) -> Result<(), SurveyError> {
        if self.records.contains_key(&rec.code) {
            return Ok(());
        }
        let io = |e: std::io::Error| SurveyError::Io(e.to_string());
        if self.writer.is_none() {
            self.writer = Some(OpenOptions::new().create(true).append(true).open(&self.path).map_err(io)?);
        }
        let w = self.writer.as_mut().expect("opened");
        writeln!(w, "{}", format_line(rec)).map_err(io)?;
        w.flush().map_err(io)?;
        let mut stored = rec.clone();
        stored.trace.clear();
        stored.route = super::Route::Cached;
        self.records.insert(rec.code.clone(), stored);
        Ok(())
    }
}
