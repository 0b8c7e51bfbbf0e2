//! Line-delimited JSON witness store: one record per line.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{bound_check, coverage, SearchRun};
use crate::arrangement2d::a_s;
use crate::error::{Error, Result};
use crate::geometry::{parse_config, AnyConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StoreRecord {
    pub n: usize,
    pub k: u64,
    pub seed: u64,
    pub strategy: String,
    pub source: String,
    /// The configuration in the text format.
    pub config: String,
}

/// Appends one record per achieved count, in a single write.
pub fn append_to_store(path: &Path, run: &SearchRun) -> Result<usize> {
    let mut buf = String::new();
    for (&k, w) in &run.achieved {
        let rec = StoreRecord {
            n: run.n,
            k,
            seed: run.seed,
            strategy: run.strategy.to_string(),
            source: w.source.clone(),
            config: w.config.to_text(),
        };
        let line = serde_json::to_string(&rec).map_err(|e| Error::Io(e.to_string()))?;
        let _ = writeln!(buf, "{line}");
    }
    let mut f = fs::OpenOptions::new().create(true).append(true).open(path)?;
    f.write_all(buf.as_bytes())?;
    Ok(run.achieved.len())
}

pub fn load_store(path: &Path) -> Result<Vec<StoreRecord>> {
    let text = fs::read_to_string(path)?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| serde_json::from_str(l).map_err(|e| Error::Parse(format!("store line {}: {e}", i + 1))))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// 1-based record number.
    pub record: usize,
    pub n: usize,
    pub k: u64,
    pub problem: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoreReport {
    pub records: usize,
    pub mismatches: Vec<Mismatch>,
}

fn check(rec: &StoreRecord) -> std::result::Result<(), String> {
    let c = match parse_config(&rec.config).map_err(|e| e.to_string())? {
        AnyConfig::Rational(c) if c.dim() == 2 => c,
        _ => return Err("not a rational planar configuration".into()),
    };
    if c.len() != rec.n {
        return Err(format!("has {} points", c.len()));
    }
    let got = a_s(&c).regions_total;
    if got != rec.k {
        return Err(format!("counts {got}"));
    }
    if !bound_check(rec.n, rec.k) {
        return Err("count outside [2n-2, M(n,2)]".into());
    }
    Ok(())
}

/// Recounts every stored witness.
pub fn verify_witness_store(path: &Path) -> Result<StoreReport> {
    let records = load_store(path)?;
    let mismatches = records
        .iter()
        .enumerate()
        .filter_map(|(i, r)| {
            check(r).err().map(|problem| Mismatch {
                record: i + 1,
                n: r.n,
                k: r.k,
                problem,
            })
        })
        .collect();
    Ok(StoreReport {
        records: records.len(),
        mismatches,
    })
}

/// Per-n minimum, maximum and coverage over every record in the store, as
/// aligned text or comma-separated values.
pub fn report_from_store(path: &Path, csv: bool) -> Result<String> {
    let mut by_n: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for r in load_store(path)? {
        by_n.entry(r.n).or_default().push(r.k);
    }
    let mut rows = vec![["n", "min", "max", "found", "interval", "coverage"].map(String::from)];
    for (n, mut ks) in by_n {
        ks.sort_unstable();
        ks.dedup();
        if let Some(c) = coverage(n, ks)? {
            rows.push([
                n.to_string(),
                c.min.to_string(),
                c.max.to_string(),
                c.found.to_string(),
                c.interval.to_string(),
                c.percentage(),
            ]);
        }
    }
    let mut out = String::new();
    if csv {
        for r in rows {
            let _ = writeln!(out, "{}", r.join(","));
        }
        return Ok(out);
    }
    let widths: Vec<usize> = (0..6).map(|k| rows.iter().map(|r| r[k].len()).max().unwrap_or(0)).collect();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  "));
    }
    Ok(out)
}
