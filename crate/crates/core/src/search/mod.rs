//! Seeded search for achievable planar region counts, with witnesses.

mod store;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement2d::a_s;
use crate::constructions::{
    circle_gadget, collinear_embedding, equally_spaced_line, free_config, gap_config_1d, near_max_config,
    parallel_lines_gadget, FreeSpace,
};
use crate::error::{Error, Result};
use crate::exactnum::{rat, Rational};
use crate::formulas::{max_orderings, min_orderings};
use crate::geometry::PointConfig;
use crate::par::Exec;

pub use store::{
    append_to_store, load_store, report_from_store, verify_witness_store, Mismatch, StoreRecord, StoreReport,
};

/// Where candidate configurations come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Random points with small rational coordinates.
    Uniform,
    /// Generated configurations only: collinear sets, gadgets, free sums.
    Structured,
    #[default]
    Mixed,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Uniform => "uniform",
            Strategy::Structured => "structured",
            Strategy::Mixed => "mixed",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Strategy::Uniform, Strategy::Structured, Strategy::Mixed]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown strategy {s:?}")))
    }
}

/// Sampling box: coordinates `p/q` with `|p/q| ≤ span` and `q ≤ max_den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchParams {
    pub span: i64,
    pub max_den: i64,
    pub block: u64,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            span: 16,
            max_den: 64,
            block: 1024,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub config: PointConfig<Rational>,
    pub source: String,
}

#[derive(Clone, Debug)]
pub struct SearchRun {
    pub n: usize,
    pub params: SearchParams,
    pub budget: u64,
    pub seed: u64,
    pub strategy: Strategy,
    /// Region count → first witness found.
    pub achieved: BTreeMap<u64, Witness>,
    pub structured_candidates: usize,
    pub elapsed_ms: u128,
}

/// The interval `[2n − 2, M(n, 2)]` of possible counts.
pub fn count_range(n: usize) -> Result<(u64, u64)> {
    let lo = min_orderings(n as u64)?;
    let hi = max_orderings(n as u64, 2);
    match (lo.to_u64(), hi.to_u64()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::InvalidParameter(format!("n = {n} is too large"))),
    }
}

fn structured(n: usize, seed: u64) -> Vec<(String, PointConfig<Rational>)> {
    let mut out = Vec::new();
    let mut push = |label: String, c: Result<PointConfig<Rational>>| {
        if let Ok(c) = c {
            out.push((label, c));
        }
    };
    push(
        "equally-spaced".into(),
        equally_spaced_line(n).and_then(|c| collinear_embedding(&c, seed)),
    );
    for k in 2 * n - 2..=(n * n - n + 2) / 2 {
        push(
            format!("gap1d k={k}"),
            gap_config_1d(n, k).and_then(|c| collinear_embedding(&c, seed)),
        );
    }
    for k in 0..=n / 2 {
        push(format!("near-max k={k}"), near_max_config(n, k, seed));
    }
    for k in 2..=n {
        push(format!("circle k={k}"), circle_gadget(n, k, seed));
    }
    for k in 2..=n {
        for l in 1..=n / k {
            push(
                format!("parallel-lines m={} k={k} l={l}", n - k * l),
                parallel_lines_gadget(n - k * l, k, l, seed),
            );
        }
    }
    push("free".into(), free_config(n, seed, FreeSpace::Plane));
    out
}

fn random_config(rng: &mut ChaCha8Rng, n: usize, p: &SearchParams) -> Option<PointConfig<Rational>> {
    // Small integer grids give many coincidences; finer ones approach the
    // generic case.
    let span = [1, 2, 3, 4, 6, 8, p.span][rng.gen_range(0..7)].min(p.span).max(1);
    let den = if rng.gen_bool(0.25) { rng.gen_range(1..=p.max_den) } else { 1 };
    let lim = span * den;
    let pts = (0..n)
        .map(|_| [0, 1].map(|_| rat(rng.gen_range(-lim..=lim), den)))
        .collect();
    PointConfig::plane(pts).ok()
}

type Found = BTreeMap<u64, (u64, Witness)>;

fn record(found: &mut Found, idx: u64, config: PointConfig<Rational>, source: String) {
    let k = a_s(&config).regions_total;
    match found.get(&k) {
        Some((j, _)) if *j <= idx => {}
        _ => {
            found.insert(k, (idx, Witness { config, source }));
        }
    }
}

/// Searches for planar `n`-point configurations with as many different
/// region counts as possible. The result depends only on the arguments:
/// samples are drawn in fixed blocks from per-block streams, and when two
/// samples give the same count the earlier one is kept.
pub fn search_achievable(
    n: usize,
    budget: u64,
    seed: u64,
    strategy: Strategy,
    params: &SearchParams,
    exec: Exec,
) -> Result<SearchRun> {
    if n < 2 {
        return Err(Error::InvalidParameter("search needs n ≥ 2".into()));
    }
    if params.span < 1 || params.max_den < 1 || params.block == 0 {
        return Err(Error::InvalidParameter("span, denominator bound and block must be positive".into()));
    }
    let start = Instant::now();
    let (lo, hi) = count_range(n)?;
    let cands = match strategy {
        Strategy::Uniform => Vec::new(),
        _ => structured(n, seed),
    };
    let ncand = cands.len() as u64;
    let mut found: Found = BTreeMap::new();
    let counted = exec.map(&cands, |(label, c)| (a_s(c).regions_total, label.clone(), c.clone()));
    for (i, (_, label, c)) in counted.into_iter().enumerate() {
        record(&mut found, i as u64, c, label);
    }
    let random = if strategy == Strategy::Structured { 0 } else { budget };
    let blocks = random.div_ceil(params.block) as usize;
    let parts = exec.map_range(0..blocks, |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(b as u64 + 1);
        let first = b as u64 * params.block;
        let mut local: Found = BTreeMap::new();
        for i in first..(first + params.block).min(random) {
            if let Some(c) = random_config(&mut rng, n, params) {
                record(&mut local, ncand + i, c, format!("uniform #{i}"));
            }
        }
        local
    });
    for part in parts {
        for (k, (i, w)) in part {
            if found.get(&k).is_none_or(|(j, _)| i < *j) {
                found.insert(k, (i, w));
            }
        }
    }
    let achieved: BTreeMap<u64, Witness> = found.into_iter().map(|(k, (_, w))| (k, w)).collect();
    debug_assert!(achieved.keys().all(|&k| lo <= k && k <= hi));
    Ok(SearchRun {
        n,
        params: *params,
        budget,
        seed,
        strategy,
        achieved,
        structured_candidates: cands.len(),
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Minimum, maximum and share of the possible interval that was found.
#[derive(Clone, Debug, PartialEq)]
pub struct Coverage {
    pub n: usize,
    pub min: u64,
    pub max: u64,
    pub found: usize,
    pub interval: u64,
    pub fraction: f64,
}

impl Coverage {
    /// Percentage truncated to two decimals.
    pub fn percentage(&self) -> String {
        let hundredths = (self.found as u128 * 10_000) / self.interval as u128;
        format!("{}.{:02}%", hundredths / 100, hundredths % 100)
    }
}

pub fn coverage(n: usize, achieved: impl IntoIterator<Item = u64>) -> Result<Option<Coverage>> {
    let keys: Vec<u64> = achieved.into_iter().collect();
    let (lo, hi) = count_range(n)?;
    let (Some(&min), Some(&max)) = (keys.iter().min(), keys.iter().max()) else {
        return Ok(None);
    };
    let interval = hi - lo + 1;
    Ok(Some(Coverage {
        n,
        min,
        max,
        found: keys.len(),
        interval,
        fraction: keys.len() as f64 / interval as f64,
    }))
}

/// Coverage of a run; `None` when nothing was found.
pub fn coverage_report(run: &SearchRun) -> Option<Coverage> {
    coverage(run.n, run.achieved.keys().copied()).ok().flatten()
}

/// Counts of `[2n − 2, M(n, 2)]` absent from the run.
pub fn missing(run: &SearchRun) -> Vec<u64> {
    let Ok((lo, hi)) = count_range(run.n) else { return Vec::new() };
    (lo..=hi).filter(|k| !run.achieved.contains_key(k)).collect()
}

/// Re-counts every witness of a run; returns the keys that disagree.
pub fn reverify(run: &SearchRun) -> Vec<u64> {
    run.achieved
        .iter()
        .filter(|(k, w)| a_s(&w.config).regions_total != **k || w.config.len() != run.n)
        .map(|(k, _)| *k)
        .collect()
}

pub(crate) fn bound_check(n: usize, k: u64) -> bool {
    count_range(n).is_ok_and(|(lo, hi)| lo <= k && k <= hi)
}
