use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{contiguous, is_velo_valid, updown_of};
use crate::error::{Error, Result};
use crate::exactnum::{cmp_sqrt_sum_int, cmp_sqrt_sum_u64, Rational};
use crate::formulas::{collinear_two_vantage_bound, velo_bound};
use crate::geometry::{integer_coords, PointConfig};
use crate::par::Exec;

/// Sampler parameters. Vantage coordinates live on a lattice with
/// `2^resolution` steps across the bounding box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerSpec {
    pub resolution: u32,
    pub block: u64,
}

impl Default for SamplerSpec {
    fn default() -> Self {
        SamplerSpec {
            resolution: 16,
            block: 4096,
        }
    }
}

/// Distinct strict orderings seen over a sampling run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleRun {
    pub orderings: BTreeSet<Vec<usize>>,
    pub samples: u64,
    pub ties_skipped: u64,
}

impl SampleRun {
    pub fn distinct(&self) -> usize {
        self.orderings.len()
    }
}

const COORD_LIMIT: i128 = 1 << 60;

struct Frame {
    pts: Vec<[i128; 2]>,
    lo: [i128; 2],
    extent: i128,
    r: i128,
}

impl Frame {
    fn new(s: &PointConfig<Rational>, resolution: u32) -> Result<Frame> {
        let coords = integer_coords(s.points()).expect("rational configuration");
        let r: i128 = 1 << resolution;
        let to = |x: &BigInt| x.to_i128().filter(|v| v.abs() < COORD_LIMIT / (4 * r));
        let mut pts = Vec::with_capacity(coords.len());
        for p in &coords {
            match (to(&p[0]), to(&p[1])) {
                (Some(x), Some(y)) => pts.push([x, y]),
                _ => return Err(Error::InvalidParameter("coordinates too large for the sampler".into())),
            }
        }
        let lo = [0, 1].map(|k| pts.iter().map(|p| p[k]).min().unwrap_or(0));
        let hi = [0, 1].map(|k| pts.iter().map(|p| p[k]).max().unwrap_or(0));
        let extent = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1);
        let pts = pts.iter().map(|p| [p[0] * r, p[1] * r]).collect();
        Ok(Frame { pts, lo, extent, r })
    }

    /// Lattice offset `u ∈ [−R, 2R]` to a vantage coordinate: the box is the
    /// bounding square widened to three times its size.
    fn place(&self, k: usize, u: i128) -> i128 {
        self.lo[k] * self.r + u * self.extent
    }

    fn ordering(&self, v: &[i128; 4]) -> Option<Vec<usize>> {
        let d: Vec<(i128, i128)> = self
            .pts
            .iter()
            .map(|p| {
                let d = |x: i128, y: i128| (p[0] - x).pow(2) + (p[1] - y).pow(2);
                (d(v[0], v[1]), d(v[2], v[3]))
            })
            .collect();
        let small = d.iter().all(|&(a, b)| a <= u64::MAX as i128 && b <= u64::MAX as i128);
        let cmp = |i: usize, j: usize| -> i8 {
            let (a, b, c, e) = (d[i].0, d[i].1, d[j].0, d[j].1);
            if small {
                cmp_sqrt_sum_u64(a as u64, b as u64, c as u64, e as u64)
            } else {
                let z = BigInt::from;
                cmp_sqrt_sum_int(&z(a), &z(b), &z(c), &z(e))
            }
        };
        let mut idx: Vec<usize> = (0..self.pts.len()).collect();
        idx.sort_by(|&i, &j| cmp(i, j).cmp(&0));
        if idx.windows(2).any(|w| cmp(w[0], w[1]) == 0) {
            return None;
        }
        Some(idx)
    }
}

/// Samples vantage pairs for a planar configuration and collects the strict
/// orderings they induce.
///
/// Samples are split into fixed blocks; block `b` draws from stream `b` of a
/// generator seeded with `seed`, so the result depends only on
/// `(seed, budget)` and a larger budget sees a superset. Within a block a
/// sample is a coarse grid pair, a uniform pair, or a small perturbation of a
/// pair that found a new ordering earlier in the block.
pub fn sample_two_vantage_orderings(
    s: &PointConfig<Rational>,
    spec: &SamplerSpec,
    budget: u64,
    seed: u64,
    exec: Exec,
) -> Result<SampleRun> {
    if s.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.dim(),
        });
    }
    if spec.block == 0 || spec.resolution == 0 || spec.resolution > 24 {
        return Err(Error::InvalidParameter("sampler block and resolution must be in range".into()));
    }
    let frame = Frame::new(s, spec.resolution)?;
    let blocks = budget.div_ceil(spec.block) as usize;
    let per_block = exec.map_range(0..blocks, |b| {
        let len = spec.block.min(budget - b as u64 * spec.block);
        run_block(&frame, spec, seed, b as u64, len)
    });
    let mut run = SampleRun {
        orderings: BTreeSet::new(),
        samples: budget,
        ties_skipped: 0,
    };
    for (seen, ties) in per_block {
        run.orderings.extend(seen);
        run.ties_skipped += ties;
    }
    Ok(run)
}

fn run_block(frame: &Frame, spec: &SamplerSpec, seed: u64, block: u64, len: u64) -> (HashSet<Vec<usize>>, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let r = frame.r;
    let mut seen = HashSet::new();
    let mut found: Vec<[i128; 4]> = Vec::new();
    let mut ties = 0;
    for _ in 0..len {
        let mode = rng.gen_range(0..4);
        let v: [i128; 4] = if mode >= 2 && !found.is_empty() {
            let base = found[rng.gen_range(0..found.len())];
            let shift = rng.gen_range(1..=spec.resolution);
            let step = ((frame.extent * r) >> shift).max(1);
            let mask = rng.gen_range(1..4);
            let mut v = base;
            for (k, c) in v.iter_mut().enumerate() {
                if mask & (1 << (k / 2)) != 0 {
                    *c += rng.gen_range(-step..=step);
                }
            }
            v
        } else if mode == 0 {
            let g = r / 8;
            [0, 1, 0, 1].map(|k| frame.place(k, rng.gen_range(-8..=16) * g))
        } else {
            [0, 1, 0, 1].map(|k| frame.place(k, rng.gen_range(-r..=2 * r)))
        };
        match frame.ordering(&v) {
            None => ties += 1,
            Some(o) => {
                if seen.insert(o) {
                    found.push(v);
                }
            }
        }
    }
    (seen, ties)
}

/// Rank of every point along the common line, or `None` when the points are
/// not collinear.
pub fn line_positions(s: &PointConfig<Rational>) -> Option<Vec<usize>> {
    if s.dim() != 2 {
        return None;
    }
    let p = s.points();
    if p.len() >= 2 {
        let (a, b) = (&p[0], &p[1]);
        let collinear = p
            .iter()
            .all(|q| (&b[0] - &a[0]) * (&q[1] - &a[1]) == (&b[1] - &a[1]) * (&q[0] - &a[0]));
        if !collinear {
            return None;
        }
    }
    let mut idx: Vec<usize> = (0..p.len()).collect();
    idx.sort_by(|&i, &j| p[i].cmp(&p[j]));
    let mut pos = vec![0; p.len()];
    for (rank, i) in idx.into_iter().enumerate() {
        pos[i] = rank;
    }
    Some(pos)
}

/// Structure checks on orderings sampled from a collinear configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollinearReport {
    pub n: usize,
    pub distinct: usize,
    pub equally_spaced: bool,
    pub contiguous_bound: BigInt,
    pub velo_bound: BigInt,
    pub violations: Vec<String>,
}

/// Every ordering must be contiguous along the line; for equally spaced
/// points its up-down word must also be valid. Returns `None` for
/// non-collinear configurations.
pub fn collinear_checks(s: &PointConfig<Rational>, run: &SampleRun) -> Option<CollinearReport> {
    let pos = line_positions(s)?;
    let n = s.len();
    let mut by_pos = vec![0; n];
    for (i, &k) in pos.iter().enumerate() {
        by_pos[k] = i;
    }
    let gaps: Vec<[Rational; 2]> = by_pos
        .windows(2)
        .map(|w| [0, 1].map(|k| &s.point(w[1])[k] - &s.point(w[0])[k]))
        .collect();
    let equally_spaced = gaps.windows(2).all(|w| w[0] == w[1]);
    let mut violations = Vec::new();
    for o in &run.orderings {
        let seq: Vec<usize> = o.iter().map(|&i| pos[i]).collect();
        let label = seq.iter().map(|k| (k + 1).to_string()).collect::<Vec<_>>().join(" ");
        if !contiguous(&seq) {
            violations.push(format!("not contiguous: {label}"));
        }
        if equally_spaced && !is_velo_valid(&updown_of(&seq)) {
            violations.push(format!("invalid up-down word {}: {label}", updown_of(&seq)));
        }
    }
    let distinct = run.distinct();
    let contiguous_bound = collinear_two_vantage_bound(n as u64);
    let velo = velo_bound(n as u64);
    if BigInt::from(distinct) > contiguous_bound {
        violations.push(format!("{distinct} orderings exceed 2^(n-1)"));
    }
    if equally_spaced && BigInt::from(distinct) > velo {
        violations.push(format!("{distinct} orderings exceed c_n"));
    }
    Some(CollinearReport {
        n,
        distinct,
        equally_spaced,
        contiguous_bound,
        velo_bound: velo,
        violations,
    })
}
