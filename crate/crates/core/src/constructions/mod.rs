//! Generators for the named configurations: gap-filling sets on the line,
//! free placements and free sums, the planar gadgets, concyclic sets, the
//! Platonic solids and doubled spherical sets.
//!
//! Randomized generators draw from a seeded ChaCha stream and resample until
//! the exact count hits its target, so the output is a function of
//! `(parameters, seed)` and genericity is certified by the count itself.

mod solids;

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement2d::a_s;
use crate::error::{Error, Result};
use crate::exactnum::{int, rat, Rational};
use crate::formulas::{
    circle_gadget_count, free_sum_increment, max_orderings, near_max_count, parallel_gadget_poly,
    sphere_max, trapezoid_count,
};
use crate::geometry::{distinct_midpoints_1d, PointConfig, ScalarField};
use crate::sphere::lift::random_sphere_point;
use crate::sphere::SphereConfig;

pub use solids::{concyclic_equal, concyclic_equal_sphere, doubled, platonic, Solid};

/// Resample limit of every randomized generator.
pub const DEFAULT_ATTEMPTS: usize = 100;

const BOX: i64 = 1 << 12;

type P2 = [Rational; 2];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_point(rng: &mut ChaCha8Rng) -> P2 {
    [int(rng.gen_range(-BOX..=BOX)), int(rng.gen_range(-BOX..=BOX))]
}

fn hits(pts: &[P2], target: &BigInt) -> bool {
    PointConfig::plane(pts.to_vec())
        .ok()
        .is_some_and(|c| BigInt::from(a_s(&c).regions_total) == *target)
}

fn resample(attempts: usize, target: &BigInt, mut draw: impl FnMut() -> Vec<P2>) -> Result<PointConfig<Rational>> {
    for _ in 0..attempts {
        let pts = draw();
        if hits(&pts, target) {
            return PointConfig::plane(pts);
        }
    }
    Err(Error::BudgetExhausted(attempts))
}

fn planar(s: &PointConfig<Rational>) -> Result<Vec<P2>> {
    if s.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.dim(),
        });
    }
    Ok(s.points().iter().map(|p| [p[0].clone(), p[1].clone()]).collect())
}

/// `{1, 2, …, n}`.
pub fn equally_spaced_line(n: usize) -> Result<PointConfig<Rational>> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    PointConfig::line((1..=n as i64).map(int).collect())
}

/// A 1-D configuration of `n` points whose midpoints cut the line into
/// exactly `k` intervals, for `2n − 2 ≤ k ≤ (n² − n + 2)/2`.
///
/// Round `m ≥ 1` with parameter `t ∈ [1, n − m − 2]` uses
/// `{1, …, n − m, n − m + 1 + t, 2^(n−m+2), …, 2^n}`; consecutive rounds
/// cover consecutive ranges starting at `2n − 1`.
pub fn gap_config_1d(n: usize, k: usize) -> Result<PointConfig<Rational>> {
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let lo = 2 * n - 2;
    let hi = (n * n - n + 2) / 2;
    if k < lo || k > hi {
        return Err(Error::InvalidParameter(format!("k={k} outside [{lo}, {hi}] for n={n}")));
    }
    let mut round = None;
    let mut m = 1;
    while k > lo && n >= m + 3 {
        let start = (m + 1) * n - (m * m + 3 * m - 2) / 2;
        if (start..=start + n - m - 3).contains(&k) {
            round = Some((m, k - start + 1));
            break;
        }
        m += 1;
    }
    let values: Vec<BigInt> = match round {
        _ if k == lo => (1..=n).map(BigInt::from).collect(),
        Some((m, t)) => {
            let mut v: Vec<BigInt> = (1..=n - m).map(BigInt::from).collect();
            v.push(BigInt::from(n - m + 1 + t));
            v.extend((n - m + 2..=n).map(|e| BigInt::from(1u8) << e));
            v
        }
        None => (0..n).map(|e| BigInt::from(1u8) << e).collect(),
    };
    let s = PointConfig::line(values.into_iter().map(Rational::from_integer).collect())?;
    let got = distinct_midpoints_1d(&s)? + 1;
    if got != k {
        return Err(Error::Hypothesis(format!("gap construction gave {got} intervals, wanted {k}")));
    }
    Ok(s)
}

/// Places a 1-D configuration on a random line in the plane.
pub fn collinear_embedding(s: &PointConfig<Rational>, seed: u64) -> Result<PointConfig<Rational>> {
    if s.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: s.dim(),
        });
    }
    let mut r = rng(seed);
    let [ox, oy] = random_point(&mut r);
    let (mut ux, mut uy) = (0, 0);
    while ux == 0 && uy == 0 {
        ux = r.gen_range(-9..=9);
        uy = r.gen_range(-9..=9);
    }
    PointConfig::plane(
        s.points()
            .iter()
            .map(|p| [&ox + &p[0] * int(ux), &oy + &p[0] * int(uy)])
            .collect(),
    )
}

/// Where to place a free configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeSpace {
    Plane,
    /// The unit sphere, inside the open hemisphere `z < 0`.
    Sphere,
}

/// A random configuration attaining the maximum count for its space.
pub fn free_config(n: usize, seed: u64, space: FreeSpace) -> Result<PointConfig<Rational>> {
    free_config_with(n, seed, space, DEFAULT_ATTEMPTS)
}

pub fn free_config_with(n: usize, seed: u64, space: FreeSpace, attempts: usize) -> Result<PointConfig<Rational>> {
    if n < 1 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let mut r = rng(seed);
    match space {
        FreeSpace::Plane => resample(attempts, &max_orderings(n as u64, 2), || {
            (0..n).map(|_| random_point(&mut r)).collect()
        }),
        FreeSpace::Sphere => {
            let target = sphere_max(n as u64);
            for _ in 0..attempts {
                let pts = (0..n).map(|_| random_sphere_point(&mut r, 1 << 10)).collect();
                if let Ok(c) = PointConfig::sphere(ScalarField::Rational, pts) {
                    let got = crate::sphere::count_sphere(&c)?.regions_total;
                    if BigInt::from(got) == target {
                        return Ok(c);
                    }
                }
            }
            Err(Error::BudgetExhausted(attempts))
        }
    }
}

/// A random rational rotation from a Pythagorean triple, as (cos, sin).
fn random_rotation(r: &mut ChaCha8Rng) -> (Rational, Rational) {
    let p: i64 = r.gen_range(2..40);
    let q: i64 = r.gen_range(1..p);
    let h = p * p + q * q;
    let (mut c, mut s) = (rat(p * p - q * q, h), rat(2 * p * q, h));
    if r.gen() {
        std::mem::swap(&mut c, &mut s);
    }
    if r.gen() {
        c = -c;
    }
    if r.gen() {
        s = -s;
    }
    (c, s)
}

/// `S ∪ g(T)` for one random rigid motion `g`: a rational rotation followed
/// by a translation that clears both bounding boxes.
pub fn free_sum_once(s: &PointConfig<Rational>, t: &PointConfig<Rational>, seed: u64) -> Result<PointConfig<Rational>> {
    let mut pts = planar(s)?;
    let tp = planar(t)?;
    let mut r = rng(seed);
    let (c, sn) = random_rotation(&mut r);
    let extent = pts
        .iter()
        .chain(&tp)
        .flat_map(|p| p.iter().map(|x| x.abs()))
        .max()
        .unwrap_or_else(|| int(1));
    let reach = Rational::from_integer(extent.ceil().to_integer() + 1) * int(4);
    let dx = &reach * (int(1) + rat(r.gen_range(0..BOX), BOX));
    let dy = &reach * rat(r.gen_range(-BOX..=BOX), BOX);
    for p in tp {
        let x = &c * &p[0] - &sn * &p[1] + &dx;
        let y = &sn * &p[0] + &c * &p[1] + &dy;
        pts.push([x, y]);
    }
    PointConfig::plane(pts)
}

/// Expected count of a free sum: `a_S + a_T + g(|S|, |T|)`.
pub fn free_sum_target(s: &PointConfig<Rational>, t: &PointConfig<Rational>) -> BigInt {
    BigInt::from(a_s(s).regions_total)
        + BigInt::from(a_s(t).regions_total)
        + free_sum_increment(s.len() as u64, t.len() as u64)
}

/// Free sum, resampling the rigid motion until the merged count equals
/// [`free_sum_target`].
pub fn free_sum(s: &PointConfig<Rational>, t: &PointConfig<Rational>, seed: u64) -> Result<PointConfig<Rational>> {
    let target = free_sum_target(s, t);
    let mut r = rng(seed);
    for _ in 0..DEFAULT_ATTEMPTS {
        let c = free_sum_once(s, t, r.gen())?;
        if BigInt::from(a_s(&c).regions_total) == target {
            return Ok(c);
        }
    }
    Err(Error::BudgetExhausted(DEFAULT_ATTEMPTS))
}

/// `p + λ (b − a)` for a random nonzero rational `λ`.
fn along(r: &mut ChaCha8Rng, p: &P2, a: &P2, b: &P2) -> P2 {
    let mut num = 0;
    while num == 0 {
        num = r.gen_range(-40..=40);
    }
    let l = rat(num, r.gen_range(1..=7));
    [&p[0] + &l * (&b[0] - &a[0]), &p[1] + &l * (&b[1] - &a[1])]
}

/// `2k` points with `P₁P_{j+1} ∥ P_{2j+1}P_{2j+2}` for `j = 1..k−1` and
/// nothing else special; the count is `M(2k) − k + 1`.
pub fn trapezoid_gadget(k: usize, seed: u64) -> Result<PointConfig<Rational>> {
    if k < 2 {
        return Err(Error::InvalidParameter("k must be at least 2".into()));
    }
    let mut r = rng(seed);
    resample(DEFAULT_ATTEMPTS, &trapezoid_count(k as u64), || {
        let mut pts: Vec<P2> = Vec::with_capacity(2 * k);
        for i in 1..=2 * k {
            let p = if i % 2 == 0 && i >= 4 {
                let j = i / 2 - 1;
                along(&mut r, &pts[i - 2], &pts[0], &pts[j])
            } else {
                random_point(&mut r)
            };
            pts.push(p);
        }
        pts
    })
}

/// `n` points with count `M(n) − k`, `0 ≤ k ≤ ⌊n/2⌋`.
///
/// When `2k + 2 ≤ n` this is a trapezoid gadget on `2k + 2` points freely
/// summed with free points. Otherwise a chain is used: `P₁, P₂, P₃` free and
/// `P_{d−1}P_d ∥ P₁P_{d−2}` for the next `k` points (a parallelogram when
/// `n = 4`, `k = 2`).
pub fn near_max_config(n: usize, k: usize, seed: u64) -> Result<PointConfig<Rational>> {
    if k > n / 2 {
        return Err(Error::InvalidParameter(format!("k={k} exceeds n/2 for n={n}")));
    }
    if k == 0 {
        return free_config(n, seed, FreeSpace::Plane);
    }
    let mut r = rng(seed);
    if 2 * k + 2 <= n {
        let gadget = trapezoid_gadget(k + 1, r.gen())?;
        if n == 2 * k + 2 {
            return Ok(gadget);
        }
        let rest = free_config(n - 2 * k - 2, r.gen(), FreeSpace::Plane)?;
        return free_sum(&gadget, &rest, r.gen());
    }
    let target = near_max_count(n as u64, k as u64);
    resample(DEFAULT_ATTEMPTS, &target, || {
        let mut pts: Vec<P2> = (0..3).map(|_| random_point(&mut r)).collect();
        if n == 4 && k == 2 {
            pts.push([&pts[0][0] + &pts[2][0] - &pts[1][0], &pts[0][1] + &pts[2][1] - &pts[1][1]]);
            return pts;
        }
        for d in 4..=n {
            let p = if d - 3 <= k {
                along(&mut r, &pts[d - 2], &pts[0], &pts[d - 3])
            } else {
                random_point(&mut r)
            };
            pts.push(p);
        }
        pts
    })
}

/// `m` free points and `k·l` points spread over `l` pairwise non-parallel
/// lines, `k` per line, counted by the parallel-lines polynomial.
pub fn parallel_lines_gadget(m: usize, k: usize, l: usize, seed: u64) -> Result<PointConfig<Rational>> {
    if k < 2 || l < 1 {
        return Err(Error::InvalidParameter("need k >= 2 and l >= 1".into()));
    }
    let target = parallel_gadget_poly(m as u64, k as u64, l as u64);
    let mut r = rng(seed);
    resample(DEFAULT_ATTEMPTS, &target, || {
        let mut pts = Vec::with_capacity(m + k * l);
        for _ in 0..l {
            let base = random_point(&mut r);
            let (mut dx, mut dy) = (0i64, 0i64);
            while dx == 0 && dy == 0 {
                dx = r.gen_range(-30..=30);
                dy = r.gen_range(-30..=30);
            }
            for _ in 0..k {
                let s = int(r.gen_range(-BOX / 8..=BOX / 8));
                pts.push([&base[0] + &s * int(dx), &base[1] + &s * int(dy)]);
            }
        }
        pts.extend((0..m).map(|_| random_point(&mut r)));
        pts
    })
}

/// A deterministic `k × l` lines pattern: the parallel-lines gadget
/// with no free points and seed 0.
pub fn grid_lines(k: usize, l: usize) -> Result<PointConfig<Rational>> {
    parallel_lines_gadget(0, k, l, 0)
}

/// A rational point on the circle of radius `radius` about `center`, from
/// the rational parametrization with parameter `t`.
fn circle_point(center: &P2, radius: i64, t: &Rational) -> P2 {
    let d = int(1) + t * t;
    [
        &center[0] + int(radius) * (int(1) - t * t) / &d,
        &center[1] + int(radius) * int(2) * t / &d,
    ]
}

/// `k` concyclic points with distinct bisectors plus `n − k` free points;
/// the count is `M(n) − M(k) + k(k − 1)`.
pub fn circle_gadget(n: usize, k: usize, seed: u64) -> Result<PointConfig<Rational>> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!("need 2 <= k <= n, got n={n}, k={k}")));
    }
    let target = circle_gadget_count(n as u64, k as u64);
    let mut r = rng(seed);
    resample(DEFAULT_ATTEMPTS, &target, || {
        let center = random_point(&mut r);
        let radius = r.gen_range(BOX / 4..BOX);
        let mut pts: Vec<P2> = (0..k)
            .map(|_| circle_point(&center, radius, &rat(r.gen_range(-200..=200), r.gen_range(1..=60))))
            .collect();
        pts.extend((k..n).map(|_| random_point(&mut r)));
        pts
    })
}

/// A named construction, as parsed from the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetSpec {
    EquallySpaced { n: usize },
    Gap1d { n: usize, k: usize },
    Free { n: usize, sphere: bool, seed: u64 },
    FreeSum { s: usize, t: usize, seed: u64 },
    Trapezoid { k: usize, seed: u64 },
    NearMax { n: usize, k: usize, seed: u64 },
    ParallelLines { m: usize, k: usize, l: usize, seed: u64 },
    CircleGadget { n: usize, k: usize, seed: u64 },
    Concyclic { n: usize },
    Grid { k: usize, l: usize },
    Platonic { solid: Solid },
    Doubled { n: usize, seed: u64 },
}

/// Output of a construction, in whichever space it lives.
#[derive(Clone, Debug)]
pub enum Built {
    Rational(PointConfig<Rational>),
    Quadratic(PointConfig<crate::exactnum::QuadExt>),
}

impl Built {
    pub fn to_text(&self) -> String {
        match self {
            Built::Rational(c) => c.to_text(),
            Built::Quadratic(c) => c.to_text(),
        }
    }
}

impl GadgetSpec {
    pub fn build(&self) -> Result<Built> {
        use GadgetSpec::*;
        let c = match *self {
            EquallySpaced { n } => equally_spaced_line(n)?,
            Gap1d { n, k } => gap_config_1d(n, k)?,
            Free { n, sphere, seed } => {
                free_config(n, seed, if sphere { FreeSpace::Sphere } else { FreeSpace::Plane })?
            }
            FreeSum { s, t, seed } => {
                let a = free_config(s, seed, FreeSpace::Plane)?;
                let b = free_config(t, seed.wrapping_add(1), FreeSpace::Plane)?;
                free_sum(&a, &b, seed)?
            }
            Trapezoid { k, seed } => trapezoid_gadget(k, seed)?,
            NearMax { n, k, seed } => near_max_config(n, k, seed)?,
            ParallelLines { m, k, l, seed } => parallel_lines_gadget(m, k, l, seed)?,
            CircleGadget { n, k, seed } => circle_gadget(n, k, seed)?,
            Concyclic { n } => return concyclic_equal(n).map(Built::Quadratic),
            Grid { k, l } => grid_lines(k, l)?,
            Platonic { solid } => {
                return match platonic(solid) {
                    SphereConfig::Rational(c) => Ok(Built::Rational(c)),
                    SphereConfig::Quadratic(c) => Ok(Built::Quadratic(c)),
                    SphereConfig::Cyclotomic { .. } => unreachable!("solids have real coordinates"),
                }
            }
            Doubled { n, seed } => doubled(&free_config(n, seed, FreeSpace::Sphere)?)?,
        };
        Ok(Built::Rational(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_examples() {
        let s = gap_config_1d(6, 10).unwrap();
        assert_eq!(s.sorted_values(), (1..=6).map(int).collect::<Vec<_>>());
        let s = gap_config_1d(6, 12).unwrap();
        assert_eq!(s.sorted_values(), [1, 2, 3, 4, 5, 8].map(int).to_vec());
        // round 2, t = 1: {1..n−2, n, 2^n}
        let s = gap_config_1d(6, 14).unwrap();
        assert_eq!(s.sorted_values(), [1, 2, 3, 4, 6, 64].map(int).to_vec());
        assert!(gap_config_1d(6, 9).is_err());
        assert!(gap_config_1d(6, 17).is_err());
    }

    #[test]
    fn collinear_embedding_keeps_count() {
        let s = gap_config_1d(5, 9).unwrap();
        let p = collinear_embedding(&s, 3).unwrap();
        assert_eq!(a_s(&p).regions_total, 9);
    }
}
