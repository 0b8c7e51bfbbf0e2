//! Spherical configurations: the lift of planar sets, hemisphere tests and the
//! concyclic generators.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use super::{count_by_incidence, sphere_regions, SphereSummary};
use crate::error::{Error, Result};
use crate::exactnum::{common_denominator, int, rat, Cyclo, CycloField, OrderedScalar, QuadExt, Rational, Scalar};
use crate::formulas::binomial;
use crate::geometry::{Point, PointConfig, ScalarField};
use crate::par::Exec;

const RETRIES: usize = 100;

/// A configuration on a central sphere over one of the supported fields.
///
/// The cyclotomic variant stores points in the frame `(x + iy, x − iy, z)`,
/// which is enough for counting because only linear dependencies matter.
#[derive(Clone, Debug)]
pub enum SphereConfig {
    Rational(PointConfig<Rational>),
    Quadratic(PointConfig<QuadExt>),
    Cyclotomic {
        field: Arc<CycloField>,
        points: Vec<Point<Cyclo>>,
    },
}

impl SphereConfig {
    pub fn len(&self) -> usize {
        match self {
            SphereConfig::Rational(c) => c.len(),
            SphereConfig::Quadratic(c) => c.len(),
            SphereConfig::Cyclotomic { points, .. } => points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn regions(&self, exec: Exec) -> SphereSummary {
        match self {
            SphereConfig::Rational(c) => sphere_regions(c.points(), exec),
            SphereConfig::Quadratic(c) => sphere_regions(c.points(), exec),
            SphereConfig::Cyclotomic { field, points } => {
                let den = common_denominator(points.iter().flatten().flat_map(|x| x.coefficients()));
                let scale = Cyclo::rational(field, Rational::from_integer(den));
                let scaled: Vec<Point<Cyclo>> = points
                    .iter()
                    .map(|p| p.iter().map(|x| x.times(&scale)).collect())
                    .collect();
                count_by_incidence(&scaled, exec)
            }
        }
    }

    /// Text form; the cyclotomic frame has none.
    pub fn to_text(&self) -> Result<String> {
        match self {
            SphereConfig::Rational(c) => Ok(c.to_text()),
            SphereConfig::Quadratic(c) => Ok(c.to_text()),
            SphereConfig::Cyclotomic { field, .. } => Err(Error::InvalidParameter(format!(
                "configuration over Q(zeta{}) has no text form",
                field.order()
            ))),
        }
    }
}

fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(a[0].zero_like(), |acc, (x, y)| acc.plus(&x.times(y)))
}

fn cross3<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    vec![
        a[1].times(&b[2]).minus(&a[2].times(&b[1])),
        a[2].times(&b[0]).minus(&a[0].times(&b[2])),
        a[0].times(&b[1]).minus(&a[1].times(&b[0])),
    ]
}

/// Whether the linear functional `h` is positive on every point.
pub fn in_open_hemisphere<F: OrderedScalar>(points: &[Point<F>], h: &[F]) -> bool {
    points.iter().all(|p| dot(p, h).signum_i8() > 0)
}

/// Searches a finite candidate set for a functional positive on all points:
/// the centroid, the points, coordinate axes, pairwise sums and cross
/// products. `None` means no candidate worked, not that none exists.
pub fn hemisphere_witness<F: OrderedScalar>(points: &[Point<F>]) -> Option<Vec<F>> {
    let first = points.first()?;
    let zero = first[0].zero_like();
    let one = first[0].from_int_like(1);
    let mut cands: Vec<Vec<F>> = Vec::new();
    let mut sum = vec![zero.clone(); 3];
    for p in points {
        for k in 0..3 {
            sum[k] = sum[k].plus(&p[k]);
        }
    }
    cands.push(sum);
    for k in 0..3 {
        let mut e = vec![zero.clone(); 3];
        e[k] = one.clone();
        cands.push(e.iter().map(|x| x.negated()).collect());
        cands.push(e);
    }
    cands.extend(points.iter().cloned());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            cands.push(points[i].iter().zip(&points[j]).map(|(a, b)| a.plus(b)).collect());
            let c = cross3(&points[i], &points[j]);
            cands.push(c.iter().map(|x| x.negated()).collect());
            cands.push(c);
        }
    }
    cands
        .into_iter()
        .find(|h| h.iter().any(|x| !x.vanishes()) && in_open_hemisphere(points, h))
}

/// Inverse stereographic image of a point strictly inside the unit disc,
/// landing in the open southern hemisphere of the unit sphere.
pub(crate) fn inverse_stereographic(x: &Rational, y: &Rational) -> Point<Rational> {
    let s = x * x + y * y;
    let den = &s + Rational::one();
    vec![
        int(2) * x / &den,
        int(2) * y / &den,
        (s - Rational::one()) / den,
    ]
}

/// Lifts a planar configuration onto the unit sphere: the plane is scaled
/// about the origin into the unit disc and mapped by inverse stereographic
/// projection, so every image lies in the open hemisphere `z < 0`. Circles
/// and symmetry axes through the origin are preserved.
pub fn stereographic_lift(s: &PointConfig<Rational>) -> Result<PointConfig<Rational>> {
    if s.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: s.dim(),
        });
    }
    let max = s
        .points()
        .iter()
        .flat_map(|p| p.iter().map(|c| c.abs()))
        .max()
        .unwrap_or_else(Rational::zero);
    let scale = if max.is_zero() {
        Rational::one()
    } else {
        Rational::one() / (int(2) * max)
    };
    let pts = s
        .points()
        .iter()
        .map(|p| inverse_stereographic(&(&p[0] * &scale), &(&p[1] * &scale)))
        .collect();
    PointConfig::sphere(ScalarField::Rational, pts)
}

/// A random rational point on the unit sphere in the open hemisphere `z < 0`.
pub(crate) fn random_sphere_point(rng: &mut ChaCha8Rng, denom: i64) -> Point<Rational> {
    let x = rat(rng.gen_range(-denom + 1..denom), 2 * denom);
    let y = rat(rng.gen_range(-denom + 1..denom), 2 * denom);
    inverse_stereographic(&x, &y)
}

/// `((3 + 4i)/5)^e` as a pair of rationals.
pub(crate) fn gaussian_power(mut e: u64) -> (Rational, Rational) {
    let (mut br, mut bi) = (rat(3, 5), rat(4, 5));
    let (mut r, mut i) = (Rational::one(), Rational::zero());
    while e > 0 {
        if e & 1 == 1 {
            let nr = &r * &br - &i * &bi;
            i = &r * &bi + &i * &br;
            r = nr;
        }
        let nbr = &br * &br - &bi * &bi;
        bi = int(2) * &br * &bi;
        br = nbr;
        e >>= 1;
    }
    (r, i)
}

/// Latitude circle `z = 4/5` of the unit sphere, radius 3/5.
fn latitude_point(e: u64) -> Point<Rational> {
    let (c, s) = gaussian_power(e);
    vec![rat(3, 5) * c, rat(3, 5) * s, rat(4, 5)]
}

enum Circle {
    Cyclo(Arc<CycloField>, Vec<Point<Cyclo>>),
    Rational(Vec<Point<Rational>>),
}

/// `n` points on a circle whose chords take exactly `k` directions.
fn concyclic_points(n: usize, k: usize, extra_i: bool) -> Result<Circle> {
    let max = binomial(n as u64, 2);
    if n < 3 || k < n || num_bigint::BigInt::from(k) > max {
        return Err(Error::InvalidParameter(format!(
            "need 3 <= n <= k <= C(n,2), got n={n}, k={k}"
        )));
    }
    if k <= 2 * n - 3 {
        let order = if extra_i { num_integer::lcm(k, 4) } else { k };
        let field = CycloField::new(order as u32);
        let step = (order / k) as i64;
        let r = Cyclo::rational(&field, rat(3, 5));
        let z = Cyclo::rational(&field, rat(4, 5));
        let pts = (0..n as i64)
            .map(|a| {
                vec![
                    r.times(&Cyclo::zeta_pow(&field, a * step)),
                    r.times(&Cyclo::zeta_pow(&field, -a * step)),
                    z.clone(),
                ]
            })
            .collect();
        Ok(Circle::Cyclo(field, pts))
    } else {
        let exps = crate::constructions::gap_config_1d(n, k + 1)?;
        let pts = exps
            .points()
            .iter()
            .map(|p| latitude_point(p[0].to_integer().try_into().expect("small exponent")))
            .collect();
        Ok(Circle::Rational(pts))
    }
}

/// A concyclic configuration of `n` points with exactly `2k` regions on the
/// sphere, for `n ≤ k ≤ C(n,2)`.
pub fn concyclic_gap_config(n: usize, k: usize) -> Result<SphereConfig> {
    let c = match concyclic_points(n, k, false)? {
        Circle::Cyclo(field, points) => SphereConfig::Cyclotomic { field, points },
        Circle::Rational(pts) => SphereConfig::Rational(PointConfig::sphere(ScalarField::Rational, pts)?),
    };
    let got = c.regions(Exec::Sequential).regions_total;
    if got != 2 * k as u64 {
        return Err(Error::Hypothesis(format!("concyclic generator produced {got}, expected {}", 2 * k)));
    }
    Ok(c)
}

/// `n − 1` concyclic points with `2t` circle regions plus one random point,
/// resampled until the sphere count is exactly `2nt`.
pub fn concyclic_plus_one(n: usize, t: usize, seed: u64) -> Result<SphereConfig> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("need n >= 5, got {n}")));
    }
    let circle = concyclic_points(n - 1, t, true)?;
    let target = 2 * (n * t) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let p = random_sphere_point(&mut rng, 64);
        let c = match &circle {
            Circle::Cyclo(field, pts) => {
                let i = Cyclo::imag_unit(field);
                let x = Cyclo::rational(field, p[0].clone());
                let y = Cyclo::rational(field, p[1].clone());
                let z = Cyclo::rational(field, p[2].clone());
                let extra = vec![x.plus(&i.times(&y)), x.minus(&i.times(&y)), z];
                if pts.contains(&extra) {
                    continue;
                }
                let mut points = pts.clone();
                points.push(extra);
                SphereConfig::Cyclotomic {
                    field: field.clone(),
                    points,
                }
            }
            Circle::Rational(pts) => {
                let mut points = pts.clone();
                points.push(p);
                match PointConfig::sphere(ScalarField::Rational, points) {
                    Ok(c) => SphereConfig::Rational(c),
                    Err(_) => continue,
                }
            }
        };
        if c.regions(Exec::Sequential).regions_total == target {
            return Ok(c);
        }
    }
    Err(Error::BudgetExhausted(RETRIES))
}

/// Five points, four of them concyclic about the origin and symmetric in the
/// x-axis so that two chords share a bisector, plus one free point chosen so
/// that the planar count is 34 with no parallel bisectors.
pub fn figure_eight_example(seed: u64) -> Result<PointConfig<Rational>> {
    let base = [[3i64, 4], [3, -4], [-4, 3], [-4, -3]];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRIES {
        let mut pts: Vec<[Rational; 2]> = base.iter().map(|p| [int(p[0]), int(p[1])]).collect();
        pts.push([rat(rng.gen_range(-60..60), 7), rat(rng.gen_range(-60..60), 7)]);
        let Ok(c) = PointConfig::plane(pts) else { continue };
        let s = crate::arrangement2d::a_s(&c);
        if s.regions_total == 34 && s.direction_classes == s.line_count {
            return Ok(c);
        }
    }
    Err(Error::BudgetExhausted(RETRIES))
}
