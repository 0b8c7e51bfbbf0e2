//! Point configurations, single-vantage orderings, weighted orderings and the
//! one-dimensional midpoint combinatorics.

mod io;

use std::collections::HashSet;
use std::fmt;
use std::hash::Hash;
use std::ops::Add;

use crate::arrangement2d::Line;
use crate::error::{Error, Result};
use num_bigint::BigInt;

use crate::exactnum::{common_denominator, OrderedScalar, Rational, Scalar};

pub use io::{parse_config, AnyConfig};

/// The scalar field the coordinates live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarField {
    Rational,
    /// ℚ(√d).
    Quadratic(u64),
    /// ℚ(ζ_n); only used internally for equality-based counting.
    Cyclotomic(u32),
}

impl fmt::Display for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarField::Rational => write!(f, "Q"),
            ScalarField::Quadratic(d) => write!(f, "Q(sqrt{d})"),
            ScalarField::Cyclotomic(n) => write!(f, "Q(zeta{n})"),
        }
    }
}

/// An indexed list of distinct points.
///
/// Indices are 0-based in the API and 1-based in every human-facing output.
/// In dimension 1 the ascending order of the points is cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig<F = Rational> {
    dim: usize,
    field: ScalarField,
    on_sphere: bool,
    points: Vec<Vec<F>>,
    sorted: Vec<usize>,
}

pub type Point<F = Rational> = Vec<F>;

impl<F: Scalar> PointConfig<F> {
    /// Checks dimensions and distinctness.
    pub fn new(dim: usize, field: ScalarField, points: Vec<Point<F>>) -> Result<Self> {
        if !(1..=3).contains(&dim) {
            return Err(Error::InvalidParameter(format!("dimension {dim} not in 1..=3")));
        }
        for p in &points {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        let mut seen = std::collections::HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = seen.insert(p, i) {
                return Err(Error::CoincidentPoints(j, i));
            }
        }
        Ok(PointConfig {
            dim,
            field,
            on_sphere: false,
            points,
            sorted: Vec::new(),
        })
    }

    /// A configuration in ℝ³ whose points share one squared norm.
    pub fn sphere(field: ScalarField, points: Vec<Point<F>>) -> Result<Self> {
        let mut c = Self::new(3, field, points)?;
        if let Some(first) = c.points.first() {
            let r = norm2(first);
            for (i, p) in c.points.iter().enumerate() {
                if norm2(p) != r {
                    return Err(Error::NotOnSphere(i));
                }
            }
            if r.vanishes() {
                return Err(Error::NotOnSphere(0));
            }
        }
        c.on_sphere = true;
        Ok(c)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> ScalarField {
        self.field
    }

    pub fn on_sphere(&self) -> bool {
        self.on_sphere
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point<F>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point<F> {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Point<F>> {
        self.points
    }

    /// Applies `f` to every coordinate, keeping shape and flags.
    pub fn map_coords<G: Scalar>(&self, field: ScalarField, f: impl Fn(&F) -> G) -> Result<PointConfig<G>> {
        let pts = self
            .points
            .iter()
            .map(|p| p.iter().map(&f).collect())
            .collect();
        if self.on_sphere {
            PointConfig::sphere(field, pts)
        } else {
            let mut c = PointConfig::new(self.dim, field, pts)?;
            if self.dim == 1 {
                c.sorted = self.sorted.clone();
            }
            Ok(c)
        }
    }
}

impl<F: OrderedScalar> PointConfig<F> {
    /// Same as [`PointConfig::new`], caching the ascending order in dimension 1.
    pub fn ordered(dim: usize, field: ScalarField, points: Vec<Point<F>>) -> Result<Self> {
        let mut c = Self::new(dim, field, points)?;
        if dim == 1 {
            let mut idx: Vec<usize> = (0..c.len()).collect();
            idx.sort_by(|&a, &b| c.points[a][0].cmp(&c.points[b][0]));
            c.sorted = idx;
        }
        Ok(c)
    }

    /// Indices of a 1-D configuration in ascending position.
    pub fn sorted_indices(&self) -> Vec<usize> {
        assert_eq!(self.dim, 1, "sorted order is only kept for dimension 1");
        if self.sorted.len() == self.len() {
            return self.sorted.clone();
        }
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.points[a][0].cmp(&self.points[b][0]));
        idx
    }

    /// Coordinates of a 1-D configuration in ascending order.
    pub fn sorted_values(&self) -> Vec<F> {
        self.sorted_indices()
            .into_iter()
            .map(|i| self.points[i][0].clone())
            .collect()
    }
}

impl PointConfig<Rational> {
    /// A rational configuration on the line.
    pub fn line(values: Vec<Rational>) -> Result<Self> {
        Self::ordered(1, ScalarField::Rational, values.into_iter().map(|v| vec![v]).collect())
    }

    /// A rational configuration in the plane.
    pub fn plane(points: Vec<[Rational; 2]>) -> Result<Self> {
        Self::ordered(2, ScalarField::Rational, points.into_iter().map(Vec::from).collect())
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(dim: usize, points: &[&[i64]]) -> Result<Self> {
        let pts = points
            .iter()
            .map(|p| p.iter().map(|&v| crate::exactnum::int(v)).collect())
            .collect();
        Self::ordered(dim, ScalarField::Rational, pts)
    }
}

/// Coordinates scaled by the common denominator, when every coordinate is
/// rational. Scaling changes no ordering.
pub fn integer_coords<F: Scalar>(points: &[Point<F>]) -> Option<Vec<Vec<BigInt>>> {
    let rats: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.iter().map(Scalar::to_rational).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let l = Rational::from_integer(common_denominator(rats.iter().flatten()));
    Some(
        rats.iter()
            .map(|p| p.iter().map(|x| (x * &l).to_integer()).collect())
            .collect(),
    )
}

pub fn norm2<F: Scalar>(p: &[F]) -> F {
    let mut acc = p[0].zero_like();
    for x in p {
        acc = acc.plus(&x.times(x));
    }
    acc
}

pub fn dist2<F: Scalar>(p: &[F], q: &[F]) -> F {
    let mut acc = p[0].zero_like();
    for (x, y) in p.iter().zip(q) {
        let d = x.minus(y);
        acc = acc.plus(&d.times(&d));
    }
    acc
}

/// A ranking of points from nearest to farthest, with tie blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointOrdering {
    blocks: Vec<Vec<usize>>,
}

impl PointOrdering {
    /// Blocks of equally ranked indices; every block is sorted ascending.
    pub fn from_blocks(mut blocks: Vec<Vec<usize>>) -> Self {
        blocks.retain(|b| !b.is_empty());
        for b in &mut blocks {
            b.sort_unstable();
        }
        PointOrdering { blocks }
    }

    /// A strict ordering.
    pub fn strict(ranks: Vec<usize>) -> Self {
        PointOrdering {
            blocks: ranks.into_iter().map(|i| vec![i]).collect(),
        }
    }

    /// Sorts `0..n` with an exact comparator and groups equal neighbours.
    pub fn by_comparator(n: usize, cmp: impl Fn(usize, usize) -> std::cmp::Ordering) -> Self {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| cmp(a, b).then(a.cmp(&b)));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for i in idx {
            match blocks.last_mut() {
                Some(last) if cmp(last[0], i) == std::cmp::Ordering::Equal => last.push(i),
                _ => blocks.push(vec![i]),
            }
        }
        PointOrdering { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Indices from nearest to farthest; ties listed by index.
    pub fn ranks(&self) -> Vec<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn is_strict(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for PointOrdering {
    /// 1-based; tie blocks in braces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                if b.len() == 1 {
                    (b[0] + 1).to_string()
                } else {
                    let inner: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
                    format!("{{{}}}", inner.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn check_point<F: Scalar>(s: &PointConfig<F>, v: &[F]) -> Result<()> {
    if v.len() != s.dim {
        return Err(Error::DimensionMismatch {
            expected: s.dim,
            found: v.len(),
        });
    }
    Ok(())
}

/// Ranks the points of `s` by distance from `v`, exactly.
pub fn ordering_from_vantage<F: OrderedScalar>(s: &PointConfig<F>, v: &[F]) -> Result<PointOrdering> {
    check_point(s, v)?;
    let d: Vec<F> = s.points.iter().map(|p| dist2(p, v)).collect();
    Ok(PointOrdering::by_comparator(s.len(), |i, j| d[i].cmp(&d[j])))
}

/// Positive per-axis weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights(Vec<Rational>);

impl Weights {
    pub fn new(w: Vec<Rational>) -> Result<Self> {
        for (i, x) in w.iter().enumerate() {
            if x.signum_i8() <= 0 {
                return Err(Error::NonPositiveWeight(i));
            }
        }
        Ok(Weights(w))
    }

    pub fn uniform(dim: usize) -> Self {
        Weights(vec![crate::exactnum::int(1); dim])
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    fn apply<F: OrderedScalar>(&self, p: &[F]) -> Point<F> {
        p.iter()
            .zip(&self.0)
            .map(|(x, w)| x.times(&F::from_rational(w.clone())))
            .collect()
    }
}

/// Scales every coordinate by the weight of its axis.
pub fn weighted_transform<F: OrderedScalar>(s: &PointConfig<F>, w: &Weights) -> Result<PointConfig<F>> {
    if w.0.len() != s.dim {
        return Err(Error::DimensionMismatch {
            expected: s.dim,
            found: w.0.len(),
        });
    }
    let pts = s.points.iter().map(|p| w.apply(p)).collect();
    PointConfig::ordered(s.dim, s.field, pts)
}

/// Ranking by the weighted distance `Σ w_k² (x_k − v_k)²`.
pub fn ordering_weighted<F: OrderedScalar>(s: &PointConfig<F>, v: &[F], w: &Weights) -> Result<PointOrdering> {
    check_point(s, v)?;
    let t = weighted_transform(s, w)?;
    ordering_from_vantage(&t, &w.apply(v))
}

/// The locus of equal weighted distance to `p` and `q`:
/// `Σ w_k²(q_k − p_k) x_k = ½ Σ w_k²(q_k² − p_k²)`.
pub fn bisector_line_weighted<F: OrderedScalar>(p: &[F], q: &[F], w: &Weights) -> Result<Line<F>> {
    if p.len() != 2 || q.len() != 2 || w.0.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.len().max(q.len()),
        });
    }
    if p == q {
        return Err(Error::CoincidentPoints(0, 1));
    }
    let w2: Vec<F> = w.0.iter().map(|x| F::from_rational(x * x)).collect();
    let a = w2[0].times(&q[0].minus(&p[0]));
    let b = w2[1].times(&q[1].minus(&p[1]));
    let half = F::from_rational(crate::exactnum::rat(1, 2));
    let c = w2[0]
        .times(&q[0].times(&q[0]).minus(&p[0].times(&p[0])))
        .plus(&w2[1].times(&q[1].times(&q[1]).minus(&p[1].times(&p[1]))))
        .times(&half);
    Ok(Line::new(a, b, c))
}

/// Number of distinct values `a_i + a_j`, `i < j`.
pub fn distinct_pairwise_sums<T>(values: &[T]) -> usize
where
    T: Clone + Eq + Hash + Add<Output = T>,
{
    let mut set = HashSet::with_capacity(values.len() * values.len() / 2);
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            set.insert(values[i].clone() + values[j].clone());
        }
    }
    set.len()
}

/// Number of distinct midpoints of a 1-D configuration; one less than the
/// number of orderings seen from a vantage point moving along the line.
pub fn distinct_midpoints_1d<F: OrderedScalar>(s: &PointConfig<F>) -> Result<usize> {
    if s.dim != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: s.dim,
        });
    }
    let mut set = HashSet::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            set.insert(s.points[i][0].plus(&s.points[j][0]));
        }
    }
    Ok(set.len())
}

/// Whether consecutive gaps of a 1-D configuration are all equal.
pub fn is_equally_spaced<F: OrderedScalar>(s: &PointConfig<F>) -> bool {
    let v = s.sorted_values();
    if v.len() < 3 {
        return true;
    }
    let gap = v[1].minus(&v[0]);
    v.windows(2).all(|w| w[1].minus(&w[0]) == gap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn line(v: &[i64]) -> PointConfig {
        PointConfig::line(v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn orderings_on_the_line() {
        let s = line(&[1, 2, 3]);
        let o = ordering_from_vantage(&s, &[int(0)]).unwrap();
        assert_eq!(o.ranks(), vec![0, 1, 2]);
        assert!(o.is_strict());
        let o = ordering_from_vantage(&s, &[rat(3, 2)]).unwrap();
        assert_eq!(o.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(o.to_string(), "{1 2} 3");
    }

    #[test]
    fn planar_ordering() {
        let s = PointConfig::from_ints(2, &[&[0, 0], &[4, 0], &[0, 3]]).unwrap();
        let o = ordering_from_vantage(&s, &[int(1), int(1)]).unwrap();
        assert_eq!(o.to_string(), "1 3 2");
        assert!(ordering_from_vantage(&s, &[int(1)]).is_err());
    }

    #[test]
    fn rejects_bad_configs() {
        assert_eq!(
            PointConfig::from_ints(2, &[&[0, 0], &[1, 1], &[0, 0]]).unwrap_err(),
            Error::CoincidentPoints(0, 2)
        );
        assert!(PointConfig::from_ints(2, &[&[0, 0], &[1]]).is_err());
        let pts = vec![vec![int(1), int(0), int(0)], vec![int(0), int(2), int(0)]];
        assert_eq!(
            PointConfig::sphere(ScalarField::Rational, pts).unwrap_err(),
            Error::NotOnSphere(1)
        );
    }

    #[test]
    fn weighted_examples() {
        let s = PointConfig::from_ints(2, &[&[1, 2], &[2, 1]]).unwrap();
        let w = Weights::new(vec![int(2), int(1)]).unwrap();
        let t = weighted_transform(&s, &w).unwrap();
        assert_eq!(t, PointConfig::from_ints(2, &[&[2, 2], &[4, 1]]).unwrap());
        let o = ordering_weighted(&s, &[int(0), int(0)], &w).unwrap();
        assert_eq!(o.ranks(), vec![0, 1]);
        assert!(Weights::new(vec![int(0), int(1)]).is_err());
        assert_eq!(
            weighted_transform(&s, &Weights::uniform(2)).unwrap(),
            s
        );
    }

    #[test]
    fn weighted_bisectors() {
        let w11 = Weights::uniform(2);
        let w21 = Weights::new(vec![int(2), int(1)]).unwrap();
        let o = [int(0), int(0)];
        let l = bisector_line_weighted(&o, &[int(2), int(0)], &w11).unwrap();
        assert_eq!(l, Line::new(int(1), int(0), int(1)));
        let l = bisector_line_weighted(&o, &[int(2), int(0)], &w21).unwrap();
        assert_eq!(l, Line::new(int(8), int(0), int(8)));
        let l = bisector_line_weighted(&o, &[int(1), int(1)], &w21).unwrap();
        assert_eq!(l, Line::new(int(4), int(1), rat(5, 2)));
        assert!(bisector_line_weighted(&o, &o, &w21).is_err());
    }

    #[test]
    fn midpoints_and_sums() {
        assert_eq!(distinct_midpoints_1d(&line(&[1, 2, 3, 4, 5])).unwrap(), 7);
        assert_eq!(distinct_midpoints_1d(&line(&[1, 2, 4, 5])).unwrap(), 5);
        assert_eq!(distinct_midpoints_1d(&line(&[1, 2, 4, 8])).unwrap(), 6);
        assert_eq!(distinct_pairwise_sums(&[1, 2, 3, 4]), 5);
        assert_eq!(distinct_pairwise_sums(&[1, 2, 4, 8]), 6);
        let v: Vec<i64> = (1..=10).collect();
        assert_eq!(distinct_pairwise_sums(&v), 17);
    }

    #[test]
    fn spacing_and_sorted_view() {
        let s = line(&[5, 1, 3]);
        assert_eq!(s.sorted_indices(), vec![1, 2, 0]);
        assert!(is_equally_spaced(&s));
        assert!(!is_equally_spaced(&line(&[1, 2, 4, 5])));
    }
}
