//! Arrangements of bisecting great circles on the sphere.
//!
//! For points on a sphere centred at the origin, the bisector of `P` and `Q`
//! is the central plane with normal `P − Q`. Only the linear dependencies of
//! the normals matter, so every predicate is an exact equality test and the
//! counter runs over any [`Scalar`] field, including non-real frames.

mod int;
pub(crate) mod lift;

use std::collections::BTreeMap;

use indexmap::{IndexMap, IndexSet};
use serde::Serialize;

use crate::arrangement2d::{a_s, ArrangementSummary};
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::geometry::{integer_coords, Point, PointConfig};
use crate::par::Exec;

pub use lift::{
    concyclic_gap_config, concyclic_plus_one, figure_eight_example, hemisphere_witness,
    in_open_hemisphere, stereographic_lift, SphereConfig,
};

/// A central plane, stored by its normal scaled so that the first nonzero
/// coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GreatCircle<F> {
    normal: [F; 3],
}

fn projective<F: Scalar>(v: [F; 3]) -> Option<[F; 3]> {
    let lead = v.iter().find(|x| !x.vanishes())?.clone();
    Some([v[0].over(&lead), v[1].over(&lead), v[2].over(&lead)])
}

fn cross<F: Scalar>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [
        a[1].times(&b[2]).minus(&a[2].times(&b[1])),
        a[2].times(&b[0]).minus(&a[0].times(&b[2])),
        a[0].times(&b[1]).minus(&a[1].times(&b[0])),
    ]
}

impl<F: Scalar> GreatCircle<F> {
    /// Panics on a zero normal.
    pub fn new(normal: [F; 3]) -> Self {
        GreatCircle {
            normal: projective(normal).expect("zero normal"),
        }
    }

    /// The bisecting circle of two points on a common central sphere.
    pub fn bisecting(p: &[F], q: &[F]) -> Self {
        GreatCircle::new([p[0].minus(&q[0]), p[1].minus(&q[1]), p[2].minus(&q[2])])
    }

    pub fn normal(&self) -> &[F; 3] {
        &self.normal
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.normal[0]
            .times(&v[0])
            .plus(&self.normal[1].times(&v[1]))
            .plus(&self.normal[2].times(&v[2]))
            .vanishes()
    }
}

/// Summary of a great-circle arrangement. Vertices come in antipodal pairs;
/// the histogram counts pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SphereSummary {
    pub circle_count: usize,
    pub vertex_pairs: usize,
    /// multiplicity → number of antipodal vertex pairs.
    pub multiplicity_histogram: BTreeMap<usize, usize>,
    pub regions_total: u64,
}

impl SphereSummary {
    pub(crate) fn from_census(circles: usize, multiplicities: impl IntoIterator<Item = usize>) -> Self {
        let mut hist = BTreeMap::new();
        let mut excess = 0u64;
        let mut pairs = 0;
        for m in multiplicities {
            *hist.entry(m).or_insert(0) += 1;
            excess += m as u64 - 1;
            pairs += 1;
        }
        let regions = match circles {
            0 => 1,
            1 => 2,
            _ => 2 + 2 * excess,
        };
        SphereSummary {
            circle_count: circles,
            vertex_pairs: pairs,
            multiplicity_histogram: hist,
            regions_total: regions,
        }
    }

    /// Number of vertices of graph degree `2m`, both antipodes counted.
    pub fn vertices_of_degree(&self, degree: usize) -> usize {
        if degree % 2 == 1 {
            return 0;
        }
        2 * self.multiplicity_histogram.get(&(degree / 2)).copied().unwrap_or(0)
    }
}

/// Distinct bisecting great circles of points on a central sphere, in order
/// of first appearance.
pub fn great_circles<F: Scalar>(points: &[Point<F>]) -> Vec<GreatCircle<F>> {
    let mut set = IndexSet::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            set.insert(GreatCircle::bisecting(&points[i], &points[j]));
        }
    }
    set.into_iter().collect()
}

/// Counts the regions of an arrangement of distinct great circles.
pub fn count_sphere_regions<F: Scalar>(circles: &[GreatCircle<F>], exec: Exec) -> SphereSummary {
    let rows = exec.map_range(0..circles.len(), |i| {
        let mut row = Vec::new();
        for j in i + 1..circles.len() {
            let v = cross(&circles[i].normal, &circles[j].normal);
            row.push(projective(v).expect("distinct circles meet in a line"));
        }
        row
    });
    let mut counts: IndexMap<[F; 3], usize> = IndexMap::new();
    for v in rows.into_iter().flatten() {
        *counts.entry(v).or_insert(0) += 1;
    }
    SphereSummary::from_census(
        circles.len(),
        counts
            .into_values()
            .map(crate::arrangement2d::multiplicity_from_pairs),
    )
}

/// Division-free census: circles are deduplicated by vanishing cross
/// products, and each crossing is attributed to its two lowest-indexed
/// circles, with multiplicity read off from vanishing dot products. Needs
/// only ring operations, which keeps coefficients small in fields where
/// division is expensive.
pub fn count_by_incidence<F: Scalar>(points: &[Point<F>], exec: Exec) -> SphereSummary {
    let mut normals: Vec<[F; 3]> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (p, q) = (&points[i], &points[j]);
            let n = [p[0].minus(&q[0]), p[1].minus(&q[1]), p[2].minus(&q[2])];
            if !normals.iter().any(|m| cross(m, &n).iter().all(Scalar::vanishes)) {
                normals.push(n);
            }
        }
    }
    let dot = |a: &[F; 3], b: &[F; 3]| a[0].times(&b[0]).plus(&a[1].times(&b[1])).plus(&a[2].times(&b[2]));
    let rows = exec.map_range(0..normals.len(), |i| {
        let mut found = Vec::new();
        'pair: for j in i + 1..normals.len() {
            let v = cross(&normals[i], &normals[j]);
            let mut m = 2;
            for (k, nk) in normals.iter().enumerate() {
                if k == i || k == j || !dot(nk, &v).vanishes() {
                    continue;
                }
                if k < j {
                    continue 'pair;
                }
                m += 1;
            }
            found.push(m);
        }
        found
    });
    SphereSummary::from_census(normals.len(), rows.into_iter().flatten())
}

/// Regions cut out by the bisecting circles of points on a central sphere.
/// Rational coordinates take a machine-integer path when they fit.
pub fn sphere_regions<F: Scalar>(points: &[Point<F>], exec: Exec) -> SphereSummary {
    if let Some(s) = integer_coords(points).and_then(|p| int::summary(&p, exec)) {
        return s;
    }
    count_sphere_regions(&great_circles(points), exec)
}

/// Region count of a validated spherical configuration.
pub fn count_sphere<F: Scalar>(s: &PointConfig<F>) -> Result<SphereSummary> {
    if !s.on_sphere() {
        return Err(Error::Hypothesis("configuration is not on a central sphere".into()));
    }
    Ok(sphere_regions(s.points(), Exec::Sequential))
}

/// `u + 2b` for a planar configuration without parallel bisectors.
pub fn plane_to_sphere_count<F: Scalar>(s: &PointConfig<F>) -> Result<u64> {
    let sum = a_s(s);
    plane_to_sphere_from_summary(&sum)
}

pub fn plane_to_sphere_from_summary(sum: &ArrangementSummary) -> Result<u64> {
    if sum.line_count >= 2 && sum.direction_classes != sum.line_count {
        return Err(Error::Hypothesis("parallel bisectors present".into()));
    }
    Ok(sum.regions_unbounded + 2 * sum.regions_bounded)
}

/// The minimum on the sphere (2n for n ≥ 4) together with the count of an
/// explicit equally spaced concyclic witness. Small n are counted directly.
pub fn sphere_min(n: usize) -> Result<(u64, SphereConfig)> {
    match n {
        0 | 1 => Err(Error::InvalidParameter("at least two points are needed".into())),
        2 | 3 => {
            let pts: Vec<Point<Rational>> = [[3i64, 4, 12], [-3, 4, 12], [-3, -4, 12]]
                .iter()
                .take(n)
                .map(|p| p.iter().map(|&v| crate::exactnum::int(v)).collect())
                .collect();
            let c = PointConfig::sphere(crate::geometry::ScalarField::Rational, pts)?;
            let r = sphere_regions(c.points(), Exec::Sequential).regions_total;
            Ok((r, SphereConfig::Rational(c)))
        }
        _ => {
            let w = crate::constructions::concyclic_equal_sphere(n)?;
            let r = w.regions(Exec::Sequential).regions_total;
            Ok((r, w))
        }
    }
}

/// A non-square rectangle on the sphere; it attains the minimum 8 for n = 4.
pub fn rectangle_witness() -> PointConfig<Rational> {
    let pts = [[3i64, 4, 12], [-3, 4, 12], [-3, -4, 12], [3, -4, 12]]
        .iter()
        .map(|p| p.iter().map(|&v| crate::exactnum::int(v)).collect())
        .collect();
    PointConfig::sphere(crate::geometry::ScalarField::Rational, pts).expect("on the sphere of radius 13")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    fn pts(v: &[[i64; 3]]) -> Vec<Point<Rational>> {
        v.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect()
    }

    fn normals(v: &[[i64; 3]]) -> Vec<GreatCircle<Rational>> {
        v.iter()
            .map(|n| GreatCircle::new([int(n[0]), int(n[1]), int(n[2])]))
            .collect()
    }

    #[test]
    fn small_central_arrangements() {
        assert_eq!(count_sphere_regions::<Rational>(&[], Exec::Sequential).regions_total, 1);
        assert_eq!(count_sphere_regions(&normals(&[[1, 0, 0]]), Exec::Sequential).regions_total, 2);
        assert_eq!(
            count_sphere_regions(&normals(&[[1, 0, 0], [0, 1, 0]]), Exec::Sequential).regions_total,
            4
        );
        let three = normals(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(count_sphere_regions(&three, Exec::Sequential).regions_total, 8);
        let pencil = normals(&[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        assert_eq!(count_sphere_regions(&pencil, Exec::Sequential).regions_total, 6);
    }

    #[test]
    fn generic_circles() {
        let ns = normals(&[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 2, 3], [3, -1, 7], [2, 5, -4]]);
        for k in 1..=ns.len() {
            let r = count_sphere_regions(&ns[..k], Exec::Sequential).regions_total;
            assert_eq!(r as usize, k * k - k + 2);
        }
    }

    #[test]
    fn octahedron() {
        let o = pts(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]);
        assert_eq!(great_circles(&o).len(), 9);
        let s = sphere_regions(&o, Exec::Sequential);
        assert_eq!(s.regions_total, 48);
        let g = count_sphere_regions(&great_circles(&o), Exec::Parallel);
        assert_eq!(g, s);
        assert_eq!(count_by_incidence(&o, Exec::Sequential), s);
    }

    #[test]
    fn two_points_and_rectangle() {
        assert_eq!(great_circles(&pts(&[[1, 0, 0], [0, 1, 0]])).len(), 1);
        let r = rectangle_witness();
        assert_eq!(count_sphere(&r).unwrap().regions_total, 8);
        let (m, _) = sphere_min(3).unwrap();
        assert_eq!(m, 6);
    }
}
