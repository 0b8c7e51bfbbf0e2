//! The perpendicular-bisector arrangement of a planar configuration and exact
//! counting of its regions.
//!
//! Regions are counted from the vertex census: with `L` distinct lines and
//! `m_p` lines through each vertex `p`, there are `1 + L + Σ (m_p − 1)`
//! regions, of which `2L` are unbounded when at least two directions occur and
//! `L + 1` otherwise.

mod int;

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{OrderedScalar, Scalar};
use crate::formulas;
use crate::geometry::{integer_coords, Point, PointConfig};
use crate::par::Exec;

/// The line `a·x + b·y = c`, scaled so that its first nonzero coefficient of
/// `(a, b)` is 1. Equal geometric lines compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Line<F> {
    a: F,
    b: F,
    c: F,
}

impl<F: Scalar> Line<F> {
    /// Panics when `a = b = 0`.
    pub fn new(a: F, b: F, c: F) -> Self {
        if !a.vanishes() {
            Line {
                b: b.over(&a),
                c: c.over(&a),
                a: a.from_int_like(1),
            }
        } else {
            assert!(!b.vanishes(), "degenerate line");
            Line {
                c: c.over(&b),
                a,
                b: b.from_int_like(1),
            }
        }
    }

    pub fn coefficients(&self) -> (&F, &F, &F) {
        (&self.a, &self.b, &self.c)
    }

    /// The perpendicular bisector of `p` and `q`.
    pub fn bisector(p: &[F], q: &[F]) -> Self {
        let a = q[0].minus(&p[0]).times(&p[0].from_int_like(2));
        let b = q[1].minus(&p[1]).times(&p[0].from_int_like(2));
        let c = q[0]
            .times(&q[0])
            .plus(&q[1].times(&q[1]))
            .minus(&p[0].times(&p[0]))
            .minus(&p[1].times(&p[1]));
        Line::new(a, b, c)
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }

    /// The common point, or `None` for parallel lines.
    pub fn intersect(&self, other: &Self) -> Option<Point<F>> {
        let det = self.a.times(&other.b).minus(&other.a.times(&self.b));
        if det.vanishes() {
            return None;
        }
        let x = self.c.times(&other.b).minus(&other.c.times(&self.b)).over(&det);
        let y = self.a.times(&other.c).minus(&other.a.times(&self.c)).over(&det);
        Some(vec![x, y])
    }

    pub fn contains(&self, p: &[F]) -> bool {
        self.a.times(&p[0]).plus(&self.b.times(&p[1])) == self.c
    }
}

impl<F: Scalar + fmt::Display> fmt::Display for Line<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})x + ({})y = {}", self.a, self.b, self.c)
    }
}

/// Combinatorial summary of a line arrangement.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ArrangementSummary {
    /// Number of point pairs the lines came from (0 when counted from lines).
    pub pair_count: usize,
    pub line_count: usize,
    pub direction_classes: usize,
    pub vertex_count: usize,
    /// multiplicity → number of vertices with that many lines.
    pub multiplicity_histogram: BTreeMap<usize, usize>,
    pub regions_total: u64,
    pub regions_bounded: u64,
    pub regions_unbounded: u64,
}

impl ArrangementSummary {
    pub(crate) fn from_census(
        line_count: usize,
        direction_classes: usize,
        multiplicities: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut hist = BTreeMap::new();
        let mut excess = 0u64;
        let mut vertices = 0;
        for m in multiplicities {
            debug_assert!(m >= 2);
            *hist.entry(m).or_insert(0) += 1;
            excess += m as u64 - 1;
            vertices += 1;
        }
        let l = line_count as u64;
        let total = 1 + l + excess;
        let unbounded = match line_count {
            0 => 1,
            _ if direction_classes >= 2 => 2 * l,
            _ => l + 1,
        };
        ArrangementSummary {
            pair_count: 0,
            line_count,
            direction_classes,
            vertex_count: vertices,
            multiplicity_histogram: hist,
            regions_total: total,
            regions_bounded: total - unbounded,
            regions_unbounded: unbounded,
        }
    }
}

/// Multiplicity from the number of line pairs meeting at a vertex.
pub(crate) fn multiplicity_from_pairs(pairs: usize) -> usize {
    // m(m−1)/2 = pairs
    let m = ((1.0 + (1.0 + 8.0 * pairs as f64).sqrt()) / 2.0).round() as usize;
    assert_eq!(m * (m - 1) / 2, pairs, "inconsistent vertex census");
    m
}

/// Distinct perpendicular bisectors, in order of first appearance.
pub fn bisector_lines<F: Scalar>(s: &PointConfig<F>) -> Vec<Line<F>> {
    assert_eq!(s.dim(), 2, "bisector lines need a planar configuration");
    let pts = s.points();
    let mut set = IndexSet::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            set.insert(Line::bisector(&pts[i], &pts[j]));
        }
    }
    set.into_iter().collect()
}

/// Vertices with the number of lines through each, in first-seen order.
pub fn vertex_census<F: Scalar>(lines: &[Line<F>], exec: Exec) -> Vec<(Point<F>, usize)> {
    let rows = exec.map_range(0..lines.len(), |i| {
        let mut row = Vec::new();
        for j in i + 1..lines.len() {
            if let Some(p) = lines[i].intersect(&lines[j]) {
                row.push(p);
            }
        }
        row
    });
    let mut counts: indexmap::IndexMap<Point<F>, usize> = indexmap::IndexMap::new();
    for p in rows.into_iter().flatten() {
        *counts.entry(p).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(p, c)| (p, multiplicity_from_pairs(c)))
        .collect()
}

fn direction_classes<F: Scalar>(lines: &[Line<F>]) -> usize {
    let set: std::collections::HashSet<(&F, &F)> = lines.iter().map(|l| (&l.a, &l.b)).collect();
    set.len()
}

/// Counts the regions of an arrangement of distinct lines.
pub fn count_regions<F: Scalar>(lines: &[Line<F>]) -> ArrangementSummary {
    count_regions_with(lines, Exec::Sequential)
}

pub fn count_regions_with<F: Scalar>(lines: &[Line<F>], exec: Exec) -> ArrangementSummary {
    let census = vertex_census(lines, exec);
    ArrangementSummary::from_census(
        lines.len(),
        direction_classes(lines),
        census.into_iter().map(|(_, m)| m),
    )
}

/// The arrangement summary of a planar configuration; `regions_total` is the
/// number of strict orderings seen from a vantage point in the plane.
pub fn a_s<F: Scalar>(s: &PointConfig<F>) -> ArrangementSummary {
    a_s_with(s, Exec::Sequential)
}

pub fn a_s_with<F: Scalar>(s: &PointConfig<F>, exec: Exec) -> ArrangementSummary {
    assert_eq!(s.dim(), 2, "a planar configuration is required");
    let n = s.len();
    let mut summary = integer_coords(s.points())
        .and_then(|pts| int::summary(&pts, exec))
        .unwrap_or_else(|| count_regions_with(&bisector_lines(s), exec));
    summary.pair_count = n * n.saturating_sub(1) / 2;
    summary
}

/// Regions of a configuration that may be 1-D or 2-D: the number of strict
/// orderings from a vantage point in the configuration's own space.
pub fn orderings_count<F: OrderedScalar>(s: &PointConfig<F>) -> Result<u64> {
    match s.dim() {
        1 => Ok(crate::geometry::distinct_midpoints_1d(s)? as u64 + 1),
        2 => Ok(a_s(s).regions_total),
        d => Err(Error::DimensionMismatch { expected: 2, found: d }),
    }
}

/// Whether the configuration attains the planar maximum.
pub fn verify_free<F: Scalar>(s: &PointConfig<F>) -> bool {
    let m = formulas::max_orderings(s.len() as u64, 2);
    num_bigint::BigInt::from(a_s(s).regions_total) == m
}
