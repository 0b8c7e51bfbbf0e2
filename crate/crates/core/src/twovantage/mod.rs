//! Orderings by the sum of distances to two vantage points.
//!
//! Comparisons are exact: `√a + √b` against `√c + √d` for squared distances.
//! In the plane the set of achievable orderings is explored by seeded
//! sampling; the result is always a lower bound.

mod sample;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{cmp_sqrt_sum, rat, Rational};
use crate::geometry::{dist2, ordering_from_vantage, Point, PointConfig, PointOrdering};

pub use sample::{
    collinear_checks, line_positions, sample_two_vantage_orderings, CollinearReport, SampleRun, SamplerSpec,
};

/// Two vantage points in the space of the configuration. They may coincide,
/// in which case the ordering is the single-vantage one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VantagePair {
    pub v1: Point<Rational>,
    pub v2: Point<Rational>,
}

impl VantagePair {
    pub fn new(v1: Point<Rational>, v2: Point<Rational>) -> Result<Self> {
        if v1.len() != v2.len() {
            return Err(Error::DimensionMismatch {
                expected: v1.len(),
                found: v2.len(),
            });
        }
        Ok(VantagePair { v1, v2 })
    }

    /// On the line.
    pub fn line(a: Rational, b: Rational) -> Self {
        VantagePair {
            v1: vec![a],
            v2: vec![b],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.v1 == self.v2
    }
}

/// Ranks points by `d(V1, P) + d(V2, P)`; equal sums form tie blocks.
pub fn ordering_two_vantage(s: &PointConfig<Rational>, vp: &VantagePair) -> Result<PointOrdering> {
    for v in [&vp.v1, &vp.v2] {
        if v.len() != s.dim() {
            return Err(Error::DimensionMismatch {
                expected: s.dim(),
                found: v.len(),
            });
        }
    }
    let d: Vec<(Rational, Rational)> = s
        .points()
        .iter()
        .map(|p| (dist2(p, &vp.v1), dist2(p, &vp.v2)))
        .collect();
    Ok(PointOrdering::by_comparator(s.len(), |i, j| {
        cmp_sqrt_sum(&d[i].0, &d[i].1, &d[j].0, &d[j].1).cmp(&0)
    }))
}

/// How two points on the line can tie for two vantage points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TieKind {
    /// Both points lie between the vantage points; each sum is `|V1 V2|`.
    Containment,
    /// The two segments share their midpoint.
    Midpoint,
    None,
}

/// Classifies the pair `(p_i, p_j)` against `(v1, v2)`. Order within each pair
/// does not matter; points at an endpoint count as contained.
pub fn classify_tie_1d(pi: &Rational, pj: &Rational, v1: &Rational, v2: &Rational) -> TieKind {
    let (lo, hi) = if v1 <= v2 { (v1, v2) } else { (v2, v1) };
    let inside = |p: &Rational| lo <= p && p <= hi;
    if pi != pj && inside(pi) && inside(pj) {
        TieKind::Containment
    } else if pi != pj && pi + pj == v1 + v2 {
        TieKind::Midpoint
    } else {
        TieKind::None
    }
}

/// The single vantage point `(V1 + V2)/2` that reproduces a tie-free
/// two-vantage ordering on the line.
pub fn reduce_to_single_1d(s: &PointConfig<Rational>, vp: &VantagePair) -> Result<Rational> {
    if s.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: s.dim(),
        });
    }
    let two = ordering_two_vantage(s, vp)?;
    if !two.is_strict() {
        return Err(Error::TiesPresent);
    }
    let v = (&vp.v1[0] + &vp.v2[0]) * rat(1, 2);
    let one = ordering_from_vantage(s, std::slice::from_ref(&v))?;
    if one != two {
        return Err(Error::Hypothesis(format!("midpoint {v} gives {one}, pair gives {two}")));
    }
    Ok(v)
}

/// Increase/decrease pattern of line positions along an ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpDownSeq(Vec<bool>);

impl UpDownSeq {
    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for UpDownSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for UpDownSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!("not a binary word: {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(UpDownSeq)
    }
}

/// Up-down word of a strict ordering whose indices are line positions.
pub fn updown(o: &PointOrdering) -> Result<UpDownSeq> {
    if !o.is_strict() {
        return Err(Error::TiesPresent);
    }
    Ok(updown_of(&o.ranks()))
}

/// Up-down word of a sequence of positions.
pub fn updown_of(seq: &[usize]) -> UpDownSeq {
    UpDownSeq(seq.windows(2).map(|w| w[1] > w[0]).collect())
}

/// A word is valid when, once its final maximal run is dropped, a doubled 0
/// and a doubled 1 do not both occur.
pub fn is_velo_valid(seq: &UpDownSeq) -> bool {
    let b = &seq.0;
    let Some(&last) = b.last() else { return true };
    let mut end = b.len();
    while end > 0 && b[end - 1] == last {
        end -= 1;
    }
    let head = &b[..end];
    let has = |v: bool| head.windows(2).any(|w| w[0] == v && w[1] == v);
    !(has(false) && has(true))
}

/// Whether every prefix of the ordering is an interval of positions.
pub fn contiguity_check(o: &PointOrdering) -> bool {
    contiguous(&o.ranks())
}

pub(crate) fn contiguous(seq: &[usize]) -> bool {
    let Some(&first) = seq.first() else { return true };
    let (mut lo, mut hi) = (first, first);
    for (k, &x) in seq.iter().enumerate().skip(1) {
        lo = lo.min(x);
        hi = hi.max(x);
        if hi - lo != k {
            return false;
        }
    }
    true
}

/// Number of binary words of length `n − 1` accepted by [`is_velo_valid`],
/// by enumeration.
pub fn count_velo_valid(n: usize) -> u64 {
    let len = n.saturating_sub(1);
    assert!(len < 32, "word length too large to enumerate");
    (0u64..1 << len)
        .filter(|&m| is_velo_valid(&UpDownSeq((0..len).map(|k| m >> k & 1 == 1).collect())))
        .count() as u64
}

fn sum_1d(p: &Rational, vp: (&Rational, &Rational)) -> Rational {
    (p - vp.0).abs() + (p - vp.1).abs()
}

/// Exact comparison of the two sums on the line.
pub fn cmp_1d(pi: &Rational, pj: &Rational, v1: &Rational, v2: &Rational) -> Ordering {
    let a = sum_1d(pi, (v1, v2));
    let b = sum_1d(pj, (v1, v2));
    a.cmp(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;

    #[test]
    fn the_permutation_example() {
        let seq: Vec<usize> = "546732891".bytes().map(|c| (c - b'0') as usize).collect();
        assert_eq!(updown_of(&seq).to_string(), "01100110");
    }

    #[test]
    fn velo_words() {
        assert!(is_velo_valid(&"11011101000".parse().unwrap()));
        assert!(!is_velo_valid(&"10001100".parse().unwrap()));
        assert!(is_velo_valid(&"".parse().unwrap()));
    }

    #[test]
    fn contiguity() {
        assert!(contiguity_check(&PointOrdering::strict(vec![2, 1, 3, 0, 4])));
        assert!(!contiguity_check(&PointOrdering::strict(vec![0, 2, 1])));
    }

    #[test]
    fn ties_on_the_line() {
        let (a, b, c, d) = (int(2), int(3), int(1), int(4));
        assert_eq!(classify_tie_1d(&a, &b, &c, &d), TieKind::Containment);
        assert_eq!(classify_tie_1d(&int(0), &int(4), &int(1), &int(3)), TieKind::Midpoint);
        assert_eq!(classify_tie_1d(&int(0), &int(4), &int(1), &int(2)), TieKind::None);
        assert_eq!(cmp_1d(&int(0), &int(4), &int(1), &int(3)), Ordering::Equal);
    }
}
