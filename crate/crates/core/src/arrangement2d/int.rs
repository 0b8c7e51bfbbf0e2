//! Machine-integer path for configurations with small integer coordinates
//! (after clearing denominators).

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{multiplicity_from_pairs, ArrangementSummary};
use crate::par::Exec;

const COORD_LIMIT: i64 = 1 << 30;

type Triple = (i128, i128, i128);

fn normalize(mut v: Triple) -> Triple {
    let g = v.0.gcd(&v.1).gcd(&v.2);
    if g > 1 {
        v = (v.0 / g, v.1 / g, v.2 / g);
    }
    let lead = if v.0 != 0 { v.0 } else { v.1 };
    if lead < 0 {
        v = (-v.0, -v.1, -v.2);
    }
    v
}

pub(super) fn lines(points: &[Vec<BigInt>]) -> Option<Vec<Triple>> {
    let mut pts = Vec::with_capacity(points.len());
    for p in points {
        let x = p[0].to_i64()?;
        let y = p[1].to_i64()?;
        if x.abs() > COORD_LIMIT || y.abs() > COORD_LIMIT {
            return None;
        }
        pts.push((x as i128, y as i128));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (x1, y1) = pts[i];
            let (x2, y2) = pts[j];
            let l = normalize((
                2 * (x2 - x1),
                2 * (y2 - y1),
                x2 * x2 + y2 * y2 - x1 * x1 - y1 * y1,
            ));
            if seen.insert(l) {
                out.push(l);
            }
        }
    }
    Some(out)
}

fn meet(l: &Triple, m: &Triple) -> Option<Option<Triple>> {
    let det = l.0.checked_mul(m.1)?.checked_sub(m.0.checked_mul(l.1)?)?;
    if det == 0 {
        return Some(None);
    }
    let x = l.2.checked_mul(m.1)?.checked_sub(m.2.checked_mul(l.1)?)?;
    let y = l.0.checked_mul(m.2)?.checked_sub(m.0.checked_mul(l.2)?)?;
    let g = x.gcd(&y).gcd(&det);
    let s = if det < 0 { -g } else { g };
    Some(Some((x / s, y / s, det / s)))
}

pub(super) fn summary(points: &[Vec<BigInt>], exec: Exec) -> Option<ArrangementSummary> {
    let lines = lines(points)?;
    summary_of_lines(&lines, exec)
}

pub(super) fn summary_of_lines(lines: &[Triple], exec: Exec) -> Option<ArrangementSummary> {
    let rows = exec.map_range(0..lines.len(), |i| {
        let mut row = Vec::with_capacity(lines.len() - i);
        for j in i + 1..lines.len() {
            match meet(&lines[i], &lines[j]) {
                Some(Some(v)) => row.push(v),
                Some(None) => {}
                None => return None,
            }
        }
        Some(row)
    });
    let mut counts: HashMap<Triple, usize> = HashMap::new();
    for row in rows {
        for v in row? {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    let dirs: HashSet<(i128, i128)> = lines
        .iter()
        .map(|l| {
            let g = l.0.gcd(&l.1);
            (l.0 / g, l.1 / g)
        })
        .collect();
    Some(ArrangementSummary::from_census(
        lines.len(),
        dirs.len(),
        counts.into_values().map(multiplicity_from_pairs),
    ))
}
