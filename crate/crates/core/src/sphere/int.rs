//! Machine-integer path for central arrangements with small integer normals.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::SphereSummary;
use crate::arrangement2d::multiplicity_from_pairs;
use crate::par::Exec;

const COORD_LIMIT: i64 = 1 << 40;

type Triple = (i128, i128, i128);

fn normalize(mut v: Triple) -> Triple {
    let g = v.0.gcd(&v.1).gcd(&v.2);
    if g > 1 {
        v = (v.0 / g, v.1 / g, v.2 / g);
    }
    let lead = if v.0 != 0 {
        v.0
    } else if v.1 != 0 {
        v.1
    } else {
        v.2
    };
    if lead < 0 {
        v = (-v.0, -v.1, -v.2);
    }
    v
}

fn cross(a: &Triple, b: &Triple) -> Option<Triple> {
    let x = a.1.checked_mul(b.2)?.checked_sub(a.2.checked_mul(b.1)?)?;
    let y = a.2.checked_mul(b.0)?.checked_sub(a.0.checked_mul(b.2)?)?;
    let z = a.0.checked_mul(b.1)?.checked_sub(a.1.checked_mul(b.0)?)?;
    Some(normalize((x, y, z)))
}

pub(super) fn normals(points: &[Vec<BigInt>]) -> Option<Vec<Triple>> {
    let mut pts = Vec::with_capacity(points.len());
    for p in points {
        let mut t = [0i128; 3];
        for (k, c) in p.iter().enumerate() {
            let v = c.to_i64()?;
            if v.abs() > COORD_LIMIT {
                return None;
            }
            t[k] = v as i128;
        }
        pts.push(t);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (p, q) = (pts[i], pts[j]);
            let n = normalize((p[0] - q[0], p[1] - q[1], p[2] - q[2]));
            if seen.insert(n) {
                out.push(n);
            }
        }
    }
    Some(out)
}

pub(super) fn summary(points: &[Vec<BigInt>], exec: Exec) -> Option<SphereSummary> {
    if points.first().is_some_and(|p| p.len() != 3) {
        return None;
    }
    let ns = normals(points)?;
    let rows = exec.map_range(0..ns.len(), |i| {
        let mut row = Vec::with_capacity(ns.len() - i);
        for j in i + 1..ns.len() {
            row.push(cross(&ns[i], &ns[j])?);
        }
        Some(row)
    });
    let mut counts: HashMap<Triple, usize> = HashMap::new();
    for row in rows {
        for v in row? {
            *counts.entry(v).or_insert(0) += 1;
        }
    }
    Some(SphereSummary::from_census(
        ns.len(),
        counts.into_values().map(multiplicity_from_pairs),
    ))
}
