//! Closed-form counts: Stirling sums, extremes in the line, plane and sphere,
//! gadget counts, the free-sum increment and the Fibonacci-type bound.
//!
//! Every polynomial with a denominator goes through [`exact_div`], which
//! panics on a nonzero remainder.

mod tables;

use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use tables::{render_tables, TableFormat};

static STIRLING: RwLock<Vec<Vec<BigInt>>> = RwLock::new(Vec::new());

fn b(v: u64) -> BigInt {
    BigInt::from(v)
}

/// `num / den`, panicking unless the division is exact.
pub fn exact_div(num: BigInt, den: i64) -> BigInt {
    let (q, r) = num.div_rem(&BigInt::from(den));
    assert!(r.is_zero(), "inexact division of {num} by {den}");
    q
}

/// Unsigned Stirling number of the first kind; 0 outside `1 ≤ k ≤ n`
/// except `s(0, 0) = 1`.
pub fn stirling1(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let n_us = n as usize;
    {
        let t = STIRLING.read().expect("stirling table");
        if t.len() > n_us {
            return t[n_us][k as usize].clone();
        }
    }
    let mut t = STIRLING.write().expect("stirling table");
    if t.is_empty() {
        t.push(vec![BigInt::one()]);
    }
    while t.len() <= n_us {
        let m = t.len();
        let prev = &t[m - 1];
        let mut row = vec![BigInt::zero(); m + 1];
        for (j, slot) in row.iter_mut().enumerate().skip(1) {
            let mut v = prev[j - 1].clone();
            if j < m {
                v += &prev[j] * BigInt::from(m - 1);
            }
            *slot = v;
        }
        t.push(row);
    }
    t[n_us][k as usize].clone()
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * b(n - i) / b(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * b(i))
}

/// M(n, d) = s(n, n) + s(n, n−1) + … + s(n, n−d), the number of orderings of
/// n freely placed points seen from ℝ^d.
pub fn max_orderings(n: u64, d: u64) -> BigInt {
    assert!(n >= 1, "at least one point is needed");
    (0..=d.min(n - 1)).map(|i| stirling1(n, n - i)).sum()
}

/// M(n, 2) through its quartic: (3n⁴ − 10n³ + 21n² − 14n + 24) / 24.
pub fn planar_max_poly(n: u64) -> BigInt {
    let n = b(n);
    let num = 3 * n.pow(4) - 10 * n.pow(3) + 21 * n.pow(2) - 14 * &n + 24;
    exact_div(num, 24)
}

/// The minimum 2n − 2, the same in every dimension.
pub fn min_orderings(n: u64) -> Result<BigInt> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("minimum needs n ≥ 2, got {n}")));
    }
    Ok(b(2 * n - 2))
}

/// New regions created by a free union of s and t points:
/// (3s²t² + 2s³t − 5s²t + 2st³ − 5st² + 7st − 4) / 4.
pub fn free_sum_increment(s: u64, t: u64) -> BigInt {
    let (s, t) = (b(s), b(t));
    let num = 3 * s.pow(2) * t.pow(2) + 2 * s.pow(3) * &t - 5 * s.pow(2) * &t + 2 * &s * t.pow(3)
        - 5 * &s * t.pow(2)
        + 7 * &s * &t
        - 4;
    exact_div(num, 4)
}

/// Count of the 2k-point configuration with k − 1 forced parallel pairs.
pub fn trapezoid_count(k: u64) -> BigInt {
    assert!(k >= 1);
    max_orderings(2 * k, 2) - b(k) + 1
}

/// Count of the free-sum construction with k lost regions: M(n) − k.
pub fn near_max_count(n: u64, k: u64) -> BigInt {
    max_orderings(n, 2) - b(k)
}

/// `kl` points on `l` lines (k per line), no further coincidences:
/// (3k⁴l⁴ − 10k³l³ + 21k²l² − 3k⁴l + 10k³l − 9k²l − 12kl + 24) / 24.
pub fn parallel_lines_only_count(k: u64, l: u64) -> BigInt {
    let (k, l) = (b(k), b(l));
    let num = 3 * k.pow(4) * l.pow(4) - 10 * k.pow(3) * l.pow(3) + 21 * k.pow(2) * l.pow(2)
        - 3 * k.pow(4) * &l
        + 10 * k.pow(3) * &l
        - 9 * k.pow(2) * &l
        - 12 * &k * &l
        + 24;
    exact_div(num, 24)
}

/// The degree-4 polynomial for `m` free points plus `kl` points on `l` lines.
pub fn parallel_gadget_poly(m: u64, k: u64, l: u64) -> BigInt {
    let (m, k, l) = (b(m), b(k), b(l));
    let (k2, k3, k4) = (k.pow(2), k.pow(3), k.pow(4));
    let (l2, l3, l4) = (l.pow(2), l.pow(3), l.pow(4));
    let num = 18 * &k2 * &l2 * m.pow(2) + 12 * &k3 * &l3 * &m - 30 * &k2 * &l2 * &m + 3 * &k4 * &l4
        - 10 * &k3 * &l3
        + 21 * &k2 * &l2
        - 3 * &k4 * &l
        + 10 * &k3 * &l
        - 9 * &k2 * &l
        + 12 * &k * &l * m.pow(3)
        - 30 * &k * &l * m.pow(2)
        + 42 * &k * &l * &m
        - 12 * &k * &l
        + 3 * m.pow(4)
        - 10 * m.pow(3)
        + 21 * m.pow(2)
        - 14 * &m
        + 24;
    exact_div(num, 24)
}

/// s(k, k−2) = 2·C(k,3) + 3·C(k,4).
pub fn stirling_k_km2(k: u64) -> BigInt {
    2 * binomial(k, 3) + 3 * binomial(k, 4)
}

/// Both closed forms for the parallel-lines gadget with `m` free points,
/// `l` lines and `k` points per line: the quartic and M(n) − l·s(k, k−2).
/// Errors if they disagree or the parameters are out of range.
pub fn parallel_gadget_count(m: u64, k: u64, l: u64) -> Result<(BigInt, BigInt)> {
    if k < 2 || l < 1 {
        return Err(Error::InvalidParameter(format!(
            "parallel-lines gadget needs k ≥ 2 and l ≥ 1 (k = {k}, l = {l})"
        )));
    }
    let n = m + k * l;
    let poly = parallel_gadget_poly(m, k, l);
    let closed = max_orderings(n, 2) - b(l) * stirling_k_km2(k);
    if poly != closed {
        return Err(Error::Hypothesis(format!(
            "closed forms disagree for m = {m}, k = {k}, l = {l}: {poly} vs {closed}"
        )));
    }
    Ok((poly, closed))
}

/// M(n) − k·s(k, k−2), kept for comparison; it agrees with the quartic only
/// when l = k or s(k, k−2) = 0.
pub fn parallel_gadget_k_form(m: u64, k: u64, l: u64) -> BigInt {
    max_orderings(m + k * l, 2) - b(k) * stirling_k_km2(k)
}

/// `k` concyclic points among `n`: M(n) − M(k) + k(k − 1).
pub fn circle_gadget_count(n: u64, k: u64) -> BigInt {
    assert!(k >= 1 && k <= n);
    max_orderings(n, 2) - max_orderings(k, 2) + b(k * (k - 1))
}

/// The quartic form of [`circle_gadget_count`].
pub fn circle_gadget_poly(n: u64, k: u64) -> BigInt {
    let (n, k) = (b(n), b(k));
    let num = 3 * n.pow(4) - 10 * n.pow(3) + 21 * n.pow(2) - 14 * &n - 3 * k.pow(4) + 10 * k.pow(3)
        + 3 * k.pow(2)
        - 10 * &k;
    exact_div(num, 24)
}

/// Maximum on the sphere: (3n⁴ − 10n³ + 9n² − 2n + 24) / 12 for n ≥ 2.
pub fn sphere_max(n: u64) -> BigInt {
    if n <= 1 {
        return BigInt::one();
    }
    let n = b(n);
    exact_div(3 * n.pow(4) - 10 * n.pow(3) + 9 * n.pow(2) - 2 * &n + 24, 12)
}

/// Minimum on the sphere, 2n, for n ≥ 4.
pub fn sphere_min(n: u64) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("sphere minimum formula needs n ≥ 4, got {n}")));
    }
    Ok(b(2 * n))
}

/// Regions of a doubled free hemisphere configuration: (3n⁴ − 4n³ + n + 6) / 3.
pub fn sphere_doubled_count(n: u64) -> BigInt {
    let n = b(n);
    exact_div(3 * n.pow(4) - 4 * n.pow(3) + &n + 6, 3)
}

/// Vertex census (v₄, v₆, v₈) of a doubled free configuration, counting both
/// members of each antipodal pair.
pub fn doubled_census(n: u64) -> (BigInt, BigInt, BigInt) {
    (
        24 * binomial(n, 4) + 12 * binomial(n, 3),
        8 * binomial(n, 3),
        2 * binomial(n, 2),
    )
}

/// 2 + v₄ + 2v₆ + 3v₈.
pub fn doubled_from_census(n: u64) -> BigInt {
    let (v4, v6, v8) = doubled_census(n);
    2 + v4 + 2 * v6 + 3 * v8
}

/// Maximum regions of k lines: (k² + k + 2) / 2.
pub fn line_regions(k: u64) -> BigInt {
    let k = b(k);
    exact_div(k.pow(2) + &k + 2, 2)
}

/// M(n, 2) / L(C(n, 2)), which tends to 1.
pub fn ratio_to_free(n: u64) -> f64 {
    let m = max_orderings(n, 2).to_f64().unwrap_or(f64::NAN);
    let l = line_regions(n * (n - 1) / 2).to_f64().unwrap_or(f64::NAN);
    m / l
}

/// F_k with F_1 = F_2 = 1, F_0 = 0.
pub fn fibonacci(k: u64) -> BigInt {
    let (mut a, mut bb) = (BigInt::zero(), BigInt::one());
    for _ in 0..k {
        let next = &a + &bb;
        a = std::mem::replace(&mut bb, next);
    }
    a
}

/// c_n = 2(F_{n+2} − n): the number of binary words of length n − 1 in which
/// a doubled 0 and a doubled 1 do not both occur before the final run.
pub fn velo_bound(n: u64) -> BigInt {
    2 * (fibonacci(n + 2) - b(n))
}

/// c_{n−1}.
pub fn velo_bound_prev(n: u64) -> BigInt {
    assert!(n >= 2);
    velo_bound(n - 1)
}

/// 2^(n−1), the bound for collinear configurations and two vantage points.
pub fn collinear_two_vantage_bound(n: u64) -> BigInt {
    BigInt::one() << (n.saturating_sub(1) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn i(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn stirling_basics() {
        assert_eq!(stirling1(0, 0), i(1));
        assert_eq!(stirling1(4, 2), i(11));
        assert_eq!(stirling1(5, 3), i(35));
        assert_eq!(stirling1(3, 5), i(0));
        for n in 1..=12u64 {
            let row: BigInt = (0..=n).map(|k| stirling1(n, k)).sum();
            assert_eq!(row, factorial(n));
            assert_eq!(stirling1(n, 1), factorial(n - 1));
            assert_eq!(stirling1(n, n), i(1));
            assert_eq!(max_orderings(n, n - 1), factorial(n));
        }
        for k in 2..=15 {
            assert_eq!(stirling_k_km2(k), stirling1(k, k - 2));
        }
    }

    #[test]
    fn maxima() {
        let table = [(3, 6), (4, 18), (5, 46), (6, 101), (7, 197), (8, 351)];
        for (n, m) in table {
            assert_eq!(max_orderings(n, 2), i(m));
        }
        for n in 1..=30 {
            assert_eq!(planar_max_poly(n), max_orderings(n, 2));
            let n_b = b(n);
            assert_eq!(max_orderings(n, 1), (&n_b * &n_b - &n_b + 2) / 2);
        }
        assert_eq!(max_orderings(4, 1), i(7));
        for d in 1..6 {
            assert_eq!(max_orderings(2, d), i(2));
        }
    }

    #[test]
    fn quartic_in_n_for_fixed_d() {
        // For n ≥ 2d, M(n, d) agrees with a polynomial of degree 2d: the
        // (2d+1)-th finite difference vanishes.
        for d in 1..=3u64 {
            let vals: Vec<BigInt> = (2 * d..2 * d + 4 * d + 4).map(|n| max_orderings(n, d)).collect();
            let mut diff = vals;
            for _ in 0..=2 * d {
                diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
            }
            assert!(diff.iter().all(Zero::is_zero), "d = {d}");
        }
    }

    #[test]
    fn minima() {
        assert_eq!(min_orderings(8).unwrap(), i(14));
        assert_eq!(min_orderings(2).unwrap(), i(2));
        assert_eq!(min_orderings(5).unwrap(), i(8));
        assert!(min_orderings(1).is_err());
    }

    #[test]
    fn free_sums() {
        assert_eq!(free_sum_increment(2, 2), i(14));
        assert_eq!(free_sum_increment(1, 1), i(0));
        for n in 2..=12 {
            for k in 1..n {
                assert_eq!(
                    max_orderings(k, 2) + max_orderings(n - k, 2) + free_sum_increment(k, n - k),
                    max_orderings(n, 2)
                );
            }
        }
    }

    #[test]
    fn gadgets() {
        assert_eq!(trapezoid_count(2), i(17));
        assert_eq!(trapezoid_count(1), i(2));
        assert_eq!(trapezoid_count(3), i(99));
        assert_eq!(parallel_gadget_poly(0, 2, 1), i(2));
        assert_eq!(parallel_lines_only_count(3, 1), i(4));
        assert_eq!(parallel_gadget_poly(0, 3, 1), i(4));
        for m in 0..=5 {
            for k in 2..=5 {
                for l in 1..=3 {
                    let (p, c) = parallel_gadget_count(m, k, l).unwrap();
                    assert_eq!(p, c);
                    if m == 0 {
                        assert_eq!(p, parallel_lines_only_count(k, l));
                    }
                }
            }
        }
        // three collinear points among free ones lose exactly two regions
        for n in 3..=10 {
            let (p, _) = parallel_gadget_count(n - 3, 3, 1).unwrap();
            assert_eq!(p, max_orderings(n, 2) - 2);
        }
        assert!(parallel_gadget_count(0, 1, 1).is_err());
        for n in 2..=12 {
            for k in 2..=n {
                assert_eq!(circle_gadget_count(n, k), circle_gadget_poly(n, k));
            }
            assert_eq!(circle_gadget_count(n, n), b(n * (n - 1)));
            assert_eq!(circle_gadget_count(n, 2), max_orderings(n, 2));
        }
        assert_eq!(circle_gadget_count(5, 4), i(40));
    }

    #[test]
    fn sphere_formulas() {
        let table = [(4, 24), (6, 172), (8, 646), (12, 3852), (20, 33632)];
        for (n, m) in table {
            assert_eq!(sphere_max(n), i(m));
            assert_eq!(sphere_min(n).unwrap(), i(2 * n as i64));
        }
        assert_eq!(sphere_doubled_count(3), i(48));
        assert_eq!(sphere_doubled_count(4), i(174));
        for n in 3..=20 {
            assert_eq!(doubled_from_census(n), sphere_doubled_count(n));
            // twice the number of bounded planar regions plus the unbounded ones
            let c2 = binomial(n, 2);
            assert_eq!(sphere_max(n), &c2 * 2 + 2 * (max_orderings(n, 2) - 2 * &c2));
        }
        let r = sphere_doubled_count(50).to_f64().unwrap() / sphere_max(100).to_f64().unwrap();
        assert!((r - 0.25).abs() < 0.25 * 0.05, "ratio {r}");
    }

    #[test]
    fn lines_and_ratio() {
        assert_eq!(line_regions(0), i(1));
        assert_eq!(line_regions(1), i(2));
        assert_eq!(line_regions(6), i(22));
        // 1 − ratio behaves like 4/(3n)
        assert!((ratio_to_free(100) - 0.986804).abs() < 1e-6);
        assert!((ratio_to_free(1000) - 1.0).abs() < 2e-3);
        assert!(ratio_to_free(50) < ratio_to_free(100));
    }

    #[test]
    fn fibonacci_bound() {
        assert_eq!(fibonacci(1), i(1));
        assert_eq!(fibonacci(2), i(1));
        assert_eq!(fibonacci(12), i(144));
        let b_n = [2, 4, 8, 16, 30, 54, 94, 160, 268];
        for (n, v) in (2..=10).zip(b_n) {
            assert_eq!(velo_bound(n), i(v));
        }
        assert_eq!(velo_bound_prev(7), i(30));
        assert_eq!(collinear_two_vantage_bound(6), i(32));
    }
}
