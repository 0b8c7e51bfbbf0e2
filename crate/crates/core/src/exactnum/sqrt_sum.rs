use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::{common_denominator, Rational};

/// Sign of `(√a + √b) − (√c + √d)` for non-negative rationals.
///
/// Panics on a negative argument.
pub fn cmp_sqrt_sum(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> i8 {
    for v in [a, b, c, d] {
        assert!(!v.is_negative(), "square root of a negative value");
    }
    // Scaling every radicand by the same positive integer preserves the sign.
    let l = Rational::from_integer(common_denominator([a, b, c, d]));
    let z = |v: &Rational| (v * &l).to_integer();
    cmp_sqrt_sum_int(&z(a), &z(b), &z(c), &z(d))
}

/// Integer version of [`cmp_sqrt_sum`].
pub fn cmp_sqrt_sum_int(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> i8 {
    if let (Some(a), Some(b), Some(c), Some(d)) = (a.to_u64(), b.to_u64(), c.to_u64(), d.to_u64()) {
        return cmp_sqrt_sum_u64(a, b, c, d);
    }
    for v in [a, b, c, d] {
        assert!(!v.is_negative(), "square root of a negative value");
    }
    if let Some(s) = float_filter(
        a.to_f64().unwrap_or(f64::INFINITY),
        b.to_f64().unwrap_or(f64::INFINITY),
        c.to_f64().unwrap_or(f64::INFINITY),
        d.to_f64().unwrap_or(f64::INFINITY),
    ) {
        return s;
    }
    sign_big(a, b, c, d)
}

/// Machine-integer version of [`cmp_sqrt_sum`]: float filter, then 128-bit
/// checked arithmetic, then big integers.
pub fn cmp_sqrt_sum_u64(a: u64, b: u64, c: u64, d: u64) -> i8 {
    if let Some(s) = float_filter(a as f64, b as f64, c as f64, d as f64) {
        return s;
    }
    if let Some(s) = sign_i128(a as i128, b as i128, c as i128, d as i128) {
        return s;
    }
    sign_big(&a.into(), &b.into(), &c.into(), &d.into())
}

fn float_filter(a: f64, b: f64, c: f64, d: f64) -> Option<i8> {
    let (ra, rb, rc, rd) = (a.sqrt(), b.sqrt(), c.sqrt(), d.sqrt());
    let diff = (ra + rb) - (rc + rd);
    let scale = ra + rb + rc + rd;
    if !diff.is_finite() || !scale.is_finite() {
        return None;
    }
    if diff.abs() > 1e-9 * scale {
        Some(if diff > 0.0 { 1 } else { -1 })
    } else {
        None
    }
}

fn sign_i128(a: i128, b: i128, c: i128, d: i128) -> Option<i8> {
    let e = a.checked_add(b)?.checked_sub(c.checked_add(d)?)?;
    let u = a.checked_mul(b)?.checked_mul(4)?;
    let v = c.checked_mul(d)?.checked_mul(4)?;
    if e >= 0 {
        sign_pos_i128(u, e, v)
    } else {
        sign_pos_i128(v, -e, u).map(|s| -s)
    }
}

/// Sign of `√u + e − √v` for `e ≥ 0`.
fn sign_pos_i128(u: i128, e: i128, v: i128) -> Option<i8> {
    let f = u.checked_add(e.checked_mul(e)?)?.checked_sub(v)?;
    if f >= 0 {
        return Some(if f > 0 || (e > 0 && u > 0) { 1 } else { 0 });
    }
    let lhs = e.checked_mul(e)?.checked_mul(4)?.checked_mul(u)?;
    let rhs = f.checked_mul(f)?;
    Some((lhs.cmp(&rhs)) as i8)
}

fn sign_big(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) -> i8 {
    let e = a + b - c - d;
    let u = a * b * 4;
    let v = c * d * 4;
    if !e.is_negative() {
        sign_pos_big(&u, &e, &v)
    } else {
        -sign_pos_big(&v, &-e, &u)
    }
}

fn sign_pos_big(u: &BigInt, e: &BigInt, v: &BigInt) -> i8 {
    let f = u + e * e - v;
    if !f.is_negative() {
        let pos = f.sign() == Sign::Plus || (!e.is_zero() && !u.is_zero());
        return pos as i8;
    }
    let lhs: BigInt = e * e * u * 4;
    let rhs = &f * &f;
    lhs.cmp(&rhs) as i8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn documented_cases() {
        assert_eq!(cmp_sqrt_sum(&int(4), &int(9), &int(25), &int(0)), 0);
        assert_eq!(cmp_sqrt_sum(&int(2), &int(2), &int(8), &int(0)), 0);
        assert_eq!(cmp_sqrt_sum(&int(2), &int(3), &int(5), &int(0)), 1);
        assert_eq!(cmp_sqrt_sum(&int(5), &int(0), &int(2), &int(3)), -1);
        assert_eq!(cmp_sqrt_sum(&rat(1, 4), &rat(1, 9), &rat(25, 36), &int(0)), 0);
    }

    #[test]
    fn near_ties_resolved_exactly() {
        // √(n) + √(n+2) vs 2√(n+1): always strictly less, gap shrinks like n^(-3/2).
        for n in [10u64, 1_000, 1_000_000, 1 << 40, u64::MAX / 8] {
            assert_eq!(cmp_sqrt_sum_u64(n, n + 2, n + 1, n + 1), -1, "n = {n}");
            let nb = BigInt::from(n) * BigInt::from(n);
            let s = cmp_sqrt_sum_int(&nb, &(&nb + 2), &(&nb + 1), &(&nb + 1));
            assert_eq!(s, -1);
        }
        // 2√2 vs √8 stays tied under a large common factor.
        let k = BigInt::from(10u64).pow(30);
        assert_eq!(cmp_sqrt_sum_int(&(&k * 2), &(&k * 2), &(&k * 8), &BigInt::zero()), 0);
    }

    /// Reference: each side as an exact comparison via the big-integer path only.
    fn oracle(a: u64, b: u64, c: u64, d: u64) -> i8 {
        sign_big(&a.into(), &b.into(), &c.into(), &d.into())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]
        #[test]
        fn fast_path_agrees_with_big_path(a in 0u64..400, b in 0u64..400, c in 0u64..400, d in 0u64..400) {
            prop_assert_eq!(cmp_sqrt_sum_u64(a, b, c, d), oracle(a, b, c, d));
            prop_assert_eq!(cmp_sqrt_sum_u64(c, d, a, b), -oracle(a, b, c, d));
        }

        #[test]
        fn agrees_with_float_when_separated(a in 0u64..1u64<<40, b in 0u64..1u64<<40, c in 0u64..1u64<<40, d in 0u64..1u64<<40) {
            let diff = ((a as f64).sqrt() + (b as f64).sqrt()) - ((c as f64).sqrt() + (d as f64).sqrt());
            let s = cmp_sqrt_sum_u64(a, b, c, d);
            prop_assert_eq!(s, oracle(a, b, c, d));
            if diff.abs() > 1e-3 {
                prop_assert_eq!(s, if diff > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn square_multiples_tie(p in 0u64..50, q in 0u64..50, m in 1u64..50) {
            // √(p²m) + √(q²m) = √((p+q)²m)
            prop_assert_eq!(cmp_sqrt_sum_u64(p * p * m, q * q * m, (p + q) * (p + q) * m, 0), 0);
        }
    }
}
