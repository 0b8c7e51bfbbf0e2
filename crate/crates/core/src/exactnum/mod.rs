//! Exact scalars with decidable sign: big rationals, real quadratic
//! extensions, cyclotomic fields (equality only) and exact comparison of
//! sums of square roots.

mod cyclo;
mod quad;
mod sqrt_sum;

use std::fmt::Debug;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use cyclo::{Cyclo, CycloField};
pub use quad::{is_square_free, sign_quad, QuadExt};
pub use sqrt_sum::{cmp_sqrt_sum, cmp_sqrt_sum_int, cmp_sqrt_sum_u64};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p).map_err(|_| bad())?;
            let q = BigInt::from_str(q).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `p/q`, or `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Both parts overflow f64; shift them down together.
        let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
        let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
        let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Field operations needed by the arrangement counters. Only exact equality
/// is required here; ordered fields additionally implement [`OrderedScalar`].
pub trait Scalar: Clone + Eq + Hash + Debug + Send + Sync {
    fn vanishes(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn from_int_like(&self, v: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// Panics when `rhs` is zero.
    fn over(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;
}

/// A totally ordered exact field.
pub trait OrderedScalar: Scalar + Ord {
    fn from_rational(r: Rational) -> Self;
    fn signum_i8(&self) -> i8;
    fn approx(&self) -> f64;
}

impl Scalar for Rational {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn from_int_like(&self, v: i64) -> Self {
        int(v)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Self {
        assert!(!Zero::is_zero(rhs), "division by zero");
        self / rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl OrderedScalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn signum_i8(&self) -> i8 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
    fn approx(&self) -> f64 {
        rational_to_f64(self)
    }
}
