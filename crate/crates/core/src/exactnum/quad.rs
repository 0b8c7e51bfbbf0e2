use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{parse_rational, rational_to_f64, OrderedScalar, Rational, Scalar};
use crate::error::{Error, Result};

/// The real number `a + b·√d` with `d` square-free.
///
/// Values with `b = 0` are stored with `d = 0` so that a rational can be
/// combined with any radical. Combining two different nonzero radicals panics.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    d: u64,
}

pub fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return d == 1;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        if n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

/// Sign of `a + b√d` as -1, 0 or +1.
pub fn sign_quad(x: &QuadExt) -> i8 {
    let sa = sgn(&x.a);
    let sb = sgn(&x.b);
    if sb == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let lhs = &x.a * &x.a;
    let rhs = &x.b * &x.b * Rational::from_integer(BigInt::from(x.d));
    match lhs.cmp(&rhs) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

fn sgn(r: &Rational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

impl QuadExt {
    /// Panics unless `d` is square-free and at least 2 (or `b` is zero).
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            return QuadExt::rational(a);
        }
        assert!(d >= 2 && is_square_free(d), "radicand {d} is not square-free");
        QuadExt { a, b, d }
    }

    pub fn rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
            d: 0,
        }
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), d)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The radicand, or 0 for a rational value.
    pub fn radicand(&self) -> u64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d == 0
    }

    fn joint(&self, other: &Self) -> u64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (d, e) if d == e => d,
            (d, e) => panic!("cannot combine √{d} with √{e}"),
        }
    }

    pub fn conjugate(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b, self.d)
    }

    /// `a² − b²d`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt()
    }
}

impl Scalar for QuadExt {
    fn vanishes(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn zero_like(&self) -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn from_int_like(&self, v: i64) -> Self {
        QuadExt::rational(Rational::from_integer(BigInt::from(v)))
    }
    fn plus(&self, rhs: &Self) -> Self {
        let d = self.joint(rhs);
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b, d)
    }
    fn minus(&self, rhs: &Self) -> Self {
        let d = self.joint(rhs);
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b, d)
    }
    fn times(&self, rhs: &Self) -> Self {
        let d = self.joint(rhs);
        let dr = Rational::from_integer(BigInt::from(d));
        QuadExt::new(
            &self.a * &rhs.a + &self.b * &rhs.b * dr,
            &self.a * &rhs.b + &self.b * &rhs.a,
            d,
        )
    }
    fn over(&self, rhs: &Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero");
        let inv = QuadExt::new(&rhs.a / &n, -&rhs.b / &n, rhs.d);
        self.times(&inv)
    }
    fn negated(&self) -> Self {
        QuadExt::new(-&self.a, -&self.b, self.d)
    }
    fn to_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

impl PartialOrd for QuadExt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadExt {
    fn cmp(&self, other: &Self) -> Ordering {
        sign_quad(&self.minus(other)).cmp(&0)
    }
}

impl OrderedScalar for QuadExt {
    fn from_rational(r: Rational) -> Self {
        QuadExt::rational(r)
    }
    fn signum_i8(&self) -> i8 {
        sign_quad(self)
    }
    fn approx(&self) -> f64 {
        self.to_f64()
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let coeff = |b: &Rational| {
            if b.is_one() {
                String::new()
            } else {
                b.to_string()
            }
        };
        if self.a.is_zero() {
            if (-&self.b).is_one() {
                return write!(f, "-√{}", self.d);
            }
            return write!(f, "{}√{}", coeff(&self.b), self.d);
        }
        if self.b.is_negative() {
            write!(f, "{}-{}√{}", self.a, coeff(&-&self.b), self.d)
        } else {
            write!(f, "{}+{}√{}", self.a, coeff(&self.b), self.d)
        }
    }
}

impl FromStr for QuadExt {
    type Err = Error;

    /// Accepts `a`, `a+b√D`, `a-b√D`, `b√D`, `-√D`, with `sqrt` usable in
    /// place of `√`, an optional `*` before the radical and optional
    /// parentheses around `D`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (head, tail) = match t.find('√') {
            Some(i) => (&t[..i], &t[i + '√'.len_utf8()..]),
            None => match t.find("sqrt") {
                Some(i) => (&t[..i], &t[i + 4..]),
                None => return Ok(QuadExt::rational(parse_rational(&t)?)),
            },
        };
        let bad = || Error::Parse(format!("invalid quadratic value `{s}`"));
        let radicand = tail.trim_start_matches('(').trim_end_matches(')');
        let d: u64 = radicand.parse().map_err(|_| bad())?;
        if d < 2 || !is_square_free(d) {
            return Err(Error::Parse(format!("radicand {d} is not square-free")));
        }
        let head = head.strip_suffix('*').unwrap_or(head);
        let bytes = head.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/');
        let (a_part, b_part) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if a_part.is_empty() {
            Rational::zero()
        } else {
            parse_rational(a_part)?
        };
        let b = match b_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other)?,
        };
        if b.is_zero() {
            return Ok(QuadExt::rational(a));
        }
        Ok(QuadExt::new(a, b, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    fn q(a: Rational, b: Rational, d: u64) -> QuadExt {
        QuadExt::new(a, b, d)
    }

    #[test]
    fn signs() {
        assert_eq!(sign_quad(&q(int(1), int(0), 5)), 1);
        assert_eq!(sign_quad(&q(int(0), int(0), 5)), 0);
        assert_eq!(sign_quad(&q(int(9), int(-4), 5)), 1);
        assert_eq!(sign_quad(&q(int(-9), int(4), 5)), -1);
        assert_eq!(sign_quad(&q(int(2), int(-1), 5)), -1);
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = q(rat(1, 2), rat(1, 2), 5);
        let lhs = phi.times(&phi);
        let rhs = phi.plus(&QuadExt::rational(int(1)));
        assert_eq!(lhs, rhs);
        let inv = QuadExt::rational(int(1)).over(&phi);
        assert_eq!(inv, phi.minus(&QuadExt::rational(int(1))));
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (q(int(1), int(2), 5), "1+2√5"),
            (q(rat(1, 2), rat(-3, 2), 5), "1/2-3/2√5"),
            (q(int(0), int(1), 3), "√3"),
            (q(int(0), int(-1), 3), "-√3"),
            (q(int(-2), int(-1), 2), "-2-√2"),
            (QuadExt::rational(rat(-7, 3)), "-7/3"),
        ];
        for (v, text) in cases {
            assert_eq!(v.to_string(), text);
            assert_eq!(text.parse::<QuadExt>().unwrap(), v);
        }
        assert_eq!("1 + 2*sqrt(5)".parse::<QuadExt>().unwrap(), q(int(1), int(2), 5));
        assert!("1+√4".parse::<QuadExt>().is_err());
        assert!("1+√x".parse::<QuadExt>().is_err());
    }

    #[test]
    #[should_panic]
    fn mixed_radicals_panic() {
        let _ = QuadExt::sqrt(2).plus(&QuadExt::sqrt(3));
    }

    fn quad5() -> impl Strategy<Value = QuadExt> {
        (-60i64..60, 1i64..20, -60i64..60, 1i64..20)
            .prop_map(|(a, ad, b, bd)| QuadExt::new(rat(a, ad), rat(b, bd), 5))
    }

    proptest! {
        #[test]
        fn antisymmetric_and_matches_float(x in quad5()) {
            let s = sign_quad(&x);
            let t = sign_quad(&x.negated());
            prop_assert_eq!(s * t, -(s * s));
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(s, if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn round_trip_text(x in quad5()) {
            prop_assert_eq!(x.to_string().parse::<QuadExt>().unwrap(), x);
        }

        #[test]
        fn field_ops(x in quad5(), y in quad5()) {
            let p = x.times(&y);
            if !y.vanishes() {
                prop_assert_eq!(p.over(&y), x.clone());
            }
            prop_assert_eq!(x.plus(&y).minus(&y), x);
        }
    }
}
