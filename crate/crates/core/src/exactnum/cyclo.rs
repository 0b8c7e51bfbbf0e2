use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, Scalar};

/// The cyclotomic field ℚ(ζ_n), represented as ℚ[x] / Φ_n(x).
///
/// Only equality is decidable (the field is not ordered); it is used to count
/// arrangements whose combinatorics depend on linear dependencies alone.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    n: u32,
    /// Φ_n, lowest degree first, monic.
    modulus: Vec<BigInt>,
}

/// An element of a [`CycloField`], coefficients lowest degree first.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    c: Vec<Rational>,
}

fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            p = exact_div_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

fn exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let coef = r[i + dd].clone();
        if coef.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            r[i + j] -= &coef * dj;
        }
        q[i] = coef;
    }
    debug_assert!(r.iter().all(Zero::is_zero));
    q
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

impl CycloField {
    pub fn new(n: u32) -> Arc<CycloField> {
        assert!(n >= 1, "cyclotomic order must be positive");
        Arc::new(CycloField {
            n,
            modulus: cyclotomic_poly(n),
        })
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    /// φ(n), the dimension over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, p: Vec<Rational>) -> Vec<Rational> {
        let deg = self.degree();
        let mut r = p;
        // Φ_n is monic, so reduction needs no division.
        for i in (deg..r.len()).rev() {
            let coef = std::mem::take(&mut r[i]);
            if coef.is_zero() {
                continue;
            }
            for (j, mj) in self.modulus.iter().enumerate().take(deg) {
                r[i - deg + j] -= &coef * Rational::from_integer(mj.clone());
            }
        }
        r.truncate(deg);
        r.resize(deg, Rational::zero());
        r
    }
}

impl Cyclo {
    pub fn rational(field: &Arc<CycloField>, r: Rational) -> Cyclo {
        let mut c = vec![Rational::zero(); field.degree()];
        if let Some(c0) = c.first_mut() {
            *c0 = r;
        }
        Cyclo {
            field: field.clone(),
            c,
        }
    }

    /// ζ^k, for any integer k.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Cyclo {
        let n = field.n as i64;
        let e = k.rem_euclid(n) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        Cyclo {
            field: field.clone(),
            c: field.reduce(p),
        }
    }

    /// The imaginary unit ζ^(n/4); panics unless 4 divides n.
    pub fn imag_unit(field: &Arc<CycloField>) -> Cyclo {
        assert!(field.n % 4 == 0, "ℚ(ζ_{}) does not contain i", field.n);
        Cyclo::zeta_pow(field, field.n as i64 / 4)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.c
    }

    fn check(&self, other: &Cyclo) {
        assert!(
            self.field.n == other.field.n,
            "cannot combine elements of ℚ(ζ_{}) and ℚ(ζ_{})",
            self.field.n,
            other.field.n
        );
    }

    fn with(&self, c: Vec<Rational>) -> Cyclo {
        Cyclo {
            field: self.field.clone(),
            c,
        }
    }

    pub fn inverse(&self) -> Cyclo {
        assert!(!self.vanishes(), "division by zero");
        // Solve (a·ζ^j)_j x = 1 over ℚ; a is first scaled to integer
        // coefficients so the matrix is integral.
        let deg = self.field.degree();
        let den = super::common_denominator(self.c.iter());
        let mut col: Vec<BigInt> = self.c.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect();
        let mut m = vec![vec![Rational::zero(); deg + 1]; deg];
        for j in 0..deg {
            for i in 0..deg {
                m[i][j] = Rational::from_integer(col[i].clone());
            }
            // multiply by ζ: shift up, then fold the top term with Φ_n
            let top = col.pop().unwrap_or_default();
            col.insert(0, BigInt::zero());
            for (i, mi) in self.field.modulus.iter().enumerate().take(deg) {
                col[i] -= &top * mi;
            }
        }
        m[0][deg] = Rational::one();
        for c in 0..deg {
            let p = (c..deg).find(|&r| !m[r][c].is_zero()).expect("nonzero element is invertible");
            m.swap(c, p);
            let pivot = m[c][c].clone();
            for x in m[c][c..].iter_mut() {
                *x /= &pivot;
            }
            let row = m[c].clone();
            for (r, mr) in m.iter_mut().enumerate() {
                if r == c || mr[c].is_zero() {
                    continue;
                }
                let f = mr[c].clone();
                for (x, y) in mr[c..].iter_mut().zip(&row[c..]) {
                    *x -= &f * y;
                }
            }
        }
        let d = Rational::from_integer(den);
        self.with(m.into_iter().map(|r| &r[deg] * &d).collect())
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.c == other.c
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.c.hash(state);
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| match i {
                0 => x.to_string(),
                1 => format!("{x}·ζ"),
                _ => format!("{x}·ζ^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl Scalar for Cyclo {
    fn vanishes(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }
    fn zero_like(&self) -> Self {
        Cyclo::rational(&self.field, Rational::zero())
    }
    fn from_int_like(&self, v: i64) -> Self {
        Cyclo::rational(&self.field, Rational::from_integer(BigInt::from(v)))
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(self.c.iter().zip(&rhs.c).map(|(a, b)| a + b).collect())
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.check(rhs);
        self.with(self.c.iter().zip(&rhs.c).map(|(a, b)| a - b).collect())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let p = poly_mul(&self.c, &rhs.c);
        self.with(self.field.reduce(p))
    }
    fn over(&self, rhs: &Self) -> Self {
        self.times(&rhs.inverse())
    }
    fn negated(&self) -> Self {
        self.with(self.c.iter().map(|a| -a).collect())
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.c.iter().skip(1).all(Zero::is_zero) {
            Some(self.c.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }
}
