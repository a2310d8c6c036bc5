//! The coefficient field Q(sqrt(2)).
//!
//! sqrt(2) is adjoined as a field extension rather than an indeterminate so
//! that 1/sqrt(2), ubiquitous in the basis changes, is exactly invertible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element a + b*sqrt(2) with a, b rational.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadRational {
    a: BigRational,
    b: BigRational,
}

impl QuadRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QuadRational { a, b }
    }

    pub fn zero() -> Self {
        QuadRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        QuadRational::new(BigRational::one(), BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        QuadRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        QuadRational::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Panics if `d == 0`; callers only pass literal nonzero denominators.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        QuadRational::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_rational(a: BigRational) -> Self {
        QuadRational::new(a, BigRational::zero())
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The Galois conjugate a - b*sqrt(2).
    pub fn conjugate(&self) -> Self {
        QuadRational::new(self.a.clone(), -self.b.clone())
    }

    /// The field norm a^2 - 2b^2; zero exactly when the element is zero
    /// (sqrt(2) is irrational).
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    /// Multiplicative inverse: (a + b*sqrt2)^-1 = (a - b*sqrt2) / (a^2 - 2b^2).
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadRational::new(&self.a / &n, -&self.b / &n))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        QuadRational::new(&self.a * q, &self.b * q)
    }

    /// Exact square root of a rational within the field, when one exists.
    ///
    /// With q = n/d in lowest terms, sqrt(q) = sqrt(nd)/d, so q has a root
    /// here exactly when nd is a perfect square (rational root) or twice one
    /// (root of the form r*sqrt2). Returns the nonnegative root.
    pub fn sqrt_of_rational(q: &BigRational) -> Option<Self> {
        if q.is_zero() {
            return Some(QuadRational::zero());
        }
        if q.is_negative() {
            return None;
        }
        let t = q.numer() * q.denom();
        let r = t.sqrt();
        if &r * &r == t {
            return Some(QuadRational::from_rational(BigRational::new(
                r,
                q.denom().clone(),
            )));
        }
        let half: BigInt = &t / BigInt::from(2);
        let r = half.sqrt();
        if &r * &r * BigInt::from(2) == t {
            return Some(QuadRational::new(
                BigRational::zero(),
                BigRational::new(r, q.denom().clone()),
            ));
        }
        None
    }
}

impl Add for &QuadRational {
    type Output = QuadRational;
    fn add(self, rhs: &QuadRational) -> QuadRational {
        QuadRational::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &QuadRational {
    type Output = QuadRational;
    fn sub(self, rhs: &QuadRational) -> QuadRational {
        QuadRational::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &QuadRational {
    type Output = QuadRational;
    fn mul(self, rhs: &QuadRational) -> QuadRational {
        // (a + b√2)(c + d√2) = (ac + 2bd) + (ad + bc)√2
        let two = BigRational::from_integer(BigInt::from(2));
        QuadRational::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        QuadRational::new(-self.a.clone(), -self.b.clone())
    }
}

impl Add for QuadRational {
    type Output = QuadRational;
    fn add(self, rhs: QuadRational) -> QuadRational {
        &self + &rhs
    }
}

impl Sub for QuadRational {
    type Output = QuadRational;
    fn sub(self, rhs: QuadRational) -> QuadRational {
        &self - &rhs
    }
}

impl Mul for QuadRational {
    type Output = QuadRational;
    fn mul(self, rhs: QuadRational) -> QuadRational {
        &self * &rhs
    }
}

impl Neg for QuadRational {
    type Output = QuadRational;
    fn neg(self) -> QuadRational {
        -&self
    }
}

fn fmt_rational_times_sqrt2(b: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if b.is_one() {
        write!(f, "sqrt2")
    } else if (-b).is_one() {
        write!(f, "-sqrt2")
    } else {
        write!(f, "{b}*sqrt2")
    }
}

impl fmt::Display for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            fmt_rational_times_sqrt2(&self.b, f)
        } else if self.b.is_negative() {
            write!(f, "{} - ", self.a)?;
            fmt_rational_times_sqrt2(&-&self.b, f)
        } else {
            write!(f, "{} + ", self.a)?;
            fmt_rational_times_sqrt2(&self.b, f)
        }
    }
}

impl fmt::Debug for QuadRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Smallest associate of a Z[sqrt2] element under the units ±(1+sqrt2)^k.
/// An element of norm n always has an associate with components of order
/// sqrt(|n|); without this reduction euclidean remainders drift into
/// unit-heavy representatives whose components explode while their norms
/// shrink.
pub(crate) fn zsqrt2_balance(v: (BigInt, BigInt)) -> (BigInt, BigInt) {
    let size = |v: &(BigInt, BigInt)| v.0.bits().max(v.1.bits());
    let mut v = v;
    loop {
        // v * (1 + sqrt2) and v * (sqrt2 - 1), the unit and its inverse.
        let up = (&v.0 + BigInt::from(2) * &v.1, &v.0 + &v.1);
        let down = (BigInt::from(2) * &v.1 - &v.0, &v.0 - &v.1);
        let best = [up, down]
            .into_iter()
            .min_by_key(|c| size(c))
            .expect("two candidates");
        if size(&best) < size(&v) {
            v = best;
        } else {
            return v;
        }
    }
}

/// Gcd of two elements of Z[sqrt2], the integers of the field. The ring is
/// norm-euclidean: rounding the exact quotient to nearest integers leaves a
/// remainder of at most half the divisor's norm, so the remainder chain
/// terminates. The result is determined only up to the units ±(1+sqrt2)^k
/// and is returned as a small associate.
pub(crate) fn zsqrt2_gcd(x: (BigInt, BigInt), y: (BigInt, BigInt)) -> (BigInt, BigInt) {
    let norm = |v: &(BigInt, BigInt)| &v.0 * &v.0 - BigInt::from(2) * &v.1 * &v.1;
    let nearest = |n: &BigInt, d: &BigInt| BigRational::new(n.clone(), d.clone()).round().to_integer();
    let (mut x, mut y) = (zsqrt2_balance(x), zsqrt2_balance(y));
    while !(y.0.is_zero() && y.1.is_zero()) {
        // x/y = x * conj(y) / N(y), rounded componentwise.
        let n = norm(&y);
        let qa = nearest(&(&x.0 * &y.0 - BigInt::from(2) * &x.1 * &y.1), &n);
        let qb = nearest(&(&x.1 * &y.0 - &x.0 * &y.1), &n);
        let r = (
            &x.0 - (&qa * &y.0 + BigInt::from(2) * &qb * &y.1),
            &x.1 - (&qa * &y.1 + &qb * &y.0),
        );
        x = y;
        y = zsqrt2_balance(r);
    }
    x
}

/// Positive rational content of a nonempty collection: gcd of the numerators
/// over lcm of the denominators, so dividing every value by it leaves a set of
/// coprime integers.
pub(crate) fn rational_content<'a>(values: impl Iterator<Item = &'a BigRational>) -> BigRational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for v in values {
        if v.is_zero() {
            continue;
        }
        num = num.gcd(v.numer());
        den = den.lcm(v.denom());
    }
    if num.is_zero() {
        BigRational::one()
    } else {
        BigRational::new(num, den)
    }
}
