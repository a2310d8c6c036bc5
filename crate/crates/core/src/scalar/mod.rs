//! Exact scalars: rational functions in the parameters (s, m, p) over
//! Q(sqrt(2)). Every coefficient in the engine is one of these; no floating
//! point exists anywhere in the crate.

mod gcd;
mod poly;
mod quad;

pub use poly::{Mono, Poly, Var};
pub use quad::QuadRational;

use crate::error::Error;
use num_rational::BigRational;
use num_traits::{One, Signed};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A fraction of polynomials kept in canonical form, so equality is
/// structural:
///   - numerator and denominator are coprime;
///   - the leading coefficient of the denominator is a positive rational
///     (sqrt2 parts are rotated away by the Galois conjugate);
///   - the rational components of all coefficients of numerator and
///     denominator jointly form a primitive set of integers.
/// The zero scalar is 0/1.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

/// Outcome of a one-variable limit at zero. Divergence is a value, not an
/// error: the catalog classifies divergent limits as results.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LimitResult {
    Finite(Scalar),
    Divergent,
}

impl LimitResult {
    pub fn is_finite(&self) -> bool {
        matches!(self, LimitResult::Finite(_))
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_poly(Poly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_quad(QuadRational::from_int(n))
    }

    /// Panics if `d == 0`; callers only pass literal nonzero denominators.
    pub fn from_ratio(n: i64, d: i64) -> Self {
        Scalar::from_quad(QuadRational::from_ratio(n, d))
    }

    pub fn from_quad(c: QuadRational) -> Self {
        Scalar::from_poly(Poly::constant(c))
    }

    pub fn from_poly(num: Poly) -> Self {
        normalize(num, Poly::one())
    }

    pub fn sqrt2() -> Self {
        Scalar::from_quad(QuadRational::sqrt2())
    }

    pub fn var(v: Var) -> Self {
        Scalar::from_poly(Poly::var(v))
    }

    pub fn new(num: Poly, den: Poly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero {
                expr: format!("({num}) / 0"),
            });
        }
        Ok(normalize(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &Scalar::one()
    }

    /// Some(q) when the scalar is the plain rational q.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        if !n.is_rational() || !d.is_rational() {
            return None;
        }
        Some(n.rational_part() / d.rational_part())
    }

    pub fn inv(&self) -> Result<Scalar, Error> {
        Scalar::one().checked_div(self)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero {
                expr: format!("({self}) / ({rhs})"),
            });
        }
        Ok(normalize(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn pow(&self, k: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution of parameter values (themselves scalars), followed
    /// by renormalization. Unbound variables stay symbolic. Errs when the
    /// substituted denominator collapses to zero, naming the culprit binding.
    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Scalar, Error> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let num = eval_poly(&self.num, bindings);
        let den = eval_poly(&self.den, bindings);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes {
                binding: vanishing_binding(&self.den, bindings),
            });
        }
        num.checked_div(&den)
    }

    /// The limit of the scalar as `v` -> 0, holding the other parameters
    /// symbolic: cancel the common power of `v`, then the limit is finite iff
    /// the numerator vanishes at least as fast as the denominator.
    pub fn limit_at_zero(&self, v: Var) -> LimitResult {
        if self.is_zero() {
            return LimitResult::Finite(Scalar::zero());
        }
        let k = self.num.order_in(v).min(self.den.order_in(v));
        let num = self.num.div_var_power(v, k);
        let den = self.den.div_var_power(v, k);
        if num.order_in(v) >= den.order_in(v) {
            LimitResult::Finite(normalize(num.at_var_zero(v), den.at_var_zero(v)))
        } else {
            LimitResult::Divergent
        }
    }
}

/// Reduce to canonical form; `den` must be nonzero.
fn normalize(num: Poly, den: Poly) -> Scalar {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        };
    }
    let g = gcd::poly_gcd(&num, &den);
    let mut num = num.div_exact(&g).expect("gcd divides numerator");
    let mut den = den.div_exact(&g).expect("gcd divides denominator");

    // Rotate the denominator's leading coefficient into a positive rational.
    let lc = den.leading().expect("nonzero denominator").1.clone();
    if !lc.is_rational() {
        let conj = lc.conjugate();
        num = num.mul_coeff(&conj);
        den = den.mul_coeff(&conj);
    }
    let lc = den.leading().expect("nonzero denominator").1.clone();
    if lc.rational_part().is_negative() {
        num = num.mul_coeff(&QuadRational::from_int(-1));
        den = den.mul_coeff(&QuadRational::from_int(-1));
    }

    // Jointly scale both polynomials to a primitive integral coefficient set.
    let parts: Vec<&BigRational> = num
        .terms()
        .chain(den.terms())
        .flat_map(|(_, c)| [c.rational_part(), c.sqrt2_part()])
        .collect();
    let content = quad::rational_content(parts.into_iter());
    if !content.is_one() {
        let inv = content.recip();
        num = num
            .terms()
            .map(|(m, c)| Poly::term(*m, c.scale(&inv)))
            .fold(Poly::zero(), |acc, t| &acc + &t);
        den = den
            .terms()
            .map(|(m, c)| Poly::term(*m, c.scale(&inv)))
            .fold(Poly::zero(), |acc, t| &acc + &t);
    }
    Scalar { num, den }
}

fn eval_poly(p: &Poly, bindings: &[(Var, Scalar)]) -> Scalar {
    let lookup = |v: Var| -> Scalar {
        bindings
            .iter()
            .find(|(bv, _)| *bv == v)
            .map(|(_, val)| val.clone())
            .unwrap_or_else(|| Scalar::var(v))
    };
    let mut acc = Scalar::zero();
    for (mono, coeff) in p.terms() {
        let mut term = Scalar::from_quad(coeff.clone());
        for v in Var::ALL {
            let e = mono.exp(v);
            if e > 0 {
                term = &term * &lookup(v).pow(e);
            }
        }
        acc = &acc + &term;
    }
    acc
}

/// Name the binding that kills `den`, trying each one in isolation first.
fn vanishing_binding(den: &Poly, bindings: &[(Var, Scalar)]) -> String {
    for (v, val) in bindings {
        if eval_poly(den, std::slice::from_ref(&(*v, val.clone()))).is_zero() {
            return format!("{v} := {val}");
        }
    }
    bindings
        .iter()
        .map(|(v, val)| format!("{v} := {val}"))
        .collect::<Vec<_>>()
        .join(", ")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        normalize(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Exact division; panics on a zero divisor. Fallible callers use
/// `checked_div`.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs)
            .unwrap_or_else(|e| panic!("{e}"))
    }
}

macro_rules! owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() <= 1 && self.den.num_terms() == 1 {
            // Compact form for single-term fractions: 1/2, sqrt2/2, s/2.
            return write!(f, "{}/{}", self.num, self.den);
        }
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> Scalar {
        Scalar::var(Var::S)
    }
    fn m() -> Scalar {
        Scalar::var(Var::M)
    }
    fn p() -> Scalar {
        Scalar::var(Var::P)
    }

    #[test]
    fn quadratic_units_cancel() {
        let u = &Scalar::one() + &Scalar::sqrt2();
        let v = &Scalar::sqrt2() - &Scalar::one();
        assert!((&u * &v).is_one());
    }

    #[test]
    fn common_factor_cancellation() {
        // s²(1+p) / (s(1+p)) = s
        let one_plus_p = &Scalar::one() + &p();
        let x = (&s().pow(2) * &one_plus_p).checked_div(&(&s() * &one_plus_p)).unwrap();
        assert_eq!(x, s());
    }

    #[test]
    fn case_d_coefficient_normal_form() {
        // with mu := m², eta := s²: (mu² − 1)/(2 eta mu) = (m⁴ − 1)/(2 s² m²)
        let mu = m().pow(2);
        let eta = s().pow(2);
        let x = (&mu.pow(2) - &Scalar::one())
            .checked_div(&(&(&Scalar::from_int(2) * &eta) * &mu))
            .unwrap();
        assert_eq!(x.to_string(), "(m^4 - 1) / (2*s^2*m^2)");
    }

    #[test]
    fn canonical_rational_fractions() {
        assert_eq!(Scalar::from_ratio(3, 2).to_string(), "3/2");
        assert_eq!(Scalar::from_ratio(-1, 2).to_string(), "-1/2");
        let inv_sqrt2 = Scalar::sqrt2().inv().unwrap();
        assert_eq!(inv_sqrt2.to_string(), "sqrt2/2");
        assert_eq!(&inv_sqrt2 * &Scalar::sqrt2(), Scalar::one());
    }

    #[test]
    fn substitute_rational_point() {
        // (2s³+s²)/s² at s := 1/2 evaluates to 2
        let x = (&(&Scalar::from_int(2) * &s().pow(3)) + &s().pow(2))
            .checked_div(&s().pow(2))
            .unwrap();
        let got = x.substitute(&[(Var::S, Scalar::from_ratio(1, 2))]).unwrap();
        assert_eq!(got, Scalar::from_int(2));
    }

    #[test]
    fn substitute_empty_is_identity() {
        let x = (&m().pow(4) - &Scalar::one()).checked_div(&s().pow(2)).unwrap();
        assert_eq!(x.substitute(&[]).unwrap(), x);
    }

    #[test]
    fn substitute_mu_one_kills_case_d_term() {
        let x = (&m().pow(4) - &Scalar::one())
            .checked_div(&(&Scalar::from_int(2) * &(&s().pow(2) * &m().pow(2))))
            .unwrap();
        let got = x.substitute(&[(Var::M, Scalar::one())]).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn substitute_reports_vanishing_denominator() {
        let x = Scalar::one().checked_div(&(&p() - &Scalar::one())).unwrap();
        let err = x.substitute(&[(Var::P, Scalar::one())]).unwrap_err();
        assert!(err.to_string().contains("p := 1"), "got: {err}");
    }

    #[test]
    fn limits_at_zero() {
        assert_eq!(s().limit_at_zero(Var::S), LimitResult::Finite(Scalar::zero()));
        let x = (&(&Scalar::from_int(2) * &s().pow(3)) + &s().pow(2))
            .checked_div(&s().pow(2))
            .unwrap();
        assert_eq!(x.limit_at_zero(Var::S), LimitResult::Finite(Scalar::one()));
        let div = (&m().pow(4) - &Scalar::one())
            .checked_div(&(&Scalar::from_int(2) * &(&s().pow(2) * &m().pow(2))))
            .unwrap();
        assert_eq!(div.limit_at_zero(Var::S), LimitResult::Divergent);
    }

    #[test]
    fn limit_keeps_other_parameters() {
        // (s + p)/(1 + s) -> p
        let x = (&s() + &p()).checked_div(&(&Scalar::one() + &s())).unwrap();
        assert_eq!(x.limit_at_zero(Var::S), LimitResult::Finite(p()));
    }

    #[test]
    fn division_by_zero_is_reported() {
        let err = Scalar::one().checked_div(&Scalar::zero()).unwrap_err();
        assert!(err.to_string().contains("division by zero"));
    }
}
