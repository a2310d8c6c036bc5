//! Sparse multivariate polynomials in the parameters (s, m, p) over Q(sqrt(2)).

use super::quad::QuadRational;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// The three formal parameters. Every square root the catalog needs is fixed
/// by realizing eta, mu, rho as polynomials in these (eta = s or ±s², mu = m²,
/// rho = p), so all coefficients stay rational functions.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    S,
    M,
    P,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::S, Var::M, Var::P];

    fn index(self) -> usize {
        match self {
            Var::S => 0,
            Var::M => 1,
            Var::P => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::S => "s",
            Var::M => "m",
            Var::P => "p",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "s" => Ok(Var::S),
            "m" => Ok(Var::M),
            "p" => Ok(Var::P),
            _ => Err(()),
        }
    }
}

/// Exponent vector of a monomial s^e0 * m^e1 * p^e2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Mono {
    e: [u32; 3],
}

impl Mono {
    pub fn one() -> Self {
        Mono { e: [0, 0, 0] }
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0, 0, 0];
        e[v.index()] = 1;
        Mono { e }
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.e[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.e.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.e == [0, 0, 0]
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono {
            e: [
                self.e[0] + other.e[0],
                self.e[1] + other.e[1],
                self.e[2] + other.e[2],
            ],
        }
    }

    pub fn checked_div(&self, other: &Mono) -> Option<Mono> {
        let mut e = [0u32; 3];
        for i in 0..3 {
            e[i] = self.e[i].checked_sub(other.e[i])?;
        }
        Some(Mono { e })
    }

    pub fn pow_var(v: Var, k: u32) -> Mono {
        let mut e = [0, 0, 0];
        e[v.index()] = k;
        Mono { e }
    }
}

/// Graded lexicographic order with s < m < p: compare total degree, then the
/// exponents of p, m, s in that significance order.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.e[2].cmp(&other.e[2]))
            .then(self.e[1].cmp(&other.e[1]))
            .then(self.e[0].cmp(&other.e[0]))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial as a term map; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Mono, QuadRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Poly::constant(QuadRational::one())
    }

    pub fn constant(c: QuadRational) -> Self {
        let mut p = Poly::zero();
        p.insert_add(Mono::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = Poly::zero();
        p.insert_add(Mono::var(v), QuadRational::one());
        p
    }

    pub fn term(mono: Mono, c: QuadRational) -> Self {
        let mut p = Poly::zero();
        p.insert_add(mono, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// Some(c) when the polynomial is the constant c (zero counts, as 0).
    pub fn as_constant(&self) -> Option<QuadRational> {
        if self.terms.is_empty() {
            return Some(QuadRational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &QuadRational)> {
        self.terms.iter()
    }

    /// Terms from the greatest monomial down; the canonical print order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Mono, &QuadRational)> {
        self.terms.iter().rev()
    }

    fn insert_add(&mut self, mono: Mono, c: QuadRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn leading(&self) -> Option<(&Mono, &QuadRational)> {
        self.terms.iter().next_back()
    }

    /// Divides out the shared rational content of all coefficient components,
    /// leaving coprime integer parts. The result differs from `self` by a
    /// positive rational unit; pseudo-remainder sequences apply this after
    /// every step, where it is the difference between polynomial and
    /// exponential coefficient growth.
    pub(crate) fn strip_rational_content(&self) -> Poly {
        use super::quad::rational_content;
        use num_traits::One;
        if self.is_zero() {
            return Poly::zero();
        }
        let content = rational_content(
            self.terms
                .values()
                .flat_map(|c| [c.rational_part(), c.sqrt2_part()]),
        );
        if content.is_one() {
            return self.clone();
        }
        self.mul_coeff(&QuadRational::from_rational(content.recip()))
    }

    /// Divides out the full coefficient content over Z[sqrt2] and rebalances
    /// the leftover unit. Rational content alone leaves behind common
    /// Z[sqrt2] factors and stray units (1+sqrt2)^k, both invisible to
    /// component-wise integer gcds, and those compound exponentially along a
    /// pseudo-remainder sequence.
    pub(crate) fn strip_content(&self) -> Poly {
        use super::quad::zsqrt2_gcd;
        use num_bigint::BigInt;
        use num_traits::{One, Signed, Zero};
        if self.is_zero() {
            return Poly::zero();
        }
        let p = self.strip_rational_content();
        // Integer parts now; fold the euclidean gcd until it hits a unit.
        let mut g = (BigInt::zero(), BigInt::zero());
        let mut unit = false;
        for c in p.terms.values() {
            let pair = (
                c.rational_part().to_integer(),
                c.sqrt2_part().to_integer(),
            );
            g = zsqrt2_gcd(g, pair);
            let norm = &g.0 * &g.0 - BigInt::from(2) * &g.1 * &g.1;
            if norm.abs().is_one() {
                unit = true;
                break;
            }
        }
        let g = QuadRational::new(
            num_rational::BigRational::from_integer(g.0),
            num_rational::BigRational::from_integer(g.1),
        );
        // A unit content means the coefficients are already coprime; dividing
        // by it would only launder the representative.
        let mut p = if unit || g.is_one() || g.is_zero() {
            p
        } else {
            p.mul_coeff(&g.inv().expect("nonzero content"))
        };
        // Any remaining unit junk is a power of 1+sqrt2; walk toward the
        // associate with the smallest coefficients.
        let size = |p: &Poly| -> u64 {
            p.terms
                .values()
                .map(|c| c.rational_part().numer().bits() + c.sqrt2_part().numer().bits())
                .sum()
        };
        let units = [
            QuadRational::new(
                num_rational::BigRational::one(),
                num_rational::BigRational::one(),
            ),
            QuadRational::new(
                -num_rational::BigRational::one(),
                num_rational::BigRational::one(),
            ),
        ];
        for u in units {
            loop {
                let candidate = p.mul_coeff(&u);
                if size(&candidate) < size(&p) {
                    p = candidate;
                } else {
                    break;
                }
            }
        }
        p
    }

    pub fn mul_coeff(&self, c: &QuadRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (*m, q * c))
                .collect(),
        }
    }

    pub fn mul_term(&self, mono: &Mono, c: &QuadRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.mul(mono), q * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Largest exponent of `v` in any term; 0 for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Smallest exponent of `v` in any term; 0 for the zero polynomial.
    pub fn order_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    /// Exact division by v^k; requires order_in(v) >= k.
    pub fn div_var_power(&self, v: Var, k: u32) -> Poly {
        debug_assert!(self.is_zero() || self.order_in(v) >= k);
        let d = Mono::pow_var(v, k);
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.checked_div(&d).expect("order bound"), q.clone()))
                .collect(),
        }
    }

    /// Substitute v := q, collapsing the variable into the coefficients.
    pub(crate) fn eval_var(&self, v: Var, q: &QuadRational) -> Poly {
        if self.degree_in(v) == 0 {
            return self.clone();
        }
        let mut out = Poly::zero();
        for c in self.coeffs_in(v).into_iter().rev() {
            out = &out.mul_coeff(q) + &c;
        }
        out
    }

    /// Substitute v := 0, i.e. keep the v-free terms.
    pub fn at_var_zero(&self, v: Var) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == 0)
                .map(|(m, q)| (*m, q.clone()))
                .collect(),
        }
    }

    /// View as a univariate polynomial in `v`: coefficient polynomials indexed
    /// by the exponent of `v`.
    pub fn coeffs_in(&self, v: Var) -> Vec<Poly> {
        let deg = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, q) in &self.terms {
            let e = m.exp(v) as usize;
            let rest = m.checked_div(&Mono::pow_var(v, e as u32)).expect("exp split");
            out[e].insert_add(rest, q.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: Vec<Poly>) -> Poly {
        let mut out = Poly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            out = &out + &c.mul_term(&Mono::pow_var(v, e as u32), &QuadRational::one());
        }
        out
    }

    /// Long division when `d` divides `self` exactly; None otherwise.
    /// For a true divisor the leading-term reduction never gets stuck because
    /// leading monomials are multiplicative in the graded-lex order.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (dm, dc) = {
            let (m, c) = d.leading().expect("nonzero divisor");
            (*m, c.clone())
        };
        let dc_inv = dc.inv().expect("nonzero leading coefficient");
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().expect("nonzero remainder");
                (*m, c.clone())
            };
            let qm = rm.checked_div(&dm)?;
            let qc = &rc * &dc_inv;
            quot.insert_add(qm, qc.clone());
            rem = &rem - &d.mul_term(&qm, &qc);
        }
        Some(quot)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.insert_add(*m, q.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, q) in &rhs.terms {
            out.insert_add(*m, -q);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                out.insert_add(ma.mul(mb), qa * qb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mono, coeff)) in self.terms_desc().enumerate() {
            let (neg, mag) = term_string(mono, coeff);
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            f.write_str(&mag)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Render one term as (sign, magnitude). Coefficients with both a rational and
/// a sqrt2 part keep their internal signs and get parentheses instead.
fn term_string(mono: &Mono, coeff: &QuadRational) -> (bool, String) {
    use num_traits::{Signed, Zero};
    let (neg, coeff_mag): (bool, QuadRational) =
        if coeff.is_rational() && coeff.rational_part().is_negative() {
            (true, -coeff)
        } else if coeff.rational_part().is_zero() && coeff.sqrt2_part().is_negative() {
            (true, -coeff)
        } else {
            (false, coeff.clone())
        };
    let two_part = !coeff_mag.rational_part().is_zero() && !coeff_mag.sqrt2_part().is_zero();
    let mag = if mono.is_one() {
        format!("{coeff_mag}")
    } else if coeff_mag.is_one() {
        format!("{mono}")
    } else if two_part {
        format!("({coeff_mag})*{mono}")
    } else {
        format!("{coeff_mag}*{mono}")
    };
    (neg, mag)
}
