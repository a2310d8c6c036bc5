//! Randomized algebraic properties of the scalar field: field axioms on
//! random rational functions, uniqueness of the canonical representation,
//! and agreement between symbolic limits and exact evaluation along a
//! halving sequence of the scale variable.

use doublecheck::{LimitResult, QuadRational, Scalar, Var};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=4, -9i64..=9, 1i64..=4).prop_map(|(an, ad, bn, bd)| {
        Scalar::from_ratio(an, ad) + Scalar::sqrt2() * Scalar::from_ratio(bn, bd)
    })
}

// Degrees stay small: the axiom checks multiply three of these together,
// and normalization costs grow quickly with multivariate degree.
fn monomial() -> impl Strategy<Value = Scalar> {
    (coeff(), 0u32..=1, 0u32..=1, 0u32..=1).prop_map(|(c, es, em, ep)| {
        c * Scalar::var(Var::S).pow(es) * Scalar::var(Var::M).pow(em) * Scalar::var(Var::P).pow(ep)
    })
}

fn polynomial() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(monomial(), 1..=3)
        .prop_map(|terms| terms.into_iter().fold(Scalar::zero(), |acc, t| acc + t))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (
        polynomial(),
        polynomial().prop_filter("nonzero denominator", |d| !d.is_zero()),
    )
        .prop_map(|(n, d)| n / d)
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |x| !x.is_zero())
}

/// A fully bound scalar is a constant of the field; extract it.
fn constant_value(x: &Scalar) -> QuadRational {
    let num = x.numerator().as_constant().expect("no free variables");
    let den = x.denominator().as_constant().expect("no free variables");
    &num * &den.inv().expect("denominator is nonzero")
}

/// Sign in the real embedding that sends sqrt2 to the positive root.
fn is_nonnegative(q: &QuadRational) -> bool {
    let a = q.rational_part();
    let b = q.sqrt2_part();
    let zero = doublecheck::BigRational::from_integer(0.into());
    let two = doublecheck::BigRational::from_integer(2.into());
    match (a >= &zero, b >= &zero) {
        (true, true) => true,
        (false, false) => false,
        (true, false) => a * a >= two * b * b,
        (false, true) => two * b * b >= a * a,
    }
}

fn abs(q: QuadRational) -> QuadRational {
    if is_nonnegative(&q) {
        q
    } else {
        -q
    }
}

fn leq(u: &QuadRational, v: &QuadRational) -> bool {
    is_nonnegative(&(v - u))
}

proptest! {
    // 350 cases draw three scalars each, so the axioms run on over a
    // thousand random field elements.
    #![proptest_config(ProptestConfig::with_cases(350))]

    #[test]
    fn field_axioms(x in scalar(), y in scalar(), z in scalar()) {
        prop_assert_eq!(x.clone() + y.clone(), y.clone() + x.clone());
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(
            (x.clone() + y.clone()) + z.clone(),
            x.clone() + (y.clone() + z.clone())
        );
        prop_assert_eq!(
            (x.clone() * y.clone()) * z.clone(),
            x.clone() * (y.clone() * z.clone())
        );
        prop_assert_eq!(
            (x.clone() + y.clone()) * z.clone(),
            x.clone() * z.clone() + y.clone() * z.clone()
        );
        prop_assert_eq!(x.clone() + Scalar::zero(), x.clone());
        prop_assert_eq!(x.clone() * Scalar::one(), x.clone());
        prop_assert_eq!(x.clone() - x.clone(), Scalar::zero());
    }
}

proptest! {
    #[test]
    fn normalization_is_idempotent(x in scalar()) {
        let rebuilt = Scalar::new(x.numerator().clone(), x.denominator().clone()).unwrap();
        prop_assert_eq!(rebuilt.numerator(), x.numerator());
        prop_assert_eq!(rebuilt.denominator(), x.denominator());
        prop_assert_eq!(rebuilt.to_string(), x.to_string());
    }

    // Equality of values must mean equality of representations: a value
    // reached through a multiply-then-divide detour lands on the identical
    // numerator and denominator.
    #[test]
    fn equal_values_share_one_representation(x in scalar(), z in nonzero_scalar()) {
        let detour = (x.clone() * z.clone()).checked_div(&z).unwrap();
        prop_assert_eq!(detour.numerator(), x.numerator());
        prop_assert_eq!(detour.denominator(), x.denominator());
        prop_assert_eq!(detour.to_string(), x.to_string());
    }

    #[test]
    fn self_division_is_one(x in nonzero_scalar()) {
        prop_assert_eq!(x.clone() / x.clone(), Scalar::one());
        prop_assert_eq!(x.inv().unwrap() * x, Scalar::one());
    }

    #[test]
    fn substitution_commutes_with_multiplication(x in scalar(), y in scalar()) {
        let pin = [
            (Var::S, Scalar::from_ratio(1, 3)),
            (Var::M, Scalar::from_int(2)),
            (Var::P, Scalar::from_ratio(-5, 7)),
        ];
        if let (Ok(l), Ok(a), Ok(b)) = (
            (x.clone() * y.clone()).substitute(&pin),
            x.substitute(&pin),
            y.substitute(&pin),
        ) {
            prop_assert_eq!(l, a * b);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    // A finite symbolic limit must be the value the exact evaluations
    // approach when the scale variable is halved repeatedly: deep in the
    // tail the residuals may no longer grow.
    #[test]
    fn halving_sequences_settle_on_the_limit(x in scalar()) {
        let limit = match x.limit_at_zero(Var::S) {
            LimitResult::Finite(l) => l,
            LimitResult::Divergent => return Ok(()),
        };
        let pin = [(Var::M, Scalar::from_int(3)), (Var::P, Scalar::from_int(5))];
        let (xp, lp) = match (x.substitute(&pin), limit.substitute(&pin)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => return Ok(()),
        };
        let target = constant_value(&lp);

        let mut residuals = Vec::new();
        for k in 40..=50u32 {
            let step = Scalar::from_ratio(1, 1i64 << k);
            let Ok(v) = xp.substitute(&[(Var::S, step)]) else {
                continue;
            };
            residuals.push(abs(&constant_value(&v) - &target));
        }
        prop_assert!(residuals.len() >= 4, "too many excluded points");
        let tail = &residuals[residuals.len() - 4..];
        for w in tail.windows(2) {
            prop_assert!(leq(&w[1], &w[0]), "residuals grew along the tail: {:?}", tail);
        }
    }
}
