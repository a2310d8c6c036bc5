//! Multivariate GCD by evaluation and dense Newton interpolation.
//!
//! Remainder sequences are a trap here: on several variables their iterates
//! fatten in every variable at once, and splitting off content at each step
//! recurses into yet more gcds, so random inputs of even modest degree stall.
//! Evaluating one variable at rational points instead reduces the problem to
//! images with one variable fewer; the images are lifted back with Newton
//! interpolation and the candidate is certified by exact division, so an
//! unlucky evaluation point can cost a retry but never correctness.

use super::poly::{Mono, Poly, Var};
use super::quad::QuadRational;

/// Monic gcd (leading coefficient 1 in the term order); gcd(0, 0) = 0.
pub(crate) fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    monic(&gcd_rec(a, b))
}

fn monic(p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some((_, lc)) => p.mul_coeff(&lc.inv().expect("nonzero leading coefficient")),
    }
}

/// Every return is monic, which fixes the scalar unit: the interpolation
/// below relies on all images of one gcd being scaled consistently.
fn gcd_rec(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    // Constants are units of the coefficient field.
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    // Degrees add under multiplication, so a common divisor involves only
    // variables shared by both inputs.
    let Some(x1) = Var::ALL
        .into_iter()
        .filter(|&v| a.degree_in(v) > 0 && b.degree_in(v) > 0)
        .min_by_key(|&v| a.degree_in(v).min(b.degree_in(v)))
    else {
        return Poly::one();
    };
    let (ca, pa) = content_primitive(a, x1);
    let (cb, pb) = content_primitive(b, x1);
    let cg = gcd_rec(&ca, &cb);

    let others: Vec<Var> = Var::ALL
        .into_iter()
        .filter(|&v| v != x1 && (pa.degree_in(v) > 0 || pb.degree_in(v) > 0))
        .collect();
    if others.is_empty() {
        return monic(&(&cg * &univariate_gcd(&pa, &pb, x1)));
    }

    // Brown's scheme: evaluate xe away, gcd the images, interpolate back.
    // Images are normalized to leading x1-coefficient gamma(t), which is the
    // one scaling of gcd(pa, pb) that all good points agree on.
    let xe = *others
        .iter()
        .min_by_key(|&&v| pa.degree_in(v).min(pb.degree_in(v)))
        .expect("nonempty variable list");
    let da = pa.degree_in(x1) as usize;
    let db = pb.degree_in(x1) as usize;
    let lca = pa.coeffs_in(x1)[da].clone();
    let lcb = pb.coeffs_in(x1)[db].clone();
    let gamma = gcd_rec(&lca, &lcb);
    let needed = (gamma.degree_in(xe) + pa.degree_in(xe).min(pb.degree_in(xe)) + 1) as usize;

    let mut next_point = {
        let mut k: i64 = 0;
        move || {
            k += 1;
            let t = if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) };
            QuadRational::from_int(t)
        }
    };
    for _attempt in 0..64 {
        let mut d_star = usize::MAX;
        let mut images: Vec<(QuadRational, Poly)> = Vec::new();
        while images.len() < needed {
            let t = next_point();
            if lca.eval_var(xe, &t).is_zero() || lcb.eval_var(xe, &t).is_zero() {
                continue;
            }
            let g_t = gcd_rec(&pa.eval_var(xe, &t), &pb.eval_var(xe, &t));
            let d = g_t.degree_in(x1) as usize;
            if d == 0 {
                // The image gcd degree never undershoots the true one at
                // points keeping the leading coefficients alive, so the
                // primitive parts are coprime.
                return cg;
            }
            if d < d_star {
                d_star = d;
                images.clear();
            }
            if d > d_star {
                continue;
            }
            let lc_gt = g_t.coeffs_in(x1)[d].clone();
            let Some(scale) = gamma.eval_var(xe, &t).div_exact(&lc_gt) else {
                continue;
            };
            images.push((t, &g_t * &scale));
        }

        let mut interp = Poly::zero();
        let mut nodal = Poly::one();
        for (t, img) in &images {
            let val = interp.eval_var(xe, t);
            let diff = img - &val;
            if !diff.is_zero() {
                let denom = nodal
                    .eval_var(xe, t)
                    .as_constant()
                    .expect("nodal polynomial is univariate");
                interp = &interp + &(&nodal * &diff.mul_coeff(&denom.inv().expect("fresh point")));
            }
            nodal = &nodal * &(&Poly::var(xe) - &Poly::constant(t.clone()));
        }

        let cand = content_primitive(&interp, x1).1.strip_content();
        if pa.div_exact(&cand).is_some() && pb.div_exact(&cand).is_some() {
            return monic(&(&cg * &cand));
        }
        // All sampled points conspired against this degree; take fresh ones.
    }
    unreachable!("interpolation retries exhausted: unlucky points are finite");
}

/// Euclid over the coefficient field; both inputs involve only `v`.
fn univariate_gcd(a: &Poly, b: &Poly, v: Var) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let dy = y.degree_in(v);
        let ly_inv = y.coeffs_in(v)[dy as usize]
            .as_constant()
            .expect("univariate coefficient")
            .inv()
            .expect("nonzero leading coefficient");
        while !x.is_zero() && x.degree_in(v) >= dy {
            let dx = x.degree_in(v);
            let lx = x.coeffs_in(v)[dx as usize]
                .as_constant()
                .expect("univariate coefficient");
            let q = &lx * &ly_inv;
            x = &x - &y.mul_term(&Mono::pow_var(v, dx - dy), &q);
        }
        std::mem::swap(&mut x, &mut y);
    }
    x
}

/// Split into (content, primitive part) with respect to `v`: the content is
/// the gcd of the univariate coefficients, the primitive part the exact
/// quotient. content_primitive(0, v) = (0, 0).
pub(crate) fn content_primitive(p: &Poly, v: Var) -> (Poly, Poly) {
    if p.is_zero() {
        return (Poly::zero(), Poly::zero());
    }
    let coeffs = p.coeffs_in(v);
    let mut cont = Poly::zero();
    for c in &coeffs {
        cont = gcd_rec(&cont, c);
        if cont.as_constant().is_some() && !cont.is_zero() {
            break;
        }
    }
    let cont = monic(&cont);
    if cont.is_one() {
        return (cont, p.clone());
    }
    let prim = p.div_exact(&cont).expect("content divides");
    (cont, prim)
}
