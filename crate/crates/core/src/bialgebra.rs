//! Lie bialgebras and their classical doubles: cocycle compatibility, the
//! double bracket, canonical pairing, canonical r-matrix and Casimir,
//! cocommutators, and the Schouten bracket.

use crate::basis::{identity_matrix, zero_matrix, BasisChange};
use crate::check::CheckReport;
use crate::error::Error;
use crate::lie::{zero_constants, LieAlgebra};
use crate::scalar::{Scalar, Var};
use crate::tensor::{BilinearForm, ThreeTensor, TwoTensor};

/// A Lie bialgebra: bracket constants c on the algebra plus cocommutator
/// constants f, stored as f[n][l][m] with δ(e_n) = f[n][l][m] e_l⊗e_m.
/// Equivalently f[n][l][m] is the x^n coefficient of the dual bracket
/// [x^l, x^m], so dual-generator bracket tables are entered directly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieBialgebra {
    algebra: LieAlgebra,
    f: Vec<Vec<Vec<Scalar>>>,
    dual_names: Vec<String>,
}

/// Record [x^l, x^m] ⊇ v·x^n together with its antisymmetric image, in the
/// cocommutator layout (output index first).
pub fn add_cobracket(f: &mut [Vec<Vec<Scalar>>], l: usize, m: usize, n: usize, v: Scalar) {
    f[n][m][l] = &f[n][m][l] - &v;
    f[n][l][m] = &f[n][l][m] + &v;
}

impl LieBialgebra {
    /// Validating constructor: checks the upper-pair antisymmetry of f and
    /// the compatibility condition between c and f.
    pub fn new(
        algebra: LieAlgebra,
        f: Vec<Vec<Vec<Scalar>>>,
        dual_names: Vec<String>,
    ) -> Result<Self, Error> {
        let b = Self::new_unchecked(algebra, f, dual_names);
        let d = b.dim();
        for n in 0..d {
            for l in 0..d {
                for m in 0..=l {
                    if !(&b.f[n][l][m] + &b.f[n][m][l]).is_zero() {
                        return Err(Error::CocommutatorNotAntisymmetric { n });
                    }
                }
            }
        }
        b.cocycle_check()
            .into_result(|report| Error::CocycleFails { report })?;
        Ok(b)
    }

    pub fn new_unchecked(
        algebra: LieAlgebra,
        f: Vec<Vec<Vec<Scalar>>>,
        dual_names: Vec<String>,
    ) -> Self {
        let d = algebra.dim();
        assert_eq!(f.len(), d);
        assert!(f.iter().all(|p| p.len() == d && p.iter().all(|q| q.len() == d)));
        assert_eq!(dual_names.len(), d);
        LieBialgebra {
            algebra,
            f,
            dual_names,
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn f(&self, n: usize, l: usize, m: usize) -> &Scalar {
        &self.f[n][l][m]
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual_names
    }

    /// Compatibility between bracket and cocommutator:
    /// f^{ab}_k c^k_{ij} − f^{ak}_i c^b_{kj} − f^{kb}_i c^a_{kj}
    ///                   − f^{ak}_j c^b_{ik} − f^{kb}_j c^a_{ik} = 0
    /// for all (a,b,i,j), as exact scalars.
    pub fn cocycle_check(&self) -> CheckReport {
        let d = self.dim();
        let c = |i, j, k| self.algebra.c(i, j, k);
        let mut report = CheckReport::default();
        for a in 0..d {
            for b in 0..d {
                for i in 0..d {
                    for j in 0..d {
                        let mut residual = Scalar::zero();
                        for k in 0..d {
                            residual = &residual + &(&self.f[k][a][b] * c(i, j, k));
                            residual = &residual - &(&self.f[i][a][k] * c(k, j, b));
                            residual = &residual - &(&self.f[i][k][b] * c(k, j, a));
                            residual = &residual - &(&self.f[j][a][k] * c(i, k, b));
                            residual = &residual - &(&self.f[j][k][b] * c(i, k, a));
                        }
                        report.record(vec![a, b, i, j], residual);
                    }
                }
            }
        }
        report
    }

    /// The bialgebra on the dual space, with bracket and cocommutator roles
    /// interchanged. The compatibility condition is symmetric under the
    /// swap, so validity is preserved and not re-checked.
    pub fn dual(&self) -> LieBialgebra {
        let d = self.dim();
        let mut c_dual = zero_constants(d);
        let mut f_dual = zero_constants(d);
        for n in 0..d {
            for l in 0..d {
                for m in 0..d {
                    c_dual[l][m][n] = self.f[n][l][m].clone();
                    f_dual[n][l][m] = self.algebra.c(l, m, n).clone();
                }
            }
        }
        LieBialgebra {
            algebra: LieAlgebra::new_unchecked(self.dual_names.clone(), c_dual),
            f: f_dual,
            dual_names: self.algebra.names().to_vec(),
        }
    }

    /// Entrywise parameter substitution; both invariants specialize.
    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Self, Error> {
        let mut f = self.f.clone();
        for plane in &mut f {
            for row in plane {
                for entry in row {
                    *entry = entry.substitute(bindings)?;
                }
            }
        }
        Ok(LieBialgebra {
            algebra: self.algebra.substitute(bindings)?,
            f,
            dual_names: self.dual_names.clone(),
        })
    }
}

/// The double of a bialgebra of dimension d: a 2d-dimensional algebra on
/// basis (e_0..e_{d-1}, x^0..x^{d-1}) with the canonical pairing and the
/// canonical r-matrix Σ x^i⊗e_i attached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleAlgebra {
    algebra: LieAlgebra,
    pairing: BilinearForm,
    r_canonical: TwoTensor,
    half: usize,
}

impl DoubleAlgebra {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn pairing(&self) -> &BilinearForm {
        &self.pairing
    }

    pub fn r_canonical(&self) -> &TwoTensor {
        &self.r_canonical
    }

    pub fn half(&self) -> usize {
        self.half
    }

    /// Index sets of the two canonical subalgebras.
    pub fn split(&self) -> (Vec<usize>, Vec<usize>) {
        ((0..self.half).collect(), (self.half..2 * self.half).collect())
    }

    /// Skew and symmetric parts of the canonical r-matrix; their sum
    /// reconstructs it exactly.
    pub fn skew_and_omega(&self) -> (TwoTensor, TwoTensor) {
        let omega = self.canonical_casimir();
        let r_skew = &self.r_canonical - &omega;
        (r_skew, omega)
    }

    /// Ω = ½ Σ (x^i⊗e_i + e_i⊗x^i), the invariant symmetric tensor
    /// representing the quadratic Casimir of the double.
    pub fn canonical_casimir(&self) -> TwoTensor {
        (&self.r_canonical + &self.r_canonical.transpose()).scale(&Scalar::from_ratio(1, 2))
    }

    /// δ(e_y) computed as [e_y⊗1 + 1⊗e_y, r_canonical] through the double
    /// brackets.
    pub fn cocommutator_from_r(&self, y: usize) -> TwoTensor {
        let d2 = self.algebra.dim();
        let mut out = TwoTensor::zero(d2);
        for i in 0..d2 {
            for j in 0..d2 {
                let r = self.r_canonical.get(i, j);
                if r.is_zero() {
                    continue;
                }
                for a in 0..d2 {
                    out.add_at(a, j, self.algebra.c(y, i, a) * r);
                    out.add_at(i, a, self.algebra.c(y, j, a) * r);
                }
            }
        }
        out
    }

    /// The closed form of the double cocommutator: δ(e_i) = −f_i^{jk}
    /// e_j⊗e_k on the first subalgebra, δ(x^i) = c^i_{jk} x^j⊗x^k on the
    /// second, both read back from the double's own structure constants.
    pub fn cocommutator_closed_form(&self, y: usize) -> TwoTensor {
        let d = self.half;
        let mut out = TwoTensor::zero(2 * d);
        if y < d {
            for j in 0..d {
                for k in 0..d {
                    out.add_at(j, k, -self.algebra.c(d + j, d + k, d + y));
                }
            }
        } else {
            for j in 0..d {
                for k in 0..d {
                    out.add_at(d + j, d + k, self.algebra.c(j, k, y - d).clone());
                }
            }
        }
        out
    }
}

/// Assemble the double's structure constants, pairing, and canonical
/// r-matrix without validating anything; `build_double` is the checked
/// entry point.
pub(crate) fn assemble_double(b: &LieBialgebra) -> DoubleAlgebra {
    let d = b.dim();
    let mut c = zero_constants(2 * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                // [e_i, e_j] = c^k_{ij} e_k and [x^i, x^j] = f^{ij}_k x^k.
                c[i][j][k] = b.algebra.c(i, j, k).clone();
                c[d + i][d + j][d + k] = b.f[k][i][j].clone();
                // [x^i, e_j] = c^i_{jk} x^k − f^{ik}_j e_k.
                c[d + i][j][d + k] = b.algebra.c(j, k, i).clone();
                c[j][d + i][d + k] = -b.algebra.c(j, k, i);
                c[d + i][j][k] = -b.f(j, i, k);
                c[j][d + i][k] = b.f(j, i, k).clone();
            }
        }
    }
    let names = b
        .algebra
        .names()
        .iter()
        .chain(b.dual_names.iter())
        .cloned()
        .collect();

    let mut pairing = zero_matrix(2 * d);
    for i in 0..d {
        pairing[i][d + i] = Scalar::one();
        pairing[d + i][i] = Scalar::one();
    }

    let mut r = TwoTensor::zero(2 * d);
    for i in 0..d {
        r.add_at(d + i, i, Scalar::one());
    }

    DoubleAlgebra {
        algebra: LieAlgebra::new_unchecked(names, c),
        pairing: BilinearForm::new(pairing, true).expect("block identity is symmetric"),
        r_canonical: r,
        half: d,
    }
}

/// Build and validate the double of a bialgebra: the compatibility
/// condition must hold and the assembled bracket must satisfy Jacobi.
pub fn build_double(b: &LieBialgebra) -> Result<DoubleAlgebra, Error> {
    b.cocycle_check()
        .into_result(|report| Error::CocycleFails { report })?;
    let double = assemble_double(b);
    double
        .algebra
        .jacobi_check()
        .into_result(|report| Error::JacobiFails { report })?;
    debug_assert!(double.pairing.invariance_check(&double.algebra).passed());
    Ok(double)
}

/// The Schouten bracket [[r,r]] = [r12,r13] + [r12,r23] + [r13,r23], as an
/// element of g⊗g⊗g; it vanishes exactly when r solves the classical
/// Yang–Baxter equation.
pub fn schouten_bracket(alg: &LieAlgebra, r: &TwoTensor) -> ThreeTensor {
    let d = alg.dim();
    assert_eq!(d, r.dim(), "tensor dimension matches algebra");
    let nonzero: Vec<(usize, usize, &Scalar)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j, r.get(i, j))))
        .filter(|(_, _, v)| !v.is_zero())
        .collect();
    let mut out = ThreeTensor::zero(d);
    for &(i, j, rij) in &nonzero {
        for &(k, l, rkl) in &nonzero {
            let w = rij * rkl;
            for t in 0..d {
                // [e_i,e_k]⊗e_j⊗e_l + e_i⊗[e_j,e_k]⊗e_l + e_i⊗e_k⊗[e_j,e_l]
                if !alg.c(i, k, t).is_zero() {
                    out.add_at(t, j, l, &w * alg.c(i, k, t));
                }
                if !alg.c(j, k, t).is_zero() {
                    out.add_at(i, t, l, &w * alg.c(j, k, t));
                }
                if !alg.c(j, l, t).is_zero() {
                    out.add_at(i, k, t, &w * alg.c(j, l, t));
                }
            }
        }
    }
    out
}

/// The linear map exchanging the two halves of a double basis, e_i ↔ x^i,
/// as a basis change on the 2d-dimensional space.
pub fn duality_swap(half: usize) -> BasisChange {
    let mut m = zero_matrix(2 * half);
    for i in 0..half {
        m[i][half + i] = Scalar::one();
        m[half + i][i] = Scalar::one();
    }
    debug_assert_eq!(
        crate::basis::mat_mul(&m, &m),
        identity_matrix(2 * half)
    );
    BasisChange::new(m, None).expect("involution is invertible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::add_bracket;

    fn names(labels: &[&str]) -> Vec<String> {
        labels.iter().map(|s| s.to_string()).collect()
    }

    // so(2,1) brackets with a compatible cocommutator read off
    // [x^0,x^1] = −η x^1, [x^0,x^2] = −η x^2, with η realized as s.
    fn sample_bialgebra() -> LieBialgebra {
        let eta = Scalar::var(Var::S);
        let mut c = zero_constants(3);
        add_bracket(&mut c, 0, 1, 2, Scalar::one());
        add_bracket(&mut c, 0, 2, 1, -&Scalar::one());
        add_bracket(&mut c, 1, 2, 0, -&Scalar::one());
        let mut f = zero_constants(3);
        add_cobracket(&mut f, 0, 1, 1, -&eta);
        add_cobracket(&mut f, 0, 2, 2, -&eta);
        LieBialgebra::new(
            LieAlgebra::new(names(&["X0", "X1", "X2"]), c).unwrap(),
            f,
            names(&["x0", "x1", "x2"]),
        )
        .unwrap()
    }

    #[test]
    fn zero_cocommutator_is_compatible() {
        let mut c = zero_constants(3);
        add_bracket(&mut c, 0, 1, 2, Scalar::one());
        add_bracket(&mut c, 1, 2, 0, Scalar::one());
        add_bracket(&mut c, 2, 0, 1, Scalar::one());
        let alg = LieAlgebra::new(names(&["X0", "X1", "X2"]), c).unwrap();
        let b = LieBialgebra::new(alg, zero_constants(3), names(&["x0", "x1", "x2"])).unwrap();
        assert!(b.cocycle_check().passed());
    }

    #[test]
    fn sample_bialgebra_is_compatible_and_sign_flip_breaks_it() {
        let b = sample_bialgebra();
        assert!(b.cocycle_check().passed());

        let mut f = zero_constants(3);
        let eta = Scalar::var(Var::S);
        add_cobracket(&mut f, 0, 1, 1, eta.clone());
        add_cobracket(&mut f, 0, 2, 2, -&eta);
        let broken = LieBialgebra::new_unchecked(b.algebra().clone(), f, names(&["x0", "x1", "x2"]));
        assert!(!broken.cocycle_check().passed());
    }

    #[test]
    fn dual_interchanges_bracket_and_cocommutator() {
        // c = 0, f = rotation-algebra constants: the dual has the rotation
        // bracket and zero cocommutator, by definition of the swap.
        let mut f = zero_constants(3);
        add_cobracket(&mut f, 0, 1, 2, Scalar::one());
        add_cobracket(&mut f, 1, 2, 0, Scalar::one());
        add_cobracket(&mut f, 2, 0, 1, Scalar::one());
        let b = LieBialgebra::new(
            LieAlgebra::abelian(names(&["X0", "X1", "X2"])),
            f,
            names(&["x0", "x1", "x2"]),
        )
        .unwrap();
        let dual = b.dual();
        assert!(dual.algebra().jacobi_check().passed());
        assert_eq!(dual.algebra().c(0, 1, 2), &Scalar::one());
        assert_eq!(dual.algebra().c(1, 2, 0), &Scalar::one());
        assert_eq!(dual.algebra().c(2, 0, 1), &Scalar::one());
        for n in 0..3 {
            for l in 0..3 {
                for m in 0..3 {
                    assert!(dual.f(n, l, m).is_zero());
                }
            }
        }
        assert_eq!(dual.dual(), b);
    }

    #[test]
    fn double_brackets_follow_the_crossed_formula() {
        let b = sample_bialgebra();
        let double = build_double(&b).unwrap();
        let eta = Scalar::var(Var::S);
        // [x^0, X_1] = −x^2 + η X_1.
        assert_eq!(double.algebra().c(3, 1, 5), &Scalar::from_int(-1));
        assert_eq!(double.algebra().c(3, 1, 1), &eta);
        // Subalgebra blocks are preserved verbatim.
        assert_eq!(double.algebra().c(0, 1, 2), &Scalar::one());
        assert_eq!(double.algebra().c(3, 4, 4), &-&eta);
        // Canonical pairing: off-diagonal identity blocks.
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { Scalar::one() } else { Scalar::zero() };
                assert_eq!(double.pairing().get(i, 3 + j), &expected);
                assert_eq!(double.pairing().get(3 + i, j), &expected);
                assert!(double.pairing().get(i, j).is_zero());
                assert!(double.pairing().get(3 + i, 3 + j).is_zero());
            }
        }
        assert!(double.pairing().invariance_check(double.algebra()).passed());
    }

    #[test]
    fn trivial_bialgebra_doubles_to_abelian() {
        let b = LieBialgebra::new(
            LieAlgebra::abelian(names(&["X0", "X1"])),
            zero_constants(2),
            names(&["x0", "x1"]),
        )
        .unwrap();
        let double = build_double(&b).unwrap();
        assert_eq!(double.algebra().constants(), &zero_constants(4));
        for y in 0..4 {
            assert!(double.cocommutator_from_r(y).is_zero());
        }
    }

    #[test]
    fn zero_cocommutator_double_crossed_bracket_is_coadjoint() {
        let mut c = zero_constants(3);
        add_bracket(&mut c, 0, 1, 2, Scalar::one());
        add_bracket(&mut c, 1, 2, 0, Scalar::one());
        add_bracket(&mut c, 2, 0, 1, Scalar::one());
        let alg = LieAlgebra::new(names(&["X0", "X1", "X2"]), c).unwrap();
        let b = LieBialgebra::new(alg, zero_constants(3), names(&["x0", "x1", "x2"])).unwrap();
        let double = build_double(&b).unwrap();
        // [x^0, X_1] = c^0_{1k} x^k = x^2 and no X-part.
        assert_eq!(double.algebra().c(3, 1, 5), &Scalar::one());
        for k in 0..3 {
            assert!(double.algebra().c(3, 1, k).is_zero());
        }
    }

    #[test]
    fn canonical_r_solves_yang_baxter_and_parts_reconstruct() {
        let double = build_double(&sample_bialgebra()).unwrap();
        assert!(schouten_bracket(double.algebra(), double.r_canonical()).is_zero());
        assert!(schouten_bracket(double.algebra(), &TwoTensor::zero(6)).is_zero());

        let (r_skew, omega) = double.skew_and_omega();
        assert!(r_skew.is_antisymmetric());
        assert!(omega.is_symmetric());
        assert_eq!(&(&r_skew + &omega), double.r_canonical());
        assert_eq!(omega, double.canonical_casimir());
        assert!(omega.invariance_check(double.algebra()).passed());

        // The skew part alone fails CYBE but its obstruction is invariant.
        let obstruction = schouten_bracket(double.algebra(), &r_skew);
        assert!(!obstruction.is_zero());
        assert!(obstruction.invariance_check(double.algebra()).passed());
    }

    #[test]
    fn cocommutators_match_the_closed_form() {
        let double = build_double(&sample_bialgebra()).unwrap();
        for y in 0..6 {
            assert_eq!(
                double.cocommutator_from_r(y),
                double.cocommutator_closed_form(y),
                "basis index {y}"
            );
        }
        // δ(x^0) = c^0_{jk} x^j⊗x^k = −x^1⊗x^2 + x^2⊗x^1.
        let delta = double.cocommutator_from_r(3);
        assert_eq!(delta.get(4, 5), &Scalar::from_int(-1));
        assert_eq!(delta.get(5, 4), &Scalar::one());
    }

    #[test]
    fn half_swap_maps_double_onto_dual_double() {
        use crate::basis::Pushforward;
        let b = sample_bialgebra();
        let double = build_double(&b).unwrap();
        let dual_double = build_double(&b.dual()).unwrap();
        let swapped = double.algebra().pushforward(&duality_swap(3));
        assert_eq!(swapped.constants(), dual_double.algebra().constants());
    }
}
