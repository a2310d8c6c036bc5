//! Bilinear forms and elements of g⊗g, g⊗g⊗g over exact scalars, with
//! adjoint-invariance checks against a Lie algebra.

use crate::check::CheckReport;
use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::scalar::{Scalar, Var};
use std::fmt;
use std::ops::{Add, Sub};

/// A bilinear form on the algebra, by its Gram matrix B[i][j] = ⟨e_i, e_j⟩.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    mat: Vec<Vec<Scalar>>,
    symmetric: bool,
}

impl BilinearForm {
    /// `symmetric` asserts B = Bᵀ, validated here.
    pub fn new(mat: Vec<Vec<Scalar>>, symmetric: bool) -> Result<Self, Error> {
        let d = mat.len();
        assert!(mat.iter().all(|row| row.len() == d), "square matrix");
        if symmetric {
            for i in 0..d {
                for j in 0..i {
                    if mat[i][j] != mat[j][i] {
                        return Err(Error::NotSymmetric { i, j });
                    }
                }
            }
        }
        Ok(BilinearForm { mat, symmetric })
    }

    pub fn zero(dim: usize) -> Self {
        BilinearForm {
            mat: vec![vec![Scalar::zero(); dim]; dim],
            symmetric: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.mat[i][j]
    }

    pub fn matrix(&self) -> &Vec<Vec<Scalar>> {
        &self.mat
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_zero(&self) -> bool {
        self.mat.iter().flatten().all(Scalar::is_zero)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        BilinearForm {
            mat: map_matrix(&self.mat, |x| x * k),
            symmetric: self.symmetric,
        }
    }

    /// ⟨[z,x],y⟩ + ⟨x,[z,y]⟩ for all basis triples; any nonzero value is a
    /// failure at component (z,x,y).
    pub fn invariance_check(&self, alg: &LieAlgebra) -> CheckReport {
        let d = self.dim();
        assert_eq!(d, alg.dim(), "form dimension matches algebra");
        let mut report = CheckReport::default();
        for z in 0..d {
            for x in 0..d {
                for y in 0..d {
                    let mut residual = Scalar::zero();
                    for l in 0..d {
                        residual = &residual + &(alg.c(z, x, l) * &self.mat[l][y]);
                        residual = &residual + &(alg.c(z, y, l) * &self.mat[x][l]);
                    }
                    report.record(vec![z, x, y], residual);
                }
            }
        }
        report
    }

    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Self, Error> {
        Ok(BilinearForm {
            mat: try_map_matrix(&self.mat, |x| x.substitute(bindings))?,
            symmetric: self.symmetric,
        })
    }
}

impl Sub for &BilinearForm {
    type Output = BilinearForm;
    fn sub(self, rhs: &BilinearForm) -> BilinearForm {
        assert_eq!(self.dim(), rhs.dim());
        let d = self.dim();
        let mat = (0..d)
            .map(|i| (0..d).map(|j| &self.mat[i][j] - &rhs.mat[i][j]).collect())
            .collect();
        BilinearForm {
            mat,
            symmetric: self.symmetric && rhs.symmetric,
        }
    }
}

/// An element of g⊗g by components T[i][j] on e_i⊗e_j.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTensor {
    t: Vec<Vec<Scalar>>,
}

impl TwoTensor {
    pub fn new(t: Vec<Vec<Scalar>>) -> Self {
        let d = t.len();
        assert!(t.iter().all(|row| row.len() == d), "square component array");
        TwoTensor { t }
    }

    pub fn zero(dim: usize) -> Self {
        TwoTensor {
            t: vec![vec![Scalar::zero(); dim]; dim],
        }
    }

    /// Σ coef·(e_i∧e_j) with a∧b = a⊗b − b⊗a.
    pub fn from_wedges(dim: usize, wedges: &[(usize, usize, Scalar)]) -> Self {
        let mut t = TwoTensor::zero(dim);
        for (i, j, coef) in wedges {
            t.add_at(*i, *j, coef.clone());
            t.add_at(*j, *i, -coef);
        }
        t
    }

    pub(crate) fn add_at(&mut self, i: usize, j: usize, v: Scalar) {
        self.t[i][j] = &self.t[i][j] + &v;
    }

    pub fn dim(&self) -> usize {
        self.t.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.t[i][j]
    }

    pub fn components(&self) -> &Vec<Vec<Scalar>> {
        &self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..=i).all(|j| (&self.t[i][j] + &self.t[j][i]).is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..i).all(|j| self.t[i][j] == self.t[j][i]))
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim();
        TwoTensor {
            t: (0..d)
                .map(|i| (0..d).map(|j| self.t[j][i].clone()).collect())
                .collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        TwoTensor {
            t: map_matrix(&self.t, |x| x * k),
        }
    }

    /// ad_z applied across both slots, per basis element z; invariance means
    /// every component of every ad_z image vanishes.
    pub fn invariance_check(&self, alg: &LieAlgebra) -> CheckReport {
        let d = self.dim();
        assert_eq!(d, alg.dim(), "tensor dimension matches algebra");
        let mut report = CheckReport::default();
        for z in 0..d {
            for a in 0..d {
                for b in 0..d {
                    let mut residual = Scalar::zero();
                    for i in 0..d {
                        residual = &residual + &(alg.c(z, i, a) * &self.t[i][b]);
                        residual = &residual + &(alg.c(z, i, b) * &self.t[a][i]);
                    }
                    report.record(vec![z, a, b], residual);
                }
            }
        }
        report
    }

    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Self, Error> {
        Ok(TwoTensor {
            t: try_map_matrix(&self.t, |x| x.substitute(bindings))?,
        })
    }

    /// Render an antisymmetric tensor as a sum of wedges over i<j, e.g.
    /// "1/2*J0^P0 + s*J1^J2 - 1/2*J1^P1". The zero tensor renders as "0".
    pub fn render_wedges(&self, names: &[String]) -> String {
        debug_assert!(self.is_antisymmetric());
        let mut out = String::new();
        let d = self.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                let coef = &self.t[i][j];
                if coef.is_zero() {
                    continue;
                }
                let pair = format!("{}^{}", names[i], names[j]);
                let (neg, atom) = wedge_atom(coef, &pair);
                if out.is_empty() {
                    if neg {
                        out.push('-');
                    }
                } else {
                    out.push_str(if neg { " - " } else { " + " });
                }
                out.push_str(&atom);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Split a wedge coefficient into (is-negative, magnitude string). The sign
/// is extracted only from single-atom renderings; anything containing spaces
/// is kept whole and parenthesized.
fn wedge_atom(coef: &Scalar, pair: &str) -> (bool, String) {
    let text = coef.to_string();
    if text.contains(' ') {
        return (false, format!("({text})*{pair}"));
    }
    let (neg, mag) = match text.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, text),
    };
    if mag == "1" {
        (neg, pair.to_string())
    } else {
        (neg, format!("{mag}*{pair}"))
    }
}

impl Add for &TwoTensor {
    type Output = TwoTensor;
    fn add(self, rhs: &TwoTensor) -> TwoTensor {
        assert_eq!(self.dim(), rhs.dim());
        let d = self.dim();
        TwoTensor {
            t: (0..d)
                .map(|i| (0..d).map(|j| &self.t[i][j] + &rhs.t[i][j]).collect())
                .collect(),
        }
    }
}

impl Sub for &TwoTensor {
    type Output = TwoTensor;
    fn sub(self, rhs: &TwoTensor) -> TwoTensor {
        assert_eq!(self.dim(), rhs.dim());
        let d = self.dim();
        TwoTensor {
            t: (0..d)
                .map(|i| (0..d).map(|j| &self.t[i][j] - &rhs.t[i][j]).collect())
                .collect(),
        }
    }
}

impl fmt::Display for TwoTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        let mut first = true;
        for i in 0..d {
            for j in 0..d {
                if self.t[i][j].is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "({})·e{i}⊗e{j}", self.t[i][j])?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// An element of g⊗g⊗g by components T[i][j][k] on e_i⊗e_j⊗e_k.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThreeTensor {
    t: Vec<Vec<Vec<Scalar>>>,
}

impl ThreeTensor {
    pub fn zero(dim: usize) -> Self {
        ThreeTensor {
            t: vec![vec![vec![Scalar::zero(); dim]; dim]; dim],
        }
    }

    pub(crate) fn add_at(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        self.t[i][j][k] = &self.t[i][j][k] + &v;
    }

    pub fn dim(&self) -> usize {
        self.t.len()
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.t[i][j][k]
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().flatten().flatten().all(Scalar::is_zero)
    }

    /// Nonzero components as failures, for reporting a tensor that was
    /// expected to vanish.
    pub fn nonzero_report(&self) -> CheckReport {
        let mut report = CheckReport::default();
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    report.record(vec![i, j, k], self.t[i][j][k].clone());
                }
            }
        }
        report
    }

    /// ad_z applied across all three slots, per basis element z.
    pub fn invariance_check(&self, alg: &LieAlgebra) -> CheckReport {
        let d = self.dim();
        assert_eq!(d, alg.dim(), "tensor dimension matches algebra");
        let mut report = CheckReport::default();
        for z in 0..d {
            for a in 0..d {
                for b in 0..d {
                    for c in 0..d {
                        let mut residual = Scalar::zero();
                        for i in 0..d {
                            residual = &residual + &(alg.c(z, i, a) * &self.t[i][b][c]);
                            residual = &residual + &(alg.c(z, i, b) * &self.t[a][i][c]);
                            residual = &residual + &(alg.c(z, i, c) * &self.t[a][b][i]);
                        }
                        report.record(vec![z, a, b, c], residual);
                    }
                }
            }
        }
        report
    }

    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Self, Error> {
        let mut t = self.t.clone();
        for plane in &mut t {
            for row in plane {
                for entry in row {
                    *entry = entry.substitute(bindings)?;
                }
            }
        }
        Ok(ThreeTensor { t })
    }
}

fn map_matrix(m: &[Vec<Scalar>], f: impl Fn(&Scalar) -> Scalar) -> Vec<Vec<Scalar>> {
    m.iter().map(|row| row.iter().map(&f).collect()).collect()
}

fn try_map_matrix(
    m: &[Vec<Scalar>],
    f: impl Fn(&Scalar) -> Result<Scalar, Error>,
) -> Result<Vec<Vec<Scalar>>, Error> {
    m.iter()
        .map(|row| row.iter().map(&f).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{add_bracket, zero_constants};

    fn so3() -> LieAlgebra {
        let mut c = zero_constants(3);
        add_bracket(&mut c, 0, 1, 2, Scalar::one());
        add_bracket(&mut c, 1, 2, 0, Scalar::one());
        add_bracket(&mut c, 2, 0, 1, Scalar::one());
        LieAlgebra::new(
            ["e0", "e1", "e2"].iter().map(|s| s.to_string()).collect(),
            c,
        )
        .unwrap()
    }

    #[test]
    fn euclidean_form_is_invariant_for_rotations() {
        let id = BilinearForm::new(
            (0..3)
                .map(|i| {
                    (0..3)
                        .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                        .collect()
                })
                .collect(),
            true,
        )
        .unwrap();
        assert!(id.invariance_check(&so3()).passed());
    }

    #[test]
    fn zero_tensors_are_invariant() {
        let alg = so3();
        assert!(TwoTensor::zero(3).invariance_check(&alg).passed());
        assert!(ThreeTensor::zero(3).invariance_check(&alg).passed());
        assert!(BilinearForm::zero(3).invariance_check(&alg).passed());
    }

    #[test]
    fn asymmetric_matrix_rejected_when_flagged_symmetric() {
        let mut mat = vec![vec![Scalar::zero(); 2]; 2];
        mat[0][1] = Scalar::one();
        let err = BilinearForm::new(mat, true).unwrap_err();
        assert!(matches!(err, Error::NotSymmetric { i: 1, j: 0 }));
    }

    #[test]
    fn wedge_construction_is_antisymmetric() {
        let t = TwoTensor::from_wedges(3, &[(0, 1, Scalar::from_ratio(1, 2))]);
        assert!(t.is_antisymmetric());
        assert_eq!(t.get(0, 1), &Scalar::from_ratio(1, 2));
        assert_eq!(t.get(1, 0), &Scalar::from_ratio(-1, 2));
    }

    #[test]
    fn wedge_rendering_folds_signs_and_parenthesizes() {
        let names: Vec<String> = ["J0", "J1", "J2"].iter().map(|s| s.to_string()).collect();
        let spaced = (&Scalar::var(Var::M).pow(4) - &Scalar::one())
            .checked_div(&(&Scalar::from_int(2) * &Scalar::var(Var::S).pow(2)))
            .unwrap();
        let t = TwoTensor::from_wedges(
            3,
            &[
                (0, 1, Scalar::from_ratio(-1, 2)),
                (0, 2, Scalar::one()),
                (1, 2, spaced),
            ],
        );
        assert_eq!(
            t.render_wedges(&names),
            "-1/2*J0^J1 + J0^J2 + ((m^4 - 1) / (2*s^2))*J1^J2"
        );
        assert_eq!(TwoTensor::zero(3).render_wedges(&names), "0");
    }

    #[test]
    fn symmetric_part_splits_off_transpose() {
        let t = TwoTensor::new(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::zero()],
        ]);
        let skew = (&t - &t.transpose()).scale(&Scalar::from_ratio(1, 2));
        let sym = (&t + &t.transpose()).scale(&Scalar::from_ratio(1, 2));
        assert!(skew.is_antisymmetric());
        assert!(sym.is_symmetric());
        assert_eq!(&(&skew + &sym), &t);
    }
}
