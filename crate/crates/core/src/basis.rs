//! Exact basis changes: matrix inversion over the scalar field and the
//! transport of algebras, forms, and tensors to a new basis.

use crate::error::Error;
use crate::lie::LieAlgebra;
use crate::scalar::{Scalar, Var};
use crate::tensor::{BilinearForm, ThreeTensor, TwoTensor};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zero_matrix(dim: usize) -> Matrix {
    vec![vec![Scalar::zero(); dim]; dim]
}

pub fn identity_matrix(dim: usize) -> Matrix {
    let mut m = zero_matrix(dim);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut out = zero_matrix(d);
    for i in 0..d {
        for j in 0..d {
            for (k, b_row) in b.iter().enumerate() {
                out[i][j] = &out[i][j] + &(&a[i][k] * &b_row[j]);
            }
        }
    }
    out
}

/// Exact inverse by Gauss-Jordan elimination over the scalar field, with a
/// nonzero-pivot search per column. The field arithmetic keeps every
/// intermediate entry in canonical form, so no growth control is needed.
pub fn invert_matrix(m: &Matrix) -> Result<Matrix, Error> {
    let d = m.len();
    assert!(m.iter().all(|row| row.len() == d), "square matrix");
    let mut a = m.clone();
    let mut inv = identity_matrix(d);
    for col in 0..d {
        let pivot = (col..d)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularMatrix { column: col })?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let scale = a[col][col].inv().expect("pivot is nonzero");
        for j in 0..d {
            a[col][j] = &a[col][j] * &scale;
            inv[col][j] = &inv[col][j] * &scale;
        }
        for r in 0..d {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..d {
                a[r][j] = &a[r][j] - &(&factor * &a[col][j]);
                inv[r][j] = &inv[r][j] - &(&factor * &inv[col][j]);
            }
        }
    }
    Ok(inv)
}

/// An invertible change of basis: row a of `m` expresses the new basis
/// vector f_a in the old basis, and the exact inverse is cached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BasisChange {
    m: Matrix,
    inv: Matrix,
    target_names: Option<Vec<String>>,
}

impl BasisChange {
    pub fn new(m: Matrix, target_names: Option<Vec<String>>) -> Result<Self, Error> {
        let inv = invert_matrix(&m)?;
        debug_assert_eq!(mat_mul(&m, &inv), identity_matrix(m.len()));
        Ok(BasisChange {
            m,
            inv,
            target_names,
        })
    }

    pub fn identity(dim: usize) -> Self {
        BasisChange {
            m: identity_matrix(dim),
            inv: identity_matrix(dim),
            target_names: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inv
    }

    pub fn target_names(&self) -> Option<&[String]> {
        self.target_names.as_deref()
    }

    /// The reverse change, mapping the new basis back to the old. Target
    /// names do not transport.
    pub fn inverted(&self) -> Self {
        BasisChange {
            m: self.inv.clone(),
            inv: self.m.clone(),
            target_names: None,
        }
    }

    /// Substitute parameters in the forward matrix and re-invert, erring if
    /// the specialized matrix is singular.
    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Self, Error> {
        let m: Matrix = self
            .m
            .iter()
            .map(|row| row.iter().map(|x| x.substitute(bindings)).collect())
            .collect::<Result<_, _>>()?;
        BasisChange::new(m, self.target_names.clone())
    }
}

/// Transport to a new basis. Algebras re-express their brackets, bilinear
/// forms transform covariantly, tensor components contravariantly.
pub trait Pushforward {
    fn pushforward(&self, change: &BasisChange) -> Self;
}

impl Pushforward for LieAlgebra {
    fn pushforward(&self, change: &BasisChange) -> Self {
        let d = self.dim();
        assert_eq!(d, change.dim(), "basis change dimension matches algebra");
        let m = change.matrix();
        let minv = change.inverse();
        let mut c = crate::lie::zero_constants(d);
        // [f_a, f_b] expanded through the old brackets, then re-expressed:
        // c'[a][b][e] = M[a][i] M[b][j] c[i][j][k] Minv[k][e].
        for a in 0..d {
            for b in 0..d {
                for i in 0..d {
                    if m[a][i].is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        let w = &m[a][i] * &m[b][j];
                        if w.is_zero() {
                            continue;
                        }
                        for k in 0..d {
                            if self.c(i, j, k).is_zero() {
                                continue;
                            }
                            let v = &w * self.c(i, j, k);
                            for e in 0..d {
                                if !minv[k][e].is_zero() {
                                    c[a][b][e] = &c[a][b][e] + &(&v * &minv[k][e]);
                                }
                            }
                        }
                    }
                }
            }
        }
        let names = match change.target_names() {
            Some(n) => n.to_vec(),
            None => self.names().to_vec(),
        };
        LieAlgebra::new_unchecked(names, c)
    }
}

impl Pushforward for BilinearForm {
    fn pushforward(&self, change: &BasisChange) -> Self {
        let d = self.dim();
        assert_eq!(d, change.dim());
        let m = change.matrix();
        let mut mat = zero_matrix(d);
        // B'[a][b] = ⟨f_a, f_b⟩ = M[a][i] B[i][j] M[b][j].
        for a in 0..d {
            for b in 0..d {
                for i in 0..d {
                    if m[a][i].is_zero() {
                        continue;
                    }
                    for j in 0..d {
                        let term = &(&m[a][i] * self.get(i, j)) * &m[b][j];
                        mat[a][b] = &mat[a][b] + &term;
                    }
                }
            }
        }
        BilinearForm::new(mat, false).expect("unflagged form")
    }
}

impl Pushforward for TwoTensor {
    fn pushforward(&self, change: &BasisChange) -> Self {
        let d = self.dim();
        assert_eq!(d, change.dim());
        let minv = change.inverse();
        let mut out = TwoTensor::zero(d);
        // e_i ⊗ e_j = Minv[i][a] Minv[j][b] f_a ⊗ f_b.
        for i in 0..d {
            for j in 0..d {
                if self.get(i, j).is_zero() {
                    continue;
                }
                for a in 0..d {
                    if minv[i][a].is_zero() {
                        continue;
                    }
                    for b in 0..d {
                        let term = &(self.get(i, j) * &minv[i][a]) * &minv[j][b];
                        out.add_at(a, b, term);
                    }
                }
            }
        }
        out
    }
}

impl Pushforward for ThreeTensor {
    fn pushforward(&self, change: &BasisChange) -> Self {
        let d = self.dim();
        assert_eq!(d, change.dim());
        let minv = change.inverse();
        let mut out = ThreeTensor::zero(d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if self.get(i, j, k).is_zero() {
                        continue;
                    }
                    for a in 0..d {
                        if minv[i][a].is_zero() {
                            continue;
                        }
                        for b in 0..d {
                            let partial = &(self.get(i, j, k) * &minv[i][a]) * &minv[j][b];
                            if partial.is_zero() {
                                continue;
                            }
                            for c in 0..d {
                                if !minv[k][c].is_zero() {
                                    out.add_at(a, b, c, &partial * &minv[k][c]);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}
