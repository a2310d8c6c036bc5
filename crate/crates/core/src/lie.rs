//! Finite-dimensional Lie algebras over exact scalars: structure constants
//! in a fixed basis and Jacobi verification.

use crate::check::CheckReport;
use crate::error::Error;
use crate::scalar::{Scalar, Var};

/// A Lie algebra given by structure constants: c[i][j][k] is the e_k
/// coefficient of [e_i, e_j]. Both (i,j) and (j,i) entries are stored, so
/// contraction code never branches on index order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra {
    names: Vec<String>,
    c: Vec<Vec<Vec<Scalar>>>,
}

/// Empty constant array for a dim-dimensional algebra, filled in with
/// `add_bracket`.
pub fn zero_constants(dim: usize) -> Vec<Vec<Vec<Scalar>>> {
    vec![vec![vec![Scalar::zero(); dim]; dim]; dim]
}

/// Record [e_i, e_j] ⊇ v·e_k together with its antisymmetric image.
pub fn add_bracket(c: &mut [Vec<Vec<Scalar>>], i: usize, j: usize, k: usize, v: Scalar) {
    c[j][i][k] = &c[j][i][k] - &v;
    c[i][j][k] = &c[i][j][k] + &v;
}

impl LieAlgebra {
    /// Validating constructor: checks shape, antisymmetry, and Jacobi.
    pub fn new(names: Vec<String>, c: Vec<Vec<Vec<Scalar>>>) -> Result<Self, Error> {
        let alg = Self::new_unchecked(names, c);
        let d = alg.dim();
        if alg.c.len() != d || alg.c.iter().any(|p| p.len() != d || p.iter().any(|q| q.len() != d))
        {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: alg.c.len(),
            });
        }
        for i in 0..d {
            for j in 0..=i {
                for k in 0..d {
                    if !(&alg.c[i][j][k] + &alg.c[j][i][k]).is_zero() {
                        return Err(Error::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        alg.jacobi_check()
            .into_result(|report| Error::JacobiFails { report })?;
        Ok(alg)
    }

    /// Skips all validation; for negative tests and for constants produced
    /// by operations that preserve the invariants.
    pub fn new_unchecked(names: Vec<String>, c: Vec<Vec<Vec<Scalar>>>) -> Self {
        LieAlgebra { names, c }
    }

    pub fn abelian(names: Vec<String>) -> Self {
        let dim = names.len();
        LieAlgebra {
            names,
            c: zero_constants(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[i][j][k]
    }

    pub fn constants(&self) -> &Vec<Vec<Vec<Scalar>>> {
        &self.c
    }

    /// Jacobiator residuals: for i<j<k and every output slot l,
    /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] must vanish.
    pub fn jacobi_check(&self) -> CheckReport {
        let d = self.dim();
        let mut report = CheckReport::default();
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    for l in 0..d {
                        let mut residual = Scalar::zero();
                        for m in 0..d {
                            residual = &residual + &(&self.c[i][j][m] * &self.c[m][k][l]);
                            residual = &residual + &(&self.c[j][k][m] * &self.c[m][i][l]);
                            residual = &residual + &(&self.c[k][i][m] * &self.c[m][j][l]);
                        }
                        report.record(vec![i, j, k, l], residual);
                    }
                }
            }
        }
        report
    }

    /// Entrywise parameter substitution. Antisymmetry and Jacobi specialize,
    /// so the result is not re-validated.
    pub fn substitute(&self, bindings: &[(Var, Scalar)]) -> Result<Self, Error> {
        let mut c = self.c.clone();
        for plane in &mut c {
            for row in plane {
                for entry in row {
                    *entry = entry.substitute(bindings)?;
                }
            }
        }
        Ok(LieAlgebra {
            names: self.names.clone(),
            c,
        })
    }
}
