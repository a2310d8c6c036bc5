//! Vanishing-deformation-scale limits of the transported structures: which
//! objects stay finite as `s` goes to zero, and what the finite algebra is.
//!
//! Parameter bindings are applied before the limit. The order matters: case
//! D's r-matrix diverges for a symbolic parameter yet is finite at the
//! self-dual point.

use crate::basis::Pushforward;
use crate::bialgebra::assemble_double;
use crate::catalog::CaseSpec;
use crate::error::Error;
use crate::kinematics::{identify_parameters, Identification, Sign};
use crate::lie::{zero_constants, LieAlgebra};
use crate::scalar::{LimitResult, Scalar, Var};
use crate::tensor::{BilinearForm, TwoTensor};
use std::fmt;

/// Entrywise limit of a transported object. A single divergent entry makes
/// the whole object divergent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Limit<T> {
    Finite(T),
    Divergent,
}

impl<T> Limit<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Limit::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&T> {
        match self {
            Limit::Finite(v) => Some(v),
            Limit::Divergent => None,
        }
    }
}

/// Isomorphism class of the limit algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum LimitClass {
    Iso21,
    Iso3,
    Divergent,
}

impl fmt::Display for LimitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LimitClass::Iso21 => "iso(2,1)",
            LimitClass::Iso3 => "iso(3)",
            LimitClass::Divergent => "divergent",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionResult {
    pub algebra_limit: Limit<LieAlgebra>,
    pub pairing_limit: Limit<BilinearForm>,
    pub r_skew_limit: Limit<TwoTensor>,
    pub classified_as: LimitClass,
}

fn scalar_limit(x: &Scalar) -> Option<Scalar> {
    match x.limit_at_zero(Var::S) {
        LimitResult::Finite(v) => Some(v),
        LimitResult::Divergent => None,
    }
}

pub fn algebra_limit(alg: &LieAlgebra) -> Limit<LieAlgebra> {
    let dim = alg.dim();
    let mut c = zero_constants(dim);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                match scalar_limit(alg.c(i, j, k)) {
                    Some(v) => c[i][j][k] = v,
                    None => return Limit::Divergent,
                }
            }
        }
    }
    Limit::Finite(LieAlgebra::new_unchecked(alg.names().to_vec(), c))
}

pub fn form_limit(b: &BilinearForm) -> Limit<BilinearForm> {
    let dim = b.dim();
    let mut mat = vec![vec![Scalar::zero(); dim]; dim];
    for (i, row) in mat.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            match scalar_limit(b.get(i, j)) {
                Some(v) => *entry = v,
                None => return Limit::Divergent,
            }
        }
    }
    let form =
        BilinearForm::new(mat, b.symmetric()).expect("entrywise limits preserve symmetry");
    Limit::Finite(form)
}

pub fn two_tensor_limit(t: &TwoTensor) -> Limit<TwoTensor> {
    let dim = t.dim();
    let mut out = vec![vec![Scalar::zero(); dim]; dim];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            match scalar_limit(t.get(i, j)) {
                Some(v) => *entry = v,
                None => return Limit::Divergent,
            }
        }
    }
    Limit::Finite(TwoTensor::new(out))
}

/// A finite limit counts as flat-kinematical only if it lands exactly on
/// the vanishing-curvature bracket pattern.
pub fn classify(alg: &LieAlgebra) -> LimitClass {
    if !alg.jacobi_check().passed() {
        return LimitClass::Divergent;
    }
    match identify_parameters(alg) {
        Identification::Kinematical { alpha, chi } if chi.is_zero() => match alpha {
            Sign::Minus => LimitClass::Iso21,
            Sign::Plus => LimitClass::Iso3,
        },
        _ => LimitClass::Divergent,
    }
}

/// Bind parameters, transport everything to the kinematical basis, then take
/// the scale limit entrywise.
pub fn contract_case(
    spec: &CaseSpec,
    bindings: &[(Var, Scalar)],
) -> Result<ContractionResult, Error> {
    let bound = spec.substituted(bindings)?;
    let double = assemble_double(&bound.bialgebra);
    let kin_algebra = double.algebra().pushforward(&bound.basis_change);
    let kin_pairing = double.pairing().pushforward(&bound.basis_change);
    let (r_skew, _) = double.skew_and_omega();
    let kin_r_skew = r_skew.pushforward(&bound.basis_change);

    let algebra_limit = algebra_limit(&kin_algebra);
    let classified_as = match &algebra_limit {
        Limit::Finite(alg) => classify(alg),
        Limit::Divergent => LimitClass::Divergent,
    };
    Ok(ContractionResult {
        algebra_limit,
        pairing_limit: form_limit(&kin_pairing),
        r_skew_limit: two_tensor_limit(&kin_r_skew),
        classified_as,
    })
}
