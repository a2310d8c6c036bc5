//! Error type shared across the crate.

use crate::catalog::CaseId;
use crate::check::CheckReport;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero: {expr}")]
    DivisionByZero { expr: String },

    #[error("denominator vanishes under {binding}")]
    DenominatorVanishes { binding: String },

    #[error("singular matrix: column {column} has no nonzero pivot")]
    SingularMatrix { column: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("structure constants are not antisymmetric in the ({i},{j}) slot")]
    NotAntisymmetric { i: usize, j: usize },

    #[error("Jacobi identity fails:\n{report}")]
    JacobiFails { report: CheckReport },

    #[error("cocommutator constants are not antisymmetric in the upper pair for generator {n}")]
    CocommutatorNotAntisymmetric { n: usize },

    #[error("cocycle condition fails:\n{report}")]
    CocycleFails { report: CheckReport },

    #[error("bilinear form is not symmetric at ({i},{j})")]
    NotSymmetric { i: usize, j: usize },

    #[error("unknown case id `{0}` (valid ids: A, B, C, D, E, F, G)")]
    UnknownCase(String),

    #[error("case {case} needs a sign regime for eta (pos or neg)")]
    RegimeRequired { case: CaseId },

    #[error("case {case} has a single regime; drop the regime choice")]
    RegimeNotApplicable { case: CaseId },

    #[error("`{name}` is not a tunable parameter of case {case}")]
    UnknownParameter { case: CaseId, name: String },

    #[error("invalid value for `{name}`: {reason}")]
    InvalidParameterValue { name: String, reason: String },
}
