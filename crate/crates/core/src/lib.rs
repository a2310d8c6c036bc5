//! Exact symbolic verification of the classical double structures on the
//! 3d kinematical algebras so(3,1) and so(2,2), and of their flat limits.
//!
//! Everything is computed over rational functions in the deformation
//! parameters with coefficients in Q(sqrt(2)); every check is an exact
//! zero-residual identity, never a numerical tolerance.

pub mod basis;
pub mod bialgebra;
pub mod catalog;
pub mod check;
pub mod contraction;
pub mod error;
pub mod kinematics;
pub mod lie;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use num_rational::BigRational;

pub use basis::{invert_matrix, BasisChange, Matrix, Pushforward};
pub use bialgebra::{build_double, duality_swap, schouten_bracket, DoubleAlgebra, LieBialgebra};
pub use catalog::{case_spec, list_cases, CaseId, CaseMetadata, CaseSpec, LimitExpectation, Regime};
pub use check::{CheckReport, Failure};
pub use contraction::{contract_case, ContractionResult, Limit, LimitClass};
pub use error::Error;
pub use kinematics::{identify_parameters, Decomposition, Identification, KinematicalAlgebra, Sign};
pub use lie::LieAlgebra;
pub use report::{table2_row, table2_rows, verify_case, CheckRecord, Table2Limit, Table2Row, VerificationReport, CHECK_NAMES};
pub use scalar::{LimitResult, Poly, QuadRational, Scalar, Var};
pub use tensor::{BilinearForm, ThreeTensor, TwoTensor};
