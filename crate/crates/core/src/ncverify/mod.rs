//! Finitely presented quantum algebras: R-matrix constants, matrix relation
//! presentations, straightening, graded PBW audits and bounded-degree ideal
//! membership.

pub mod audit;
pub mod free;
pub mod ideal;
pub mod presentation;
pub mod rmatrix;
pub mod straighten;

pub use audit::{
    check_matrix_identity, check_morphism, graded_dimension_audit, identity_suite, AuditOutcome, MorphismName,
    Verdict,
};
pub use free::{FreeAlgElem, FreeMatrixExpr, Word};
pub use ideal::{Grading, TruncatedIdeal};
pub use presentation::{build_presentation, Presentation, PresentationName, RConsts, Relation};
pub use rmatrix::{check_r_constants, r_matrix, r_matrix_universal, NumericRMatrix, SquareMatrix};
pub use straighten::{straighten, Rewriter, Strategy};

use crate::scalars::ScalarError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("unknown presentation `{0}`")]
    UnknownPresentation(String),
    #[error("rewrite budget of {0} steps exceeded")]
    RewriteBudgetExceeded(usize),
    #[error("presentation {0} has no rewriting orientation")]
    NoOrientation(String),
    #[error("no rewriting rule for the non-standard pair {0}")]
    IncompleteOrientation(String),
    #[error("expression of degree {degree} exceeds the bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
