//! Exact linear programming for degree profiles: model construction, an exact
//! simplex solver, explicit dual certificates and duality audits.

mod certificate;
mod duality;
mod model;
mod program;
mod simplex;

use thiserror::Error;

use crate::bounds::BoundsError;

pub use certificate::{
    certificate_prop1, certificate_prop2, certificate_thm1, check_feasible, check_feasible_fast,
    dual_residual, CertificateKind, ConstraintCheck, DualCertificate, DualConstraint,
    FeasibilityReport, Tightness,
};
pub use duality::{
    complementary_slackness, weak_duality_audit, SlacknessEntry, SlacknessReport, WeakDualityAudit,
};
pub use model::{build_dual, build_primal, PrimalVar, Variant};
pub use program::{Constraint, LinearProgram, LpSolution, Relation, Sense, Sign, Status, Variable};
pub use simplex::solve;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error(transparent)]
    Params(#[from] BoundsError),
    #[error("malformed program: {0}")]
    InvalidProgram(String),
    #[error("solution failed verification: {0}")]
    Verification(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
}
