//! Certified evaluation: interval arithmetic, bound expressions, target
//! quantities, and the declarative inequality catalog.

pub mod catalog;
pub mod expr;
pub mod interval;
pub mod quantity;

pub use catalog::{bound_catalog, BoundCase, BoundSide, CaseId, SideKind};
pub use expr::BoundExpr;
pub use interval::{format_float, render_interval, PrecInterval};
pub use quantity::{target_quantity, Quantity};

use thiserror::Error;

/// Evaluation failures. The first two are definitive ("the bound is
/// undefined at this n"); `Indeterminate` means the enclosure was too wide
/// to decide a domain condition and a retry at higher precision may help.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("logarithm argument is certainly non-positive")]
    LogDomain,
    #[error("square-root radicand is certainly negative")]
    SqrtDomain,
    #[error("enclosure straddles a domain boundary; precision insufficient")]
    Indeterminate,
    #[error("division by an exactly zero interval")]
    DivisionByZero,
}

impl EvalError {
    /// True when raising the working precision can possibly change the answer.
    pub fn is_retryable(&self) -> bool {
        matches!(self, EvalError::Indeterminate)
    }
}
