//! Signatures, labeled polynomials, the polynomial store and rewrite rules.

mod rules;
mod signature;
mod store;

pub use rules::{Rule, RuleList};
pub use signature::{sig_cmp, sig_mul, Signature};
pub use store::{admissible_check, LabeledPolynomial, PolyStore, TrackedPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SigError {
    #[error("the zero signature has no monomial multiple or rule")]
    ZeroSignature,
    #[error("labeled polynomial carries no cofactors (certified mode is off)")]
    CofactorsAbsent,
}
