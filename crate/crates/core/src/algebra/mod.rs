//! Prime fields, monomials, monomial orders and sparse polynomials.

mod field;
mod monomial;
mod polynomial;
mod reduce;

pub use field::{is_prime, Coeff, PrimeField};
pub use monomial::{mono_div, mono_lcm, order_cmp, Exponent, Monomial, MonomialOrder};
pub use polynomial::{Polynomial, Ring, Term};
pub use reduce::{
    interreduce, interreduce_with, is_top_reducible, normal_form, normal_form_counted, normal_form_with,
    reduce_groebner_basis, reduce_groebner_basis_with, spoly, spoly_with, top_reduce_step, top_reduce_step_with, top_reduces_to_zero,
    Reducible,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("monomial arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("monomial is not divisible")]
    NotDivisible,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("characteristic {0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unknown monomial order `{0}`")]
    UnknownOrder(String),
}
