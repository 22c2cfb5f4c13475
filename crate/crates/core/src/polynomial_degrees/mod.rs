//! Exact univariate polynomials, resultants, and the mapping degree of
//! polynomial multiplication.

mod degree;
mod polynomial;
mod resultant;

pub use degree::{
    binomial, degree_monic_multiplication, degree_monic_multiplication_with, degree_sphere_multiplication,
    FactorPair, FactorizationCertificate, MonicDegree,
};
pub use polynomial::Polynomial;
pub use resultant::{resultant, resultant_positivity_check, resultant_sign, sylvester_matrix, PositivityCertificate};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("the Sylvester matrix needs integer coefficients")]
    NotIntegral,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
