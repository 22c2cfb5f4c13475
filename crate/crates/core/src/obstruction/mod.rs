//! The chain-map obstruction and its evaluation for the two-hyperplane
//! equipartition problem.
//!
//! [`chain_obstruction`] is the general engine: given a chain map defined up
//! to degree `n` and a target whose `n`-th homology is infinite cyclic, it
//! computes the class of `π ∘ f_n ∘ ∂` in `H^{n+1}(C; H_n(D))`.
//! The [`equipartition`] functions apply it to the `D8`-complexes of
//! `S^d x S^d`, where the class is known in closed form.

mod engine;
pub mod equipartition;
mod input;

pub use engine::{chain_obstruction, z2_example_problem, CyclicHomology, ObstructionOutcome, ObstructionProblem};
pub use equipartition::{
    binomial_parity, congruence_check, coefficient_character, decide_admissible, theta_equipartition,
    AdmissibilityReport, CongruenceReport, ThetaReport, Verdict,
};
pub use input::ProblemInput;

use crate::chain_complexes::ChainError;
use crate::cohomology::CohomologyError;
use crate::polynomial_degrees::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructionError {
    #[error("the chain map does not commute with the boundaries in degree {degree}")]
    NonCommutingPartialMap { degree: i64 },
    #[error("generator `{label}` in degree {degree} is not free")]
    NonFreeModule { degree: i64, label: String },
    #[error("unsupported coefficients: {0}")]
    UnsupportedCoefficients(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Chain(ChainError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<ChainError> for ObstructionError {
    fn from(e: ChainError) -> Self {
        match e {
            ChainError::NonCommutingPartialMap { degree } => ObstructionError::NonCommutingPartialMap { degree },
            other => ObstructionError::Chain(other),
        }
    }
}
