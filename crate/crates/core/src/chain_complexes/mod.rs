//! Bounded chain complexes of free `Z[G]`-modules and chain maps between
//! them.

mod builtin;
mod chain_map;
mod fragment;
mod lambda_matrix;

pub use builtin::{build_sphere_product_fragment, build_z2_example_complexes, MIN_SPHERE_DIMENSION};
pub use chain_map::PartialChainMap;
pub use fragment::{ChainFragment, ComplexCheck, ComplexFailure, Generator};
pub use lambda_matrix::LambdaMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("the filtration of S^{n} x S^{n} is only available for n >= {min}")]
    UnsupportedDimension { n: i64, min: i64 },
    #[error("malformed chain fragment: {0}")]
    Malformed(String),
    #[error("the chain map does not commute with the boundaries in degree {degree}")]
    NonCommutingPartialMap { degree: i64 },
}
