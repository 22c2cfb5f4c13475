//! Exact computations for the primary equivariant obstruction to
//! `D8`-equivariant maps `S^d x S^d -> S(W^j)`.
//!
//! The crate is layered bottom-up:
//!
//! * [`group_algebra`]: finite groups as Cayley tables, integral group rings
//!   and rank-one characters.
//! * [`chain_complexes`]: bounded complexes of free `Z[G]`-modules, including
//!   the top fragment of the filtration of `S^n x S^n`.
//! * [`cohomology`]: integer matrices, Smith normal form and twisted cohomology.
//! * [`polynomial_degrees`]: resultants and the degree of polynomial
//!   multiplication.
//! * [`obstruction`]: the chain-map obstruction and the admissibility verdicts
//!   for the two-hyperplane equipartition problem.
//!
//! All arithmetic is exact (arbitrary precision integers and rationals).

pub mod chain_complexes;
pub mod cohomology;
pub mod group_algebra;
pub mod obstruction;
pub mod polynomial_degrees;
pub mod serde_int;

pub use chain_complexes::{ChainFragment, PartialChainMap};
pub use cohomology::{AbelianGroupPresentation, CohomologyClass, IntMatrix};
pub use group_algebra::{Character, GroupRingElement, GroupTable};
pub use polynomial_degrees::Polynomial;
