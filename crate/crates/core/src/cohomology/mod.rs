//! Integer linear algebra and cohomology of `Hom_{Z[G]}(C, Z_chi)`.
//!
//! A cochain on a free module `Z[G]^r` with values in the rank-one module
//! `Z_chi` is determined by its values on the `r` generators, so every
//! cochain group is `Z^r` and the coboundary `δφ = φ∘∂` has matrix
//! `ε_chi(∂)^T`.

mod matrix;
mod presentation;
mod snf;

use serde::Serialize;

pub use matrix::IntMatrix;
pub use presentation::{AbelianGroupPresentation, CohomologyClass};
pub use snf::{smith_normal_form, SmithDecomposition};

use crate::chain_complexes::ChainFragment;
use crate::group_algebra::Character;
use crate::serde_int::JsonInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("degree {degree} is not an interior degree of the fragment ({bottom}..={top})")]
    DegreeOutOfRange { degree: i64, bottom: i64, top: i64 },
    #[error("vector is not a cocycle")]
    NotACocycle,
    #[error("the two maps do not compose to zero")]
    NotAComplex,
    #[error("expected a vector of length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("character and fragment live over different groups")]
    GroupMismatch,
}

/// One coboundary `C^from -> C^to` (with `to = from + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coboundary {
    pub from_degree: i64,
    pub to_degree: i64,
    pub matrix: IntMatrix,
}

/// The cochain complex `Hom_{Z[G]}(C, Z_chi)`: one coboundary per boundary
/// of `c`, top of the fragment first.
pub fn twisted_cochain(c: &ChainFragment, chi: &Character) -> Vec<Coboundary> {
    c.degrees()
        .iter()
        .zip(c.augmented_boundaries(chi))
        .map(|(&k, m)| Coboundary { from_degree: k - 1, to_degree: k, matrix: m.transpose() })
        .collect()
}

/// `H^degree(Hom_{Z[G]}(c, Z_chi))`; `degree` must have a neighbour on
/// both sides inside the fragment.
pub fn cohomology_at(c: &ChainFragment, chi: &Character, degree: i64) -> Result<AbelianGroupPresentation, CohomologyError> {
    if !(degree < c.top_degree() && degree > c.bottom_degree()) {
        return Err(CohomologyError::DegreeOutOfRange {
            degree,
            bottom: c.bottom_degree(),
            top: c.top_degree(),
        });
    }
    cohomology_with_vanishing_top(c, chi, degree)
}

/// Like [`cohomology_at`], but the top degree of the fragment is allowed and
/// treated as if the next module up were zero. This is the convention for
/// truncated complexes `C_{-1} <- ... <- C_{n+1}` in the chain-map
/// obstruction.
pub(crate) fn cohomology_with_vanishing_top(
    c: &ChainFragment,
    chi: &Character,
    degree: i64,
) -> Result<AbelianGroupPresentation, CohomologyError> {
    if chi.values().len() != c.group().order() {
        return Err(CohomologyError::GroupMismatch);
    }
    if degree > c.top_degree() || degree <= c.bottom_degree() {
        return Err(CohomologyError::DegreeOutOfRange {
            degree,
            bottom: c.bottom_degree(),
            top: c.top_degree(),
        });
    }
    let rank = c.rank(degree);
    let outgoing = match c.boundary(degree + 1) {
        Some(b) => b.augment(chi).transpose(),
        None => IntMatrix::zeros(0, rank),
    };
    let incoming = c.boundary(degree).expect("degree above the bottom").augment(chi).transpose();
    AbelianGroupPresentation::subquotient(&outgoing, &incoming)
}

/// Wire form of a cohomology computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub degree: i64,
    pub invariant_factors: Vec<JsonInt>,
    pub free_rank: usize,
    pub generator_cocycles: Vec<Vec<JsonInt>>,
}

impl CohomologyReport {
    pub fn new(degree: i64, p: &AbelianGroupPresentation) -> Self {
        CohomologyReport {
            degree,
            invariant_factors: p.invariant_factors.clone(),
            free_rank: p.free_rank,
            generator_cocycles: p
                .generator_cocycles()
                .into_iter()
                .map(|v| v.into_iter().map(JsonInt).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain_complexes::{build_sphere_product_fragment, ChainFragment, Generator, LambdaMatrix};
    use crate::group_algebra::{build_d8, Character};
    use num_bigint::BigInt;

    fn sphere_character() -> Character {
        Character::from_signs(&build_d8(), &[("alpha", 1), ("beta", 1), ("gamma", -1)]).unwrap()
    }

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| a.into()).collect()
    }

    #[test]
    fn even_coboundaries() {
        let c = build_sphere_product_fragment(10).unwrap();
        let cob = twisted_cochain(&c, &sphere_character());
        assert_eq!(cob[0].from_degree, 19);
        assert_eq!(cob[0].to_degree, 20);
        assert_eq!(cob[0].matrix, IntMatrix::from_rows(&[vec![2, 2]]));
        assert_eq!(cob[1].matrix, IntMatrix::from_rows(&[vec![4, 0, 0], vec![-4, 0, 0]]));
    }

    #[test]
    fn trivial_character_on_zero_boundary() {
        let g = build_d8();
        let c = ChainFragment::new(
            g.clone(),
            1,
            vec![vec![Generator::new("a")], vec![Generator::new("b")]],
            vec![LambdaMatrix::zeros(1, 1)],
            false,
        )
        .unwrap();
        let cob = twisted_cochain(&c, &Character::trivial(&g));
        assert!(cob[0].matrix.is_zero());
    }

    #[test]
    fn z4_for_even_n() {
        let c = build_sphere_product_fragment(10).unwrap();
        let p = cohomology_at(&c, &sphere_character(), 19).unwrap();
        assert_eq!(p.invariant_factors(), v(&[4]));
        assert_eq!(p.free_rank, 0);
        assert_eq!(p.generator_cocycles(), vec![v(&[1, -1])]);
        assert_eq!(p.reduce_class(&v(&[2, -2])).unwrap().coordinates(), v(&[2]));
    }

    #[test]
    fn klein_for_odd_n() {
        let c = build_sphere_product_fragment(9).unwrap();
        let p = cohomology_at(&c, &sphere_character(), 17).unwrap();
        assert_eq!(p.invariant_factors(), v(&[2, 2]));
        assert_eq!(p.free_rank, 0);
    }

    #[test]
    fn free_rank_one_for_zero_boundaries() {
        let g = build_d8();
        let c = ChainFragment::new(
            g.clone(),
            2,
            vec![vec![], vec![Generator::new("y")], vec![]],
            vec![LambdaMatrix::zeros(1, 0), LambdaMatrix::zeros(0, 1)],
            false,
        )
        .unwrap();
        let p = cohomology_at(&c, &Character::trivial(&g), 1).unwrap();
        assert_eq!(p.free_rank, 1);
        assert!(p.invariant_factors.is_empty());
    }

    #[test]
    fn out_of_range_degrees() {
        let c = build_sphere_product_fragment(10).unwrap();
        for d in [20, 18, 3] {
            assert!(matches!(
                cohomology_at(&c, &sphere_character(), d),
                Err(CohomologyError::DegreeOutOfRange { .. })
            ));
        }
    }

    #[test]
    fn report_shape() {
        let c = build_sphere_product_fragment(8).unwrap();
        let p = cohomology_at(&c, &sphere_character(), 15).unwrap();
        let json = serde_json::to_value(CohomologyReport::new(15, &p)).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"degree": 15, "invariant_factors": [4], "free_rank": 0, "generator_cocycles": [[1, -1]]})
        );
    }
}
