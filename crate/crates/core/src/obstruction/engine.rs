use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::ObstructionError;
use crate::chain_complexes::{build_z2_example_complexes, ChainFragment, LambdaMatrix, PartialChainMap};
use crate::cohomology::{
    cohomology_with_vanishing_top, AbelianGroupPresentation, CohomologyClass, CohomologyError, IntMatrix,
};
use crate::group_algebra::{Character, GroupRingElement};
use crate::serde_int::JsonInt;

/// `H_n(D)` over the integers when it is infinite cyclic, together with the
/// projection `π: Z_n(D) -> Z` that sends a chosen generator cycle to 1.
///
/// The group acts on `H_n(D)` through a sign character, which is derived
/// from the action on the generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicHomology {
    degree: i64,
    order: usize,
    presentation: AbelianGroupPresentation,
    generator: Vec<GroupRingElement>,
    orientation: BigInt,
    character: Character,
}

fn flatten(v: &[GroupRingElement], order: usize) -> Vec<BigInt> {
    v.iter().flat_map(|e| e.to_dense(order)).collect()
}

impl CyclicHomology {
    pub fn new(target: &ChainFragment, degree: i64, generator: Vec<GroupRingElement>) -> Result<Self, ObstructionError> {
        let g = target.group();
        let order = g.order();
        if !target.contains(degree) {
            return Err(ObstructionError::Invalid(format!("target has no degree {degree}")));
        }
        let rank = target.rank(degree);
        if generator.len() != rank {
            return Err(ObstructionError::Invalid(format!(
                "homology generator has {} entries, D_{degree} has rank {rank}",
                generator.len()
            )));
        }
        let n = rank * order;
        let outgoing = match target.boundary(degree) {
            Some(b) => b.expand_over_integers(g),
            None if target.is_augmented() => IntMatrix::from_vec(1, n, vec![BigInt::one(); n]),
            None => IntMatrix::zeros(0, n),
        };
        let incoming = match target.boundary(degree + 1) {
            Some(b) => b.expand_over_integers(g),
            None => IntMatrix::zeros(n, 0),
        };
        let presentation = AbelianGroupPresentation::subquotient(&outgoing, &incoming)?;
        if presentation.free_rank != 1 || presentation.torsion_rank() != 0 {
            return Err(ObstructionError::UnsupportedCoefficients(format!(
                "H_{degree}(D) has invariant factors {:?} and free rank {}; only Z is supported",
                presentation.invariant_factors(),
                presentation.free_rank
            )));
        }
        let class = presentation.reduce_class(&flatten(&generator, order)).map_err(|e| match e {
            CohomologyError::NotACocycle => ObstructionError::Invalid("homology generator is not a cycle".into()),
            other => other.into(),
        })?;
        let orientation = class.coordinates()[0].clone();
        if !orientation.abs().is_one() {
            return Err(ObstructionError::Invalid(format!(
                "homology generator represents {orientation} times a generator of H_{degree}(D)"
            )));
        }
        let mut this = CyclicHomology {
            degree,
            order,
            presentation,
            generator,
            orientation,
            character: Character::trivial(g),
        };
        let mut values = Vec::with_capacity(order);
        for x in 0..order {
            let moved: Vec<GroupRingElement> = this.generator.iter().map(|e| e.left_translate(x, g)).collect();
            let v = this.project(&moved)?;
            values.push(if v.is_one() { 1 } else { -1 });
        }
        this.character = Character::from_values(g, values)
            .map_err(|e| ObstructionError::UnsupportedCoefficients(format!("action on H_{degree}(D): {e}")))?;
        Ok(this)
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The sign character by which the group acts on `H_n(D)`.
    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn generator(&self) -> &[GroupRingElement] {
        &self.generator
    }

    /// `π` as an integer functional on the flattened coordinates of `D_n`
    /// (generator-major, then group element), valid on cycles.
    pub fn projection_vector(&self) -> Vec<BigInt> {
        self.presentation.coordinate_map.row(0).iter().map(|c| c * &self.orientation).collect()
    }

    /// `π(z)` for a cycle `z` of `D_n`.
    pub fn project(&self, cycle: &[GroupRingElement]) -> Result<BigInt, ObstructionError> {
        let class = self.presentation.reduce_class(&flatten(cycle, self.order)).map_err(|e| match e {
            CohomologyError::NotACocycle => ObstructionError::Invalid("f_n ∘ ∂ does not land in the cycles of D".into()),
            other => other.into(),
        })?;
        Ok(&class.coordinates()[0] * &self.orientation)
    }
}

/// A chain map `f` up to degree `n` and the data identifying `H_n(D)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionProblem {
    map: PartialChainMap,
    degree: i64,
    homology: CyclicHomology,
}

impl ObstructionProblem {
    pub fn new(map: PartialChainMap, homology_generator: Vec<GroupRingElement>) -> Result<Self, ObstructionError> {
        let n = map
            .top_degree()
            .ok_or_else(|| ObstructionError::Invalid("the chain map has no components".into()))?;
        let source = map.source();
        if !source.contains(n + 1) {
            return Err(ObstructionError::Invalid(format!("source has no degree {}", n + 1)));
        }
        for degree in [n, n + 1] {
            if let Some(bad) = source.generators(degree).unwrap_or_default().iter().find(|g| !g.free) {
                return Err(ObstructionError::NonFreeModule { degree, label: bad.label.clone() });
            }
        }
        let homology = CyclicHomology::new(map.target(), n, homology_generator)?;
        Ok(ObstructionProblem { map, degree: n, homology })
    }

    /// Builds and validates the chain map first.
    pub fn from_parts(
        source: ChainFragment,
        target: ChainFragment,
        components: BTreeMap<i64, LambdaMatrix>,
        homology_generator: Vec<GroupRingElement>,
    ) -> Result<Self, ObstructionError> {
        let map = PartialChainMap::new(source, target, components)?;
        Self::new(map, homology_generator)
    }

    pub fn map(&self) -> &PartialChainMap {
        &self.map
    }

    /// The degree `n` of the last given component.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn homology(&self) -> &CyclicHomology {
        &self.homology
    }
}

/// The obstruction class together with everything needed to check it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionOutcome {
    /// Degree of the cohomology group containing the class (`n + 1`).
    pub degree: i64,
    /// Values of the cocycle on the generators of `C_{n+1}`.
    pub cocycle: Vec<JsonInt>,
    pub group_invariant_factors: Vec<JsonInt>,
    pub group_free_rank: usize,
    pub class: CohomologyClass,
    /// Signs of the coefficient character, by group generator.
    pub character: Vec<(String, i8)>,
}

impl ObstructionOutcome {
    /// Zero exactly when `f_n` can be changed (keeping `f_{n-1}`) so that
    /// it extends over degree `n + 1`.
    pub fn vanishes(&self) -> bool {
        self.class.is_zero()
    }
}

/// Class of the cocycle `e -> π(f_n(∂e))` on `C_{n+1}` in
/// `H^{n+1}(Hom_{Z[G]}(C, H_n(D)))`.
///
/// If the source stops at degree `n + 1` the module above it is taken to be
/// zero, as for a complex truncated there.
pub fn chain_obstruction(problem: &ObstructionProblem) -> Result<ObstructionOutcome, ObstructionError> {
    let n = problem.degree;
    let source = problem.map.source();
    let g = source.group();
    let f_n = problem.map.component(n).expect("component in the top degree");
    let boundary = source.boundary(n + 1).expect("source contains n + 1");
    let composite = boundary.then(f_n, g);
    let cocycle = (0..composite.cols())
        .map(|e| problem.homology.project(&composite.column_entries(e)))
        .collect::<Result<Vec<_>, _>>()?;

    let chi = problem.homology.character();
    let group = cohomology_with_vanishing_top(source, chi, n + 1)?;
    let class = group.reduce_class(&cocycle)?;
    Ok(ObstructionOutcome {
        degree: n + 1,
        cocycle: cocycle.into_iter().map(JsonInt).collect(),
        group_invariant_factors: group.invariant_factors.clone(),
        group_free_rank: group.free_rank,
        class,
        character: chi.generator_signs(g),
    })
}

/// The problem on the complexes of [`build_z2_example_complexes`]: `f_0` and
/// `f_1` are the identity and `H_1(D) = Z` is generated by `1 + omega`.
pub fn z2_example_problem() -> ObstructionProblem {
    let (source, target) = build_z2_example_complexes();
    let g = source.group().clone();
    let one = || LambdaMatrix::column(vec![GroupRingElement::one(&g)]);
    let generator = GroupRingElement::parse("1 + omega", &g).expect("element of Z[Z/2]");
    ObstructionProblem::from_parts(source, target, BTreeMap::from([(0, one()), (1, one())]), vec![generator])
        .expect("the example is well formed")
}
