use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{ChainError, ChainFragment, LambdaMatrix};
use crate::group_algebra::Character;

/// Components `f_k : C_k -> D_k` of a chain map, given for a contiguous
/// range of degrees. Each `f_k` has one column per generator of `C_k` and
/// one row per generator of `D_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialChainMap {
    source: ChainFragment,
    target: ChainFragment,
    components: BTreeMap<i64, LambdaMatrix>,
}

impl PartialChainMap {
    /// Validates shapes and the commutation `∂ f_k = f_{k-1} ∂` for every pair
    /// of consecutive provided degrees. When both complexes are augmented and
    /// the map is given on their common bottom degree, it must also commute
    /// with the augmentations.
    pub fn new(
        source: ChainFragment,
        target: ChainFragment,
        components: BTreeMap<i64, LambdaMatrix>,
    ) -> Result<Self, ChainError> {
        if source.group() != target.group() {
            return Err(ChainError::Malformed("source and target live over different groups".into()));
        }
        let degrees: Vec<i64> = components.keys().copied().collect();
        if degrees.windows(2).any(|w| w[1] != w[0] + 1) {
            return Err(ChainError::Malformed("chain map components must cover consecutive degrees".into()));
        }
        for (&k, f) in &components {
            if !source.contains(k) || !target.contains(k) {
                return Err(ChainError::Malformed(format!("degree {k} is missing from source or target")));
            }
            if f.cols() != source.rank(k) || f.rows() != target.rank(k) {
                return Err(ChainError::Malformed(format!(
                    "f_{k} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.rank(k),
                    source.rank(k)
                )));
            }
        }
        let map = PartialChainMap { source, target, components };
        map.check_commutes()?;
        Ok(map)
    }

    fn check_commutes(&self) -> Result<(), ChainError> {
        let g = self.source.group();
        for (&k, f) in &self.components {
            let Some(f_lower) = self.components.get(&(k - 1)) else { continue };
            let (Some(d_src), Some(d_tgt)) = (self.source.boundary(k), self.target.boundary(k)) else {
                continue;
            };
            let left = f.then(d_tgt, g);
            let right = d_src.then(f_lower, g);
            if left != right {
                return Err(ChainError::NonCommutingPartialMap { degree: k });
            }
        }
        let bottom = self.source.bottom_degree();
        if self.source.is_augmented()
            && self.target.is_augmented()
            && self.target.bottom_degree() == bottom
        {
            if let Some(f0) = self.components.get(&bottom) {
                let eps = f0.augment(&Character::trivial(g));
                for col in 0..eps.cols() {
                    let total: BigInt = eps.column(col).into_iter().sum();
                    if !total.is_one() {
                        return Err(ChainError::NonCommutingPartialMap { degree: bottom });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &ChainFragment {
        &self.source
    }

    pub fn target(&self) -> &ChainFragment {
        &self.target
    }

    pub fn component(&self, degree: i64) -> Option<&LambdaMatrix> {
        self.components.get(&degree)
    }

    /// Highest degree on which the map is defined.
    pub fn top_degree(&self) -> Option<i64> {
        self.components.keys().next_back().copied()
    }

    pub fn components(&self) -> &BTreeMap<i64, LambdaMatrix> {
        &self.components
    }
}
