use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{smith_normal_form, CohomologyError, IntMatrix};
use crate::serde_int::JsonInt;

/// A finitely generated abelian group `ker(outgoing) / im(incoming)` inside
/// an ambient lattice `Z^N`, in invariant-factor form
/// `Z/d_1 + ... + Z/d_t + Z^free_rank` with `d_1 | d_2 | ... | d_t`, `d_1 >= 2`.
///
/// `generators` holds one ambient vector per summand (torsion summands
/// first), and `coordinate_map` sends a vector of the kernel to its
/// coordinates in that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroupPresentation {
    pub free_rank: usize,
    pub invariant_factors: Vec<JsonInt>,
    /// `N x (t + free_rank)`; column `i` is the `i`-th generator.
    pub generators: IntMatrix,
    /// `(t + free_rank) x N`.
    pub coordinate_map: IntMatrix,
    /// The map whose kernel is the cycle lattice (`0 x N` when unconstrained).
    pub outgoing: IntMatrix,
}

/// An element of an [`AbelianGroupPresentation`] in canonical coordinates:
/// torsion coordinates reduced into `[0, d_i)`, then free coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyClass {
    pub invariant_factors: Vec<JsonInt>,
    pub free_rank: usize,
    pub coordinates: Vec<JsonInt>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|c| c.0.is_zero())
    }

    pub fn coordinates(&self) -> Vec<BigInt> {
        self.coordinates.iter().map(|c| c.0.clone()).collect()
    }

    /// Additive order, `None` for elements of infinite order.
    pub fn order(&self) -> Option<BigInt> {
        let t = self.invariant_factors.len();
        if self.coordinates[t..].iter().any(|c| !c.0.is_zero()) {
            return None;
        }
        Some(self.invariant_factors.iter().zip(&self.coordinates).fold(BigInt::one(), |acc, (d, c)| {
            let ord = &d.0 / d.0.gcd(&c.0);
            acc.lcm(&ord)
        }))
    }
}

impl AbelianGroupPresentation {
    /// Computes `ker(outgoing) / im(incoming)`.
    ///
    /// `outgoing` is `M x N` and `incoming` is `N x P`; their product must
    /// vanish.
    pub fn subquotient(outgoing: &IntMatrix, incoming: &IntMatrix) -> Result<Self, CohomologyError> {
        let n = outgoing.cols();
        if incoming.rows() != n {
            return Err(CohomologyError::DimensionMismatch {
                expected: n,
                found: incoming.rows(),
            });
        }
        if !outgoing.mul(incoming).is_zero() {
            return Err(CohomologyError::NotAComplex);
        }

        // Kernel lattice: the last N - r columns of V where U O V = D.
        let outer = smith_normal_form(outgoing);
        let r = outer.rank;
        let kernel_idx: Vec<usize> = (r..n).collect();
        let kernel_basis = outer.v.select_cols(&kernel_idx);
        let kernel_coords = outer.v_inv.select_rows(&kernel_idx);

        // Image of `incoming`, written in kernel coordinates.
        let relations = kernel_coords.mul(incoming);
        let inner = smith_normal_form(&relations);
        let k = kernel_idx.len();
        let diag = inner.diagonal();

        let mut summands: Vec<(usize, Option<BigInt>)> = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if !d.is_one() {
                summands.push((i, Some(d.clone())));
            }
        }
        for i in inner.rank..k {
            summands.push((i, None));
        }

        // Generators are columns of K * U^-1; coordinates are rows of U * K^-1.
        let gens_all = kernel_basis.mul(&inner.u_inv);
        let coords_all = inner.u.mul(&kernel_coords);
        let picked: Vec<usize> = summands.iter().map(|(i, _)| *i).collect();
        let mut generators = gens_all.select_cols(&picked);
        let mut coordinate_map = coords_all.select_rows(&picked);

        // Orient every generator so that its first nonzero entry is positive.
        for s in 0..picked.len() {
            let first = generators.column(s).into_iter().find(|x| !x.is_zero());
            if first.is_some_and(|x| x.is_negative()) {
                generators.negate_col(s);
                coordinate_map.negate_row(s);
            }
        }

        let invariant_factors: Vec<JsonInt> = summands.iter().filter_map(|(_, d)| d.clone().map(JsonInt)).collect();
        let free_rank = summands.len() - invariant_factors.len();
        Ok(AbelianGroupPresentation {
            free_rank,
            invariant_factors,
            generators,
            coordinate_map,
            outgoing: outgoing.clone(),
        })
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().map(|d| d.0.clone()).collect()
    }

    pub fn torsion_rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.outgoing.cols()
    }

    /// Group order, `None` if infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.invariant_factors.iter().map(|d| d.0.clone()).product())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    /// Generator vectors, one per summand.
    pub fn generator_cocycles(&self) -> Vec<Vec<BigInt>> {
        (0..self.generators.cols()).map(|j| self.generators.column(j)).collect()
    }

    /// Canonical coordinates of the class of `cocycle`.
    pub fn reduce_class(&self, cocycle: &[BigInt]) -> Result<CohomologyClass, CohomologyError> {
        if cocycle.len() != self.ambient_dim() {
            return Err(CohomologyError::DimensionMismatch {
                expected: self.ambient_dim(),
                found: cocycle.len(),
            });
        }
        if self.outgoing.mul_vec(cocycle).iter().any(|x| !x.is_zero()) {
            return Err(CohomologyError::NotACocycle);
        }
        let raw = self.coordinate_map.mul_vec(cocycle);
        let coordinates = raw
            .into_iter()
            .enumerate()
            .map(|(i, c)| match self.invariant_factors.get(i) {
                Some(d) => JsonInt(c.mod_floor(&d.0)),
                None => JsonInt(c),
            })
            .collect();
        Ok(CohomologyClass {
            invariant_factors: self.invariant_factors.clone(),
            free_rank: self.free_rank,
            coordinates,
        })
    }

    /// A representative vector of the class with the given coordinates.
    pub fn representative(&self, coordinates: &[BigInt]) -> Vec<BigInt> {
        self.generators.mul_vec(coordinates)
    }

    /// Whether `other` presents an isomorphic group.
    pub fn isomorphic(&self, other: &AbelianGroupPresentation) -> bool {
        self.free_rank == other.free_rank && self.invariant_factors == other.invariant_factors
    }
}
