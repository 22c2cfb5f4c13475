use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{ChainError, LambdaMatrix};
use crate::cohomology::IntMatrix;
use crate::group_algebra::{Character, GroupRingElement, GroupTable};
use crate::serde_int::JsonInt;

/// A basis element of one of the free modules in a fragment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    /// Names of group elements generating the stabilizer of the geometric
    /// cell this generator was cut from (metadata only).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub stabilizer: Vec<String>,
    /// `false` marks a summand that is not a free module. Arithmetic still
    /// treats it as free; the obstruction engine refuses it where freeness
    /// is required.
    #[serde(default = "yes", skip_serializing_if = "is_true")]
    pub free: bool,
}

fn yes() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

impl Generator {
    pub fn new(label: &str) -> Self {
        Generator { label: label.to_string(), stabilizer: Vec::new(), free: true }
    }

    pub fn with_stabilizer(label: &str, stabilizer: &[&str]) -> Self {
        Generator {
            label: label.to_string(),
            stabilizer: stabilizer.iter().map(|s| s.to_string()).collect(),
            free: true,
        }
    }
}

/// A bounded piece `C_top -> C_{top-1} -> ... -> C_bottom` of a chain complex
/// of finitely generated free `Z[G]`-modules.
///
/// `boundaries[i]` is the map from `degrees[i]` to `degrees[i + 1]`, with
/// columns indexed by the generators of the higher degree. If `augmented`
/// is set, the bottom module maps onto `Z` by sending every generator to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WireFragment", into = "WireFragment")]
pub struct ChainFragment {
    group: GroupTable,
    degrees: Vec<i64>,
    generators: Vec<Vec<Generator>>,
    boundaries: Vec<LambdaMatrix>,
    augmented: bool,
}

/// Where a chain-complex identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexFailure {
    /// The composite `C_degree -> C_{degree-2}` (or `-> Z` for the
    /// augmentation) that is nonzero.
    pub degree: i64,
    pub row: usize,
    pub col: usize,
    pub entry: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexCheck {
    pub ok: bool,
    pub failure: Option<ComplexFailure>,
}

impl ChainFragment {
    pub fn new(
        group: GroupTable,
        top_degree: i64,
        generators: Vec<Vec<Generator>>,
        boundaries: Vec<LambdaMatrix>,
        augmented: bool,
    ) -> Result<Self, ChainError> {
        if generators.is_empty() {
            return Err(ChainError::Malformed("a fragment needs at least one degree".into()));
        }
        if boundaries.len() + 1 != generators.len() {
            return Err(ChainError::Malformed(format!(
                "{} degrees need {} boundary maps, found {}",
                generators.len(),
                generators.len() - 1,
                boundaries.len()
            )));
        }
        let degrees: Vec<i64> = (0..generators.len() as i64).map(|i| top_degree - i).collect();
        for (i, b) in boundaries.iter().enumerate() {
            let (src, dst) = (generators[i].len(), generators[i + 1].len());
            if b.cols() != src || b.rows() != dst {
                return Err(ChainError::Malformed(format!(
                    "boundary from degree {} is {}x{}, expected {}x{}",
                    degrees[i],
                    b.rows(),
                    b.cols(),
                    dst,
                    src
                )));
            }
        }
        for gens in &generators {
            let mut seen = BTreeSet::new();
            for gen in gens {
                if !seen.insert(&gen.label) {
                    return Err(ChainError::Malformed(format!("duplicate generator label `{}`", gen.label)));
                }
                for s in &gen.stabilizer {
                    if group.element(s).is_none() {
                        return Err(ChainError::Malformed(format!(
                            "stabilizer of `{}` names unknown element `{s}`",
                            gen.label
                        )));
                    }
                }
            }
        }
        Ok(ChainFragment { group, degrees, generators, boundaries, augmented })
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    /// Degrees from top to bottom.
    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn top_degree(&self) -> i64 {
        self.degrees[0]
    }

    pub fn bottom_degree(&self) -> i64 {
        *self.degrees.last().unwrap()
    }

    pub fn is_augmented(&self) -> bool {
        self.augmented
    }

    pub fn contains(&self, degree: i64) -> bool {
        degree <= self.top_degree() && degree >= self.bottom_degree()
    }

    fn slot(&self, degree: i64) -> Option<usize> {
        self.contains(degree).then(|| (self.top_degree() - degree) as usize)
    }

    pub fn generators(&self, degree: i64) -> Option<&[Generator]> {
        self.slot(degree).map(|i| self.generators[i].as_slice())
    }

    /// Rank of the free module in `degree`; 0 outside the fragment.
    pub fn rank(&self, degree: i64) -> usize {
        self.generators(degree).map_or(0, <[Generator]>::len)
    }

    /// Position of a generator label within its degree.
    pub fn generator_index(&self, degree: i64, label: &str) -> Option<usize> {
        self.generators(degree)?.iter().position(|g| g.label == label)
    }

    /// The boundary `C_degree -> C_{degree-1}` when both ends are present.
    pub fn boundary(&self, degree: i64) -> Option<&LambdaMatrix> {
        let i = self.slot(degree)?;
        self.boundaries.get(i)
    }

    pub fn boundaries(&self) -> &[LambdaMatrix] {
        &self.boundaries
    }

    pub fn boundary_mut(&mut self, degree: i64) -> Option<&mut LambdaMatrix> {
        let i = self.slot(degree)?;
        self.boundaries.get_mut(i)
    }

    /// The boundary of one generator as a combination of the generators one
    /// degree lower.
    pub fn boundary_of(&self, degree: i64, label: &str) -> Option<Vec<GroupRingElement>> {
        let j = self.generator_index(degree, label)?;
        Some(self.boundary(degree)?.column_entries(j))
    }

    /// Checks `∂∘∂ = 0` on every composable pair and, for augmented
    /// fragments, that the augmentation kills the lowest boundary.
    pub fn verify_complex(&self) -> ComplexCheck {
        let g = &self.group;
        for (idx, pair) in self.boundaries.windows(2).enumerate() {
            let composite = pair[0].then(&pair[1], g);
            if let Some((row, col)) = first_nonzero(&composite) {
                return ComplexCheck {
                    ok: false,
                    failure: Some(ComplexFailure {
                        degree: self.degrees[idx],
                        row,
                        col,
                        entry: composite.get(row, col).display(g),
                    }),
                };
            }
        }
        if self.augmented {
            if let Some(last) = self.boundaries.last() {
                let trivial = Character::trivial(g);
                let eps = last.augment(&trivial);
                for col in 0..eps.cols() {
                    let total: BigInt = eps.column(col).into_iter().sum();
                    if !total.is_zero() {
                        return ComplexCheck {
                            ok: false,
                            failure: Some(ComplexFailure {
                                degree: self.degrees[self.degrees.len() - 2],
                                row: 0,
                                col,
                                entry: total.to_string(),
                            }),
                        };
                    }
                }
            }
        }
        ComplexCheck { ok: true, failure: None }
    }

    /// The augmentation `Z_chi ⊗ ∂` of every boundary, top to bottom.
    pub fn augmented_boundaries(&self, chi: &Character) -> Vec<IntMatrix> {
        self.boundaries.iter().map(|b| b.augment(chi)).collect()
    }
}

fn first_nonzero(m: &LambdaMatrix) -> Option<(usize, usize)> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).find(|&(i, j)| !m.get(i, j).is_zero())
}

#[derive(Serialize, Deserialize)]
struct WireFragment {
    group: GroupTable,
    degrees: Vec<i64>,
    generators: Vec<Vec<Generator>>,
    boundaries: Vec<Vec<Vec<BTreeMap<String, JsonInt>>>>,
    #[serde(default)]
    augmented: bool,
}

impl From<ChainFragment> for WireFragment {
    fn from(c: ChainFragment) -> Self {
        let boundaries = c.boundaries.iter().map(|b| b.to_wire(&c.group)).collect();
        WireFragment {
            group: c.group,
            degrees: c.degrees,
            generators: c.generators,
            boundaries,
            augmented: c.augmented,
        }
    }
}

impl TryFrom<WireFragment> for ChainFragment {
    type Error = ChainError;

    fn try_from(w: WireFragment) -> Result<Self, Self::Error> {
        let top = *w
            .degrees
            .first()
            .ok_or_else(|| ChainError::Malformed("`degrees` is empty".into()))?;
        let expected: Vec<i64> = (0..w.degrees.len() as i64).map(|i| top - i).collect();
        if w.degrees != expected {
            return Err(ChainError::Malformed("`degrees` must be consecutive and descending".into()));
        }
        if w.generators.len() != w.degrees.len() || w.boundaries.len() + 1 != w.degrees.len() {
            return Err(ChainError::Malformed("degree, generator and boundary counts disagree".into()));
        }
        let mut boundaries = Vec::with_capacity(w.boundaries.len());
        for (i, wire) in w.boundaries.iter().enumerate() {
            let rows = w.generators[i + 1].len();
            let cols = w.generators[i].len();
            let m = LambdaMatrix::from_wire(wire, rows, cols, &w.group)
                .map_err(|e| ChainError::Malformed(format!("boundary from degree {}: {e}", w.degrees[i])))?;
            boundaries.push(m);
        }
        ChainFragment::new(w.group, top, w.generators, boundaries, w.augmented)
    }
}
