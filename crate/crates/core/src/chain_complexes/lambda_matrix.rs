use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::cohomology::IntMatrix;
use crate::group_algebra::{augment, Character, GroupError, GroupRingElement, GroupTable};
use crate::serde_int::JsonInt;

/// A homomorphism of free left `Z[G]`-modules `Z[G]^cols -> Z[G]^rows`.
///
/// Entry `(i, j)` is the coefficient of the `i`-th target generator in the
/// image of the `j`-th source generator. Because the modules are left
/// modules, `f(r * e_j) = r * f(e_j)`, and composites multiply entries in
/// the order inner-then-outer (see [`LambdaMatrix::then`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl LambdaMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LambdaMatrix { rows, cols, entries: vec![GroupRingElement::zero(); rows * cols] }
    }

    pub fn identity(n: usize, g: &GroupTable) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElement::one(g));
        }
        m
    }

    /// Builds a matrix from rows. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<GroupRingElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        LambdaMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// A single column: the boundary of one generator.
    pub fn column(entries: Vec<GroupRingElement>) -> Self {
        LambdaMatrix { rows: entries.len(), cols: 1, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GroupRingElement) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(GroupRingElement::is_zero)
    }

    /// The composite `outer ∘ self`.
    ///
    /// `(outer ∘ inner)(e_l) = sum_i inner[i][l] * outer(e_i)`, so entry
    /// `(j, l)` is `sum_i inner[i][l] * outer[j][i]`.
    pub fn then(&self, outer: &LambdaMatrix, g: &GroupTable) -> LambdaMatrix {
        assert_eq!(outer.cols, self.rows, "dimension mismatch in composite");
        let mut out = Self::zeros(outer.rows, self.cols);
        for j in 0..outer.rows {
            for l in 0..self.cols {
                let mut acc = GroupRingElement::zero();
                for i in 0..self.rows {
                    let a = self.get(i, l);
                    let b = outer.get(j, i);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b, g));
                    }
                }
                out.set(j, l, acc);
            }
        }
        out
    }

    /// Image of a vector of coefficients on the source generators.
    pub fn apply(&self, v: &[GroupRingElement], g: &GroupTable) -> Vec<GroupRingElement> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        (0..self.rows)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .fold(GroupRingElement::zero(), |acc, (l, c)| acc.add(&c.mul(self.get(i, l), g)))
            })
            .collect()
    }

    pub fn column_entries(&self, j: usize) -> Vec<GroupRingElement> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Entrywise twisted augmentation, giving the integer matrix of the
    /// induced map `Z_chi ⊗ C -> Z_chi ⊗ D`.
    pub fn augment(&self, chi: &Character) -> IntMatrix {
        IntMatrix::from_vec(self.rows, self.cols, self.entries.iter().map(|e| augment(e, chi)).collect())
    }

    /// The matrix of the underlying map of free abelian groups, in the
    /// basis `x * e_i` ordered by generator, then group element.
    pub fn expand_over_integers(&self, g: &GroupTable) -> IntMatrix {
        let n = g.order();
        let mut out = IntMatrix::zeros(self.rows * n, self.cols * n);
        for l in 0..self.cols {
            for h in 0..n {
                for i in 0..self.rows {
                    for (x, c) in self.get(i, l).left_translate(h, g).terms() {
                        out[(i * n + x, l * n + h)] = c.clone();
                    }
                }
            }
        }
        out
    }

    pub(crate) fn to_wire(&self, g: &GroupTable) -> Vec<Vec<BTreeMap<String, JsonInt>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_named_map(g).into_iter().map(|(k, v)| (k, JsonInt(v))).collect())
                    .collect()
            })
            .collect()
    }

    pub(crate) fn from_wire(
        wire: &[Vec<BTreeMap<String, JsonInt>>],
        rows: usize,
        cols: usize,
        g: &GroupTable,
    ) -> Result<Self, String> {
        // An empty row list is the only encoding of a 0 x cols matrix.
        if wire.len() != rows {
            return Err(format!("expected {rows} rows, found {}", wire.len()));
        }
        let mut out = Self::zeros(rows, cols);
        for (i, row) in wire.iter().enumerate() {
            if row.len() != cols {
                return Err(format!("row {i}: expected {cols} entries, found {}", row.len()));
            }
            for (j, cell) in row.iter().enumerate() {
                let map: BTreeMap<String, BigInt> = cell.iter().map(|(k, v)| (k.clone(), v.0.clone())).collect();
                let e = GroupRingElement::from_named_map(&map, g).map_err(|e: GroupError| format!("entry ({i}, {j}): {e}"))?;
                out.set(i, j, e);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::{build_cyclic, build_d8, lam};

    #[test]
    fn composite_order_matters() {
        let g = build_d8();
        // Left-module convention: inner coefficient multiplies first.
        let inner = LambdaMatrix::column(vec![lam("gamma", &g)]);
        let outer = LambdaMatrix::column(vec![lam("alpha", &g)]);
        assert_eq!(inner.then(&outer, &g).get(0, 0), &lam("gamma*alpha", &g));
        assert_ne!(lam("gamma*alpha", &g), lam("alpha*gamma", &g));
    }

    #[test]
    fn integer_expansion_is_compatible_with_composition() {
        let g = build_cyclic(2, "w").unwrap();
        let a = LambdaMatrix::column(vec![lam("1 - w", &g)]);
        let b = LambdaMatrix::column(vec![lam("2 + 3*w", &g)]);
        let composite = a.then(&b, &g).expand_over_integers(&g);
        let by_parts = b.expand_over_integers(&g).mul(&a.expand_over_integers(&g));
        assert_eq!(composite, by_parts);
    }

    #[test]
    fn d8_integer_expansion_is_functorial() {
        let g = build_d8();
        let a = LambdaMatrix::from_rows(vec![vec![lam("1 + alpha*gamma", &g), lam("beta", &g)]]);
        let b = LambdaMatrix::from_rows(vec![vec![lam("gamma - 2*beta", &g)], vec![lam("alpha*beta*gamma", &g)]]);
        let composite = b.then(&a, &g);
        assert_eq!(
            composite.expand_over_integers(&g),
            a.expand_over_integers(&g).mul(&b.expand_over_integers(&g))
        );
    }

    #[test]
    fn apply_matches_then() {
        let g = build_d8();
        let m = LambdaMatrix::from_rows(vec![vec![lam("1 + beta", &g), lam("gamma", &g)]]);
        let v = vec![lam("alpha", &g), lam("1 - gamma", &g)];
        let as_column = LambdaMatrix::column(v.clone());
        assert_eq!(m.apply(&v, &g), as_column.then(&m, &g).column_entries(0));
    }
}
