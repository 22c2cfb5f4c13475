use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, its nonzero
/// diagonal entries positive and each dividing the next.
///
/// The inverses of both transforms are tracked alongside, so no matrix
/// inversion is ever needed downstream.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
    pub rank: usize,
}

impl SmithDecomposition {
    /// The nonzero diagonal entries `d_1 | d_2 | ... | d_rank`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Invariant factors greater than one.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal().into_iter().filter(|d| *d > BigInt::from(1)).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// `row[target] += k * row[source]`
    fn add_row(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_row_multiple(target, source, k);
        self.u.add_row_multiple(target, source, k);
        self.u_inv.add_col_multiple(source, target, &-k);
    }

    /// `col[target] += k * col[source]`
    fn add_col(&mut self, target: usize, source: usize, k: &BigInt) {
        self.a.add_col_multiple(target, source, k);
        self.v.add_col_multiple(target, source, k);
        self.v_inv.add_row_multiple(source, target, &-k);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of a nonzero entry of least absolute value in the trailing
    /// block starting at `(t, t)`.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = self.a[(i, j)].abs();
                if v.is_zero() {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, b)| v < *b) {
                    best = Some(((i, j), v));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }
}

/// Smith normal form by elimination with explicit transforms.
///
/// Pivots are chosen as the entry of least absolute value in the remaining
/// block, which keeps intermediate entries small.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.min_pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            // Clear column t below and row t to the right of the pivot. A
            // nonzero remainder is smaller than the pivot and becomes the new
            // pivot.
            let mut moved = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = w.a[(i, t)].div_floor(&w.a[(t, t)]);
                w.add_row(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    w.swap_rows(t, i);
                    moved = true;
                }
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = w.a[(t, j)].div_floor(&w.a[(t, t)]);
                w.add_col(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    w.swap_cols(t, j);
                    moved = true;
                }
            }
            if moved {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let pivot = w.a[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&pivot))
            });
            match offender {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition { u: w.u, u_inv: w.u_inv, d: w.a, v: w.v, v_inv: w.v_inv, rank: t }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows)
    }

    fn check(mat: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(mat);
        assert_eq!(s.u.mul(mat).mul(&s.v), s.d, "U M V != D for\n{mat}");
        assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(mat.rows()));
        assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(mat.cols()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j || i >= s.rank {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(diag.iter().all(|d| d.is_positive()));
        s
    }

    #[test]
    fn already_diagonal() {
        let s = check(&m(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
    }

    #[test]
    fn zero_matrix() {
        let z = IntMatrix::zeros(2, 3);
        let s = check(&z);
        assert_eq!(s.rank, 0);
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(3));
        assert!(s.d.is_zero());
    }

    #[test]
    fn rank_one_gcd_four() {
        let s = check(&m(&[vec![4, 0, 0], vec![-4, 0, 0]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(4)]);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) has invariant factors 1, 6.
        let s = check(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(6)]);
    }

    #[test]
    fn empty_shapes() {
        check(&IntMatrix::zeros(0, 3));
        check(&IntMatrix::zeros(3, 0));
    }

    proptest! {
        #[test]
        fn decomposition_is_exact(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-20i64..=20, 16)) {
            let data: Vec<BigInt> = seed[..rows * cols].iter().map(|&x| x.into()).collect();
            check(&IntMatrix::from_vec(rows, cols, data));
        }
    }
}
