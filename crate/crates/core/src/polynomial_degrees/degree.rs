use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{resultant_sign, PolyError, Polynomial};

/// One preimage `(p, q)` of the regular value, with the sign of the
/// Jacobian determinant of multiplication at that point (the resultant).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FactorPair {
    pub p: Polynomial,
    pub q: Polynomial,
    pub resultant_sign: i8,
}

/// All monic factorizations `target = p * q` with `deg p = m`, as found by
/// the enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCertificate {
    pub target: Polynomial,
    pub pairs: Vec<FactorPair>,
}

impl FactorizationCertificate {
    /// The algebraic preimage count.
    pub fn signed_count(&self) -> i64 {
        self.pairs.iter().map(|p| i64::from(p.resultant_sign)).sum()
    }

    /// Re-checks that every pair multiplies to the target and that the
    /// pairs are distinct.
    pub fn verify(&self) -> bool {
        let mut seen = HashSet::new();
        self.pairs
            .iter()
            .all(|pair| pair.p.mul(&pair.q) == self.target && seen.insert((&pair.p, &pair.q)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonicDegree {
    pub m: usize,
    pub n: usize,
    pub degree: i64,
    pub certificate: FactorizationCertificate,
}

fn check_even(m: usize, n: usize) -> Result<(usize, usize), PolyError> {
    if m == 0 || n == 0 || !m.is_multiple_of(2) || !n.is_multiple_of(2) {
        return Err(PolyError::PreconditionViolated(format!(
            "m and n must be positive even integers, got ({m}, {n})"
        )));
    }
    Ok((m / 2, n / 2))
}

/// Degree of `(p, q) -> p*q` on monic polynomials of even degrees `m` and `n`,
/// using the regular value `prod_{i=1}^{k+l} (x^2 + i)`.
pub fn degree_monic_multiplication(m: usize, n: usize) -> Result<MonicDegree, PolyError> {
    let (k, l) = check_even(m, n)?;
    let constants: Vec<BigInt> = (1..=(k + l) as i64).map(BigInt::from).collect();
    degree_monic_multiplication_with(m, n, &constants)
}

/// Same as [`degree_monic_multiplication`] with the regular value
/// `prod (x^2 + c_i)` for caller-chosen distinct positive `c_i`.
///
/// Every monic factorization of such a product is a split of its quadratic
/// factors (the factors are irreducible over the reals), so the preimage is
/// enumerated exactly by the `k`-subsets of the `k + l` factors.
pub fn degree_monic_multiplication_with(m: usize, n: usize, constants: &[BigInt]) -> Result<MonicDegree, PolyError> {
    let (k, l) = check_even(m, n)?;
    if constants.len() != k + l {
        return Err(PolyError::PreconditionViolated(format!(
            "need {} constants, got {}",
            k + l,
            constants.len()
        )));
    }
    if constants.iter().any(|c| !c.is_positive()) || constants.iter().collect::<HashSet<_>>().len() != constants.len() {
        return Err(PolyError::PreconditionViolated("constants must be distinct and positive".into()));
    }
    let factors: Vec<Polynomial> = constants.iter().map(Polynomial::quadratic).collect();
    let target = Polynomial::product(&factors);

    let subsets: Vec<Vec<usize>> = (0..factors.len()).combinations(k).collect();
    let pairs = subsets
        .par_iter()
        .map(|subset| {
            let p = Polynomial::product(subset.iter().map(|&i| &factors[i]));
            let q = Polynomial::product((0..factors.len()).filter(|i| !subset.contains(i)).map(|i| &factors[i]));
            debug_assert_eq!(p.mul(&q), target);
            let resultant_sign = resultant_sign(&p, &q)?;
            Ok(FactorPair { p, q, resultant_sign })
        })
        .collect::<Result<Vec<_>, PolyError>>()?;

    if pairs.iter().any(|p| p.resultant_sign == 0) {
        return Err(PolyError::PreconditionViolated("value is not regular".into()));
    }
    let certificate = FactorizationCertificate { target, pairs };
    Ok(MonicDegree { m, n, degree: certificate.signed_count(), certificate })
}

/// `|deg|` of the induced map on unit spheres of nonzero polynomials.
///
/// Each monic factorization `(p, q)` of the regular value gives the two
/// preimages `(p, q)` and `(-p, -q)`. The antipodal map on both factors
/// preserves orientation, so both points count with the same sign and the
/// degree doubles. The global sign depends on orientation conventions for the
/// spheres and is not tracked.
pub fn degree_sphere_multiplication(m: usize, n: usize) -> Result<i64, PolyError> {
    let monic = degree_monic_multiplication(m, n)?;
    Ok(2 * monic.degree.abs())
}

/// `binomial(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}
