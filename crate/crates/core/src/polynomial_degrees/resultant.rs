use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use serde::Serialize;

use super::{PolyError, Polynomial};
use crate::cohomology::IntMatrix;

/// The `(m+n) x (m+n)` Sylvester matrix of `p` (degree `m`) and `q` (degree
/// `n`): `n` shifted rows of the coefficients of `p` followed by `m` shifted
/// rows of `q`, highest degree first. Its determinant is `Res(p, q)`.
///
/// Both inputs must be nonzero with integer coefficients.
pub fn sylvester_matrix(p: &Polynomial, q: &Polynomial) -> Result<IntMatrix, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if !p.is_integral() || !q.is_integral() {
        return Err(PolyError::NotIntegral);
    }
    let ints = |f: &Polynomial| -> Vec<BigInt> { f.coefficients().iter().rev().map(|c| c.to_integer()).collect() };
    Ok(sylvester_from_descending(&ints(p), &ints(q)))
}

fn sylvester_from_descending(p: &[BigInt], q: &[BigInt]) -> IntMatrix {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    let mut s = IntMatrix::zeros(size, size);
    for shift in 0..n {
        for (j, c) in p.iter().enumerate() {
            s[(shift, shift + j)] = c.clone();
        }
    }
    for shift in 0..m {
        for (j, c) in q.iter().enumerate() {
            s[(n + shift, shift + j)] = c.clone();
        }
    }
    s
}

/// `Res(p, q) = a_m^n b_n^m prod (alpha_i - beta_j)`, computed exactly as the
/// Bareiss determinant of the Sylvester matrix. Rational inputs are scaled
/// to integer polynomials first and the scaling is divided out.
pub fn resultant(p: &Polynomial, q: &Polynomial) -> Result<BigRational, PolyError> {
    let m = p.degree().ok_or(PolyError::ZeroPolynomial)?;
    let n = q.degree().ok_or(PolyError::ZeroPolynomial)?;
    let (pi, lp) = p.cleared();
    let (qi, lq) = q.cleared();
    let desc = |v: Vec<BigInt>| -> Vec<BigInt> { v.into_iter().rev().collect() };
    let det = sylvester_from_descending(&desc(pi), &desc(qi)).determinant();
    // Res(lp p, lq q) = lp^n lq^m Res(p, q)
    let scale: BigInt = Pow::pow(&lp, n) * Pow::pow(&lq, m);
    Ok(BigRational::new(det, scale))
}

/// Outcome of [`resultant_positivity_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityCertificate {
    #[serde(with = "crate::serde_int")]
    pub resultant_numerator: BigInt,
    #[serde(with = "crate::serde_int")]
    pub resultant_denominator: BigInt,
    pub positive: bool,
}

/// Checks that two monic polynomials without real roots and with pairwise
/// distinct roots have a positive resultant.
///
/// The hypotheses are verified exactly (Sturm sequences for real roots, a
/// squarefreeness test on `p*q` for distinctness) and reported as
/// [`PolyError::PreconditionViolated`].
pub fn resultant_positivity_check(p: &Polynomial, q: &Polynomial) -> Result<PositivityCertificate, PolyError> {
    for (name, f) in [("p", p), ("q", q)] {
        if f.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if !f.is_monic() {
            return Err(PolyError::PreconditionViolated(format!("{name} = {f} is not monic")));
        }
        let real = f.count_real_roots()?;
        if real > 0 {
            return Err(PolyError::PreconditionViolated(format!("{name} = {f} has {real} real root(s)")));
        }
    }
    if !p.mul(q).is_squarefree() {
        return Err(PolyError::PreconditionViolated("p and q do not have pairwise distinct roots".into()));
    }
    let r = resultant(p, q)?;
    Ok(PositivityCertificate {
        resultant_numerator: r.numer().clone(),
        resultant_denominator: r.denom().clone(),
        positive: r.is_positive(),
    })
}

/// Sign of the resultant as -1, 0 or 1.
pub fn resultant_sign(p: &Polynomial, q: &Polynomial) -> Result<i8, PolyError> {
    let r = resultant(p, q)?;
    Ok(if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn sylvester_of_two_quadratics() {
        let s = sylvester_matrix(&p(&[1, 0, 1]), &p(&[4, 0, 1])).unwrap();
        assert_eq!(
            s,
            IntMatrix::from_rows(&[vec![1, 0, 1, 0], vec![0, 1, 0, 1], vec![1, 0, 4, 0], vec![0, 1, 0, 4]])
        );
        assert_eq!(s.determinant(), BigInt::from(9));
    }

    #[test]
    fn small_resultants() {
        assert_eq!(resultant(&p(&[1, 0, 1]), &p(&[4, 0, 1])).unwrap(), rat(9));
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-1, 1])).unwrap(), rat(0));
        assert_eq!(resultant(&p(&[0, 1]), &p(&[1, 1])).unwrap(), rat(1));
        assert_eq!(resultant(&p(&[3]), &p(&[1, 1, 1])).unwrap(), rat(9));
        assert!(matches!(resultant(&Polynomial::zero(), &p(&[1])), Err(PolyError::ZeroPolynomial)));
    }

    #[test]
    fn common_factor_kills_resultant() {
        let common = p(&[1, 1, 1]);
        let a = common.mul(&p(&[2, 1]));
        let b = common.mul(&p(&[5, 0, 3]));
        assert_eq!(resultant(&a, &b).unwrap(), rat(0));
    }

    #[test]
    fn multiplicativity_on_quadratics() {
        let lhs = resultant(&p(&[1, 0, 1]).mul(&p(&[4, 0, 1])), &p(&[9, 0, 1])).unwrap();
        let rhs = resultant(&p(&[1, 0, 1]), &p(&[9, 0, 1])).unwrap() * resultant(&p(&[4, 0, 1]), &p(&[9, 0, 1])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_inputs() {
        // Res(x/2 - 1, x - 3) = (1/2)^1 * (2 - 3) = -1/2
        let a = Polynomial::parse_coefficients("-1,1/2").unwrap();
        assert_eq!(resultant(&a, &p(&[-3, 1])).unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(matches!(sylvester_matrix(&a, &p(&[1, 1])), Err(PolyError::NotIntegral)));
    }

    #[test]
    fn positivity() {
        assert!(resultant_positivity_check(&p(&[1, 0, 1]), &p(&[4, 0, 1])).unwrap().positive);
        let a = p(&[1, 0, 1]).mul(&p(&[2, 0, 1]));
        let b = p(&[3, 0, 1]).mul(&p(&[5, 0, 1]));
        assert!(resultant_positivity_check(&a, &b).unwrap().positive);
        assert!(matches!(
            resultant_positivity_check(&p(&[-1, 0, 1]), &p(&[4, 0, 1])),
            Err(PolyError::PreconditionViolated(_))
        ));
        assert!(matches!(
            resultant_positivity_check(&p(&[1, 0, 1]), &p(&[1, 0, 1])),
            Err(PolyError::PreconditionViolated(_))
        ));
        assert!(matches!(
            resultant_positivity_check(&p(&[2, 0, 2]), &p(&[4, 0, 1])),
            Err(PolyError::PreconditionViolated(_))
        ));
    }

    fn poly() -> impl Strategy<Value = Polynomial> {
        (proptest::collection::vec(-6i64..=6, 0..4), prop_oneof![(-5i64..=-1), (1i64..=5)])
            .prop_map(|(mut c, lead)| {
                c.push(lead);
                Polynomial::from_ints(&c)
            })
    }

    proptest! {
        #[test]
        fn antisymmetry(a in poly(), b in poly()) {
            let m = a.degree().unwrap();
            let n = b.degree().unwrap();
            let sign = if (m * n) % 2 == 0 { rat(1) } else { rat(-1) };
            prop_assert_eq!(resultant(&a, &b).unwrap(), sign * resultant(&b, &a).unwrap());
        }

        #[test]
        fn multiplicativity(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(
                resultant(&a.mul(&b), &c).unwrap(),
                resultant(&a, &c).unwrap() * resultant(&b, &c).unwrap()
            );
        }
    }
}
