use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::PolyError;
use crate::serde_int::{parse_rational, JsonRat};

/// A univariate polynomial with rational coefficients, stored in ascending
/// degree order without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<JsonRat>", into = "Vec<JsonRat>")]
pub struct Polynomial {
    coefficients: Vec<BigRational>,
}

impl From<Vec<JsonRat>> for Polynomial {
    fn from(v: Vec<JsonRat>) -> Self {
        Polynomial::new(v.into_iter().map(|c| c.0).collect())
    }
}

impl From<Polynomial> for Vec<JsonRat> {
    fn from(p: Polynomial) -> Self {
        p.coefficients.into_iter().map(JsonRat).collect()
    }
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<BigRational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Polynomial { coefficients }
    }

    /// From integer coefficients, ascending.
    pub fn from_ints<T: Copy + Into<BigInt>>(coefficients: &[T]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coefficients: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `x^2 + c`
    pub fn quadratic(c: &BigInt) -> Self {
        Self::new(vec![BigRational::from_integer(c.clone()), BigRational::zero(), BigRational::one()])
    }

    /// Parses a comma-separated list of ascending coefficients such as
    /// `1,0,1` (for `1 + x^2`) or `1/2,-3`.
    pub fn parse_coefficients(text: &str) -> Result<Self, PolyError> {
        let coefficients = text
            .split(',')
            .map(|t| parse_rational(t).ok_or_else(|| PolyError::Parse(format!("bad coefficient `{}`", t.trim()))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coefficients))
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coefficients.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coefficients.iter().all(BigRational::is_integer)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coefficients.len().max(other.coefficients.len());
        Self::new((0..n).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::ZeroPolynomial)?;
        let lead = divisor.leading_coefficient().unwrap().clone();
        let mut rem = self.coefficients.clone();
        let mut quot = vec![BigRational::zero(); self.coefficients.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coefficients.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        match a.leading_coefficient() {
            Some(l) => a.scale(&l.recip()),
            None => a,
        }
    }

    /// `true` when the polynomial has no repeated complex root.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Number of distinct real roots, by Sturm's theorem.
    pub fn count_real_roots(&self) -> Result<usize, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1])?.1;
            if r.is_zero() {
                break;
            }
            chain.push(r.neg());
        }
        let sign_changes = |signs: Vec<i8>| {
            let nonzero: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
            nonzero.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at_plus: Vec<i8> = chain.iter().map(|p| p.sign_at_infinity(false)).collect();
        let at_minus: Vec<i8> = chain.iter().map(|p| p.sign_at_infinity(true)).collect();
        Ok(sign_changes(at_minus) - sign_changes(at_plus))
    }

    fn sign_at_infinity(&self, negative: bool) -> i8 {
        match (self.degree(), self.leading_coefficient()) {
            (Some(d), Some(l)) => {
                let s: i8 = if l.is_positive() { 1 } else { -1 };
                if negative && d % 2 == 1 {
                    -s
                } else {
                    s
                }
            }
            _ => 0,
        }
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coefficients.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients of `self * denominator_lcm()`.
    pub fn cleared(&self) -> (Vec<BigInt>, BigInt) {
        let l = self.denominator_lcm();
        let ints = self
            .coefficients
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        (ints, l)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{a}*x^{i}")?,
            }
        }
        Ok(())
    }
}
