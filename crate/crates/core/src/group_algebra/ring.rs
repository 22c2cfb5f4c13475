use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{GroupError, GroupTable};

/// An element of the integral group ring `Z[G]`, stored sparsely as
/// `element index -> coefficient` with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    coefficients: BTreeMap<usize, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The ring identity `1 = 1*e`.
    pub fn one(g: &GroupTable) -> Self {
        Self::basis(g.identity())
    }

    /// The basis element `1*x`.
    pub fn basis(x: usize) -> Self {
        Self::term(x, BigInt::one())
    }

    pub fn term(x: usize, coefficient: BigInt) -> Self {
        let mut coefficients = BTreeMap::new();
        if !coefficient.is_zero() {
            coefficients.insert(x, coefficient);
        }
        GroupRingElement { coefficients }
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (x, c) in terms {
            out.add_term(x, c.into());
        }
        out
    }

    fn add_term(&mut self, x: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coefficients.entry(x).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coefficients.remove(&x);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, x: usize) -> BigInt {
        self.coefficients.get(&x).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coefficients.iter().map(|(&x, c)| (x, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElement {
            coefficients: self.coefficients.iter().map(|(&x, c)| (x, -c)).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        GroupRingElement {
            coefficients: self.coefficients.iter().map(|(&x, c)| (x, c * k)).collect(),
        }
    }

    /// Convolution product `(sum a_g g)(sum b_h h) = sum a_g b_h (gh)`.
    pub fn mul(&self, other: &Self, g: &GroupTable) -> Self {
        let mut out = Self::zero();
        for (x, a) in self.terms() {
            for (y, b) in other.terms() {
                out.add_term(g.mul(x, y), a * b);
            }
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_translate(&self, x: usize, g: &GroupTable) -> Self {
        GroupRingElement {
            coefficients: self.coefficients.iter().map(|(&y, c)| (g.mul(x, y), c.clone())).collect(),
        }
    }

    /// Dense coefficient vector in element-index order.
    pub fn to_dense(&self, order: usize) -> Vec<BigInt> {
        (0..order).map(|x| self.coefficient(x)).collect()
    }

    /// Parses expressions such as `1 + alpha - gamma - alpha*gamma` or
    /// `2 + 2*omega`. Each term is a `*`-product of integers and element
    /// words; the empty product is `1`.
    pub fn parse(expr: &str, g: &GroupTable) -> Result<Self, GroupError> {
        let bad = |msg: &str| GroupError::BadRingExpression(format!("{msg} in `{expr}`"));
        let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty expression"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let (sign, body) = match rest.as_bytes()[0] {
                b'+' => (1, &rest[1..]),
                b'-' => (-1, &rest[1..]),
                _ if first => (1, rest),
                _ => return Err(bad("expected `+` or `-`")),
            };
            first = false;
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            if term.is_empty() {
                return Err(bad("empty term"));
            }
            let mut coefficient = BigInt::from(sign);
            let mut element = g.identity();
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.bytes().all(|b| b.is_ascii_digit()) {
                    coefficient *= factor.parse::<BigInt>().map_err(|_| bad("bad integer"))?;
                } else {
                    let x = g
                        .element(factor)
                        .ok_or_else(|| GroupError::UnknownElement(factor.to_string()))?;
                    element = g.mul(element, x);
                }
            }
            out.add_term(element, coefficient);
        }
        Ok(out)
    }

    /// Renders the element using the group's element names, e.g.
    /// `1 + alpha - gamma - alpha*gamma`.
    pub fn display(&self, g: &GroupTable) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (x, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = c.abs();
            let name = g.element_name(x);
            if x == g.identity() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(name);
            } else {
                out.push_str(&format!("{magnitude}*{name}"));
            }
        }
        out
    }

    /// Coefficients keyed by element name, the JSON wire form.
    pub fn to_named_map(&self, g: &GroupTable) -> BTreeMap<String, BigInt> {
        self.terms().map(|(x, c)| (g.element_name(x).to_string(), c.clone())).collect()
    }

    pub fn from_named_map(map: &BTreeMap<String, BigInt>, g: &GroupTable) -> Result<Self, GroupError> {
        let mut out = Self::zero();
        for (word, c) in map {
            let x = g.element(word).ok_or_else(|| GroupError::UnknownElement(word.clone()))?;
            out.add_term(x, c.clone());
        }
        Ok(out)
    }
}

/// Shorthand used throughout the crate for literal group ring elements.
///
/// Panics on a malformed expression, so only use it with literals.
pub fn lam(expr: &str, g: &GroupTable) -> GroupRingElement {
    GroupRingElement::parse(expr, g).unwrap_or_else(|e| panic!("bad group ring literal: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::build_d8;
    use proptest::prelude::*;

    #[test]
    fn involution_products() {
        let g = build_d8();
        assert!(lam("1+beta", &g).mul(&lam("1-beta", &g), &g).is_zero());
        assert!(lam("1-gamma", &g).mul(&lam("1+gamma", &g), &g).is_zero());
        assert_eq!(lam("1+beta", &g).mul(&lam("1+beta", &g), &g), lam("2+2*beta", &g));
    }

    #[test]
    fn parse_and_display() {
        let g = build_d8();
        let x = lam("1 + alpha - gamma - alpha*gamma", &g);
        assert_eq!(x.display(&g), "1 + alpha - gamma - alpha*gamma");
        assert_eq!(lam("gamma*beta", &g), lam("alpha*gamma", &g));
        assert_eq!(lam("-1 + 1", &g), GroupRingElement::zero());
        assert_eq!(lam("-2*beta", &g).display(&g), "-2*beta");
    }

    #[test]
    fn parse_errors() {
        let g = build_d8();
        assert!(matches!(GroupRingElement::parse("1 + delta", &g), Err(GroupError::UnknownElement(_))));
        assert!(GroupRingElement::parse("1 ++ beta", &g).is_err());
        assert!(GroupRingElement::parse("", &g).is_err());
        assert!(GroupRingElement::parse("2**beta", &g).is_err());
    }

    #[test]
    fn named_map_round_trip() {
        let g = build_d8();
        let x = lam("3 - 2*alpha*beta*gamma + beta", &g);
        assert_eq!(GroupRingElement::from_named_map(&x.to_named_map(&g), &g).unwrap(), x);
    }

    fn element() -> impl Strategy<Value = GroupRingElement> {
        proptest::collection::vec((0usize..8, -4i64..=4), 0..6)
            .prop_map(GroupRingElement::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in element(), b in element(), c in element()) {
            let g = build_d8();
            prop_assert_eq!(a.mul(&b, &g).mul(&c, &g), a.mul(&b.mul(&c, &g), &g));
            prop_assert_eq!(a.mul(&b.add(&c), &g), a.mul(&b, &g).add(&a.mul(&c, &g)));
            prop_assert_eq!(a.add(&b).mul(&c, &g), a.mul(&c, &g).add(&b.mul(&c, &g)));
            prop_assert_eq!(a.mul(&GroupRingElement::one(&g), &g), a.clone());
            prop_assert!(a.sub(&a).is_zero());
        }
    }
}
