//! JSON encoding for arbitrary precision integers: plain numbers when they
//! fit in 64 bits, decimal strings otherwise.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(small) => s.serialize_i64(small),
        None => s.serialize_str(&v.to_string()),
    }
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
    struct IntVisitor;

    impl Visitor<'_> for IntVisitor {
        type Value = BigInt;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            f.write_str("an integer or a decimal string")
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
            Ok(v.into())
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
            BigInt::from_str(v).map_err(|_| E::custom(format!("`{v}` is not an integer")))
        }
    }

    d.deserialize_any(IntVisitor)
}

/// Newtype so that collections of integers can use the same encoding.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct JsonInt(#[serde(with = "self")] pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<JsonInt> for BigInt {
    fn from(v: JsonInt) -> Self {
        v.0
    }
}

pub fn to_json_vec(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

pub fn from_json_vec(v: Vec<JsonInt>) -> Vec<BigInt> {
    v.into_iter().map(|x| x.0).collect()
}

/// Rationals on the wire: an integer when the denominator is 1, otherwise
/// the string `"num/den"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JsonRat(pub BigRational);

impl serde::Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            serialize(self.0.numer(), s)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> serde::Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct RatVisitor;

        impl Visitor<'_> for RatVisitor {
            type Value = BigRational;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string `num/den`")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigRational, E> {
                Ok(BigRational::from_integer(v.into()))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigRational, E> {
                Ok(BigRational::from_integer(v.into()))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<BigRational, E> {
                parse_rational(v).ok_or_else(|| E::custom(format!("`{v}` is not a rational number")))
            }
        }

        d.deserialize_any(RatVisitor).map(JsonRat)
    }
}

/// Parses `a` or `a/b` with integers `a`, `b` (`b != 0`).
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => BigInt::from_str(text).ok().map(BigRational::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values_are_numbers_large_are_strings() {
        let small = JsonInt(BigInt::from(-12));
        assert_eq!(serde_json::to_string(&small).unwrap(), "-12");
        let big = JsonInt(BigInt::from(10).pow(30));
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(text, "\"1000000000000000000000000000000\"");
        assert_eq!(serde_json::from_str::<JsonInt>(&text).unwrap(), big);
        assert_eq!(serde_json::from_str::<JsonInt>("7").unwrap(), JsonInt(7.into()));
        assert!(serde_json::from_str::<JsonInt>("\"x1\"").is_err());
    }

    #[test]
    fn rationals() {
        let half = JsonRat(BigRational::new(1.into(), 2.into()));
        assert_eq!(serde_json::to_string(&half).unwrap(), "\"1/2\"");
        assert_eq!(serde_json::from_str::<JsonRat>("\"2/4\"").unwrap(), half);
        assert_eq!(serde_json::to_string(&JsonRat(BigRational::from_integer(3.into()))).unwrap(), "3");
        assert!(parse_rational("1/0").is_none());
        assert_eq!(parse_rational("-3"), Some(BigRational::from_integer((-3).into())));
    }
}
