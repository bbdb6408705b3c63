//! Exact scalar abstraction.
//!
//! Every computation in this crate is a comparison of rational pairings
//! against small thresholds (0, 1, 1/2), so the scalar type must be an exact
//! ordered field. Floating point types are deliberately not implemented.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

/// An exact ordered field usable as the coordinate type of exponent vectors.
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + FromStr + Signed + FromPrimitive + Send + Sync + 'static
{
    /// `numer / denom`; panics on a zero denominator.
    fn ratio(numer: i64, denom: i64) -> Self;

    fn from_int(n: i64) -> Self {
        Self::ratio(n, 1)
    }

    fn is_integral(&self) -> bool;

    /// Greatest integer `<= self`, if it fits in an `i64`.
    fn floor_i64(&self) -> Option<i64>;

    fn half() -> Self {
        Self::ratio(1, 2)
    }

    /// Parse a `"p/q"` or `"p"` string.
    fn parse_str(s: &str) -> Option<Self> {
        Self::from_str(s.trim()).ok()
    }
}

impl Scalar for Ratio<i64> {
    fn ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(numer, denom)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn floor_i64(&self) -> Option<i64> {
        Some(self.floor().to_integer())
    }
}

impl Scalar for BigRational {
    fn ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn floor_i64(&self) -> Option<i64> {
        self.floor().to_integer().to_i64()
    }
}

/// Serde adapters writing scalars as `"p/q"` strings, for use with
/// `#[serde(with = ...)]`.
pub mod serde_rational {
    use super::Scalar;
    use crate::rootdata::RationalRepr;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Scalar, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        RationalRepr::deserialize(d)?.parse().map_err(D::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<T: Scalar, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(x) => s.collect_str(x),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Option<T>, D::Error> {
            Option::<RationalRepr>::deserialize(d)?
                .map(|r| r.parse().map_err(D::Error::custom))
                .transpose()
        }
    }

    pub mod vec {
        use super::*;

        pub fn serialize<T: Scalar, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(v.iter().map(|x| x.to_string()))
        }

        pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
            Vec::<RationalRepr>::deserialize(d)?
                .into_iter()
                .map(|r| r.parse().map_err(D::Error::custom))
                .collect()
        }
    }
}
