use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number, always held in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn from_int(v: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(v.into()))
    }

    /// Builds `num / den`, reducing to lowest terms.
    ///
    /// Panics if `den` is zero.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self(BigRational::new(num.into(), den.into()))
    }

    /// Parses the canonical `(num, den)` decimal form. Anything that would
    /// not print back identically (zero or negative denominator, common
    /// factors, leading zeros, plus signs) is rejected.
    pub fn from_parts(num: &str, den: &str) -> Option<Self> {
        let n = BigInt::from_str(num).ok()?;
        let d = BigInt::from_str(den).ok()?;
        if !d.is_positive() || !n.gcd(&d).is_one() {
            return None;
        }
        if n.to_string() != num || d.to_string() != den {
            return None;
        }
        Some(Self(BigRational::new_raw(n, d)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// `2·self − other`, the reflection of `other` through `self`.
    pub fn reflect(&self, other: &Self) -> Self {
        Self(&self.0 + &self.0 - &other.0)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl From<i64> for ExactScalar {
    fn from(v: i64) -> Self {
        Self::from_int(v)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(v: BigInt) -> Self {
        Self::from_int(v)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                ExactScalar($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: String,
    den: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            num: self.0.numer().to_string(),
            den: self.0.denom().to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        ExactScalar::from_parts(&w.num, &w.den).ok_or_else(|| {
            D::Error::custom(format!(
                "non-canonical rational {{num: {:?}, den: {:?}}}",
                w.num, w.den
            ))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let x = ExactScalar::ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
    }

    #[test]
    fn integers_serialize_with_unit_denominator() {
        let json = serde_json::to_string(&ExactScalar::from(726)).unwrap();
        assert_eq!(json, r#"{"num":"726","den":"1"}"#);
    }

    #[test]
    fn rejects_non_canonical_wire_forms() {
        for (n, d) in [
            ("2", "4"),
            ("1", "0"),
            ("1", "-2"),
            ("+1", "2"),
            ("01", "2"),
            ("x", "1"),
        ] {
            assert!(ExactScalar::from_parts(n, d).is_none(), "{n}/{d}");
        }
        assert!(ExactScalar::from_parts("-0", "1").is_none());
        assert_eq!(
            ExactScalar::from_parts("-7", "3"),
            Some(ExactScalar::ratio(-7, 3))
        );
    }

    #[test]
    fn reflect() {
        let m = ExactScalar::ratio(1, 2);
        assert_eq!(m.reflect(&ExactScalar::from(3)), ExactScalar::from(-2));
    }
}
