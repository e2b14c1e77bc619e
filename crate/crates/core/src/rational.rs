//! Exact rationals and the projective line `Q ∪ {∞}`.
//!
//! [`Rational`] wraps an arbitrary-precision reduced fraction. Its textual
//! form is `p/q` or `p`. [`ExtendedRational`] adds the single point at
//! infinity, written `inf`, which is simultaneously `+∞` and `-∞`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Convenience constructor for literals; panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("literal fraction with zero denominator")
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `1/self`, or `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    pub fn ceil(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }

    /// Splits `q` into its floor and fractional part: `q = ⟦q⟧ + fr(q)` with
    /// `0 <= fr(q) < 1`.
    pub fn floor_decompose(&self) -> (BigInt, Rational) {
        let fl = self.floor();
        let frac = self - &Rational::from_integer(fl.clone());
        (fl, frac)
    }

    /// True iff `0 < self < 1`.
    pub fn in_unit_interval(&self) -> bool {
        self.is_positive() && self.numer() < self.denom()
    }

}

/// Free-function form of [`Rational::floor_decompose`].
pub fn floor_decompose(q: &Rational) -> (BigInt, Rational) {
    q.floor_decompose()
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, as for the underlying type.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn parse_error(input: &str, position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        input: input.to_string(),
        position,
        message: message.into(),
    }
}

/// Parses a signed decimal integer occupying all of `text`. `offset` is the
/// position of `text` inside `full`, used for error reporting.
pub(crate) fn parse_integer(text: &str, full: &str, offset: usize) -> Result<BigInt> {
    let trimmed_start = text.len() - text.trim_start().len();
    let t = text.trim();
    let pos = offset + trimmed_start;
    if t.is_empty() {
        return Err(parse_error(full, pos, "expected an integer"));
    }
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() {
        return Err(parse_error(full, pos, "expected digits after sign"));
    }
    if let Some(i) = digits.find(|c: char| !c.is_ascii_digit()) {
        let bad = pos + (t.len() - digits.len()) + i;
        return Err(parse_error(full, bad, "unexpected character in integer"));
    }
    t.parse::<BigInt>()
        .map_err(|e| parse_error(full, pos, e.to_string()))
}

/// Parses `p/q` or `p` (whitespace around the tokens is ignored).
pub(crate) fn parse_rational(text: &str, full: &str, offset: usize) -> Result<Rational> {
    match text.find('/') {
        None => Ok(Rational::from_integer(parse_integer(text, full, offset)?)),
        Some(slash) => {
            let num = parse_integer(&text[..slash], full, offset)?;
            let den = parse_integer(&text[slash + 1..], full, offset + slash + 1)?;
            if den.is_zero() {
                return Err(parse_error(full, offset + slash + 1, "zero denominator"));
            }
            Ok(Rational(BigRational::new(num, den)))
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s, s, 0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A point of `Q ∪ {∞}` with a single, unsigned infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    Infinity,
}

impl ExtendedRational {
    /// Builds `p/q` from homogeneous coordinates; `q = 0` gives infinity.
    /// Panics when both coordinates vanish.
    pub fn from_projective(p: BigInt, q: BigInt) -> Self {
        if q.is_zero() {
            assert!(!p.is_zero(), "0/0 is not a point of the projective line");
            ExtendedRational::Infinity
        } else {
            ExtendedRational::Finite(Rational(BigRational::new(p, q)))
        }
    }

    /// Canonical homogeneous coordinates `(p, q)` with `q >= 0` and
    /// `gcd(|p|, q) = 1`; infinity is `(-1, 0)`.
    pub fn to_projective(&self) -> (BigInt, BigInt) {
        match self {
            ExtendedRational::Finite(r) => (r.numer().clone(), r.denom().clone()),
            ExtendedRational::Infinity => (-BigInt::one(), BigInt::zero()),
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(r) => Some(r),
            ExtendedRational::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedRational::Infinity)
    }

    /// `1/x` on the projective line: `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        match self {
            ExtendedRational::Infinity => ExtendedRational::Finite(Rational::zero()),
            ExtendedRational::Finite(r) => match r.recip() {
                Some(inv) => ExtendedRational::Finite(inv),
                None => ExtendedRational::Infinity,
            },
        }
    }
}

impl From<Rational> for ExtendedRational {
    fn from(r: Rational) -> Self {
        ExtendedRational::Finite(r)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(r) => r.fmt(f),
            ExtendedRational::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "inf" {
            Ok(ExtendedRational::Infinity)
        } else {
            s.parse().map(ExtendedRational::Finite)
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtendedRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a `BigInt` as a JSON integer when it fits in `i64`
/// and as a decimal string otherwise.
pub mod bigint_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, serializer: S) -> Result<S::Ok, S::Error> {
        match n.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.collect_str(n),
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Int(i64),
        Text(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigInt, D::Error> {
        match Repr::deserialize(deserializer)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }

    pub mod vec {
        use num_bigint::BigInt;
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        #[derive(Deserialize)]
        struct Wrapped(#[serde(with = "super")] BigInt);

        pub fn serialize<S: Serializer>(v: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
            struct One<'a>(&'a BigInt);
            impl serde::Serialize for One<'_> {
                fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                    super::serialize(self.0, s)
                }
            }
            let mut seq = serializer.serialize_seq(Some(v.len()))?;
            for n in v {
                seq.serialize_element(&One(n))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            let items = Vec::<Wrapped>::deserialize(d)?;
            Ok(items.into_iter().map(|w| w.0).collect())
        }
    }

    /// Row-major matrices.
    pub mod matrix {
        use num_bigint::BigInt;
        use serde::ser::SerializeSeq;
        use serde::{Deserialize, Deserializer, Serializer};

        #[derive(Deserialize)]
        struct Row(#[serde(with = "super::vec")] Vec<BigInt>);

        pub fn serialize<S: Serializer>(m: &[Vec<BigInt>], serializer: S) -> Result<S::Ok, S::Error> {
            struct One<'a>(&'a [BigInt]);
            impl serde::Serialize for One<'_> {
                fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                    super::vec::serialize(self.0, s)
                }
            }
            let mut seq = serializer.serialize_seq(Some(m.len()))?;
            for row in m {
                seq.serialize_element(&One(row))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
            let rows = Vec::<Row>::deserialize(d)?;
            Ok(rows.into_iter().map(|r| r.0).collect())
        }
    }
}
