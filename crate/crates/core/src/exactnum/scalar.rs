use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// An element `r + s·√2` of the quadratic field Q(√2).
///
/// Since √2 is irrational the pair `(r, s)` is unique, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    r: Rational,
    s: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Applies `op` to `a` and `b`. `Neg` ignores `b`.
pub fn scalar_arith(a: &Scalar, b: &Scalar, op: ScalarOp) -> Result<Scalar> {
    Ok(match op {
        ScalarOp::Add => a + b,
        ScalarOp::Sub => a - b,
        ScalarOp::Mul => a * b,
        ScalarOp::Div => a.checked_div(b)?,
        ScalarOp::Neg => -a,
    })
}

impl Scalar {
    pub fn new(r: Rational, s: Rational) -> Self {
        Scalar { r, s }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Scalar {
            r: Rational::from_integer(BigInt::from(v)),
            s: Rational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar {
            r: Rational::new(BigInt::from(num), BigInt::from(den)),
            s: Rational::zero(),
        }
    }

    /// `c·√2` for an integer `c`.
    pub fn sqrt2_times(c: i64) -> Self {
        Scalar {
            r: Rational::zero(),
            s: Rational::from_integer(BigInt::from(c)),
        }
    }

    pub fn sqrt2() -> Self {
        Scalar::sqrt2_times(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.r
    }

    pub fn sqrt2_part(&self) -> &Rational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r.is_one() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// Field conjugate `r - s·√2`.
    pub fn conjugate(&self) -> Scalar {
        Scalar {
            r: self.r.clone(),
            s: -&self.s,
        }
    }

    /// Norm `r² - 2s²`, nonzero for every nonzero element.
    pub fn norm(&self) -> Rational {
        &self.r * &self.r - Rational::from_integer(BigInt::from(2)) * &self.s * &self.s
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        Ok(Scalar {
            r: &self.r / &norm,
            s: -&self.s / &norm,
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale_int(&self, k: i64) -> Scalar {
        let k = Rational::from_integer(BigInt::from(k));
        Scalar {
            r: &self.r * &k,
            s: &self.s * &k,
        }
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_int(v)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar { r, s: Rational::zero() }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            r: &self.r + &rhs.r,
            s: &self.s + &rhs.s,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            r: &self.r - &rhs.r,
            s: &self.s - &rhs.s,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.s.is_zero() && rhs.s.is_zero() {
            return Scalar {
                r: &self.r * &rhs.r,
                s: Rational::zero(),
            };
        }
        let two = Rational::from_integer(BigInt::from(2));
        Scalar {
            r: &self.r * &rhs.r + two * &self.s * &rhs.s,
            s: &self.r * &rhs.s + &self.s * &rhs.r,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            r: -&self.r,
            s: -&self.s,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { r: -self.r, s: -self.s }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.r += &rhs.r;
        self.s += &rhs.s;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.r -= &rhs.r;
        self.s -= &rhs.s;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = |c: &Rational| if c.is_one() { String::new() } else { c.to_string() };
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) if self.s.is_negative() => write!(f, "-{}√2", coeff(&-&self.s)),
            (true, false) => write!(f, "{}√2", coeff(&self.s)),
            (false, false) if self.s.is_negative() => write!(f, "{} - {}√2", self.r, coeff(&-&self.s)),
            (false, false) => write!(f, "{} + {}√2", self.r, coeff(&self.s)),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// Canonical `"num/den"` string, denominator always present.
pub(crate) fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let len = if self.s.is_zero() { 1 } else { 2 };
        let mut map = serializer.serialize_map(Some(len))?;
        map.serialize_entry("r", &format_rational(&self.r))?;
        if !self.s.is_zero() {
            map.serialize_entry("s", &format_rational(&self.s))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str(r#"an object {"r": "n/d", "s": "n/d"}"#)
            }

            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> std::result::Result<Scalar, A::Error> {
                let mut r = None;
                let mut s = None;
                while let Some(key) = map.next_key::<String>()? {
                    let value: String = map.next_value()?;
                    let q = parse_rational(&value).map_err(de::Error::custom)?;
                    match key.as_str() {
                        "r" => r = Some(q),
                        "s" => s = Some(q),
                        other => return Err(de::Error::unknown_field(other, &["r", "s"])),
                    }
                }
                let r = r.ok_or_else(|| de::Error::missing_field("r"))?;
                Ok(Scalar::new(r, s.unwrap_or_else(Rational::zero)))
            }
        }

        deserializer.deserialize_map(ScalarVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(r: i64, s: i64) -> Scalar {
        Scalar::new(Rational::from_integer(r.into()), Rational::from_integer(s.into()))
    }

    #[test]
    fn sqrt2_squared_is_two() {
        assert_eq!(Scalar::sqrt2() * Scalar::sqrt2(), Scalar::from_int(2));
    }

    #[test]
    fn additive_identity() {
        assert_eq!(s(1, 0) + s(0, 0), Scalar::one());
    }

    #[test]
    fn conjugate_product() {
        assert_eq!(s(1, 1) * s(1, -1), Scalar::from_int(-1));
        assert_eq!(s(1, 1).norm(), Rational::from_integer((-1).into()));
    }

    #[test]
    fn division() {
        let a = s(3, 5);
        let b = s(1, 1);
        let q = scalar_arith(&a, &b, ScalarOp::Div).unwrap();
        assert_eq!(&q * &b, a);
        assert!(matches!(
            scalar_arith(&a, &Scalar::zero(), ScalarOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn json_encoding() {
        let v = serde_json::to_string(&Scalar::from_ratio(-2, 4)).unwrap();
        assert_eq!(v, r#"{"r":"-1/2"}"#);
        let v = serde_json::to_string(&s(0, 3)).unwrap();
        assert_eq!(v, r#"{"r":"0/1","s":"3/1"}"#);
        let back: Scalar = serde_json::from_str(r#"{"r":"4/6","s":"-1"}"#).unwrap();
        assert_eq!(
            back,
            Scalar::new(Rational::new(2.into(), 3.into()), Rational::from_integer((-1).into()))
        );
    }

    #[test]
    fn display() {
        assert_eq!(s(1, -2).to_string(), "1 - 2√2");
        assert_eq!(s(0, 1).to_string(), "√2");
        assert_eq!(s(0, -1).to_string(), "-√2");
        assert_eq!(s(2, 1).to_string(), "2 + √2");
        assert_eq!(Scalar::from_ratio(3, 6).to_string(), "1/2");
    }
}
