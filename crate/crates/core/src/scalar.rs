//! Exact Gaussian-rational scalars.
//!
//! Every coefficient produced by the action, including the long falling
//! factorial products of ladder words, is a [`GaussianRational`]: a complex
//! number whose real and imaginary parts are arbitrary-precision rationals.
//! Both parts are kept in lowest terms with a positive denominator, so derived
//! equality is value equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        // BigRational::new reduces and normalizes the sign on construction.
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn real(re: BigRational) -> Self {
        Self { re, im: BigRational::zero() }
    }

    /// `num/den + 0i`. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(num.into(), den.into()))
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn complex(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self {
            re: BigRational::new(re_num.into(), re_den.into()),
            im: BigRational::new(im_num.into(), im_den.into()),
        }
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplicative inverse; fails exactly when `self == 0`.
    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm_sqr();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { re: &self.re / &norm, im: -&self.im / &norm })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer part of the real component, rounded toward negative infinity.
    pub fn floor_re(&self) -> BigInt {
        self.re.floor().to_integer()
    }

    /// The value as an integer when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.im.is_zero() && self.re.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for GaussianRational {
    fn from(n: BigInt) -> Self {
        Self::real(BigRational::from_integer(n))
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::real(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: &'a GaussianRational) -> GaussianRational {
                (&self).$f(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

impl std::iter::Product for GaussianRational {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl<'a> std::iter::Product<&'a GaussianRational> for GaussianRational {
    fn product<I: Iterator<Item = &'a GaussianRational>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl std::iter::Sum for GaussianRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Literal form accepted by [`FromStr`]: `3`, `-1/2`, `i`, `-2i`, `1/2+i`, `-1-3/4i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        let im_abs = self.im.abs();
        let im_part = if im_abs.is_one() { String::new() } else { fmt_rational(&im_abs) };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im_part}i")
        } else {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            write!(f, "{}{sign}{im_part}i", fmt_rational(&self.re))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GR({self})")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(&s)?));
        };
        // Split at the last sign that is not the leading one.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_str, im_str) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() { BigRational::zero() } else { parse_rational(re_str)? };
        let im = match im_str {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(Self { re, im })
    }
}

#[derive(Serialize, Deserialize)]
struct RationalJson {
    num: String,
    den: String,
}

impl RationalJson {
    fn from_rational(q: &BigRational) -> Self {
        Self { num: q.numer().to_string(), den: q.denom().to_string() }
    }

    fn to_rational(&self) -> Result<BigRational> {
        let num: BigInt = self.num.parse().map_err(|_| Error::Parse(format!("bad numerator `{}`", self.num)))?;
        let den: BigInt = self.den.parse().map_err(|_| Error::Parse(format!("bad denominator `{}`", self.den)))?;
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GaussianRational", 2)?;
        st.serialize_field("re", &RationalJson::from_rational(&self.re))?;
        st.serialize_field("im", &RationalJson::from_rational(&self.im))?;
        st.end()
    }
}

/// Accepts the canonical object form or a literal string such as `"1/2+i"`.
impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Object { re: RationalJson, im: RationalJson },
            Literal(String),
            Integer(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Object { re, im } => Ok(Self {
                re: re.to_rational().map_err(de::Error::custom)?,
                im: im.to_rational().map_err(de::Error::custom)?,
            }),
            Repr::Literal(s) => s.parse().map_err(de::Error::custom),
            Repr::Integer(n) => Ok(Self::from_integer(n)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(gr("1/2") + gr("i"), gr("1/2+i"));
        assert_eq!(gr("3/7-2i") + GaussianRational::zero(), gr("3/7-2i"));
        assert!((gr("-1+i") + gr("1-i")).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(gr("-1+i") * gr("i"), gr("-1-i"));
        assert_eq!(gr("5/3+2i") * GaussianRational::one(), gr("5/3+2i"));
        let p: GaussianRational = [-4, -3, -2, -1].into_iter().map(GaussianRational::from).product();
        assert_eq!(p, GaussianRational::from(24));
    }

    #[test]
    fn inv_examples() {
        assert_eq!(GaussianRational::from(24).inv().unwrap(), GaussianRational::ratio(1, 24));
        assert_eq!(GaussianRational::one().inv().unwrap(), GaussianRational::one());
        assert_eq!(GaussianRational::i().inv().unwrap(), gr("-i"));
        assert_eq!(GaussianRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = GaussianRational::complex(2, 4, -3, -6);
        let b = GaussianRational::complex(1, 2, 1, 2);
        assert_eq!(a, b);
        assert_eq!(a.re().denom(), &BigInt::from(2));
        assert!(a.re().denom().is_positive());
        let c = GaussianRational::ratio(3, -9);
        assert_eq!(c.re().numer(), &BigInt::from(-1));
        assert_eq!(c.re().denom(), &BigInt::from(3));
    }

    #[test]
    fn literal_round_trip() {
        for s in ["0", "3", "-1/2", "i", "-i", "2i", "-3/4i", "1/2+i", "-1-i", "9/2", "7/3-5/2i"] {
            let v = gr(s);
            assert_eq!(v.to_string(), s, "display of {s}");
            assert_eq!(gr(&v.to_string()), v);
        }
        assert_eq!(gr("0+1i"), GaussianRational::i());
        assert_eq!(gr(" 1/2 + 1i "), gr("1/2+i"));
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("abc".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn json_shape() {
        let v = gr("-1/2+3i");
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"re":{"num":"-1","den":"2"},"im":{"num":"3","den":"1"}}"#);
        let back: GaussianRational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        let lit: GaussianRational = serde_json::from_str(r#""-1/2+3i""#).unwrap();
        assert_eq!(lit, v);
        let int: GaussianRational = serde_json::from_str("7").unwrap();
        assert_eq!(int, GaussianRational::from(7));
    }

    #[test]
    fn floor_of_real_part() {
        assert_eq!(gr("3/2").floor_re(), BigInt::from(1));
        assert_eq!(gr("-1/2").floor_re(), BigInt::from(-1));
        assert_eq!(gr("i").floor_re(), BigInt::from(0));
        assert_eq!(gr("-2+i").floor_re(), BigInt::from(-2));
    }
}
