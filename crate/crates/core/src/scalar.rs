//! Exact rational scalars.
//!
//! Every coordinate, coefficient and incidence value in the crate is a
//! [`Scalar`]: an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Incidence questions reduce to "is this scalar zero",
//! which is decidable only because nothing is ever rounded.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Scalar(BigRational::from_integer(n.into()))
    }

    /// Builds `num/den`. Panics if `den` is zero.
    pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Scalar(BigRational::new(num.into(), den.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Scalar(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc *= self;
        }
        acc
    }

    /// The zero/nonzero class of the scalar. Two scalars are equivalent
    /// exactly when they fall in the same class.
    pub fn equivalent(&self, other: &Scalar) -> bool {
        self.is_zero() == other.is_zero()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    /// Lossy conversion for display purposes only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Number of decimal digits in the larger of numerator and denominator.
    pub fn height_digits(&self) -> usize {
        let n = self.0.numer().abs().to_str_radix(10).len();
        let d = self.0.denom().to_str_radix(10).len();
        n.max(d)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_integer(n)
    }
}

macro_rules! scalar_from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Scalar {
            fn from(n: $t) -> Self {
                Scalar::from_integer(BigInt::from(n))
            }
        }
    )*};
}
scalar_from_int!(i32, i64, u32, u64, usize);

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `"3"`, `"-7/2"`, `"+4"`; surrounding whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidNumber(s.to_string());
        let t = s.trim();
        let parse_int = |p: &str| -> Result<BigInt, Error> {
            let p = p.trim();
            let p = p.strip_prefix('+').unwrap_or(p);
            if p.is_empty() {
                return Err(bad());
            }
            p.parse::<BigInt>().map_err(|_| bad())
        };
        match t.split_once('/') {
            None => Ok(Scalar::from_integer(parse_int(t)?)),
            Some((n, d)) => {
                let n = parse_int(n)?;
                let d = parse_int(d)?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar(BigRational::new(n, d)))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar((&self.0).$m(&rhs.0))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar(self.0.$m(rhs.0))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                Scalar(self.0.$m(&rhs.0))
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                Scalar((&self.0).$m(rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Scales a list of rationals to a primitive integer vector: denominators
/// cleared, common factor removed, first nonzero entry positive. All-zero
/// input is returned unchanged.
pub fn primitive(values: &[Scalar]) -> Vec<Scalar> {
    if values.iter().all(Scalar::is_zero) {
        return values.to_vec();
    }
    let lcm = values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let mut gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let lead_negative = ints
        .iter()
        .find(|v| !v.is_zero())
        .map(|v| v.is_negative())
        .unwrap_or(false);
    if lead_negative {
        gcd = -gcd;
    }
    ints.into_iter()
        .map(|v| Scalar::from_integer(v / &gcd))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: Scalar = "-7/2".parse().unwrap();
        assert_eq!(s.to_string(), "-7/2");
        let t: Scalar = " 6/4 ".parse().unwrap();
        assert_eq!(t.to_string(), "3/2");
        let u: Scalar = "+12".parse().unwrap();
        assert_eq!(u, Scalar::from(12));
        assert_eq!(Scalar::ratio(4, -2).to_string(), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/0", "a", "1/", "/3", "1.5", "--2"] {
            assert!(bad.parse::<Scalar>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn canonical_form() {
        let s = Scalar::ratio(-6, -4);
        assert_eq!(s.numer(), &BigInt::from(3));
        assert_eq!(s.denom(), &BigInt::from(2));
    }

    #[test]
    fn equivalence_classes() {
        assert!(Scalar::from(3).equivalent(&Scalar::ratio(-1, 7)));
        assert!(Scalar::zero().equivalent(&Scalar::zero()));
        assert!(!Scalar::zero().equivalent(&Scalar::one()));
    }

    #[test]
    fn primitive_vectors() {
        let v = primitive(&[Scalar::ratio(-1, 2), Scalar::from(0), Scalar::ratio(3, 4)]);
        assert_eq!(v, vec![Scalar::from(2), Scalar::from(0), Scalar::from(-3)]);
        let z = primitive(&[Scalar::zero(), Scalar::zero()]);
        assert!(z.iter().all(Scalar::is_zero));
        let w = primitive(&[Scalar::from(0), Scalar::from(-6), Scalar::from(9)]);
        assert_eq!(w, vec![Scalar::from(0), Scalar::from(2), Scalar::from(-3)]);
    }
}
