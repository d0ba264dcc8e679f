use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgError;

/// Exact arbitrary-precision rational number.
///
/// Always held in lowest terms with a positive denominator. `Display` prints
/// `p/q`, or the bare integer when the denominator is one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, AlgError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Builds `numer/denom` from machine integers. Panics when `denom == 0`.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("zero denominator")
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
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

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, AlgError> {
        if rhs.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Denominator as an unsigned magnitude, used when clearing denominators.
    pub(crate) fn denom_magnitude(&self) -> BigUint {
        self.0.denom().magnitude().clone()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing a scalar written as `p/q` or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty scalar")]
    Empty,
    #[error("malformed integer `{0}`")]
    BadInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt, ParseRationalError> {
            let digits = if allow_sign { t.strip_prefix('-').unwrap_or(t) } else { t };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(ParseRationalError::BadInteger(t.to_string()));
            }
            t.parse::<BigInt>()
                .map_err(|_| ParseRationalError::BadInteger(t.to_string()))
        };
        let n = parse_int(num, true)?;
        let d = match den {
            Some(d) => parse_int(d, false)?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n, d)))
    }
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

// Panics on a zero divisor, like integer division; use `checked_div` when the
// divisor is not known to be nonzero.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.denom().is_one() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(BigInt::from(*other))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::frac(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
        assert_eq!(Rational::frac(6, 3).to_string(), "2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rational::new(1, 0), Err(AlgError::DivisionByZero));
        assert!(Rational::one().checked_div(&Rational::zero()).is_err());
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("4/6".parse::<Rational>().unwrap(), Rational::frac(2, 3));
        assert_eq!("-1/8".parse::<Rational>().unwrap(), Rational::frac(-1, 8));
        assert_eq!("0".parse::<Rational>().unwrap(), Rational::zero());
        assert_eq!("1/0".parse::<Rational>(), Err(ParseRationalError::ZeroDenominator));
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
        assert!("+1".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
        assert!("1/".parse::<Rational>().is_err());
    }

    proptest! {
        #[test]
        fn addition_matches_cross_multiplication(
            a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000
        ) {
            let sum = Rational::frac(a, b) + Rational::frac(c, d);
            // (a*d + c*b) * sum.denom == sum.numer * (b*d)
            let lhs = BigInt::from(a * d + c * b) * sum.denom();
            let rhs = sum.numer() * BigInt::from(b * d);
            prop_assert_eq!(lhs, rhs);
            prop_assert!(sum.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(sum.numer(), sum.denom()).is_one());
        }

        #[test]
        fn product_and_quotient_match_cross_multiplication(
            a in -1000i64..1000, b in 1i64..1000, c in 1i64..1000, d in 1i64..1000
        ) {
            let x = Rational::frac(a, b);
            let y = Rational::frac(c, d);
            let p = &x * &y;
            prop_assert_eq!(BigInt::from(a * c) * p.denom(), p.numer() * BigInt::from(b * d));
            let q = x.checked_div(&y).unwrap();
            prop_assert_eq!(BigInt::from(a * d) * q.denom(), q.numer() * BigInt::from(b * c));
        }

        #[test]
        fn display_parse_round_trip(a in any::<i64>(), b in 1i64..i64::MAX) {
            let r = Rational::frac(a, b);
            prop_assert_eq!(r.to_string().parse::<Rational>().unwrap(), r);
        }
    }
}
