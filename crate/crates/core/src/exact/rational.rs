use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always reduced, denominator always
/// positive. The canonical zero is 0/1.
///
/// Renders as `p/q`, with `/q` omitted when the denominator is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational {
    inner: BigRational,
}

impl Rational {
    pub fn new<N: Into<BigInt>, D: Into<BigInt>>(num: N, den: D) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { inner: BigRational::new(num.into(), den) })
    }

    pub fn from_integer<N: Into<BigInt>>(n: N) -> Self {
        Self { inner: BigRational::from_integer(n.into()) }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numerator(&self) -> &BigInt {
        self.inner.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.inner.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.inner.is_integer()
    }

    /// True when 2x is an odd integer, i.e. the reduced denominator is 2.
    pub fn is_half_integer(&self) -> bool {
        *self.inner.denom() == BigInt::from(2)
    }

    pub fn abs(&self) -> Self {
        Self { inner: self.inner.abs() }
    }

    pub fn floor(&self) -> BigInt {
        self.inner.floor().to_integer()
    }

    /// Fractional part in [0, 1): `x - floor(x)`.
    pub fn fract(&self) -> Self {
        Self { inner: &self.inner - BigRational::from_integer(self.inner.floor().to_integer()) }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { inner: self.inner.recip() })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { inner: &self.inner / &rhs.inner })
    }

    /// Exact integer power; negative exponents invert (error on zero base).
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = exp.unsigned_abs();
        let num = self.inner.numer().pow(e);
        let den = self.inner.denom().pow(e);
        let inner = if exp < 0 {
            BigRational::new(den, num)
        } else if e == 0 {
            BigRational::one()
        } else {
            BigRational::new_raw(num, den) // powers of a reduced fraction stay reduced
        };
        Ok(Self { inner })
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.inner.to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational { inner: &self.inner + &rhs.inner }
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational { inner: &self.inner - &rhs.inner }
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational { inner: &self.inner * &rhs.inner }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { inner: -self.inner.clone() }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.denom().is_one() {
            write!(f, "{}", self.inner.numer())
        } else {
            write!(f, "{}/{}", self.inner.numer(), self.inner.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidArgument(format!("cannot parse rational from {s:?}"));
        match s.split_once('/') {
            Some((p, q)) => {
                let num: BigInt = p.trim().parse().map_err(|_| bad())?;
                let den: BigInt = q.trim().parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(Self { inner: BigRational::new(num, den) })
            }
            None => {
                let num: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Self::from_integer(num))
            }
        }
    }
}

/// Shorthand used pervasively in tests: `rat(1, 2)` is 1/2.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

/// Reduced denominator as u32 when it fits; `None` otherwise.
pub(crate) fn small_denominator(x: &Rational) -> Option<u32> {
    use num_traits::ToPrimitive;
    x.denominator().to_u32()
}
