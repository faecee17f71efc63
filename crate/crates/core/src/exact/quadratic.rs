use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::rational::{small_denominator, Rational};

/// Exact element `rat + coef_sqrt3 * sqrt(3)` of the field Q(sqrt 3).
///
/// This field contains every value cot(pi a/q) for reduced denominators
/// q in {2, 3, 4, 6}: 0, +-1, +-sqrt(3) and +-sqrt(3)/3. Equality is
/// componentwise, and the value is zero iff both components are zero
/// (sqrt 3 is irrational).
///
/// Renders as `p/q + r/s*sqrt3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    rat: Rational,
    coef_sqrt3: Rational,
}

impl QuadraticNumber {
    pub fn new(rat: Rational, coef_sqrt3: Rational) -> Self {
        Self { rat, coef_sqrt3 }
    }

    pub fn from_rational(rat: Rational) -> Self {
        Self { rat, coef_sqrt3: Rational::zero() }
    }

    pub fn from_integer<N: Into<BigInt>>(n: N) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn sqrt3() -> Self {
        Self { rat: Rational::zero(), coef_sqrt3: Rational::one() }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rat
    }

    pub fn sqrt3_coefficient(&self) -> &Rational {
        &self.coef_sqrt3
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef_sqrt3.is_zero()
    }

    /// True when the value lies in Q (no sqrt(3) component).
    pub fn is_rational(&self) -> bool {
        self.coef_sqrt3.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self { rat: self.rat.clone(), coef_sqrt3: -&self.coef_sqrt3 }
    }

    /// Field norm a^2 - 3 b^2; zero iff the element is zero.
    pub fn norm(&self) -> Rational {
        let a2 = &self.rat * &self.rat;
        let b2 = &self.coef_sqrt3 * &self.coef_sqrt3;
        &a2 - &(&Rational::from_integer(3) * &b2)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = rhs.norm();
        let num = self * &rhs.conjugate();
        Ok(Self {
            rat: num.rat.checked_div(&norm)?,
            coef_sqrt3: num.coef_sqrt3.checked_div(&norm)?,
        })
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { rat: &self.rat * factor, coef_sqrt3: &self.coef_sqrt3 * factor }
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        QuadraticNumber {
            rat: &self.rat + &rhs.rat,
            coef_sqrt3: &self.coef_sqrt3 + &rhs.coef_sqrt3,
        }
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        QuadraticNumber {
            rat: &self.rat - &rhs.rat,
            coef_sqrt3: &self.coef_sqrt3 - &rhs.coef_sqrt3,
        }
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s, with s^2 = 3.
        let ac = &self.rat * &rhs.rat;
        let bd = &self.coef_sqrt3 * &rhs.coef_sqrt3;
        let ad = &self.rat * &rhs.coef_sqrt3;
        let bc = &self.coef_sqrt3 * &rhs.rat;
        QuadraticNumber {
            rat: &ac + &(&Rational::from_integer(3) * &bd),
            coef_sqrt3: &ad + &bc,
        }
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber { rat: -&self.rat, coef_sqrt3: -&self.coef_sqrt3 }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt3", self.rat, self.coef_sqrt3)
    }
}

impl fmt::Debug for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QuadraticNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("cannot parse quadratic number from {s:?}"));
        let rest = s.trim().strip_suffix("*sqrt3").ok_or_else(bad)?;
        let (rat, coef) = rest.rsplit_once('+').ok_or_else(bad)?;
        Ok(Self { rat: rat.trim().parse()?, coef_sqrt3: coef.trim().parse()? })
    }
}

/// Exact value of cot(pi * alpha) for reduced denominators 2, 3, 4 and 6.
///
/// The argument is first reduced mod 1 (cot has period 1) and then folded
/// into (0, 1/2] with cot(pi(1-x)) = -cot(pi x). Other denominators report
/// `ExactUnavailable`, signalling the caller to fall back to the certified
/// numeric path.
pub fn cot_exact(alpha: &Rational) -> Result<QuadraticNumber> {
    if alpha.is_integer() {
        return Err(Error::PoleAtInteger(alpha.to_string()));
    }
    let frac = alpha.fract();
    let (folded, negate) = if &frac * &Rational::from_integer(2) > Rational::one() {
        (&Rational::one() - &frac, true)
    } else {
        (frac, false)
    };
    let value = match (small_denominator(&folded), folded.numerator().try_into()) {
        (Some(2), Ok(1i64)) => QuadraticNumber::zero(),
        (Some(4), Ok(1)) => QuadraticNumber::one(),
        (Some(3), Ok(1)) => QuadraticNumber::new(Rational::zero(), Rational::new(1, 3).unwrap()),
        (Some(6), Ok(1)) => QuadraticNumber::sqrt3(),
        _ => return Err(Error::ExactUnavailable(alpha.denominator().to_string())),
    };
    Ok(if negate { -&value } else { value })
}
