//! Certified high-precision real arithmetic.
//!
//! A [`Ball`] stores a midpoint and an error radius as integers scaled by
//! `2^-bits` (binary fixed point). The represented exact value always lies
//! in `[mid - rad, mid + rad]`, and every primitive rounds the midpoint to
//! nearest while rounding the radius up, adding at most one unit in the
//! last place. No platform floats are involved anywhere, so results are
//! bit-identical across runs and machines.

mod pi;
mod series;
mod trig;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::Rational;

pub use pi::{pi_ball, sqrt3_ball};
pub use series::{polygamma_ball, s_series_ball};
pub use trig::cot_pi_ball;

/// Working precision in bits; at least 64.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Precision {
    bits: u32,
}

impl Precision {
    pub const MIN_BITS: u32 = 64;

    pub fn new(bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::InvalidPrecision(bits));
        }
        Ok(Self { bits })
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn double(self) -> Self {
        Self { bits: self.bits * 2 }
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self { bits: 128 }
    }
}

/// Midpoint-radius enclosure of a real number at a fixed binary scale.
#[derive(Clone, PartialEq, Eq)]
pub struct Ball {
    mid: BigInt,
    rad: BigInt, // non-negative
    bits: u32,
}

/// `floor((a + b/2) / b)` for `b > 0`: round to nearest, half towards
/// positive infinity. Error at most 1/2.
fn div_round_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(b.is_positive());
    (a * 2u8 + b).div_floor(&(b * 2u8))
}

fn div_ceil_nonneg(a: &BigInt, b: &BigInt) -> BigInt {
    debug_assert!(!a.is_negative() && b.is_positive());
    (a + (b - 1u8)).div_floor(b)
}

fn shr_round_nearest(x: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return x.clone();
    }
    (x + (BigInt::from(1) << (s - 1))).div_floor(&(BigInt::from(1) << s))
}

fn shr_ceil_nonneg(x: &BigInt, s: u32) -> BigInt {
    debug_assert!(!x.is_negative());
    let floor = x >> s;
    if x == &(&floor << s) {
        floor
    } else {
        floor + 1u8
    }
}

impl Ball {
    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.bits, other.bits, "mixed-precision ball arithmetic");
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub(crate) fn raw(mid: BigInt, rad: BigInt, bits: u32) -> Self {
        debug_assert!(!rad.is_negative());
        Self { mid, rad, bits }
    }

    pub fn exact_integer<N: Into<BigInt>>(n: N, prec: Precision) -> Self {
        Self::exact_integer_at(n, prec.bits())
    }

    pub(crate) fn exact_integer_at<N: Into<BigInt>>(n: N, bits: u32) -> Self {
        Self { mid: n.into() << bits, rad: BigInt::zero(), bits }
    }

    pub fn from_rational(x: &Rational, prec: Precision) -> Self {
        Self::from_rational_at(x, prec.bits())
    }

    pub(crate) fn from_rational_at(x: &Rational, bits: u32) -> Self {
        let num = x.numerator() << bits;
        let den = x.denominator();
        let (q, r) = num.div_mod_floor(den);
        if r.is_zero() {
            Self { mid: q, rad: BigInt::zero(), bits }
        } else {
            Self { mid: div_round_nearest(&num, den), rad: BigInt::from(1), bits }
        }
    }

    /// Ball from an exact rational value and an upper bound on its error.
    pub(crate) fn from_rational_with_error(value: &Rational, error: &Rational, bits: u32) -> Self {
        debug_assert!(error >= &Rational::zero());
        let mid = div_round_nearest(&(value.numerator() << bits), value.denominator());
        let rad = div_ceil_nonneg(&(error.numerator() << bits), error.denominator()) + 1u8;
        Self { mid, rad, bits }
    }

    pub fn midpoint_rational(&self) -> Rational {
        Rational::new(self.mid.clone(), BigInt::from(1) << self.bits).expect("power of two")
    }

    pub fn radius_rational(&self) -> Rational {
        Rational::new(self.rad.clone(), BigInt::from(1) << self.bits).expect("power of two")
    }

    pub fn lower_bound(&self) -> Rational {
        Rational::new(&self.mid - &self.rad, BigInt::from(1) << self.bits).expect("power of two")
    }

    pub fn upper_bound(&self) -> Rational {
        Rational::new(&self.mid + &self.rad, BigInt::from(1) << self.bits).expect("power of two")
    }

    /// Upper bound on |value| as an exact rational.
    pub fn abs_upper(&self) -> Rational {
        Rational::new(self.mid.abs() + &self.rad, BigInt::from(1) << self.bits)
            .expect("power of two")
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        Self {
            mid: &self.mid + &other.mid,
            rad: &self.rad + &other.rad,
            bits: self.bits,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_compatible(other);
        Self {
            mid: &self.mid - &other.mid,
            rad: &self.rad + &other.rad,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Self {
        Self { mid: -&self.mid, rad: self.rad.clone(), bits: self.bits }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let mid = shr_round_nearest(&(&self.mid * &other.mid), self.bits);
        let spread =
            self.mid.abs() * &other.rad + other.mid.abs() * &self.rad + &self.rad * &other.rad;
        let rad = shr_ceil_nonneg(&spread, self.bits) + 1u8;
        Self { mid, rad, bits: self.bits }
    }

    pub fn mul_rational(&self, x: &Rational) -> Self {
        let p = x.numerator();
        let q = x.denominator();
        let mid = div_round_nearest(&(&self.mid * p), q);
        let rad = div_ceil_nonneg(&(&self.rad * p.abs()), q) + 1u8;
        Self { mid, rad, bits: self.bits }
    }

    pub fn add_rational(&self, x: &Rational) -> Self {
        self.add(&Self::from_rational_at(x, self.bits))
    }

    /// Division; errors when the divisor's ball straddles zero.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other);
        let d_abs = other.mid.abs();
        if d_abs <= other.rad {
            return Err(Error::InsufficientPrecision { bits: self.bits });
        }
        let num = &self.mid << self.bits;
        let mid = if other.mid.is_negative() {
            div_round_nearest(&-num, &d_abs)
        } else {
            div_round_nearest(&num, &d_abs)
        };
        // |x/y - m1/m2| <= (r1 |m2| + r2 |m1|) / (|m2| (|m2| - r2))
        let num = (&self.rad * &d_abs + &other.rad * self.mid.abs()) << self.bits;
        let den = &d_abs * (&d_abs - &other.rad);
        let rad = div_ceil_nonneg(&num, &den) + 1u8;
        Ok(Self { mid, rad, bits: self.bits })
    }

    pub fn powi(&self, exp: u32) -> Self {
        let mut result = Self::exact_integer_at(1, self.bits);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Rescale to a different precision. Narrowing rounds the midpoint to
    /// nearest and the radius up; widening is exact.
    pub fn round_to(&self, prec: Precision) -> Self {
        self.round_to_bits(prec.bits())
    }

    pub(crate) fn round_to_bits(&self, bits: u32) -> Self {
        if bits == self.bits {
            self.clone()
        } else if bits < self.bits {
            let s = self.bits - bits;
            Self {
                mid: shr_round_nearest(&self.mid, s),
                rad: shr_ceil_nonneg(&self.rad, s) + 1u8,
                bits,
            }
        } else {
            let s = bits - self.bits;
            Self { mid: &self.mid << s, rad: &self.rad << s, bits }
        }
    }

    /// Widen the radius by an exact rational bound (rounded up).
    pub(crate) fn inflate(&self, error: &Rational) -> Self {
        debug_assert!(error >= &Rational::zero());
        let extra = div_ceil_nonneg(&(error.numerator() << self.bits), error.denominator());
        Self { mid: self.mid.clone(), rad: &self.rad + extra, bits: self.bits }
    }

    pub fn contains_zero(&self) -> bool {
        self.mid.abs() <= self.rad
    }

    pub fn excludes_zero(&self) -> bool {
        !self.contains_zero()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.mid.is_positive() && self.mid.abs() > self.rad
    }

    pub fn is_strictly_negative(&self) -> bool {
        self.mid.is_negative() && self.mid.abs() > self.rad
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        // |mid/2^bits - p/q| <= rad/2^bits  <=>  |mid q - p 2^bits| <= rad q
        let p = x.numerator();
        let q = x.denominator();
        (&self.mid * q - (p << self.bits)).abs() <= &self.rad * q
    }

    /// True when the two enclosures intersect (they may be at different
    /// precisions).
    pub fn overlaps(&self, other: &Self) -> bool {
        let lhs = (&self.mid << other.bits) - (&other.mid << self.bits);
        let rhs = (&self.rad << other.bits) + (&other.rad << self.bits);
        lhs.abs() <= rhs
    }

    /// Entirely to the right of `other`, with no overlap.
    pub fn strictly_greater_than(&self, other: &Self) -> bool {
        let lhs = (&self.mid << other.bits) - (&other.mid << self.bits);
        let rhs = (&self.rad << other.bits) + (&other.rad << self.bits);
        lhs > rhs
    }

    /// Smallest integer `e` available as a bound `radius <= 2^e`.
    pub fn radius_log2_upper(&self) -> i64 {
        if self.rad.is_zero() {
            // an exact ball; any finite bound is valid
            -(self.bits as i64) - 64
        } else {
            self.rad.bits() as i64 - self.bits as i64
        }
    }

    /// Exact decimal rendering of the midpoint (the scale is a power of
    /// two, so the expansion terminates). Trailing zeros are trimmed.
    pub fn midpoint_decimal(&self) -> String {
        let negative = self.mid.is_negative();
        let scaled = self.mid.abs() * BigInt::from(5).pow(self.bits);
        let mut digits = scaled.to_string();
        let frac_len = self.bits as usize;
        if digits.len() <= frac_len {
            digits = format!("{}{}", "0".repeat(frac_len - digits.len() + 1), digits);
        }
        let split = digits.len() - frac_len;
        let (int_part, frac_part) = digits.split_at(split);
        let frac_part = frac_part.trim_end_matches('0');
        let body = if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        };
        if negative && body != "0" {
            format!("-{body}")
        } else {
            body
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "midpoint": self.midpoint_decimal(),
            "radius_log2": self.radius_log2_upper(),
        })
    }
}

impl fmt::Debug for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Ball({} +- 2^{} @{} bits)",
            self.midpoint_decimal(),
            self.radius_log2_upper(),
            self.bits
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn p(bits: u32) -> Precision {
        Precision::new(bits).unwrap()
    }

    #[test]
    fn precision_floor_is_enforced() {
        assert!(Precision::new(63).is_err());
        assert!(Precision::new(64).is_ok());
    }

    #[test]
    fn dyadic_rationals_are_exact() {
        let b = Ball::from_rational(&rat(3, 8), p(64));
        assert_eq!(b.radius_rational(), Rational::zero());
        assert_eq!(b.midpoint_rational(), rat(3, 8));
        assert_eq!(b.midpoint_decimal(), "0.375");
    }

    #[test]
    fn non_dyadic_rationals_round_within_one_ulp() {
        let b = Ball::from_rational(&rat(1, 3), p(64));
        assert!(b.contains_rational(&rat(1, 3)));
        assert_eq!(b.radius_rational(), Rational::new(1, BigInt::from(1) << 64).unwrap());
    }

    #[test]
    fn arithmetic_preserves_containment() {
        let x = Ball::from_rational(&rat(1, 3), p(64));
        let y = Ball::from_rational(&rat(2, 7), p(64));
        assert!(x.add(&y).contains_rational(&rat(13, 21)));
        assert!(x.sub(&y).contains_rational(&rat(1, 21)));
        assert!(x.mul(&y).contains_rational(&rat(2, 21)));
        assert!(x.div(&y).unwrap().contains_rational(&rat(7, 6)));
        assert!(x.mul_rational(&rat(-3, 5)).contains_rational(&rat(-1, 5)));
        assert!(x.powi(3).contains_rational(&rat(1, 27)));
    }

    #[test]
    fn division_by_straddling_ball_fails() {
        let x = Ball::exact_integer(1, p(64));
        let tiny = Ball::from_rational_with_error(
            &Rational::zero(),
            &rat(1, 1024),
            64,
        );
        assert!(x.div(&tiny).is_err());
    }

    #[test]
    fn sign_predicates() {
        let pos = Ball::from_rational(&rat(1, 3), p(64));
        assert!(pos.is_strictly_positive() && pos.excludes_zero());
        let neg = pos.neg();
        assert!(neg.is_strictly_negative());
        let origin = Ball::from_rational_with_error(&Rational::zero(), &rat(1, 100), 64);
        assert!(origin.contains_zero() && !origin.is_strictly_positive());
    }

    #[test]
    fn rounding_to_lower_precision_keeps_the_value() {
        let x = Ball::from_rational(&rat(22, 7), p(192));
        let y = x.round_to(p(64));
        assert!(y.contains_rational(&rat(22, 7)));
        assert!(y.overlaps(&x));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(Ball::exact_integer(-5, p(64)).midpoint_decimal(), "-5");
        assert_eq!(Ball::exact_integer(0, p(64)).midpoint_decimal(), "0");
        assert_eq!(Ball::from_rational(&rat(-1, 2), p(64)).midpoint_decimal(), "-0.5");
    }

    #[test]
    fn radius_bound_is_sound() {
        let b = Ball::from_rational(&rat(1, 3), p(64));
        let bound = b.radius_log2_upper();
        let two_pow = if bound < 0 {
            Rational::new(1, BigInt::from(1) << (-bound) as u32).unwrap()
        } else {
            Rational::from_integer(BigInt::from(1) << bound as u32)
        };
        assert!(b.radius_rational() <= two_pow);
    }

    #[test]
    fn json_shape() {
        let b = Ball::from_rational(&rat(1, 2), p(64));
        let v = b.to_json();
        assert_eq!(v["midpoint"], "0.5");
        assert!(v["radius_log2"].is_i64());
    }
}
