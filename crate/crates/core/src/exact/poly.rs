use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::quadratic::QuadraticNumber;
use crate::exact::rational::Rational;

/// Dense integer-coefficient polynomial in one variable `t`; the entry at
/// index `i` is the coefficient of `t^i`. The highest-index coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coefficients: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn coefficient(&self, degree: usize) -> BigInt {
        self.coefficients.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> BigInt {
        self.coefficients.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn derivative(&self) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::new(coefficients)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + rhs.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in rhs.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn neg(&self) -> Self {
        Self { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }

    pub fn eval_rational(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coefficients.iter().rev() {
            acc = &(&acc * t) + &Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_quadratic(&self, t: &QuadraticNumber) -> QuadraticNumber {
        let mut acc = QuadraticNumber::zero();
        for c in self.coefficients.iter().rev() {
            acc = &(&acc * t) + &QuadraticNumber::from_integer(c.clone());
        }
        acc
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.leading_coefficient(), BigInt::from(2));
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
    }

    #[test]
    fn derivative_and_product() {
        // d/dt (1 + 2t + 3t^2) = 2 + 6t
        let p = IntPolynomial::from_i64(&[1, 2, 3]);
        assert_eq!(p.derivative(), IntPolynomial::from_i64(&[2, 6]));
        // (1 + t)(1 - t) = 1 - t^2
        let a = IntPolynomial::from_i64(&[1, 1]);
        let b = IntPolynomial::from_i64(&[1, -1]);
        assert_eq!(a.mul(&b), IntPolynomial::from_i64(&[1, 0, -1]));
    }

    #[test]
    fn evaluation() {
        let p = IntPolynomial::from_i64(&[-1, 0, 2]); // 2t^2 - 1
        assert_eq!(p.eval_rational(&rat(1, 2)), rat(-1, 2));
        let s = QuadraticNumber::sqrt3();
        assert_eq!(p.eval_quadratic(&s), QuadraticNumber::from_integer(5));
    }
}
