//! Cotangent derivative polynomials.
//!
//! With `t = cot(pi z)` one has `dt/dz = -pi (1 + t^2)`, so the m-th
//! derivative of `pi cot(pi z)` is `pi^(m+1) * Q_m(cot(pi z))` for the
//! integer polynomials
//!
//! ```text
//! Q_0(t) = t,        Q_{m+1}(t) = -(1 + t^2) * Q_m'(t).
//! ```
//!
//! They turn the bilateral sum into a closed form: for `k > 1`,
//! `S_k(z) = (-1)^(k-1) / (k-1)! * Q_{k-1}(cot(pi z)) * pi^k`.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::error::Result;
use crate::exact::{cot_exact, IntPolynomial, QuadraticNumber, Rational};

/// An exact value `coefficient * pi^pi_power`, the shape every nonzero
/// `S_k` takes at the supported denominators. A zero coefficient represents
/// the exact value 0 regardless of the recorded power.
#[derive(Clone, PartialEq, Eq)]
pub struct PiMultiple {
    pub coefficient: QuadraticNumber,
    pub pi_power: u32,
}

impl PiMultiple {
    pub fn new(coefficient: QuadraticNumber, pi_power: u32) -> Self {
        Self { coefficient, pi_power }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coefficient": self.coefficient.to_string(),
            "pi_power": self.pi_power,
        })
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*pi^{}", self.coefficient, self.pi_power)
    }
}

impl fmt::Debug for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

static Q_CACHE: Mutex<Vec<IntPolynomial>> = Mutex::new(Vec::new());

/// The polynomial `Q_m`, built by the recurrence above and memoized.
/// Coefficients are exact; the cache only ever extends, so the observable
/// result is identical with or without it.
pub fn q_polynomial(m: u32) -> IntPolynomial {
    let m = m as usize;
    let mut cache = Q_CACHE.lock().expect("Q_m cache poisoned");
    if cache.is_empty() {
        cache.push(IntPolynomial::from_i64(&[0, 1])); // Q_0 = t
    }
    while cache.len() <= m {
        let next = apply_recurrence(cache.last().expect("cache is non-empty"));
        cache.push(next);
    }
    cache[m].clone()
}

fn apply_recurrence(q: &IntPolynomial) -> IntPolynomial {
    let one_plus_t2 = IntPolynomial::from_i64(&[1, 0, 1]);
    one_plus_t2.mul(&q.derivative()).neg()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Exact coefficient `c` with `S_k(z) = c * pi^k` when `t = cot(pi z)`:
/// `c = (-1)^(k-1) * Q_{k-1}(t) / (k-1)!`. The division is by a rational
/// scalar, so `c` need not be an integer (e.g. `1/3` for `k = 4, t = 0`).
pub fn s_coefficient(k: u32, t: &QuadraticNumber) -> QuadraticNumber {
    assert!(k > 1, "the series only converges for k > 1");
    let value = q_polynomial(k - 1).eval_quadratic(t);
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let scalar = Rational::new(sign, factorial(k - 1)).expect("factorial is nonzero");
    value.scale(&scalar)
}

/// Exact value of `S_k(alpha)` as a [`PiMultiple`], available when the
/// reduced denominator of `alpha` is 2, 3, 4 or 6.
pub fn s_exact(k: u32, alpha: &Rational) -> Result<PiMultiple> {
    let t = cot_exact(alpha)?;
    Ok(PiMultiple::new(s_coefficient(k, &t), k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::rat;
    use num_traits::Signed;

    #[test]
    fn first_polynomials() {
        assert_eq!(q_polynomial(0), IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(q_polynomial(1), IntPolynomial::from_i64(&[-1, 0, -1]));
        assert_eq!(q_polynomial(2), IntPolynomial::from_i64(&[0, 2, 0, 2]));
        assert_eq!(q_polynomial(3), IntPolynomial::from_i64(&[-2, 0, -8, 0, -6]));
    }

    #[test]
    fn parity_of_coefficients() {
        // Q_m(-t) = (-1)^(m+1) Q_m(t): even m keeps only odd powers,
        // odd m only even powers.
        for m in 0..=20u32 {
            let q = q_polynomial(m);
            for (i, c) in q.coefficients().iter().enumerate() {
                let wrong_parity = (i % 2) == (m as usize % 2);
                assert!(
                    !wrong_parity || c == &BigInt::from(0),
                    "Q_{m} has a coefficient {c} at t^{i}"
                );
            }
        }
    }

    #[test]
    fn degree_and_leading_coefficient() {
        for m in 0..=20u32 {
            let q = q_polynomial(m);
            assert_eq!(q.degree(), Some(m as usize + 1), "deg Q_{m}");
            let expected = if m % 2 == 0 { factorial(m) } else { -factorial(m) };
            assert_eq!(q.leading_coefficient(), expected, "lead Q_{m}");
        }
    }

    #[test]
    fn odd_polynomials_are_negative_everywhere_sampled() {
        let samples = [
            rat(0, 1),
            rat(1, 2),
            rat(-1, 2),
            rat(1, 1),
            rat(-1, 1),
            rat(3, 2),
            rat(-7, 3),
            rat(5, 1),
            rat(22, 7),
        ];
        for m in [1u32, 3, 5, 7, 9, 11] {
            let q = q_polynomial(m);
            for t in &samples {
                assert!(q.eval_rational(t).numerator().is_negative(), "Q_{m}({t}) >= 0");
            }
        }
    }

    #[test]
    fn recurrence_is_the_derivative_identity() {
        // Q_{2m+1} = -(1+t^2) Q_{2m}', the polynomial form of
        // d/dz S_{2m+1} = -(2m+1) S_{2m+2}.
        for m in 0..=8u32 {
            let lhs = q_polynomial(2 * m + 1);
            let rhs = apply_recurrence(&q_polynomial(2 * m));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn coefficient_examples() {
        let zero = QuadraticNumber::zero();
        let one = QuadraticNumber::one();
        assert_eq!(s_coefficient(2, &zero), QuadraticNumber::one());
        assert_eq!(s_coefficient(3, &zero), QuadraticNumber::zero());
        assert_eq!(
            s_coefficient(4, &zero),
            QuadraticNumber::from_rational(rat(1, 3))
        );
        assert_eq!(s_coefficient(3, &one), QuadraticNumber::from_integer(2));
    }

    #[test]
    fn exact_series_values() {
        // S_3(1/2) = 0
        assert!(s_exact(3, &rat(1, 2)).unwrap().is_zero());
        // S_2(1/3) = (4/3) pi^2
        assert_eq!(
            s_exact(2, &rat(1, 3)).unwrap().coefficient,
            QuadraticNumber::from_rational(rat(4, 3))
        );
        // S_3(1/6) = 4 sqrt3 pi^3
        assert_eq!(
            s_exact(3, &rat(1, 6)).unwrap().coefficient,
            QuadraticNumber::new(rat(0, 1), rat(4, 1))
        );
        // S_5(7/2) = 0: the null value repeats with period 1
        assert!(s_exact(5, &rat(7, 2)).unwrap().is_zero());
    }

    #[test]
    fn exact_series_periodicity() {
        for a in [rat(1, 2), rat(1, 3), rat(1, 4), rat(5, 6)] {
            for k in 2..=7u32 {
                let base = s_exact(k, &a).unwrap();
                let shifted = s_exact(k, &(&a + &Rational::one())).unwrap();
                assert_eq!(base, shifted);
            }
        }
    }

    #[test]
    fn exact_series_error_paths() {
        assert!(matches!(s_exact(3, &rat(2, 1)), Err(Error::PoleAtInteger(_))));
        assert!(matches!(s_exact(3, &rat(1, 5)), Err(Error::ExactUnavailable(_))));
    }

    #[test]
    fn null_exactly_when_k_odd_and_alpha_half_integer() {
        let supported = [
            rat(1, 2),
            rat(1, 3),
            rat(2, 3),
            rat(1, 4),
            rat(3, 4),
            rat(1, 6),
            rat(5, 6),
        ];
        for k in 2..=20u32 {
            for a in &supported {
                let exact = s_exact(k, a).unwrap();
                let should_be_null = k % 2 == 1 && a.is_half_integer();
                assert_eq!(exact.is_zero(), should_be_null, "k={k}, alpha={a}");
            }
        }
    }

    #[test]
    fn pi_multiple_serialization() {
        let pm = s_exact(3, &rat(1, 6)).unwrap();
        assert_eq!(
            pm.to_json(),
            json!({"coefficient": "0 + 4*sqrt3", "pi_power": 3})
        );
    }
}
