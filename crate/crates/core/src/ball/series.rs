use num_bigint::BigInt;

use crate::ball::{Ball, Precision};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::zeta::{bernoulli, factorial_big};

/// Enclosure of the bilateral sum `S_k(alpha) = sum_{n in Z} (n+alpha)^-k`.
///
/// The argument is reduced mod 1 and the two one-sided sums are evaluated
/// together: the head pairs the terms for `n` and `-n-1`, so for odd `k` at
/// half-integer arguments every pair cancels exactly and the midpoint is
/// exactly zero. Everything is accumulated in exact rationals; the only
/// rounding is the final conversion to a ball, and the tail correction
/// carries a proven remainder bound (see [`em_tail`]). Radius at most
/// `2^(2-P)`.
pub fn s_series_ball(k: u32, alpha: &Rational, prec: Precision) -> Result<Ball> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must exceed 1, got {k}")));
    }
    if alpha.is_integer() {
        return Err(Error::PoleAtInteger(alpha.to_string()));
    }
    let bits = prec.bits();
    let frac = alpha.fract();
    let (value, error) = bilateral_core(k, &frac, bits);
    Ok(Ball::from_rational_with_error(&value, &error, bits))
}

/// Enclosure of the polygamma value `psi_k(alpha)` for order `k >= 1` and
/// `alpha` in (0,1), from `psi_k(z) = (-1)^(k+1) k! * sum_{n>=0} (z+n)^-(k+1)`.
pub fn polygamma_ball(k: u32, alpha: &Rational, prec: Precision) -> Result<Ball> {
    if k == 0 {
        return Err(Error::UnsupportedOrder(0));
    }
    if alpha <= &Rational::zero() || alpha >= &Rational::one() {
        return Err(Error::OutOfDomain(format!(
            "polygamma argument {alpha} must lie strictly between 0 and 1"
        )));
    }
    let bits = prec.bits();
    let target = pow2_inverse(bits + 6);
    // a deliberately different head length than the bilateral path, so
    // cross-checks between the two do not cancel syntactically
    let head = head_length(bits, k + 1) + 17;
    let (value, error) = hurwitz_core(k + 1, alpha, head, &target);
    let factorial = Rational::from_integer(factorial_big(k));
    let signed = if k % 2 == 1 { factorial } else { -&factorial };
    Ok(Ball::from_rational_with_error(
        &(&value * &signed),
        &(&error * &signed.abs()),
        bits,
    ))
}

/// `S_k(a) = zeta(k, a) + (-1)^k zeta(k, 1-a)` for `a` in (0,1), as an
/// exact rational plus a rigorous error bound.
pub(crate) fn bilateral_core(k: u32, frac: &Rational, bits: u32) -> (Rational, Rational) {
    debug_assert!(frac > &Rational::zero() && frac < &Rational::one());
    let target = pow2_inverse(bits + 6);
    let half_target = target.checked_div(&Rational::from_integer(2)).expect("2 != 0");
    let complement = &Rational::one() - frac;
    let negate_mirror = k % 2 == 1;

    let mut head_len = head_length(bits, k);
    loop {
        let mut value = Rational::zero();
        for n in 0..head_len {
            let t1 = inverse_power(k, n, frac);
            let t2 = inverse_power(k, n, &complement);
            let pair = if negate_mirror { &t1 - &t2 } else { &t1 + &t2 };
            value = &value + &pair;
        }
        let xi1 = shifted_inverse(head_len, frac);
        let xi2 = shifted_inverse(head_len, &complement);
        let jmax = 4 * head_len;
        let (t1, t2) = (
            em_tail(k, &xi1, &half_target, jmax),
            em_tail(k, &xi2, &half_target, jmax),
        );
        if let (Some((v1, e1)), Some((v2, e2))) = (t1, t2) {
            let mirrored = if negate_mirror { -&v2 } else { v2 };
            return (&(&value + &v1) + &mirrored, &e1 + &e2);
        }
        head_len *= 2;
    }
}

/// One-sided `zeta(s, a) = sum_{n>=0} (n+a)^-s` for `s >= 2`, `a` in (0,1].
pub(crate) fn hurwitz_core(
    s: u32,
    a: &Rational,
    initial_head: u32,
    target: &Rational,
) -> (Rational, Rational) {
    let mut head_len = initial_head;
    loop {
        let mut value = Rational::zero();
        for n in 0..head_len {
            value = &value + &inverse_power(s, n, a);
        }
        let xi = shifted_inverse(head_len, a);
        if let Some((tail, err)) = em_tail(s, &xi, target, 4 * head_len) {
            return (&value + &tail, err);
        }
        head_len *= 2;
    }
}

/// `(n + a)^-s` exactly.
fn inverse_power(s: u32, n: u32, a: &Rational) -> Rational {
    let den = a.numerator() + a.denominator() * BigInt::from(n);
    Rational::new(a.denominator().pow(s), den.pow(s)).expect("n + a > 0")
}

/// `1/(N + a)` exactly.
fn shifted_inverse(n: u32, a: &Rational) -> Rational {
    let den = a.numerator() + a.denominator() * BigInt::from(n);
    Rational::new(a.denominator().clone(), den).expect("N + a > 0")
}

fn pow2_inverse(bits: u32) -> Rational {
    Rational::new(1, BigInt::from(1) << bits).expect("power of two")
}

fn head_length(bits: u32, s: u32) -> u32 {
    ((bits + 16) / 6).max(s).max(8)
}

/// Euler-Maclaurin value of the tail `sum_{n>=N} (n+a)^-s` with
/// `xi = 1/(N+a)`:
///
/// ```text
/// xi^(s-1)/(s-1) + xi^s/2 + sum_{j=1..J} B_2j/(2j)! (s)_(2j-1) xi^(s+2j-1)
/// ```
///
/// The error after `J` corrections is at most twice the first omitted
/// correction term: the dropped term itself plus the integral-form
/// remainder, which the bound `|periodic B_2J+2| <= |B_2J+2|` keeps below
/// the same magnitude. `J` grows until the bound meets `target`; returns
/// `None` (caller doubles `N`) if `jmax` corrections are not enough.
fn em_tail(s: u32, xi: &Rational, target: &Rational, jmax: u32) -> Option<(Rational, Rational)> {
    let xi2 = xi * xi;
    let xi_pow_sm1 = xi.pow(s as i32 - 1).expect("positive base");
    let xi_pow_s = &xi_pow_sm1 * xi;

    let integral = xi_pow_sm1
        .checked_div(&Rational::from_integer(s - 1))
        .expect("s > 1");
    let half = xi_pow_s
        .checked_div(&Rational::from_integer(2))
        .expect("2 != 0");
    let mut value = &integral + &half;

    // state for correction j: rising = (s)_(2j-1), fact = (2j)!,
    // xipow = xi^(s+2j-1)
    let mut rising = BigInt::from(s);
    let mut fact = BigInt::from(2);
    let mut xipow = &xi_pow_s * xi;
    for j in 1..=jmax {
        let scale = Rational::new(rising.clone(), fact.clone()).expect("factorial is nonzero");
        let correction = &(&bernoulli(2 * j) * &scale) * &xipow;
        let bound = &correction.abs() * &Rational::from_integer(2);
        if &bound <= target {
            return Some((value, bound));
        }
        value = &value + &correction;
        rising *= BigInt::from(s + 2 * j - 1) * BigInt::from(s + 2 * j);
        fact *= BigInt::from(2 * j + 1) * BigInt::from(2 * j + 2);
        xipow = &xipow * &xi2;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ball::pi::pi_ball_at;
    use crate::exact::rat;

    fn p(bits: u32) -> Precision {
        Precision::new(bits).unwrap()
    }

    fn radius_cap(bits: u32) -> Rational {
        Rational::new(4, BigInt::from(1) << bits).unwrap() // 2^(2-P)
    }

    #[test]
    fn odd_k_half_integer_is_exactly_zero() {
        let b = s_series_ball(3, &rat(1, 2), p(128)).unwrap();
        assert_eq!(b.midpoint_rational(), Rational::zero());
        assert!(b.contains_zero());
        assert!(b.radius_rational() <= radius_cap(128));
        // periodic copies stay null
        let shifted = s_series_ball(3, &rat(5, 2), p(128)).unwrap();
        assert_eq!(shifted.midpoint_rational(), Rational::zero());
    }

    #[test]
    fn even_k_half_integer_matches_pi_squared() {
        let b = s_series_ball(2, &rat(1, 2), p(128)).unwrap();
        let pi2 = pi_ball_at(128).powi(2);
        assert!(b.overlaps(&pi2));
        assert!(b.radius_rational() <= radius_cap(128));
    }

    #[test]
    fn series_is_periodic() {
        for (k, a) in [(2u32, rat(1, 3)), (3, rat(1, 4)), (5, rat(2, 7))] {
            let base = s_series_ball(k, &a, p(96)).unwrap();
            let shifted = s_series_ball(k, &(&a + &Rational::one()), p(96)).unwrap();
            assert_eq!(base, shifted, "reduction mod 1 is exact");
            let negative = s_series_ball(k, &(&a - &Rational::from_integer(2)), p(96)).unwrap();
            assert_eq!(base, negative);
        }
    }

    #[test]
    fn even_series_are_positive() {
        for a in [rat(1, 10), rat(1, 3), rat(1, 2), rat(7, 10), rat(11, 12)] {
            for k in [2u32, 4, 6] {
                let b = s_series_ball(k, &a, p(64)).unwrap();
                assert!(b.is_strictly_positive(), "S_{k}({a}) should be positive");
            }
        }
    }

    #[test]
    fn odd_series_strictly_decrease() {
        let grid: Vec<Rational> = (1..=9).map(|j| rat(j, 10)).collect();
        for k in [3u32, 5] {
            for pair in grid.windows(2) {
                let left = s_series_ball(k, &pair[0], p(64)).unwrap();
                let right = s_series_ball(k, &pair[1], p(64)).unwrap();
                assert!(
                    left.strictly_greater_than(&right),
                    "S_{k} should decrease between {} and {}",
                    pair[0],
                    pair[1]
                );
            }
        }
    }

    #[test]
    fn higher_precision_nests_within_lower() {
        for (k, a) in [(2u32, rat(1, 3)), (3, rat(1, 5)), (4, rat(3, 8))] {
            let coarse = s_series_ball(k, &a, p(64)).unwrap();
            let fine = s_series_ball(k, &a, p(160)).unwrap();
            assert!(coarse.overlaps(&fine));
            assert!(fine.radius_rational() < coarse.radius_rational());
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(matches!(
            s_series_ball(3, &rat(4, 1), p(64)),
            Err(Error::PoleAtInteger(_))
        ));
        assert!(matches!(
            s_series_ball(1, &rat(1, 2), p(64)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn trigamma_at_one_half() {
        // psi_1(1/2) = pi^2 / 2
        let b = polygamma_ball(1, &rat(1, 2), p(128)).unwrap();
        let expected = pi_ball_at(128).powi(2).mul_rational(&rat(1, 2));
        assert!(b.overlaps(&expected));
    }

    #[test]
    fn polygamma_rejects_bad_arguments() {
        assert!(matches!(
            polygamma_ball(0, &rat(1, 2), p(64)),
            Err(Error::UnsupportedOrder(0))
        ));
        assert!(matches!(
            polygamma_ball(1, &rat(3, 2), p(64)),
            Err(Error::OutOfDomain(_))
        ));
        assert!(matches!(
            polygamma_ball(1, &rat(-1, 2), p(64)),
            Err(Error::OutOfDomain(_))
        ));
    }

    #[test]
    fn reflection_combination_reproduces_the_bilateral_sum() {
        // [psi_1(2/3) + psi_1(1/3)] / 1! = S_2(1/3)
        let lhs = polygamma_ball(1, &rat(2, 3), p(128))
            .unwrap()
            .add(&polygamma_ball(1, &rat(1, 3), p(128)).unwrap());
        let rhs = s_series_ball(2, &rat(1, 3), p(128)).unwrap();
        assert!(lhs.overlaps(&rhs));
    }
}
