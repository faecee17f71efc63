use num_bigint::BigInt;

use crate::ball::pi::pi_ball_at;
use crate::ball::{Ball, Precision};
use crate::error::{Error, Result};
use crate::exact::Rational;

const GUARD_BITS: u32 = 32;

/// Enclosure of `cot(pi * alpha)` for non-integer rational `alpha`.
///
/// The argument is reduced mod 1 exactly and folded into `(0, 1/2]` with
/// `cot(pi(1-x)) = -cot(pi x)`, so the Taylor argument never exceeds
/// `pi/2`. Sine and cosine come from their Taylor series with the Lagrange
/// remainder (every derivative is bounded by 1) added to the radius, and
/// the quotient uses certified ball division.
pub fn cot_pi_ball(alpha: &Rational, prec: Precision) -> Result<Ball> {
    cot_pi_ball_at(alpha, prec.bits())
}

pub(crate) fn cot_pi_ball_at(alpha: &Rational, bits: u32) -> Result<Ball> {
    if alpha.is_integer() {
        return Err(Error::PoleAtInteger(alpha.to_string()));
    }
    let frac = alpha.fract();
    let half = Rational::new(1, 2).expect("2 != 0");
    let (folded, negate) = if frac > half {
        (&Rational::one() - &frac, true)
    } else {
        (frac, false)
    };

    let work = bits + GUARD_BITS;
    let x = pi_ball_at(work).mul_rational(&folded);
    let (sin, cos) = sin_cos(&x, work);
    let cot = cos.div(&sin)?;
    let cot = if negate { cot.neg() } else { cot };
    Ok(cot.round_to_bits(bits))
}

/// Taylor evaluation of sine and cosine for `|x| <= pi/2`, each with the
/// unevaluated tail `|x|^(d+2) / (d+2)!` added to the radius once terms
/// through degree `d` are included.
fn sin_cos(x: &Ball, bits: u32) -> (Ball, Ball) {
    let target = Rational::new(1, BigInt::from(1) << (bits + 8)).expect("power of two");
    let x_hi = x.abs_upper();
    let x2 = x.mul(x);
    let x_hi2 = &x_hi * &x_hi;

    let sin = taylor_sum(x.clone(), 1, &x2, &x_hi, &x_hi2, &target);
    let cos = taylor_sum(Ball::exact_integer_at(1, x.bits()), 0, &x2, &x_hi, &x_hi2, &target);
    (sin, cos)
}

fn taylor_sum(
    first_term: Ball,
    first_degree: u64,
    x2: &Ball,
    x_hi: &Rational,
    x_hi2: &Rational,
    target: &Rational,
) -> Ball {
    let mut acc = first_term.clone();
    let mut term = first_term;
    let mut degree = first_degree;
    // Lagrange bound after including the degree-d term: |x|^(d+2)/(d+2)!
    let mut bound = x_hi.pow((first_degree + 2) as i32).expect("positive base");
    for d in 1..=first_degree + 2 {
        bound = bound
            .checked_div(&Rational::from_integer(d))
            .expect("nonzero factorial step");
    }
    loop {
        if &bound <= target {
            return acc.inflate(&bound);
        }
        let d1 = degree + 1;
        let d2 = degree + 2;
        let scale = Rational::new(-1, BigInt::from(d1) * BigInt::from(d2)).expect("nonzero");
        term = term.mul(x2).mul_rational(&scale);
        acc = acc.add(&term);
        degree += 2;
        bound = (&bound * x_hi2)
            .checked_div(&Rational::from_integer(BigInt::from(degree + 1) * BigInt::from(degree + 2)))
            .expect("nonzero");
    }
}
