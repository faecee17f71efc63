use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ball::{Ball, Precision};

const GUARD_BITS: u32 = 32;

static PI_CACHE: Mutex<Option<HashMap<u32, Ball>>> = Mutex::new(None);

/// Enclosure of pi via Machin's formula
/// `pi = 16 arctan(1/5) - 4 arctan(1/239)`,
/// with the alternating-series remainder as the tail bound. Deterministic:
/// equal precisions give bit-identical balls. Radius at most `2^(4-P)`
/// (in practice around two units in the last place).
pub fn pi_ball(prec: Precision) -> Ball {
    pi_ball_at(prec.bits())
}

pub(crate) fn pi_ball_at(bits: u32) -> Ball {
    let mut cache = PI_CACHE.lock().expect("pi cache poisoned");
    let map = cache.get_or_insert_with(HashMap::new);
    if let Some(ball) = map.get(&bits) {
        return ball.clone();
    }
    let ball = compute_pi(bits);
    map.insert(bits, ball.clone());
    ball
}

fn compute_pi(bits: u32) -> Ball {
    let work = bits + GUARD_BITS;
    let (a5, e5) = arctan_inv(5, work);
    let (a239, e239) = arctan_inv(239, work);
    let mid = a5 * 16 - a239 * 4;
    let rad = e5 * 16 + e239 * 4;
    Ball::raw(mid, rad, work).round_to_bits(bits)
}

/// `arctan(1/x)` as a scaled integer at `2^-bits`, together with an error
/// bound in units of the last place.
///
/// The iterated floor divisions undershoot the true power of `1/x` by less
/// than `x^2/(x^2-1) <= 25/24`, so each emitted term is within 2.05 units
/// of the true series term, and the alternating tail after the loop stops
/// (first zero floor) is below 2.05 units as well: `3 (j+1)` units cover
/// everything.
fn arctan_inv(x: i64, bits: u32) -> (BigInt, BigInt) {
    debug_assert!(x >= 5);
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = (BigInt::from(1) << bits) / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut j = 0u32;
    loop {
        let term = &power / BigInt::from(2 * j + 1);
        if term.is_zero() {
            break;
        }
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        j += 1;
    }
    (sum, BigInt::from(3) * BigInt::from(j + 1))
}

/// Enclosure of sqrt(3) from the exact integer square root of `3 * 2^(2P)`:
/// the floor root `r` satisfies `r <= sqrt(3) 2^P < r + 1`.
pub fn sqrt3_ball(prec: Precision) -> Ball {
    sqrt3_ball_at(prec.bits())
}

pub(crate) fn sqrt3_ball_at(bits: u32) -> Ball {
    let root = (BigInt::from(3) << (2 * bits)).sqrt();
    Ball::raw(root, BigInt::from(1), bits)
}
