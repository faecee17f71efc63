use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::Rational;

static B_CACHE: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Exact Bernoulli number `B_n` with the `B_1 = -1/2` convention, from the
/// recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0`. Memoized; the cache only
/// extends, so results are identical with or without it.
pub fn bernoulli(n: u32) -> Rational {
    let n = n as usize;
    let mut cache = B_CACHE.lock().expect("Bernoulli cache poisoned");
    if cache.is_empty() {
        cache.push(Rational::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        // odd Bernoulli numbers beyond B_1 vanish; skip the summation
        if m > 1 && m % 2 == 1 {
            cache.push(Rational::zero());
            continue;
        }
        // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
        let mut sum = Rational::zero();
        let mut binom = BigInt::one(); // C(m+1, 0)
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                sum = &sum + &(&Rational::from_integer(binom.clone()) * b);
            }
            // C(m+1, j+1) = C(m+1, j) * (m+1-j) / (j+1)
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        let b_m = sum.checked_div(&Rational::from_integer(-BigInt::from(m + 1)));
        cache.push(b_m.expect("m+1 is nonzero"));
    }
    cache[n].clone()
}

/// Exact factorial as a big integer.
pub(crate) fn factorial_big(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}
