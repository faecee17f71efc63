//! Exact arbitrary-precision arithmetic: rationals, the quadratic field
//! Q(sqrt 3), dense integer polynomials, and the exact cotangent table at
//! rational multiples of pi with denominator 2, 3, 4 or 6.
//!
//! Everything here is immutable after construction and every operation is
//! pure, so values can be shared freely between threads.

mod poly;
mod quadratic;
mod rational;

pub use poly::IntPolynomial;
pub use quadratic::{cot_exact, QuadraticNumber};
pub use rational::{rat, Rational};
