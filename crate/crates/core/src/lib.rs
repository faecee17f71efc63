//! Certified evaluation and verification of the bilateral series
//! `S_k(a) = sum over all integers n of 1/(n+a)^k`, for integer `k > 1`
//! and rational non-integer `a`.
//!
//! The crate computes each value twice and checks the two routes against
//! one another:
//!
//! - **exactly**, as an algebraic multiple `c * pi^k` with `c` in Q(sqrt 3)
//!   whenever the reduced denominator of `a` is 2, 3, 4 or 6, through the
//!   cotangent-derivative polynomials of [`cotpoly`];
//! - **numerically**, as a midpoint-radius ball with a proven enclosure of
//!   the truncation and rounding error, through [`ball`].
//!
//! On top of the two evaluators sit [`theorems`] (the null/non-null
//! classifier, per-value certificates, grid scans, the polygamma reflection
//! cross-check and a deliberately incorrect closed-form variant kept as a
//! negative control) and [`zeta`] (Bernoulli numbers, even zeta values and
//! the zeta-series identities obtained by differentiating the cotangent
//! expansion). [`selftest`] bundles the whole battery into one report.

pub mod ball;
pub mod cotpoly;
mod error;
pub mod exact;
pub mod selftest;
pub mod theorems;
pub mod zeta;

pub use ball::{Ball, Precision};
pub use cotpoly::PiMultiple;
pub use error::{Error, Result};
pub use exact::{cot_exact, IntPolynomial, QuadraticNumber, Rational};
