//! Bernoulli numbers, even zeta values, the cotangent Taylor expansion and
//! the zeta series obtained by differentiating it, with an audit comparing
//! direct summation against the closed decomposition.

mod bernoulli;

pub use bernoulli::bernoulli;

pub(crate) use bernoulli::factorial_big;
