//! Exact arithmetic in one formal variable ε: arbitrary-precision
//! rationals, dense polynomials, truncated power series, and rational
//! functions. Everything is immutable after construction and free of
//! floating point; π never appears here (call sites that need powers of π
//! carry them as separate metadata).

mod coeff;
mod poly;
mod ratfunc;
mod rational;
mod series;

pub use coeff::Coeff;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use series::PowerSeries;

/// Default truncation order for ε-expansions. First order is what the
/// estimates consume; one extra order guards against cancellation mistakes.
pub const DEFAULT_ORDER: usize = 2;
