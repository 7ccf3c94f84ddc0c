//! Coefficient rings for polynomials, truncated series, and rational
//! functions in the formal variable ε.
//!
//! Two rings are used: `Rational` itself, and polynomials in the ratio
//! symbol ϱ over `Rational` (see `sharpness::rho`). The generic arithmetic
//! only ever divides by units, so a ring interface with `try_invert` is
//! enough; full GCD reduction of rational functions kicks in only when the
//! coefficients form a field.

use super::rational::Rational;

/// A commutative ring of coefficients containing the rationals.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    const IS_FIELD: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiply by a rational scalar.
    fn scale(&self, r: &Rational) -> Self;
    /// Multiplicative inverse when the element is a unit.
    fn try_invert(&self) -> Option<Self>;
    /// Embed a rational constant.
    fn from_rational(r: Rational) -> Self;
    /// Extract the value as a rational when it is one (degree-0 in any
    /// auxiliary variable).
    fn as_rational(&self) -> Option<Rational>;
    /// Render with enough parentheses to be used as a series coefficient.
    fn render(&self) -> String;
}

impl Coeff for Rational {
    const IS_FIELD: bool = true;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn try_invert(&self) -> Option<Self> {
        self.recip()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn render(&self) -> String {
        self.to_string()
    }
}
