//! Polynomials in the ratio symbol ϱ = τ/χ over the rationals.
//!
//! The ε-expansions keep ϱ as a polynomial indeterminate, so series
//! coefficients live in ℚ[ϱ]; numeric specialization happens only on
//! demand. ℚ[ϱ] is a ring but not a field, so rational-function reduction
//! over it stays at ε-power cancellation.

use crate::exact::{Coeff, Poly, Rational};

#[derive(Clone, PartialEq)]
pub struct RhoPoly(Poly<Rational>);

impl RhoPoly {
    pub fn constant(r: Rational) -> Self {
        RhoPoly(Poly::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    /// The symbol ϱ itself.
    pub fn rho() -> Self {
        RhoPoly(Poly::variable())
    }

    /// `r · ϱ^k`.
    pub fn monomial(r: Rational, k: usize) -> Self {
        RhoPoly(Poly::monomial(r, k))
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        RhoPoly(Poly::from_coeffs(coeffs))
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.coeff(k)
    }

    /// Substitute a numeric value for ϱ.
    pub fn eval(&self, rho: &Rational) -> Rational {
        self.0.eval(rho)
    }

    /// Substitute ϱ ↦ r·ϱ.
    pub fn scale_rho(&self, r: &Rational) -> Self {
        RhoPoly(self.0.scale_variable(r))
    }

    pub fn coefficients(&self) -> impl Iterator<Item = Rational> + '_ {
        (0..=self.0.degree().unwrap_or(0)).map(|k| self.0.coeff(k))
    }
}

impl Coeff for RhoPoly {
    const IS_FIELD: bool = false;

    fn zero() -> Self {
        RhoPoly(Poly::zero())
    }
    fn one() -> Self {
        RhoPoly(Poly::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        RhoPoly(self.0.add(&other.0))
    }
    fn sub(&self, other: &Self) -> Self {
        RhoPoly(self.0.sub(&other.0))
    }
    fn mul(&self, other: &Self) -> Self {
        RhoPoly(self.0.mul(&other.0))
    }
    fn neg(&self) -> Self {
        RhoPoly(self.0.neg())
    }
    fn scale(&self, r: &Rational) -> Self {
        RhoPoly(self.0.scale(r))
    }
    fn try_invert(&self) -> Option<Self> {
        // Units of a polynomial ring over a field: nonzero constants.
        match self.0.degree() {
            Some(0) => self.0.coeff(0).recip().map(Self::constant),
            _ => None,
        }
    }
    fn from_rational(r: Rational) -> Self {
        Self::constant(r)
    }
    fn as_rational(&self) -> Option<Rational> {
        match self.0.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.0.coeff(0)),
            _ => None,
        }
    }
    fn render(&self) -> String {
        self.0.render("rho")
    }
}

impl std::fmt::Debug for RhoPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_constants_invert() {
        assert!(RhoPoly::rho().try_invert().is_none());
        assert_eq!(
            RhoPoly::from_int(4).try_invert().unwrap(),
            RhoPoly::constant(Rational::new(1, 4))
        );
        assert!(RhoPoly::zero().try_invert().is_none());
    }

    #[test]
    fn evaluation() {
        // 3 + 9/2 rho at rho = 1/10 is 69/20
        let p = RhoPoly::from_coeffs(vec![Rational::from_int(3), Rational::new(9, 2)]);
        assert_eq!(p.eval(&Rational::new(1, 10)), Rational::new(69, 20));
    }

    #[test]
    fn rendering() {
        let p = RhoPoly::from_coeffs(vec![Rational::from_int(3), Rational::new(9, 2)]);
        assert_eq!(p.render(), "3 + 9/2*rho");
        let m = RhoPoly::from_coeffs(vec![Rational::from_int(-1), Rational::new(9, 2)]);
        assert_eq!(m.render(), "-1 + 9/2*rho");
    }
}
