//! Rational functions in ε: quotients of polynomials.
//!
//! Over field coefficients the representation is kept fully reduced (exact
//! polynomial GCD, monic denominator). Over non-field rings only the common
//! power of ε is cancelled; equality always compares by cross-multiplication,
//! so it is representation independent either way.

use crate::error::{Error, Result};

use super::coeff::Coeff;
use super::poly::Poly;
use super::rational::Rational;
use super::series::PowerSeries;

#[derive(Clone)]
pub struct RationalFunction<C: Coeff> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> RationalFunction<C> {
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator polynomial".into()));
        }
        Ok(RationalFunction { num, den }.normalized())
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// The variable ε as a rational function.
    pub fn variable() -> Self {
        Self::from_poly(Poly::variable())
    }

    pub fn numerator(&self) -> &Poly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalized(mut self) -> Self {
        if self.num.is_zero() {
            self.den = Poly::one();
            return self;
        }
        // Cancel the common power of ε.
        let k = self
            .num
            .ord()
            .unwrap_or(0)
            .min(self.den.ord().expect("nonzero denominator"));
        if k > 0 {
            self.num = self.num.div_xk(k).unwrap();
            self.den = self.den.div_xk(k).unwrap();
        }
        if C::IS_FIELD {
            let g = self.num.gcd(&self.den);
            if g.degree().unwrap_or(0) > 0 {
                let (n, rn) = self.num.div_rem(&g);
                let (d, rd) = self.den.div_rem(&g);
                debug_assert!(rn.is_zero() && rd.is_zero());
                self.num = n;
                self.den = d;
            }
            // Monic denominator for a canonical representative.
            if let Some(inv) = self.den.leading_coeff().and_then(C::try_invert) {
                self.num = self.num.scale_coeff(&inv);
                self.den = self.den.scale_coeff(&inv);
            }
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        RationalFunction {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        RationalFunction {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .normalized()
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero rational function".into()));
        }
        Ok(RationalFunction {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        }
        .normalized())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        RationalFunction {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
        .normalized()
    }

    /// Laurent expansion around ε = 0.
    ///
    /// The denominator must be exactly ε^`pole_order` times a polynomial
    /// that does not vanish at 0; the function is then ε^(−pole_order) · s
    /// with `s` returned exactly through ε^`order`. The returned integer is
    /// the leading power −pole_order.
    pub fn laurent_expand(&self, pole_order: usize, order: usize) -> Result<(i64, PowerSeries<C>)> {
        let den_ord = self.den.ord().expect("nonzero denominator");
        if den_ord != pole_order {
            return Err(Error::PoleOrderMismatch(format!(
                "denominator vanishes to order {den_ord}, expected {pole_order}"
            )));
        }
        let reduced = self.den.div_xk(pole_order).unwrap();
        let den_series = reduced.to_series(order).invert().map_err(|_| {
            Error::PoleOrderMismatch(
                "denominator quotient has a non-invertible constant term".into(),
            )
        })?;
        let series = self.num.to_series(order).mul(&den_series);
        Ok((-(pole_order as i64), series))
    }

    pub fn render(&self, var: &str) -> String {
        if self.den == Poly::one() {
            self.num.render(var)
        } else {
            format!("({}) / ({})", self.num.render(var), self.den.render(var))
        }
    }
}

impl<C: Coeff> PartialEq for RationalFunction<C> {
    fn eq(&self, other: &Self) -> bool {
        // a/b = c/d  iff  a·d = c·b
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<C: Coeff> std::fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render("e"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction<Rational> {
        RationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (x^2 - 1)/(x - 1) = x + 1
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]), rf(&[1, 1], &[1]));
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]).denominator(), &poly(&[1]));
    }

    #[test]
    fn geometric_series_expansion() {
        // 1/(1-e) = 1 + e + e^2 + ..., leading power 0
        let (lead, s) = rf(&[1], &[1, -1]).laurent_expand(0, 2).unwrap();
        assert_eq!(lead, 0);
        assert_eq!(
            s.coeffs().to_vec(),
            vec![Rational::one(), Rational::one(), Rational::one()]
        );
    }

    #[test]
    fn simple_pole_expansion() {
        // (chi + e c)^2 / (e (2 chi + e c)) at chi=1, c=0: 1/(2e)
        let f = rf(&[1], &[0, 2]);
        let (lead, s) = f.laurent_expand(1, 1).unwrap();
        assert_eq!(lead, -1);
        assert_eq!(s.coeff(0), Rational::new(1, 2));
        assert_eq!(s.coeff(1), Rational::zero());
    }

    #[test]
    fn pole_order_mismatch_is_detected() {
        let f = rf(&[1], &[0, 2]);
        assert!(matches!(
            f.laurent_expand(0, 1),
            Err(Error::PoleOrderMismatch(_))
        ));
        assert!(matches!(
            rf(&[1], &[1, 1]).laurent_expand(1, 1),
            Err(Error::PoleOrderMismatch(_))
        ));
    }

    #[test]
    fn arithmetic_and_cross_multiplied_equality() {
        let a = rf(&[1], &[1, 1]); // 1/(1+e)
        let b = rf(&[1], &[1, -1]); // 1/(1-e)
        let sum = a.add(&b); // 2/(1-e^2)
        assert_eq!(sum, rf(&[2], &[1, 0, -1]));
        let prod = a.mul(&b);
        assert_eq!(prod, rf(&[1], &[1, 0, -1]));
        assert_eq!(a.div(&b).unwrap(), rf(&[1, -1], &[1, 1]));
    }
}
