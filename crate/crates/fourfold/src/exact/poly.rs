//! Dense univariate polynomials over a coefficient ring.
//!
//! Coefficients are stored in ascending degree order; the vector is empty
//! for the zero polynomial and otherwise ends in a nonzero coefficient.

use super::coeff::Coeff;
use super::rational::Rational;
use super::series::PowerSeries;

#[derive(Clone, PartialEq)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![C::one()],
        }
    }

    pub fn constant(c: C) -> Self {
        Poly { coeffs: vec![c] }.normalized()
    }

    /// The indeterminate itself.
    pub fn variable() -> Self {
        Poly {
            coeffs: vec![C::zero(), C::one()],
        }
    }

    /// `c · x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Poly { coeffs }.normalized()
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().is_some_and(C::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at 0: the lowest index with a nonzero coefficient.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect();
        Poly { coeffs }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly { coeffs }.normalized()
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
        .normalized()
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
        .normalized()
    }

    /// Multiply by `x^k`.
    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact division by `x^k`; `None` when not divisible.
    pub fn div_xk(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        })
    }

    /// Substitute `x ↦ r·x`: the k-th coefficient picks up a factor `r^k`.
    pub fn scale_variable(&self, r: &Rational) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&r.pow(k as u32)))
            .collect();
        Poly { coeffs }.normalized()
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Truncate to a power series with the given truncation order.
    pub fn to_series(&self, order: usize) -> PowerSeries<C> {
        PowerSeries::from_coeffs((0..=order).map(|k| self.coeff(k)).collect())
    }

    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let piece = c.render();
            let (sign, magnitude) = match piece.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", piece),
            };
            if first {
                if sign == "-" {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let var_part = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k == 0 {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&var_part);
            } else {
                out.push_str(&format!("{magnitude}*{var_part}"));
            }
        }
        out
    }
}

impl<C: Coeff> Poly<C>
where
    C: Coeff,
{
    /// Euclidean division, valid when the coefficients form a field.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(C::IS_FIELD, "polynomial division needs field coefficients");
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dlead = divisor
            .leading_coeff()
            .and_then(C::try_invert)
            .expect("nonzero leading coefficient in a field is a unit");
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let factor = rem.leading_coeff().unwrap().mul(&dlead);
            let term = Poly::monomial(factor, rdeg - ddeg);
            quot = quot.add(&term);
            rem = rem.sub(&term.mul(divisor));
        }
        (quot, rem)
    }

    /// Monic greatest common divisor over a coefficient field.
    pub fn gcd(&self, other: &Self) -> Self {
        assert!(C::IS_FIELD, "gcd needs field coefficients");
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading_coeff().and_then(C::try_invert) {
            Some(inv) => a.scale_coeff(&inv),
            None => a, // zero polynomial
        }
    }
}

impl<C: Coeff> std::fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(cs: &[i64]) -> Poly<Rational> {
        Poly::from_coeffs(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    #[test]
    fn product_of_conjugates() {
        // (1+x)(1-x) = 1 - x^2
        let p = poly(&[1, 1]).mul(&poly(&[1, -1]));
        assert_eq!(p, poly(&[1, 0, -1]));
    }

    #[test]
    fn sum_cancels_linear_term() {
        // (1+x)+(1-x) = 2
        assert_eq!(poly(&[1, 1]).add(&poly(&[1, -1])), poly(&[2]));
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (quot, rem) = poly(&[-1, 0, 1]).div_rem(&poly(&[-1, 1]));
        assert_eq!(quot, poly(&[1, 1]));
        assert!(rem.is_zero());

        let g = poly(&[-1, 0, 1]).gcd(&poly(&[1, 1]));
        assert_eq!(g, poly(&[1, 1]));
    }

    #[test]
    fn variable_scaling() {
        // p(x) = 1 + 2x + x^2, p(3x) = 1 + 6x + 9x^2
        let p = poly(&[1, 2, 1]).scale_variable(&q(3, 1));
        assert_eq!(p, poly(&[1, 6, 9]));
    }

    #[test]
    fn ord_detects_vanishing() {
        assert_eq!(poly(&[0, 0, 5, 1]).ord(), Some(2));
        assert_eq!(poly(&[7]).ord(), Some(0));
        assert_eq!(Poly::<Rational>::zero().ord(), None);
    }

    #[test]
    fn render_folds_signs() {
        assert_eq!(poly(&[1, -3]).render("e"), "1 - 3*e");
        assert_eq!(poly(&[0, 1]).render("e"), "e");
        assert_eq!(poly(&[-2, 0, 1]).render("e"), "-2 + e^2");
    }
}
