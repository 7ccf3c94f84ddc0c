//! Truncated power series in ε.
//!
//! A series of truncation order N stores exactly N+1 coefficients; terms of
//! index > N are unknown, not zero. Binary operations truncate to the
//! minimum order of their operands, so no result ever claims a coefficient
//! the inputs could not determine.

use crate::error::{Error, Result};

use super::coeff::Coeff;
use super::rational::Rational;

#[derive(Clone, PartialEq)]
pub struct PowerSeries<C: Coeff> {
    coeffs: Vec<C>, // exactly truncation_order + 1 entries
}

impl<C: Coeff> PowerSeries<C> {
    /// Series from explicit coefficients; the truncation order is
    /// `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut coeffs = vec![C::zero(); order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == C::one() && self.coeffs[1..].iter().all(C::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        PowerSeries {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| self.coeff(k).add(&other.coeff(k))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut coeffs = vec![C::zero(); n + 1];
        for i in 0..=n {
            let a = self.coeff(i);
            if a.is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(&other.coeff(j)));
            }
        }
        PowerSeries { coeffs }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Substitute ε ↦ r·ε.
    pub fn scale_variable(&self, r: &Rational) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&r.pow(k as u32)))
                .collect(),
        }
    }

    /// Multiplicative inverse. Requires the constant term to be a unit.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_invert().ok_or_else(|| {
            Error::Normalization("series inverse needs a unit constant term".into())
        })?;
        let n = self.order();
        let mut coeffs = vec![C::zero(); n + 1];
        coeffs[0] = inv0.clone();
        for k in 1..=n {
            // c_k = -inv0 * sum_{i=1}^{k} a_i c_{k-i}
            let mut sum = C::zero();
            for i in 1..=k {
                sum = sum.add(&self.coeff(i).mul(&coeffs[k - i]));
            }
            coeffs[k] = sum.mul(&inv0).neg();
        }
        Ok(PowerSeries { coeffs })
    }

    /// Square root of a series with constant term 1, by the exact recursion
    /// t_0 = 1, t_n = (s_n − Σ_{i=1}^{n-1} t_i t_{n-i}) / 2.
    pub fn sqrt(&self) -> Result<Self> {
        if self.coeffs[0] != C::one() {
            return Err(Error::Domain(
                "series square root needs constant term 1 (non-normalized expansion)".into(),
            ));
        }
        let n = self.order();
        let half = Rational::new(1, 2);
        let mut t = vec![C::zero(); n + 1];
        t[0] = C::one();
        for k in 1..=n {
            let mut cross = C::zero();
            for i in 1..k {
                cross = cross.add(&t[i].mul(&t[k - i]));
            }
            t[k] = self.coeff(k).sub(&cross).scale(&half);
        }
        Ok(PowerSeries { coeffs: t })
    }

    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            let piece = c.render();
            let needs_parens = piece.contains(' ');
            let (sign, mag) = if !needs_parens {
                match piece.strip_prefix('-') {
                    Some(rest) => ("-", rest.to_string()),
                    None => ("+", piece),
                }
            } else {
                ("+", format!("({piece})"))
            };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
                out.push_str(&mag);
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
                let var_part = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if mag == "1" {
                    out.push_str(&var_part);
                } else {
                    out.push_str(&format!("{mag}*{var_part}"));
                }
            }
        }
        out.push_str(&format!(" + O({var}^{})", self.order() + 1));
        out
    }
}

impl<C: Coeff> std::fmt::Debug for PowerSeries<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.render("e"))
    }
}
