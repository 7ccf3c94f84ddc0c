//! The deformation probe for the curvature estimates: intersection
//! arithmetic in the span of the fiber class F and c₁, the family of
//! Kähler classes 2(p−1)F − εc₁, the five ε-expansions of the curvature
//! norms, and the first-order extraction of the sharp weight δ ≤ 1/3.
//!
//! All series coefficients are polynomials in ϱ = τ/χ over the rationals;
//! powers of π are carried as metadata and must cancel before any
//! inequality is read off. The expansions are produced by Laurent-expanding
//! the closed rational-function forms; nothing is hard-coded.

mod rho;

pub use rho::RhoPoly;

use crate::error::{Error, Result};
use crate::exact::{Coeff, PowerSeries, Rational, RationalFunction, DEFAULT_ORDER};

/// A cohomology class a·F + b·c₁ with rational-function coefficients in ε.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeClass<C: Coeff> {
    pub f_coeff: RationalFunction<C>,
    pub c1_coeff: RationalFunction<C>,
}

/// The bilinear form on span(F, c₁): F·F = 0, F·c₁ = 2 − 2q for fiber
/// genus q, c₁·c₁ = 2χ + 3τ. Values are supplied, not derived.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingGeometry<C: Coeff> {
    pub fiber_dot_chern: RationalFunction<C>,
    pub chern_squared: RationalFunction<C>,
}

impl PairingGeometry<Rational> {
    /// Numeric geometry from fiber genus and characteristic numbers.
    pub fn from_counts(fiber_genus: i64, chi: i64, tau: i64) -> Self {
        PairingGeometry {
            fiber_dot_chern: RationalFunction::constant(Rational::from_int(2 - 2 * fiber_genus)),
            chern_squared: RationalFunction::constant(Rational::from_int(2 * chi + 3 * tau)),
        }
    }
}

impl PairingGeometry<RhoPoly> {
    /// Geometry normalized by χ: χ ↦ 1, τ ↦ ϱ, so c₁² ↦ 2 + 3ϱ and
    /// F·c₁ = −χ/(2(p−1)) ↦ −1/(2(p−1)). Everything the probe computes is
    /// homogeneous of degree 1 in (χ, τ, c₁²), so χ factors out exactly.
    pub fn normalized(base_genus: i64) -> Self {
        let p = base_genus;
        PairingGeometry {
            fiber_dot_chern: RationalFunction::constant(RhoPoly::constant(Rational::new(
                -1,
                2 * (p - 1),
            ))),
            chern_squared: RationalFunction::constant(RhoPoly::from_coeffs(vec![
                Rational::from_int(2),
                Rational::from_int(3),
            ])),
        }
    }
}

fn constant_rf<C: Coeff>(n: i64) -> RationalFunction<C> {
    RationalFunction::constant(C::from_rational(Rational::from_int(n)))
}

/// The Kähler class 2(p−1)F − εc₁.
pub fn kaehler_class<C: Coeff>(base_genus: i64) -> LatticeClass<C> {
    LatticeClass {
        f_coeff: constant_rf(2 * (base_genus - 1)),
        c1_coeff: RationalFunction::variable().neg(),
    }
}

/// c₁ itself.
pub fn chern_class<C: Coeff>() -> LatticeClass<C> {
    LatticeClass {
        f_coeff: RationalFunction::zero(),
        c1_coeff: RationalFunction::one(),
    }
}

/// The monopole class c₁ + 4(p−1)F of the reversed orientation.
pub fn reversed_chern_class<C: Coeff>(base_genus: i64) -> LatticeClass<C> {
    LatticeClass {
        f_coeff: constant_rf(4 * (base_genus - 1)),
        c1_coeff: RationalFunction::one(),
    }
}

/// The intersection pairing, expanded bilinearly over the form above.
pub fn pairing<C: Coeff>(
    a: &LatticeClass<C>,
    b: &LatticeClass<C>,
    geometry: &PairingGeometry<C>,
) -> RationalFunction<C> {
    let cross = a
        .f_coeff
        .mul(&b.c1_coeff)
        .add(&a.c1_coeff.mul(&b.f_coeff))
        .mul(&geometry.fiber_dot_chern);
    let chern = a
        .c1_coeff
        .mul(&b.c1_coeff)
        .mul(&geometry.chern_squared);
    cross.add(&chern)
}

/// One curvature norm as a closed rational function of ε (χ factored out),
/// with the power of π it carries.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForm {
    pub pi_power: u32,
    pub rf: RationalFunction<RhoPoly>,
}

/// The five closed forms of the probe, in units of χ with π as metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    pub scalar_sq: ClosedForm,
    pub weyl_plus_sq: ClosedForm,
    pub weyl_minus_sq: ClosedForm,
    pub cbar_plus_sq: ClosedForm,
    pub cbar_minus_sq: ClosedForm,
}

/// Build the closed forms from the pairing:
///   total volume       V = ω²/2
///   total scalar       ∫s = 4π c₁·ω
///   ‖s‖²               (∫s)²/V                  (constant scalar curvature)
///   ∫|W₊|²             ‖s‖²/24                  (Kähler identity)
///   ‖W₋‖²              ∫|W₊|² − 12π²τ           (signature identity)
///   |c̄₁⁺|²             (c̄₁·ω)²/ω²
///   |c̄₁⁻|²             |c̄₁⁺|² − c̄₁·c̄₁
/// The result is independent of the base genus used; p = 2 is taken.
pub fn closed_forms(base_genus: i64) -> Result<ClosedForms> {
    if base_genus < 2 {
        return Err(Error::Domain(format!(
            "base genus must be >= 2, got {base_genus}"
        )));
    }
    let geometry = PairingGeometry::normalized(base_genus);
    let omega = kaehler_class::<RhoPoly>(base_genus);
    let c1 = chern_class::<RhoPoly>();
    let cbar = reversed_chern_class::<RhoPoly>(base_genus);

    let omega_sq = pairing(&omega, &omega, &geometry);
    let volume = omega_sq.scale(&Rational::new(1, 2));
    let total_scalar = pairing(&c1, &omega, &geometry); // carries 4 pi

    let scalar_sq = total_scalar
        .mul(&total_scalar)
        .scale(&Rational::from_int(16))
        .div(&volume)?;
    let weyl_plus_sq = scalar_sq.scale(&Rational::new(1, 24));
    // tau = rho in units of chi.
    let tau_term =
        RationalFunction::constant(RhoPoly::monomial(Rational::from_int(12), 1));
    let weyl_minus_sq = weyl_plus_sq.sub(&tau_term);

    let cbar_dot_omega = pairing(&cbar, &omega, &geometry);
    let cbar_plus_sq = cbar_dot_omega.mul(&cbar_dot_omega).div(&omega_sq)?;
    let cbar_minus_sq = cbar_plus_sq.sub(&pairing(&cbar, &cbar, &geometry));

    Ok(ClosedForms {
        scalar_sq: ClosedForm {
            pi_power: 2,
            rf: scalar_sq,
        },
        weyl_plus_sq: ClosedForm {
            pi_power: 2,
            rf: weyl_plus_sq,
        },
        weyl_minus_sq: ClosedForm {
            pi_power: 2,
            rf: weyl_minus_sq,
        },
        cbar_plus_sq: ClosedForm {
            pi_power: 0,
            rf: cbar_plus_sq,
        },
        cbar_minus_sq: ClosedForm {
            pi_power: 0,
            rf: cbar_minus_sq,
        },
    })
}

/// A norm expansion π^k · prefactor · (χ/ε) · [1 + c₁ε + …], with the
/// bracketed series normalized to constant term 1 and coefficients in ℚ[ϱ].
#[derive(Clone, Debug, PartialEq)]
pub struct NormExpansion {
    pub label: &'static str,
    pub pi_power: u32,
    /// Rational multiple of the formal symbol χ/ε.
    pub prefactor: Rational,
    pub series: PowerSeries<RhoPoly>,
}

impl NormExpansion {
    fn from_closed_form(label: &'static str, form: &ClosedForm, order: usize) -> Result<Self> {
        let (_, raw) = form.rf.laurent_expand(1, order)?;
        let constant = raw
            .constant_term()
            .as_rational()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| {
                Error::Normalization(format!(
                    "{label}: expansion has non-rational or vanishing leading coefficient"
                ))
            })?;
        let series = raw.scale(&constant.recip().unwrap());
        if series.constant_term() != &RhoPoly::one() {
            return Err(Error::Normalization(format!(
                "{label}: series failed to normalize to constant term 1"
            )));
        }
        if !(form.pi_power == 0 || form.pi_power == 2) {
            return Err(Error::Normalization(format!(
                "{label}: pi power {} out of range",
                form.pi_power
            )));
        }
        Ok(NormExpansion {
            label,
            pi_power: form.pi_power,
            prefactor: constant,
            series,
        })
    }

    /// Coefficient of ε in the bracketed series.
    pub fn first_order(&self) -> RhoPoly {
        self.series.coeff(1)
    }

    /// Numeric specialization of the bracketed series at ϱ = rho.
    pub fn series_at(&self, rho: &Rational) -> PowerSeries<Rational> {
        PowerSeries::from_coeffs(
            self.series
                .coeffs()
                .iter()
                .map(|c| c.eval(rho))
                .collect(),
        )
    }

    pub fn render(&self) -> String {
        let pi = match self.pi_power {
            0 => String::new(),
            2 => "pi^2 ".to_string(),
            k => format!("pi^{k} "),
        };
        format!(
            "{} {pi}(chi/eps) [{}]",
            self.prefactor,
            self.series.render("eps")
        )
    }
}

/// The five expansions for a geometry with χ > 0. The series are symbolic
/// in ϱ; the stored (χ, τ) record which manifold the probe is aimed at.
#[derive(Clone, Debug, PartialEq)]
pub struct NormExpansions {
    pub chi: i64,
    pub tau: i64,
    pub scalar_sq: NormExpansion,
    pub weyl_plus_sq: NormExpansion,
    pub weyl_minus_sq: NormExpansion,
    pub cbar_plus_sq: NormExpansion,
    pub cbar_minus_sq: NormExpansion,
}

impl NormExpansions {
    pub fn rho(&self) -> Rational {
        Rational::new(self.tau, self.chi)
    }

    pub fn all(&self) -> [&NormExpansion; 5] {
        [
            &self.scalar_sq,
            &self.weyl_plus_sq,
            &self.weyl_minus_sq,
            &self.cbar_plus_sq,
            &self.cbar_minus_sq,
        ]
    }
}

/// Expand the five curvature norms to the given order (at least 1).
pub fn norm_expansions(chi: i64, tau: i64, order: usize) -> Result<NormExpansions> {
    if chi <= 0 {
        return Err(Error::Domain(format!("the probe needs chi > 0, got {chi}")));
    }
    if order < 1 {
        return Err(Error::Domain("expansion order must be at least 1".into()));
    }
    let forms = closed_forms(2)?;
    Ok(NormExpansions {
        chi,
        tau,
        scalar_sq: NormExpansion::from_closed_form("||s||^2", &forms.scalar_sq, order)?,
        weyl_plus_sq: NormExpansion::from_closed_form("||W+||^2", &forms.weyl_plus_sq, order)?,
        weyl_minus_sq: NormExpansion::from_closed_form("||W-||^2", &forms.weyl_minus_sq, order)?,
        cbar_plus_sq: NormExpansion::from_closed_form("|cbar1+|^2", &forms.cbar_plus_sq, order)?,
        cbar_minus_sq: NormExpansion::from_closed_form("|cbar1-|^2", &forms.cbar_minus_sq, order)?,
    })
}

/// Default-order expansions.
pub fn norm_expansions_default(chi: i64, tau: i64) -> Result<NormExpansions> {
    norm_expansions(chi, tau, DEFAULT_ORDER)
}

/// Assumed sign of ϱ = τ/χ when reading off the inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoSign {
    Positive,
    Negative,
}

/// What the first-order inequality pins down for the weight δ.
#[derive(Clone, Debug, PartialEq)]
pub enum DeltaVerdict {
    /// δ ≤ bound; the estimate cannot be improved past it.
    UpperBound(Rational),
    /// The inequality only bounds δ from below; no upper bound derived.
    LowerBound(Rational),
    /// The constraint is vacuous for every δ.
    Unbounded,
}

impl std::fmt::Display for DeltaVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DeltaVerdict::UpperBound(b) => write!(f, "delta <= {b}"),
            DeltaVerdict::LowerBound(b) => {
                write!(f, "no upper bound derived (constraint only gives delta >= {b})")
            }
            DeltaVerdict::Unbounded => write!(f, "constraint vacuous; delta unbounded"),
        }
    }
}

/// The first-order constraint `lhs ≥ δ·rhs` (both in ℚ[ϱ]) and its verdict.
#[derive(Clone, Debug, PartialEq)]
pub struct DeltaAnalysis {
    pub verdict: DeltaVerdict,
    pub lhs_coeff: RhoPoly,
    pub rhs_coeff: RhoPoly,
}

/// Sign of a ϱ-polynomial on the assumed half-line; `None` if indefinite.
fn definite_sign(p: &RhoPoly, sign: RhoSign) -> Option<std::cmp::Ordering> {
    let oriented = match sign {
        RhoSign::Positive => p.clone(),
        RhoSign::Negative => p.scale_rho(&Rational::from_int(-1)),
    };
    let mut saw_pos = false;
    let mut saw_neg = false;
    for c in oriented.coefficients() {
        if c.is_positive() {
            saw_pos = true;
        } else if c.is_negative() {
            saw_neg = true;
        }
    }
    match (saw_pos, saw_neg) {
        (true, false) => Some(std::cmp::Ordering::Greater),
        (false, true) => Some(std::cmp::Ordering::Less),
        (false, false) => Some(std::cmp::Ordering::Equal),
        (true, true) => None,
    }
}

/// Read the sharp weight off three normalized series A, B, C: impose
/// (1−δ)√A + δ√B ≥ √C at first order in ε and solve for δ exactly.
pub fn delta_bound_from_series(
    a: &PowerSeries<RhoPoly>,
    b: &PowerSeries<RhoPoly>,
    c: &PowerSeries<RhoPoly>,
    sign: RhoSign,
) -> Result<DeltaAnalysis> {
    for (label, s) in [("A", a), ("B", b), ("C", c)] {
        if s.constant_term() != &RhoPoly::one() {
            return Err(Error::Normalization(format!(
                "series {label} must have constant term 1"
            )));
        }
    }
    let alpha = a.sqrt()?.coeff(1);
    let beta = b.sqrt()?.coeff(1);
    let gamma = c.sqrt()?.coeff(1);

    // (1-δ)(1+αε) + δ(1+βε) >= 1+γε  ⇔  (α−γ) >= δ(α−β) at order ε.
    let lhs = alpha.sub(&gamma);
    let rhs = alpha.sub(&beta);

    let verdict = if rhs.is_zero() {
        DeltaVerdict::Unbounded
    } else {
        // The bound is a number only when lhs is an exact multiple of rhs.
        let pivot = (0..=rhs.degree().unwrap())
            .find(|&k| !rhs.coeff(k).is_zero())
            .unwrap();
        let ratio = &lhs.coeff(pivot) / &rhs.coeff(pivot);
        if lhs != rhs.scale(&ratio) {
            return Err(Error::Normalization(
                "first-order constraint is not proportional to the delta coefficient; \
                 no single rational bound exists"
                    .into(),
            ));
        }
        match definite_sign(&rhs, sign) {
            Some(std::cmp::Ordering::Greater) => DeltaVerdict::UpperBound(ratio),
            Some(std::cmp::Ordering::Less) => DeltaVerdict::LowerBound(ratio),
            Some(std::cmp::Ordering::Equal) => DeltaVerdict::Unbounded,
            None => {
                return Err(Error::Normalization(
                    "delta coefficient has indefinite sign on the assumed rho half-line".into(),
                ))
            }
        }
    };
    Ok(DeltaAnalysis {
        verdict,
        lhs_coeff: lhs,
        rhs_coeff: rhs,
    })
}

/// Form the three sides of the comparison from the expansions, check that
/// the common prefactor π·sqrt(2χ/3ε) cancels exactly, and extract δ.
///
/// The sides are ‖s/√24‖², ‖W₋‖², and (2π/√3)²·|c̄₁⁻|²; after scaling they
/// must all carry π² · (2/3) · (χ/ε). A residual π power or prefactor
/// mismatch is an error.
pub fn delta_bound(expansions: &NormExpansions, sign: RhoSign) -> Result<DeltaAnalysis> {
    let a = (
        expansions.scalar_sq.pi_power,
        &expansions.scalar_sq.prefactor * &Rational::new(1, 24),
    );
    let b = (
        expansions.weyl_minus_sq.pi_power,
        expansions.weyl_minus_sq.prefactor.clone(),
    );
    // (2π/√3)² = 4π²/3.
    let c = (
        expansions.cbar_minus_sq.pi_power + 2,
        &expansions.cbar_minus_sq.prefactor * &Rational::new(4, 3),
    );
    if a.0 != b.0 || b.0 != c.0 {
        return Err(Error::Normalization(format!(
            "residual pi power: sides carry pi^{}, pi^{}, pi^{}",
            a.0, b.0, c.0
        )));
    }
    if a.1 != b.1 || b.1 != c.1 {
        return Err(Error::Normalization(format!(
            "prefactors do not cancel: {}, {}, {}",
            a.1, b.1, c.1
        )));
    }
    delta_bound_from_series(
        &expansions.scalar_sq.series,
        &expansions.weyl_minus_sq.series,
        &expansions.cbar_minus_sq.series,
        sign,
    )
}

/// |c̄₁⁻|² − |c̄₁⁺|² as a rational function of ε, computed through the
/// pairing for a numeric fibration geometry.
pub fn chern_class_defect(
    base_genus: i64,
    fiber_genus: i64,
    chi: i64,
    tau: i64,
) -> Result<RationalFunction<Rational>> {
    if base_genus < 2 {
        return Err(Error::Domain(format!(
            "base genus must be >= 2, got {base_genus}"
        )));
    }
    if (2 - 2 * fiber_genus) * 2 * (base_genus - 1) != -chi {
        return Err(Error::Inconsistent(format!(
            "geometry is not fibration-consistent: (2 - 2q)·2(p-1) = {} but -chi = {}",
            (2 - 2 * fiber_genus) * 2 * (base_genus - 1),
            -chi
        )));
    }
    let geometry = PairingGeometry::from_counts(fiber_genus, chi, tau);
    let omega = kaehler_class::<Rational>(base_genus);
    let cbar = reversed_chern_class::<Rational>(base_genus);
    let omega_sq = pairing(&omega, &omega, &geometry);
    let cbar_dot_omega = pairing(&cbar, &omega, &geometry);
    let plus = cbar_dot_omega.mul(&cbar_dot_omega).div(&omega_sq)?;
    let minus = plus.sub(&pairing(&cbar, &cbar, &geometry));
    Ok(minus.sub(&plus))
}

/// Check |c̄₁⁻|² − |c̄₁⁺|² = 2χ − 3τ as exact rational functions of ε.
pub fn verify_chern_class_identity(
    base_genus: i64,
    fiber_genus: i64,
    chi: i64,
    tau: i64,
) -> Result<bool> {
    let defect = chern_class_defect(base_genus, fiber_genus, chi, tau)?;
    Ok(defect == RationalFunction::constant(Rational::from_int(2 * chi - 3 * tau)))
}
