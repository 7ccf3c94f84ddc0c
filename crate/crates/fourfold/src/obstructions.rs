//! The inequalities that turn invariants into geometric conclusions:
//! Hitchin-Thorpe, the Seiberg-Witten curvature floor, and the blow-up
//! Einstein obstruction at its three historical thresholds.
//!
//! Everything here is decided by exact integer and rational comparisons.
//! The analytic hypotheses (b₊ > 1, minimal general type, monopole class)
//! are boolean facts carried on `SurfaceInvariants`; they are checked,
//! never re-derived.

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::invariants::{
    HitchinThorpe, ObstructionReport, SurfaceInvariants, TopInvariants, Verdict,
};

/// The curvature integrals 2χ ± 3τ and the coefficient of the
/// Seiberg-Witten lower bound on the scalar/Weyl part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureBudget {
    pub two_chi_plus_3tau: i64,
    pub two_chi_minus_3tau: i64,
    /// Multiplier of (c₁⁺)² in the curvature lower bound.
    pub sw_lower_bound_coeff: Rational,
}

impl CurvatureBudget {
    pub fn from_top(t: &TopInvariants) -> Self {
        let budget = CurvatureBudget {
            two_chi_plus_3tau: t.two_chi_plus_3tau(),
            two_chi_minus_3tau: t.two_chi_minus_3tau(),
            sw_lower_bound_coeff: Rational::new(2, 3),
        };
        debug_assert_eq!(
            budget.two_chi_plus_3tau + budget.two_chi_minus_3tau,
            4 * t.euler
        );
        budget
    }
}

/// Classify 2χ − 3|τ|.
pub fn hitchin_thorpe(t: &TopInvariants) -> HitchinThorpe {
    let margin = 2 * t.euler - 3 * t.signature.abs();
    match margin {
        0 => HitchinThorpe::Equality,
        m if m > 0 => HitchinThorpe::Strict,
        _ => HitchinThorpe::Violated,
    }
}

fn check_monopole_hypotheses(x: &SurfaceInvariants) -> Result<()> {
    if !x.minimal_general_type {
        return Err(Error::NotApplicable(
            "surface is not minimal of general type; no monopole class is recorded".into(),
        ));
    }
    if x.b_plus() < 3 {
        return Err(Error::NotApplicable(format!(
            "b_plus = {} but the estimate needs b_plus > 1 with p_g >= 1",
            x.b_plus()
        )));
    }
    Ok(())
}

/// Lower bound (2/3)·c₁²(X) for the normalized scalar/Weyl curvature
/// integral of every metric on any blow-up of X.
pub fn sw_einstein_floor(x: &SurfaceInvariants) -> Result<Rational> {
    check_monopole_hypotheses(x)?;
    Ok(Rational::new(2, 3) * Rational::from_int(x.c1_squared))
}

/// The three historical coefficients of c₁²(X) beyond which blowing up
/// kills Einstein metrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Threshold {
    OneThird,
    TwentyFiveFiftySevenths,
    TwoThirds,
}

impl Threshold {
    pub const ALL: [Threshold; 3] = [
        Threshold::OneThird,
        Threshold::TwentyFiveFiftySevenths,
        Threshold::TwoThirds,
    ];

    pub fn value(self) -> Rational {
        match self {
            Threshold::OneThird => Rational::new(1, 3),
            Threshold::TwentyFiveFiftySevenths => Rational::new(25, 57),
            Threshold::TwoThirds => Rational::new(2, 3),
        }
    }

    pub fn provenance(self) -> &'static str {
        match self {
            Threshold::OneThird => "scalar/Weyl curvature estimate with blow-up monopole classes",
            Threshold::TwentyFiveFiftySevenths => "earlier mixed Weyl-curvature estimate",
            Threshold::TwoThirds => "scalar-curvature-only estimate",
        }
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl std::str::FromStr for Threshold {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1/3" => Ok(Threshold::OneThird),
            "25/57" => Ok(Threshold::TwentyFiveFiftySevenths),
            "2/3" => Ok(Threshold::TwoThirds),
            other => Err(format!(
                "unknown threshold {other:?}; expected 1/3, 25/57, or 2/3"
            )),
        }
    }
}

/// How the blow-up count compares with threshold·c₁²(X). Equality counts as
/// obstructed: the curvature floor is strict, so the Einstein budget
/// c₁²(X) − k cannot equal it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObstructionOutcome {
    StrictlyObstructed,
    ObstructedAtEquality,
    NotObstructed,
}

impl ObstructionOutcome {
    pub fn obstructed(self) -> bool {
        !matches!(self, ObstructionOutcome::NotObstructed)
    }
}

/// Result of a single threshold comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub outcome: ObstructionOutcome,
    pub threshold: Threshold,
    /// threshold · c₁²(X), the smallest obstructing blow-up count.
    pub obstructing_floor: Rational,
    pub provenance: String,
}

/// Decide whether X blown up at k points loses all Einstein metrics under
/// the given threshold: obstructed exactly when k ≥ threshold·c₁²(X).
pub fn einstein_obstruction(
    x: &SurfaceInvariants,
    k: i64,
    threshold: Threshold,
) -> Result<ObstructionVerdict> {
    check_monopole_hypotheses(x)?;
    if k < 1 {
        return Err(Error::Domain(format!("blow-up count must be >= 1, got {k}")));
    }
    let floor = threshold.value() * Rational::from_int(x.c1_squared);
    let k_rat = Rational::from_int(k);
    let outcome = match k_rat.cmp_value(&floor) {
        std::cmp::Ordering::Greater => ObstructionOutcome::StrictlyObstructed,
        std::cmp::Ordering::Equal => ObstructionOutcome::ObstructedAtEquality,
        std::cmp::Ordering::Less => ObstructionOutcome::NotObstructed,
    };
    let provenance = match outcome {
        ObstructionOutcome::ObstructedAtEquality => format!(
            "{}; equality case obstructed because the curvature floor is strict",
            threshold.provenance()
        ),
        _ => threshold.provenance().to_string(),
    };
    Ok(ObstructionVerdict {
        outcome,
        threshold,
        obstructing_floor: floor,
        provenance,
    })
}

/// The exact value 2χ + 3τ that an Einstein metric's normalized curvature
/// integral must equal once the trace-free Ricci term drops out.
pub fn einstein_budget_identity(t: &TopInvariants) -> i64 {
    t.two_chi_plus_3tau()
}

/// Full report for "blow up X at k points": Hitchin-Thorpe status of the
/// blow-up, the curvature floor, the budget identity, and the threshold
/// verdict.
pub fn blowup_report(
    x: &SurfaceInvariants,
    k: i64,
    threshold: Threshold,
) -> Result<ObstructionReport> {
    let blown = x.derive_topology()?.blow_up(k)?;
    let ht = hitchin_thorpe(&blown);
    let mut verdicts = Vec::new();
    let mut notes = Vec::new();

    verdicts.push(Verdict {
        criterion: "hitchin-thorpe".into(),
        holds: !matches!(ht, HitchinThorpe::Violated),
        provenance: format!(
            "Hitchin-Thorpe inequality 2chi >= 3|tau|: 2*{} vs 3*{}",
            blown.euler,
            blown.signature.abs()
        ),
    });

    let mut sw_blowup_threshold = None;
    match einstein_obstruction(x, k, threshold) {
        Ok(verdict) => {
            let floor = sw_einstein_floor(x).expect("hypotheses already checked");
            let budget = einstein_budget_identity(&blown);
            verdicts.push(Verdict {
                criterion: "curvature budget".into(),
                holds: true,
                provenance: format!(
                    "Einstein metrics need 2chi+3tau(M) = {budget} to exceed the strict floor {floor} = 2/3 c1^2(X)"
                ),
            });
            verdicts.push(Verdict {
                criterion: format!("einstein obstruction at threshold {}", verdict.threshold),
                holds: verdict.outcome.obstructed(),
                provenance: verdict.provenance.clone(),
            });
            if verdict.outcome == ObstructionOutcome::ObstructedAtEquality {
                notes.push(format!(
                    "k = {k} equals the floor {} exactly; obstructed at equality",
                    verdict.obstructing_floor
                ));
            }
            sw_blowup_threshold = Some(verdict.obstructing_floor);
        }
        Err(Error::NotApplicable(why)) => {
            verdicts.push(Verdict {
                criterion: format!("einstein obstruction at threshold {threshold}"),
                holds: false,
                provenance: format!("not applicable: {why}"),
            });
        }
        Err(e) => return Err(e),
    }

    Ok(ObstructionReport {
        hitchin_thorpe: ht,
        sw_blowup_threshold,
        verdicts,
        notes,
    })
}
