//! Canonical data model for 4-manifold and complex-surface invariants.
//!
//! `TopInvariants` holds the oriented-topology data (χ, τ, b₁, spin,
//! simple connectivity); `SurfaceInvariants` holds the holomorphic data
//! (c₁², c₂, q, p_g) together with the asserted geometric facts the
//! constructors supply. Both validate their defining identities on
//! construction: Euler/Betti bookkeeping, integrality of the signature,
//! and the Noether identity c₁² + c₂ = 12(1 − q + p_g).
//!
//! Simple connectivity and spin-ness are asserted facts, not computed ones:
//! hypersurfaces, complete intersections, and the branched double covers
//! used here are simply connected by standard Lefschetz-type facts, while a
//! surface bundle over a curve is a K(π,1); similarly spin detection is the
//! parity of c₁ in the cases modeled, with the standard pieces hard-coded.

use crate::error::{Error, Result};
use crate::exact::Rational;

/// Orientable 4-manifold invariants: Euler number χ, signature τ, optional
/// first Betti number, and the two asserted flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopInvariants {
    pub euler: i64,
    pub signature: i64,
    pub b1: Option<i64>,
    pub simply_connected: bool,
    pub spin: bool,
}

impl TopInvariants {
    pub fn new(
        euler: i64,
        signature: i64,
        b1: Option<i64>,
        simply_connected: bool,
        spin: bool,
    ) -> Result<Self> {
        let t = TopInvariants {
            euler,
            signature,
            b1,
            simply_connected,
            spin,
        };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        if let Some(b1) = self.b1 {
            if b1 < 0 {
                return Err(Error::Inconsistent(format!("negative b1 = {b1}")));
            }
            let b2 = self.euler - 2 + 2 * b1;
            if b2 < self.signature.abs() {
                return Err(Error::Inconsistent(format!(
                    "b2 = {b2} < |tau| = {}",
                    self.signature.abs()
                )));
            }
            if (b2 - self.signature) % 2 != 0 {
                return Err(Error::Inconsistent(format!(
                    "b2 = {b2} and tau = {} have different parity",
                    self.signature
                )));
            }
        }
        if self.simply_connected && self.b1 != Some(0) {
            return Err(Error::Inconsistent(
                "simply connected manifolds have b1 = 0".into(),
            ));
        }
        Ok(())
    }

    pub fn b2(&self) -> Option<i64> {
        self.b1.map(|b1| self.euler - 2 + 2 * b1)
    }

    pub fn b_plus(&self) -> Option<i64> {
        self.b2().map(|b2| (b2 + self.signature) / 2)
    }

    pub fn b_minus(&self) -> Option<i64> {
        self.b2().map(|b2| (b2 - self.signature) / 2)
    }

    pub fn two_chi_plus_3tau(&self) -> i64 {
        2 * self.euler + 3 * self.signature
    }

    pub fn two_chi_minus_3tau(&self) -> i64 {
        2 * self.euler - 3 * self.signature
    }

    /// Blow up `k` points: χ grows by k, τ drops by k, the manifold
    /// acquires odd intersection form.
    pub fn blow_up(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain(format!("blow-up count must be >= 1, got {k}")));
        }
        TopInvariants::new(
            self.euler + k,
            self.signature - k,
            self.b1,
            self.simply_connected,
            false,
        )
    }

    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        let b1 = match (self.b1, other.b1) {
            (Some(a), Some(b)) => Some(a + b),
            _ => None,
        };
        TopInvariants::new(
            self.euler + other.euler - 2,
            self.signature + other.signature,
            b1,
            self.simply_connected && other.simply_connected,
            self.spin && other.spin,
        )
    }
}

/// The closed simply-described building blocks with hard-coded invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardPiece {
    Cp2,
    Cp2Bar,
    K3,
    T4,
    S2xS2,
}

impl StandardPiece {
    pub const ALL: [StandardPiece; 5] = [
        StandardPiece::Cp2,
        StandardPiece::Cp2Bar,
        StandardPiece::K3,
        StandardPiece::T4,
        StandardPiece::S2xS2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StandardPiece::Cp2 => "CP2",
            StandardPiece::Cp2Bar => "CP2bar",
            StandardPiece::K3 => "K3",
            StandardPiece::T4 => "T4",
            StandardPiece::S2xS2 => "S2xS2",
        }
    }

    pub fn invariants(self) -> TopInvariants {
        let (euler, signature, b1, sc, spin) = match self {
            StandardPiece::Cp2 => (3, 1, 0, true, false),
            StandardPiece::Cp2Bar => (3, -1, 0, true, false),
            StandardPiece::K3 => (24, -16, 0, true, true),
            StandardPiece::T4 => (0, 0, 4, false, true),
            StandardPiece::S2xS2 => (4, 0, 0, true, true),
        };
        TopInvariants::new(euler, signature, Some(b1), sc, spin)
            .expect("standard piece table is consistent")
    }
}

/// Chern and Hodge-theoretic invariants of a compact complex surface,
/// together with the asserted facts consumed by the obstruction and
/// classification machinery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub c1_squared: i64,
    pub c2: i64,
    pub q: i64,
    pub p_g: i64,
    pub simply_connected: bool,
    /// Parity of c₁: true exactly when c₁ is divisible by 2 in the cases
    /// modeled (implies the intersection form is even).
    pub spin: bool,
    pub minimal_general_type: bool,
    pub ample_canonical: bool,
}

impl SurfaceInvariants {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        c1_squared: i64,
        c2: i64,
        q: i64,
        p_g: i64,
        simply_connected: bool,
        spin: bool,
        minimal_general_type: bool,
        ample_canonical: bool,
    ) -> Result<Self> {
        if q < 0 || p_g < 0 {
            return Err(Error::Inconsistent(format!(
                "negative Hodge numbers: q = {q}, p_g = {p_g}"
            )));
        }
        if c1_squared + c2 != 12 * (1 - q + p_g) {
            return Err(Error::Inconsistent(format!(
                "Noether identity fails: c1^2 + c2 = {} but 12(1 - q + p_g) = {}",
                c1_squared + c2,
                12 * (1 - q + p_g)
            )));
        }
        if (c1_squared - 2 * c2) % 3 != 0 {
            return Err(Error::Inconsistent(format!(
                "signature (c1^2 - 2 c2)/3 is not an integer for c1^2 = {c1_squared}, c2 = {c2}"
            )));
        }
        let s = SurfaceInvariants {
            c1_squared,
            c2,
            q,
            p_g,
            simply_connected,
            spin,
            minimal_general_type,
            ample_canonical,
        };
        // b_minus >= 0 comes with the territory; check it anyway.
        let top = s.derive_topology()?;
        if top.b_minus() < Some(0) {
            return Err(Error::Inconsistent("negative b_minus".into()));
        }
        Ok(s)
    }

    /// Holomorphic Euler characteristic 1 − q + p_g.
    pub fn holomorphic_euler(&self) -> i64 {
        1 - self.q + self.p_g
    }

    pub fn signature(&self) -> i64 {
        (self.c1_squared - 2 * self.c2) / 3
    }

    pub fn b_plus(&self) -> i64 {
        1 + 2 * self.p_g
    }

    /// Topological invariants: χ = c₂, τ = (c₁² − 2c₂)/3, b₁ = 2q; the
    /// simply-connected and spin facts are carried over as asserted.
    pub fn derive_topology(&self) -> Result<TopInvariants> {
        TopInvariants::new(
            self.c2,
            self.signature(),
            Some(2 * self.q),
            self.simply_connected,
            self.spin,
        )
    }

    /// Blow up `k` points. The result is no longer minimal and has odd c₁.
    pub fn blow_up(&self, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain(format!("blow-up count must be >= 1, got {k}")));
        }
        SurfaceInvariants::new(
            self.c1_squared - k,
            self.c2 + k,
            self.q,
            self.p_g,
            self.simply_connected,
            false,
            false,
            false,
        )
    }
}

/// A manifold as the CLI and searches handle it: topological invariants,
/// plus the surface-level data when the construction is a complex surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifold {
    pub top: TopInvariants,
    pub surface: Option<SurfaceInvariants>,
}

impl Manifold {
    pub fn from_surface(surface: SurfaceInvariants) -> Result<Self> {
        Ok(Manifold {
            top: surface.derive_topology()?,
            surface: Some(surface),
        })
    }

    pub fn from_top(top: TopInvariants) -> Self {
        Manifold { top, surface: None }
    }

    pub fn blow_up(&self, k: i64) -> Result<Self> {
        Ok(Manifold {
            top: self.top.blow_up(k)?,
            surface: self.surface.as_ref().map(|s| s.blow_up(k)).transpose()?,
        })
    }

    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        Ok(Manifold {
            top: self.top.connected_sum(&other.top)?,
            surface: None,
        })
    }
}

/// Hitchin-Thorpe status of 2χ − 3|τ|.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HitchinThorpe {
    Strict,
    Equality,
    Violated,
}

impl std::fmt::Display for HitchinThorpe {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            HitchinThorpe::Strict => "strict",
            HitchinThorpe::Equality => "equality",
            HitchinThorpe::Violated => "violated",
        })
    }
}

/// One named yes/no conclusion with the theorem it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub criterion: String,
    pub holds: bool,
    pub provenance: String,
}

/// The verdicts for one obstruction query, with provenance strings naming
/// the facts applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub hitchin_thorpe: HitchinThorpe,
    /// Smallest obstructing blow-up count threshold·c₁²(X), when the
    /// hypotheses hold.
    pub sw_blowup_threshold: Option<Rational>,
    pub verdicts: Vec<Verdict>,
    pub notes: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sextic() -> SurfaceInvariants {
        // degree-6 hypersurface data
        SurfaceInvariants::new(24, 108, 0, 10, true, true, true, true).unwrap()
    }

    #[test]
    fn derive_topology_of_sextic() {
        let t = sextic().derive_topology().unwrap();
        assert_eq!((t.euler, t.signature), (108, -64));
        assert_eq!(t.b_plus(), Some(21));
        assert_eq!(t.b_minus(), Some(85));
    }

    #[test]
    fn derive_topology_of_k3_data() {
        let k3 = SurfaceInvariants::new(0, 24, 0, 1, true, true, false, false).unwrap();
        let t = k3.derive_topology().unwrap();
        assert_eq!((t.euler, t.signature), (24, -16));
        assert_eq!(t, StandardPiece::K3.invariants());
    }

    #[test]
    fn derive_topology_of_double_cubic_data() {
        let s = SurfaceInvariants::new(9, 63, 0, 5, true, false, true, true).unwrap();
        let t = s.derive_topology().unwrap();
        assert_eq!((t.euler, t.signature), (63, -39));
    }

    #[test]
    fn noether_violation_is_rejected() {
        assert!(matches!(
            SurfaceInvariants::new(24, 109, 0, 10, true, true, true, true),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn noether_forces_integral_signature() {
        // c1^2 + c2 = 12 chi_h gives c1^2 = -c2 mod 3, so (c1^2 - 2 c2)/3 is
        // automatically an integer on any data passing the Noether check.
        let s = SurfaceInvariants::new(5, 7, 0, 0, true, false, false, false).unwrap();
        assert_eq!(s.signature(), -3);
    }

    #[test]
    fn blow_up_shifts_chi_and_tau() {
        let t = sextic().derive_topology().unwrap().blow_up(8).unwrap();
        assert_eq!((t.euler, t.signature), (116, -72));
        assert!(!t.spin);

        let big = TopInvariants::new(660, -320, Some(0), true, true).unwrap();
        let blown = big.blow_up(144).unwrap();
        assert_eq!((blown.euler, blown.signature), (804, -464));
    }

    #[test]
    fn blow_up_is_additive() {
        let t = sextic().derive_topology().unwrap();
        let twice = t.blow_up(3).unwrap().blow_up(5).unwrap();
        let once = t.blow_up(8).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn blow_up_preserves_noether() {
        let s = sextic().blow_up(8).unwrap();
        assert_eq!(s.c1_squared + s.c2, 12 * s.holomorphic_euler());
        assert_eq!(s.holomorphic_euler(), sextic().holomorphic_euler());
        assert!(!s.spin && !s.minimal_general_type);
    }

    #[test]
    fn connected_sums_of_projective_planes() {
        let cp2 = StandardPiece::Cp2.invariants();
        let cp2bar = StandardPiece::Cp2Bar.invariants();
        let sum = cp2.connected_sum(&cp2bar).unwrap();
        assert_eq!((sum.euler, sum.signature), (4, 0));
        assert!(!sum.spin && sum.simply_connected);

        let mut m = cp2.clone();
        for _ in 1..21 {
            m = m.connected_sum(&cp2).unwrap();
        }
        for _ in 0..93 {
            m = m.connected_sum(&cp2bar).unwrap();
        }
        assert_eq!((m.euler, m.signature), (116, -72));

        let mut n = cp2.clone();
        for _ in 1..11 {
            n = n.connected_sum(&cp2).unwrap();
        }
        for _ in 0..53 {
            n = n.connected_sum(&cp2bar).unwrap();
        }
        assert_eq!((n.euler, n.signature), (66, -42));
    }

    #[test]
    fn blow_up_and_derive_commute() {
        let s = sextic();
        let a = s.blow_up(5).unwrap().derive_topology().unwrap();
        let b = s.derive_topology().unwrap().blow_up(5).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn simply_connected_needs_b1_zero() {
        assert!(TopInvariants::new(4, 0, Some(2), true, false).is_err());
        assert!(TopInvariants::new(4, 0, None, true, false).is_err());
    }
}
