//! Surface constructions: hypersurfaces, complete intersections, branched
//! double covers (including the Horikawa presets), and Kodaira fibrations
//! built as double covers of a product of curves.
//!
//! Chern numbers of complete intersections are obtained by truncated series
//! division of the total Chern class, (1+H)^{m+1} / ∏(1+aᵢH), through H².
//! The same routine therefore doubles as an independent oracle for the
//! hypersurface closed forms c₁² = d(4−d)², c₂ = d(d²−4d+6).

use crate::error::{Error, Result};
use crate::exact::{Poly, Rational, RationalFunction};
use crate::invariants::{SurfaceInvariants, TopInvariants};

fn to_i64(r: &Rational, what: &str) -> Result<i64> {
    r.to_i64()
        .ok_or_else(|| Error::Overflow(format!("{what} = {r} does not fit in i64")))
}

fn checked(v: i128, what: &str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(format!("{what} = {v} does not fit in i64")))
}

/// Smooth hypersurface of degree `d` in projective 3-space.
///
/// The canonical class is (d−4) times the hyperplane class, so
/// c₁² = d(4−d)² and c₂ = d(d²−4d+6); q = 0 and p_g follows from Noether.
pub fn hypersurface_p3(d: i64) -> Result<SurfaceInvariants> {
    if d < 1 {
        return Err(Error::Domain(format!("hypersurface degree must be >= 1, got {d}")));
    }
    let dd = d as i128;
    let c1_squared = checked(dd * (4 - dd) * (4 - dd), "c1^2")?;
    let c2 = checked(dd * (dd * dd - 4 * dd + 6), "c2")?;
    let chi_h = (c1_squared + c2) / 12;
    SurfaceInvariants::new(
        c1_squared,
        c2,
        0,
        chi_h - 1,
        true,         // Lefschetz
        d % 2 == 0,   // c1 = (4 - d) H
        d >= 5,
        d >= 5,
    )
}

/// Chern numbers (c₁², c₂) of a smooth surface cut out by hypersurfaces of
/// the given degrees in CP^ambient_dim, by exact truncated series division
/// of the total Chern class.
pub fn chern_numbers_by_series(degrees: &[i64], ambient_dim: usize) -> Result<(i64, i64)> {
    if degrees.is_empty() || ambient_dim != degrees.len() + 2 {
        return Err(Error::Domain(format!(
            "a surface needs ambient dimension = number of degrees + 2 (got {} degrees in CP^{ambient_dim})",
            degrees.len()
        )));
    }
    if let Some(&bad) = degrees.iter().find(|&&a| a < 1) {
        return Err(Error::Domain(format!("degrees must be >= 1, got {bad}")));
    }

    // (1 + H)^{m+1}
    let one_plus_h: Poly<Rational> =
        Poly::from_coeffs(vec![Rational::one(), Rational::one()]);
    let mut numerator = Poly::one();
    for _ in 0..=ambient_dim {
        numerator = numerator.mul(&one_plus_h);
    }
    // ∏ (1 + aᵢ H)
    let mut denominator = Poly::one();
    for &a in degrees {
        denominator = denominator.mul(&Poly::from_coeffs(vec![
            Rational::one(),
            Rational::from_int(a),
        ]));
    }

    let total = RationalFunction::new(numerator, denominator)?;
    let (_, series) = total.laurent_expand(0, 2)?;

    let product: i128 = degrees.iter().map(|&a| a as i128).product();
    let product = checked(product, "product of degrees")?;
    let c1 = to_i64(&series.coeff(1), "c1 coefficient")?;
    let c2_coeff = to_i64(&series.coeff(2), "c2 coefficient")?;
    let c1_squared = checked(c1 as i128 * c1 as i128 * product as i128, "c1^2")?;
    let c2 = checked(c2_coeff as i128 * product as i128, "c2")?;
    Ok((c1_squared, c2))
}

/// Smooth complete intersection surface of the given multidegree in
/// CP^ambient_dim.
pub fn complete_intersection(degrees: &[i64], ambient_dim: usize) -> Result<SurfaceInvariants> {
    let (c1_squared, c2) = chern_numbers_by_series(degrees, ambient_dim)?;
    if (c1_squared + c2) % 12 != 0 {
        return Err(Error::Inconsistent(format!(
            "complete intersection data fails Noether divisibility: c1^2 + c2 = {}",
            c1_squared + c2
        )));
    }
    let chi_h = (c1_squared + c2) / 12;
    let canonical_multiple = degrees.iter().sum::<i64>() - ambient_dim as i64 - 1;
    SurfaceInvariants::new(
        c1_squared,
        c2,
        0,
        chi_h - 1,
        true,
        canonical_multiple % 2 == 0,
        canonical_multiple >= 1,
        canonical_multiple >= 1,
    )
}

/// The base of a double cover: Euler number, signature, and canonical
/// self-intersection of Y.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverBase {
    pub euler: i64,
    pub signature: i64,
    pub canonical_sq: i64,
}

impl CoverBase {
    /// CP¹ × CP¹.
    pub const QUADRIC: CoverBase = CoverBase {
        euler: 4,
        signature: 0,
        canonical_sq: 8,
    };
    /// CP² blown up at one point.
    pub const BLOWN_PLANE: CoverBase = CoverBase {
        euler: 4,
        signature: 0,
        canonical_sq: 8,
    };
}

/// Intersection data of the half branch class L (the branch curve is 2L).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BranchData {
    /// L·L on the base.
    pub half_class_self_int: i64,
    /// L·K_Y on the base.
    pub half_class_dot_canonical: i64,
    /// Euler number of the branch curve.
    pub branch_euler: i64,
}

/// Geometric facts about the cover that its numerical data does not
/// determine; the presets fill these from the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoverFlags {
    pub simply_connected: bool,
    pub spin: bool,
    pub minimal_general_type: bool,
    pub ample_canonical: bool,
}

/// Double cover of Y branched over a smooth curve B = 2L.
///
/// c₁² = 2(K_Y² + 2 L·K_Y + L²), c₂ = 2 e(Y) − e(B), and the independent
/// signature route τ = 2τ(Y) − 2L² must agree with (c₁² − 2c₂)/3; any
/// disagreement signals bad branch data and is an error.
pub fn double_cover(
    base: CoverBase,
    branch: BranchData,
    flags: CoverFlags,
) -> Result<SurfaceInvariants> {
    if branch.branch_euler % 2 != 0 {
        return Err(Error::Inconsistent(format!(
            "branch curve Euler number must be even, got {}",
            branch.branch_euler
        )));
    }
    let l2 = branch.half_class_self_int;
    let lk = branch.half_class_dot_canonical;
    let c1_squared = 2 * (base.canonical_sq + 2 * lk + l2);
    let c2 = 2 * base.euler - branch.branch_euler;
    let tau_cover = 2 * base.signature - 2 * l2;
    if (c1_squared - 2 * c2) % 3 != 0 || (c1_squared - 2 * c2) / 3 != tau_cover {
        return Err(Error::Inconsistent(format!(
            "double cover signature routes disagree: 2 tau(Y) - 2 L^2 = {tau_cover} but (c1^2 - 2 c2)/3 = {}/3",
            c1_squared - 2 * c2
        )));
    }
    if (c1_squared + c2) % 12 != 0 {
        return Err(Error::Inconsistent(format!(
            "double cover data fails Noether divisibility: c1^2 + c2 = {}",
            c1_squared + c2
        )));
    }
    let chi_h = (c1_squared + c2) / 12;
    SurfaceInvariants::new(
        c1_squared,
        c2,
        0,
        chi_h - 1,
        flags.simply_connected,
        flags.spin,
        flags.minimal_general_type,
        flags.ample_canonical,
    )
}

/// Genus and class data of the proper transform D = dH − mE of a plane
/// curve of degree d with one ordinary point of multiplicity m, on the
/// plane blown up at that point.
pub fn proper_transform_genus(d: i64, m: i64) -> Result<(i64, (i64, i64))> {
    if d < 1 || m < 0 || m >= d {
        return Err(Error::Domain(format!(
            "proper transform needs d >= 1 and 0 <= m < d, got d = {d}, m = {m}"
        )));
    }
    let d_sq = d * d - m * m;
    let d_k = -3 * d + m;
    let genus = (d_sq + d_k) / 2 + 1;
    if genus < 0 {
        return Err(Error::NotSmoothable(format!(
            "class {d}H - {m}E has negative genus {genus}"
        )));
    }
    Ok((genus, (d_sq, d_k)))
}

/// Horikawa-type double cover of CP¹ × CP¹ branched over a smooth curve of
/// bidegree (a, b), both even.
pub fn horikawa_p1xp1(a: i64, b: i64) -> Result<SurfaceInvariants> {
    if a < 2 || b < 2 || a % 2 != 0 || b % 2 != 0 {
        return Err(Error::Domain(format!(
            "branch bidegree must be even and >= 2 in each factor, got ({a}, {b})"
        )));
    }
    let genus = (a - 1) * (b - 1);
    let branch = BranchData {
        half_class_self_int: a / 2 * b,
        half_class_dot_canonical: -(a + b),
        branch_euler: 2 - 2 * genus,
    };
    // K of the cover pulls back (a/2 - 2, b/2 - 2): ample iff both positive,
    // spin iff both even.
    let flags = CoverFlags {
        simply_connected: true,
        spin: a % 4 == 0 && b % 4 == 0,
        minimal_general_type: a >= 6 && b >= 6,
        ample_canonical: a >= 6 && b >= 6,
    };
    double_cover(CoverBase::QUADRIC, branch, flags)
}

/// The double cover of the plane blown up at one point, branched over the
/// proper transform of a degree-10 curve with an ordinary 4-fold point.
pub fn horikawa_plane10() -> Result<SurfaceInvariants> {
    let (genus, (d_sq, d_k)) = proper_transform_genus(10, 4)?;
    debug_assert_eq!(genus, 30);
    // L = D/2 = 5H - 2E: quarter of D's numbers.
    let branch = BranchData {
        half_class_self_int: d_sq / 4,
        half_class_dot_canonical: d_k / 2,
        branch_euler: 2 - 2 * genus,
    };
    // K of the cover pulls back K_Y + L = 2H - E: ample, odd.
    let flags = CoverFlags {
        simply_connected: true,
        spin: false,
        minimal_general_type: true,
        ample_canonical: true,
    };
    double_cover(CoverBase::BLOWN_PLANE, branch, flags)
}

/// Parameters of the branched-cover Kodaira fibration: a base curve of
/// genus p ≥ 2 with a fixed-point-free involution, and the degree-n
/// unbranched cover C → B whose two graph copies form the branch locus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KodairaData {
    pub base_genus: i64,
    pub cover_degree: i64,
    /// The construction needs [Σ] divisible by 2 in homology; true for the
    /// index-64 homology cover, supplied (not decided) for other inputs.
    pub class_divisible_by_two: bool,
}

/// Invariants of the double cover M → B × C branched over the two graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaFibration {
    pub data: KodairaData,
    pub top: TopInvariants,
    /// Genus of the curve C.
    pub cover_genus: i64,
    /// Genus of the fiber of M → B.
    pub fiber_genus_over_base: i64,
    /// Genus of the fiber of M → C.
    pub fiber_genus_over_cover: i64,
}

impl KodairaFibration {
    pub fn c1_squared(&self) -> i64 {
        self.top.two_chi_plus_3tau()
    }

    /// τ/χ as an exact rational.
    pub fn rho(&self) -> Rational {
        Rational::new(self.top.signature, self.top.euler)
    }
}

/// Build the Kodaira fibration as a double cover of B × C branched over
/// Σ = graph(f) ∪ graph(ι∘f), and check its Euler number against fiber-bundle
/// multiplicativity.
pub fn kodaira_fibration(data: KodairaData) -> Result<KodairaFibration> {
    let p = data.base_genus;
    let n = data.cover_degree;
    if p < 2 {
        return Err(Error::Domain(format!(
            "Kodaira fibration needs base genus >= 2, got {p}"
        )));
    }
    if n < 1 {
        return Err(Error::Domain(format!("cover degree must be >= 1, got {n}")));
    }
    if !data.class_divisible_by_two {
        return Err(Error::Domain(
            "branch class must be divisible by 2 to form the double cover".into(),
        ));
    }

    let genus_c = n * (p - 1) + 1;
    let euler_b = 2 - 2 * p;
    let euler_c = 2 - 2 * genus_c;
    let euler_product = euler_b * euler_c;
    // Each graph has self-intersection n(2-2p); the two graphs are disjoint.
    let sigma_self_int = 2 * n * euler_b;
    let euler_m = 2 * euler_product - 2 * euler_c;
    let tau_m = -sigma_self_int / 2;

    // Fiber of M -> B: double cover of C branched at 2n points.
    let euler_fiber_b = 2 * euler_c - 2 * n;
    let fiber_genus_over_base = (2 - euler_fiber_b) / 2;
    // Fiber of M -> C: double cover of B branched at 2 points.
    let euler_fiber_c = 2 * euler_b - 2;
    let fiber_genus_over_cover = (2 - euler_fiber_c) / 2;

    // Euler numbers are multiplicative in a fiber bundle.
    if euler_m != euler_b * euler_fiber_b {
        return Err(Error::Inconsistent(format!(
            "Euler number {euler_m} does not match e(base)·e(fiber) = {}",
            euler_b * euler_fiber_b
        )));
    }
    // Independent signature route through the double-cover formula
    // tau = 2 tau(B×C) - 2 (Σ/2)^2.
    let tau_via_cover = -2 * (sigma_self_int / 4);
    if tau_via_cover != tau_m {
        return Err(Error::Inconsistent(format!(
            "signature routes disagree: {tau_via_cover} vs {tau_m}"
        )));
    }

    let top = TopInvariants::new(euler_m, tau_m, None, false, false)?;
    Ok(KodairaFibration {
        data,
        top,
        cover_genus: genus_c,
        fiber_genus_over_base,
        fiber_genus_over_cover,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypersurface_paper_degrees() {
        assert_eq!(hypersurface_p3(6).unwrap().c1_squared, 24);
        assert_eq!(hypersurface_p3(10).unwrap().c1_squared, 360);
        let quartic = hypersurface_p3(4).unwrap();
        assert_eq!((quartic.c1_squared, quartic.c2), (0, 24));
        assert!(quartic.spin && !quartic.minimal_general_type);
    }

    #[test]
    fn hypersurface_rejects_nonpositive_degree() {
        assert!(hypersurface_p3(0).is_err());
    }

    #[test]
    fn chern_series_matches_closed_forms() {
        for d in 1..=12 {
            let closed = hypersurface_p3(d).unwrap();
            let (c1_sq, c2) = chern_numbers_by_series(&[d], 3).unwrap();
            assert_eq!((c1_sq, c2), (closed.c1_squared, closed.c2), "degree {d}");
        }
    }

    #[test]
    fn double_cubic_intersection() {
        let s = complete_intersection(&[3, 3], 4).unwrap();
        assert_eq!(s.c1_squared, 9);
        assert_eq!(s.c2, 63);
        assert_eq!(s.p_g, 5);
        assert!(s.ample_canonical && !s.spin);
    }

    #[test]
    fn single_factor_agrees_with_hypersurface() {
        for d in 1..=12 {
            assert_eq!(
                complete_intersection(&[d], 3).unwrap(),
                hypersurface_p3(d).unwrap()
            );
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        assert!(complete_intersection(&[3, 3], 5).is_err());
        assert!(complete_intersection(&[], 2).is_err());
    }

    #[test]
    fn horikawa_bidegree_6_12() {
        let s = horikawa_p1xp1(6, 12).unwrap();
        assert_eq!((s.c1_squared, s.c2), (16, 116));
        assert_eq!(s.derive_topology().unwrap().signature, -72);
        assert_eq!(s.p_g, 10);
        assert!(s.ample_canonical && !s.spin);
    }

    #[test]
    fn horikawa_bidegree_8_58() {
        let s = horikawa_p1xp1(8, 58).unwrap();
        assert_eq!(s.c1_squared, 216);
        assert_eq!(s.p_g, 84);
        assert_eq!(s.b_plus(), 169);
    }

    #[test]
    fn horikawa_rejects_odd_bidegree() {
        assert!(horikawa_p1xp1(5, 12).is_err());
        assert!(horikawa_p1xp1(6, 1).is_err());
    }

    #[test]
    fn plane_branch_genus() {
        assert_eq!(proper_transform_genus(10, 4).unwrap().0, 30);
        assert_eq!(proper_transform_genus(1, 0).unwrap().0, 0);
        assert_eq!(proper_transform_genus(3, 0).unwrap().0, 1);
        assert!(proper_transform_genus(2, 2).is_err());
    }

    #[test]
    fn plane10_cover_matches_first_example() {
        let s = horikawa_plane10().unwrap();
        assert_eq!((s.c1_squared, s.c2), (6, 66));
        assert_eq!(s.derive_topology().unwrap().signature, -42);
        assert_eq!(s.b_plus(), 11);
    }

    #[test]
    fn inconsistent_branch_data_is_rejected() {
        // Perturb L^2 so the two signature routes disagree.
        let branch = BranchData {
            half_class_self_int: 35,
            half_class_dot_canonical: -18,
            branch_euler: -108,
        };
        let flags = CoverFlags {
            simply_connected: true,
            spin: false,
            minimal_general_type: true,
            ample_canonical: true,
        };
        assert!(double_cover(CoverBase::QUADRIC, branch, flags).is_err());
    }

    #[test]
    fn kodaira_index_64_cover() {
        let k = kodaira_fibration(KodairaData {
            base_genus: 3,
            cover_degree: 64,
            class_divisible_by_two: true,
        })
        .unwrap();
        assert_eq!(k.cover_genus, 129);
        assert_eq!((k.top.euler, k.top.signature), (2560, 256));
        assert_eq!(k.fiber_genus_over_base, 321);
        assert_eq!(k.fiber_genus_over_cover, 6);
        assert!(!k.top.simply_connected);
        assert_eq!(k.rho(), Rational::new(1, 10));
    }

    #[test]
    fn kodaira_small_case_is_consistent() {
        let k = kodaira_fibration(KodairaData {
            base_genus: 2,
            cover_degree: 1,
            class_divisible_by_two: true,
        })
        .unwrap();
        assert_eq!(k.top.signature, 2);
        assert!(k.top.two_chi_plus_3tau() >= 0);
        assert!(k.top.two_chi_minus_3tau() >= 0);
    }

    #[test]
    fn kodaira_rejects_low_genus_and_odd_class() {
        assert!(kodaira_fibration(KodairaData {
            base_genus: 1,
            cover_degree: 2,
            class_divisible_by_two: true,
        })
        .is_err());
        assert!(kodaira_fibration(KodairaData {
            base_genus: 3,
            cover_degree: 2,
            class_divisible_by_two: false,
        })
        .is_err());
    }
}
