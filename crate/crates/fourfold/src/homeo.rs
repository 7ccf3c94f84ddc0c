//! Homeomorphism classification of simply-connected 4-manifolds and the
//! search for homeomorphic pairs where exactly one side admits Einstein
//! metrics.
//!
//! A simply-connected 4-manifold is determined up to homeomorphism by the
//! rank, signature, and parity of its intersection form. Odd classes render
//! as connected sums of projective planes; even classes are represented but
//! only rendered abstractly as (b₊, b₋, even).

use crate::constructors::{complete_intersection, horikawa_p1xp1, horikawa_plane10, hypersurface_p3};
use crate::error::{Error, Result};
use crate::invariants::{SurfaceInvariants, TopInvariants};
use crate::obstructions::{einstein_obstruction, Threshold};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Freedman class of a simply-connected 4-manifold with b₂ ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomeoClass {
    pub b_plus: i64,
    pub b_minus: i64,
    pub parity: Parity,
}

impl std::fmt::Display for HomeoClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.parity {
            Parity::Odd => match (self.b_plus, self.b_minus) {
                (p, 0) => write!(f, "{p} CP2"),
                (0, m) => write!(f, "{m} CP2bar"),
                (p, m) => write!(f, "{p} CP2 # {m} CP2bar"),
            },
            Parity::Even => write!(f, "({}, {}, even)", self.b_plus, self.b_minus),
        }
    }
}

/// The intersection-form data (b₊, b₋, parity) of a simply-connected
/// 4-manifold. Spin manifolds give the even form, with the Rokhlin
/// consistency check that the signature is divisible by 16.
pub fn homeo_class(t: &TopInvariants) -> Result<HomeoClass> {
    if !t.simply_connected {
        return Err(Error::NotClassifiable(
            "classification by intersection form needs a simply connected manifold".into(),
        ));
    }
    let b2 = t.b2().ok_or_else(|| {
        Error::NotClassifiable("b1 unknown, so b2 cannot be computed".into())
    })?;
    if b2 < 1 {
        return Err(Error::NotClassifiable(format!("b2 = {b2} < 1")));
    }
    let parity = if t.spin { Parity::Even } else { Parity::Odd };
    if parity == Parity::Even && t.signature % 16 != 0 {
        return Err(Error::Inconsistent(format!(
            "spin manifold with signature {} not divisible by 16 (Rokhlin)",
            t.signature
        )));
    }
    Ok(HomeoClass {
        b_plus: t.b_plus().unwrap(),
        b_minus: t.b_minus().unwrap(),
        parity,
    })
}

/// True exactly when the two manifolds have equal Freedman classes.
pub fn homeomorphic(a: &TopInvariants, b: &TopInvariants) -> Result<bool> {
    Ok(homeo_class(a)? == homeo_class(b)?)
}

/// A documented conflict between this crate's derived class and a value
/// printed in earlier accounts of the same construction.
pub fn known_class_discrepancy(class: &HomeoClass) -> Option<&'static str> {
    if *class
        == (HomeoClass {
            b_plus: 169,
            b_minus: 633,
            parity: Parity::Odd,
        })
    {
        Some(
            "earlier accounts print this class as 129 CP2 # 633 CP2bar, but p_g = 84 \
             forces b_plus = 1 + 2 p_g = 169; the derived value is reported",
        )
    } else {
        None
    }
}

/// The base surface whose blow-up provides the obstructed side of a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseSurface {
    Hypersurface(i64),
    CompleteIntersection(Vec<i64>),
}

impl BaseSurface {
    pub fn build(&self) -> Result<SurfaceInvariants> {
        match self {
            BaseSurface::Hypersurface(d) => hypersurface_p3(*d),
            BaseSurface::CompleteIntersection(degs) => {
                complete_intersection(degs, degs.len() + 2)
            }
        }
    }
}

impl std::fmt::Display for BaseSurface {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseSurface::Hypersurface(d) => write!(f, "{d}"),
            BaseSurface::CompleteIntersection(degs) => {
                let joined: Vec<String> = degs.iter().map(|d| d.to_string()).collect();
                write!(f, "ci({})", joined.join(";"))
            }
        }
    }
}

/// The Einstein side of a pair: a minimal surface with ample canonical
/// class, which carries a Kähler-Einstein metric by the Aubin/Yau fact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EinsteinPartner {
    HorikawaP1xP1(i64, i64),
    HorikawaPlane10,
}

impl EinsteinPartner {
    pub fn build(&self) -> Result<SurfaceInvariants> {
        match self {
            EinsteinPartner::HorikawaP1xP1(a, b) => horikawa_p1xp1(*a, *b),
            EinsteinPartner::HorikawaPlane10 => horikawa_plane10(),
        }
    }

    pub fn bidegree(&self) -> Option<(i64, i64)> {
        match self {
            EinsteinPartner::HorikawaP1xP1(a, b) => Some((*a, *b)),
            EinsteinPartner::HorikawaPlane10 => None,
        }
    }
}

impl std::fmt::Display for EinsteinPartner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EinsteinPartner::HorikawaP1xP1(a, b) => write!(f, "horikawa_p1xp1({a},{b})"),
            EinsteinPartner::HorikawaPlane10 => write!(f, "horikawa_plane10"),
        }
    }
}

/// Parameter grid for the pair search. Ranges are inclusive; empty or
/// absent ranges contribute nothing.
#[derive(Clone, Debug, Default)]
pub struct SearchSpace {
    pub hypersurface_degrees: Option<(i64, i64)>,
    pub ci_degree_sets: Vec<Vec<i64>>,
    pub blowups: Option<(i64, i64)>,
    pub bidegree_a: Option<(i64, i64)>,
    pub bidegree_b: Option<(i64, i64)>,
    pub include_plane_preset: bool,
}

/// One homeomorphic pair: an obstructed blow-up and a Kähler-Einstein
/// partner in the same Freedman class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRecord {
    pub base: BaseSurface,
    pub blowups: i64,
    pub partner: EinsteinPartner,
    pub class: HomeoClass,
    pub euler: i64,
    pub signature: i64,
}

fn range_iter(range: Option<(i64, i64)>) -> impl Iterator<Item = i64> {
    let (lo, hi) = range.unwrap_or((1, 0));
    lo..=hi
}

/// Scan the grid for pairs: the first side is a blow-up obstructed at
/// threshold 1/3, the second a minimal surface with ample canonical class,
/// and the two Freedman classes agree. Iteration order is lexicographic in
/// the parameters (hypersurface degrees, then listed complete intersections;
/// blow-up counts ascending; partners by bidegree, plane preset last), so
/// the output is deterministic.
pub fn find_pairs(space: &SearchSpace) -> Result<Vec<PairRecord>> {
    let mut partners: Vec<(EinsteinPartner, SurfaceInvariants, HomeoClass)> = Vec::new();
    for a in range_iter(space.bidegree_a) {
        for b in range_iter(space.bidegree_b) {
            if a % 2 != 0 || b % 2 != 0 {
                continue; // only even bidegrees bound a double cover
            }
            let surface = horikawa_p1xp1(a, b)?;
            if !surface.ample_canonical {
                continue;
            }
            let class = homeo_class(&surface.derive_topology()?)?;
            partners.push((EinsteinPartner::HorikawaP1xP1(a, b), surface, class));
        }
    }
    if space.include_plane_preset {
        let surface = horikawa_plane10()?;
        let class = homeo_class(&surface.derive_topology()?)?;
        partners.push((EinsteinPartner::HorikawaPlane10, surface, class));
    }

    let mut bases: Vec<BaseSurface> = range_iter(space.hypersurface_degrees)
        .map(BaseSurface::Hypersurface)
        .collect();
    bases.extend(
        space
            .ci_degree_sets
            .iter()
            .cloned()
            .map(BaseSurface::CompleteIntersection),
    );

    let mut pairs = Vec::new();
    for base in &bases {
        let x = base.build()?;
        for k in range_iter(space.blowups) {
            let obstructed = match einstein_obstruction(&x, k, Threshold::OneThird) {
                Ok(v) => v.outcome.obstructed(),
                Err(Error::NotApplicable(_)) => false,
                Err(e) => return Err(e),
            };
            if !obstructed {
                continue;
            }
            let blown = x.derive_topology()?.blow_up(k)?;
            let class = homeo_class(&blown)?;
            for (partner, _, partner_class) in &partners {
                if *partner_class == class {
                    pairs.push(PairRecord {
                        base: base.clone(),
                        blowups: k,
                        partner: *partner,
                        class: class.clone(),
                        euler: blown.euler,
                        signature: blown.signature,
                    });
                }
            }
        }
    }
    Ok(pairs)
}
