//! Property tests for the algebraic identities the crate relies on.

use fourfold::constructors::{
    complete_intersection, horikawa_p1xp1, hypersurface_p3, kodaira_fibration, KodairaData,
};
use fourfold::exact::{Poly, PowerSeries, Rational, RationalFunction};
use fourfold::homeo::{homeo_class, homeomorphic};
use fourfold::invariants::StandardPiece;
use fourfold::sharpness::verify_chern_class_identity;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn series(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    proptest::collection::vec(rational(), order + 1).prop_map(PowerSeries::from_coeffs)
}

fn unit_series(order: usize) -> impl Strategy<Value = PowerSeries<Rational>> {
    proptest::collection::vec(rational(), order).prop_map(|mut tail| {
        let mut coeffs = vec![Rational::one()];
        coeffs.append(&mut tail);
        PowerSeries::from_coeffs(coeffs)
    })
}

fn poly(max_deg: usize) -> impl Strategy<Value = Poly<Rational>> {
    proptest::collection::vec(rational(), 1..=max_deg + 1).prop_map(Poly::from_coeffs)
}

proptest! {
    #[test]
    fn sqrt_squares_back(s in (1usize..=6).prop_flat_map(unit_series)) {
        let root = s.sqrt().unwrap();
        prop_assert_eq!(root.mul(&root), s);
    }

    #[test]
    fn laurent_expansion_recomposes(
        num in poly(4),
        den in poly(3),
        pole in 0usize..=2,
        order in 1usize..=5,
    ) {
        prop_assume!(!den.is_zero());
        prop_assume!(den.coeff(0) != Rational::zero());
        let den = den.mul_xk(pole);
        let f = RationalFunction::new(num.clone(), den.clone()).unwrap();
        // Reduction may cancel part of the pole; expand at the order the
        // stored denominator actually has.
        let actual_pole = f.denominator().ord().unwrap();
        let (lead, series) = f.laurent_expand(actual_pole, order).unwrap();
        prop_assert_eq!(lead, -(actual_pole as i64));
        // eps^(-k) * series * denominator = numerator up to the order the
        // series can see.
        let den_series = f.denominator().div_xk(actual_pole).unwrap().to_series(order);
        let recomposed = series.mul(&den_series);
        let num_series = f.numerator().to_series(order);
        prop_assert_eq!(recomposed.coeffs(), num_series.coeffs());
    }

    #[test]
    fn series_ring_laws(a in series(4), b in series(4), c in series(4)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn poly_ring_laws(a in poly(4), b in poly(4), c in poly(4)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn rationals_stay_reduced(n in -4000i64..=4000, d in 1i64..=4000) {
        let r = Rational::new(n, d);
        let g = r.numerator().gcd(r.denominator());
        prop_assert!(r.is_zero() || g == BigInt::from(1));
        prop_assert!(r.denominator() > &BigInt::from(0));
    }

    #[test]
    fn noether_holds_for_every_construction(d in 1i64..=20, k in 1i64..=50) {
        let x = hypersurface_p3(d).unwrap();
        prop_assert_eq!(x.c1_squared + x.c2, 12 * x.holomorphic_euler());
        let t = x.derive_topology().unwrap();
        prop_assert_eq!(t.two_chi_plus_3tau(), x.c1_squared);
        prop_assert!(t.b2().unwrap() >= t.signature.abs());

        let blown = x.blow_up(k).unwrap();
        prop_assert_eq!(blown.c1_squared + blown.c2, 12 * blown.holomorphic_euler());
        prop_assert_eq!(
            blown.derive_topology().unwrap().two_chi_plus_3tau(),
            x.c1_squared - k
        );
    }

    #[test]
    fn noether_holds_for_covers(a in 1i64..=12, b in 1i64..=30) {
        let (a, b) = (2 * a, 2 * b);
        let s = horikawa_p1xp1(a, b).unwrap();
        prop_assert_eq!(s.c1_squared + s.c2, 12 * s.holomorphic_euler());
        prop_assert_eq!(s.derive_topology().unwrap().two_chi_plus_3tau(), s.c1_squared);
    }

    #[test]
    fn complete_intersections_are_consistent(
        degs in proptest::collection::vec(1i64..=6, 1..=3),
        k in 1i64..=20,
    ) {
        let x = complete_intersection(&degs, degs.len() + 2).unwrap();
        prop_assert_eq!(x.c1_squared + x.c2, 12 * x.holomorphic_euler());
        let blown = x.blow_up(k).unwrap();
        prop_assert_eq!(blown.c1_squared + blown.c2, 12 * blown.holomorphic_euler());
    }

    #[test]
    fn kodaira_double_routes_agree(p in 2i64..=6, n in 1i64..=40) {
        let k = kodaira_fibration(KodairaData {
            base_genus: p,
            cover_degree: n,
            class_divisible_by_two: true,
        }).unwrap();
        // signature route via the intersection form equals the cover route,
        // and Euler multiplicativity held inside the constructor.
        prop_assert_eq!(k.top.signature, n * (2 * p - 2));
        prop_assert_eq!(
            k.top.euler,
            (2 - 2 * p) * (2 - 2 * k.fiber_genus_over_base)
        );
    }

    #[test]
    fn chern_identity_on_random_fibration_geometry(
        p in 2i64..=6,
        q in 2i64..=40,
        tau in -300i64..=300,
    ) {
        // chi consistent with a fibration of base genus p and fiber genus q.
        let chi = (2 * p - 2) * (2 * q - 2);
        prop_assert!(verify_chern_class_identity(p, q, chi, tau).unwrap());
    }

    #[test]
    fn homeo_class_ignores_sum_association(
        picks in proptest::collection::vec(0usize..=2, 2..=8),
    ) {
        let pieces = [StandardPiece::Cp2, StandardPiece::Cp2Bar, StandardPiece::S2xS2];
        // left fold
        let mut left = pieces[picks[0]].invariants();
        for &i in &picks[1..] {
            left = left.connected_sum(&pieces[i].invariants()).unwrap();
        }
        // right fold
        let mut right = pieces[*picks.last().unwrap()].invariants();
        for &i in picks[..picks.len() - 1].iter().rev() {
            right = pieces[i].invariants().connected_sum(&right).unwrap();
        }
        prop_assert!(homeomorphic(&left, &right).unwrap());
        prop_assert_eq!(homeo_class(&left).unwrap(), homeo_class(&right).unwrap());
    }
}
