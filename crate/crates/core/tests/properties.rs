//! Property suites over random inputs.

mod common;

use common::*;
use nc_curves::algebra::{AlgebraElement, AlgebraTag, Automorphism};
use nc_curves::ktheory::{euler_form, ClassVector};
use nc_curves::skew_series::{parse_twist, verify_jordan_twist};
use nc_curves::weighted_curve::CurveClass;
use num_traits::Zero;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quaternion_norm_is_multiplicative(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(a.multiply(&b).unwrap().norm(), a.norm() * b.norm());
    }

    #[test]
    fn quaternion_inverse_laws(a in quaternion()) {
        prop_assume!(!a.is_zero());
        let inv = a.invert().unwrap();
        let one = AlgebraElement::one(AlgebraTag::Quaternion);
        prop_assert_eq!(a.multiply(&inv).unwrap(), one.clone());
        prop_assert_eq!(inv.multiply(&a).unwrap(), one);
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn conjugation_reverses_products(a in quaternion(), b in quaternion()) {
        prop_assert_eq!(a.multiply(&b).unwrap().conjugate(), b.conjugate().multiply(&a.conjugate()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn series_product_is_associative((f, g, h) in series_triple(8)) {
        let left = f.multiply(&g).unwrap().multiply(&h).unwrap();
        let right = f.multiply(&g.multiply(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn valuation_is_multiplicative((f, g) in series_pair(8)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let (lf, lg) = (f.leading_exponent().unwrap(), g.leading_exponent().unwrap());
        prop_assume!(lf + lg < 8);
        let fg = f.multiply(&g).unwrap();
        prop_assert_eq!(fg.valuation().unwrap(), f.valuation().unwrap() * g.valuation().unwrap());
    }

    #[test]
    fn series_distributes((f, g) in series_pair(8)) {
        let sum = f.add(&g).unwrap();
        let lhs = sum.multiply(&f).unwrap();
        let rhs = f.multiply(&f).unwrap().add(&g.multiply(&f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn jordan_twist_identity() {
    for (tag, name) in TWISTS {
        let sigma = parse_twist(tag, name).unwrap();
        for n in 1..=5 {
            assert!(verify_jordan_twist(tag, &sigma, n).unwrap(), "{name} on {tag:?}, n = {n}");
        }
    }
}

#[test]
fn jordan_twist_detects_a_wrong_twist() {
    // diag(a, σ(a), …) built with σ but commuted past J as if σ were id
    let conj = Automorphism::conjugation();
    assert!(verify_jordan_twist(AlgebraTag::Complex, &conj, 3).unwrap());
    assert!(verify_jordan_twist(AlgebraTag::Quaternion, &conj, 3).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn euler_characteristic_consistency(w in witt_surface(4)) {
        let (chi, chi_norm) = w.euler_characteristics().unwrap();
        let s = w.skewness() as i64;
        prop_assert_eq!(&chi / nc_curves::algebra::int(s * s), chi_norm.clone());
        let n = w.segmentation_points() as i64;
        prop_assert_eq!(chi_norm, w.chi_centre() - nc_curves::algebra::rat(n, 4));
    }

    #[test]
    fn euler_routes_agree(c in weighted_curve()) {
        let r = c.euler_routes().unwrap();
        prop_assert!(r.thurston.is_some());
        prop_assert!(r.all_agree(), "{:?}", r);
        let class = c.classify().unwrap();
        if class == CurveClass::Tubular {
            prop_assert!([1, 2, 3, 4, 6].contains(&c.tau_order().unwrap()));
        }
    }

    #[test]
    fn weights_only_lower_the_characteristic(c in weighted_curve()) {
        let base = c.chi_nonweighted().unwrap();
        prop_assert!(c.orbifold_euler().unwrap() <= base);
    }
}

proptest! {
    #[test]
    fn euler_form_is_bilinear(
        n in numerics(),
        (a, b, c) in (class_vector(), class_vector(), class_vector()),
        (x, y) in (-5i64..=5, -5i64..=5),
    ) {
        let comb = ClassVector::new(x * a.degree + y * b.degree, x * a.rank + y * b.rank);
        prop_assert_eq!(euler_form(comb, c, &n), x * euler_form(a, c, &n) + y * euler_form(b, c, &n));
        prop_assert_eq!(euler_form(c, comb, &n), x * euler_form(c, a, &n) + y * euler_form(c, b, &n));
    }

    #[test]
    fn canonical_key_is_invariant(c in weighted_curve()) {
        let mut reversed = c.clone();
        reversed.points.reverse();
        prop_assert_eq!(reversed.canonical_key(), c.canonical_key());
        prop_assert!(c.orbifold_euler().unwrap() == reversed.orbifold_euler().unwrap());
        prop_assert!(!c.chi_centre().is_zero() || c.centre_genus().unwrap() == 1);
    }
}
