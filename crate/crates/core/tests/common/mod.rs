//! Random generators shared by the property and acceptance suites.
#![allow(dead_code)]

use nc_curves::algebra::{rat, AlgebraElement, AlgebraTag, Automorphism, Rational};
use nc_curves::ktheory::{ClassVector, CurveNumerics};
use nc_curves::skew_series::{parse_twist, TwistedSeries};
use nc_curves::weighted_curve::{Placement, WeightedCurve, WeightedPoint};
use nc_curves::witt_surface::{KleinTopology, Oval, Sign, WittSurface};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn element(tag: AlgebraTag) -> impl Strategy<Value = AlgebraElement> {
    proptest::collection::vec(rational(), tag.dim()).prop_map(move |c| AlgebraElement::new(tag, c).unwrap())
}

pub fn quaternion() -> impl Strategy<Value = AlgebraElement> {
    element(AlgebraTag::Quaternion)
}

/// The built-in twisted rings by (algebra, twist name).
pub const TWISTS: [(AlgebraTag, &str); 7] = [
    (AlgebraTag::Real, "id"),
    (AlgebraTag::Complex, "id"),
    (AlgebraTag::Complex, "conj"),
    (AlgebraTag::Quaternion, "id"),
    (AlgebraTag::Quaternion, "inner-i"),
    (AlgebraTag::Quaternion, "inner-j"),
    (AlgebraTag::Quaternion, "inner-ij"),
];

pub fn twist() -> impl Strategy<Value = Automorphism> {
    (0..TWISTS.len()).prop_map(|i| parse_twist(TWISTS[i].0, TWISTS[i].1).unwrap())
}

pub fn series(sigma: Automorphism, truncation: usize) -> impl Strategy<Value = TwistedSeries> {
    let tag = sigma.tag();
    (0i64..3, proptest::collection::vec(element(tag), 1..6))
        .prop_map(move |(low, c)| TwistedSeries::new(sigma.clone(), truncation, low, c).unwrap())
}

pub fn series_pair(truncation: usize) -> impl Strategy<Value = (TwistedSeries, TwistedSeries)> {
    twist().prop_flat_map(move |s| (series(s.clone(), truncation), series(s, truncation)))
}

pub fn series_triple(truncation: usize) -> impl Strategy<Value = (TwistedSeries, TwistedSeries, TwistedSeries)> {
    twist().prop_flat_map(move |s| (series(s.clone(), truncation), series(s.clone(), truncation), series(s, truncation)))
}

fn oval() -> impl Strategy<Value = Oval> {
    prop_oneof![
        Just(Oval::Whole(Sign::Plus)),
        Just(Oval::Whole(Sign::Minus)),
        (1usize..=3).prop_map(|k| Oval::alternating(2 * k)),
    ]
}

/// Valid real surfaces (Klein or Witt) with g(X) ≤ max_g.
pub fn real_surface(max_g: u32) -> impl Strategy<Value = WittSurface> {
    (0..=max_g, 0u32..=1)
        .prop_flat_map(|(g, s)| (Just(g), Just(s), 0..=g + 1))
        .prop_flat_map(|(g, s, t)| (Just(KleinTopology::new(g, t, s)), proptest::collection::vec(oval(), t as usize)))
        .prop_filter_map("invalid surface", |(top, ovals)| {
            let w = WittSurface::from_signs(top, ovals);
            w.validate().is_ok().then_some(w)
        })
}

pub fn witt_surface(max_g: u32) -> impl Strategy<Value = WittSurface> {
    real_surface(max_g).prop_filter("Klein surface", WittSurface::is_witt)
}

/// Raw weight requests; each is turned into a placement on the surface.
fn request() -> impl Strategy<Value = (u8, usize, usize, u32)> {
    (0u8..3, 0usize..8, 0usize..8, 2u32..=9)
}

pub fn place(w: &WittSurface, req: &[(u8, usize, usize, u32)]) -> Vec<WeightedPoint> {
    let mut out: Vec<WeightedPoint> = Vec::new();
    for &(kind, a, b, p) in req {
        let pl = match kind {
            1 if !w.ovals.is_empty() => {
                let oval = a % w.ovals.len();
                let n = w.ovals[oval].segment_count();
                Placement::Boundary {
                    oval,
                    segment: (n > 0).then(|| b % n),
                }
            }
            2 if w.segmentation_points() > 0 => {
                let marked: Vec<usize> = (0..w.ovals.len()).filter(|&o| w.ovals[o].segment_count() > 0).collect();
                let oval = marked[a % marked.len()];
                let point = b % w.ovals[oval].segment_count();
                Placement::Segmentation { oval, point }
            }
            _ => Placement::Inner,
        };
        if matches!(pl, Placement::Segmentation { .. }) && out.iter().any(|q| q.placement == pl) {
            continue;
        }
        out.push(WeightedPoint::new(pl, p));
    }
    out
}

pub fn weighted_curve() -> impl Strategy<Value = WeightedCurve> {
    let surface = prop_oneof![
        4 => real_surface(3),
        1 => (0u32..=2).prop_map(WittSurface::complex_curve),
    ];
    (surface, proptest::collection::vec(request(), 0..5)).prop_map(|(w, req)| {
        let pts = place(&w, &req);
        WeightedCurve::on_surface(w, pts).unwrap()
    })
}

pub fn class_vector() -> impl Strategy<Value = ClassVector> {
    (-20i64..=20, -20i64..=20).prop_map(|(d, r)| ClassVector::new(d, r))
}

pub fn numerics() -> impl Strategy<Value = CurveNumerics> {
    (1u32..=4, 1u32..=2, 0u32..=3).prop_map(|(kappa, epsilon, genus)| CurveNumerics {
        kappa,
        epsilon,
        genus,
        deg_s: 1,
        end_s_dim: kappa,
    })
}
