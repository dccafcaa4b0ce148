//! Weighted curves: weight insertion, orbifold Euler characteristics,
//! weight-ramification vectors, classification, τ-order, Picard data and
//! ghost groups.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{fmt_rational, int, rat, DivisionAlgebraKind, Rational};
use crate::error::{Error, Result, ValidationError};
use crate::local_data::{
    complex_point_datum, degree_of_simple, klein_local_datum, skewness, witt_local_datum, PointDatum,
    WittPointClass,
};
use crate::witt_surface::{catalog, numerical_type, BaseField, Oval, Sign, WittSurface};

/// Where a weight sits on the base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Placement {
    /// A point off the boundary (or any point of a curve over ℂ).
    Inner,
    /// A non-marked boundary point; `segment` is `None` on unsegmented ovals.
    Boundary { oval: usize, segment: Option<usize> },
    /// One of the marked (sign-changing) points of an oval.
    Segmentation { oval: usize, point: usize },
    /// A point of an abstract base, by index into its point list.
    Abstract { index: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedPoint {
    pub placement: Placement,
    pub weight: u32,
}

impl WeightedPoint {
    pub fn new(placement: Placement, weight: u32) -> Self {
        WeightedPoint { placement, weight }
    }
}

/// Base data for curves not modelled by a real surface, e.g. over finite
/// fields or number fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractBase {
    pub name: String,
    /// χ(X) = 1 − g(X) of the centre curve.
    pub chi_x: Rational,
    pub s: u32,
    pub kappa: u32,
    pub epsilon: Option<u32>,
    /// Genus of the non-weighted curve, if known independently.
    pub genus: Option<u32>,
    pub points: Vec<PointDatum>,
    /// Whether X has a rational point outside the listed points.
    pub free_rational_point: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Base {
    Surface(WittSurface),
    Abstract(AbstractBase),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCurve {
    pub base: Base,
    pub points: Vec<WeightedPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveClass {
    Domestic,
    Elliptic,
    Tubular,
    Wild,
}

impl CurveClass {
    pub fn name(self) -> &'static str {
        match self {
            CurveClass::Domestic => "DOMESTIC",
            CurveClass::Elliptic => "ELLIPTIC",
            CurveClass::Tubular => "TUBULAR",
            CurveClass::Wild => "WILD",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "DOMESTIC" => Some(CurveClass::Domestic),
            "ELLIPTIC" => Some(CurveClass::Elliptic),
            "TUBULAR" => Some(CurveClass::Tubular),
            "WILD" => Some(CurveClass::Wild),
            _ => None,
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TubularType {
    T236,
    T244,
    T333,
    T2222,
}

impl TubularType {
    pub fn of(v: &[u32]) -> Option<Self> {
        match v {
            [2, 3, 6] => Some(TubularType::T236),
            [2, 4, 4] => Some(TubularType::T244),
            [3, 3, 3] => Some(TubularType::T333),
            [2, 2, 2, 2] => Some(TubularType::T2222),
            _ => None,
        }
    }

    pub fn vector(self) -> &'static [u32] {
        match self {
            TubularType::T236 => &[2, 3, 6],
            TubularType::T244 => &[2, 4, 4],
            TubularType::T333 => &[3, 3, 3],
            TubularType::T2222 => &[2, 2, 2, 2],
        }
    }
}

/// Domestic weight types; (p) and (p,q) are told apart by length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomesticType {
    Empty,
    P,
    PQ,
    TwoTwoN,
    E6,
    E7,
    E8,
}

impl DomesticType {
    pub fn of(v: &[u32]) -> Option<Self> {
        match v {
            [] => Some(DomesticType::Empty),
            [_] => Some(DomesticType::P),
            [_, _] => Some(DomesticType::PQ),
            [2, 2, _] => Some(DomesticType::TwoTwoN),
            [2, 3, 3] => Some(DomesticType::E6),
            [2, 3, 4] => Some(DomesticType::E7),
            [2, 3, 5] => Some(DomesticType::E8),
            _ => None,
        }
    }

    pub fn pattern(self) -> &'static str {
        match self {
            DomesticType::Empty => "()",
            DomesticType::P => "(p)",
            DomesticType::PQ => "(p,q)",
            DomesticType::TwoTwoN => "(2,2,n)",
            DomesticType::E6 => "(2,3,3)",
            DomesticType::E7 => "(2,3,4)",
            DomesticType::E8 => "(2,3,5)",
        }
    }
}

/// A point contributing to the local sums: every weighted point, every
/// unweighted ramification point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialPoint {
    pub label: String,
    pub class: &'static str,
    pub datum: PointDatum,
    pub weighted: bool,
}

impl SpecialPoint {
    pub fn value(&self) -> u32 {
        self.datum.local_value()
    }
}

/// χ'_orb computed along each available route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerRoutes {
    pub general: Rational,
    pub weights_split: Rational,
    pub thurston: Option<Rational>,
    pub genus_zero: Option<Rational>,
}

impl EulerRoutes {
    pub fn all_agree(&self) -> bool {
        self.general == self.weights_split
            && self.thurston.as_ref().is_none_or(|t| *t == self.general)
            && self.genus_zero.as_ref().is_none_or(|t| *t == self.general)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PicardDescriptor {
    pub base_part: String,
    pub torsion_quotient: Vec<u32>,
    pub finitely_generated_rank_one: bool,
    /// Degree-zero part where it is known in closed form.
    pub degree_zero_part: Option<Vec<u32>>,
}

/// Word τ = σ_{x0}^{a} · ∏ σ_x^{b_x} on a curve with genus-zero centre.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauWord {
    pub x0_exponent: i64,
    pub factors: Vec<(String, u32)>,
}

impl fmt::Display for TauWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ_x0^{}", self.x0_exponent)?;
        for (l, e) in &self.factors {
            write!(f, " · σ_{l}^{e}")?;
        }
        Ok(())
    }
}

fn half() -> Rational {
    rat(1, 2)
}

fn one_minus_inv(n: u32) -> Rational {
    Rational::one() - rat(1, n as i64)
}

impl WeightedCurve {
    pub fn new(base: Base, points: Vec<WeightedPoint>) -> Result<Self> {
        let c = WeightedCurve { base, points };
        c.validate()?;
        Ok(c)
    }

    pub fn on_surface(surface: WittSurface, points: Vec<WeightedPoint>) -> Result<Self> {
        Self::new(Base::Surface(surface), points)
    }

    /// Catalog surface with weights.
    pub fn catalog(name: &str, points: Vec<WeightedPoint>) -> Result<Self> {
        Self::on_surface(catalog(name)?, points)
    }

    pub fn surface(&self) -> Option<&WittSurface> {
        match &self.base {
            Base::Surface(w) => Some(w),
            Base::Abstract(_) => None,
        }
    }

    pub fn base_name(&self) -> String {
        match &self.base {
            Base::Surface(w) => w.to_string(),
            Base::Abstract(a) => a.name.clone(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match &self.base {
            Base::Surface(w) => w.validate()?,
            Base::Abstract(a) => validate_abstract(a)?,
        }
        let mut marked = Vec::new();
        for p in &self.points {
            if p.weight < 2 {
                return Err(ValidationError::WeightTooSmall(p.weight).into());
            }
            self.placement_datum(&p.placement)?;
            if matches!(p.placement, Placement::Segmentation { .. } | Placement::Abstract { .. }) {
                if marked.contains(&p.placement) {
                    return Err(ValidationError::Placement(format!(
                        "{:?} carries two weights",
                        p.placement
                    ))
                    .into());
                }
                marked.push(p.placement);
            }
        }
        Ok(())
    }

    /// Local datum (weight 1) and class name of a placement.
    pub fn placement_datum(&self, pl: &Placement) -> Result<(PointDatum, &'static str)> {
        let bad = |msg: String| -> Error { ValidationError::Placement(msg).into() };
        match (&self.base, pl) {
            (Base::Abstract(a), Placement::Abstract { index }) => a
                .points
                .get(*index)
                .map(|d| (d.clone().with_weight(1), "point"))
                .ok_or_else(|| bad(format!("no point {index} on {}", a.name))),
            (Base::Abstract(a), _) => Err(bad(format!("{} only has indexed points", a.name))),
            (Base::Surface(_), Placement::Abstract { .. }) => {
                Err(bad("indexed points need an abstract base".into()))
            }
            (Base::Surface(w), Placement::Inner) => Ok(match w.base_field {
                BaseField::Complex => (complex_point_datum(), "inner"),
                BaseField::Real if w.is_witt() => (witt_local_datum(WittPointClass::Inner), "inner"),
                BaseField::Real => (klein_local_datum(true), "inner"),
            }),
            (Base::Surface(w), Placement::Boundary { oval, segment }) => {
                let o = w
                    .ovals
                    .get(*oval)
                    .ok_or_else(|| bad(format!("no oval {oval}")))?;
                let sign = match (o, segment) {
                    (Oval::Whole(s), None) => *s,
                    (Oval::Segmented(v), Some(i)) => *v
                        .get(*i)
                        .ok_or_else(|| bad(format!("oval {oval} has no segment {i}")))?,
                    (Oval::Whole(_), Some(_)) => {
                        return Err(bad(format!("oval {oval} is not segmented")))
                    }
                    (Oval::Segmented(_), None) => {
                        return Err(bad(format!("oval {oval} needs a segment index")))
                    }
                };
                Ok(match (w.is_witt(), sign) {
                    (false, _) => (klein_local_datum(false), "boundary"),
                    (true, Sign::Plus) => (witt_local_datum(WittPointClass::RealBoundary), "real"),
                    (true, Sign::Minus) => {
                        (witt_local_datum(WittPointClass::QuaternionBoundary), "quaternion")
                    }
                })
            }
            (Base::Surface(w), Placement::Segmentation { oval, point }) => {
                let n = w.ovals.get(*oval).map_or(0, Oval::segment_count);
                if *point >= n {
                    return Err(bad(format!("oval {oval} has no segmentation point {point}")));
                }
                Ok((witt_local_datum(WittPointClass::Segmentation), "seg"))
            }
        }
    }

    fn label(&self, i: usize, pl: &Placement, class: &str) -> String {
        match pl {
            Placement::Inner => format!("{class}#{i}"),
            Placement::Boundary { oval, segment: None } => format!("{class}[{oval}]#{i}"),
            Placement::Boundary {
                oval,
                segment: Some(s),
            } => format!("{class}[{oval}.{s}]#{i}"),
            Placement::Segmentation { oval, point } => format!("seg[{oval}.{point}]"),
            Placement::Abstract { index } => format!("x{index}"),
        }
    }

    /// Weighted points followed by unweighted ramification points.
    pub fn special_points(&self) -> Result<Vec<SpecialPoint>> {
        let mut out = Vec::new();
        for (i, p) in self.points.iter().enumerate() {
            let (d, class) = self.placement_datum(&p.placement)?;
            out.push(SpecialPoint {
                label: self.label(i, &p.placement, class),
                class,
                datum: d.with_weight(p.weight),
                weighted: true,
            });
        }
        let taken = |pl: Placement| self.points.iter().any(|p| p.placement == pl);
        match &self.base {
            Base::Surface(w) => {
                for (oval, o) in w.ovals.iter().enumerate() {
                    for point in 0..o.segment_count() {
                        let pl = Placement::Segmentation { oval, point };
                        if !taken(pl) {
                            out.push(SpecialPoint {
                                label: self.label(0, &pl, "seg"),
                                class: "seg",
                                datum: witt_local_datum(WittPointClass::Segmentation),
                                weighted: false,
                            });
                        }
                    }
                }
            }
            Base::Abstract(a) => {
                for (index, d) in a.points.iter().enumerate() {
                    let pl = Placement::Abstract { index };
                    if d.e_tau > 1 && !taken(pl) {
                        out.push(SpecialPoint {
                            label: self.label(0, &pl, "point"),
                            class: "point",
                            datum: d.clone().with_weight(1),
                            weighted: false,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// p̄: lcm of all weights.
    pub fn pbar(&self) -> u32 {
        self.points.iter().fold(1, |acc, p| acc.lcm(&p.weight))
    }

    pub fn kappa(&self) -> u32 {
        match &self.base {
            Base::Surface(w) => w.kappa(),
            Base::Abstract(a) => a.kappa,
        }
    }

    pub fn skewness(&self) -> u32 {
        match &self.base {
            Base::Surface(w) => w.skewness(),
            Base::Abstract(a) => a.s,
        }
    }

    /// ε, when known for this base.
    pub fn epsilon(&self) -> Option<u32> {
        match &self.base {
            Base::Surface(w) => w.catalog_name().and_then(|n| numerical_type(n).ok()),
            Base::Abstract(a) => a.epsilon,
        }
    }

    /// χ(X) of the centre curve.
    pub fn chi_centre(&self) -> Rational {
        match &self.base {
            Base::Surface(w) => w.chi_centre(),
            Base::Abstract(a) => a.chi_x.clone(),
        }
    }

    pub fn centre_genus(&self) -> Result<u32> {
        let g = Rational::one() - self.chi_centre();
        if !g.is_integer() || g.is_negative() {
            return Err(Error::InconsistentData(format!("χ(X) = {} gives no genus", self.chi_centre())));
        }
        Ok(g.to_integer().try_into().expect("small genus"))
    }

    /// Genus of the non-weighted curve.
    pub fn genus(&self) -> Result<u32> {
        match &self.base {
            Base::Surface(w) => w.genus(),
            Base::Abstract(a) => abstract_genus(a),
        }
    }

    /// χ'(H_nw) = κ(1 − g)/s² of the non-weighted curve.
    pub fn chi_nonweighted(&self) -> Result<Rational> {
        match &self.base {
            Base::Surface(w) => Ok(w.euler_characteristics()?.1),
            Base::Abstract(a) => {
                let g = abstract_genus(a)? as i64;
                Ok(int(a.kappa as i64 * (1 - g)) / int((a.s * a.s) as i64))
            }
        }
    }

    pub fn euler_routes(&self) -> Result<EulerRoutes> {
        let pts = self.special_points()?;
        let mut general = self.chi_centre();
        for p in &pts {
            general -= half() * one_minus_inv(p.value()) * int(p.datum.residue_degree as i64);
        }
        let chi_nw = self.chi_nonweighted()?;
        let mut split = chi_nw.clone();
        for p in pts.iter().filter(|p| p.weighted) {
            split -= half() * rat(1, p.datum.e_tau as i64)
                * one_minus_inv(p.datum.weight)
                * int(p.datum.residue_degree as i64);
        }
        let thurston = match &self.base {
            Base::Surface(w) => Some(self.thurston(w, &pts)?),
            Base::Abstract(_) => None,
        };
        let genus_zero = match self.epsilon() {
            Some(eps) if self.genus()? == 0 => {
                let mut terms = Vec::new();
                for p in pts.iter().filter(|p| p.weighted) {
                    let unweighted = p.datum.clone().with_weight(1);
                    let f = degree_of_simple(&unweighted, self.kappa(), eps, 1)?;
                    terms.push((p.datum.e, f, p.datum.weight));
                }
                Some(genus_zero_orbifold_euler(self.kappa(), self.skewness(), eps, &terms))
            }
            _ => None,
        };
        Ok(EulerRoutes {
            general,
            weights_split: split,
            thurston,
            genus_zero,
        })
    }

    /// Weighted boundary ramification points count ¼, other boundary points
    /// ½ and inner points 1. Curves over ℂ are read as real curves with only
    /// inner points and halved back to the complex normalization.
    fn thurston(&self, w: &WittSurface, pts: &[SpecialPoint]) -> Result<Rational> {
        if w.base_field == BaseField::Complex {
            let mut v = int(2 * (1 - w.topology.g as i64));
            for p in pts.iter().filter(|p| p.weighted) {
                v -= one_minus_inv(p.datum.weight);
            }
            return Ok(v * half());
        }
        let mut v = w.euler_characteristics()?.1;
        for p in pts.iter().filter(|p| p.weighted) {
            let factor = match p.class {
                "seg" => rat(1, 4),
                "real" | "quaternion" | "boundary" => half(),
                _ => Rational::one(),
            };
            v -= factor * one_minus_inv(p.datum.weight);
        }
        Ok(v)
    }

    /// χ'_orb, after checking every route agrees.
    pub fn orbifold_euler(&self) -> Result<Rational> {
        let r = self.euler_routes()?;
        if !r.all_agree() {
            return Err(Error::InvariantViolation(format!(
                "Euler routes disagree: general {}, split {}, thurston {:?}, genus-zero {:?}",
                r.general,
                r.weights_split,
                r.thurston.as_ref().map(fmt_rational),
                r.genus_zero.as_ref().map(fmt_rational)
            )));
        }
        Ok(r.general)
    }

    /// Sorted multiset of p(x)·e_τ(x) > 1, each counted [k(x):k] times.
    pub fn weight_ram_vector(&self) -> Result<Vec<u32>> {
        let mut v = Vec::new();
        for p in self.special_points()? {
            if p.value() > 1 {
                for _ in 0..p.datum.residue_degree {
                    v.push(p.value());
                }
            }
        }
        v.sort_unstable();
        Ok(v)
    }

    pub fn classify(&self) -> Result<CurveClass> {
        let chi = self.orbifold_euler()?;
        let pbar = self.pbar();
        let class = if chi.is_positive() {
            CurveClass::Domestic
        } else if chi.is_zero() {
            if pbar == 1 {
                CurveClass::Elliptic
            } else {
                CurveClass::Tubular
            }
        } else {
            CurveClass::Wild
        };
        let v = self.weight_ram_vector()?;
        let g = self.centre_genus()?;
        match class {
            CurveClass::Tubular if TubularType::of(&v).is_none() || g != 0 => {
                return Err(Error::InvariantViolation(format!(
                    "tubular curve with vector {v:?} over a centre of genus {g}"
                )))
            }
            CurveClass::Domestic if g != 0 || DomesticType::of(&v).is_none() => {
                return Err(Error::InvariantViolation(format!(
                    "domestic curve with vector {v:?} over a centre of genus {g}"
                )))
            }
            _ => {}
        }
        Ok(class)
    }

    /// Exponent p(x)e_τ(x) − 1 of σ_x in τ on the degree-zero part, zero
    /// exponents omitted.
    pub fn tau_exponents(&self) -> Result<Vec<(String, u32)>> {
        Ok(self
            .special_points()?
            .into_iter()
            .filter(|p| p.value() > 1)
            .map(|p| (p.label.clone(), p.value() - 1))
            .collect())
    }

    /// Full Picard word for τ when the centre has genus zero.
    pub fn tau_word(&self) -> Result<TauWord> {
        if self.centre_genus()? != 0 {
            return Err(Error::Unavailable("centre curve has positive genus".into()));
        }
        let eps = self
            .epsilon()
            .ok_or_else(|| Error::Unavailable("numerical type ε is unknown for this base".into()))?;
        let has_x0 = match &self.base {
            Base::Surface(w) => w.base_field == BaseField::Complex || !w.ovals.is_empty(),
            Base::Abstract(a) => a.free_rational_point,
        };
        if !has_x0 {
            return Err(Error::Unavailable(
                "no rational point free of ramification and weight".into(),
            ));
        }
        if 2 % eps != 0 {
            return Err(Error::InconsistentData(format!("2/ε is not integral for ε = {eps}")));
        }
        Ok(TauWord {
            x0_exponent: -(2 / eps as i64),
            factors: self.tau_exponents()?,
        })
    }

    fn require_zero_euler(&self) -> Result<()> {
        let chi = self.orbifold_euler()?;
        if !chi.is_zero() {
            return Err(Error::Domain(format!(
                "τ has infinite order: χ'_orb = {} is not zero",
                fmt_rational(&chi)
            )));
        }
        Ok(())
    }

    pub fn tau_order(&self) -> Result<u32> {
        self.require_zero_euler()?;
        Ok(self
            .special_points()?
            .iter()
            .map(SpecialPoint::value)
            .max()
            .unwrap_or(1))
    }

    pub fn cy_dimension(&self) -> Result<(u32, u32)> {
        let n = self.tau_order()?;
        Ok((n, n))
    }

    pub fn picard_structure(&self) -> Result<PicardDescriptor> {
        let genus_zero = self.centre_genus()? == 0;
        let degree_zero_part = match self.surface() {
            Some(w) if self.points.is_empty() => w.catalog_name().and_then(reported_degree_zero_picard),
            _ => None,
        };
        Ok(PicardDescriptor {
            base_part: if genus_zero {
                "Z".into()
            } else {
                "Pic_0 not finitely generated".into()
            },
            torsion_quotient: self.weight_ram_vector()?,
            finitely_generated_rank_one: genus_zero,
            degree_zero_part,
        })
    }

    /// Placement key with no symmetry applied.
    pub fn raw_key(&self) -> Vec<(u8, usize, usize, u32)> {
        let mut v: Vec<_> = self.points.iter().map(|p| placement_code(&p.placement, p.weight)).collect();
        v.sort_unstable();
        v
    }

    /// Representative of the weighted curve up to oval permutations and
    /// dihedral symmetries of the ovals, together with the transformed
    /// surface description.
    pub fn canonical_key(&self) -> CanonicalKey {
        let Base::Surface(w) = &self.base else {
            return CanonicalKey {
                ovals: Vec::new(),
                placements: self.raw_key(),
            };
        };
        let t = w.ovals.len();
        let mut best: Option<CanonicalKey> = None;
        for perm in permutations(t) {
            // perm[new] = old
            let maps: Vec<Vec<crate::witt_surface::DihedralMap>> = perm
                .iter()
                .map(|&old| all_dihedral(w.ovals[old].segment_count()))
                .collect();
            for choice in product(&maps.iter().map(Vec::len).collect::<Vec<_>>()) {
                let mut new_of_old = vec![0; t];
                for (new, &old) in perm.iter().enumerate() {
                    new_of_old[old] = new;
                }
                let ovals: Vec<Oval> = perm
                    .iter()
                    .enumerate()
                    .map(|(new, &old)| transform_oval(&w.ovals[old], &maps[new][choice[new]]))
                    .collect();
                let mut placements: Vec<_> = self
                    .points
                    .iter()
                    .map(|p| {
                        let pl = match p.placement {
                            Placement::Boundary { oval, segment } => {
                                let new = new_of_old[oval];
                                let m = maps[new][choice[new]];
                                Placement::Boundary {
                                    oval: new,
                                    segment: segment.map(|s| m.segment(s)),
                                }
                            }
                            Placement::Segmentation { oval, point } => {
                                let new = new_of_old[oval];
                                let m = maps[new][choice[new]];
                                Placement::Segmentation {
                                    oval: new,
                                    point: m.point(point),
                                }
                            }
                            other => other,
                        };
                        placement_code(&pl, p.weight)
                    })
                    .collect();
                placements.sort_unstable();
                let key = CanonicalKey { ovals, placements };
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
        best.expect("at least the identity transform")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    pub ovals: Vec<Oval>,
    pub placements: Vec<(u8, usize, usize, u32)>,
}

fn placement_code(pl: &Placement, w: u32) -> (u8, usize, usize, u32) {
    match *pl {
        Placement::Inner => (0, 0, 0, w),
        Placement::Boundary { oval, segment } => (1, oval, segment.unwrap_or(usize::MAX), w),
        Placement::Segmentation { oval, point } => (2, oval, point, w),
        Placement::Abstract { index } => (3, index, 0, w),
    }
}

fn all_dihedral(n: usize) -> Vec<crate::witt_surface::DihedralMap> {
    use crate::witt_surface::DihedralMap;
    if n == 0 {
        return vec![DihedralMap::identity(0)];
    }
    [false, true]
        .into_iter()
        .flat_map(|reflect| (0..n).map(move |shift| DihedralMap { n, reflect, shift }))
        .collect()
}

fn transform_oval(o: &Oval, m: &crate::witt_surface::DihedralMap) -> Oval {
    match o {
        Oval::Whole(_) => o.clone(),
        Oval::Segmented(signs) => {
            let mut v = signs.clone();
            for (i, s) in signs.iter().enumerate() {
                v[m.segment(i)] = *s;
            }
            Oval::Segmented(v)
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All index tuples (i_0, …) with i_k < sizes[k].
fn product(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..s).map(move |i| {
                    let mut w = v.clone();
                    w.push(i);
                    w
                })
            })
            .collect();
    }
    out
}

/// Degree-zero Picard groups that are known in closed form for unweighted
/// catalog curves.
pub fn reported_degree_zero_picard(name: &str) -> Option<Vec<u32>> {
    match name {
        "D_2222" => Some(vec![2, 2]),
        _ => None,
    }
}

fn abstract_genus(a: &AbstractBase) -> Result<u32> {
    // Artin–de Jong: χ'(H) = χ(X) − ½ Σ (1 − 1/e_τ)·[k(x):k]
    let mut chi = a.chi_x.clone();
    for d in &a.points {
        chi -= half() * one_minus_inv(d.e_tau) * int(d.residue_degree as i64);
    }
    let g = Rational::one() - chi * int((a.s * a.s) as i64) / int(a.kappa as i64);
    if !g.is_integer() || g.is_negative() {
        return Err(Error::InconsistentData(format!(
            "{}: local data give genus {}",
            a.name,
            fmt_rational(&g)
        )));
    }
    let g: u32 = g.to_integer().try_into().expect("small genus");
    if let Some(given) = a.genus {
        if given != g {
            return Err(Error::InconsistentData(format!(
                "{}: stated genus {given}, local data give {g}",
                a.name
            )));
        }
    }
    Ok(g)
}

fn validate_abstract(a: &AbstractBase) -> Result<()> {
    if a.s == 0 || a.kappa == 0 {
        return Err(Error::InconsistentData(format!("{}: s and κ must be positive", a.name)));
    }
    for (i, d) in a.points.iter().enumerate() {
        if d.separable && skewness(d)? != a.s {
            return Err(Error::InconsistentData(format!(
                "{}: point {i} has e·e*·e_τ = {} but s = {}",
                a.name,
                d.e * d.e_star * d.e_tau,
                a.s
            )));
        }
    }
    abstract_genus(a)?;
    Ok(())
}

/// χ'_orb = κ/s² − κε/(2s²) · Σ e(x)f(x)(1 − 1/p(x)) for a non-weighted
/// curve of genus zero. `points` lists (e, f, p).
pub fn genus_zero_orbifold_euler(kappa: u32, s: u32, epsilon: u32, points: &[(u32, Rational, u32)]) -> Rational {
    let s2 = int((s * s) as i64);
    let mut v = int(kappa as i64) / &s2;
    let coeff = int((kappa * epsilon) as i64) / (int(2) * &s2);
    for (e, f, p) in points {
        v -= &coeff * int(*e as i64) * f * one_minus_inv(*p);
    }
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhostGroup {
    /// Cyclic factor orders, ascending.
    pub factors: Vec<u32>,
    /// (point index, d(y)) for each generator σ_x^{−d(y)}σ_y.
    pub shifts: Vec<(usize, u32)>,
}

impl GhostGroup {
    pub fn order(&self) -> u64 {
        self.factors.iter().map(|&f| f as u64).product()
    }

    pub fn describe(&self) -> String {
        if self.factors.is_empty() {
            "trivial".into()
        } else {
            self.factors
                .iter()
                .map(|f| format!("C{f}"))
                .collect::<Vec<_>>()
                .join(" x ")
        }
    }
}

/// Ghost group ∏_{y≠x, e_τ(y)>1} C_{e_τ(y)} of a genus-zero non-weighted
/// curve with efficient point x. `points` lists (e_τ, [k(y):k]).
pub fn ghost_group(points: &[(u32, u32)], efficient: usize) -> Result<GhostGroup> {
    let &(ex, kx) = points
        .get(efficient)
        .ok_or_else(|| Error::InconsistentData(format!("no point {efficient}")))?;
    let mut factors = Vec::new();
    let mut shifts = Vec::new();
    for (i, &(ey, ky)) in points.iter().enumerate() {
        if i == efficient || ey <= 1 {
            continue;
        }
        if ey == 0 || kx == 0 {
            return Err(Error::InconsistentData("zero local data".into()));
        }
        let num = ky * ex;
        let den = kx * ey;
        if num % den != 0 {
            return Err(Error::InconsistentData(format!(
                "d(y) = {num}/{den} is not an integer for point {i}"
            )));
        }
        factors.push(ey);
        shifts.push((i, num / den));
    }
    factors.sort_unstable();
    Ok(GhostGroup { factors, shifts })
}

/// Abstract base builders for curves over fields other than ℝ.
pub mod fixtures {
    use super::*;

    fn point(e: u32, e_star: u32, e_tau: u32, degree: u32) -> PointDatum {
        let dim = e_star * e_star;
        PointDatum::new(e, e_star, e_tau, degree, DivisionAlgebraKind::abstract_kind("D_x", dim, 1))
    }

    /// Finite-field or non-simple bimodule curve with two rational
    /// ramification points of index n.
    pub fn ruled(n: u32) -> AbstractBase {
        AbstractBase {
            name: format!("ruled(n={n})"),
            chi_x: int(1),
            s: n,
            kappa: n,
            epsilon: Some(1),
            genus: Some(0),
            points: vec![point(1, 1, n, 1), point(1, 1, n, 1)],
            free_rational_point: true,
        }
    }

    /// Finite-field curve with ramification sequence (2¹, 2²).
    pub fn finite_field_quartic() -> AbstractBase {
        AbstractBase {
            name: "finite field, [K:k]=4".into(),
            chi_x: int(1),
            s: 2,
            kappa: 1,
            epsilon: Some(2),
            genus: Some(0),
            points: vec![point(1, 1, 2, 1), point(1, 1, 2, 2)],
            free_rational_point: true,
        }
    }

    /// The bimodule Q(√2,√3) over Q: three rational ramification points.
    pub fn biquadratic() -> AbstractBase {
        AbstractBase {
            name: "Q(sqrt2,sqrt3)".into(),
            chi_x: int(1),
            s: 2,
            kappa: 1,
            epsilon: Some(2),
            genus: Some(0),
            points: vec![point(1, 1, 2, 1), point(1, 1, 2, 1), point(1, 1, 2, 1)],
            free_rational_point: true,
        }
    }

    /// The simple (2,2)-bimodule over Q with skewness 4, plus one rational
    /// unramified point (index 3) available for a weight.
    pub fn quaternion_bimodule_over_q() -> AbstractBase {
        AbstractBase {
            name: "K-H bimodule over Q".into(),
            chi_x: int(1),
            s: 4,
            kappa: 4,
            epsilon: None,
            genus: Some(0),
            points: vec![point(2, 1, 2, 1), point(2, 1, 2, 1), point(2, 1, 2, 1), point(4, 1, 1, 1)],
            free_rational_point: true,
        }
    }

    /// Non-simple bimodule over Q(i) with n = 4, plus one rational
    /// unramified point (index 2).
    pub fn ruled_over_gaussian() -> AbstractBase {
        let mut b = ruled(4);
        b.name = "non-simple bimodule over Q(i)".into();
        b.points.push(point(4, 1, 1, 1));
        b
    }

    /// A genus-zero base without any ramification.
    pub fn unramified() -> AbstractBase {
        AbstractBase {
            name: "projective line".into(),
            chi_x: int(1),
            s: 1,
            kappa: 1,
            epsilon: Some(1),
            genus: Some(0),
            points: vec![point(1, 1, 1, 1), point(1, 1, 1, 1)],
            free_rational_point: true,
        }
    }

    /// (e_τ, [k(x):k]) pairs of a base, as consumed by ghost_group.
    pub fn ghost_data(b: &AbstractBase) -> Vec<(u32, u32)> {
        b.points.iter().map(|d| (d.e_tau, d.residue_degree)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn seg(point: usize, w: u32) -> WeightedPoint {
        WeightedPoint::new(Placement::Segmentation { oval: 0, point }, w)
    }

    fn bnd(segment: Option<usize>, w: u32) -> WeightedPoint {
        WeightedPoint::new(Placement::Boundary { oval: 0, segment }, w)
    }

    fn inner(w: u32) -> WeightedPoint {
        WeightedPoint::new(Placement::Inner, w)
    }

    fn example_a() -> WeightedCurve {
        WeightedCurve::catalog("D_22", vec![seg(0, 3), bnd(Some(0), 3)]).unwrap()
    }

    fn example_b() -> WeightedCurve {
        WeightedCurve::catalog("D_22", vec![seg(0, 2), bnd(Some(0), 4)]).unwrap()
    }

    fn example_c() -> WeightedCurve {
        WeightedCurve::catalog("RP2", vec![inner(2), inner(2)]).unwrap()
    }

    #[test]
    fn worked_examples_vanish() {
        for (c, v) in [(example_a(), vec![2, 3, 6]), (example_b(), vec![2, 4, 4]), (example_c(), vec![2, 2, 2, 2])] {
            let r = c.euler_routes().unwrap();
            assert!(r.all_agree(), "{r:?}");
            assert!(r.thurston.is_some() && r.genus_zero.is_some());
            assert_eq!(c.orbifold_euler().unwrap(), int(0));
            assert_eq!(c.weight_ram_vector().unwrap(), v);
            assert_eq!(c.classify().unwrap(), CurveClass::Tubular);
        }
    }

    #[test]
    fn example_b_with_quaternion_segment() {
        let c = WeightedCurve::catalog("D_22", vec![seg(1, 2), bnd(Some(1), 4)]).unwrap();
        assert_eq!(c.weight_ram_vector().unwrap(), vec![2, 4, 4]);
        assert_eq!(c.cy_dimension().unwrap(), (4, 4));
    }

    #[test]
    fn no_weights_gives_base_characteristic() {
        for name in ["D", "RP2", "D_H", "D_22", "S2_C", "K", "D_2222"] {
            let c = WeightedCurve::catalog(name, vec![]).unwrap();
            let base = c.surface().unwrap().euler_characteristics().unwrap().1;
            assert_eq!(c.orbifold_euler().unwrap(), base, "{name}");
        }
    }

    #[test]
    fn wild_example() {
        let c = WeightedCurve::catalog("D_22", vec![inner(7)]).unwrap();
        assert_eq!(c.orbifold_euler().unwrap(), rat(1, 2) - rat(6, 7));
        assert_eq!(c.classify().unwrap(), CurveClass::Wild);
        assert!(matches!(c.tau_order(), Err(Error::Domain(_))));
    }

    #[test]
    fn unweighted_d2222() {
        let c = WeightedCurve::catalog("D_2222", vec![]).unwrap();
        assert_eq!(c.classify().unwrap(), CurveClass::Elliptic);
        assert_eq!(c.weight_ram_vector().unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(c.tau_order().unwrap(), 2);
        let ex = c.tau_exponents().unwrap();
        assert_eq!(ex.len(), 4);
        assert!(ex.iter().all(|(_, e)| *e == 1));
        let pic = c.picard_structure().unwrap();
        assert!(pic.finitely_generated_rank_one);
        assert_eq!(pic.torsion_quotient, vec![2, 2, 2, 2]);
        assert_eq!(pic.degree_zero_part, Some(vec![2, 2]));
    }

    #[test]
    fn tau_exponents_example_a() {
        let ex = example_a().tau_exponents().unwrap();
        assert_eq!(
            ex,
            vec![("seg[0.0]".to_string(), 5), ("real[0.0]#1".to_string(), 2), ("seg[0.1]".to_string(), 1)]
        );
        let word = example_a().tau_word().unwrap();
        assert_eq!(word.x0_exponent, -2);
    }

    #[test]
    fn unramified_curve_has_trivial_tau() {
        let c = WeightedCurve::catalog("D", vec![]).unwrap();
        assert!(c.tau_exponents().unwrap().is_empty());
        let c = WeightedCurve::catalog("A_HH", vec![]).unwrap();
        assert!(c.tau_exponents().unwrap().is_empty());
        assert_eq!(c.cy_dimension().unwrap(), (1, 1));
    }

    #[test]
    fn tau_word_needs_a_rational_point() {
        let c = example_c();
        assert!(matches!(c.tau_word(), Err(Error::Unavailable(_))));
        let k = WeightedCurve::catalog("K", vec![]).unwrap();
        assert!(matches!(k.tau_word(), Err(Error::Unavailable(_))));
    }

    #[test]
    fn tau_orders() {
        assert_eq!(WeightedCurve::catalog("K", vec![]).unwrap().tau_order().unwrap(), 1);
        assert_eq!(example_a().tau_order().unwrap(), 6);
        assert_eq!(example_a().cy_dimension().unwrap(), (6, 6));
        assert_eq!(example_b().tau_order().unwrap(), 4);
        assert_eq!(example_c().cy_dimension().unwrap(), (2, 2));
    }

    #[test]
    fn picard_descriptors() {
        let k = WeightedCurve::catalog("K", vec![]).unwrap().picard_structure().unwrap();
        assert_eq!(k.base_part, "Pic_0 not finitely generated");
        assert!(!k.finitely_generated_rank_one);
        let d = WeightedCurve::catalog("D", vec![]).unwrap().picard_structure().unwrap();
        assert_eq!(d.base_part, "Z");
        assert!(d.torsion_quotient.is_empty());
        assert!(d.finitely_generated_rank_one);
    }

    #[test]
    fn genus_zero_formula_examples() {
        let one = int(1);
        let pts = [(1, one.clone(), 2), (1, one.clone(), 3), (1, one.clone(), 6)];
        assert_eq!(genus_zero_orbifold_euler(1, 1, 1, &pts), int(0));
        assert_eq!(genus_zero_orbifold_euler(2, 2, 1, &[]), rat(1, 2));
        // D_22 numerics with the weights of Example (b)
        let pts = [(1, one.clone(), 2), (2, one, 4)];
        assert_eq!(genus_zero_orbifold_euler(2, 2, 1, &pts), int(0));
    }

    #[test]
    fn invalid_placements() {
        assert!(WeightedCurve::catalog("D", vec![seg(0, 2)]).is_err());
        assert!(WeightedCurve::catalog("D_22", vec![bnd(None, 2)]).is_err());
        assert!(WeightedCurve::catalog("D_22", vec![seg(2, 2)]).is_err());
        assert!(WeightedCurve::catalog("D_22", vec![seg(0, 2), seg(0, 3)]).is_err());
        assert!(matches!(
            WeightedCurve::catalog("D", vec![inner(1)]),
            Err(Error::Validation(ValidationError::WeightTooSmall(1)))
        ));
        assert!(WeightedCurve::catalog("S2_C", vec![bnd(None, 2)]).is_err());
    }

    #[test]
    fn weight_multiplies_local_tau_contribution() {
        let base = WeightedCurve::catalog("D_22", vec![]).unwrap();
        let before: u32 = base.special_points().unwrap()[0].value();
        for p in 2..6 {
            let c = WeightedCurve::catalog("D_22", vec![seg(0, p)]).unwrap();
            let after = c.special_points().unwrap()[0].value();
            assert_eq!(after, p * before);
        }
    }

    #[test]
    fn ghost_groups() {
        for n in 2..7 {
            let g = ghost_group(&ghost_data(&ruled(n)), 0).unwrap();
            assert_eq!(g.factors, vec![n]);
            assert_eq!(g.shifts, vec![(1, 1)]);
        }
        let g = ghost_group(&ghost_data(&finite_field_quartic()), 0).unwrap();
        assert_eq!(g.factors, vec![2]);
        assert_eq!(g.shifts, vec![(1, 2)]);
        let g = ghost_group(&ghost_data(&biquadratic()), 0).unwrap();
        assert_eq!(g.describe(), "C2 x C2");
        let g = ghost_group(&ghost_data(&unramified()), 0).unwrap();
        assert_eq!(g.describe(), "trivial");
        // the degree-2 point cannot be efficient here: d(x) would be 1/2
        assert!(matches!(
            ghost_group(&ghost_data(&finite_field_quartic()), 1),
            Err(Error::InconsistentData(_))
        ));
    }

    #[test]
    fn abstract_bases_are_consistent() {
        for b in [ruled(3), finite_field_quartic(), biquadratic(), quaternion_bimodule_over_q(), ruled_over_gaussian(), unramified()] {
            let c = WeightedCurve::new(Base::Abstract(b.clone()), vec![]).unwrap();
            assert_eq!(c.genus().unwrap(), 0, "{}", b.name);
            assert!(c.euler_routes().unwrap().all_agree());
        }
        let mut bad = ruled(3);
        bad.kappa = 1;
        assert!(WeightedCurve::new(Base::Abstract(bad), vec![]).is_err());
    }

    #[test]
    fn tubular_curves_over_the_rationals() {
        let c = WeightedCurve::new(
            Base::Abstract(quaternion_bimodule_over_q()),
            vec![WeightedPoint::new(Placement::Abstract { index: 3 }, 2)],
        )
        .unwrap();
        assert_eq!(c.weight_ram_vector().unwrap(), vec![2, 2, 2, 2]);
        assert_eq!(c.classify().unwrap(), CurveClass::Tubular);
        let c = WeightedCurve::new(
            Base::Abstract(ruled_over_gaussian()),
            vec![WeightedPoint::new(Placement::Abstract { index: 2 }, 2)],
        )
        .unwrap();
        assert_eq!(c.weight_ram_vector().unwrap(), vec![2, 4, 4]);
        assert_eq!(c.classify().unwrap(), CurveClass::Tubular);
    }

    #[test]
    fn complex_centre_thurston_is_halved() {
        let c = WeightedCurve::catalog("S2_C", vec![inner(2), inner(3), inner(6)]).unwrap();
        let r = c.euler_routes().unwrap();
        assert_eq!(r.thurston, Some(int(0)));
        assert_eq!(c.classify().unwrap(), CurveClass::Tubular);
        assert_eq!(c.weight_ram_vector().unwrap(), vec![2, 3, 6]);
    }

    #[test]
    fn canonical_key_identifies_symmetric_placements() {
        let a = WeightedCurve::catalog("D_22", vec![seg(0, 3)]).unwrap();
        let b = WeightedCurve::catalog("D_22", vec![seg(1, 3)]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert_ne!(a.raw_key(), b.raw_key());
        let r = WeightedCurve::catalog("D_22", vec![bnd(Some(0), 3)]).unwrap();
        let q = WeightedCurve::catalog("D_22", vec![bnd(Some(1), 3)]).unwrap();
        assert_ne!(r.canonical_key(), q.canonical_key());
    }

    #[test]
    fn vector_types() {
        assert_eq!(DomesticType::of(&[2, 2, 9]), Some(DomesticType::TwoTwoN));
        assert_eq!(DomesticType::of(&[5]), Some(DomesticType::P));
        assert_eq!(DomesticType::of(&[2, 3, 6]), None);
        assert_eq!(TubularType::of(&[3, 3, 3]), Some(TubularType::T333));
        assert_eq!(TubularType::of(&[2, 2, 2]), None);
    }
}
