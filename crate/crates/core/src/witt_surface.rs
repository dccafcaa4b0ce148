//! Klein surfaces and Witt surfaces: Weichold triples, signed ovals, genus,
//! Euler characteristics, constants field and the named catalog.

use std::fmt;

use crate::algebra::{int, DivisionAlgebraKind, Rational};
use crate::error::{Error, Result, ValidationError};

/// Sign of the Witt function on a boundary segment: + real, − quaternion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" | "−" => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Weichold triple (g, t, s).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KleinTopology {
    pub g: u32,
    pub t: u32,
    pub s: u32,
}

impl KleinTopology {
    pub fn new(g: u32, t: u32, s: u32) -> Self {
        KleinTopology { g, t, s }
    }

    pub fn is_realizable(&self) -> bool {
        let KleinTopology { g, t, s } = *self;
        match s {
            0 => t <= g,
            1 => t >= 1 && t <= g + 1 && t % 2 == (g + 1) % 2,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Oval {
    Whole(Sign),
    /// Cyclic list of segment signs; segment i runs from marked point i to
    /// marked point i+1.
    Segmented(Vec<Sign>),
}

impl Oval {
    pub fn segment_count(&self) -> usize {
        match self {
            Oval::Whole(_) => 0,
            Oval::Segmented(v) => v.len(),
        }
    }

    pub fn has_minus(&self) -> bool {
        match self {
            Oval::Whole(s) => *s == Sign::Minus,
            Oval::Segmented(v) => v.contains(&Sign::Minus),
        }
    }

    /// Alternating segmentation with `n` segments starting at +.
    pub fn alternating(n: usize) -> Oval {
        Oval::Segmented(
            (0..n)
                .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
                .collect(),
        )
    }

    /// Colour-preserving dihedral symmetries of the marked oval.
    pub fn symmetries(&self) -> Vec<DihedralMap> {
        let n = self.segment_count();
        if n == 0 {
            return vec![DihedralMap::identity(0)];
        }
        let Oval::Segmented(signs) = self else {
            unreachable!()
        };
        let mut out = Vec::new();
        for reflect in [false, true] {
            for shift in 0..n {
                let m = DihedralMap { n, reflect, shift };
                if (0..n).all(|i| signs[m.segment(i)] == signs[i]) {
                    out.push(m);
                }
            }
        }
        out
    }

    fn canonical(&self) -> Oval {
        match self {
            Oval::Whole(_) => self.clone(),
            Oval::Segmented(signs) => {
                let n = signs.len();
                let mut best: Option<Vec<Sign>> = None;
                for reflect in [false, true] {
                    for shift in 0..n {
                        let m = DihedralMap { n, reflect, shift };
                        let mut v = vec![Sign::Plus; n];
                        for (i, s) in signs.iter().enumerate() {
                            v[m.segment(i)] = *s;
                        }
                        if best.as_ref().is_none_or(|b| v < *b) {
                            best = Some(v);
                        }
                    }
                }
                Oval::Segmented(best.unwrap_or_default())
            }
        }
    }
}

impl fmt::Display for Oval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Oval::Whole(s) => write!(f, "{}", s.symbol()),
            Oval::Segmented(v) => {
                f.write_str("(")?;
                for s in v {
                    write!(f, "{}", s.symbol())?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A rotation or reflection of an oval with n marked points, acting on
/// points and on the segments between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DihedralMap {
    pub n: usize,
    pub reflect: bool,
    pub shift: usize,
}

impl DihedralMap {
    pub fn identity(n: usize) -> Self {
        DihedralMap {
            n,
            reflect: false,
            shift: 0,
        }
    }

    pub fn point(&self, j: usize) -> usize {
        if self.n == 0 {
            return j;
        }
        if self.reflect {
            (self.shift + self.n - j % self.n) % self.n
        } else {
            (j + self.shift) % self.n
        }
    }

    /// Segment i joins points i and i+1.
    pub fn segment(&self, i: usize) -> usize {
        if self.n == 0 {
            return i;
        }
        if self.reflect {
            (self.shift + 2 * self.n - i % self.n - 1) % self.n
        } else {
            (i + self.shift) % self.n
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseField {
    Real,
    /// Curves whose centre is a compact Riemann surface, taken over k = ℂ.
    Complex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WittSurface {
    pub topology: KleinTopology,
    pub ovals: Vec<Oval>,
    pub commutative: bool,
    pub base_field: BaseField,
}

impl WittSurface {
    pub fn new(topology: KleinTopology, ovals: Vec<Oval>, commutative: bool) -> Self {
        WittSurface {
            topology,
            ovals,
            commutative,
            base_field: BaseField::Real,
        }
    }

    /// Real surface with commutativity read off the signs.
    pub fn from_signs(topology: KleinTopology, ovals: Vec<Oval>) -> Self {
        let commutative = !ovals.iter().any(Oval::has_minus);
        Self::new(topology, ovals, commutative)
    }

    /// Compact Riemann surface of genus g over ℂ.
    pub fn complex_curve(g: u32) -> Self {
        WittSurface {
            topology: KleinTopology::new(g, 0, 0),
            ovals: Vec::new(),
            commutative: true,
            base_field: BaseField::Complex,
        }
    }

    pub fn is_witt(&self) -> bool {
        !self.commutative
    }

    pub fn validate(&self) -> Result<()> {
        let t = self.topology;
        if self.base_field == BaseField::Complex {
            if !self.ovals.is_empty() || t.t != 0 || !self.commutative {
                return Err(ValidationError::Unrealizable(
                    "a complex curve has no ovals and no quaternion signs".into(),
                )
                .into());
            }
            return Ok(());
        }
        if !t.is_realizable() {
            return Err(ValidationError::Weichold { g: t.g, t: t.t, s: t.s }.into());
        }
        if self.ovals.len() != t.t as usize {
            return Err(ValidationError::OvalCountMismatch {
                expected: t.t,
                found: self.ovals.len(),
            }
            .into());
        }
        for (k, oval) in self.ovals.iter().enumerate() {
            if let Oval::Segmented(signs) = oval {
                let n = signs.len();
                if n == 0 {
                    return Err(ValidationError::Unrealizable(format!(
                        "oval {k} is segmented but has no segments"
                    ))
                    .into());
                }
                if n % 2 == 1 {
                    return Err(ValidationError::OddSegmentCount { oval: k, count: n }.into());
                }
                if (0..n).any(|i| signs[i] == signs[(i + 1) % n]) {
                    return Err(ValidationError::NonAlternatingSigns { oval: k }.into());
                }
            }
        }
        let has_minus = self.ovals.iter().any(Oval::has_minus);
        if self.commutative && has_minus {
            return Err(ValidationError::NegativeSignOnKleinCurve.into());
        }
        if !self.commutative && !has_minus {
            return Err(ValidationError::PositiveDefiniteMarkedAsWitt.into());
        }
        let (m, r, _) = self.counts();
        if self.is_witt() && m == 0 && r > 0 && t.g == 0 {
            return Err(ValidationError::Unrealizable(
                "a fully real oval without segmentation forces genus -1".into(),
            )
            .into());
        }
        Ok(())
    }

    /// (m, r, q): half the number of segmentation points, fully real ovals,
    /// fully quaternion ovals.
    pub fn counts(&self) -> (u32, u32, u32) {
        let mut n = 0;
        let mut r = 0;
        let mut q = 0;
        for oval in &self.ovals {
            match oval {
                Oval::Whole(Sign::Plus) => r += 1,
                Oval::Whole(Sign::Minus) => q += 1,
                Oval::Segmented(v) => n += v.len() as u32,
            }
        }
        (n / 2, r, q)
    }

    /// Total number of segmentation points.
    pub fn segmentation_points(&self) -> u32 {
        2 * self.counts().0
    }

    pub fn constants_field(&self) -> DivisionAlgebraKind {
        if self.base_field == BaseField::Complex {
            return DivisionAlgebraKind::complex();
        }
        if self.commutative {
            return DivisionAlgebraKind::real();
        }
        let (m, r, _) = self.counts();
        if m > 0 || r > 0 {
            DivisionAlgebraKind::complex()
        } else {
            DivisionAlgebraKind::quaternion()
        }
    }

    /// κ: dimension of the constants field over the base field.
    pub fn kappa(&self) -> u32 {
        match self.base_field {
            BaseField::Complex => 1,
            BaseField::Real => self.constants_field().dim_over_k,
        }
    }

    /// Global skewness: 2 for Witt surfaces, 1 otherwise.
    pub fn skewness(&self) -> u32 {
        if self.is_witt() {
            2
        } else {
            1
        }
    }

    /// Genus of the underlying (noncommutative) curve.
    pub fn genus(&self) -> Result<u32> {
        let g = self.topology.g;
        if !self.is_witt() {
            return Ok(g);
        }
        let (m, r, _) = self.counts();
        if m > 0 || r > 0 {
            let v = 2 * g as i64 - 1 + m as i64;
            if v < 0 {
                return Err(ValidationError::Unrealizable(format!(
                    "Hurwitz formula gives genus {v}"
                ))
                .into());
            }
            Ok(v as u32)
        } else {
            Ok(g)
        }
    }

    /// χ(X) = 1 − g of the centre curve.
    pub fn chi_centre(&self) -> Rational {
        int(1 - self.topology.g as i64)
    }

    /// (χ, χ') with χ = κ(1 − g) and χ' = χ / s², cross-checked against
    /// χ(X) − n/4.
    pub fn euler_characteristics(&self) -> Result<(Rational, Rational)> {
        let kappa = self.kappa() as i64;
        let g = self.genus()? as i64;
        let chi = int(kappa * (1 - g));
        let s = self.skewness() as i64;
        let chi_norm = &chi / int(s * s);
        let via_centre = if self.is_witt() {
            self.chi_centre() - Rational::new(self.segmentation_points().into(), 4.into())
        } else {
            self.chi_centre()
        };
        if via_centre != chi_norm {
            return Err(Error::InvariantViolation(format!(
                "χ' = {chi_norm} but χ(X) − n/4 = {via_centre}"
            )));
        }
        Ok((chi, chi_norm))
    }

    /// Representative of the surface up to oval permutation and dihedral
    /// symmetry of the marked ovals.
    pub fn canonical(&self) -> WittSurface {
        let mut ovals: Vec<Oval> = self.ovals.iter().map(Oval::canonical).collect();
        ovals.sort();
        WittSurface {
            ovals,
            ..self.clone()
        }
    }

    pub fn is_isomorphic(&self, other: &WittSurface) -> bool {
        self.canonical() == other.canonical()
    }

    /// Name of the catalog entry this surface is equivalent to, if any.
    pub fn catalog_name(&self) -> Option<&'static str> {
        CATALOG_NAMES
            .iter()
            .copied()
            .find(|n| catalog(n).is_ok_and(|c| c.is_isomorphic(self)))
    }
}

impl fmt::Display for WittSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = self.catalog_name() {
            return f.write_str(name);
        }
        let t = self.topology;
        if self.base_field == BaseField::Complex {
            return write!(f, "Σ_{}/ℂ", t.g);
        }
        write!(f, "({},{},{})[", t.g, t.t, t.s)?;
        for (i, o) in self.ovals.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{o}")?;
        }
        f.write_str("]")
    }
}

pub const CATALOG_NAMES: [&str; 13] = [
    "D", "RP2", "A", "M", "K", "D_H", "D_22", "A_RH", "A_HH", "M_H", "D_2222", "S2_C", "T_C",
];

/// Canonical spelling of a catalog name, resolving aliases.
pub fn canonical_name(name: &str) -> Result<&'static str> {
    Ok(match name {
        "D" => "D",
        "RP2" | "S2/±" => "RP2",
        "A" | "A_RR" => "A",
        "M" | "M_R" => "M",
        "K" => "K",
        "D_H" => "D_H",
        "D_22" => "D_22",
        "A_RH" | "A_HR" => "A_RH",
        "A_HH" => "A_HH",
        "M_H" => "M_H",
        "D_2222" => "D_2222",
        "S2_C" | "S2" => "S2_C",
        "T_C" | "T" => "T_C",
        other => return Err(Error::UnknownName(other.to_string())),
    })
}

pub fn catalog(name: &str) -> Result<WittSurface> {
    use Sign::*;
    let k = KleinTopology::new;
    let disc = k(0, 1, 1);
    let annulus = k(1, 2, 1);
    let mobius = k(1, 1, 0);
    Ok(match canonical_name(name)? {
        "D" => WittSurface::from_signs(disc, vec![Oval::Whole(Plus)]),
        "RP2" => WittSurface::from_signs(k(0, 0, 0), vec![]),
        "A" => WittSurface::from_signs(annulus, vec![Oval::Whole(Plus), Oval::Whole(Plus)]),
        "M" => WittSurface::from_signs(mobius, vec![Oval::Whole(Plus)]),
        "K" => WittSurface::from_signs(k(1, 0, 0), vec![]),
        "D_H" => WittSurface::from_signs(disc, vec![Oval::Whole(Minus)]),
        "D_22" => WittSurface::from_signs(disc, vec![Oval::alternating(2)]),
        "A_RH" => WittSurface::from_signs(annulus, vec![Oval::Whole(Plus), Oval::Whole(Minus)]),
        "A_HH" => WittSurface::from_signs(annulus, vec![Oval::Whole(Minus), Oval::Whole(Minus)]),
        "M_H" => WittSurface::from_signs(mobius, vec![Oval::Whole(Minus)]),
        "D_2222" => WittSurface::from_signs(disc, vec![Oval::alternating(4)]),
        "S2_C" => WittSurface::complex_curve(0),
        "T_C" => WittSurface::complex_curve(1),
        _ => unreachable!(),
    })
}

/// Numerical type ε of a catalog curve (the index of the degree map).
pub fn numerical_type(name: &str) -> Result<u32> {
    Ok(match canonical_name(name)? {
        "RP2" | "K" | "A_RH" => 2,
        _ => 1,
    })
}

/// All Witt (noncommutative) surfaces with g(X) ≤ `max_g` and at most
/// `max_n` segmentation points, one per isomorphism class.
pub fn enumerate_witt_surfaces(max_g: u32, max_n: usize) -> Vec<WittSurface> {
    let mut kinds = vec![Oval::Whole(Sign::Plus), Oval::Whole(Sign::Minus)];
    for n in (2..=max_n).step_by(2) {
        kinds.push(Oval::alternating(n));
    }
    let mut out: Vec<WittSurface> = Vec::new();
    for g in 0..=max_g {
        for s in 0..=1 {
            for t in 0..=g + 1 {
                let top = KleinTopology::new(g, t, s);
                if !top.is_realizable() {
                    continue;
                }
                for choice in multisets(kinds.len(), t as usize) {
                    let ovals: Vec<Oval> = choice.iter().map(|&i| kinds[i].clone()).collect();
                    let n: usize = ovals.iter().map(Oval::segment_count).sum();
                    if n > max_n {
                        continue;
                    }
                    let w = WittSurface::new(top, ovals, false);
                    if w.validate().is_ok() && !out.iter().any(|o| o.is_isomorphic(&w)) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

/// Non-decreasing index sequences of length `len` over `0..kinds`.
fn multisets(kinds: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in multisets(kinds, len - 1) {
        let start = rest.last().copied().unwrap_or(0);
        for k in start..kinds {
            let mut v = rest.clone();
            v.push(k);
            out.push(v);
        }
    }
    out
}
