//! Enumeration of real weighted curves with χ'_orb ≥ 0.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use crate::algebra::{fmt_rational, AlgebraTag, Rational};
use crate::error::Result;
use crate::weighted_curve::{CanonicalKey, CurveClass, DomesticType, Placement, TubularType, WeightedCurve, WeightedPoint};
use crate::witt_surface::{catalog, BaseField, Oval, CATALOG_NAMES};

/// Bases whose centre curve has genus zero.
pub const GENUS_ZERO_BASES: [&str; 5] = ["D", "RP2", "D_H", "D_22", "S2_C"];

pub const ELLIPTIC_BASES: [&str; 8] = ["K", "M", "M_H", "A", "A_RH", "A_HH", "D_2222", "T_C"];

/// Largest value in a tubular vector.
const MAX_TUBULAR_VALUE: u32 = 6;
/// Weight range used to sample domestic families.
const DOMESTIC_WEIGHTS: std::ops::RangeInclusive<u32> = 2..=7;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZooEntry {
    pub base: &'static str,
    /// (class, weight) of each weighted point, in canonical order.
    pub weights: Vec<(String, u32)>,
    pub curve: WeightedCurve,
    pub class: CurveClass,
    pub chi_orb: Rational,
    pub s: u32,
    pub wrv: Vec<u32>,
    pub tau_order: Option<u32>,
    pub cy: Option<(u32, u32)>,
    pub centre: AlgebraTag,
}

impl ZooEntry {
    pub fn from_curve(base: &'static str, curve: WeightedCurve) -> Result<Self> {
        let class = curve.classify()?;
        let chi_orb = curve.orbifold_euler()?;
        let tau_order = if chi_orb == Rational::from_integer(0.into()) {
            Some(curve.tau_order()?)
        } else {
            None
        };
        let centre = match curve.surface().map(|w| w.base_field) {
            Some(BaseField::Complex) => AlgebraTag::Complex,
            _ => AlgebraTag::Real,
        };
        let mut weights = Vec::new();
        let key = curve.canonical_key();
        for &(code, a, b, w) in &key.placements {
            weights.push((class_of_code(&curve, &key, code, a, b).to_string(), w));
        }
        Ok(ZooEntry {
            base,
            weights,
            s: curve.skewness(),
            wrv: curve.weight_ram_vector()?,
            cy: tau_order.map(|n| (n, n)),
            tau_order,
            chi_orb,
            class,
            centre,
            curve,
        })
    }

    pub fn weights_label(&self) -> String {
        if self.weights.is_empty() {
            return "-".into();
        }
        self.weights
            .iter()
            .map(|(c, w)| format!("{c}:{w}"))
            .collect::<Vec<_>>()
            .join(", ")
    }

    fn sort_key(&self) -> (usize, CanonicalKey) {
        (base_index(self.base), self.curve.canonical_key())
    }
}

fn class_of_code(curve: &WeightedCurve, key: &CanonicalKey, code: u8, a: usize, b: usize) -> &'static str {
    match code {
        0 => "inner",
        1 => match key.ovals.get(a) {
            Some(Oval::Segmented(signs)) => match signs.get(b) {
                Some(crate::witt_surface::Sign::Minus) => "quaternion",
                _ => "real",
            },
            Some(Oval::Whole(crate::witt_surface::Sign::Minus)) if curve.surface().is_some_and(|w| w.is_witt()) => {
                "quaternion"
            }
            _ if curve.surface().is_some_and(|w| w.is_witt()) => "real",
            _ => "boundary",
        },
        2 => "seg",
        _ => "point",
    }
}

fn base_index(name: &str) -> usize {
    CATALOG_NAMES.iter().position(|n| *n == name).unwrap_or(usize::MAX)
}

/// All (placement, weight) options on a base with weights in the range;
/// segmentation points take weights up to `seg_max`.
fn options(name: &str, max: u32, seg_max: u32) -> Result<Vec<WeightedPoint>> {
    let w = catalog(name)?;
    let mut out: Vec<WeightedPoint> = (2..=max).map(|p| WeightedPoint::new(Placement::Inner, p)).collect();
    for (oval, o) in w.ovals.iter().enumerate() {
        let n = o.segment_count();
        let segments: Vec<Option<usize>> = if n == 0 { vec![None] } else { (0..n).map(Some).collect() };
        for segment in segments {
            out.extend((2..=max).map(|p| WeightedPoint::new(Placement::Boundary { oval, segment }, p)));
        }
        for point in 0..n {
            out.extend((2..=seg_max).map(|p| WeightedPoint::new(Placement::Segmentation { oval, point }, p)));
        }
    }
    Ok(out)
}

/// Every valid weighted curve on `name` built from multisets of options
/// whose weight-ramification vector has at most `max_len` entries.
fn configurations(name: &str, opts: &[WeightedPoint], max_len: usize) -> Result<Vec<WeightedCurve>> {
    fn go(
        name: &str,
        opts: &[WeightedPoint],
        start: usize,
        current: &mut Vec<WeightedPoint>,
        max_len: usize,
        out: &mut Vec<WeightedCurve>,
    ) -> Result<()> {
        let Ok(curve) = WeightedCurve::catalog(name, current.clone()) else {
            return Ok(());
        };
        if curve.weight_ram_vector()?.len() > max_len {
            return Ok(());
        }
        out.push(curve);
        for i in start..opts.len() {
            current.push(opts[i]);
            go(name, opts, i, current, max_len, out)?;
            current.pop();
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(name, opts, 0, &mut Vec::new(), max_len, &mut out)?;
    Ok(out)
}

fn tubular_candidates(name: &str) -> Result<Vec<WeightedCurve>> {
    let opts = options(name, MAX_TUBULAR_VALUE, MAX_TUBULAR_VALUE / 2)?;
    let mut out = Vec::new();
    for c in configurations(name, &opts, 4)? {
        if !c.points.is_empty() && TubularType::of(&c.weight_ram_vector()?).is_some() {
            out.push(c);
        }
    }
    Ok(out)
}

/// Tubular curves on genus-zero bases before symmetry reduction, keyed by
/// labeled placements only.
pub fn raw_tubular_count() -> Result<usize> {
    let mut n = 0;
    for name in GENUS_ZERO_BASES {
        let keys: BTreeSet<_> = tubular_candidates(name)?.iter().map(WeightedCurve::raw_key).collect();
        n += keys.len();
    }
    Ok(n)
}

/// Curves with χ'_orb = 0: the unweighted elliptic ones and the tubular
/// ones on genus-zero bases, one per symmetry class.
pub fn enumerate_chi_zero() -> Result<Vec<ZooEntry>> {
    let mut entries = Vec::new();
    for name in GENUS_ZERO_BASES {
        let mut seen = BTreeSet::new();
        for c in tubular_candidates(name)? {
            if seen.insert(c.canonical_key()) {
                entries.push(ZooEntry::from_curve(name, c)?);
            }
        }
    }
    for name in ELLIPTIC_BASES {
        entries.push(ZooEntry::from_curve(name, WeightedCurve::catalog(name, vec![])?)?);
    }
    entries.sort_by_key(ZooEntry::sort_key);
    Ok(entries)
}

/// A family of weighted domestic curves: same base, same placement
/// classes, same domestic weight type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomesticFamily {
    pub base: &'static str,
    pub classes: Vec<String>,
    pub pattern: DomesticType,
    /// Weights with fixed values shown as numbers and varying ones as
    /// letters, e.g. "seg:p, real:2".
    pub descriptor: String,
    /// Members found in the sampled weight range.
    pub sampled: usize,
    pub centre: AlgebraTag,
    pub example: ZooEntry,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomesticZoo {
    pub nonweighted: Vec<ZooEntry>,
    pub families: Vec<DomesticFamily>,
}

impl DomesticZoo {
    pub fn families_with_centre(&self, centre: AlgebraTag) -> usize {
        self.families.iter().filter(|f| f.centre == centre).count()
    }
}

pub fn enumerate_domestic() -> Result<DomesticZoo> {
    let mut nonweighted = Vec::new();
    for name in CATALOG_NAMES {
        let c = WeightedCurve::catalog(name, vec![])?;
        if c.orbifold_euler()?.is_positive() {
            nonweighted.push(ZooEntry::from_curve(name, c)?);
        }
    }
    nonweighted.sort_by_key(ZooEntry::sort_key);

    type Key = (usize, Vec<String>, DomesticType);
    let mut groups: BTreeMap<Key, Vec<ZooEntry>> = BTreeMap::new();
    for name in GENUS_ZERO_BASES {
        let max = *DOMESTIC_WEIGHTS.end();
        let opts = options(name, max, max)?;
        let mut seen = BTreeSet::new();
        for c in configurations(name, &opts, 3)? {
            if c.points.is_empty() || !seen.insert(c.canonical_key()) {
                continue;
            }
            let Some(pattern) = DomesticType::of(&c.weight_ram_vector()?) else {
                continue;
            };
            if !c.orbifold_euler()?.is_positive() {
                continue;
            }
            let entry = ZooEntry::from_curve(name, c)?;
            let classes = entry.weights.iter().map(|(c, _)| c.clone()).collect();
            groups.entry((base_index(name), classes, pattern)).or_default().push(entry);
        }
    }
    let mut families = Vec::new();
    for ((_, classes, pattern), mut members) in groups {
        members.sort_by_key(ZooEntry::sort_key);
        let example = members[0].clone();
        families.push(DomesticFamily {
            base: example.base,
            descriptor: descriptor(&members, pattern),
            sampled: members.len(),
            centre: example.centre,
            classes,
            pattern,
            example,
        });
    }
    Ok(DomesticZoo { nonweighted, families })
}

fn descriptor(members: &[ZooEntry], pattern: DomesticType) -> String {
    let first = &members[0].weights;
    let varying: Vec<bool> = (0..first.len())
        .map(|i| members.iter().any(|m| m.weights[i].1 != first[i].1))
        .collect();
    let n_varying = varying.iter().filter(|v| **v).count();
    let letters: &[&str] = if n_varying == 1 && pattern == DomesticType::TwoTwoN {
        &["n"]
    } else {
        &["p", "q", "r"]
    };
    let mut next = 0;
    first
        .iter()
        .zip(&varying)
        .map(|((class, w), v)| {
            if *v {
                next += 1;
                format!("{class}:{}", letters[next - 1])
            } else {
                format!("{class}:{w}")
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn vector_label(v: &[u32]) -> String {
    format!("({})", v.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
}

/// Aligned text table of zoo entries.
pub fn zoo_report(entries: &[ZooEntry]) -> String {
    let header = ["base", "weights", "class", "χ'_orb", "s", "WRV", "τ-order", "CY", "centre"];
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.base.to_string(),
                e.weights_label(),
                e.class.to_string(),
                fmt_rational(&e.chi_orb),
                e.s.to_string(),
                vector_label(&e.wrv),
                e.tau_order.map_or("-".into(), |n| n.to_string()),
                e.cy.map_or("-".into(), |(a, b)| format!("{a}/{b}")),
                e.centre.symbol().to_string(),
            ]
        })
        .collect();
    table(&header, &rows)
}

/// Aligned text table of domestic families.
pub fn domestic_report(zoo: &DomesticZoo) -> String {
    let mut rows: Vec<Vec<String>> = zoo
        .nonweighted
        .iter()
        .map(|e| {
            vec![
                e.base.to_string(),
                "-".into(),
                "()".into(),
                fmt_rational(&e.chi_orb),
                e.s.to_string(),
                e.centre.symbol().to_string(),
            ]
        })
        .collect();
    rows.extend(zoo.families.iter().map(|f| {
        vec![
            f.base.to_string(),
            f.descriptor.clone(),
            f.pattern.pattern().to_string(),
            "> 0".into(),
            f.example.s.to_string(),
            f.centre.symbol().to_string(),
        ]
    }));
    table(&["base", "weights", "type", "χ'_orb", "s", "centre"], &rows)
}

pub(crate) fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = header.iter().map(|h| width(h)).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            widths[i] = widths[i].max(width(c));
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            if i + 1 < cells.len() {
                s.push_str(&" ".repeat(widths[i] - width(c)));
            }
        }
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count<F: Fn(&ZooEntry) -> bool>(v: &[ZooEntry], f: F) -> usize {
        v.iter().filter(|e| f(e)).count()
    }

    #[test]
    fn chi_zero_counts() {
        let z = enumerate_chi_zero().unwrap();
        assert_eq!(z.len(), 39);
        assert_eq!(count(&z, |e| e.class == CurveClass::Elliptic), 8);
        assert_eq!(count(&z, |e| e.class == CurveClass::Tubular), 31);
        assert_eq!(count(&z, |e| e.class == CurveClass::Tubular && e.centre == AlgebraTag::Real), 27);
        assert_eq!(count(&z, |e| e.s == 1), 17);
        assert_eq!(count(&z, |e| e.s == 2), 22);
        let per_base: Vec<usize> = GENUS_ZERO_BASES.iter().map(|b| count(&z, |e| e.base == *b)).collect();
        assert_eq!(per_base, vec![8, 1, 8, 10, 4]);
    }

    #[test]
    fn symmetry_reduction_does_work() {
        assert!(raw_tubular_count().unwrap() > 31);
    }

    #[test]
    fn entries_are_consistent() {
        for e in enumerate_chi_zero().unwrap() {
            assert!(e.curve.euler_routes().unwrap().all_agree());
            assert_eq!(e.curve.classify().unwrap(), e.class);
            if e.class == CurveClass::Tubular {
                assert!(TubularType::of(&e.wrv).is_some());
            }
            assert!([1, 2, 3, 4, 6].contains(&e.tau_order.unwrap()));
        }
    }

    #[test]
    fn worked_examples_are_rows() {
        let z = enumerate_chi_zero().unwrap();
        let a = z
            .iter()
            .find(|e| e.base == "D_22" && e.weights_label() == "real:3, seg:3")
            .expect("example (a)");
        assert_eq!(a.cy, Some((6, 6)));
        let c = z
            .iter()
            .find(|e| e.base == "RP2" && e.weights_label() == "inner:2, inner:2")
            .expect("example (c)");
        assert_eq!(c.cy, Some((2, 2)));
    }

    #[test]
    fn report_is_deterministic() {
        let a = zoo_report(&enumerate_chi_zero().unwrap());
        let b = zoo_report(&enumerate_chi_zero().unwrap());
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 40);
    }

    #[test]
    fn domestic_counts() {
        let d = enumerate_domestic().unwrap();
        let names: Vec<_> = d.nonweighted.iter().map(|e| e.base).collect();
        assert_eq!(names, vec!["D", "RP2", "D_H", "D_22", "S2_C"]);
        assert_eq!(d.families_with_centre(AlgebraTag::Real), 27);
        let witt: Vec<_> = d
            .nonweighted
            .iter()
            .filter(|e| e.curve.surface().unwrap().is_witt())
            .map(|e| e.base)
            .collect();
        assert_eq!(witt, vec!["D_H", "D_22"]);
    }

    #[test]
    fn complex_domestic_types() {
        let d = enumerate_domestic().unwrap();
        let types: BTreeSet<_> = d
            .families
            .iter()
            .filter(|f| f.centre == AlgebraTag::Complex)
            .map(|f| f.pattern)
            .collect();
        for t in [DomesticType::PQ, DomesticType::TwoTwoN, DomesticType::E6, DomesticType::E8] {
            assert!(types.contains(&t), "{t:?}");
        }
        assert_eq!(d.families_with_centre(AlgebraTag::Complex), 6);
    }

    #[test]
    fn family_descriptors() {
        let d = enumerate_domestic().unwrap();
        let descr: Vec<_> = d.families.iter().filter(|f| f.base == "D_22").map(|f| f.descriptor.as_str()).collect();
        assert!(descr.contains(&"real:n"), "{descr:?}");
        assert!(descr.contains(&"seg:p"), "{descr:?}");
        assert!(descr.contains(&"real:3, seg:2"), "{descr:?}");
    }
}
