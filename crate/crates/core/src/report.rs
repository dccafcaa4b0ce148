//! Serializable report records emitted by the command-line front end.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::ktheory::Slope;
use crate::weighted_curve::{EulerRoutes, PicardDescriptor, WeightedCurve};
use crate::zoo::{DomesticFamily, ZooEntry};

/// Exact rational as {"num": …, "den": …}; slopes use den = 0 for ∞ and
/// Calabi–Yau dimensions keep their unreduced n/n form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRational {
    pub num: i64,
    pub den: i64,
}

impl JsonRational {
    pub fn from_rational(q: &Rational) -> Result<Self> {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(num), Some(den)) => Ok(JsonRational { num, den }),
            _ => Err(Error::Domain(format!("{q} does not fit in 64 bits"))),
        }
    }

    pub fn to_rational(self) -> Result<Rational> {
        if self.den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational::new(self.num.into(), self.den.into()))
    }

    pub fn from_slope(s: &Slope) -> Self {
        let (num, den) = s.parts();
        JsonRational { num, den }
    }

    pub fn display(&self) -> String {
        if self.den == 1 {
            self.num.to_string()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoutesReport {
    pub general: JsonRational,
    pub weights_split: JsonRational,
    pub thurston: Option<JsonRational>,
    pub genus_zero: Option<JsonRational>,
}

impl RoutesReport {
    pub fn new(r: &EulerRoutes) -> Result<Self> {
        let opt = |x: &Option<Rational>| x.as_ref().map(JsonRational::from_rational).transpose();
        Ok(RoutesReport {
            general: JsonRational::from_rational(&r.general)?,
            weights_split: JsonRational::from_rational(&r.weights_split)?,
            thurston: opt(&r.thurston)?,
            genus_zero: opt(&r.genus_zero)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardReport {
    pub base_part: String,
    pub torsion_quotient: Vec<u32>,
    pub finitely_generated_rank_one: bool,
    pub degree_zero_part: Option<Vec<u32>>,
}

impl From<PicardDescriptor> for PicardReport {
    fn from(p: PicardDescriptor) -> Self {
        PicardReport {
            base_part: p.base_part,
            torsion_quotient: p.torsion_quotient,
            finitely_generated_rank_one: p.finitely_generated_rank_one,
            degree_zero_part: p.degree_zero_part,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub base: String,
    pub genus: u32,
    pub centre_genus: u32,
    pub kappa: u32,
    pub s: u32,
    pub epsilon: Option<u32>,
    pub constants_field: Option<String>,
    pub chi: JsonRational,
    pub chi_normalized: JsonRational,
    pub chi_orb: JsonRational,
    pub euler_routes: RoutesReport,
    pub class: String,
    pub wrv: Vec<u32>,
    pub pbar: u32,
    pub tau_order: Option<u32>,
    pub cy: Option<JsonRational>,
    pub picard: PicardReport,
}

impl InvariantsReport {
    pub fn new(c: &WeightedCurve) -> Result<Self> {
        let chi_nw = c.chi_nonweighted()?;
        let chi = &chi_nw * Rational::from_integer((c.skewness() * c.skewness()).into());
        let chi_orb = c.orbifold_euler()?;
        let (tau_order, cy) = if chi_orb == Rational::from_integer(0.into()) {
            let n = c.tau_order()?;
            (Some(n), Some(JsonRational { num: n as i64, den: n as i64 }))
        } else {
            (None, None)
        };
        Ok(InvariantsReport {
            base: c.base_name(),
            genus: c.genus()?,
            centre_genus: c.centre_genus()?,
            kappa: c.kappa(),
            s: c.skewness(),
            epsilon: c.epsilon(),
            constants_field: c.surface().map(|w| w.constants_field().tag.ascii().to_string()),
            chi: JsonRational::from_rational(&chi)?,
            chi_normalized: JsonRational::from_rational(&chi_nw)?,
            chi_orb: JsonRational::from_rational(&chi_orb)?,
            euler_routes: RoutesReport::new(&c.euler_routes()?)?,
            class: c.classify()?.to_string(),
            wrv: c.weight_ram_vector()?,
            pbar: c.pbar(),
            tau_order,
            cy,
            picard: c.picard_structure()?.into(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub base: String,
    pub class: String,
    pub chi_orb: JsonRational,
    pub wrv: Vec<u32>,
}

impl ClassifyReport {
    pub fn new(c: &WeightedCurve) -> Result<Self> {
        Ok(ClassifyReport {
            base: c.base_name(),
            class: c.classify()?.to_string(),
            chi_orb: JsonRational::from_rational(&c.orbifold_euler()?)?,
            wrv: c.weight_ram_vector()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub class: String,
    pub p: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZooEntryReport {
    pub base: String,
    pub weights: Vec<WeightReport>,
    pub class: String,
    pub chi_orb: JsonRational,
    pub s: u32,
    pub wrv: Vec<u32>,
    pub tau_order: Option<u32>,
    pub cy: Option<JsonRational>,
    pub centre: String,
}

impl ZooEntryReport {
    pub fn new(e: &ZooEntry) -> Result<Self> {
        Ok(ZooEntryReport {
            base: e.base.to_string(),
            weights: e
                .weights
                .iter()
                .map(|(class, p)| WeightReport { class: class.clone(), p: *p })
                .collect(),
            class: e.class.to_string(),
            chi_orb: JsonRational::from_rational(&e.chi_orb)?,
            s: e.s,
            wrv: e.wrv.clone(),
            tau_order: e.tau_order,
            cy: e.cy.map(|(a, b)| JsonRational { num: a as i64, den: b as i64 }),
            centre: e.centre.ascii().to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub base: String,
    pub weights: String,
    pub pattern: String,
    pub s: u32,
    pub centre: String,
    pub sampled_members: usize,
}

impl From<&DomesticFamily> for FamilyReport {
    fn from(f: &DomesticFamily) -> Self {
        FamilyReport {
            base: f.base.to_string(),
            weights: f.descriptor.clone(),
            pattern: f.pattern.pattern().to_string(),
            s: f.example.s,
            centre: f.centre.ascii().to_string(),
            sampled_members: f.sampled,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZooReport {
    pub entries: Vec<ZooEntryReport>,
    pub domestic_families: Vec<FamilyReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalReport {
    pub class: String,
    pub e: u32,
    pub e_star: u32,
    pub e_tau: u32,
    pub residue_degree: u32,
    pub simple_end: String,
    pub skewness: u32,
    pub local_skewness: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopesReport {
    pub name: String,
    pub kappa: u32,
    pub epsilon: u32,
    pub end_s_dim: u32,
    pub deg_s: u32,
    pub bound: i64,
    pub orbits: usize,
    pub convention_counts: [usize; 2],
    pub representatives: Vec<Vec<JsonRational>>,
    pub parity_numerator: Option<bool>,
    pub parity_denominator: Option<bool>,
    pub fm_partners: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewCentreReport {
    pub algebra: String,
    pub twist: String,
    pub order: usize,
    pub centre: String,
    pub constant_subfield: String,
    pub period: u32,
    pub unit: String,
    pub dim_over_centre: u32,
    pub dim_over_centre_by_basis: u32,
    pub exponent_dims: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhostShift {
    pub point: usize,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GhostReport {
    pub group: String,
    pub factors: Vec<u32>,
    pub order: u64,
    pub efficient: usize,
    pub generators: Vec<GhostShift>,
}
