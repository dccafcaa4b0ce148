//! JSON curve and ghost-data descriptions read by the command-line tool.
//!
//! A curve file names a base and lists weights:
//!
//! ```json
//! {"base": "D_22",
//!  "weights": [{"class": "seg", "point": 0, "p": 3},
//!              {"class": "real", "oval": 0, "segment": 0, "p": 3}]}
//! ```
//!
//! The base may also be an explicit surface
//! `{"g": 0, "t": 1, "s": 1, "ovals": ["+-"], "commutative": false}`, a
//! complex curve `{"g": 1, "field": "C"}`, or an abstract base under the key
//! `"abstract"` whose weights use `{"class": "abstract", "index": i, "p": p}`.

use serde::{Deserialize, Serialize};

use crate::algebra::{int, DivisionAlgebraKind, Rational};
use crate::error::{Error, Result, ValidationError};
use crate::local_data::PointDatum;
use crate::report::JsonRational;
use crate::weighted_curve::{AbstractBase, Base, Placement, WeightedCurve, WeightedPoint};
use crate::witt_surface::{catalog, KleinTopology, Oval, Sign, WittSurface};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseSpec>,
    #[serde(default, rename = "abstract", skip_serializing_if = "Option::is_none")]
    pub abstract_base: Option<AbstractSpec>,
    #[serde(default)]
    pub weights: Vec<WeightSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BaseSpec {
    Name(String),
    Surface(SurfaceSpec),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceSpec {
    pub g: u32,
    #[serde(default)]
    pub t: u32,
    #[serde(default)]
    pub s: u32,
    #[serde(default)]
    pub ovals: Vec<String>,
    #[serde(default)]
    pub commutative: Option<bool>,
    #[serde(default)]
    pub field: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalSpec {
    Integer(i64),
    Fraction(JsonRational),
}

impl RationalSpec {
    fn value(&self) -> Result<Rational> {
        match self {
            RationalSpec::Integer(n) => Ok(int(*n)),
            RationalSpec::Fraction(j) => j.to_rational(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbstractSpec {
    #[serde(default)]
    pub name: Option<String>,
    pub chi_x: RationalSpec,
    pub s: u32,
    pub kappa: u32,
    #[serde(default)]
    pub epsilon: Option<u32>,
    #[serde(default)]
    pub genus: Option<u32>,
    pub points: Vec<PointSpec>,
    #[serde(default = "yes")]
    pub free_rational_point: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub e: u32,
    pub e_star: u32,
    pub e_tau: u32,
    pub residue_degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightSpec {
    pub class: String,
    pub p: u32,
    #[serde(default)]
    pub oval: Option<usize>,
    #[serde(default)]
    pub segment: Option<usize>,
    #[serde(default)]
    pub point: Option<usize>,
    #[serde(default)]
    pub index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GhostFile {
    pub points: Vec<GhostPoint>,
    #[serde(default)]
    pub efficient: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GhostPoint {
    pub e_tau: u32,
    pub residue_degree: u32,
}

pub fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn placement_error(msg: String) -> Error {
    ValidationError::Placement(msg).into()
}

fn parse_oval(s: &str) -> Result<Oval> {
    let signs: Vec<Sign> = s
        .chars()
        .map(|c| Sign::parse(&c.to_string()).ok_or_else(|| Error::Parse(format!("bad sign {c:?} in oval {s:?}"))))
        .collect::<Result<_>>()?;
    match signs.as_slice() {
        [] => Err(Error::Parse("empty oval".into())),
        [one] => Ok(Oval::Whole(*one)),
        _ => Ok(Oval::Segmented(signs)),
    }
}

fn surface(spec: &BaseSpec) -> Result<WittSurface> {
    match spec {
        BaseSpec::Name(n) => catalog(n),
        BaseSpec::Surface(s) => match s.field.as_deref() {
            Some("C") => Ok(WittSurface::complex_curve(s.g)),
            Some("R") | None => {
                let ovals = s.ovals.iter().map(|o| parse_oval(o)).collect::<Result<Vec<_>>>()?;
                let topology = KleinTopology::new(s.g, s.t, s.s);
                Ok(match s.commutative {
                    Some(c) => WittSurface::new(topology, ovals, c),
                    None => WittSurface::from_signs(topology, ovals),
                })
            }
            Some(other) => Err(Error::Parse(format!("unknown base field {other:?}"))),
        },
    }
}

fn abstract_base(a: &AbstractSpec) -> Result<AbstractBase> {
    Ok(AbstractBase {
        name: a.name.clone().unwrap_or_else(|| "abstract".into()),
        chi_x: a.chi_x.value()?,
        s: a.s,
        kappa: a.kappa,
        epsilon: a.epsilon,
        genus: a.genus,
        points: a
            .points
            .iter()
            .map(|p| {
                let kind = DivisionAlgebraKind::abstract_kind("D_x", p.e_star * p.e_star, 1);
                PointDatum::new(p.e, p.e_star, p.e_tau, p.residue_degree, kind)
            })
            .collect(),
        free_rational_point: a.free_rational_point,
    })
}

impl WeightSpec {
    fn placement(&self) -> Result<Placement> {
        let oval = self.oval.unwrap_or(0);
        match self.class.as_str() {
            "inner" => Ok(Placement::Inner),
            "real" | "quaternion" | "boundary" => Ok(Placement::Boundary {
                oval,
                segment: self.segment,
            }),
            "seg" | "segmentation" => Ok(Placement::Segmentation {
                oval,
                point: self
                    .point
                    .ok_or_else(|| Error::Parse("segmentation weight needs \"point\"".into()))?,
            }),
            "abstract" | "point" => Ok(Placement::Abstract {
                index: self
                    .index
                    .ok_or_else(|| Error::Parse("abstract weight needs \"index\"".into()))?,
            }),
            other => Err(Error::Parse(format!("unknown weight class {other:?}"))),
        }
    }
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn to_curve(&self) -> Result<WeightedCurve> {
        let base = match (&self.base, &self.abstract_base) {
            (Some(b), None) => Base::Surface(surface(b)?),
            (None, Some(a)) => Base::Abstract(abstract_base(a)?),
            _ => return Err(Error::Parse("give exactly one of \"base\" and \"abstract\"".into())),
        };
        let points = self
            .weights
            .iter()
            .map(|w| Ok(WeightedPoint::new(w.placement()?, w.p)))
            .collect::<Result<Vec<_>>>()?;
        let curve = WeightedCurve::new(base, points)?;
        for (w, p) in self.weights.iter().zip(&curve.points) {
            let (_, class) = curve.placement_datum(&p.placement)?;
            let stated = match w.class.as_str() {
                "segmentation" => "seg",
                "abstract" => "point",
                c => c,
            };
            if stated != class {
                return Err(placement_error(format!("weight declared {stated} sits on a {class} point")));
            }
        }
        Ok(curve)
    }
}

pub fn load_curve(text: &str) -> Result<WeightedCurve> {
    CurveFile::parse(text)?.to_curve()
}
