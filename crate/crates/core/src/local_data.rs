//! Local invariants of points and the skewness identities relating them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::algebra::{comultiplicity, DivisionAlgebraKind, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WittPointClass {
    Inner,
    RealBoundary,
    QuaternionBoundary,
    Segmentation,
}

impl WittPointClass {
    pub const ALL: [WittPointClass; 4] = [
        WittPointClass::Inner,
        WittPointClass::RealBoundary,
        WittPointClass::QuaternionBoundary,
        WittPointClass::Segmentation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WittPointClass::Inner => "inner",
            WittPointClass::RealBoundary => "real",
            WittPointClass::QuaternionBoundary => "quaternion",
            WittPointClass::Segmentation => "segmentation",
        }
    }
}

impl fmt::Display for WittPointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WittPointClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inner" => Ok(WittPointClass::Inner),
            "real" | "real-boundary" | "real_boundary" => Ok(WittPointClass::RealBoundary),
            "quaternion" | "quaternion-boundary" | "quaternion_boundary" => {
                Ok(WittPointClass::QuaternionBoundary)
            }
            "segmentation" | "seg" => Ok(WittPointClass::Segmentation),
            other => Err(Error::UnknownName(format!("point class {other}"))),
        }
    }
}

/// (e, e*, e_τ, [k(x):k], D_x, p) at a point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointDatum {
    pub e: u32,
    pub e_star: u32,
    pub e_tau: u32,
    pub residue_degree: u32,
    pub simple_end: DivisionAlgebraKind,
    pub weight: u32,
    pub separable: bool,
}

impl PointDatum {
    pub fn new(e: u32, e_star: u32, e_tau: u32, residue_degree: u32, simple_end: DivisionAlgebraKind) -> Self {
        PointDatum {
            e,
            e_star,
            e_tau,
            residue_degree,
            simple_end,
            weight: 1,
            separable: true,
        }
    }

    pub fn with_weight(mut self, p: u32) -> Self {
        self.weight = p;
        self
    }

    /// p(x)·e_τ(x)
    pub fn local_value(&self) -> u32 {
        self.weight * self.e_tau
    }

    fn check(&self) -> Result<()> {
        if !self.separable {
            return Err(Error::NotApplicable(
                "the skewness principle needs a separable point".into(),
            ));
        }
        if self.simple_end.is_builtin() {
            let e_star = comultiplicity(&self.simple_end)?;
            if e_star != self.e_star {
                return Err(Error::InconsistentData(format!(
                    "e* = {} but End(S) = {} has comultiplicity {}",
                    self.e_star, self.simple_end, e_star
                )));
            }
        }
        Ok(())
    }
}

pub fn witt_local_datum(class: WittPointClass) -> PointDatum {
    use DivisionAlgebraKind as K;
    match class {
        WittPointClass::Inner => PointDatum::new(2, 1, 1, 2, K::complex()),
        WittPointClass::RealBoundary => PointDatum::new(2, 1, 1, 1, K::real()),
        WittPointClass::QuaternionBoundary => PointDatum::new(1, 2, 1, 1, K::quaternion()),
        WittPointClass::Segmentation => PointDatum::new(1, 1, 2, 1, K::complex()),
    }
}

/// Points of a Klein surface (skewness 1): inner points have residue field ℂ,
/// boundary points ℝ.
pub fn klein_local_datum(inner: bool) -> PointDatum {
    if inner {
        PointDatum::new(1, 1, 1, 2, DivisionAlgebraKind::complex())
    } else {
        PointDatum::new(1, 1, 1, 1, DivisionAlgebraKind::real())
    }
}

/// Points of a curve over k = ℂ.
pub fn complex_point_datum() -> PointDatum {
    PointDatum::new(1, 1, 1, 1, DivisionAlgebraKind::abstract_kind("C/C", 1, 1))
}

/// The purely inseparable example, where the skewness principle fails.
pub fn inseparable_fixture() -> PointDatum {
    let mut d = PointDatum::new(1, 1, 1, 1, DivisionAlgebraKind::abstract_kind("k(x)/k inseparable", 2, 2));
    d.separable = false;
    d
}

/// s(H) = e·e*·e_τ
pub fn skewness(d: &PointDatum) -> Result<u32> {
    d.check()?;
    Ok(d.e * d.e_star * d.e_tau)
}

/// s(x) = e*·e_τ
pub fn local_skewness(d: &PointDatum) -> Result<u32> {
    d.check()?;
    Ok(d.e_star * d.e_tau)
}

/// f_in(x) = [D_x : k(x)], computed from dimensions over ℝ.
pub fn inertial_degree(d: &PointDatum) -> Result<u32> {
    if !d.simple_end.is_builtin() {
        return Err(Error::NotApplicable(format!(
            "{} is not a built-in algebra",
            d.simple_end
        )));
    }
    let dim = d.simple_end.dim_over_k;
    if d.residue_degree == 0 || dim % d.residue_degree != 0 {
        return Err(Error::InconsistentData(format!(
            "[k(x):ℝ] = {} does not divide [D_x:ℝ] = {}",
            d.residue_degree, dim
        )));
    }
    Ok(dim / d.residue_degree)
}

/// deg(S_x) = p̄·s(H) / (p(x)·κ·ε) · e*(x)·[k(x):k]
pub fn degree_of_simple(d: &PointDatum, kappa: u32, epsilon: u32, pbar: u32) -> Result<Rational> {
    let s = skewness(d)?;
    let num = pbar as i64 * s as i64 * d.e_star as i64 * d.residue_degree as i64;
    let den = d.weight as i64 * kappa as i64 * epsilon as i64;
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}
