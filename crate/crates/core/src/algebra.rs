//! Exact rationals and the real division algebras ℝ, ℂ, ℍ.
//!
//! Elements carry rational coefficients over the bases {1}, {1,i} and
//! {1,i,j,ij} with i² = j² = -1 and ij = -ji.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats as `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    Real,
    Complex,
    Quaternion,
    Abstract,
}

impl AlgebraTag {
    /// Dimension over ℝ of the built-in algebras.
    pub fn dim(self) -> usize {
        match self {
            AlgebraTag::Real => 1,
            AlgebraTag::Complex => 2,
            AlgebraTag::Quaternion => 4,
            AlgebraTag::Abstract => 0,
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            AlgebraTag::Real => "R",
            AlgebraTag::Complex => "C",
            AlgebraTag::Quaternion => "H",
            AlgebraTag::Abstract => "?",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            AlgebraTag::Real => "ℝ",
            AlgebraTag::Complex => "ℂ",
            AlgebraTag::Quaternion => "ℍ",
            AlgebraTag::Abstract => "?",
        }
    }

    pub fn from_ascii(s: &str) -> Option<AlgebraTag> {
        match s {
            "R" | "ℝ" => Some(AlgebraTag::Real),
            "C" | "ℂ" => Some(AlgebraTag::Complex),
            "H" | "ℍ" => Some(AlgebraTag::Quaternion),
            _ => None,
        }
    }
}

/// A finite-dimensional division algebra described by its dimensions over the
/// base field k and over its own centre.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisionAlgebraKind {
    pub tag: AlgebraTag,
    pub dim_over_k: u32,
    pub dim_centre_over_k: u32,
    pub display_name: String,
}

impl DivisionAlgebraKind {
    pub fn real() -> Self {
        Self::builtin(AlgebraTag::Real)
    }

    pub fn complex() -> Self {
        Self::builtin(AlgebraTag::Complex)
    }

    pub fn quaternion() -> Self {
        Self::builtin(AlgebraTag::Quaternion)
    }

    pub fn builtin(tag: AlgebraTag) -> Self {
        let (d, c) = match tag {
            AlgebraTag::Real => (1, 1),
            AlgebraTag::Complex => (2, 2),
            AlgebraTag::Quaternion => (4, 1),
            AlgebraTag::Abstract => panic!("abstract kinds need explicit dimensions"),
        };
        DivisionAlgebraKind {
            tag,
            dim_over_k: d,
            dim_centre_over_k: c,
            display_name: tag.symbol().to_string(),
        }
    }

    /// Dimension-only descriptor, e.g. for algebras over finite fields.
    pub fn abstract_kind(name: &str, dim_over_k: u32, dim_centre_over_k: u32) -> Self {
        DivisionAlgebraKind {
            tag: AlgebraTag::Abstract,
            dim_over_k,
            dim_centre_over_k,
            display_name: name.to_string(),
        }
    }

    pub fn is_builtin(&self) -> bool {
        self.tag != AlgebraTag::Abstract
    }

    pub fn ascii(&self) -> String {
        match self.tag {
            AlgebraTag::Abstract => self.display_name.clone(),
            t => t.ascii().to_string(),
        }
    }
}

impl fmt::Display for DivisionAlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name)
    }
}

/// e* = [D : Z(D)]^(1/2).
pub fn comultiplicity(kind: &DivisionAlgebraKind) -> Result<u32> {
    if kind.dim_centre_over_k == 0 || kind.dim_over_k % kind.dim_centre_over_k != 0 {
        return Err(Error::InvariantViolation(format!(
            "{}: centre dimension {} does not divide {}",
            kind.display_name, kind.dim_centre_over_k, kind.dim_over_k
        )));
    }
    let ratio = kind.dim_over_k / kind.dim_centre_over_k;
    let root = ratio.sqrt();
    if root * root != ratio {
        return Err(Error::InvariantViolation(format!(
            "{}: [D : Z(D)] = {} is not a square",
            kind.display_name, ratio
        )));
    }
    Ok(root)
}

/// Element of ℝ, ℂ or ℍ with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    tag: AlgebraTag,
    coeffs: Vec<Rational>,
}

fn check_builtin(tag: AlgebraTag) -> Result<()> {
    if tag == AlgebraTag::Abstract {
        Err(Error::NotApplicable(
            "abstract algebras carry no element arithmetic".into(),
        ))
    } else {
        Ok(())
    }
}

fn mismatch(a: AlgebraTag, b: AlgebraTag) -> Error {
    Error::KindMismatch {
        left: a.ascii().into(),
        right: b.ascii().into(),
    }
}

impl AlgebraElement {
    pub fn new(tag: AlgebraTag, coeffs: Vec<Rational>) -> Result<Self> {
        check_builtin(tag)?;
        if coeffs.len() != tag.dim() {
            return Err(Error::InvariantViolation(format!(
                "{} needs {} coefficients, got {}",
                tag.symbol(),
                tag.dim(),
                coeffs.len()
            )));
        }
        Ok(AlgebraElement { tag, coeffs })
    }

    pub fn from_ints(tag: AlgebraTag, coeffs: &[i64]) -> Result<Self> {
        Self::new(tag, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        AlgebraElement {
            tag,
            coeffs: vec![Rational::zero(); tag.dim()],
        }
    }

    pub fn scalar(tag: AlgebraTag, r: Rational) -> Self {
        let mut e = Self::zero(tag);
        e.coeffs[0] = r;
        e
    }

    pub fn one(tag: AlgebraTag) -> Self {
        Self::scalar(tag, Rational::one())
    }

    /// The i-th standard basis vector.
    pub fn basis_element(tag: AlgebraTag, index: usize) -> Self {
        let mut e = Self::zero(tag);
        e.coeffs[index] = Rational::one();
        e
    }

    pub fn basis(tag: AlgebraTag) -> Vec<Self> {
        (0..tag.dim()).map(|i| Self::basis_element(tag, i)).collect()
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn kind(&self) -> DivisionAlgebraKind {
        DivisionAlgebraKind::builtin(self.tag)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when the element lies in the real line ℝ·1.
    pub fn is_real(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn padded(&self) -> [Rational; 4] {
        let mut out: [Rational; 4] = Default::default();
        for (o, c) in out.iter_mut().zip(&self.coeffs) {
            *o = c.clone();
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.tag != other.tag {
            return Err(mismatch(self.tag, other.tag));
        }
        let [a1, b1, c1, d1] = self.padded();
        let [a2, b2, c2, d2] = other.padded();
        let full = [
            &a1 * &a2 - &b1 * &b2 - &c1 * &c2 - &d1 * &d2,
            &a1 * &b2 + &b1 * &a2 + &c1 * &d2 - &d1 * &c2,
            &a1 * &c2 - &b1 * &d2 + &c1 * &a2 + &d1 * &b2,
            &a1 * &d2 + &b1 * &c2 - &c1 * &b2 + &d1 * &a2,
        ];
        Ok(AlgebraElement {
            tag: self.tag,
            coeffs: full.into_iter().take(self.tag.dim()).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.tag != other.tag {
            return Err(mismatch(self.tag, other.tag));
        }
        Ok(AlgebraElement {
            tag: self.tag,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn negate(&self) -> Self {
        AlgebraElement {
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        AlgebraElement {
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// The standard involution: negates all imaginary parts.
    pub fn conjugate(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(1) {
            *c = -c.clone();
        }
        AlgebraElement {
            tag: self.tag,
            coeffs,
        }
    }

    /// Reduced norm a·conj(a), a sum of squares.
    pub fn norm(&self) -> Rational {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn invert(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conjugate().scale(&n.recip()))
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.invert()? } else { self.clone() };
        let mut out = Self::one(self.tag);
        for _ in 0..exp.unsigned_abs() {
            out = out.multiply(&base)?;
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const UNITS: [&str; 4] = ["", "i", "j", "ij"];
        let mut wrote = false;
        for (c, unit) in self.coeffs.iter().zip(UNITS) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            if unit.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(unit)?;
            } else {
                write!(f, "{}{}", fmt_rational(&abs), unit)?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

// Operator sugar. These panic on kind mismatch; use the named methods to get
// a typed error instead.
impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.multiply(rhs).expect("algebra kind mismatch")
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::add(self, rhs).expect("algebra kind mismatch")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::add(self, &rhs.negate()).expect("algebra kind mismatch")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.negate()
    }
}

#[derive(Debug, Clone)]
pub enum AutomorphismAction {
    Identity,
    ComplexConjugation,
    /// a ↦ u⁻¹·a·u
    Inner(AlgebraElement),
}

/// Ring automorphism of a built-in division algebra fixing ℝ.
#[derive(Debug, Clone)]
pub struct Automorphism {
    tag: AlgebraTag,
    action: AutomorphismAction,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        use AutomorphismAction::*;
        if self.tag != other.tag {
            return false;
        }
        match (&self.action, &other.action) {
            (Identity, Identity) | (ComplexConjugation, ComplexConjugation) => true,
            // inner units are only defined up to a nonzero real factor
            (Inner(u), Inner(v)) => (u * &v.invert().expect("unit")).is_real(),
            (Inner(u), Identity) | (Identity, Inner(u)) => u.is_real(),
            _ => false,
        }
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    pub fn identity(tag: AlgebraTag) -> Result<Self> {
        check_builtin(tag)?;
        Ok(Automorphism {
            tag,
            action: AutomorphismAction::Identity,
        })
    }

    pub fn conjugation() -> Self {
        Automorphism {
            tag: AlgebraTag::Complex,
            action: AutomorphismAction::ComplexConjugation,
        }
    }

    pub fn inner(unit: AlgebraElement) -> Result<Self> {
        if unit.tag != AlgebraTag::Quaternion {
            return Err(Error::NotApplicable(
                "inner twists are only modelled on ℍ".into(),
            ));
        }
        if unit.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Automorphism {
            tag: AlgebraTag::Quaternion,
            action: AutomorphismAction::Inner(unit),
        })
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn action(&self) -> &AutomorphismAction {
        &self.action
    }

    pub fn apply(&self, a: &AlgebraElement) -> Result<AlgebraElement> {
        if a.tag != self.tag {
            return Err(mismatch(self.tag, a.tag));
        }
        Ok(match &self.action {
            AutomorphismAction::Identity => a.clone(),
            AutomorphismAction::ComplexConjugation => a.conjugate(),
            AutomorphismAction::Inner(u) => u.invert()?.multiply(a)?.multiply(u)?,
        })
    }

    /// The n-th power, negative n giving powers of the inverse.
    pub fn pow(&self, n: i64) -> Self {
        let action = match &self.action {
            AutomorphismAction::Identity => AutomorphismAction::Identity,
            AutomorphismAction::ComplexConjugation => {
                if n.rem_euclid(2) == 1 {
                    AutomorphismAction::ComplexConjugation
                } else {
                    AutomorphismAction::Identity
                }
            }
            AutomorphismAction::Inner(u) => {
                AutomorphismAction::Inner(u.pow(n).expect("inner unit is invertible"))
            }
        };
        Automorphism {
            tag: self.tag,
            action,
        }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// Order of the class modulo inner automorphisms.
    pub fn galois_order(&self) -> u32 {
        match self.action {
            AutomorphismAction::ComplexConjugation => 2,
            AutomorphismAction::Identity | AutomorphismAction::Inner(_) => 1,
        }
    }

    /// The unit u with σ^r = (a ↦ u⁻¹au), r the Galois order.
    pub fn period_unit(&self) -> AlgebraElement {
        match &self.action {
            AutomorphismAction::Inner(u) => u.clone(),
            _ => AlgebraElement::one(self.tag),
        }
    }

    pub fn short_name(&self) -> String {
        match &self.action {
            AutomorphismAction::Identity => "id".into(),
            AutomorphismAction::ComplexConjugation => "conj".into(),
            AutomorphismAction::Inner(u) => format!("inner({u})"),
        }
    }
}

pub fn galois_order(phi: &Automorphism) -> u32 {
    phi.galois_order()
}

pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.multiply(b)
}

pub fn invert(a: &AlgebraElement) -> Result<AlgebraElement> {
    a.invert()
}

pub fn apply(phi: &Automorphism, a: &AlgebraElement) -> Result<AlgebraElement> {
    phi.apply(a)
}
