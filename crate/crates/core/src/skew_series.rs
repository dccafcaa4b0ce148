//! Truncated twisted power and Laurent series D[[T, σ]] and D((T, σ)).
//!
//! Multiplication follows T·a = σ(a)·T. A series with truncation N stores
//! the coefficients of the exponents below N; everything at or above N is
//! unknown, so results are valid modulo T^N.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{
    comultiplicity, AlgebraElement, AlgebraTag, Automorphism, AutomorphismAction,
    DivisionAlgebraKind, Rational,
};
use crate::error::{Error, Result};
use crate::linear::nullspace;

pub const DEFAULT_TRUNCATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistedSeries {
    twist: Automorphism,
    truncation: i64,
    low: i64,
    coeffs: Vec<AlgebraElement>,
}

impl TwistedSeries {
    /// Series with coefficients for the exponents `low, low+1, …`; entries at
    /// or beyond the truncation are dropped.
    pub fn new(
        twist: Automorphism,
        truncation: usize,
        low: i64,
        coeffs: Vec<AlgebraElement>,
    ) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::MismatchedRing("truncation must be positive".into()));
        }
        if let Some(c) = coeffs.iter().find(|c| c.tag() != twist.tag()) {
            return Err(Error::KindMismatch {
                left: twist.tag().ascii().into(),
                right: c.tag().ascii().into(),
            });
        }
        let mut s = TwistedSeries {
            twist,
            truncation: truncation as i64,
            low,
            coeffs,
        };
        s.normalize();
        Ok(s)
    }

    pub fn zero(twist: Automorphism, truncation: usize) -> Result<Self> {
        Self::new(twist, truncation, 0, Vec::new())
    }

    /// a·T^exp
    pub fn monomial(
        twist: Automorphism,
        truncation: usize,
        a: AlgebraElement,
        exp: i64,
    ) -> Result<Self> {
        Self::new(twist, truncation, exp, vec![a])
    }

    /// Sum of terms a·T^e given as (e, a).
    pub fn from_terms(
        twist: Automorphism,
        truncation: usize,
        terms: &[(i64, AlgebraElement)],
    ) -> Result<Self> {
        let mut acc = Self::zero(twist.clone(), truncation)?;
        for (e, a) in terms {
            acc = acc.add(&Self::monomial(twist.clone(), truncation, a.clone(), *e)?)?;
        }
        Ok(acc)
    }

    fn normalize(&mut self) {
        let keep = (self.truncation - self.low).max(0) as usize;
        self.coeffs.truncate(keep);
        while self.coeffs.last().is_some_and(AlgebraElement::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        self.coeffs.drain(..lead);
        self.low += lead as i64;
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn tag(&self) -> AlgebraTag {
        self.twist.tag()
    }

    pub fn twist(&self) -> &Automorphism {
        &self.twist
    }

    pub fn truncation(&self) -> usize {
        self.truncation as usize
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Coefficient of T^exp (zero if absent).
    pub fn coeff(&self, exp: i64) -> AlgebraElement {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            AlgebraElement::zero(self.tag())
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> Vec<(i64, AlgebraElement)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c.clone()))
            .collect()
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.tag() != other.tag() {
            return Err(Error::MismatchedRing(format!(
                "coefficient algebras {} and {}",
                self.tag().symbol(),
                other.tag().symbol()
            )));
        }
        if self.twist != other.twist {
            return Err(Error::MismatchedRing(format!(
                "twists {} and {}",
                self.twist.short_name(),
                other.twist.short_name()
            )));
        }
        if self.truncation != other.truncation {
            return Err(Error::MismatchedRing(format!(
                "truncations {} and {}",
                self.truncation, other.truncation
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let low = self.low.min(other.low);
        let high = (self.low + self.coeffs.len() as i64).max(other.low + other.coeffs.len() as i64);
        let coeffs = (low..high).map(|e| &self.coeff(e) + &other.coeff(e)).collect();
        Self::new(self.twist.clone(), self.truncation(), low, coeffs)
    }

    /// Twisted Cauchy product c_k = Σ a_i·σ^i(b_j).
    ///
    /// With a negative principal part the product is only determined below
    /// N + min(low), so the result carries that smaller truncation.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let valid = self.truncation + self.low.min(0) + other.low.min(0);
        if valid <= 0 {
            return Err(Error::MismatchedRing(
                "principal parts exceed the truncation".into(),
            ));
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.twist.clone(), valid as usize);
        }
        let low = self.low + other.low;
        let len = (valid - low).max(0) as usize;
        let mut out = vec![AlgebraElement::zero(self.tag()); len];
        for (i, a) in self.terms() {
            let sigma_i = self.twist.pow(i);
            for (j, b) in other.terms() {
                let k = i + j;
                if k >= valid {
                    continue;
                }
                let term = a.multiply(&sigma_i.apply(&b)?)?;
                let slot = &mut out[(k - low) as usize];
                *slot = &*slot + &term;
            }
        }
        Self::new(self.twist.clone(), valid as usize, low, out)
    }

    /// (1/2)^ℓ with ℓ the least exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Result<Rational> {
        let l = self.leading_exponent().ok_or(Error::UndefinedValuation)?;
        let two = Rational::from_integer(2.into());
        let p = two.pow(l.unsigned_abs() as i32);
        Ok(if l >= 0 { p.recip() } else { p })
    }
}

impl fmt::Display for TwistedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            f.write_str("0")?;
        }
        for (n, (e, c)) in terms.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            let coeff = if c.coeffs().iter().filter(|x| !x.is_zero()).count() > 1 {
                format!("({c})")
            } else {
                c.to_string()
            };
            match e {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "{coeff}·T")?,
                _ => write!(f, "{coeff}·T^{e}")?,
            }
        }
        write!(f, " + O(T^{})", self.truncation)
    }
}

pub fn series_multiply(f: &TwistedSeries, g: &TwistedSeries) -> Result<TwistedSeries> {
    f.multiply(g)
}

pub fn valuation(f: &TwistedSeries) -> Result<Rational> {
    f.valuation()
}

/// The centre K[[u·T^r]] of D[[T, σ]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentreDescription {
    pub constant_subfield: DivisionAlgebraKind,
    pub period: u32,
    pub unit: AlgebraElement,
    pub unit_exponent_note: String,
    pub truncation: usize,
    /// Brute-force dimension over ℝ of the central coefficients at T^k,
    /// for every exponent whose commutation with T is witnessed.
    pub exponent_dims: Vec<usize>,
}

impl CentreDescription {
    pub fn power_series_name(&self) -> String {
        self.render("[[", "]]")
    }

    pub fn laurent_name(&self) -> String {
        self.render("((", "))")
    }

    fn render(&self, open: &str, close: &str) -> String {
        let k = self.constant_subfield.tag.ascii();
        let var = match self.period {
            1 => "T".to_string(),
            r => format!("T^{r}"),
        };
        if self.unit.is_real() {
            format!("{k}{open}{var}{close}")
        } else {
            format!("{k}{open}u{var}{close}")
        }
    }
}

/// Closed form of Z(D) ∩ Fix(σ).
fn closed_constant_subfield(twist: &Automorphism) -> AlgebraTag {
    match (twist.tag(), twist.action()) {
        (AlgebraTag::Complex, AutomorphismAction::Identity) => AlgebraTag::Complex,
        _ => AlgebraTag::Real,
    }
}

fn coords(a: &AlgebraElement) -> Vec<Rational> {
    a.coeffs().to_vec()
}

fn from_coords(tag: AlgebraTag, v: &[Rational]) -> AlgebraElement {
    AlgebraElement::new(tag, v.to_vec()).expect("coordinate vector has the right length")
}

/// Solves "a·T^k commutes with D (and with T when witnessed)" for a ∈ D.
fn central_coefficients(twist: &Automorphism, k: i64, with_t: bool) -> Result<Vec<Vec<Rational>>> {
    let tag = twist.tag();
    let n = tag.dim();
    let basis = AlgebraElement::basis(tag);
    let sigma_k = twist.pow(k);
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // e·a − a·σ^k(e) = 0 for each basis element e
    for e in &basis {
        let se = sigma_k.apply(e)?;
        let images: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| Ok(coords(&(&e.multiply(b)? - &b.multiply(&se)?))))
            .collect::<Result<_>>()?;
        for comp in 0..n {
            rows.push(images.iter().map(|col| col[comp].clone()).collect());
        }
    }
    if with_t {
        // σ(a) − a = 0
        let images: Vec<Vec<Rational>> = basis
            .iter()
            .map(|b| Ok(coords(&(&twist.apply(b)? - b))))
            .collect::<Result<_>>()?;
        for comp in 0..n {
            rows.push(images.iter().map(|col| col[comp].clone()).collect());
        }
    }
    Ok(nullspace(&rows, n))
}

fn satisfies(twist: &Automorphism, k: i64, a: &AlgebraElement) -> Result<bool> {
    let sigma_k = twist.pow(k);
    for e in AlgebraElement::basis(twist.tag()) {
        if e.multiply(a)? != a.multiply(&sigma_k.apply(&e)?)? {
            return Ok(false);
        }
    }
    Ok(twist.apply(a)? == *a)
}

/// Brute-force centre of D[[T, σ]] modulo T^N, checked against the closed
/// form K[[u·T^r]].
pub fn centre_basis(tag: AlgebraTag, twist: &Automorphism, truncation: usize) -> Result<CentreDescription> {
    if twist.tag() != tag {
        return Err(Error::KindMismatch {
            left: tag.ascii().into(),
            right: twist.tag().ascii().into(),
        });
    }
    let r = twist.galois_order();
    if truncation < 2 * r as usize {
        return Err(Error::MismatchedRing(format!(
            "truncation {truncation} cannot witness period {r}"
        )));
    }
    let u = twist.period_unit();
    let k_tag = closed_constant_subfield(twist);
    let k_basis = AlgebraElement::basis(k_tag);
    let mut dims = Vec::new();
    // the top exponent's commutation with T lands at T^N and is unwitnessed
    for k in 0..truncation as i64 - 1 {
        let brute = central_coefficients(twist, k, true)?;
        dims.push(brute.len());
        let closed: Vec<AlgebraElement> = if k % r as i64 == 0 {
            let w = u.pow(k / r as i64)?;
            k_basis
                .iter()
                .map(|b| {
                    let b = from_coords(tag, &embed(b, tag));
                    b.multiply(&w)
                })
                .collect::<Result<_>>()?
        } else {
            Vec::new()
        };
        let mut consistent = brute.len() == closed.len();
        for c in &closed {
            consistent &= satisfies(twist, k, c)?;
        }
        if !consistent {
            return Err(Error::InvariantViolation(format!(
                "centre at T^{k}: brute force gives dimension {}, closed form {}",
                brute.len(),
                closed.len()
            )));
        }
    }
    let note = if u.is_real() {
        "u = 1".to_string()
    } else {
        format!("u = {u}")
    };
    Ok(CentreDescription {
        constant_subfield: DivisionAlgebraKind::builtin(k_tag),
        period: r,
        unit: u,
        unit_exponent_note: note,
        truncation,
        exponent_dims: dims,
    })
}

fn embed(b: &AlgebraElement, into: AlgebraTag) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); into.dim()];
    for (slot, c) in v.iter_mut().zip(b.coeffs()) {
        *slot = c.clone();
    }
    v
}

/// Dimension of D((T, σ)) over its centre: e*² · r².
pub fn dim_over_centre(tag: AlgebraTag, twist: &Automorphism) -> Result<u32> {
    let e_star = comultiplicity(&DivisionAlgebraKind::builtin(tag))?;
    let r = twist.galois_order();
    Ok(e_star * e_star * r * r)
}

/// Size of the left basis {d_α·T^s : 0 ≤ s < r} of D((T, σ)) over the
/// brute-force centre, read off from the computed central coefficients.
pub fn dim_over_centre_by_basis(tag: AlgebraTag, twist: &Automorphism, truncation: usize) -> Result<u32> {
    let desc = centre_basis(tag, twist, truncation)?;
    let k_dim = desc.exponent_dims[0];
    let period = desc
        .exponent_dims
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, &d)| d > 0)
        .map(|(k, _)| k)
        .ok_or_else(|| Error::InvariantViolation("no central power of T was witnessed".into()))?;
    Ok((tag.dim() / k_dim * period) as u32)
}

type Matrix = Vec<Vec<AlgebraElement>>;

fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let tag = a[0][0].tag();
    let mut out = vec![vec![AlgebraElement::zero(tag); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = AlgebraElement::zero(tag);
            for (k, bk) in b.iter().enumerate() {
                acc = acc.add(&a[i][k].multiply(&bk[j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// diag(a, σ(a), …, σ^{n−1}(a))
fn scalar_matrix(twist: &Automorphism, a: &AlgebraElement, n: usize) -> Result<Matrix> {
    let tag = a.tag();
    let mut m = vec![vec![AlgebraElement::zero(tag); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = twist.pow(i as i64).apply(a)?;
    }
    Ok(m)
}

fn jordan_power(tag: AlgebraTag, n: usize, l: usize) -> Matrix {
    let mut m = vec![vec![AlgebraElement::zero(tag); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        if i + l < n {
            row[i + l] = AlgebraElement::one(tag);
        }
    }
    m
}

/// Checks J^ℓ·(a·I_n) = (σ^ℓ(a)·I_n)·J^ℓ for ℓ < n and a in the basis of D,
/// where a·I_n = diag(a, σ(a), …) and J is the nilpotent Jordan block. The
/// right side is compared both as a matrix product and against the
/// side-diagonal matrix with entry σ^{i+ℓ}(a) at (i, i+ℓ). Also checks that
/// a ↦ a·I_n is multiplicative.
pub fn verify_jordan_twist(tag: AlgebraTag, twist: &Automorphism, n: usize) -> Result<bool> {
    if !(1..=6).contains(&n) {
        return Err(Error::Domain(format!("block size {n} outside 1..=6")));
    }
    if twist.tag() != tag {
        return Err(Error::KindMismatch {
            left: tag.ascii().into(),
            right: twist.tag().ascii().into(),
        });
    }
    let basis = AlgebraElement::basis(tag);
    for a in &basis {
        let a_i = scalar_matrix(twist, a, n)?;
        for b in &basis {
            let lhs = mat_mul(&a_i, &scalar_matrix(twist, b, n)?)?;
            if lhs != scalar_matrix(twist, &a.multiply(b)?, n)? {
                return Ok(false);
            }
        }
        for l in 0..n {
            let j = jordan_power(tag, n, l);
            let lhs = mat_mul(&j, &a_i)?;
            let shifted = twist.pow(l as i64).apply(a)?;
            let rhs = mat_mul(&scalar_matrix(twist, &shifted, n)?, &j)?;
            let mut side = vec![vec![AlgebraElement::zero(tag); n]; n];
            for (i, row) in side.iter_mut().enumerate() {
                if i + l < n {
                    row[i + l] = twist.pow((i + l) as i64).apply(a)?;
                }
            }
            if lhs != rhs || rhs != side {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Built-in (algebra, twist) pairs by their command-line names.
pub fn parse_twist(tag: AlgebraTag, name: &str) -> Result<Automorphism> {
    match name {
        "id" | "identity" => Automorphism::identity(tag),
        "conj" if tag == AlgebraTag::Complex => Ok(Automorphism::conjugation()),
        "conj" => Err(Error::NotApplicable(format!(
            "complex conjugation is not an automorphism of {}",
            tag.symbol()
        ))),
        other => {
            let unit = match other {
                "inner-i" => [0, 1, 0, 0],
                "inner-j" => [0, 0, 1, 0],
                "inner-ij" => [0, 0, 0, 1],
                _ => return Err(Error::UnknownName(format!("twist {other}"))),
            };
            Automorphism::inner(AlgebraElement::from_ints(tag, &unit)?)
        }
    }
}

pub fn one_series(twist: &Automorphism, truncation: usize) -> Result<TwistedSeries> {
    TwistedSeries::monomial(twist.clone(), truncation, AlgebraElement::one(twist.tag()), 0)
}

/// T^exp with coefficient 1.
pub fn t_power(twist: &Automorphism, truncation: usize, exp: i64) -> Result<TwistedSeries> {
    TwistedSeries::monomial(twist.clone(), truncation, AlgebraElement::one(twist.tag()), exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use AlgebraTag::*;

    fn c(re: i64, im: i64) -> AlgebraElement {
        AlgebraElement::from_ints(Complex, &[re, im]).unwrap()
    }

    fn h(v: &[i64]) -> AlgebraElement {
        AlgebraElement::from_ints(Quaternion, v).unwrap()
    }

    #[test]
    fn i_t_squared_under_conjugation() {
        let conj = Automorphism::conjugation();
        let it = TwistedSeries::monomial(conj.clone(), 8, c(0, 1), 1).unwrap();
        let sq = it.multiply(&it).unwrap();
        assert_eq!(sq, t_power(&conj, 8, 2).unwrap());
    }

    #[test]
    fn untwisted_t_times_t() {
        let id = Automorphism::identity(Real).unwrap();
        let t = t_power(&id, 8, 1).unwrap();
        assert_eq!(t.multiply(&t).unwrap(), t_power(&id, 8, 2).unwrap());
    }

    #[test]
    fn constants_multiply_as_in_d() {
        let id = Automorphism::identity(Quaternion).unwrap();
        let a = TwistedSeries::monomial(id.clone(), 8, h(&[0, 1, 0, 0]), 0).unwrap();
        let b = TwistedSeries::monomial(id.clone(), 8, h(&[0, 0, 1, 0]), 0).unwrap();
        let ab = TwistedSeries::monomial(id, 8, h(&[0, 0, 0, 1]), 0).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), ab);
    }

    #[test]
    fn t_commutes_past_scalars_with_the_twist() {
        let conj = Automorphism::conjugation();
        let t = t_power(&conj, 8, 1).unwrap();
        let i = TwistedSeries::monomial(conj.clone(), 8, c(0, 1), 0).unwrap();
        let lhs = t.multiply(&i).unwrap();
        let rhs = TwistedSeries::monomial(conj, 8, c(0, -1), 1).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = one_series(&Automorphism::conjugation(), 8).unwrap();
        let b = one_series(&Automorphism::identity(Complex).unwrap(), 8).unwrap();
        assert!(matches!(a.multiply(&b), Err(Error::MismatchedRing(_))));
        let c6 = one_series(&Automorphism::conjugation(), 6).unwrap();
        assert!(matches!(a.multiply(&c6), Err(Error::MismatchedRing(_))));
    }

    #[test]
    fn truncation_drops_high_terms() {
        let id = Automorphism::identity(Real).unwrap();
        let t5 = t_power(&id, 8, 5).unwrap();
        assert!(t5.multiply(&t5).unwrap().is_zero());
    }

    #[test]
    fn valuations() {
        let id = Automorphism::identity(Real).unwrap();
        let one = AlgebraElement::one(Real);
        let f = TwistedSeries::from_terms(id.clone(), 8, &[(3, one.clone()), (5, one.clone())]).unwrap();
        assert_eq!(f.valuation().unwrap(), rat(1, 8));
        assert_eq!(one_series(&id, 8).unwrap().valuation().unwrap(), rat(1, 1));
        let g = TwistedSeries::from_terms(id.clone(), 8, &[(-1, one.clone()), (0, one)]).unwrap();
        assert_eq!(g.valuation().unwrap(), rat(2, 1));
        assert_eq!(TwistedSeries::zero(id, 8).unwrap().valuation(), Err(Error::UndefinedValuation));
    }

    #[test]
    fn laurent_product_shrinks_truncation() {
        let id = Automorphism::identity(Real).unwrap();
        let inv = t_power(&id, 8, -1).unwrap();
        let t = t_power(&id, 8, 1).unwrap();
        let prod = inv.multiply(&t).unwrap();
        assert_eq!(prod.truncation(), 7);
        assert_eq!(prod.leading_exponent(), Some(0));
    }

    #[test]
    fn complex_conjugation_centre() {
        let d = centre_basis(Complex, &Automorphism::conjugation(), 8).unwrap();
        assert_eq!(d.constant_subfield.tag, Real);
        assert_eq!(d.period, 2);
        assert_eq!(d.power_series_name(), "R[[T^2]]");
        assert_eq!(d.exponent_dims, vec![1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn quaternion_identity_centre() {
        let d = centre_basis(Quaternion, &Automorphism::identity(Quaternion).unwrap(), 8).unwrap();
        assert_eq!(d.constant_subfield.tag, Real);
        assert_eq!(d.period, 1);
        assert_eq!(d.power_series_name(), "R[[T]]");
    }

    #[test]
    fn real_centre_is_everything() {
        let d = centre_basis(Real, &Automorphism::identity(Real).unwrap(), 4).unwrap();
        assert_eq!(d.power_series_name(), "R[[T]]");
        assert_eq!(d.exponent_dims, vec![1, 1, 1]);
    }

    #[test]
    fn inner_twist_centre_needs_the_unit() {
        let tw = Automorphism::inner(h(&[0, 1, 0, 0])).unwrap();
        let d = centre_basis(Quaternion, &tw, 6).unwrap();
        assert_eq!(d.power_series_name(), "R[[uT]]");
        assert_eq!(d.unit_exponent_note, "u = i");
    }

    #[test]
    fn short_truncation_is_rejected() {
        assert!(centre_basis(Complex, &Automorphism::conjugation(), 3).is_err());
    }

    #[test]
    fn dimensions_over_centre() {
        let cases = [
            (Complex, Automorphism::conjugation(), 4),
            (Quaternion, Automorphism::identity(Quaternion).unwrap(), 4),
            (Real, Automorphism::identity(Real).unwrap(), 1),
            (Complex, Automorphism::identity(Complex).unwrap(), 1),
        ];
        for (tag, tw, want) in cases {
            assert_eq!(dim_over_centre(tag, &tw).unwrap(), want);
            assert_eq!(dim_over_centre_by_basis(tag, &tw, 8).unwrap(), want);
        }
    }

    #[test]
    fn jordan_twist_examples() {
        assert!(verify_jordan_twist(Complex, &Automorphism::conjugation(), 3).unwrap());
        for n in 1..=4 {
            assert!(verify_jordan_twist(Real, &Automorphism::identity(Real).unwrap(), n).unwrap());
        }
        let tw = Automorphism::inner(h(&[0, 1, 0, 0])).unwrap();
        assert!(verify_jordan_twist(Quaternion, &tw, 4).unwrap());
        assert!(verify_jordan_twist(Real, &Automorphism::identity(Real).unwrap(), 7).is_err());
    }

    #[test]
    fn display_series() {
        let conj = Automorphism::conjugation();
        let f = TwistedSeries::from_terms(conj, 4, &[(0, c(1, 0)), (1, c(0, 2)), (2, c(1, 1))]).unwrap();
        assert_eq!(f.to_string(), "1 + 2i·T + (1 + i)·T^2 + O(T^4)");
    }
}
