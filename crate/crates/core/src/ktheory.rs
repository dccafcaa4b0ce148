//! Rank/degree lattice of a real elliptic curve: Euler forms, mutations,
//! slope orbits and Fourier–Mukai partners.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::algebra::{fmt_rational, int, Rational};
use crate::error::{Error, Result};
use crate::local_data::{degree_of_simple, klein_local_datum, witt_local_datum, PointDatum, WittPointClass};
use crate::witt_surface::{canonical_name, catalog, numerical_type};

/// The seven real elliptic types, in table order.
pub const REAL_ELLIPTIC: [&str; 7] = ["A", "M", "K", "A_RH", "A_HH", "M_H", "D_2222"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassVector {
    pub degree: i64,
    pub rank: i64,
}

impl ClassVector {
    pub fn new(degree: i64, rank: i64) -> Self {
        ClassVector { degree, rank }
    }

    pub fn slope(&self) -> Result<Slope> {
        Slope::of(self.degree, self.rank)
    }

    /// Primitive representative of the ray with rank > 0, or degree > 0 at
    /// rank 0.
    pub fn normalized(&self) -> Self {
        let g = self.degree.gcd(&self.rank).max(1);
        let (d, r) = (self.degree / g, self.rank / g);
        if r < 0 || (r == 0 && d < 0) {
            ClassVector::new(-d, -r)
        } else {
            ClassVector::new(d, r)
        }
    }
}

/// degree/rank in ℚ ∪ {∞}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    pub fn of(degree: i64, rank: i64) -> Result<Slope> {
        match (degree, rank) {
            (0, 0) => Err(Error::Domain("the zero class has no slope".into())),
            (_, 0) => Ok(Slope::Infinity),
            (d, r) => Ok(Slope::Finite(Rational::new(d.into(), r.into()))),
        }
    }

    /// (numerator, denominator) with ∞ = 1/0.
    pub fn parts(&self) -> (i64, i64) {
        match self {
            Slope::Infinity => (1, 0),
            Slope::Finite(q) => (
                q.numer().to_i64().expect("small slope"),
                q.denom().to_i64().expect("small slope"),
            ),
        }
    }

    pub fn parse(s: &str) -> Option<Slope> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Some(Slope::Infinity),
            t => {
                let (n, d) = t.split_once('/').unwrap_or((t, "1"));
                let (n, d): (i64, i64) = (n.trim().parse().ok()?, d.trim().parse().ok()?);
                Slope::of(n, d).ok()
            }
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Infinity => f.write_str("∞"),
            Slope::Finite(q) => f.write_str(&fmt_rational(q)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveNumerics {
    pub kappa: u32,
    pub epsilon: u32,
    pub genus: u32,
    pub deg_s: u32,
    pub end_s_dim: u32,
}

/// Numerics of a real elliptic type, derived from the catalog surface and
/// the local datum of its designated simple sheaf.
pub fn curve_numerics(name: &str) -> Result<CurveNumerics> {
    let name = elliptic_name(name)?;
    let surface = catalog(name)?;
    let kappa = surface.kappa();
    let epsilon = numerical_type(name)?;
    let simple = designated_simple(name);
    let deg = degree_of_simple(&simple, kappa, epsilon, 1)?;
    if !deg.is_integer() || !deg.is_positive() {
        return Err(Error::InconsistentData(format!(
            "{name}: designated simple has degree {}",
            fmt_rational(&deg)
        )));
    }
    Ok(CurveNumerics {
        kappa,
        epsilon,
        genus: surface.genus()?,
        deg_s: deg.to_integer().to_u32().expect("small degree"),
        end_s_dim: simple.simple_end.dim_over_k,
    })
}

fn designated_simple(name: &str) -> PointDatum {
    match name {
        "K" => klein_local_datum(true),
        "A" | "M" => klein_local_datum(false),
        "D_2222" => witt_local_datum(WittPointClass::Segmentation),
        _ => witt_local_datum(WittPointClass::QuaternionBoundary),
    }
}

fn elliptic_name(name: &str) -> Result<&'static str> {
    let n = canonical_name(name)?;
    if REAL_ELLIPTIC.contains(&n) {
        Ok(n)
    } else {
        Err(Error::Domain(format!("{n} is not one of the seven real elliptic types")))
    }
}

/// κ[(1−g)·rE·rF + ε·(rE·dF − dE·rF)]
pub fn euler_form(e: ClassVector, f: ClassVector, n: &CurveNumerics) -> i64 {
    let k = n.kappa as i64;
    let g = n.genus as i64;
    let eps = n.epsilon as i64;
    k * ((1 - g) * e.rank * f.rank + eps * (e.rank * f.degree - e.degree * f.rank))
}

/// κp̄[(1−g_orb)·rr′ + (ε/p̄)·det]
pub fn average_euler_form(
    e: ClassVector,
    f: ClassVector,
    kappa: u32,
    epsilon: u32,
    pbar: u32,
    g_orb: &Rational,
) -> Rational {
    let kp = int((kappa * pbar) as i64);
    let rr = int(e.rank * f.rank);
    let det = int(e.rank * f.degree - e.degree * f.rank);
    kp * ((int(1) - g_orb) * rr + int(epsilon as i64) / int(pbar as i64) * det)
}

/// 2×2 integer matrix on (degree, rank) columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MutationMatrix(pub [[i64; 2]; 2]);

impl MutationMatrix {
    pub const IDENTITY: MutationMatrix = MutationMatrix([[1, 0], [0, 1]]);

    pub fn det(&self) -> i64 {
        let m = self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn apply(&self, v: ClassVector) -> ClassVector {
        let m = self.0;
        ClassVector::new(
            m[0][0] * v.degree + m[0][1] * v.rank,
            m[1][0] * v.degree + m[1][1] * v.rank,
        )
    }

    pub fn inverse(&self) -> Result<MutationMatrix> {
        let d = self.det();
        if d.abs() != 1 {
            return Err(Error::Domain(format!("determinant {d} is not a unit")));
        }
        let m = self.0;
        Ok(MutationMatrix([[d * m[1][1], -d * m[0][1]], [-d * m[1][0], d * m[0][0]]]))
    }

    pub fn compose(&self, other: &MutationMatrix) -> MutationMatrix {
        let (a, b) = (self.0, other.0);
        let mut c = [[0; 2]; 2];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        MutationMatrix(c)
    }
}

/// Global sign in σ(y) = y ± (⟨a,y⟩/…)·a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignConvention {
    Minus,
    Plus,
}

/// (M_L, M_S) under the given convention.
pub fn mutation_matrices_with(n: &CurveNumerics, conv: SignConvention) -> Result<(MutationMatrix, MutationMatrix)> {
    let num = n.kappa * n.epsilon * n.deg_s * n.deg_s;
    if n.end_s_dim == 0 || num % n.end_s_dim != 0 {
        return Err(Error::InconsistentData(format!(
            "κε·deg(S)²/|End S| = {num}/{} is not an integer",
            n.end_s_dim
        )));
    }
    let c = (num / n.end_s_dim) as i64;
    let e = n.epsilon as i64;
    Ok(match conv {
        SignConvention::Minus => (MutationMatrix([[1, 0], [-e, 1]]), MutationMatrix([[1, c], [0, 1]])),
        SignConvention::Plus => (MutationMatrix([[1, 0], [e, 1]]), MutationMatrix([[1, -c], [0, 1]])),
    })
}

pub fn mutation_matrices(n: &CurveNumerics) -> Result<(MutationMatrix, MutationMatrix)> {
    mutation_matrices_with(n, SignConvention::Minus)
}

/// Möbius action of a unimodular matrix on slopes.
pub fn apply_slope_matrix(m: &MutationMatrix, slope: &Slope) -> Slope {
    let (p, q) = slope.parts();
    m.apply(ClassVector::new(p, q))
        .slope()
        .expect("unimodular image of a nonzero vector")
}

/// Which coordinate's parity is constant on each of two orbits and
/// differs between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParitySplit {
    pub numerator: bool,
    pub denominator: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopeOrbits {
    pub count: usize,
    /// Lowest-height slopes of each orbit, up to five per orbit.
    pub representatives: Vec<Vec<Slope>>,
    pub bound: i64,
    /// Count under each sign convention (minus, plus).
    pub convention_counts: (usize, usize),
    pub parity: Option<ParitySplit>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut j = i;
        while self.0[j] != r {
            let next = self.0[j];
            self.0[j] = r;
            j = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn height(v: &ClassVector) -> (i64, i64, i64) {
    (v.degree.abs().max(v.rank), v.rank, v.degree)
}

/// Orbits of normalized primitive vectors in the box under the generators;
/// each orbit is sorted by height.
fn orbits_in_box(gens: &[MutationMatrix], bound: i64) -> Vec<Vec<ClassVector>> {
    let mut vecs = Vec::new();
    for r in 0..=bound {
        for d in -bound..=bound {
            let v = ClassVector::new(d, r);
            if d.gcd(&r) == 1 && v.normalized() == v {
                vecs.push(v);
            }
        }
    }
    let index: HashMap<ClassVector, usize> = vecs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut uf = UnionFind((0..vecs.len()).collect());
    for (i, v) in vecs.iter().enumerate() {
        for g in gens {
            let w = g.apply(*v).normalized();
            if let Some(&j) = index.get(&w) {
                uf.union(i, j);
            }
        }
    }
    let mut groups: HashMap<usize, Vec<ClassVector>> = HashMap::new();
    for (i, v) in vecs.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(*v);
    }
    let mut out: Vec<Vec<ClassVector>> = groups.into_values().collect();
    for o in &mut out {
        o.sort_by_key(height);
    }
    out.sort_by_key(|o| height(&o[0]));
    out
}

fn generators(n: &CurveNumerics, conv: SignConvention) -> Result<Vec<MutationMatrix>> {
    let (l, s) = mutation_matrices_with(n, conv)?;
    Ok(vec![l, l.inverse()?, s, s.inverse()?])
}

fn parity_split(orbits: &[Vec<ClassVector>]) -> Option<ParitySplit> {
    if orbits.len() != 2 {
        return None;
    }
    let split = |f: fn(&ClassVector) -> i64| {
        let classes: Vec<Option<i64>> = orbits
            .iter()
            .map(|o| {
                let p = f(&o[0]).rem_euclid(2);
                o.iter().all(|v| f(v).rem_euclid(2) == p).then_some(p)
            })
            .collect();
        matches!((classes[0], classes[1]), (Some(a), Some(b)) if a != b)
    };
    Some(ParitySplit {
        numerator: split(|v| v.degree),
        denominator: split(|v| v.rank),
    })
}

pub const MIN_HEIGHT_BOUND: i64 = 50;

/// Slope orbits under ⟨M_L, M_S⟩ with |degree|, |rank| ≤ bound.
pub fn slope_orbits(n: &CurveNumerics, bound: i64) -> Result<SlopeOrbits> {
    if bound < MIN_HEIGHT_BOUND {
        return Err(Error::Domain(format!("height bound must be at least {MIN_HEIGHT_BOUND}")));
    }
    let minus = orbits_in_box(&generators(n, SignConvention::Minus)?, bound);
    let plus = orbits_in_box(&generators(n, SignConvention::Plus)?, bound);
    let half = orbits_in_box(&generators(n, SignConvention::Minus)?, bound / 2);
    if minus.len() != plus.len() || minus.len() != half.len() {
        return Err(Error::Inconclusive(format!(
            "orbit counts {} / {} (conventions) and {} at half the bound",
            minus.len(),
            plus.len(),
            half.len()
        )));
    }
    let representatives = minus
        .iter()
        .map(|o| o.iter().take(5).map(|v| v.slope().expect("nonzero")).collect())
        .collect();
    Ok(SlopeOrbits {
        count: minus.len(),
        representatives,
        bound,
        convention_counts: (minus.len(), plus.len()),
        parity: parity_split(&minus),
    })
}

/// Orbit of a single slope's ray within the box, for membership queries.
pub fn same_orbit(n: &CurveNumerics, a: &Slope, b: &Slope, bound: i64) -> Result<bool> {
    let gens = generators(n, SignConvention::Minus)?;
    let orbits = orbits_in_box(&gens, bound);
    let locate = |s: &Slope| {
        let (p, q) = s.parts();
        let v = ClassVector::new(p, q).normalized();
        orbits.iter().position(|o| o.contains(&v))
    };
    match (locate(a), locate(b)) {
        (Some(x), Some(y)) => Ok(x == y),
        _ => Err(Error::Domain("slope outside the height bound".into())),
    }
}

/// Real elliptic curves with an equivalent derived category.
pub fn fm_partners(name: &str) -> Result<BTreeSet<&'static str>> {
    let n = elliptic_name(name)?;
    Ok(match n {
        "K" | "A_RH" => BTreeSet::from(["K", "A_RH"]),
        other => BTreeSet::from([other]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn table_numerics() {
        let expect = [
            ("A", 1, 1, 1),
            ("M", 1, 1, 1),
            ("K", 1, 2, 2),
            ("A_RH", 2, 2, 4),
            ("A_HH", 4, 1, 4),
            ("M_H", 4, 1, 4),
            ("D_2222", 2, 1, 2),
        ];
        for (name, k, e, end) in expect {
            let n = curve_numerics(name).unwrap();
            assert_eq!((n.kappa, n.epsilon, n.end_s_dim, n.deg_s, n.genus), (k, e, end, 1, 1), "{name}");
        }
        assert!(curve_numerics("D").is_err());
        assert!(curve_numerics("T_C").is_err());
    }

    #[test]
    fn euler_form_examples() {
        let l = ClassVector::new(0, 1);
        let ell = curve_numerics("K").unwrap();
        assert_eq!(euler_form(l, l, &ell), 0);
        let p1 = CurveNumerics { kappa: 1, epsilon: 1, genus: 0, deg_s: 1, end_s_dim: 1 };
        assert_eq!(euler_form(l, l, &p1), 1);
        let d22 = CurveNumerics { kappa: 2, epsilon: 1, genus: 0, deg_s: 1, end_s_dim: 2 };
        assert_eq!(euler_form(l, l, &d22), 2);
    }

    #[test]
    fn average_form() {
        let l = ClassVector::new(0, 1);
        assert_eq!(average_euler_form(l, l, 2, 1, 6, &int(1)), int(0));
        let p1 = CurveNumerics { kappa: 3, epsilon: 2, genus: 0, deg_s: 1, end_s_dim: 1 };
        let (e, f) = (ClassVector::new(2, 3), ClassVector::new(-1, 5));
        assert_eq!(average_euler_form(e, f, 3, 2, 1, &int(0)), int(euler_form(e, f, &p1)));
        // D_22 with weights 3 and 3: κ = 2, ε = 1, p̄ = 6
        let v = average_euler_form(ClassVector::new(1, 0), l, 2, 1, 6, &int(1));
        assert_eq!(v, int(-2));
        assert_eq!(average_euler_form(l, ClassVector::new(1, 0), 2, 1, 6, &rat(1, 2)), int(2));
    }

    #[test]
    fn mutations() {
        let k = curve_numerics("K").unwrap();
        let (ml, ms) = mutation_matrices_with(&k, SignConvention::Plus).unwrap();
        assert_eq!(ml, MutationMatrix([[1, 0], [2, 1]]));
        assert_eq!(ms.0[0][1].abs(), 1);
        for name in REAL_ELLIPTIC {
            let n = curve_numerics(name).unwrap();
            for conv in [SignConvention::Minus, SignConvention::Plus] {
                let (ml, ms) = mutation_matrices_with(&n, conv).unwrap();
                assert_eq!(ml.det(), 1);
                assert_eq!(ms.det(), 1);
                assert_eq!(ml.apply(ClassVector::new(5, 0)).degree, 5);
            }
        }
        let bad = CurveNumerics { kappa: 1, epsilon: 1, genus: 1, deg_s: 1, end_s_dim: 2 };
        assert!(matches!(mutation_matrices(&bad), Err(Error::InconsistentData(_))));
    }

    #[test]
    fn slope_action() {
        let m = MutationMatrix([[0, -1], [1, -1]]);
        assert_eq!(apply_slope_matrix(&m, &Slope::Infinity), Slope::Finite(int(0)));
        let mut s = Slope::Infinity;
        for _ in 0..3 {
            s = apply_slope_matrix(&m, &s);
        }
        assert_eq!(s, Slope::Infinity);
        let q = Slope::Finite(rat(-3, 7));
        assert_eq!(apply_slope_matrix(&MutationMatrix::IDENTITY, &q), q);
        assert_eq!(m.compose(&m).compose(&m).0, [[1, 0], [0, 1]]);
    }

    #[test]
    fn orbit_counts_match_table() {
        let expect = [1, 1, 2, 2, 1, 1, 1];
        for (name, want) in REAL_ELLIPTIC.iter().zip(expect) {
            let n = curve_numerics(name).unwrap();
            let o = slope_orbits(&n, 60).unwrap();
            assert_eq!(o.count, want, "{name}");
            assert_eq!(o.convention_counts.0, o.convention_counts.1);
        }
    }

    #[test]
    fn two_orbits_split_by_rank_parity() {
        for name in ["K", "A_RH"] {
            let o = slope_orbits(&curve_numerics(name).unwrap(), 50).unwrap();
            let p = o.parity.unwrap();
            assert!(p.denominator, "{name}");
            assert!(!p.numerator, "{name}");
        }
        let k = curve_numerics("K").unwrap();
        assert!(same_orbit(&k, &Slope::Finite(int(0)), &Slope::Finite(int(1)), 50).unwrap());
        assert!(!same_orbit(&k, &Slope::Finite(int(0)), &Slope::Infinity, 50).unwrap());
    }

    #[test]
    fn small_bound_refused() {
        let n = curve_numerics("A").unwrap();
        assert!(matches!(slope_orbits(&n, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn partners() {
        assert_eq!(fm_partners("K").unwrap(), BTreeSet::from(["K", "A_RH"]));
        for name in REAL_ELLIPTIC {
            let p = fm_partners(name).unwrap();
            assert!(p.contains(name));
            for q in &p {
                assert!(fm_partners(q).unwrap().contains(name));
                let (a, b) = (curve_numerics(name).unwrap(), curve_numerics(q).unwrap());
                assert_eq!(slope_orbits(&a, 50).unwrap().count, slope_orbits(&b, 50).unwrap().count);
            }
        }
        assert!(fm_partners("D").is_err());
    }

    #[test]
    fn slope_parsing() {
        assert_eq!(Slope::parse("3/6"), Some(Slope::Finite(rat(1, 2))));
        assert_eq!(Slope::parse("inf"), Some(Slope::Infinity));
        assert_eq!(Slope::parse("0/0"), None);
        assert!(ClassVector::new(0, 0).slope().is_err());
        assert_eq!(ClassVector::new(-4, -6).normalized(), ClassVector::new(2, 3));
    }
}
