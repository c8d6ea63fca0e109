//! Piecewise case decompositions of the three path families into half-open
//! cones, and their assembly into generating functions.
//!
//! Families and coordinates:
//! - `three`: `(k1,k2,k3,r2,r3)` for `(k1,k2,k3)`-paths with ranks `(0,r2,r3)`.
//! - `k4`: `(k,a,b,c)` for `(k,k,k,k)`-paths, `r2 = k-a`, `r3 = 2k-a-b`, `r4 = 3k-a-b-c`.
//! - `kaaa`: `(k,m,a,b,c)` for `(k,k+m,k+m,k+m)`-paths, `r2 = k-a`,
//!   `r3 = 2k+m-a-b`, `r4 = 3k+2m-a-b-c`.

mod k4;
mod kaaa;
mod three;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cones::{HalfOpenCone, Parity, RationalGF};
use crate::error::{usage, Error, Result};
use crate::exec::{self, Strategy};
use crate::paths::{self, KVector};
use crate::polynomial::{Ctx, LaurentPoly, Monomial, MonomialMap, VariableContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Three,
    K4,
    Kaaa,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "three" => Ok(Family::Three),
            "k4" => Ok(Family::K4),
            "kaaa" => Ok(Family::Kaaa),
            other => Err(usage!("unknown family {other:?} (expected three, k4 or kaaa)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Three => "three",
            Family::K4 => "k4",
            Family::Kaaa => "kaaa",
        })
    }
}

fn ctx(names: &[&str]) -> Ctx {
    VariableContext::new(names).expect("static context")
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Three, Family::K4, Family::Kaaa];

    pub fn coordinate_names(self) -> &'static [&'static str] {
        match self {
            Family::Three => &["k1", "k2", "k3", "r2", "r3"],
            Family::K4 => &["k", "a", "b", "c"],
            Family::Kaaa => &["k", "m", "a", "b", "c"],
        }
    }

    pub fn dim(self) -> usize {
        self.coordinate_names().len()
    }

    /// Context of the cone integer-point transforms (one variable per coordinate).
    pub fn sigma_context(self) -> Ctx {
        match self {
            Family::Three => ctx(&["z1", "z2", "z3", "w2", "w3"]),
            Family::K4 => ctx(&["y", "z1", "z2", "z3"]),
            Family::Kaaa => ctx(&["s1", "s2", "s3", "s4", "s5"]),
        }
    }

    /// Number of leading coordinates recorded by an output variable.
    pub fn marked(self) -> usize {
        match self {
            Family::Three => 3,
            Family::K4 => 4,
            Family::Kaaa => 5,
        }
    }

    /// Context of the per-case generating functions: markers, then `q`, `t`.
    pub fn output_context(self) -> Ctx {
        match self {
            Family::Three => ctx(&["x1", "x2", "x3", "q", "t"]),
            Family::K4 => ctx(&["x", "y1", "y2", "y3", "q", "t"]),
            Family::Kaaa => ctx(&["x", "y", "z1", "z2", "z3", "q", "t"]),
        }
    }

    /// Context of the theorem generating function (auxiliary markers set to 1).
    pub fn theorem_context(self) -> Ctx {
        match self {
            Family::Three => ctx(&["x1", "x2", "x3", "q", "t"]),
            Family::K4 => ctx(&["x", "q", "t"]),
            Family::Kaaa => ctx(&["x", "y", "q", "t"]),
        }
    }

    /// Path coordinates -> `(k-vector, ranks)`, or `None` unless the point is
    /// a genuine path with positive parts.
    pub fn path_of(self, p: &[i64]) -> Option<(KVector, Vec<u32>)> {
        let (parts, ranks): (Vec<i64>, Vec<i64>) = match self {
            Family::Three => (vec![p[0], p[1], p[2]], vec![0, p[3], p[4]]),
            Family::K4 => {
                let (k, a, b, c) = (p[0], p[1], p[2], p[3]);
                (vec![k; 4], vec![0, k - a, 2 * k - a - b, 3 * k - a - b - c])
            }
            Family::Kaaa => {
                let (k, m, a, b, c) = (p[0], p[1], p[2], p[3], p[4]);
                (vec![k, k + m, k + m, k + m], vec![0, k - a, 2 * k + m - a - b, 3 * k + 2 * m - a - b - c])
            }
        };
        if parts.iter().any(|&x| x < 1) || ranks.iter().any(|&r| r < 0) {
            return None;
        }
        for i in 0..parts.len() - 1 {
            if ranks[i + 1] > ranks[i] + parts[i] {
                return None;
            }
        }
        let kv = KVector::new(parts.iter().map(|&x| x as u32).collect::<Vec<_>>()).ok()?;
        Some((kv, ranks.iter().map(|&r| r as u32).collect()))
    }

    /// Inverse of [`Family::path_of`] for a member k-vector of the family.
    pub fn coordinates_of(self, kvec: &KVector, ranks: &[u32]) -> Option<Vec<i64>> {
        let k: Vec<i64> = kvec.parts().iter().map(|&x| x as i64).collect();
        let r: Vec<i64> = ranks.iter().map(|&x| x as i64).collect();
        match self {
            Family::Three if k.len() == 3 => Some(vec![k[0], k[1], k[2], r[1], r[2]]),
            Family::K4 if k.len() == 4 && k.iter().all(|&x| x == k[0]) => {
                let kk = k[0];
                let a = kk - r[1];
                let b = 2 * kk - a - r[2];
                let c = 3 * kk - a - b - r[3];
                Some(vec![kk, a, b, c])
            }
            Family::Kaaa if k.len() == 4 && k[1] >= k[0] && k[1] == k[2] && k[2] == k[3] => {
                let (kk, m) = (k[0], k[1] - k[0]);
                let a = kk - r[1];
                let b = 2 * kk + m - a - r[2];
                let c = 3 * kk + 2 * m - a - b - r[3];
                Some(vec![kk, m, a, b, c])
            }
            _ => None,
        }
    }

    /// The family's k-vectors up to `bound`: parts `<= bound` for `three`,
    /// `k <= bound` for `k4`, `k >= 1` and `k + m <= bound` for `kaaa`.
    pub fn kvectors(self, bound: u32) -> Vec<KVector> {
        let mut out = Vec::new();
        match self {
            Family::Three => {
                for a in 1..=bound {
                    for b in 1..=bound {
                        for c in 1..=bound {
                            out.push(KVector::new(vec![a, b, c]).unwrap());
                        }
                    }
                }
            }
            Family::K4 => {
                for k in 1..=bound {
                    out.push(KVector::new(vec![k; 4]).unwrap());
                }
            }
            Family::Kaaa => {
                for k in 1..=bound {
                    for m in 0..=bound - k {
                        out.push(KVector::new(vec![k, k + m, k + m, k + m]).unwrap());
                    }
                }
            }
        }
        out
    }

    /// Closed-form `(area, bounce)` of the path with coordinates `p`.
    pub fn closed_stats(self, p: &[i64]) -> Result<(u32, u32)> {
        let u = |i: usize| -> Result<u32> {
            u32::try_from(p[i]).map_err(|_| usage!("coordinate {} of {p:?} is negative", i + 1))
        };
        match self {
            Family::Three => paths::closed_stats_three(u(0)?, u(1)?, u(2)?, u(3)?, u(4)?),
            Family::K4 => paths::closed_stats_k4(u(0)?, u(1)?, u(2)?, u(3)?),
            Family::Kaaa => paths::closed_stats_kaaa(u(0)?, u(1)?, u(2)?, u(3)?, u(4)?),
        }
    }

    /// Branch indices of the family's bounce formula accepting `p`.
    pub fn branches(self, p: &[i64]) -> Vec<usize> {
        match self {
            Family::Three => paths::three_branches(p[1], p[3], p[4]),
            Family::K4 => paths::k4_branches(p[0], p[1], p[2], p[3]),
            Family::Kaaa => paths::kaaa_branches(p[0], p[1], p[2], p[3], p[4]),
        }
    }

    /// `(area, bounce)` given by one branch of the formula, evaluated formally
    /// (also outside the path region, e.g. at translated base points).
    pub fn formal_stats(self, branch: usize, p: &[i64]) -> (i64, i64) {
        match self {
            Family::Three => (p[3] + p[4], paths::three_branch_value(branch, p[0], p[1], p[3], p[4])),
            Family::K4 => {
                let (k, a, b, c) = (p[0], p[1], p[2], p[3]);
                (6 * k - 3 * a - 2 * b - c, paths::k4_branch_value(branch, k, a, b, c))
            }
            Family::Kaaa => {
                let (k, m, a, b, c) = (p[0], p[1], p[2], p[3], p[4]);
                (6 * k + 3 * m - 3 * a - 2 * b - c, paths::kaaa_branch_value(branch, k, m, a, b, c))
            }
        }
    }

    /// Output monomial `markers(p) q^area t^bounce`.
    pub fn output_monomial(self, p: &[i64], area: i64, bounce: i64) -> Monomial {
        let mut e: Vec<i32> = p[..self.marked()].iter().map(|&x| x as i32).collect();
        e.push(area as i32);
        e.push(bounce as i32);
        Monomial(e)
    }

    /// Series weights selecting the size variables of the theorem context.
    pub fn size_weights(self) -> Vec<u32> {
        match self {
            Family::Three => vec![1, 1, 1, 0, 0],
            Family::K4 => vec![1, 0, 0],
            Family::Kaaa => vec![1, 1, 0, 0],
        }
    }

    /// Exponents of the theorem size variables belonging to a k-vector of the family.
    pub fn size_exponents(self, kvec: &KVector) -> Vec<i32> {
        let k = kvec.parts();
        let mut e = vec![0; self.theorem_context().len()];
        match self {
            Family::Three => e[..3].copy_from_slice(&[k[0] as i32, k[1] as i32, k[2] as i32]),
            Family::K4 => e[0] = k[0] as i32,
            Family::Kaaa => {
                e[0] = k[0] as i32;
                e[1] = (k[1] - k[0]) as i32;
            }
        }
        e
    }
}

/// `coeffs . p + constant >= 0` (or `> 0` when strict).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub constant: i64,
    pub strict: bool,
    pub text: String,
}

impl Inequality {
    pub fn holds(&self, p: &[i64]) -> bool {
        let v: i64 = self.coeffs.iter().zip(p).map(|(a, b)| a * b).sum::<i64>() + self.constant;
        if self.strict {
            v > 0
        } else {
            v >= 0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityConstraint {
    /// Linear form over the coordinates.
    pub form: Vec<i64>,
    pub parity: Parity,
    pub text: String,
}

impl ParityConstraint {
    pub fn holds(&self, p: &[i64]) -> bool {
        self.parity.matches(self.form.iter().zip(p).map(|(a, b)| a * b).sum())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub inequalities: Vec<Inequality>,
    pub parity: Option<ParityConstraint>,
}

impl Region {
    pub fn contains(&self, p: &[i64]) -> bool {
        self.inequalities.iter().all(|i| i.holds(p)) && self.parity.as_ref().is_none_or(|c| c.holds(p))
    }
}

fn affine_form(coords: &Ctx, text: &str) -> Result<(Vec<i64>, i64)> {
    let poly = LaurentPoly::parse(coords, text)?;
    let mut coeffs = vec![0i64; coords.len()];
    let mut constant = 0i64;
    for (m, c) in poly.terms() {
        let c = c.to_i64().ok_or_else(|| usage!("coefficient too large in {text:?}"))?;
        let e = m.exps();
        if e.iter().all(|&x| x == 0) {
            constant = c;
        } else if e.iter().filter(|&&x| x != 0).count() == 1 && e.contains(&1) {
            coeffs[e.iter().position(|&x| x == 1).unwrap()] = c;
        } else {
            return Err(usage!("{text:?} is not affine"));
        }
    }
    Ok((coeffs, constant))
}

/// Parses `lhs OP rhs` with `OP` one of `>=`, `<=`, `>`, `<`, `==`.
fn parse_constraint(coords: &Ctx, text: &str) -> Result<Vec<Inequality>> {
    let ops = [">=", "<=", "==", ">", "<"];
    let (op, pos) = ops
        .iter()
        .find_map(|op| text.find(op).map(|p| (*op, p)))
        .ok_or_else(|| usage!("no comparison in {text:?}"))?;
    let (l, r) = (&text[..pos], &text[pos + op.len()..]);
    let (lc, lk) = affine_form(coords, l)?;
    let (rc, rk) = affine_form(coords, r)?;
    let diff: Vec<i64> = lc.iter().zip(&rc).map(|(a, b)| a - b).collect();
    let neg: Vec<i64> = diff.iter().map(|x| -x).collect();
    let mk = |coeffs: Vec<i64>, constant: i64, strict: bool| Inequality {
        coeffs,
        constant,
        strict,
        text: text.trim().to_string(),
    };
    Ok(match op {
        ">=" => vec![mk(diff, lk - rk, false)],
        ">" => vec![mk(diff, lk - rk, true)],
        "<=" => vec![mk(neg, rk - lk, false)],
        "<" => vec![mk(neg, rk - lk, true)],
        _ => vec![mk(diff, lk - rk, false), mk(neg, rk - lk, false)],
    })
}

pub(crate) fn region(family: Family, constraints: &[&str], parity: Option<(&str, Parity)>) -> Region {
    let coords = ctx(family.coordinate_names());
    let inequalities = constraints
        .iter()
        .flat_map(|c| parse_constraint(&coords, c).expect("catalog constraint"))
        .collect();
    let parity = parity.map(|(form, parity)| {
        let (coeffs, k) = affine_form(&coords, form).expect("catalog parity form");
        assert_eq!(k, 0, "parity forms are linear");
        ParityConstraint { form: coeffs, parity, text: form.to_string() }
    });
    Region { inequalities, parity }
}

/// One simplicial cone of a case, with the output monomial of each generator.
#[derive(Clone, Debug)]
pub struct ConePiece {
    pub label: String,
    pub cone: HalfOpenCone,
    pub generator_outputs: Vec<Monomial>,
}

#[derive(Clone, Debug)]
pub enum StatMap {
    /// One output monomial per coordinate variable.
    Substitution(MonomialMap),
    /// Outputs given per generator; each parallelepiped point `p` is sent
    /// to `markers(p) q^area(p) t^bounce(p)` using the case's branch.
    GeneratorWeights,
}

#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub id: String,
    pub family: Family,
    /// `+1`, or `-1` for an overlap that is subtracted.
    pub sign: i64,
    pub region: Region,
    pub pieces: Vec<ConePiece>,
    pub stat_map: StatMap,
    /// Index of the bounce-formula branch in force on the region.
    pub branch: usize,
    /// Cones whose contribution is subtracted after the parity filter.
    pub corrections: Vec<ConePiece>,
}

impl CaseSpec {
    /// Output monomial the stat map assigns to the lattice point `p`.
    pub fn output_of(&self, p: &[i64]) -> Monomial {
        match &self.stat_map {
            StatMap::Substitution(map) => map.apply(&Monomial(p.iter().map(|&x| x as i32).collect())),
            StatMap::GeneratorWeights => {
                let (area, bounce) = self.family.formal_stats(self.branch, p);
                self.family.output_monomial(p, area, bounce)
            }
        }
    }

    /// Whether `p` passes the parity filter of the case.
    pub fn parity_ok(&self, p: &[i64]) -> bool {
        self.region.parity.as_ref().is_none_or(|c| c.holds(p))
    }

    /// Signed number of times the cone realization counts `p`.
    pub fn realized_multiplicity(&self, p: &[i64]) -> i64 {
        if !self.parity_ok(p) {
            return 0;
        }
        let plus = self.pieces.iter().filter(|c| c.cone.contains(p)).count() as i64;
        let minus = self.corrections.iter().filter(|c| c.cone.contains(p)).count() as i64;
        plus - minus
    }
}

/// The case list for a family.
pub fn case_catalog(family: Family) -> Vec<CaseSpec> {
    match family {
        Family::Three => three::cases(),
        Family::K4 => k4::cases(),
        Family::Kaaa => kaaa::cases(),
    }
}

pub fn find_case(family: Family, id: &str) -> Option<CaseSpec> {
    case_catalog(family).into_iter().find(|c| c.id == id)
}

/// Region membership (inequalities and parity).
pub fn case_membership(spec: &CaseSpec, point: &[i64]) -> Result<bool> {
    if point.len() != spec.family.dim() {
        return Err(usage!(
            "point has {} coordinates, family {} needs {}",
            point.len(),
            spec.family,
            spec.family.dim()
        ));
    }
    Ok(spec.region.contains(point))
}

fn piece_gf(spec: &CaseSpec, piece: &ConePiece) -> Result<RationalGF> {
    let sigma_ctx = spec.family.sigma_context();
    let mut sigma = piece.cone.integer_point_transform(&sigma_ctx)?;
    if let Some(pc) = &spec.region.parity {
        sigma = sigma.extract_parity_form(&pc.form, pc.parity)?;
    }
    match &spec.stat_map {
        StatMap::Substitution(map) => sigma.substitute(map),
        StatMap::GeneratorWeights => {
            let out = spec.family.output_context();
            let mut num = LaurentPoly::zero(&out);
            for (m, c) in sigma.numerator().terms() {
                let p: Vec<i64> = m.exps().iter().map(|&e| e as i64).collect();
                num = &num + &LaurentPoly::term(&out, spec.output_of(&p), c.clone());
            }
            RationalGF::new(num, piece.generator_outputs.clone())
        }
    }
}

/// Generating function of one case with markers retained (sign not applied).
pub fn assemble_case(spec: &CaseSpec) -> Result<RationalGF> {
    let mut acc = RationalGF::zero(&spec.family.output_context());
    for piece in &spec.pieces {
        acc = acc.add(&piece_gf(spec, piece)?)?;
    }
    for corr in &spec.corrections {
        acc = acc.sub(&piece_gf(spec, corr)?)?;
    }
    Ok(acc)
}

/// Signed sum of all cases, auxiliary markers set to 1.
pub fn assemble_theorem(family: Family) -> Result<RationalGF> {
    assemble_theorem_with(family, Strategy::default())
}

pub fn assemble_theorem_with(family: Family, strategy: Strategy) -> Result<RationalGF> {
    let to_theorem = MonomialMap::specialize_to_one(&family.output_context(), &family.theorem_context())?;
    let parts = exec::try_map(strategy, case_catalog(family), |spec| {
        assemble_case(&spec)?.substitute(&to_theorem).map(|g| g.scale(spec.sign))
    })?;
    let mut acc = RationalGF::zero(&family.theorem_context());
    for g in &parts {
        acc = acc.add(g)?;
    }
    Ok(acc)
}

/// A theorem generating function as printed, with an explicit sign factor
/// for a printed numerator whose overall sign is wrong.
#[derive(Clone, Debug)]
pub struct TheoremGF {
    pub family: Family,
    /// Verbatim transcription.
    pub printed: RationalGF,
    /// `+1`, or `-1` when the printed numerator carries the wrong sign.
    pub sign: i64,
    /// Size variables, then markers that are specialized to 1.
    pub size_variables: Vec<&'static str>,
    pub specialized_markers: Vec<&'static str>,
}

impl TheoremGF {
    /// The generating function the catalog is expected to equal.
    pub fn corrected(&self) -> RationalGF {
        self.printed.scale(self.sign)
    }
}

const THM_THREE_NUM: &str = "(1 - x1*x2*q*t^2)*(1 - x1*x2*q^2*t)";
const THM_THREE_DEN: [&str; 7] = ["x2*q", "x2*t", "x1*q*t", "x1*t^2", "x1*q^2", "x1*x2*q*t", "x3"];

const THM_K4_NUM: &str = "1 + (q^5*t + q*t^5 + q^4*t^2 + q^2*t^4 + q^4*t + q*t^4 + q^3*t^2 + q^2*t^3 + q^3*t^3)*x
    + (-q^7*t^3 - q^3*t^7 + q^6*t^5 + q^5*t^6 - q^6*t^4 - q^4*t^6 - q^5*t^5 - q^5*t^4 - q^4*t^5)*x^2
    - (q^8*t^8 + q^9*t^6 + q^6*t^9 + q^8*t^7 + q^7*t^8)*x^3";
const THM_K4_DEN: [&str; 5] = ["q^3*t*x", "q*t^3*x", "q^2*t^2*x", "q^6*x", "t^6*x"];

const THM_KAAA_NUM: &str = "(q^13*t^7 + q^7*t^13 + q^12*t^8 + q^8*t^12 + q^9*t^12 + q^12*t^9 + q^11*t^11 + q^10*t^11 + q^11*t^10 + q^9*t^11 + q^11*t^9 + q^10*t^10)*x^3*y^2
    - (q^11*t^5 + q^5*t^11 + q^10*t^6 + q^6*t^10 + q^8*t^9 + q^9*t^8 + q^7*t^9 + q^9*t^7 + q^8*t^8 - q^7*t^8 - q^8*t^7 + q^7*t^7)*x^2*y^2
    - (q^7*t^4 + q^4*t^7 + q^6*t^5 + q^5*t^6)*x*y^2
    - (q^12*t^6 + q^6*t^12 + q^8*t^11 + q^11*t^8 + q^10*t^8 + q^8*t^10 + q^7*t^11 + q^11*t^7 + q^7*t^10 + q^10*t^7 + 2*q^9*t^9 + q^8*t^9 + q^9*t^8)*x^3*y
    - (q^10*t^3 + q^3*t^10 + q^5*t^7 + q^7*t^5 - q^5*t^9 - q^9*t^5 + q^4*t^9 + q^9*t^4 + q^4*t^8 + q^8*t^4 + q^5*t^6 + q^6*t^5 - q^8*t^6 - q^6*t^8)*x^2*y
    + (q*t^8 + q^8*t + q*t^7 + q^7*t + q^6*t^3 + q^3*t^6 + q^4*t^5 + q^5*t^4 + q^2*t^5 + q^5*t^2 + 2*q^4*t^4 + q^5*t^3 + q^3*t^5 + 2*q^3*t^4 + 2*q^4*t^3
       + q^7*t^2 + q^2*t^7 + q^6*t^2 + q^2*t^6)*x*y
    - (q^2*t + q*t^2)*y
    + (q^9*t^6 + q^6*t^9 + q^8*t^7 + q^7*t^8 + q^8*t^8)*x^3 + (q^7*t^3 + q^3*t^7 - q^5*t^6 - q^6*t^5 + q^4*t^6 + q^6*t^4 + q^5*t^5 + q^4*t^5 + q^5*t^4)*x^2
    - (q*t^5 + q^5*t + q^2*t^4 + q^4*t^2 + q*t^4 + q^4*t + q^3*t^3 + q^2*t^3 + q^3*t^2)*x - 1";
const THM_KAAA_DEN: [&str; 8] = ["x*q^6", "x*t^6", "x*q^3*t", "x*q*t^3", "x*q^2*t^2", "y*q^3", "y*t^3", "y*q*t"];

pub fn theorem(family: Family) -> TheoremGF {
    let c = family.theorem_context();
    let (num, den, sign, size, markers): (&str, &[&str], i64, Vec<&str>, Vec<&str>) = match family {
        Family::Three => (THM_THREE_NUM, &THM_THREE_DEN, 1, vec!["x1", "x2", "x3"], vec![]),
        Family::K4 => (THM_K4_NUM, &THM_K4_DEN, 1, vec!["x"], vec!["y1", "y2", "y3"]),
        // The printed numerator M has constant term -1; the series of the
        // generating function starts with C_() = 1, so -M is the numerator.
        Family::Kaaa => (THM_KAAA_NUM, &THM_KAAA_DEN, -1, vec!["x", "y"], vec!["z1", "z2", "z3"]),
    };
    TheoremGF {
        family,
        printed: RationalGF::parse(&c, num, den).expect("printed theorem transcription"),
        sign,
        size_variables: size,
        specialized_markers: markers,
    }
}

/// Coefficient of the size monomial of `kvec` in a truncated theorem series,
/// as a polynomial in `q`, `t`.
pub fn series_coefficient(family: Family, series: &LaurentPoly, kvec: &KVector) -> Result<LaurentPoly> {
    let qt = ctx(&["q", "t"]);
    let size = family.size_exponents(kvec);
    let nsize = size.len() - 2;
    let mut out = LaurentPoly::zero(&qt);
    for (m, c) in series.terms() {
        if m.exps()[..nsize] == size[..nsize] {
            let e = m.exps();
            out = &out + &LaurentPoly::term(&qt, Monomial(vec![e[nsize], e[nsize + 1]]), c.clone());
        }
    }
    Ok(out)
}

// piece constructors shared by the data modules

pub(crate) fn rational_apex(apex: &[(i64, i64)]) -> Vec<num_rational::BigRational> {
    apex.iter().map(|&(p, q)| num_rational::BigRational::new(BigInt::from(p), BigInt::from(q))).collect()
}

pub(crate) fn flags(pattern: &str) -> Vec<bool> {
    pattern
        .chars()
        .map(|c| match c {
            'o' => true,
            'c' => false,
            _ => panic!("flag pattern uses o/c"),
        })
        .collect()
}

pub(crate) fn outputs(family: Family, monos: &[&str]) -> Vec<Monomial> {
    let out = family.output_context();
    monos
        .iter()
        .map(|s| crate::polynomial::parse_monomial(&out, s).expect("catalog output monomial"))
        .collect()
}

#[cfg(test)]
mod tests;
