//! Brute-force oracles and the checks built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::catalog::{self, Family};
use crate::error::{domain, invariant, Result};
use crate::exec::{self, Strategy};
use crate::paths::{self, area_bounce, KVector};
use crate::polynomial::{Ctx, LaurentPoly, Monomial, VariableContext};

/// The `q, t` context shared by every Catalan polynomial.
pub fn qt_context() -> Ctx {
    static QT: std::sync::OnceLock<Ctx> = std::sync::OnceLock::new();
    QT.get_or_init(|| VariableContext::new(&["q", "t"]).expect("q,t")).clone()
}

fn poly_from_counts(counts: &BTreeMap<(u32, u32), u64>) -> LaurentPoly {
    let ctx = qt_context();
    LaurentPoly::from_terms(
        &ctx,
        counts.iter().map(|(&(a, b), &c)| (Monomial(vec![a as i32, b as i32]), BigInt::from(c))),
    )
}

fn stat_counts(kvec: &KVector, r2: Option<u32>) -> Result<BTreeMap<(u32, u32), u64>> {
    let mut counts = BTreeMap::new();
    let mut err = None;
    paths::for_each_ranks(kvec, r2, |r| {
        if err.is_some() {
            return;
        }
        match area_bounce(kvec, r) {
            Ok(s) => *counts.entry(s).or_insert(0) += 1,
            Err(e) => err = Some(e),
        }
    });
    err.map_or(Ok(counts), Err)
}

/// `sum q^area t^bounce` over all paths of `kvec`.
pub fn refined_catalan(kvec: &KVector) -> Result<LaurentPoly> {
    refined_catalan_with(kvec, Strategy::default())
}

pub fn refined_catalan_with(kvec: &KVector, strategy: Strategy) -> Result<LaurentPoly> {
    let parts = exec::try_map(strategy, paths::r2_split(kvec), |r2| stat_counts(kvec, r2))?;
    let mut total = BTreeMap::new();
    for part in parts {
        for (k, c) in part {
            *total.entry(k).or_insert(0) += c;
        }
    }
    Ok(poly_from_counts(&total))
}

/// Distinct rearrangements of a multiset, in lexicographic order.
pub fn rearrangements(parts: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = parts.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Weakly decreasing positive parts.
pub fn validate_partition(parts: &[u32]) -> Result<()> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(domain!("partition parts must be positive and non-empty"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain!("partition {:?} is not weakly decreasing", parts));
    }
    Ok(())
}

/// `sum` of [`refined_catalan`] over the distinct rearrangements of `partition`.
pub fn lambda_catalan(partition: &[u32]) -> Result<LaurentPoly> {
    lambda_catalan_with(partition, Strategy::default())
}

pub fn lambda_catalan_with(partition: &[u32], strategy: Strategy) -> Result<LaurentPoly> {
    validate_partition(partition)?;
    let polys = exec::try_map(strategy, rearrangements(partition), |p| {
        refined_catalan_with(&KVector::new(p)?, Strategy::Sequential)
    })?;
    Ok(polys.iter().fold(LaurentPoly::zero(&qt_context()), |acc, p| &acc + p))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    Composition(KVector),
    Partition(Vec<u32>),
}

impl Subject {
    pub fn polynomial(&self) -> Result<LaurentPoly> {
        self.polynomial_with(Strategy::default())
    }

    pub fn polynomial_with(&self, strategy: Strategy) -> Result<LaurentPoly> {
        match self {
            Subject::Composition(k) => refined_catalan_with(k, strategy),
            Subject::Partition(p) => lambda_catalan_with(p, strategy),
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Composition(k) => write!(f, "k={k}"),
            Subject::Partition(p) => write!(f, "lambda=({})", paths::join(p)),
        }
    }
}

/// Unequal coefficients at `q^i t^j` and `q^j t^i`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub i: u32,
    pub j: u32,
    /// Coefficient of `q^i t^j`.
    pub at_ij: BigInt,
    /// Coefficient of `q^j t^i`.
    pub at_ji: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = qt_context();
        let m = |a: u32, b: u32| Monomial(vec![a as i32, b as i32]).render(&ctx);
        write!(f, "{}={} vs {}={}", m(self.j, self.i), self.at_ji, m(self.i, self.j), self.at_ij)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub subject: Subject,
    pub symmetric: bool,
    pub witness: Option<Witness>,
}

impl fmt::Display for SymmetryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "{}\tsymmetric", self.subject),
            Some(w) => write!(f, "{}\tasymmetric\t{w}", self.subject),
        }
    }
}

/// Lexicographically smallest `(i, j)`, `i < j`, with unequal mirrored coefficients.
pub fn symmetry_witness(poly: &LaurentPoly) -> Result<Option<Witness>> {
    let grid = poly.coefficient_grid()?;
    let zero = BigInt::zero();
    let at = |i: usize, j: usize| grid.get(i).and_then(|r| r.get(j)).unwrap_or(&zero);
    let size = grid.len().max(grid.first().map_or(0, |r| r.len()));
    for i in 0..size {
        for j in i + 1..size {
            if at(i, j) != at(j, i) {
                return Ok(Some(Witness { i: i as u32, j: j as u32, at_ij: at(i, j).clone(), at_ji: at(j, i).clone() }));
            }
        }
    }
    Ok(None)
}

pub fn symmetry_report(subject: Subject) -> Result<SymmetryReport> {
    let poly = subject.polynomial()?;
    let witness = symmetry_witness(&poly)?;
    Ok(SymmetryReport { subject, symmetric: witness.is_none(), witness })
}

/// One report per member, in input order.
pub fn symmetry_scan(members: Vec<Subject>) -> Result<Vec<SymmetryReport>> {
    symmetry_scan_with(members, Strategy::default())
}

pub fn symmetry_scan_with(members: Vec<Subject>, strategy: Strategy) -> Result<Vec<SymmetryReport>> {
    exec::try_map(strategy, members, |s| {
        let poly = s.polynomial_with(Strategy::Sequential)?;
        let witness = symmetry_witness(&poly)?;
        Ok(SymmetryReport { subject: s, symmetric: witness.is_none(), witness })
    })
}

/// `(k, a, ..., a)` of the given length for `1 <= k, a <= max`.
pub fn head_tail_family(length: usize, max: u32) -> Vec<Subject> {
    let mut out = Vec::new();
    for k in 1..=max {
        for a in 1..=max {
            let mut parts = vec![a; length];
            parts[0] = k;
            out.push(Subject::Composition(KVector::new(parts).expect("positive parts")));
        }
    }
    out
}

/// Every composition of the given length with parts in `1..=max`, lexicographic.
pub fn compositions(length: usize, max: u32) -> Vec<KVector> {
    let mut out = Vec::new();
    let mut cur = vec![1u32; length];
    loop {
        out.push(KVector::new(cur.clone()).expect("positive parts"));
        let Some(i) = (0..length).rev().find(|&i| cur[i] < max) else { return out };
        cur[i] += 1;
        for c in &mut cur[i + 1..] {
            *c = 1;
        }
    }
}

/// Whether the refined polynomial is unchanged when the last part `m` is replaced by `l`.
pub fn check_last_param(prefix: &KVector, m: u32, l: u32) -> Result<bool> {
    if m == 0 || l == 0 {
        return Err(domain!("last parameters must be positive"));
    }
    Ok(refined_catalan(&prefix.concat(m)?)? == refined_catalan(&prefix.concat(l)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disagreement {
    pub kvec: KVector,
    pub ranks: Vec<u32>,
    pub coordinates: Vec<i64>,
    pub algorithm: (u32, u32),
    pub closed: std::result::Result<(u32, u32), String>,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={} ranks=({}) coords=({}): algorithm (area, bounce) = {:?}, closed form = {:?}",
            self.kvec,
            paths::join(&self.ranks),
            paths::join(&self.coordinates),
            self.algorithm,
            self.closed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BounceAgreement {
    pub paths_checked: usize,
    pub first_disagreement: Option<Disagreement>,
}

impl BounceAgreement {
    pub fn agrees(&self) -> bool {
        self.first_disagreement.is_none()
    }
}

/// Compares the rank-tableau statistics with the family's closed forms on
/// every path of every member k-vector up to `bound`.
pub fn check_bounce_agreement(family: Family, bound: u32) -> Result<BounceAgreement> {
    let results = exec::try_map(Strategy::default(), family.kvectors(bound), |kv| -> Result<(usize, Option<Disagreement>)> {
        let mut checked = 0;
        let mut first = None;
        let mut err = None;
        paths::for_each_ranks(&kv, None, |r| {
            if first.is_some() || err.is_some() {
                return;
            }
            checked += 1;
            let alg = match area_bounce(&kv, r) {
                Ok(s) => s,
                Err(e) => return err = Some(e),
            };
            let coords = family.coordinates_of(&kv, r).expect("member k-vector");
            let closed = family.closed_stats(&coords).map_err(|e| e.to_string());
            if closed.as_ref() != Ok(&alg) {
                first = Some(Disagreement { kvec: kv.clone(), ranks: r.to_vec(), coordinates: coords, algorithm: alg, closed });
            }
        });
        err.map_or(Ok((checked, first)), Err)
    })?;
    let paths_checked = results.iter().map(|r| r.0).sum();
    let first_disagreement = results.into_iter().find_map(|r| r.1);
    Ok(BounceAgreement { paths_checked, first_disagreement })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub family: Family,
    pub formula_match: bool,
    pub series_match: bool,
    pub symmetric: bool,
    /// Number of k-vectors whose series coefficient was compared.
    pub coefficients_checked: usize,
    pub first_series_mismatch: Option<KVector>,
}

impl TheoremReport {
    pub fn all_hold(&self) -> bool {
        self.formula_match && self.series_match && self.symmetric
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem\t{}", self.family)?;
        writeln!(f, "formulaMatch\t{}", self.formula_match)?;
        writeln!(f, "seriesMatch\t{}\t({} coefficients)", self.series_match, self.coefficients_checked)?;
        if let Some(k) = &self.first_series_mismatch {
            writeln!(f, "firstMismatch\t{k}")?;
        }
        write!(f, "symmetric\t{}", self.symmetric)
    }
}

/// Size vectors compared by the series check: positive parts with total at
/// most `bound` for `three`, `k <= bound` for `k4`, `k >= 1`, `k + m <= bound` for `kaaa`.
pub fn series_members(family: Family, bound: u32) -> Vec<KVector> {
    let all = family.kvectors(bound);
    match family {
        Family::Three => all.into_iter().filter(|k| k.n() <= bound).collect(),
        _ => all,
    }
}

/// Compares the truncated series of `gf` (in the family's theorem context)
/// with the brute-force polynomials; returns the count and the first mismatch.
pub fn compare_series(
    family: Family,
    gf: &crate::cones::RationalGF,
    bound: u32,
) -> Result<(usize, Option<KVector>)> {
    let series = gf.series_expand(&family.size_weights(), bound)?;
    let members = series_members(family, bound);
    let results = exec::try_map(Strategy::default(), members.clone(), |kv| -> Result<bool> {
        let coeff = catalog::series_coefficient(family, &series, &kv)?;
        Ok(coeff == refined_catalan_with(&kv, Strategy::Sequential)?)
    })?;
    let first = members.iter().zip(&results).find(|(_, ok)| !**ok).map(|(k, _)| k.clone());
    Ok((members.len(), first))
}

pub fn verify_theorem(family: Family, bound: u32) -> Result<TheoremReport> {
    let printed = catalog::theorem(family);
    let expected = printed.corrected();
    let assembled = catalog::assemble_theorem(family)?;
    let formula_match = assembled.equals(&expected)?;
    let (coefficients_checked, first_series_mismatch) = compare_series(family, &expected, bound)?;
    let symmetric = printed.printed.equals(&printed.printed.qt_swap()?)?;
    Ok(TheoremReport {
        family,
        formula_match,
        series_match: first_series_mismatch.is_none(),
        symmetric,
        coefficients_checked,
        first_series_mismatch,
    })
}

/// Dense univariate polynomial, `coeffs[i]` at `q^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly(pub Vec<BigInt>);

impl QPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    pub fn one() -> Self {
        QPoly(vec![BigInt::one()])
    }

    /// `[n]_q = 1 + q + ... + q^{n-1}`.
    pub fn q_integer(n: usize) -> Self {
        QPoly(vec![BigInt::one(); n])
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return QPoly(vec![]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly(out).trim()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let z = BigInt::zero();
        QPoly((0..n).map(|i| self.0.get(i).unwrap_or(&z) + other.0.get(i).unwrap_or(&z)).collect()).trim()
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.0.is_empty() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        QPoly(v)
    }

    /// Exact division by a monic-led divisor; `None` if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.clone().trim();
        let lead = d.0.last()?.clone();
        let mut rem = self.clone().trim().0;
        if rem.len() < d.0.len() {
            return rem.iter().all(|c| c.is_zero()).then(|| QPoly(vec![]));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d.0.len() + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d.0.len() - 1];
            if (top % &lead) != BigInt::zero() {
                return None;
            }
            let c = top / &lead;
            for (j, dj) in d.0.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
            quot[i] = c;
        }
        rem.iter().all(|c| c.is_zero()).then(|| QPoly(quot).trim())
    }
}

fn ones(n: usize) -> KVector {
    KVector::new(vec![1; n]).expect("n >= 1")
}

/// `C_n(q, t)` on classical Dyck paths.
pub fn classical_catalan(n: usize) -> Result<LaurentPoly> {
    if n == 0 {
        return Ok(LaurentPoly::one(&qt_context()));
    }
    refined_catalan(&ones(n))
}

/// Specializes one variable: `which = 0` keeps `q` (sets `t = 1`), `which = 1` keeps `t`.
fn specialize(poly: &LaurentPoly, keep: usize) -> Result<QPoly> {
    let mut out: Vec<BigInt> = Vec::new();
    for (m, c) in poly.terms() {
        let e = m.exps()[keep];
        if e < 0 {
            return Err(invariant!("negative exponent in a Catalan polynomial"));
        }
        let e = e as usize;
        if out.len() <= e {
            out.resize(e + 1, BigInt::zero());
        }
        out[e] += c;
    }
    Ok(QPoly(out).trim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSpecializationReport {
    pub n: usize,
    pub recurrence: bool,
    pub palindromic: bool,
    pub macmahon: bool,
}

impl QSpecializationReport {
    pub fn holds(&self) -> bool {
        self.recurrence && self.palindromic && self.macmahon
    }
}

/// The three one-variable identities of `C_n(q, t)` for the given `n`.
pub fn check_q_specializations(n: usize) -> Result<QSpecializationReport> {
    if n == 0 {
        return Err(domain!("n must be positive"));
    }
    let polys: Vec<LaurentPoly> = (0..=n).map(classical_catalan).collect::<Result<_>>()?;
    let cq: Vec<QPoly> = polys.iter().map(|p| specialize(p, 0)).collect::<Result<_>>()?;

    let mut rhs = QPoly(vec![]);
    for k in 1..=n {
        rhs = rhs.add(&cq[k - 1].mul(&cq[n - k]).shift(k - 1));
    }
    let recurrence = rhs == cq[n];

    let palindromic = specialize(&polys[n], 1)? == cq[n];

    let binom = (n * (n - 1) / 2) as i32;
    let mut d: Vec<BigInt> = Vec::new();
    for (m, c) in polys[n].terms() {
        let e = m.exps()[0] - m.exps()[1] + binom;
        if e < 0 {
            return Err(invariant!("q^binom(n,2) C_n(q, 1/q) has a negative exponent"));
        }
        let e = e as usize;
        if d.len() <= e {
            d.resize(e + 1, BigInt::zero());
        }
        d[e] += c;
    }
    let d = QPoly(d).trim();
    let mut num = QPoly::one();
    for i in n + 1..=2 * n {
        num = num.mul(&QPoly::q_integer(i));
    }
    let mut den = QPoly::q_integer(n + 1);
    for i in 1..=n {
        den = den.mul(&QPoly::q_integer(i));
    }
    let macmahon = num.div_exact(&den).is_some_and(|q| q == d);
    Ok(QSpecializationReport { n, recurrence, palindromic, macmahon })
}
