//! Half-open simplicial cones with rational apices, their fundamental
//! parallelepipeds and integer-point transforms, and rational generating
//! functions over `(1 - monomial)` denominators.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, usage, Error, Result};
use crate::polynomial::{Ctx, LaurentPoly, Monomial, MonomialMap, VariableContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn matches(self, value: i64) -> bool {
        (value.rem_euclid(2) == 0) == (self == Parity::Even)
    }
}

/// `apex + { sum lambda_i v_i }` with `lambda_i >= 0` for closed generators
/// and `lambda_i > 0` for open ones.
#[derive(Clone, Debug)]
pub struct HalfOpenCone {
    apex: Vec<BigRational>,
    generators: Vec<Vec<i64>>,
    open: Vec<bool>,
    solver: Solver,
}

/// Integer form of the left inverse on a set of pivot rows:
/// `lambda = inv * (L p_S - L apex_S) / (den * L)`.
#[derive(Clone, Debug)]
struct Solver {
    rows: Vec<usize>,
    inv: Vec<Vec<i128>>,
    den: i128,
    apex_scale: i128,
    scaled_apex: Vec<i128>,
}

impl HalfOpenCone {
    pub fn new(apex: Vec<BigRational>, generators: Vec<Vec<i64>>, open: Vec<bool>) -> Result<Self> {
        let d = apex.len();
        if d == 0 {
            return Err(usage!("cone dimension must be positive"));
        }
        if generators.is_empty() || generators.len() > d {
            return Err(usage!("a cone in dimension {d} needs 1..={d} generators, got {}", generators.len()));
        }
        if open.len() != generators.len() {
            return Err(usage!("one open/closed flag per generator required"));
        }
        if let Some(g) = generators.iter().find(|g| g.len() != d) {
            return Err(usage!("generator {g:?} does not have dimension {d}"));
        }
        let solver = Solver::new(&apex, &generators)?;
        Ok(HalfOpenCone { apex, generators, open, solver })
    }

    /// Cone with integer apex.
    pub fn with_integer_apex(apex: &[i64], generators: Vec<Vec<i64>>, open: Vec<bool>) -> Result<Self> {
        let apex = apex.iter().map(|&a| BigRational::from_integer(a.into())).collect();
        Self::new(apex, generators, open)
    }

    pub fn dim(&self) -> usize {
        self.apex.len()
    }

    pub fn apex(&self) -> &[BigRational] {
        &self.apex
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn open_flags(&self) -> &[bool] {
        &self.open
    }

    /// Index of the generated lattice in its saturation.
    pub fn lattice_index(&self) -> BigInt {
        let k = self.generators.len();
        let d = self.dim();
        let mut g = BigInt::zero();
        for rows in combinations(d, k) {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|&r| self.generators.iter().map(|v| BigInt::from(v[r])).collect())
                .collect();
            g = g.gcd(&determinant(minor));
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn is_unimodular(&self) -> bool {
        self.lattice_index().is_one()
    }

    /// Scaled coefficients `lambda_i * den` of `p - apex`, or `None` when `p`
    /// is off the affine span.
    fn scaled_lambda(&self, p: &[i64]) -> Option<Vec<i128>> {
        let s = &self.solver;
        let rhs: Vec<i128> = s.rows.iter().map(|&r| s.apex_scale * p[r] as i128 - s.scaled_apex[r]).collect();
        let lam: Vec<i128> = s.inv.iter().map(|row| row.iter().zip(&rhs).map(|(a, b)| a * b).sum()).collect();
        for r in 0..self.dim() {
            if s.rows.contains(&r) {
                continue;
            }
            let lhs: i128 = self.generators.iter().zip(&lam).map(|(v, l)| v[r] as i128 * l).sum();
            let want = s.den * (s.apex_scale * p[r] as i128 - s.scaled_apex[r]);
            if lhs != want {
                return None;
            }
        }
        Some(lam)
    }

    fn full_den(&self) -> i128 {
        self.solver.den * self.solver.apex_scale
    }

    /// Exact coordinates of `p - apex` in the generator basis.
    pub fn coordinates(&self, p: &[i64]) -> Option<Vec<BigRational>> {
        let den = BigInt::from(self.full_den());
        self.scaled_lambda(p)
            .map(|l| l.into_iter().map(|x| BigRational::new(BigInt::from(x), den.clone())).collect())
    }

    /// Whether the integer point `p` lies in the half-open cone.
    pub fn contains(&self, p: &[i64]) -> bool {
        if p.len() != self.dim() {
            return false;
        }
        match self.scaled_lambda(p) {
            None => false,
            Some(lam) => lam.iter().zip(&self.open).all(|(&l, &open)| if open { l > 0 } else { l >= 0 }),
        }
    }

    fn in_parallelepiped(&self, p: &[i64]) -> bool {
        let den = self.full_den();
        match self.scaled_lambda(p) {
            None => false,
            Some(lam) => lam
                .iter()
                .zip(&self.open)
                .all(|(&l, &open)| if open { 0 < l && l <= den } else { 0 <= l && l < den }),
        }
    }

    /// Integer points of the fundamental parallelepiped, sorted.
    pub fn parallelepiped_points(&self) -> Vec<Vec<i64>> {
        let d = self.dim();
        let mut lo = Vec::with_capacity(d);
        let mut hi = Vec::with_capacity(d);
        for i in 0..d {
            let neg: i64 = self.generators.iter().map(|v| v[i].min(0)).sum();
            let pos: i64 = self.generators.iter().map(|v| v[i].max(0)).sum();
            let a = &self.apex[i];
            lo.push((a + BigRational::from_integer(neg.into())).floor().to_integer().to_i64().unwrap());
            hi.push((a + BigRational::from_integer(pos.into())).ceil().to_integer().to_i64().unwrap());
        }
        let mut out = Vec::new();
        let mut p = lo.clone();
        loop {
            if self.in_parallelepiped(&p) {
                out.push(p.clone());
            }
            let mut i = 0;
            loop {
                if i == d {
                    out.sort();
                    return out;
                }
                if p[i] < hi[i] {
                    p[i] += 1;
                    break;
                }
                p[i] = lo[i];
                i += 1;
            }
        }
    }

    /// `sum_{p in Pi} z^p / prod (1 - z^{v_i})`.
    pub fn integer_point_transform(&self, ctx: &Ctx) -> Result<RationalGF> {
        if ctx.len() != self.dim() {
            return Err(usage!("context has {} variables, cone has dimension {}", ctx.len(), self.dim()));
        }
        let num = LaurentPoly::from_terms(
            ctx,
            self.parallelepiped_points().into_iter().map(|p| (to_monomial(&p), 1)),
        );
        let den = self.generators.iter().map(|v| to_monomial(v)).collect();
        RationalGF::new(num, den)
    }

    /// Parses the plain-text cone format (`dim`, `apex`, `gen closed|open`).
    pub fn parse(text: &str) -> Result<Self> {
        let mut dim: Option<usize> = None;
        let mut apex: Option<Vec<BigRational>> = None;
        let mut gens = Vec::new();
        let mut open = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let mut toks = line.split_whitespace();
            let head = toks.next().unwrap();
            let rest: Vec<&str> = toks.collect();
            match head {
                "dim" => {
                    if dim.is_some() {
                        return Err(err("duplicate dim".into()));
                    }
                    let [d] = rest[..] else { return Err(err("dim takes one value".into())) };
                    let d: usize = d.parse().map_err(|_| err(format!("bad dimension {d:?}")))?;
                    dim = Some(d);
                }
                "apex" | "gen" => {
                    let d = dim.ok_or_else(|| err("dim must come first".into()))?;
                    let (flag, vals) = if head == "gen" {
                        let (flag, vals) = rest.split_first().ok_or_else(|| err("gen needs a flag".into()))?;
                        let flag = match *flag {
                            "closed" => false,
                            "open" => true,
                            other => return Err(err(format!("unknown flag {other:?}"))),
                        };
                        (Some(flag), vals)
                    } else {
                        (None, &rest[..])
                    };
                    if vals.len() != d {
                        return Err(err(format!("expected {d} entries, got {}", vals.len())));
                    }
                    match flag {
                        None => {
                            let v = vals.iter().map(|s| parse_rational(s).map_err(|e| err(e.to_string()))).collect::<Result<Vec<_>>>()?;
                            apex = Some(v);
                        }
                        Some(f) => {
                            let v = vals
                                .iter()
                                .map(|s| s.parse::<i64>().map_err(|_| err(format!("bad integer {s:?}"))))
                                .collect::<Result<Vec<_>>>()?;
                            gens.push(v);
                            open.push(f);
                        }
                    }
                }
                other => return Err(err(format!("unknown directive {other:?}"))),
            }
        }
        let d = dim.ok_or_else(|| Error::Parse("missing dim".into()))?;
        let apex = apex.unwrap_or_else(|| vec![BigRational::zero(); d]);
        HalfOpenCone::new(apex, gens, open)
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

pub(crate) fn to_monomial(v: &[i64]) -> Monomial {
    Monomial(v.iter().map(|&x| x as i32).collect())
}

fn to_i128(x: &BigInt) -> Result<i128> {
    x.to_i128().ok_or_else(|| domain!("cone data too large for exact fixed-width solve"))
}

impl Solver {
    fn new(apex: &[BigRational], gens: &[Vec<i64>]) -> Result<Self> {
        let d = apex.len();
        let k = gens.len();
        // Row-reduce the d x k matrix G (columns = generators) to pick pivot rows.
        let mut m: Vec<Vec<BigRational>> =
            (0..d).map(|r| gens.iter().map(|v| BigRational::from_integer(v[r].into())).collect()).collect();
        let mut rows = Vec::with_capacity(k);
        let mut used = vec![false; d];
        for col in 0..k {
            let pivot = (0..d).find(|&r| !used[r] && !m[r][col].is_zero());
            let Some(p) = pivot else {
                return Err(usage!("cone generators are linearly dependent"));
            };
            used[p] = true;
            rows.push(p);
            let pv = m[p][col].clone();
            for r in 0..d {
                if r != p && !m[r][col].is_zero() {
                    let f = &m[r][col] / &pv;
                    let prow = m[p].clone();
                    for (x, y) in m[r][col..k].iter_mut().zip(&prow[col..k]) {
                        *x -= &f * y;
                    }
                }
            }
        }
        rows.sort();
        // Invert the k x k submatrix on the pivot rows.
        let sub: Vec<Vec<BigRational>> =
            rows.iter().map(|&r| gens.iter().map(|v| BigRational::from_integer(v[r].into())).collect()).collect();
        let inv = invert(sub).ok_or_else(|| usage!("cone generators are linearly dependent"))?;
        let mut den = BigInt::one();
        for x in inv.iter().flatten() {
            den = den.lcm(x.denom());
        }
        let inv_int = inv
            .iter()
            .map(|row| row.iter().map(|x| to_i128(&(x * BigRational::from_integer(den.clone())).to_integer())).collect())
            .collect::<Result<Vec<Vec<i128>>>>()?;
        let mut scale = BigInt::one();
        for a in apex {
            scale = scale.lcm(a.denom());
        }
        let scaled_apex = apex
            .iter()
            .map(|a| to_i128(&(a * BigRational::from_integer(scale.clone())).to_integer()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Solver { rows, inv: inv_int, den: to_i128(&den)?, apex_scale: to_i128(&scale)?, scaled_apex })
    }
}

fn invert(mut a: Vec<Vec<BigRational>>) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect())
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        inv.swap(col, p);
        let pv = a[col][col].clone();
        for c in 0..n {
            a[col][c] = &a[col][c] / &pv;
            inv[col][c] = &inv[col][c] / &pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let s1 = &f * &a[col][c];
                    a[r][c] -= s1;
                    let s2 = &f * &inv[col][c];
                    inv[r][c] -= s2;
                }
            }
        }
    }
    Some(inv)
}

/// Bareiss fraction-free determinant.
fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    (sign * &a[n - 1][n - 1]).abs()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `numerator / prod_{m in denominator} (1 - z^m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: LaurentPoly,
    denominator: Vec<Monomial>,
}

impl RationalGF {
    pub fn new(numerator: LaurentPoly, mut denominator: Vec<Monomial>) -> Result<Self> {
        let len = numerator.context().len();
        for m in &denominator {
            if m.0.len() != len {
                return Err(usage!("denominator monomial has wrong length"));
            }
            if m.is_one() {
                return Err(usage!("denominator factor 1 - 1 is not allowed"));
            }
        }
        denominator.sort();
        Ok(RationalGF { numerator, denominator })
    }

    /// Parses a numerator expression and a list of denominator monomials.
    pub fn parse(ctx: &Ctx, numerator: &str, denominator: &[&str]) -> Result<Self> {
        let num = LaurentPoly::parse(ctx, numerator)?;
        let den = denominator
            .iter()
            .map(|s| crate::polynomial::parse_monomial(ctx, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(num, den)
    }

    pub fn context(&self) -> &Ctx {
        self.numerator.context()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Monomial] {
        &self.denominator
    }

    pub fn zero(ctx: &Ctx) -> Self {
        RationalGF { numerator: LaurentPoly::zero(ctx), denominator: Vec::new() }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.context() == other.context() {
            Ok(())
        } else {
            Err(usage!("generating functions live in different contexts"))
        }
    }

    pub fn denominator_product(&self) -> LaurentPoly {
        product_of_factors(self.context(), &self.denominator)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.same_ctx(other)?;
        let ca = counts(&self.denominator);
        let cb = counts(&other.denominator);
        let mut lcm = ca.clone();
        for (m, &c) in &cb {
            let e = lcm.entry(m.clone()).or_insert(0);
            *e = (*e).max(c);
        }
        let missing = |own: &BTreeMap<Monomial, usize>| -> Vec<Monomial> {
            let mut v = Vec::new();
            for (m, &c) in &lcm {
                for _ in own.get(m).copied().unwrap_or(0)..c {
                    v.push(m.clone());
                }
            }
            v
        };
        let ctx = self.context();
        let left = &self.numerator * &product_of_factors(ctx, &missing(&ca));
        let mut right = &other.numerator * &product_of_factors(ctx, &missing(&cb));
        if negate {
            right = -&right;
        }
        let den = lcm.into_iter().flat_map(|(m, c)| std::iter::repeat_n(m, c)).collect();
        RationalGF::new(&left + &right, den)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        RationalGF { numerator: -&self.numerator, denominator: self.denominator.clone() }
    }

    /// Scales the numerator by an integer.
    pub fn scale(&self, c: i64) -> Self {
        RationalGF { numerator: self.numerator.scale(&BigInt::from(c)), denominator: self.denominator.clone() }
    }

    /// Multiplies the numerator and the denominator by the same factors.
    pub fn rescale(&self, extra: &[Monomial]) -> Result<Self> {
        let num = &self.numerator * &product_of_factors(self.context(), extra);
        let mut den = self.denominator.clone();
        den.extend_from_slice(extra);
        RationalGF::new(num, den)
    }

    pub fn substitute(&self, map: &MonomialMap) -> Result<Self> {
        let num = self.numerator.substitute(map)?;
        let mut den = Vec::with_capacity(self.denominator.len());
        for m in &self.denominator {
            let img = map.apply(m);
            if img.is_one() {
                return Err(Error::DegenerateSubstitution(m.render(map.source())));
            }
            den.push(img);
        }
        RationalGF::new(num, den)
    }

    pub fn qt_swap(&self) -> Result<Self> {
        let ctx = self.context();
        let (iq, it) = (ctx.require("q")?, ctx.require("t")?);
        let swap = |m: &Monomial| {
            let mut e = m.0.clone();
            e.swap(iq, it);
            Monomial(e)
        };
        RationalGF::new(self.numerator.qt_swap()?, self.denominator.iter().map(swap).collect())
    }

    /// Equality of rational functions by cross-multiplication (shared
    /// denominator factors are cancelled first, which does not change the
    /// verdict).
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ctx(other)?;
        let mut ca = counts(&self.denominator);
        let mut cb = counts(&other.denominator);
        for (m, c) in ca.iter_mut() {
            if let Some(d) = cb.get_mut(m) {
                let common = (*c).min(*d);
                *c -= common;
                *d -= common;
            }
        }
        let flat = |c: &BTreeMap<Monomial, usize>| -> Vec<Monomial> {
            c.iter().flat_map(|(m, &n)| std::iter::repeat_n(m.clone(), n)).collect()
        };
        let ctx = self.context();
        let lhs = &self.numerator * &product_of_factors(ctx, &flat(&cb));
        let rhs = &other.numerator * &product_of_factors(ctx, &flat(&ca));
        Ok(lhs == rhs)
    }

    /// Truncated power series: all terms of weight `<= bound`, where the
    /// weight of `z^e` is `sum w_i e_i`.
    pub fn series_expand(&self, weights: &[u32], bound: u32) -> Result<LaurentPoly> {
        let ctx = self.context();
        if weights.len() != ctx.len() {
            return Err(usage!("one weight per variable required"));
        }
        let weight = |m: &Monomial| -> i64 { m.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w as i64).sum() };
        for (m, _) in self.numerator.terms() {
            if m.0.iter().zip(weights).any(|(&e, &w)| w > 0 && e < 0) {
                return Err(usage!(
                    "numerator term {} has a negative exponent in a weighted variable",
                    m.render(ctx)
                ));
            }
        }
        let mut factors: Vec<(i64, &Monomial)> = Vec::with_capacity(self.denominator.len());
        for m in &self.denominator {
            let w = weight(m);
            if w <= 0 {
                return Err(Error::NotExpandable(m.render(ctx)));
            }
            factors.push((w, m));
        }
        factors.sort_by_key(|(w, _)| *w);
        let bound = bound as i64;
        let mut acc: Vec<(Monomial, BigInt, i64)> = self
            .numerator
            .terms()
            .filter_map(|(m, c)| {
                let w = weight(m);
                (w <= bound).then(|| (m.clone(), c.clone(), w))
            })
            .collect();
        for (w, m) in factors {
            let mut next: BTreeMap<Monomial, (BigInt, i64)> = BTreeMap::new();
            for (mono, c, wt) in &acc {
                let mut cur = mono.clone();
                let mut cw = *wt;
                while cw <= bound {
                    let e = next.entry(cur.clone()).or_insert_with(|| (BigInt::zero(), cw));
                    e.0 += c;
                    cur = cur.mul(m);
                    cw += w;
                }
            }
            acc = next.into_iter().filter(|(_, (c, _))| !c.is_zero()).map(|(m, (c, w))| (m, c, w)).collect();
        }
        Ok(LaurentPoly::from_terms(ctx, acc.into_iter().map(|(m, c, _)| (m, c))))
    }

    /// Keeps the numerator terms whose exponent of `var` has the given parity.
    pub fn extract_parity(&self, var: &str, parity: Parity) -> Result<Self> {
        let idx = self.context().require(var)?;
        let mut form = vec![0i64; self.context().len()];
        form[idx] = 1;
        self.extract_parity_form(&form, parity).map_err(|e| match e {
            Error::Parity(m, _) => Error::Parity(m, var.to_string()),
            other => other,
        })
    }

    /// Keeps the numerator terms on which the linear form `form . exps` has
    /// the given parity; every denominator factor must be even on the form.
    pub fn extract_parity_form(&self, form: &[i64], parity: Parity) -> Result<Self> {
        let ctx = self.context();
        if form.len() != ctx.len() {
            return Err(usage!("parity form has wrong length"));
        }
        let eval = |m: &Monomial| -> i64 { m.0.iter().zip(form).map(|(&e, &f)| e as i64 * f).sum() };
        for m in &self.denominator {
            if eval(m).rem_euclid(2) != 0 {
                return Err(Error::Parity(m.render(ctx), format!("{form:?}")));
            }
        }
        Ok(RationalGF {
            numerator: self.numerator.filter_terms(|m| parity.matches(eval(m))),
            denominator: self.denominator.clone(),
        })
    }
}

fn counts(ms: &[Monomial]) -> BTreeMap<Monomial, usize> {
    let mut c = BTreeMap::new();
    for m in ms {
        *c.entry(m.clone()).or_insert(0) += 1;
    }
    c
}

fn product_of_factors(ctx: &Ctx, ms: &[Monomial]) -> LaurentPoly {
    let mut p = LaurentPoly::one(ctx);
    for m in ms {
        let f = LaurentPoly::from_terms(ctx, [(Monomial::one(ctx.len()), BigInt::one()), (m.clone(), BigInt::from(-1))]);
        p = &p * &f;
    }
    p
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = self.context();
        let num = if self.numerator.len() > 1 && !self.denominator.is_empty() {
            format!("({})", self.numerator)
        } else {
            self.numerator.to_string()
        };
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        let den: Vec<String> = self.denominator.iter().map(|m| format!("(1 - {})", m.render(ctx))).collect();
        write!(f, "{num} / ({})", den.join("*"))
    }
}

/// Context `z1, ..., zd` used for cones read from files.
pub fn default_context(d: usize) -> Result<Ctx> {
    let names: Vec<String> = (1..=d).map(|i| format!("z{i}")).collect();
    VariableContext::new(&names)
}
