//! Exact multivariate Laurent polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{usage, Error, Result};

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VariableContext {
    names: Vec<String>,
}

pub type Ctx = Arc<VariableContext>;

impl VariableContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Ctx> {
        if names.is_empty() {
            return Err(usage!("variable context must be nonempty"));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(names.len());
        for name in names {
            let name = name.as_ref();
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(usage!("invalid variable name {name:?}"));
            }
            if !seen.insert(name.to_string()) {
                return Err(usage!("duplicate variable name {name:?}"));
            }
            out.push(name.to_string());
        }
        Ok(Arc::new(VariableContext { names: out }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index(name).ok_or_else(|| usage!("variable {name} not in context {:?}", self.names))
    }
}

/// Exponent vector over a context. Ordered by total degree, then
/// lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len])
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, e: i32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    /// Renders the monomial with coefficient 1 (`"1"` for the empty product).
    pub fn render(&self, ctx: &VariableContext) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(ctx.names())
            .filter(|(e, _)| **e != 0)
            .map(|(&e, name)| if e == 1 { name.clone() } else { format!("{name}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Laurent polynomial; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ctx: Ctx,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        LaurentPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, BigInt::one())
    }

    pub fn constant(ctx: &Ctx, c: impl Into<BigInt>) -> Self {
        Self::term(ctx, Monomial::one(ctx.len()), c)
    }

    pub fn term(ctx: &Ctx, mono: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(mono.0.len(), ctx.len(), "monomial length must match context");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        LaurentPoly { ctx: ctx.clone(), terms }
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        let idx = ctx.require(name)?;
        let mut e = vec![0; ctx.len()];
        e[idx] = 1;
        Ok(Self::term(ctx, Monomial(e), 1))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I, C>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn parse(ctx: &Ctx, text: &str) -> Result<Self> {
        Parser::new(ctx, text).parse_all()
    }

    pub fn context(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigInt {
        self.terms.get(mono).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial given by `(name, exponent)` pairs.
    pub fn coeff_of(&self, exps: &[(&str, i32)]) -> Result<BigInt> {
        let mut e = vec![0; self.ctx.len()];
        for (name, x) in exps {
            e[self.ctx.require(name)?] = *x;
        }
        Ok(self.coeff(&Monomial(e)))
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(usage!(
                "context mismatch: {:?} vs {:?}",
                self.ctx.names(),
                other.ctx.names()
            ))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(&self.ctx);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        out
    }

    /// Multiplies every term by a monomial.
    pub fn shift(&self, mono: &Monomial) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(&self.ctx);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        LaurentPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn substitute(&self, map: &MonomialMap) -> Result<Self> {
        if *map.source != *self.ctx {
            return Err(usage!("substitution source context does not match polynomial"));
        }
        let mut out = Self::zero(&map.target);
        for (m, c) in &self.terms {
            out.add_term(map.apply(m), c.clone());
        }
        Ok(out)
    }

    /// Exchanges two variables.
    pub fn swap(&self, a: &str, b: &str) -> Result<Self> {
        let (ia, ib) = (self.ctx.require(a)?, self.ctx.require(b)?);
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.swap(ia, ib);
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub fn qt_swap(&self) -> Result<Self> {
        self.swap("q", "t")
    }

    pub fn is_qt_symmetric(&self) -> Result<bool> {
        Ok(self.qt_swap()? == *self)
    }

    /// Fails unless every exponent is nonnegative.
    pub fn require_nonnegative(&self) -> Result<()> {
        for m in self.terms.keys() {
            if m.0.iter().any(|&e| e < 0) {
                return Err(usage!(
                    "term {} has a negative exponent",
                    m.render(&self.ctx)
                ));
            }
        }
        Ok(())
    }

    /// `grid[i][j]` is the coefficient of `q^i t^j`.
    pub fn coefficient_grid(&self) -> Result<Vec<Vec<BigInt>>> {
        let (iq, it) = (self.ctx.require("q")?, self.ctx.require("t")?);
        let (mut mq, mut mt) = (0usize, 0usize);
        for m in self.terms.keys() {
            for (idx, &e) in m.0.iter().enumerate() {
                if e < 0 {
                    return Err(usage!("coefficient grid needs nonnegative exponents"));
                }
                if e != 0 && idx != iq && idx != it {
                    return Err(usage!(
                        "variable {} occurs; coefficient grid needs a polynomial in q and t",
                        self.ctx.names()[idx]
                    ));
                }
            }
            mq = mq.max(m.0[iq] as usize);
            mt = mt.max(m.0[it] as usize);
        }
        let mut grid = vec![vec![BigInt::zero(); mt + 1]; mq + 1];
        for (m, c) in &self.terms {
            grid[m.0[iq] as usize][m.0[it] as usize] = c.clone();
        }
        Ok(grid)
    }

    /// Inverse of [`LaurentPoly::coefficient_grid`].
    pub fn from_grid(ctx: &Ctx, grid: &[Vec<BigInt>]) -> Result<Self> {
        let (iq, it) = (ctx.require("q")?, ctx.require("t")?);
        let mut out = Self::zero(ctx);
        for (i, row) in grid.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let mut e = vec![0; ctx.len()];
                e[iq] = i as i32;
                e[it] = j as i32;
                out.add_term(Monomial(e), c.clone());
            }
        }
        Ok(out)
    }

    /// Sum of the coefficients (all variables set to 1).
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let body = if m.is_one() {
                abs.to_string()
            } else if abs.is_one() {
                m.render(&self.ctx)
            } else {
                format!("{abs}*{}", m.render(&self.ctx))
            };
            match (idx, neg) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({self})", self.ctx.names().join(","))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("polynomial contexts must agree")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("polynomial contexts must agree")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("polynomial contexts must agree")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&BigInt::from(-1))
    }
}

/// A monomial substitution from one context into another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialMap {
    source: Ctx,
    target: Ctx,
    images: Vec<Monomial>,
}

impl MonomialMap {
    /// Every source variable must appear exactly once in `images`; the image
    /// strings are monomials over `target` such as `"x1*t^2"` or `"1"`.
    pub fn new(source: &Ctx, target: &Ctx, images: &[(&str, &str)]) -> Result<Self> {
        let mut slots: Vec<Option<Monomial>> = vec![None; source.len()];
        for (name, img) in images {
            let idx = source.require(name)?;
            if slots[idx].is_some() {
                return Err(usage!("variable {name} given two images"));
            }
            slots[idx] = Some(parse_monomial(target, img)?);
        }
        let images = slots
            .into_iter()
            .zip(source.names())
            .map(|(s, name)| s.ok_or_else(|| usage!("no image given for variable {name}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn from_images(source: &Ctx, target: &Ctx, images: Vec<Monomial>) -> Result<Self> {
        if images.len() != source.len() || images.iter().any(|m| m.0.len() != target.len()) {
            return Err(usage!("substitution images do not match the contexts"));
        }
        Ok(MonomialMap { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(ctx: &Ctx) -> Self {
        let images = (0..ctx.len())
            .map(|i| {
                let mut e = vec![0; ctx.len()];
                e[i] = 1;
                Monomial(e)
            })
            .collect();
        MonomialMap { source: ctx.clone(), target: ctx.clone(), images }
    }

    /// Restriction to a context keeping the named variables, sending the
    /// rest to 1.
    pub fn specialize_to_one(source: &Ctx, target: &Ctx) -> Result<Self> {
        let images: Vec<(String, String)> = source
            .names()
            .iter()
            .map(|n| {
                let img = if target.index(n).is_some() { n.clone() } else { "1".into() };
                (n.clone(), img)
            })
            .collect();
        let refs: Vec<(&str, &str)> = images.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        MonomialMap::new(source, target, &refs)
    }

    pub fn source(&self) -> &Ctx {
        &self.source
    }

    pub fn target(&self) -> &Ctx {
        &self.target
    }

    pub fn apply(&self, m: &Monomial) -> Monomial {
        let mut out = vec![0i32; self.target.len()];
        for (e, img) in m.0.iter().zip(&self.images) {
            if *e != 0 {
                for (o, x) in out.iter_mut().zip(&img.0) {
                    *o += e * x;
                }
            }
        }
        Monomial(out)
    }
}

/// Parses a single monomial with coefficient 1.
pub fn parse_monomial(ctx: &Ctx, text: &str) -> Result<Monomial> {
    let p = LaurentPoly::parse(ctx, text)?;
    match p.terms.iter().next() {
        Some((m, c)) if p.terms.len() == 1 && c.is_one() => Ok(m.clone()),
        _ => Err(Error::Parse(format!("{text:?} is not a monomial"))),
    }
}

/// Recursive-descent parser for `+ - * ^ ( )`, integers and variable names.
struct Parser<'a> {
    ctx: &'a Ctx,
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ctx: &'a Ctx, src: &'a str) -> Self {
        Parser { ctx, src, chars: src.chars().collect(), pos: 0 }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<LaurentPoly> {
        let p = self.expr()?;
        if self.peek().is_some() {
            return Err(self.err("unexpected trailing input"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<LaurentPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                // juxtaposed parenthesised factors, as in "(1-a)(1-b)"
                Some('(') => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<LaurentPoly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        match base.terms.iter().next() {
            Some((m, c)) if base.terms.len() == 1 && c.is_one() => {
                Ok(LaurentPoly::term(self.ctx, m.pow(e), 1))
            }
            _ => Err(self.err("negative exponent on a non-monomial")),
        }
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
        }
        let neg = self.peek() == Some('-');
        if neg {
            self.pos += 1;
        }
        let n = self.integer()?;
        if paren {
            if self.peek() != Some(')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        let n: i32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => Ok(LaurentPoly::constant(self.ctx, self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                LaurentPoly::var(self.ctx, &name).map_err(|_| self.err(&format!("unknown variable {name}")))
            }
            _ => Err(self.err("expected term")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt() -> Ctx {
        VariableContext::new(&["q", "t"]).unwrap()
    }

    fn p(ctx: &Ctx, s: &str) -> LaurentPoly {
        LaurentPoly::parse(ctx, s).unwrap()
    }

    #[test]
    fn context_validation() {
        assert!(VariableContext::new::<&str>(&[]).is_err());
        assert!(VariableContext::new(&["q", "q"]).is_err());
        assert!(VariableContext::new(&["1q"]).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let c = qt();
        assert_eq!(&p(&c, "q + t") * &p(&c, "q - t"), p(&c, "q^2 - t^2"));
        assert_eq!(&p(&c, "q + t") + &LaurentPoly::zero(&c), p(&c, "q + t"));
        assert_eq!(&p(&c, "q+t") * &p(&c, "q^2+q*t+t^2"), p(&c, "q^3+2*q^2*t+2*q*t^2+t^3"));
    }

    #[test]
    fn context_mismatch_is_usage_error() {
        let a = p(&qt(), "q");
        let other = VariableContext::new(&["x"]).unwrap();
        let b = p(&other, "x");
        assert!(matches!(a.checked_add(&b), Err(Error::Usage(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn canonical_string() {
        let c = qt();
        let c3 = p(&c, "q^3 + q^2*t + q*t + q*t^2 + t^3");
        assert_eq!(c3.to_string(), "q*t + t^3 + q*t^2 + q^2*t + q^3");
        assert_eq!(p(&c, "2*q - 3 + t^-1").to_string(), "t^-1 - 3 + 2*q");
        assert_eq!(LaurentPoly::zero(&c).to_string(), "0");
        assert_eq!(p(&c, "-q").to_string(), "-q");
    }

    #[test]
    fn display_round_trips() {
        let c = qt();
        for s in ["q*t + t^3 - 7*q^2*t^-3", "1", "-2", "q^-1*t^-1 + 5"] {
            let x = p(&c, s);
            assert_eq!(p(&c, &x.to_string()), x);
        }
    }

    #[test]
    fn parser_forms() {
        let c = qt();
        assert_eq!(p(&c, "(1-q)(1+q)"), p(&c, "1 - q^2"));
        assert_eq!(p(&c, "q^(-2)*q^2"), LaurentPoly::one(&c));
        assert!(LaurentPoly::parse(&c, "q + ").is_err());
        assert!(LaurentPoly::parse(&c, "x").is_err());
        assert!(LaurentPoly::parse(&c, "(1+q)^-1").is_err());
    }

    #[test]
    fn substitution_examples() {
        let src = VariableContext::new(&["z1", "z2", "z3", "w2", "w3"]).unwrap();
        let tgt = VariableContext::new(&["x1", "x2", "x3", "q", "t"]).unwrap();
        let map = MonomialMap::new(
            &src,
            &tgt,
            &[("z1", "x1*t^2"), ("z2", "x2"), ("z3", "x3"), ("w2", "q*t^-1"), ("w3", "q*t^-1")],
        )
        .unwrap();
        assert_eq!(p(&src, "z1*w2").substitute(&map).unwrap(), p(&tgt, "x1*q*t"));

        let c = qt();
        let id = MonomialMap::identity(&c);
        let x = p(&c, "q^2 - 3*t + q*t^-1");
        assert_eq!(x.substitute(&id).unwrap(), x);
        let merge = MonomialMap::new(&c, &c, &[("q", "q"), ("t", "q")]).unwrap();
        assert_eq!(p(&c, "q+t").substitute(&merge).unwrap(), p(&c, "2*q"));
        assert!(MonomialMap::new(&c, &c, &[("q", "q")]).is_err());
    }

    #[test]
    fn symmetry() {
        let c = qt();
        assert!(p(&c, "q+t").is_qt_symmetric().unwrap());
        assert!(p(&c, "q^4+q^3*t+q^2*t^2+q*t^3+t^4+q^2*t+q*t^2").is_qt_symmetric().unwrap());
        assert!(!p(&c, "q^2+t").is_qt_symmetric().unwrap());
        let x = VariableContext::new(&["x"]).unwrap();
        assert!(p(&x, "x").is_qt_symmetric().is_err());
    }

    #[test]
    fn grid() {
        let c = qt();
        let c3 = p(&c, "q^3 + q^2*t + q*t + q*t^2 + t^3");
        let g = c3.coefficient_grid().unwrap();
        assert_eq!(g.len(), 4);
        for (i, j) in [(3, 0), (2, 1), (1, 2), (0, 3), (1, 1)] {
            assert_eq!(g[i][j], BigInt::one());
        }
        assert_eq!(g.iter().flatten().filter(|x| !x.is_zero()).count(), 5);
        assert_eq!(LaurentPoly::from_grid(&c, &g).unwrap(), c3);
        assert_eq!(LaurentPoly::one(&c).coefficient_grid().unwrap(), vec![vec![BigInt::one()]]);
        assert!(p(&c, "t^-1").coefficient_grid().is_err());
        let cx = VariableContext::new(&["x", "q", "t"]).unwrap();
        assert!(p(&cx, "x*q").coefficient_grid().is_err());
        assert!(p(&cx, "q").coefficient_grid().is_ok());
    }

    #[test]
    fn monomial_order() {
        let a = Monomial(vec![3, 0]);
        let b = Monomial(vec![1, 1]);
        let c = Monomial(vec![0, 3]);
        assert!(b < c && c < a);
    }

    #[test]
    fn specialize() {
        let src = VariableContext::new(&["x", "y1", "q"]).unwrap();
        let tgt = VariableContext::new(&["x", "q"]).unwrap();
        let map = MonomialMap::specialize_to_one(&src, &tgt).unwrap();
        assert_eq!(p(&src, "x*y1^2*q + y1").substitute(&map).unwrap(), p(&tgt, "x*q + 1"));
    }
}
