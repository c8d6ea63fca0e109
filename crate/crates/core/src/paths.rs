//! k-Dyck paths, their area and bounce statistics.
//!
//! A path is stored by its red ranks `(r_1, ..., r_m)` with `r_1 = 0` and
//! `0 <= r_{i+1} <= r_i + k_i`; east runs are derived.

use std::fmt;
use std::sync::Arc;

use crate::error::{domain, invariant, Result};

/// A composition `(k_1, ..., k_m)` of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KVector {
    parts: Arc<[u32]>,
}

impl KVector {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let parts: Vec<u32> = parts.into();
        if parts.is_empty() {
            return Err(domain!("k-vector must have at least one part"));
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(domain!("part {} of k-vector is zero", pos + 1));
        }
        Ok(KVector { parts: parts.into() })
    }

    /// Parses a comma separated list such as `1,1,3,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts = parse_u32_list(text)?;
        KVector::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Sum of parts.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `self` with `last` appended.
    pub fn concat(&self, last: u32) -> Result<Self> {
        let mut parts = self.parts.to_vec();
        parts.push(last);
        KVector::new(parts)
    }
}

impl fmt::Debug for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KVector{self}")
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.parts))
    }
}

pub(crate) fn parse_u32_list(text: &str) -> Result<Vec<u32>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<u32>()
                .map_err(|_| domain!("invalid integer {:?} in list {:?}", s.trim(), text))
        })
        .collect()
}

pub(crate) fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// A k-Dyck path encoded by its red ranks.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DyckPath {
    kvec: KVector,
    ranks: Vec<u32>,
}

impl DyckPath {
    pub fn new(kvec: KVector, ranks: Vec<u32>) -> Result<Self> {
        check_ranks(&kvec, &ranks)?;
        Ok(DyckPath { kvec, ranks })
    }

    pub fn kvec(&self) -> &KVector {
        &self.kvec
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// East-run lengths `a_i = r_i + k_i - r_{i+1}` with `r_{m+1} = 0`.
    pub fn east_runs(&self) -> Vec<u32> {
        east_runs(self.kvec.parts(), &self.ranks)
    }

    pub fn area(&self) -> u32 {
        self.ranks.iter().sum()
    }
}

fn check_ranks(kvec: &KVector, ranks: &[u32]) -> Result<()> {
    let k = kvec.parts();
    if ranks.len() != k.len() {
        return Err(domain!("expected {} ranks for {kvec}, got {}", k.len(), ranks.len()));
    }
    if ranks[0] != 0 {
        return Err(domain!("first rank must be 0, got {}", ranks[0]));
    }
    for i in 0..k.len() - 1 {
        if ranks[i + 1] > ranks[i] + k[i] {
            return Err(domain!(
                "rank r_{} = {} exceeds r_{} + k_{} = {}",
                i + 2,
                ranks[i + 1],
                i + 1,
                i + 1,
                ranks[i] + k[i]
            ));
        }
    }
    Ok(())
}

fn east_runs(k: &[u32], ranks: &[u32]) -> Vec<u32> {
    (0..k.len())
        .map(|i| {
            let next = ranks.get(i + 1).copied().unwrap_or(0);
            ranks[i] + k[i] - next
        })
        .collect()
}

/// Calls `f` on every rank sequence of `kvec` in descending lexicographic
/// order of `(r_2, ..., r_m)`. With `r2 = Some(v)` only sequences with
/// `r_2 = v` are visited, which is how scans are split across workers.
pub fn for_each_ranks<F: FnMut(&[u32])>(kvec: &KVector, r2: Option<u32>, mut f: F) {
    let k = kvec.parts();
    let mut ranks = vec![0u32; k.len()];
    if k.len() == 1 {
        if r2.is_none() {
            f(&ranks);
        }
        return;
    }
    let (lo, hi) = match r2 {
        Some(v) if v <= k[0] => (v, v),
        Some(_) => return,
        None => (0, k[0]),
    };
    for v in (lo..=hi).rev() {
        ranks[1] = v;
        descend(k, &mut ranks, 2, &mut f);
    }
}

fn descend<F: FnMut(&[u32])>(k: &[u32], ranks: &mut [u32], idx: usize, f: &mut F) {
    if idx == k.len() {
        f(ranks);
        return;
    }
    let top = ranks[idx - 1] + k[idx - 1];
    for v in (0..=top).rev() {
        ranks[idx] = v;
        descend(k, ranks, idx + 1, f);
    }
}

/// Every path of `kvec`, descending lexicographic on `(r_2, ..., r_m)`.
pub fn enumerate_paths(kvec: &KVector) -> Vec<DyckPath> {
    let mut out = Vec::new();
    for_each_ranks(kvec, None, |r| {
        out.push(DyckPath { kvec: kvec.clone(), ranks: r.to_vec() })
    });
    out
}

/// Values of `r_2` in enumeration order; the work units of a parallel scan.
pub fn r2_split(kvec: &KVector) -> Vec<Option<u32>> {
    if kvec.m() == 1 {
        vec![None]
    } else {
        (0..=kvec.parts()[0]).rev().map(Some).collect()
    }
}

/// Record of one run of the rank-tableau bounce algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BounceTrace {
    pub bounce_points: Vec<(u32, u32)>,
    pub leg_lengths: Vec<u32>,
    pub horizontal_counts: Vec<u32>,
    /// Column `j` holds `k_j + 1` cells.
    pub tableau: Vec<Vec<u32>>,
}

impl BounceTrace {
    pub fn first_row_sum(&self) -> u32 {
        self.tableau.iter().map(|c| c[0]).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    pub area: u32,
    pub bounce: u32,
    pub trace: BounceTrace,
}

/// Area and bounce of a path, with the full bounce trace.
pub fn path_stats(path: &DyckPath) -> Result<PathStats> {
    let (bounce, trace) = run_bounce(path.kvec.parts(), &path.ranks, true)?;
    Ok(PathStats { area: path.area(), bounce, trace: trace.expect("trace requested") })
}

/// `(area, bounce)` of the path with ranks `ranks`, without building a trace.
/// The ranks must already be valid for `kvec`.
pub fn area_bounce(kvec: &KVector, ranks: &[u32]) -> Result<(u32, u32)> {
    let (bounce, _) = run_bounce(kvec.parts(), ranks, false)?;
    Ok((ranks.iter().sum(), bounce))
}

fn run_bounce(k: &[u32], ranks: &[u32], record: bool) -> Result<(u32, Option<BounceTrace>)> {
    let m = k.len();
    let n: u32 = k.iter().sum();
    let mut starts = Vec::with_capacity(m);
    let mut acc = 0;
    for &kj in k {
        starts.push(acc);
        acc += kj;
    }
    let tops: Vec<u32> = (0..m).map(|j| starts[j] + k[j]).collect();
    let xs: Vec<u32> = (0..m).map(|j| starts[j] - ranks[j]).collect();

    // counts[v] = number of tableau cells holding v
    let mut counts = vec![0u32; (2 * n + 2) as usize];
    let mut tableau: Vec<Vec<u32>> = Vec::new();
    let mut trace = record.then(|| BounceTrace {
        bounce_points: vec![(0, 0)],
        leg_lengths: Vec::new(),
        horizontal_counts: Vec::new(),
        tableau: Vec::new(),
    });

    let (mut x, mut y) = (0u32, 0u32);
    let mut filled = 0usize;
    let mut bounce = 0u32;
    let mut i = 0u32;
    while (x, y) != (n, n) {
        if i > n {
            return Err(invariant!(
                "bounce path for ranks {ranks:?} of k={k:?} did not reach ({n},{n}) in {n} steps"
            ));
        }
        let big_y = if x < n {
            let j = (0..m).rev().find(|&j| xs[j] <= x).expect("xs[0] = 0");
            tops[j]
        } else {
            n
        };
        let v = (0..m).filter(|&j| starts[j] >= y && tops[j] <= big_y).count();
        for j in filled..filled + v {
            if j >= m || starts[j] < y || tops[j] > big_y {
                return Err(invariant!("bounce leg {i} skips unfilled columns (ranks {ranks:?})"));
            }
            let col: Vec<u32> = (i..=i + k[j]).collect();
            for &c in &col {
                counts[c as usize] += 1;
            }
            if record {
                tableau.push(col);
            }
        }
        filled += v;
        bounce += i * v as u32;
        let h = counts.get(i as usize + 1).copied().unwrap_or(0);
        x += h;
        y = big_y;
        if x > n || y > n {
            return Err(invariant!("bounce point ({x},{y}) left the region for ranks {ranks:?}"));
        }
        if let Some(t) = trace.as_mut() {
            t.leg_lengths.push(v as u32);
            t.horizontal_counts.push(h);
            t.bounce_points.push((x, y));
        }
        i += 1;
    }
    if filled != m {
        return Err(invariant!("bounce legs consumed {filled} of {m} north runs"));
    }
    if let Some(t) = trace.as_mut() {
        t.tableau = tableau;
    }
    Ok((bounce, trace))
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

fn to_stat(area: i64, bounce: i64) -> Result<(u32, u32)> {
    if area < 0 || bounce < 0 {
        return Err(invariant!("closed form produced negative statistic ({area}, {bounce})"));
    }
    Ok((area as u32, bounce as u32))
}

/// Closed-form `(area, bounce)` for a `(k1,k2,k3)`-path with ranks `(0, r2, r3)`.
pub fn closed_stats_three(k1: u32, k2: u32, k3: u32, r2: u32, r3: u32) -> Result<(u32, u32)> {
    let kv = KVector::new(vec![k1, k2, k3])?;
    check_ranks(&kv, &[0, r2, r3])?;
    let (k1, k2, r2, r3) = (k1 as i64, k2 as i64, r2 as i64, r3 as i64);
    let idx = three_branches(k2, r2, r3)[0];
    to_stat(r2 + r3, three_branch_value(idx, k1, k2, r2, r3))
}

/// Indices (0-based, printed order) of the branches of the `(k,k,k,k)`
/// bounce formula whose guards accept `(k,a,b,c)`. Fractional guards are
/// compared after doubling.
pub fn k4_branches(k: i64, a: i64, b: i64, c: i64) -> Vec<usize> {
    let p1 = b >= 2 * k - 2 * a;
    let p23 = b < 2 * k - 2 * a;
    let even = b % 2 == 0;
    let mut out = Vec::new();
    let mut push = |cond: bool, idx: usize| {
        if cond {
            out.push(idx)
        }
    };
    push(p1 && c >= 4 * k - 2 * a - 2 * b, 0);
    push(p1 && c < 4 * k - 2 * a - 2 * b, 1);
    push(p23 && even && 2 * c >= 6 * k - 2 * a - 3 * b, 2);
    push(p23 && even && 6 * k - 6 * a - 3 * b <= 2 * c && 2 * c < 6 * k - 2 * a - 3 * b, 3);
    push(p23 && even && 2 * c < 6 * k - 6 * a - 3 * b, 4);
    push(p23 && !even && 2 * c >= 6 * k - 2 * a - 3 * b - 1, 5);
    push(p23 && !even && 6 * k - 6 * a - 3 * b - 1 <= 2 * c && 2 * c < 6 * k - 2 * a - 3 * b - 1, 6);
    push(p23 && !even && 2 * c < 6 * k - 6 * a - 3 * b - 1, 7);
    out
}

pub(crate) fn k4_branch_value(idx: usize, k: i64, a: i64, b: i64, c: i64) -> i64 {
    match idx {
        0 => 6 * a + 3 * b + c - 4 * k,
        1 => 5 * a + 2 * b + ceil_div(c, 2) - 2 * k,
        2 => 4 * a + 2 * b + c - 2 * k,
        3 => 2 * a + b / 2 + k + ceil_div(3 * a + 3 * b / 2 + c - 3 * k, 2),
        4 => 3 * a + b + ceil_div(c, 3),
        5 => 4 * a + 2 * b + c - 2 * k + 1,
        6 => 2 * a + (b + 1) / 2 + k + ceil_div(3 * a + 3 * (b + 1) / 2 + c - 3 * k - 1, 2),
        7 => 3 * a + b + 1 + ceil_div(c - 1, 3),
        _ => unreachable!("k4 formula has 8 branches"),
    }
}

/// Closed-form `(area, bounce)` for the `(k,k,k,k)`-path with coordinates
/// `r_2 = k-a`, `r_3 = 2k-a-b`, `r_4 = 3k-a-b-c`.
pub fn closed_stats_k4(k: u32, a: u32, b: u32, c: u32) -> Result<(u32, u32)> {
    let (k, a, b, c) = (k as i64, a as i64, b as i64, c as i64);
    if k < 1 || a > k || b > 2 * k - a || c > 3 * k - a - b {
        return Err(domain!("(k,a,b,c) = ({k},{a},{b},{c}) outside 0<=a<=k, b<=2k-a, c<=3k-a-b"));
    }
    let idx = *k4_branches(k, a, b, c)
        .first()
        .ok_or_else(|| invariant!("no k4 bounce branch accepts ({k},{a},{b},{c})"))?;
    to_stat(6 * k - 3 * a - 2 * b - c, k4_branch_value(idx, k, a, b, c))
}

/// Indices of the branches of the `(k,k+m,k+m,k+m)` formula accepting the point.
pub fn kaaa_branches(k: i64, m: i64, a: i64, b: i64, c: i64) -> Vec<usize> {
    let hb = ceil_div(b, 2);
    let mid = 0 < b && b <= 2 * (k - a);
    let even = b % 2 == 0;
    let lo = 3 * (k - a - hb);
    let hi = 3 * (k - hb) - a + 2 * m;
    let mut out = Vec::new();
    let mut push = |cond: bool, idx: usize| {
        if cond {
            out.push(idx)
        }
    };
    push(b == 0 && c == 0, 0);
    push(b == 0 && 0 < c && c <= 3 * (k - a), 1);
    push(b == 0 && c > 3 * (k - a), 2);
    push(mid && c == 0, 3);
    push(mid && even && 0 < c && c <= lo, 4);
    push(mid && !even && c >= 1 && c - 1 <= lo, 5);
    push(mid && even && lo < c && c <= hi, 6);
    push(mid && !even && lo < c - 1 && c - 1 <= hi, 7);
    push(mid && even && c > hi, 8);
    push(mid && !even && c - 1 > hi, 9);
    push(b > 2 * (k - a) && 0 <= c && c <= 2 * (2 * k - a + m - b), 10);
    push(b > 2 * (k - a) && c > 2 * (2 * k - a + m - b), 11);
    out
}

pub(crate) fn kaaa_branch_value(idx: usize, k: i64, m: i64, a: i64, b: i64, c: i64) -> i64 {
    let hb = ceil_div(b, 2);
    match idx {
        0 => 3 * a,
        1 => 3 * a + ceil_div(c, 3),
        2 => 2 * a + k + ceil_div(c - 3 * (k - a), 2),
        3 => 3 * a + 2 * hb,
        4 => 3 * a + 2 * hb + ceil_div(c, 3),
        5 => 3 * a + 2 * hb + ceil_div(c - 1, 3),
        6 => 2 * a + hb + k + ceil_div(c - 3 * (k - a - hb), 2),
        7 => 2 * a + hb + k + ceil_div(c - 1 - 3 * (k - a - hb), 2),
        8 => c - 2 * k + 4 * a + 4 * hb - m,
        9 => c - 1 - 2 * k + 4 * a + 4 * hb - m,
        10 => 5 * a + 2 * b - 2 * k + ceil_div(c, 2),
        11 => 6 * a + 3 * b - 4 * k + c - m,
        _ => unreachable!("kaaa formula has 12 branches"),
    }
}

/// Closed-form `(area, bounce)` for the `(k,k+m,k+m,k+m)`-path with
/// `r_2 = k-a`, `r_3 = 2k+m-a-b`, `r_4 = 3k+2m-a-b-c`.
pub fn closed_stats_kaaa(k: u32, m: u32, a: u32, b: u32, c: u32) -> Result<(u32, u32)> {
    let (k, m, a, b, c) = (k as i64, m as i64, a as i64, b as i64, c as i64);
    if k < 1 || a > k || b > 2 * k + m - a || c > 3 * k + 2 * m - a - b {
        return Err(domain!(
            "(k,m,a,b,c) = ({k},{m},{a},{b},{c}) outside a<=k, b<=2k+m-a, c<=3k+2m-a-b"
        ));
    }
    let idx = *kaaa_branches(k, m, a, b, c)
        .first()
        .ok_or_else(|| invariant!("no kaaa bounce branch accepts ({k},{m},{a},{b},{c})"))?;
    to_stat(6 * k + 3 * m - 3 * a - 2 * b - c, kaaa_branch_value(idx, k, m, a, b, c))
}

pub(crate) fn three_branch_value(idx: usize, k1: i64, k2: i64, r2: i64, r3: i64) -> i64 {
    let s = r2 + k2 - r3;
    match idx {
        0 => 2 * (k1 - r2) + s - r2.min(k2),
        1 => 2 * (k1 - r2) + ceil_div(s, 2),
        _ => unreachable!("three-part formula has 2 branches"),
    }
}

/// Branches of the three-part lemma accepting the point (0 = min branch, 1 = ceiling branch).
pub fn three_branches(k2: i64, r2: i64, r3: i64) -> Vec<usize> {
    if r2 + k2 - r3 >= 2 * r2.min(k2) {
        vec![0]
    } else {
        vec![1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(p: &[u32]) -> KVector {
        KVector::new(p.to_vec()).unwrap()
    }

    fn all_stats(p: &[u32]) -> Vec<(u32, u32)> {
        enumerate_paths(&kv(p))
            .iter()
            .map(|d| {
                let s = path_stats(d).unwrap();
                (s.area, s.bounce)
            })
            .collect()
    }

    #[test]
    fn rejects_bad_kvectors() {
        assert!(KVector::new(vec![]).is_err());
        assert!(KVector::new(vec![1, 0]).is_err());
        assert!(KVector::parse("1,x").is_err());
        assert_eq!(KVector::parse("1, 2,3").unwrap().parts(), &[1, 2, 3]);
    }

    #[test]
    fn rejects_bad_ranks() {
        assert!(DyckPath::new(kv(&[1, 1]), vec![1, 0]).is_err());
        assert!(DyckPath::new(kv(&[1, 1]), vec![0, 2]).is_err());
        assert!(DyckPath::new(kv(&[1, 1]), vec![0]).is_err());
    }

    #[test]
    fn path_counts() {
        assert_eq!(enumerate_paths(&kv(&[1, 1, 1])).len(), 5);
        assert_eq!(enumerate_paths(&kv(&[1, 2])).len(), 2);
        assert_eq!(enumerate_paths(&kv(&[2, 1])).len(), 3);
        for k in 1..6 {
            let ps = enumerate_paths(&kv(&[k]));
            assert_eq!(ps.len(), 1);
            assert_eq!(ps[0].ranks(), &[0]);
        }
        // classical Catalan numbers
        let cat = [1, 2, 5, 14, 42, 132];
        for (n, &c) in cat.iter().enumerate() {
            assert_eq!(enumerate_paths(&kv(&vec![1; n + 1])).len(), c);
        }
    }

    #[test]
    fn fig1_order_and_stats() {
        assert_eq!(all_stats(&[1, 1, 1]), vec![(3, 0), (2, 1), (1, 1), (1, 2), (0, 3)]);
    }

    #[test]
    fn fig2_stats() {
        assert_eq!(all_stats(&[2, 1]), vec![(2, 0), (1, 1), (0, 2)]);
        assert_eq!(all_stats(&[1, 2]), vec![(1, 0), (0, 1)]);
    }

    #[test]
    fn single_part() {
        let s = path_stats(&enumerate_paths(&kv(&[4]))[0]).unwrap();
        assert_eq!((s.area, s.bounce), (0, 0));
        assert_eq!(s.trace.leg_lengths[0], 1);
        assert_eq!(s.trace.leg_lengths.iter().sum::<u32>(), 1);
        assert_eq!(s.trace.bounce_points.last(), Some(&(4, 4)));
    }

    #[test]
    fn east_runs_sum_to_n() {
        for d in enumerate_paths(&kv(&[2, 1, 3])) {
            assert_eq!(d.east_runs().iter().sum::<u32>(), 6);
        }
        let d = DyckPath::new(kv(&[1, 1, 1]), vec![0, 1, 2]).unwrap();
        assert_eq!(d.east_runs(), vec![0, 0, 3]);
    }

    #[test]
    fn zero_length_leg_occurs() {
        let d = DyckPath::new(kv(&[2, 1]), vec![0, 0]).unwrap();
        let s = path_stats(&d).unwrap();
        assert!(s.trace.leg_lengths.contains(&0));
        assert_eq!(s.bounce, 2);
    }

    #[test]
    fn trace_invariants() {
        for p in [&[1, 1, 3, 1][..], &[3, 1, 2], &[2, 2, 2, 2], &[1, 4, 1]] {
            let k = kv(p);
            for d in enumerate_paths(&k) {
                let s = path_stats(&d).unwrap();
                assert_eq!(s.trace.leg_lengths.iter().sum::<u32>() as usize, k.m());
                let bounce: u32 =
                    s.trace.leg_lengths.iter().enumerate().map(|(i, v)| i as u32 * v).sum();
                assert_eq!(bounce, s.bounce);
                assert_eq!(s.trace.first_row_sum(), s.bounce);
                assert_eq!(s.trace.bounce_points.last(), Some(&(k.n(), k.n())));
                for (j, col) in s.trace.tableau.iter().enumerate() {
                    assert_eq!(col.len() as u32, p[j] + 1);
                }
                assert_eq!(area_bounce(&k, d.ranks()).unwrap(), (s.area, s.bounce));
            }
        }
    }

    #[test]
    fn r2_split_covers_enumeration() {
        let k = kv(&[3, 1, 2]);
        let mut split = Vec::new();
        for r2 in r2_split(&k) {
            for_each_ranks(&k, r2, |r| split.push(r.to_vec()));
        }
        let whole: Vec<Vec<u32>> = enumerate_paths(&k).into_iter().map(|d| d.ranks).collect();
        assert_eq!(split, whole);
    }

    #[test]
    fn closed_three_examples() {
        assert_eq!(closed_stats_three(1, 1, 1, 0, 0).unwrap(), (0, 3));
        assert_eq!(closed_stats_three(1, 1, 1, 1, 2).unwrap(), (3, 0));
        assert!(closed_stats_three(1, 1, 1, 2, 0).is_err());
    }

    #[test]
    fn closed_k4_examples() {
        assert_eq!(closed_stats_k4(1, 0, 0, 0).unwrap(), (6, 0));
        assert_eq!(closed_stats_k4(1, 1, 1, 1).unwrap(), (0, 6));
        assert!(closed_stats_k4(1, 2, 0, 0).is_err());
    }

    #[test]
    fn closed_kaaa_examples() {
        assert_eq!(closed_stats_kaaa(1, 1, 1, 0, 0).unwrap(), (6, 3));
        for a in 0..=1 {
            for b in 0..=2 - a {
                for c in 0..=3 - a - b {
                    assert_eq!(closed_stats_kaaa(1, 0, a, b, c).unwrap(), closed_stats_k4(1, a, b, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn closed_forms_agree_small() {
        for k1 in 1..=3 {
            for k2 in 1..=3 {
                for k3 in 1..=3 {
                    for d in enumerate_paths(&kv(&[k1, k2, k3])) {
                        let s = path_stats(&d).unwrap();
                        let r = d.ranks();
                        assert_eq!(closed_stats_three(k1, k2, k3, r[1], r[2]).unwrap(), (s.area, s.bounce));
                    }
                }
            }
        }
        for k in 1..=3u32 {
            for d in enumerate_paths(&kv(&[k; 4])) {
                let s = path_stats(&d).unwrap();
                let r = d.ranks();
                let a = k - r[1];
                let b = k + r[1] - r[2];
                let c = k + r[2] - r[3];
                assert_eq!(k4_branches(k as i64, a as i64, b as i64, c as i64).len(), 1);
                assert_eq!(closed_stats_k4(k, a, b, c).unwrap(), (s.area, s.bounce));
            }
        }
    }

    #[test]
    fn counts_cover_values_in_trace() {
        let d = DyckPath::new(kv(&[1, 1, 1]), vec![0, 0, 0]).unwrap();
        let s = path_stats(&d).unwrap();
        assert_eq!(s.trace.leg_lengths, vec![1, 1, 1]);
        assert_eq!(s.trace.tableau, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
    }
}
