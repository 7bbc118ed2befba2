//! `(d, w)`-equidistribution: the rank test on the tuple matrix, exhaustive
//! full-cycle tallies that check it, and the resolution figures of merit.
//!
//! Points are overlapping windows `(x_j, ..., x_{j+d-1})`, one per starting
//! index over a full period, indices taken modulo the period. For an
//! F₂-linear generator each nonzero initial state contributes exactly one
//! window, which is what the tuple-matrix rank describes. With period
//! `2^n - 1` the all-zero cell is one point short of the others.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::genlin::{certify_period, F2GeneratorSpec, GenlinError};
use crate::gf2::{BitMatrix, Gf2Error};
use crate::lcg::{for_each_cyclic_window, LcgError, LcgSpec};
use crate::stream::{CounterStream, F2Stream, OutputSource};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EquidistError {
    #[error("w = {w} exceeds the generator output width {width}")]
    WidthTooLarge { w: usize, width: usize },
    #[error("dimension and resolution must be at least 1 (d = {d}, w = {w})")]
    Degenerate { d: usize, w: usize },
    #[error("tally of 2^{bits} cells exceeds the memory budget (max 2^{max})")]
    MemoryBudget { bits: usize, max: usize },
    #[error("point {index} has coordinate {value} outside [0, 1)")]
    OutOfRange { index: usize, value: f64 },
    #[error("point {index} has {got} coordinates, expected {want}")]
    PointDimension { index: usize, got: usize, want: usize },
    #[error("permutation is not a bijection on 0..{0}")]
    NotPermutation(usize),
    #[error("n = {n} is too large for a full-cycle sweep (max {max})")]
    TooLarge { n: usize, max: usize },
    #[error("generator period is not certified maximal: {0}")]
    NotMaximal(String),
    #[error(transparent)]
    Genlin(#[from] GenlinError),
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
    #[error(transparent)]
    Lcg(#[from] LcgError),
}

/// Largest `d * w` a tally will address.
pub const MAX_TALLY_BITS: usize = 30;
/// Dense count arrays above this many cells are refused before allocation.
pub const TALLY_CELL_BUDGET_BITS: usize = 27;
pub const VERIFY_MAX_N: usize = 20;

/// One of the `2^(dw)` small hypercubes: coordinate 0 occupies the most
/// significant `w` bits, each coordinate MSB-first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellIndex {
    pub d: usize,
    pub w: usize,
    pub index: u64,
}

impl CellIndex {
    pub fn encode(w: usize, coords: &[u64]) -> CellIndex {
        let index = coords.iter().fold(0u64, |acc, &c| {
            debug_assert!(c >> w == 0);
            (acc << w) | c
        });
        CellIndex { d: coords.len(), w, index }
    }

    pub fn decode(&self) -> Vec<u64> {
        let mask = (1u64 << self.w) - 1;
        (0..self.d)
            .map(|k| (self.index >> (self.w * (self.d - 1 - k))) & mask)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeriodKind {
    #[serde(rename = "2^n")]
    PowerOfTwo,
    #[serde(rename = "2^n-1")]
    PowerOfTwoMinusOne,
}

/// Cell counts over `2^(dw)` cells, dense and indexed by [`CellIndex`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyResult {
    pub d: usize,
    pub w: usize,
    pub n: Option<usize>,
    pub counts: Vec<u64>,
    pub total: u64,
    pub period_kind: Option<PeriodKind>,
}

impl TallyResult {
    pub fn count(&self, cell: &CellIndex) -> u64 {
        self.counts[cell.index as usize]
    }

    pub fn min_count(&self) -> u64 {
        self.counts.iter().copied().min().unwrap_or(0)
    }

    pub fn max_count(&self) -> u64 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// Every cell holds the same count.
    pub fn is_uniform(&self) -> bool {
        self.min_count() == self.max_count()
    }

    /// Every cell holds `c >= 1` except the all-zero cell, which holds `c - 1`.
    pub fn has_zero_deficit_pattern(&self) -> bool {
        let Some((&zero, rest)) = self.counts.split_first() else {
            return false;
        };
        match rest.first() {
            None => false,
            Some(&c) => c >= 1 && zero + 1 == c && rest.iter().all(|&x| x == c),
        }
    }

    /// Counts for the period variant: uniform for period `2^n`, the
    /// zero-cell deficit pattern for `2^n - 1`.
    pub fn is_equidistributed(&self) -> bool {
        match self.period_kind {
            Some(PeriodKind::PowerOfTwoMinusOne) => self.has_zero_deficit_pattern(),
            _ => self.is_uniform(),
        }
    }
}

/// Dense counter with a budget check before allocation.
#[derive(Clone, Debug)]
pub struct Tally {
    d: usize,
    w: usize,
    counts: Vec<u64>,
    total: u64,
}

impl Tally {
    pub fn new(d: usize, w: usize) -> Result<Self, EquidistError> {
        if d == 0 || w == 0 {
            return Err(EquidistError::Degenerate { d, w });
        }
        let bits = d * w;
        if bits > MAX_TALLY_BITS || bits > TALLY_CELL_BUDGET_BITS {
            return Err(EquidistError::MemoryBudget {
                bits,
                max: TALLY_CELL_BUDGET_BITS.min(MAX_TALLY_BITS),
            });
        }
        Ok(Tally { d, w, counts: vec![0; 1 << bits], total: 0 })
    }

    #[inline]
    pub fn add_coords(&mut self, coords: &[u64]) {
        debug_assert_eq!(coords.len(), self.d);
        let idx = CellIndex::encode(self.w, coords).index;
        self.counts[idx as usize] += 1;
        self.total += 1;
    }

    #[inline]
    pub fn add_index(&mut self, index: u64) {
        self.counts[index as usize] += 1;
        self.total += 1;
    }

    pub fn finish(self, n: Option<usize>, period_kind: Option<PeriodKind>) -> TallyResult {
        TallyResult {
            d: self.d,
            w: self.w,
            n,
            counts: self.counts,
            total: self.total,
            period_kind,
        }
    }
}

fn cell_of(x: f64, w: usize, index: usize) -> Result<u64, EquidistError> {
    if !(0.0..1.0).contains(&x) {
        return Err(EquidistError::OutOfRange { index, value: x });
    }
    Ok((x * (1u64 << w) as f64) as u64)
}

/// Tallies pre-formed `d`-tuples; coordinate `k` falls in cell
/// `floor(x_k 2^w)`.
pub fn brute_tally<'a, I>(points: I, d: usize, w: usize) -> Result<TallyResult, EquidistError>
where
    I: IntoIterator<Item = &'a [f64]>,
{
    let mut tally = Tally::new(d, w)?;
    let mut coords = vec![0u64; d];
    for (i, p) in points.into_iter().enumerate() {
        if p.len() != d {
            return Err(EquidistError::PointDimension { index: i, got: p.len(), want: d });
        }
        for (c, &x) in coords.iter_mut().zip(p) {
            *c = cell_of(x, w, i)?;
        }
        tally.add_coords(&coords);
    }
    Ok(tally.finish(None, None))
}

/// Tallies the overlapping windows `y_j = (x_j, ..., x_{j+d-1})`,
/// `j = 0 .. N`, of a scalar sequence, indices taken modulo `N`.
pub fn brute_tally_cyclic(xs: &[f64], d: usize, w: usize) -> Result<TallyResult, EquidistError> {
    let mut tally = Tally::new(d, w)?;
    let cells = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| cell_of(x, w, i))
        .collect::<Result<Vec<_>, _>>()?;
    let n = cells.len();
    let mut coords = vec![0u64; d];
    for j in 0..n {
        for (k, c) in coords.iter_mut().enumerate() {
            *c = cells[(j + k) % n];
        }
        tally.add_coords(&coords);
    }
    Ok(tally.finish(None, None))
}

/// Overlapping cyclic windows over exactly `period` outputs of `source`.
pub fn full_cycle_tally<S: OutputSource>(
    source: &mut S,
    period: u64,
    d: usize,
    w: usize,
) -> Result<Tally, EquidistError> {
    if w as u32 > source.max_bits() {
        return Err(EquidistError::WidthTooLarge { w, width: source.max_bits() as usize });
    }
    let mut tally = Tally::new(d, w)?;
    let mask = (1u64 << (d * w)) - 1;
    let mut head = Vec::with_capacity(d.saturating_sub(1));
    let mut index = 0u64;
    // index of the window ending at the current output; after d outputs it
    // is the cell of the window that started d - 1 outputs ago
    for t in 0..period {
        let c = source.next_bits(w as u32);
        if (t as usize) < d - 1 {
            head.push(c);
        }
        index = ((index << w) | c) & mask;
        if t + 1 >= d as u64 {
            tally.add_index(index);
        }
    }
    for &c in &head {
        index = ((index << w) | c) & mask;
        tally.add_index(index);
    }
    Ok(tally)
}

/// Full-period tally of the counter `y_j = j mod 2^n`.
pub fn counter_tally(n: usize, d: usize, w: usize) -> Result<TallyResult, EquidistError> {
    if w > n {
        return Err(EquidistError::WidthTooLarge { w, width: n });
    }
    let mut src = CounterStream::new(n as u32);
    let tally = full_cycle_tally(&mut src, 1u64 << n, d, w)?;
    Ok(tally.finish(Some(n), Some(PeriodKind::PowerOfTwo)))
}

/// Full-period tally of an F₂-linear generator from its default seed.
/// The caller vouches that the period is `2^n - 1`.
pub fn f2_full_cycle_tally(spec: &F2GeneratorSpec, d: usize, w: usize) -> Result<TallyResult, EquidistError> {
    if w > spec.w() {
        return Err(EquidistError::WidthTooLarge { w, width: spec.w() });
    }
    if spec.n() > 40 {
        return Err(EquidistError::TooLarge { n: spec.n(), max: 40 });
    }
    let mut src = F2Stream::new(spec, &spec.default_seed());
    let period = (1u64 << spec.n()) - 1;
    let tally = full_cycle_tally(&mut src, period, d, w)?;
    Ok(tally.finish(Some(spec.n()), Some(PeriodKind::PowerOfTwoMinusOne)))
}

/// Full-period overlapping tally of an LCG over the cycle through `z0`.
/// `n` is recorded as `log2(period)` when the period is a power of two.
pub fn lcg_full_cycle_tally(spec: &LcgSpec, d: usize, w: usize) -> Result<TallyResult, EquidistError> {
    if w > 63 {
        return Err(EquidistError::WidthTooLarge { w, width: 63 });
    }
    let mut tally = Tally::new(d, w)?;
    let mut coords = vec![0u64; d];
    let period = for_each_cyclic_window(spec, d, spec.m, |zs| {
        for (c, &z) in coords.iter_mut().zip(zs) {
            *c = spec.leading_bits(z, w as u32);
        }
        tally.add_coords(&coords);
    })?;
    let (n, kind) = if period.is_power_of_two() {
        (Some(period.trailing_zeros() as usize), Some(PeriodKind::PowerOfTwo))
    } else {
        (None, None)
    };
    Ok(tally.finish(n, kind))
}

/// Stacks the leading `w` rows of `B A^(i+1)` for `i = 0 .. d`: the map
/// from the initial state to the leading output bits of steps `1 ..= d`.
pub fn build_tuple_matrix(spec: &F2GeneratorSpec, d: usize, w: usize) -> Result<BitMatrix, EquidistError> {
    if w > spec.w() {
        return Err(EquidistError::WidthTooLarge { w, width: spec.w() });
    }
    let blocks = output_blocks(spec, d, w)?;
    let refs: Vec<&BitMatrix> = blocks.iter().collect();
    Ok(BitMatrix::vstack(spec.n(), &refs)?)
}

/// `[B_w A, B_w A^2, ..., B_w A^d]` with `B_w` the leading `w` rows of `B`.
fn output_blocks(spec: &F2GeneratorSpec, d: usize, w: usize) -> Result<Vec<BitMatrix>, EquidistError> {
    let a = spec.transition_matrix();
    let mut cur = spec.output_matrix().top_rows(w);
    let mut blocks = Vec::with_capacity(d);
    for _ in 0..d {
        cur = cur.mul(a)?;
        blocks.push(cur.clone());
    }
    Ok(blocks)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Equidistribution {
    Equidistributed,
    NotEquidistributed,
    /// `d w > n`: too few states to fill every cell.
    Impossible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidistVerdict {
    pub d: usize,
    pub w: usize,
    pub n: usize,
    pub rank: usize,
    pub verdict: Equidistribution,
    /// Without a certified maximal period the rank answer is structural only.
    pub period_certified: bool,
}

impl EquidistVerdict {
    pub fn holds(&self) -> bool {
        self.verdict == Equidistribution::Equidistributed
    }
}

/// Rank verdict, certifying the period first.
pub fn is_equidistributed(spec: &F2GeneratorSpec, d: usize, w: usize) -> Result<EquidistVerdict, EquidistError> {
    let certified = certify_period(spec, None)?.is_maximal();
    is_equidistributed_with(spec, d, w, certified)
}

/// Rank verdict with a period certification supplied by the caller.
pub fn is_equidistributed_with(
    spec: &F2GeneratorSpec,
    d: usize,
    w: usize,
    period_certified: bool,
) -> Result<EquidistVerdict, EquidistError> {
    if d == 0 || w == 0 {
        return Err(EquidistError::Degenerate { d, w });
    }
    let n = spec.n();
    let m = build_tuple_matrix(spec, d, w)?;
    let rank = m.rank();
    let verdict = if d * w > n {
        Equidistribution::Impossible
    } else if rank == d * w {
        Equidistribution::Equidistributed
    } else {
        Equidistribution::NotEquidistributed
    };
    Ok(EquidistVerdict { d, w, n, rank, verdict, period_certified })
}

/// Rank verdict against an exhaustive full-cycle tally.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementRecord {
    pub n: usize,
    pub d: usize,
    pub w: usize,
    pub rank: usize,
    pub rank_verdict: bool,
    pub tally_verdict: bool,
    pub agree: bool,
    /// `2^(n - dw)` when `dw <= n`.
    pub expected_per_cell: Option<u64>,
    pub zero_cell_count: u64,
    pub min_count: u64,
    pub max_count: u64,
    pub total: u64,
    /// Full counts, included for tallies of at most 4096 cells.
    pub counts: Option<Vec<u64>>,
}

/// Runs one full period, tallies overlapping windows, and compares the
/// exact count pattern with the rank verdict. Needs `n <= 20` and a
/// maximal period.
pub fn verify_equidist(spec: &F2GeneratorSpec, d: usize, w: usize) -> Result<AgreementRecord, EquidistError> {
    let n = spec.n();
    if n > VERIFY_MAX_N {
        return Err(EquidistError::TooLarge { n, max: VERIFY_MAX_N });
    }
    let cert = certify_period(spec, None)?;
    if !cert.is_maximal() {
        return Err(EquidistError::NotMaximal(format!("{cert:?}")));
    }
    let verdict = is_equidistributed_with(spec, d, w, true)?;
    let tally = f2_full_cycle_tally(spec, d, w)?;
    let expected = (d * w <= n).then(|| 1u64 << (n - d * w));
    let tally_verdict = match expected {
        Some(c) => tally.counts[0] + 1 == c && tally.counts[1..].iter().all(|&x| x == c),
        None => false,
    };
    let rank_verdict = verdict.holds();
    Ok(AgreementRecord {
        n,
        d,
        w,
        rank: verdict.rank,
        rank_verdict,
        tally_verdict,
        agree: rank_verdict == tally_verdict,
        expected_per_cell: expected,
        zero_cell_count: tally.counts[0],
        min_count: tally.min_count(),
        max_count: tally.max_count(),
        total: tally.total,
        counts: (tally.counts.len() <= 4096).then(|| tally.counts.clone()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionRow {
    pub d: usize,
    pub w_star: usize,
    /// `min(output width, w_star)`.
    pub w_cap: usize,
    pub w_d: usize,
    pub delta_d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquidistReport {
    pub n: usize,
    pub output_width: usize,
    pub period_certified: bool,
    pub rows: Vec<ResolutionRow>,
    #[serde(rename = "Delta")]
    pub delta: usize,
    #[serde(rename = "W")]
    pub w_sum: usize,
    #[serde(rename = "W_bound")]
    pub w_bound: usize,
}

/// `w_d`, `delta_d = floor(n/d) - w_d`, `Delta = max delta_d`,
/// `W = sum w_d` and `W_bound = sum floor(n/d)` for `d = 1 ..= d_max`.
pub fn resolution_table(
    spec: &F2GeneratorSpec,
    d_max: usize,
    period_certified: bool,
) -> Result<EquidistReport, EquidistError> {
    let n = spec.n();
    let d_max = d_max.min(n);
    let width = spec.w();
    let blocks = output_blocks(spec, d_max, width.min(n))?;
    let mut rows = Vec::with_capacity(d_max);
    for d in 1..=d_max {
        let w_star = n / d;
        let w_cap = width.min(w_star);
        // full rank is monotone in w, so binary search the largest w
        let full_rank = |w: usize| -> Result<bool, EquidistError> {
            let tops: Vec<BitMatrix> = blocks[..d].iter().map(|b| b.top_rows(w)).collect();
            let refs: Vec<&BitMatrix> = tops.iter().collect();
            Ok(BitMatrix::vstack(n, &refs)?.rank() == d * w)
        };
        let (mut lo, mut hi) = (0usize, w_cap);
        while lo < hi {
            let mid = (lo + hi).div_ceil(2);
            if full_rank(mid)? {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        rows.push(ResolutionRow { d, w_star, w_cap, w_d: lo, delta_d: w_star - lo });
    }
    let delta = rows.iter().map(|r| r.delta_d).max().unwrap_or(0);
    let w_sum = rows.iter().map(|r| r.w_d).sum();
    let w_bound = rows.iter().map(|r| r.w_star).sum();
    Ok(EquidistReport { n, output_width: width, period_certified, rows, delta, w_sum, w_bound })
}

impl fmt::Display for EquidistReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n = {}  output width = {}  period certified = {}",
            self.n, self.output_width, self.period_certified
        )?;
        writeln!(f, "{:>5} {:>7} {:>6} {:>5} {:>8}", "d", "w*_d", "cap", "w_d", "delta_d")?;
        for r in &self.rows {
            writeln!(f, "{:>5} {:>7} {:>6} {:>5} {:>8}", r.d, r.w_star, r.w_cap, r.w_d, r.delta_d)?;
        }
        writeln!(f, "Delta = {}  W = {}  W_bound = {}", self.delta, self.w_sum, self.w_bound)
    }
}

/// `sum_{d=1..n} floor(n/d)` and its ratio to `n ln n`.
pub fn wstar_asymptotic(n: usize) -> (u64, f64) {
    assert!(n >= 2, "needs n >= 2");
    let bound: u64 = (1..=n).map(|d| (n / d) as u64).sum();
    let nf = n as f64;
    (bound, bound as f64 / (nf * nf.ln()))
}

/// Tallies `points` and `points` permuted by `permutation` and reports
/// whether the count maps agree.
pub fn reorder_tally_invariance(
    points: &[Vec<f64>],
    permutation: &[usize],
    d: usize,
    w: usize,
) -> Result<bool, EquidistError> {
    let n = points.len();
    if permutation.len() != n {
        return Err(EquidistError::NotPermutation(n));
    }
    let mut seen = vec![false; n];
    for &p in permutation {
        if p >= n || seen[p] {
            return Err(EquidistError::NotPermutation(n));
        }
        seen[p] = true;
    }
    let original = brute_tally(points.iter().map(Vec::as_slice), d, w)?;
    let permuted = brute_tally(permutation.iter().map(|&i| points[i].as_slice()), d, w)?;
    Ok(original == permuted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlin::presets;
    use crate::gf2::BitVector;

    #[test]
    fn cell_index_round_trip() {
        let c = CellIndex::encode(3, &[5, 0, 7]);
        assert_eq!(c.index, 0b101_000_111);
        assert_eq!(c.decode(), vec![5, 0, 7]);
    }

    #[test]
    fn tuple_matrix_examples() {
        let id = presets::identity(4, 4);
        let m = build_tuple_matrix(&id, 2, 3).unwrap();
        assert_eq!(m.rows(), 6);
        assert_eq!(m.rank(), 3);
        for i in 0..3 {
            assert_eq!(m.row(i), m.row(i + 3));
        }

        // companion(x^2+x+1), w = 1: B A = [0 1], B A^2 = [1 1]
        let c = presets::companion2();
        let m = build_tuple_matrix(&c, 2, 1).unwrap();
        let want = BitMatrix::from_rows(
            2,
            &[BitVector::from_bits([false, true]), BitVector::from_bits([true, true])],
        )
        .unwrap();
        assert_eq!(m, want);
        assert_eq!(m.rank(), 2);

        let single = build_tuple_matrix(&c, 1, 2).unwrap();
        assert_eq!(single, c.transition_matrix().clone());
        assert!(build_tuple_matrix(&c, 1, 3).is_err());
    }

    #[test]
    fn verdict_examples() {
        let x16 = presets::xorshift16();
        let v = is_equidistributed(&x16, 1, 1).unwrap();
        assert!(v.holds() && v.period_certified);
        let id = presets::identity(4, 4);
        let v = is_equidistributed(&id, 2, 1).unwrap();
        assert_eq!(v.verdict, Equidistribution::NotEquidistributed);
        assert!(!v.period_certified);
        let v = is_equidistributed(&x16, 5, 4).unwrap();
        assert_eq!(v.verdict, Equidistribution::Impossible);
    }

    #[test]
    fn brute_tally_examples() {
        let t = counter_tally(4, 1, 4).unwrap();
        assert!(t.counts.iter().all(|&c| c == 1));
        let t = counter_tally(1, 1, 1).unwrap();
        assert_eq!(t.counts, vec![1, 1]);
        assert!(Tally::new(6, 5).is_err());
        assert!(brute_tally([&[1.0][..]], 1, 2).is_err());
        assert!(brute_tally([&[0.5, 0.5][..]], 1, 2).is_err());
    }

    #[test]
    fn cyclic_tally_of_reals_matches_stream_tally() {
        let spec = presets::xorshift16();
        let mut src = F2Stream::new(&spec, &spec.default_seed());
        let xs: Vec<f64> = (0..65_535).map(|_| src.next_bits(16) as f64 / 65_536.0).collect();
        let a = brute_tally_cyclic(&xs, 2, 5).unwrap();
        let b = f2_full_cycle_tally(&spec, 2, 5).unwrap();
        assert_eq!(a.counts, b.counts);
    }

    #[test]
    fn verify_companion_counts() {
        let r = verify_equidist(&presets::companion2(), 1, 1).unwrap();
        assert!(r.agree && r.rank_verdict);
        assert_eq!(r.counts, Some(vec![1, 2]));
        assert!(verify_equidist(&presets::identity(3, 3), 1, 1).is_err());
    }

    #[test]
    fn resolution_table_examples() {
        let id = presets::identity(16, 16);
        let r = resolution_table(&id, 16, false).unwrap();
        assert_eq!(r.rows[4].w_star, 3);
        assert_eq!(r.rows[0].w_d, 16);
        assert!(r.rows[1..].iter().all(|row| row.w_d == 0));
        assert_eq!(r.delta, 8);
        assert_eq!(r.w_bound, 50);
        let text = r.to_string();
        assert!(text.contains("W_bound = 50"));
    }

    #[test]
    fn wstar_examples() {
        assert_eq!(wstar_asymptotic(2).0, 3);
        assert_eq!(wstar_asymptotic(16).0, 50);
        let (_, ratio) = wstar_asymptotic(4096);
        assert!((1.0..=1.05).contains(&ratio), "{ratio}");
    }

    #[test]
    fn reorder_rejects_non_bijection() {
        let pts = vec![vec![0.1], vec![0.2]];
        assert!(reorder_tally_invariance(&pts, &[0, 0], 1, 2).is_err());
        assert!(reorder_tally_invariance(&pts, &[0], 1, 2).is_err());
        assert!(reorder_tally_invariance(&pts, &[1, 0], 1, 2).unwrap());
    }
}
