//! Two-tailed chi-square goodness of fit, and the probability that a random
//! sequence is equidistributed.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::equidist::{full_cycle_tally, EquidistError, Tally};
use crate::stream::OutputSource;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum StatsError {
    #[error("no cells to test")]
    Empty,
    #[error("expected count {value} in cell {cell} must be positive")]
    NonPositiveExpected { cell: usize, value: f64 },
    #[error("{got} expected counts for {cells} cells")]
    ExpectedLength { got: usize, cells: usize },
    #[error("n = {n} puts 2^n beyond double range (max {max})")]
    OutOfRange { n: u32, max: u32 },
    #[error("need d w <= n (d = {d}, w = {w}, n = {n})")]
    TooFine { n: u32, d: u32, w: u32 },
    #[error(transparent)]
    Equidist(#[from] EquidistError),
}

/// Lanczos approximation, `g = 7`, nine coefficients.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs x > 0, got {x}");
    if x < 0.5 {
        // reflection: Γ(x) Γ(1-x) = π / sin(πx)
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut a = LANCZOS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln()
}

/// `ln k!`, summed exactly-as-possible for small `k`.
pub fn ln_factorial(k: f64) -> f64 {
    if k < 256.0 && k.fract() == 0.0 {
        (2..=k as u64).map(|i| (i as f64).ln()).sum()
    } else {
        ln_gamma(k + 1.0)
    }
}

const GAMMA_EPS: f64 = 1e-16;
const GAMMA_MAX_ITER: usize = 100_000;

/// Regularized incomplete gamma functions `(P(a, x), Q(a, x))`.
///
/// Series below `x < a + 1`, Lentz continued fraction above; the other
/// value is the complement.
pub fn incomplete_gamma(a: f64, x: f64) -> (f64, f64) {
    assert!(a > 0.0 && x >= 0.0, "incomplete_gamma needs a > 0, x >= 0");
    if x == 0.0 {
        return (0.0, 1.0);
    }
    let log_prefix = a * x.ln() - x - ln_gamma(a);
    if x < a + 1.0 {
        let mut term = 1.0 / a;
        let mut sum = term;
        let mut ap = a;
        for _ in 0..GAMMA_MAX_ITER {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if term.abs() < sum.abs() * GAMMA_EPS {
                break;
            }
        }
        let p = (log_prefix + sum.ln()).exp().min(1.0);
        (p, 1.0 - p)
    } else {
        let tiny = 1e-300;
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / tiny;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..GAMMA_MAX_ITER {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if d.abs() < tiny {
                d = tiny;
            }
            c = b + an / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < GAMMA_EPS {
                break;
            }
        }
        let q = (log_prefix + h.ln()).exp().min(1.0);
        (1.0 - q, q)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiSqResult {
    pub statistic: f64,
    pub dof: u64,
    pub p_lower: f64,
    pub p_upper: f64,
    pub two_tailed_p: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChiSqDecision {
    Accept,
    /// Statistic too small: the fit is better than chance allows.
    RejectTooGood,
    RejectPoorFit,
}

impl ChiSqResult {
    /// Equal-tailed rule: reject when `2 min(p_lower, p_upper) <= alpha`,
    /// naming the tail responsible.
    pub fn decide(&self, alpha: f64) -> ChiSqDecision {
        if self.two_tailed_p > alpha {
            ChiSqDecision::Accept
        } else if self.p_lower <= self.p_upper {
            ChiSqDecision::RejectTooGood
        } else {
            ChiSqDecision::RejectPoorFit
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expected<'a> {
    Uniform(f64),
    PerCell(&'a [f64]),
}

/// Pearson statistic with `cells - 1` degrees of freedom and both tails.
pub fn chisq_test(counts: &[u64], expected: Expected<'_>) -> Result<ChiSqResult, StatsError> {
    if counts.is_empty() {
        return Err(StatsError::Empty);
    }
    let exp_at = |i: usize| match &expected {
        Expected::Uniform(e) => *e,
        Expected::PerCell(v) => v[i],
    };
    if let Expected::PerCell(v) = &expected {
        if v.len() != counts.len() {
            return Err(StatsError::ExpectedLength { got: v.len(), cells: counts.len() });
        }
    }
    let mut statistic = 0.0;
    let mut warned = false;
    for (i, &o) in counts.iter().enumerate() {
        let e = exp_at(i);
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(e > 0.0) {
            return Err(StatsError::NonPositiveExpected { cell: i, value: e });
        }
        if e < 5.0 && !warned {
            log::warn!("expected count {e} below 5 in cell {i}; the chi-square approximation is rough");
            warned = true;
        }
        let diff = o as f64 - e;
        statistic += diff * diff / e;
    }
    let dof = (counts.len() - 1) as u64;
    Ok(from_statistic(statistic, dof))
}

/// Tail probabilities of a chi-square variate with `dof` degrees of freedom.
pub fn from_statistic(statistic: f64, dof: u64) -> ChiSqResult {
    let (p_lower, p_upper) = if dof == 0 {
        (if statistic > 0.0 { 1.0 } else { 0.0 }, if statistic > 0.0 { 0.0 } else { 1.0 })
    } else {
        incomplete_gamma(dof as f64 / 2.0, statistic / 2.0)
    };
    ChiSqResult {
        statistic,
        dof,
        p_lower,
        p_upper,
        two_tailed_p: (2.0 * p_lower.min(p_upper)).clamp(0.0, 1.0),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquidistProbability {
    pub n: u32,
    pub d: u32,
    pub w: u32,
    /// `ln(N!/N^N)`, present when `d w = n`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub log_exact: Option<f64>,
    /// `ln N! - K ln c! - N ln K` with `K = 2^(dw)` cells of `c = 2^(n-dw)`.
    pub log_multinomial: f64,
    /// `ln sqrt(2 pi N) - N`.
    pub log_stirling: f64,
    pub log10_probability: f64,
}

impl EquidistProbability {
    /// The probability itself. For `N <= 16` it is computed exactly as
    /// `(N! / (c!)^K) / 2^(dwN)`; beyond that from the log.
    pub fn probability(&self) -> f64 {
        if self.n <= 4 {
            let big_n = 1u64 << self.n;
            let cells = 1u64 << (self.d * self.w);
            let c = big_n / cells;
            let fact = |k: u64| (1..=k).product::<u64>();
            let ways = fact(big_n) / fact(c).pow(cells as u32);
            return ways as f64 * (-((self.d * self.w) as f64) * big_n as f64).exp2();
        }
        self.log_multinomial.exp()
    }
}

/// Largest `n` for which `2^n` is a finite double.
pub const PROBABILITY_MAX_N: u32 = 1000;

/// Probability that `N = 2^n` independent uniform points put exactly
/// `2^(n-dw)` points in each of the `2^(dw)` cells, in log space.
pub fn log_equidist_probability(n: u32, d: u32, w: u32) -> Result<EquidistProbability, StatsError> {
    if n > PROBABILITY_MAX_N {
        return Err(StatsError::OutOfRange { n, max: PROBABILITY_MAX_N });
    }
    if d * w > n || d == 0 || w == 0 {
        return Err(StatsError::TooFine { n, d, w });
    }
    let big_n = (n as f64).exp2();
    let cells = ((d * w) as f64).exp2();
    let per_cell = ((n - d * w) as f64).exp2();
    let ln_n_fact = ln_factorial(big_n);
    let log_multinomial = ln_n_fact - cells * ln_factorial(per_cell) - big_n * cells.ln();
    let log_exact = (d * w == n).then(|| ln_n_fact - big_n * big_n.ln());
    let log_stirling = 0.5 * (2.0 * std::f64::consts::PI * big_n).ln() - big_n;
    Ok(EquidistProbability {
        n,
        d,
        w,
        log_exact,
        log_multinomial,
        log_stirling,
        log10_probability: log_multinomial / std::f64::consts::LN_10,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SegmentMode {
    /// `M` consecutive non-overlapping `d`-tuples.
    Blocks,
    /// `M` cyclic overlapping windows; `M` must be the full period.
    OverlapFull,
}

/// Tallies `m` tuples from `source` and tests them against the uniform
/// expectation `m / 2^(dw)`.
pub fn segment_chisq<S: OutputSource>(
    source: &mut S,
    d: usize,
    w: usize,
    m: u64,
    mode: SegmentMode,
) -> Result<ChiSqResult, StatsError> {
    if w as u32 > source.max_bits() {
        return Err(EquidistError::WidthTooLarge { w, width: source.max_bits() as usize }.into());
    }
    let tally = match mode {
        SegmentMode::Blocks => {
            let mut t = Tally::new(d, w)?;
            let mut coords = vec![0u64; d];
            for _ in 0..m {
                for c in coords.iter_mut() {
                    *c = source.next_bits(w as u32);
                }
                t.add_coords(&coords);
            }
            t
        }
        SegmentMode::OverlapFull => full_cycle_tally(source, m, d, w)?,
    }
    .finish(None, None);
    let expected = m as f64 / (tally.counts.len() as f64);
    chisq_test(&tally.counts, Expected::Uniform(expected))
}
