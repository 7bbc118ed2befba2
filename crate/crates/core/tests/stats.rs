use f2lab::genlin::presets;
use f2lab::gf2::BitVector;
use f2lab::stats::*;
use f2lab::stream::{CounterStream, F2Stream};
use proptest::prelude::*;
use serde::Deserialize;

/// `P(X <= s)` for one degree of freedom by composite Simpson on
/// `x = t^2`, which removes the singularity at zero.
fn chi2_dof1_cdf(s: f64) -> f64 {
    let (a, b) = (0.0, s.sqrt());
    let steps = 20_000;
    let h = (b - a) / steps as f64;
    let f = |t: f64| 2.0 * (-t * t / 2.0).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut sum = f(a) + f(b);
    for i in 1..steps {
        let t = a + i as f64 * h;
        sum += if i % 2 == 1 { 4.0 } else { 2.0 } * f(t);
    }
    sum * h / 3.0
}

#[test]
fn dof_one_critical_value() {
    let r = from_statistic(3.8415, 1);
    assert!((r.p_upper - 0.05).abs() < 1e-3);
    for s in [0.01, 0.5, 1.0, 3.8415, 6.63, 12.0] {
        let oracle = chi2_dof1_cdf(s);
        assert!((from_statistic(s, 1).p_lower - oracle).abs() < 1e-10, "s = {s}");
    }
}

#[test]
fn dof_two_closed_form() {
    let r = from_statistic(2.0 * 2f64.ln(), 2);
    assert!((r.p_upper - 0.5).abs() < 1e-12);
    for i in 0..200 {
        let x = i as f64 * 0.37;
        assert!((from_statistic(x, 2).p_upper - (-x / 2.0).exp()).abs() < 1e-10, "x = {x}");
    }
}

#[test]
fn incomplete_gamma_complements_on_grid() {
    let mut a = 0.5;
    while a <= 50.0 {
        for i in 0..=400 {
            let x = i as f64 * 0.5;
            let (p, q) = incomplete_gamma(a, x);
            assert!((0.0..=1.0).contains(&p) && (0.0..=1.0).contains(&q));
            assert!((p + q - 1.0).abs() < 1e-12, "a = {a}, x = {x}");
        }
        a += 0.5;
    }
}

#[test]
fn incomplete_gamma_integer_shape_closed_form() {
    // Q(k, x) = e^-x sum_{j<k} x^j / j!
    for k in 1..=12u32 {
        for x in [0.1, 1.0, 4.0, 9.5, 20.0] {
            let mut term = 1.0;
            let mut sum = 0.0;
            for j in 0..k {
                if j > 0 {
                    term *= x / j as f64;
                }
                sum += term;
            }
            let q = (-x).exp() * sum;
            assert!((incomplete_gamma(k as f64, x).1 - q).abs() < 1e-12, "k = {k}, x = {x}");
        }
    }
}

#[test]
fn ln_gamma_against_factorials() {
    let mut ln_fact = 0.0f64;
    for k in 1..=170u32 {
        ln_fact += (k as f64).ln();
        let rel = (ln_gamma(k as f64 + 1.0) - ln_fact).abs() / ln_fact.max(1.0);
        assert!(rel < 1e-13, "k = {k}");
        assert!((ln_factorial(k as f64) - ln_fact).abs() < 1e-10 * ln_fact.max(1.0));
    }
}

#[test]
fn chisq_errors_and_warnings() {
    assert_eq!(chisq_test(&[], Expected::Uniform(1.0)), Err(StatsError::Empty));
    assert!(matches!(chisq_test(&[1, 2], Expected::Uniform(0.0)), Err(StatsError::NonPositiveExpected { .. })));
    assert!(matches!(chisq_test(&[1, 2], Expected::PerCell(&[1.0])), Err(StatsError::ExpectedLength { .. })));
    let r = chisq_test(&[1, 2, 3], Expected::PerCell(&[1.0, 2.0, 3.0])).unwrap();
    assert_eq!(r.statistic, 0.0);
    assert_eq!(r.decide(0.05), ChiSqDecision::RejectTooGood);
}

#[test]
fn decision_names_the_tail() {
    assert_eq!(from_statistic(200.0, 10).decide(0.01), ChiSqDecision::RejectPoorFit);
    assert_eq!(from_statistic(0.01, 10).decide(0.01), ChiSqDecision::RejectTooGood);
    assert_eq!(from_statistic(10.0, 10).decide(0.01), ChiSqDecision::Accept);
}

proptest! {
    #[test]
    fn statistic_is_cell_permutation_invariant(counts in prop::collection::vec(0u64..50, 2..40), rot in 0usize..40) {
        let mut rotated = counts.clone();
        let k = rot % counts.len();
        rotated.rotate_left(k);
        rotated.reverse();
        let e = 7.5;
        let a = chisq_test(&counts, Expected::Uniform(e)).unwrap();
        let b = chisq_test(&rotated, Expected::Uniform(e)).unwrap();
        prop_assert!((a.statistic - b.statistic).abs() <= 1e-9 * a.statistic.max(1.0));
    }

    #[test]
    fn lower_tail_is_monotone(dof in 1u64..200, x in 0.0f64..400.0, dx in 0.0f64..20.0) {
        let lo = from_statistic(x, dof).p_lower;
        let hi = from_statistic(x + dx, dof).p_lower;
        prop_assert!(hi + 1e-14 >= lo);
    }

    #[test]
    fn two_tailed_is_clamped_double_min(dof in 1u64..500, x in 0.0f64..1000.0) {
        let r = from_statistic(x, dof);
        prop_assert!((r.p_lower + r.p_upper - 1.0).abs() < 1e-12);
        prop_assert_eq!(r.two_tailed_p, (2.0 * r.p_lower.min(r.p_upper)).min(1.0));
    }
}

/// Fraction of all `N^N` maps from `N` points to `N` cells that hit every
/// cell exactly once.
fn balanced_fraction(n_points: u32, cells: u32) -> f64 {
    let per = n_points / cells;
    let total = (cells as u64).pow(n_points);
    let mut hits = 0u64;
    for mut code in 0..total {
        let mut counts = vec![0u32; cells as usize];
        for _ in 0..n_points {
            counts[(code % cells as u64) as usize] += 1;
            code /= cells as u64;
        }
        if counts.iter().all(|&c| c == per) {
            hits += 1;
        }
    }
    hits as f64 / total as f64
}

#[test]
fn probability_matches_enumeration() {
    let p = log_equidist_probability(1, 1, 1).unwrap();
    assert_eq!(balanced_fraction(2, 2), 0.5);
    assert!((p.probability() - 0.5).abs() < 1e-15);
    assert!((p.log_exact.unwrap() - 0.5f64.ln()).abs() < 1e-15);

    let p = log_equidist_probability(2, 2, 1).unwrap();
    assert_eq!(balanced_fraction(4, 4), 0.09375);
    assert_eq!(p.probability(), 0.09375);
    assert!((p.log_multinomial.exp() - 0.09375).abs() < 1e-15);

    // multinomial generalisation, dw < n: 4 points into 2 cells, 2 each
    let p = log_equidist_probability(2, 1, 1).unwrap();
    assert!(p.log_exact.is_none());
    assert_eq!(p.probability(), balanced_fraction(4, 2));
    // 8 points into 4 cells
    let p = log_equidist_probability(3, 1, 2).unwrap();
    assert_eq!(p.probability(), balanced_fraction(8, 4));
}

#[test]
fn exact_log_matches_direct_sum() {
    // n = 12: ln N! - N ln N by summing ln k
    let big_n = 4096u32;
    let direct: f64 = (1..=big_n).map(|k| (k as f64).ln()).sum::<f64>() - big_n as f64 * (big_n as f64).ln();
    let p = log_equidist_probability(12, 3, 4).unwrap();
    assert!((p.log_exact.unwrap() - direct).abs() < 1e-12 * direct.abs());
    assert!((p.log_multinomial - p.log_exact.unwrap()).abs() < 1e-12 * direct.abs());
    for n in 1..=20u32 {
        let p = log_equidist_probability(n, 1, n).unwrap();
        assert!(p.log_exact.unwrap() <= 0.0);
    }
}

#[test]
fn stirling_agreement() {
    let p = log_equidist_probability(20, 1, 20).unwrap();
    let exact = p.log_exact.unwrap();
    assert!((exact - p.log_stirling).abs() / exact.abs() < 1e-6);
    let mut prev = f64::INFINITY;
    for n in [4u32, 8, 12, 16, 20] {
        let p = log_equidist_probability(n, 1, n).unwrap();
        let rel = (p.log_exact.unwrap() - p.log_stirling).abs() / p.log_exact.unwrap().abs();
        assert!(rel < prev);
        prev = rel;
    }
}

#[test]
fn probability_argument_errors() {
    assert!(matches!(log_equidist_probability(4, 2, 3), Err(StatsError::TooFine { .. })));
    assert!(matches!(log_equidist_probability(2000, 1, 1), Err(StatsError::OutOfRange { .. })));
}

#[test]
fn counter_segment_is_exactly_uniform() {
    for n in [4u32, 8, 12] {
        let r = segment_chisq(&mut CounterStream::new(n), 1, 4, 1 << n, SegmentMode::Blocks).unwrap();
        assert_eq!(r.statistic, 0.0);
    }
}

#[test]
fn full_cycle_tally_is_too_good() {
    for spec in [presets::xorshift16(), presets::xorshift16_best()] {
        let w2 = f2lab::equidist::resolution_table(&spec, 2, true).unwrap().rows[1].w_d;
        for (d, w) in [(1usize, 16usize), (2, w2)] {
            let mut src = F2Stream::new(&spec, &spec.default_seed());
            let r = segment_chisq(&mut src, d, w, 65535, SegmentMode::OverlapFull).unwrap();
            // cells hold c or c - 1 (zero cell): statistic is tiny and exact
            let cells = 1u64 << (d * w);
            let e = 65535.0 / cells as f64;
            let c = (65536 / cells) as f64;
            let exact = ((cells - 1) as f64 * (c - e).powi(2) + (c - 1.0 - e).powi(2)) / e;
            assert!((r.statistic - exact).abs() < 1e-9 * exact.max(1.0), "{} ({d},{w})", spec.name());
            assert!(r.statistic < 1.0 + 1e-9);
            assert!(r.p_lower < 1e-6);
            assert_eq!(r.decide(1e-6), ChiSqDecision::RejectTooGood);
        }
    }
}

#[derive(Deserialize)]
struct Golden {
    generator: String,
    seed: String,
    statistic: f64,
    dof: u64,
    two_tailed_p: f64,
}

#[test]
fn segment_golden_anchors() {
    let text = include_str!("golden/segment_chisq_n16_d2_w4_m256.json");
    let golden: Vec<Golden> = serde_json::from_str(text).unwrap();
    assert_eq!(golden.len(), 12);
    for g in golden {
        let spec = match g.generator.as_str() {
            "xorshift16" => presets::xorshift16(),
            "xorshift16-best" => presets::xorshift16_best(),
            other => panic!("unknown generator {other}"),
        };
        let seed = BitVector::from_hex(16, &g.seed).unwrap();
        let r = segment_chisq(&mut F2Stream::new(&spec, &seed), 2, 4, 256, SegmentMode::Blocks).unwrap();
        assert_eq!(r.statistic, g.statistic);
        assert_eq!(r.dof, g.dof);
        assert!((r.two_tailed_p - g.two_tailed_p).abs() <= 1e-12 * g.two_tailed_p.max(1e-300));
        if g.generator == "xorshift16-best" {
            assert!(r.two_tailed_p > 0.001 && r.two_tailed_p < 0.999);
        }
    }
}
