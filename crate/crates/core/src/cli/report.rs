//! Run reports and their text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::equidist::{AgreementRecord, EquidistReport};
use crate::genlin::{CycleLength, PeriodCertificate};
use crate::lcg::SpectralResult;
use crate::stats::{ChiSqDecision, ChiSqResult, EquidistProbability, SegmentMode};

use super::specfile::GeneratorSpecFile;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec_digest: Option<String>,
    pub payload: Payload,
    /// Only present with `--timing`; everything else is deterministic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Analyze(AnalyzePayload),
    Verify(AgreementRecord),
    Randu(RanduPayload),
    Chisq(ChisqPayload),
    Prob(EquidistProbability),
    Spectral(SpectralPayload),
    Search(SearchPayload),
    Period(PeriodPayload),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzePayload {
    pub certificate: PeriodCertificate,
    pub report: EquidistReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RanduPayload {
    pub z0: u64,
    pub samples: u64,
    pub recurrence_windows: u64,
    pub recurrence_violations: u64,
    pub normal: [i64; 3],
    pub planes: Vec<i64>,
    pub plane_count: usize,
    pub plane_spacing: f64,
    pub full_period: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tally_3_4: Option<TallySummary>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TallySummary {
    pub d: usize,
    pub w: usize,
    pub total: u64,
    pub min_count: u64,
    pub max_count: u64,
    pub empty_cells: usize,
    pub equidistributed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChisqPayload {
    pub d: usize,
    pub w: usize,
    pub m: u64,
    pub mode: SegmentMode,
    pub alpha: f64,
    pub result: ChiSqResult,
    pub decision: ChiSqDecision,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralPayload {
    pub d: usize,
    pub bound: u32,
    pub result: SpectralResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spacing: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchHit {
    pub amounts: Vec<usize>,
    pub period: u64,
    pub tag: String,
    pub spec: GeneratorSpecFile,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchPayload {
    pub n: usize,
    pub template: crate::genlin::ShiftTemplate,
    pub budget: u64,
    pub hits: Vec<SearchHit>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PeriodPayload {
    pub generator: String,
    pub cycle_length: CycleLength,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maximal: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<PeriodCertificate>,
}

impl RunReport {
    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "f2lab {} :: {}", self.version, self.command);
        if let Some(d) = &self.spec_digest {
            let _ = writeln!(out, "spec sha256 {d}");
        }
        out.push_str(&self.payload.to_text());
        if let Some(t) = self.wall_time_ms {
            let _ = writeln!(out, "wall time {t:.1} ms");
        }
        out
    }
}

fn decision_text(d: ChiSqDecision) -> &'static str {
    match d {
        ChiSqDecision::Accept => "ACCEPT",
        ChiSqDecision::RejectTooGood => "REJECT (too good)",
        ChiSqDecision::RejectPoorFit => "REJECT (poor fit)",
    }
}

impl Payload {
    pub fn to_text(&self) -> String {
        let mut o = String::new();
        match self {
            Payload::Analyze(a) => {
                let _ = writeln!(o, "period: {}", certificate_text(&a.certificate));
                o.push_str(&a.report.to_string());
            }
            Payload::Verify(r) => {
                let _ = writeln!(
                    o,
                    "{}  (d, w) = ({}, {})  n = {}  rank = {}  rank verdict = {}  tally verdict = {}",
                    if r.agree { "AGREE" } else { "DISAGREE" },
                    r.d,
                    r.w,
                    r.n,
                    r.rank,
                    r.rank_verdict,
                    r.tally_verdict
                );
                let _ = writeln!(
                    o,
                    "cells: zero = {}  min = {}  max = {}  expected = {}  total = {}",
                    r.zero_cell_count,
                    r.min_count,
                    r.max_count,
                    r.expected_per_cell.map_or("-".to_string(), |c| c.to_string()),
                    r.total
                );
                if let Some(c) = &r.counts {
                    if c.len() <= 64 {
                        let _ = writeln!(o, "counts {c:?}");
                    }
                }
            }
            Payload::Randu(r) => {
                let _ = writeln!(
                    o,
                    "recurrence z[n+2] - 6 z[n+1] + 9 z[n] = 0 mod 2^31: {} violations in {} windows",
                    r.recurrence_violations, r.recurrence_windows
                );
                let _ = writeln!(
                    o,
                    "planes with normal {:?}: {} distinct {:?}",
                    r.normal, r.plane_count, r.planes
                );
                let _ = writeln!(o, "plane spacing {:.10}", r.plane_spacing);
                if let Some(p) = r.period {
                    let _ = writeln!(o, "period {p}");
                }
                if let Some(t) = &r.tally_3_4 {
                    let _ = writeln!(
                        o,
                        "({}, {}) tally: min {} max {} empty {} -> {}",
                        t.d,
                        t.w,
                        t.min_count,
                        t.max_count,
                        t.empty_cells,
                        if t.equidistributed { "equidistributed" } else { "NOT equidistributed" }
                    );
                }
            }
            Payload::Chisq(c) => {
                let r = &c.result;
                let _ = writeln!(
                    o,
                    "(d, w) = ({}, {})  M = {}  mode = {:?}",
                    c.d, c.w, c.m, c.mode
                );
                let _ = writeln!(
                    o,
                    "chi2 = {:.6}  dof = {}  p_lower = {:.6e}  p_upper = {:.6e}  two-tailed p = {:.6e}",
                    r.statistic, r.dof, r.p_lower, r.p_upper, r.two_tailed_p
                );
                let _ = writeln!(o, "alpha = {}: {}", c.alpha, decision_text(c.decision));
            }
            Payload::Prob(p) => {
                let _ = writeln!(o, "n = {}  d = {}  w = {}", p.n, p.d, p.w);
                if let Some(e) = p.log_exact {
                    let _ = writeln!(o, "ln(N!/N^N) = {e:.6}");
                }
                let _ = writeln!(o, "ln P = {:.6}  ln Stirling = {:.6}", p.log_multinomial, p.log_stirling);
                let _ = writeln!(o, "log10 P = {:.6}", p.log10_probability);
                let prob = p.probability();
                if prob > 0.0 {
                    let _ = writeln!(o, "P = {prob:.6e}");
                }
            }
            Payload::Spectral(s) => match &s.result {
                SpectralResult::Found { vector } => {
                    let _ = writeln!(
                        o,
                        "d = {}  bound = {}  q = {:?}  |q|^2 = {}  spacing = {:.7}",
                        s.d,
                        s.bound,
                        vector.q,
                        vector.norm_sq,
                        s.spacing.unwrap_or(f64::NAN)
                    );
                }
                SpectralResult::BoundTooSmall { bound } => {
                    let _ = writeln!(o, "d = {}: no vector within bound {bound}", s.d);
                }
            },
            Payload::Search(s) => {
                let _ = writeln!(o, "n = {}  template = {:?}  budget = {}: {} hits", s.n, s.template, s.budget, s.hits.len());
                for h in &s.hits {
                    let _ = writeln!(o, "  {:?}  period {}  ({})", h.amounts, h.period, h.tag);
                }
            }
            Payload::Period(p) => {
                let cl = match p.cycle_length {
                    CycleLength::Exact(t) => t.to_string(),
                    CycleLength::ExceedsCap(c) => format!("exceeds cap {c}"),
                };
                let _ = writeln!(o, "{}: cycle length {cl}", p.generator);
                if let Some(m) = p.maximal {
                    let _ = writeln!(o, "maximal period {m}");
                }
                if let Some(c) = &p.certificate {
                    let _ = writeln!(o, "certificate: {}", certificate_text(c));
                }
            }
        }
        o
    }
}

fn certificate_text(c: &PeriodCertificate) -> String {
    match c {
        PeriodCertificate::Exhaustion { period } => format!("2^n - 1 = {period}, verified by exhaustion"),
        PeriodCertificate::Primitive { min_poly } => format!("primitive minimal polynomial {min_poly}"),
        PeriodCertificate::NotMaximal { reason } => format!("not maximal ({reason})"),
        PeriodCertificate::Uncertified { reason } => format!("uncertified ({reason})"),
    }
}

/// Summary of a tally for reports.
pub fn summarize(t: &crate::equidist::TallyResult) -> TallySummary {
    TallySummary {
        d: t.d,
        w: t.w,
        total: t.total,
        min_count: t.min_count(),
        max_count: t.max_count(),
        empty_cells: t.counts.iter().filter(|&&c| c == 0).count(),
        equidistributed: t.is_equidistributed(),
    }
}
