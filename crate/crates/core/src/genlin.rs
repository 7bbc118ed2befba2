//! F₂-linear generators: `u_i = A u_{i-1}`, `v_i = B u_i`, and the
//! fixed-point output `x_i = sum_j v_{i,j} 2^-j`.
//!
//! Bit order: state coordinate 0 is the leading bit. The leading-`w`
//! projection keeps coordinates `0..w`, and output coordinate 0 is the most
//! significant bit of the fixed-point value. For `n <= 64` the state can be
//! read as an `n`-bit integer with coordinate 0 as its most significant bit;
//! a left xor-shift is then the usual `u ^= u << k`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2::{
    mersenne_factors, min_poly, poly_order, BitMatrix, BitVector, F2Poly, Gf2Error, DEFAULT_PROBES,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenlinError {
    #[error("invalid generator: {0}")]
    InvalidSpec(String),
    #[error("state has {got} bits, generator needs {want}")]
    StateLength { got: usize, want: usize },
    #[error("n = {n} exceeds the supported maximum {max} for this operation")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Gf2(#[from] Gf2Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShiftDir {
    /// Toward the leading coordinate (`u << k` in the integer view).
    Left,
    /// Toward the trailing coordinate (`u >> k`).
    Right,
}

/// One `u ^= shift(u, k)` step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XorShift {
    pub dir: ShiftDir,
    pub amount: usize,
}

impl XorShift {
    pub fn left(amount: usize) -> Self {
        XorShift { dir: ShiftDir::Left, amount }
    }

    pub fn right(amount: usize) -> Self {
        XorShift { dir: ShiftDir::Right, amount }
    }

    fn apply(&self, u: &mut BitVector) {
        let s = match self.dir {
            ShiftDir::Left => u.shifted_toward_lead(self.amount),
            ShiftDir::Right => u.shifted_toward_tail(self.amount),
        };
        u.xor_assign(&s);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transition {
    Dense(BitMatrix),
    XorShifts(Vec<XorShift>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutputMap {
    /// Keep state coordinates `0..w`.
    Leading,
    Dense(BitMatrix),
}

/// Single-word kernels for `n <= 64`, in the integer view.
#[derive(Clone, Debug, PartialEq, Eq)]
enum WordKernel {
    XorShifts { ops: Vec<(ShiftDir, u32)>, mask: u64 },
    /// `columns[j]` is `A e_j`; coordinate `j` is integer bit `n - 1 - j`.
    Dense { columns: Vec<u64> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum WordOutput {
    Leading { shift: u32 },
    Dense { rows: Vec<u64> },
}

/// An immutable F₂-linear generator description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2GeneratorSpec {
    n: usize,
    w: usize,
    transition: Transition,
    output: OutputMap,
    name: String,
    dense_a: BitMatrix,
    word: Option<(WordKernel, WordOutput)>,
}

impl F2GeneratorSpec {
    pub fn new(
        n: usize,
        w: usize,
        transition: Transition,
        output: OutputMap,
        name: impl Into<String>,
    ) -> Result<Self, GenlinError> {
        if n == 0 {
            return Err(GenlinError::InvalidSpec("n must be at least 1".into()));
        }
        if w == 0 || w > n {
            return Err(GenlinError::InvalidSpec(format!("need 1 <= w <= n, got w = {w}, n = {n}")));
        }
        let dense_a = match &transition {
            Transition::Dense(a) => {
                if a.rows() != n || a.cols() != n {
                    return Err(GenlinError::InvalidSpec(format!(
                        "A is {}x{}, expected {n}x{n}",
                        a.rows(),
                        a.cols()
                    )));
                }
                a.clone()
            }
            Transition::XorShifts(ops) => {
                if ops.is_empty() {
                    return Err(GenlinError::InvalidSpec("empty xor-shift list".into()));
                }
                if let Some(op) = ops.iter().find(|op| op.amount == 0) {
                    return Err(GenlinError::InvalidSpec(format!(
                        "xor-shift by 0 ({:?}) zeroes the state",
                        op.dir
                    )));
                }
                expand_xorshifts(n, ops)
            }
        };
        match &output {
            OutputMap::Leading => {}
            OutputMap::Dense(b) => {
                if b.rows() != w || b.cols() != n {
                    return Err(GenlinError::InvalidSpec(format!(
                        "B is {}x{}, expected {w}x{n}",
                        b.rows(),
                        b.cols()
                    )));
                }
                if b.is_zero() {
                    return Err(GenlinError::InvalidSpec("output map B must be nonzero".into()));
                }
            }
        }
        let word = (n <= 64).then(|| word_kernels(n, w, &transition, &dense_a, &output));
        Ok(F2GeneratorSpec {
            n,
            w,
            transition,
            output,
            name: name.into(),
            dense_a,
            word,
        })
    }

    pub fn xorshift(n: usize, w: usize, shifts: &[XorShift], name: impl Into<String>) -> Result<Self, GenlinError> {
        Self::new(n, w, Transition::XorShifts(shifts.to_vec()), OutputMap::Leading, name)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn w(&self) -> usize {
        self.w
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn transition(&self) -> &Transition {
        &self.transition
    }

    pub fn output(&self) -> &OutputMap {
        &self.output
    }

    /// `A` as a dense `n x n` matrix (expanded from xor-shifts if needed).
    pub fn transition_matrix(&self) -> &BitMatrix {
        &self.dense_a
    }

    /// `B` as a dense `w x n` matrix.
    pub fn output_matrix(&self) -> BitMatrix {
        match &self.output {
            OutputMap::Leading => BitMatrix::identity(self.n).top_rows(self.w),
            OutputMap::Dense(b) => b.clone(),
        }
    }

    /// Advances one index: `u <- A u`, returns `v = B u`.
    pub fn step(&self, state: &mut GeneratorState) -> BitVector {
        assert_eq!(state.u.len(), self.n, "state length does not match generator");
        match &self.transition {
            Transition::Dense(a) => {
                state.u = a.mul_vec(&state.u).expect("dimensions checked at construction");
            }
            Transition::XorShifts(ops) => {
                for op in ops {
                    op.apply(&mut state.u);
                }
            }
        }
        self.output_of(&state.u)
    }

    /// `B u` for a state `u`.
    pub fn output_of(&self, u: &BitVector) -> BitVector {
        match &self.output {
            OutputMap::Leading => u.truncated(self.w),
            OutputMap::Dense(b) => b.mul_vec(u).expect("dimensions checked at construction"),
        }
    }

    /// Whether the single-word fast path is available (`n <= 64`).
    pub fn has_word_path(&self) -> bool {
        self.word.is_some()
    }

    /// One transition on the integer view of the state. Requires `n <= 64`.
    #[inline]
    pub fn word_step(&self, u: u64) -> u64 {
        let (kernel, _) = self.word.as_ref().expect("word path needs n <= 64");
        match kernel {
            WordKernel::XorShifts { ops, mask } => {
                let mut u = u;
                for &(dir, k) in ops {
                    u ^= match dir {
                        ShiftDir::Left => u.checked_shl(k).unwrap_or(0) & mask,
                        ShiftDir::Right => u.checked_shr(k).unwrap_or(0),
                    };
                }
                u
            }
            WordKernel::Dense { columns } => {
                let n = columns.len();
                let mut out = 0;
                for (j, col) in columns.iter().enumerate() {
                    if (u >> (n - 1 - j)) & 1 == 1 {
                        out ^= col;
                    }
                }
                out
            }
        }
    }

    /// Output value of a state in the integer view, MSB-first `w`-bit value.
    #[inline]
    pub fn word_output(&self, u: u64) -> u64 {
        let (_, out) = self.word.as_ref().expect("word path needs n <= 64");
        match out {
            WordOutput::Leading { shift } => u >> shift,
            WordOutput::Dense { rows } => rows
                .iter()
                .fold(0, |acc, r| (acc << 1) | ((r & u).count_ones() as u64 & 1)),
        }
    }

    pub fn default_seed(&self) -> BitVector {
        BitVector::unit(self.n, 0)
    }
}

fn expand_xorshifts(n: usize, ops: &[XorShift]) -> BitMatrix {
    let columns: Vec<BitVector> = (0..n)
        .map(|j| {
            let mut u = BitVector::unit(n, j);
            for op in ops {
                op.apply(&mut u);
            }
            u
        })
        .collect();
    BitMatrix::from_columns(n, &columns).expect("columns have length n")
}

fn word_kernels(
    n: usize,
    w: usize,
    transition: &Transition,
    dense_a: &BitMatrix,
    output: &OutputMap,
) -> (WordKernel, WordOutput) {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let kernel = match transition {
        Transition::XorShifts(ops) => WordKernel::XorShifts {
            ops: ops.iter().map(|op| (op.dir, op.amount.min(64) as u32)).collect(),
            mask,
        },
        Transition::Dense(_) => {
            let t = dense_a.transpose();
            WordKernel::Dense {
                columns: (0..n).map(|j| t.row(j).to_u64_msb_first()).collect(),
            }
        }
    };
    let out = match output {
        OutputMap::Leading => WordOutput::Leading { shift: (n - w) as u32 },
        OutputMap::Dense(b) => WordOutput::Dense {
            rows: (0..w).map(|i| b.row(i).to_u64_msb_first()).collect(),
        },
    };
    (kernel, out)
}

/// The evolving `n`-bit state `u_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorState {
    pub u: BitVector,
}

impl GeneratorState {
    pub fn new(u: BitVector) -> Self {
        GeneratorState { u }
    }

    pub fn for_spec(spec: &F2GeneratorSpec, seed: &BitVector) -> Result<Self, GenlinError> {
        if seed.len() != spec.n() {
            return Err(GenlinError::StateLength { got: seed.len(), want: spec.n() });
        }
        Ok(GeneratorState { u: seed.clone() })
    }
}

/// Value-style step: returns the next state and its output.
pub fn step(spec: &F2GeneratorSpec, state: &GeneratorState) -> (GeneratorState, BitVector) {
    let mut next = state.clone();
    let v = spec.step(&mut next);
    (next, v)
}

/// `sum_j v_j 2^-j` with `v_1` the most significant bit. Only the leading
/// 53 bits contribute, so the result is always strictly below 1.
pub fn output_real(v: &BitVector) -> f64 {
    let bits = v.len().min(53);
    if bits == 0 {
        return 0.0;
    }
    v.leading_u64(bits) as f64 / (1u64 << bits) as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleLength {
    Exact(u64),
    ExceedsCap(u64),
}

impl CycleLength {
    pub fn exact(self) -> Option<u64> {
        match self {
            CycleLength::Exact(t) => Some(t),
            CycleLength::ExceedsCap(_) => None,
        }
    }
}

pub const DEFAULT_CYCLE_CAP: u64 = 1 << 24;

/// Smallest `t >= 1` with `A^t seed = seed`, by direct iteration.
pub fn cycle_length(spec: &F2GeneratorSpec, seed: &BitVector, cap: u64) -> Result<CycleLength, GenlinError> {
    if seed.len() != spec.n() {
        return Err(GenlinError::StateLength { got: seed.len(), want: spec.n() });
    }
    if seed.is_zero() {
        return Err(GenlinError::InvalidSpec("cycle_length needs a nonzero seed".into()));
    }
    if spec.has_word_path() {
        let start = seed.to_u64_msb_first();
        let mut u = start;
        for t in 1..=cap {
            u = spec.word_step(u);
            if u == start {
                return Ok(CycleLength::Exact(t));
            }
        }
    } else {
        let mut state = GeneratorState::new(seed.clone());
        for t in 1..=cap {
            spec.step(&mut state);
            if state.u == *seed {
                return Ok(CycleLength::Exact(t));
            }
        }
    }
    Ok(CycleLength::ExceedsCap(cap))
}

/// Shift templates enumerated by [`search_maximal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShiftTemplate {
    /// `u ^= u << a; u ^= u >> b`
    LeftRight,
    /// `u ^= u << a; u ^= u >> b; u ^= u << c`
    LeftRightLeft,
}

impl ShiftTemplate {
    fn arity(self) -> usize {
        match self {
            ShiftTemplate::LeftRight => 2,
            ShiftTemplate::LeftRightLeft => 3,
        }
    }

    pub fn shifts(self, amounts: &[usize]) -> Vec<XorShift> {
        let dirs = [ShiftDir::Left, ShiftDir::Right, ShiftDir::Left];
        amounts
            .iter()
            .zip(dirs)
            .map(|(&amount, dir)| XorShift { dir, amount })
            .collect()
    }
}

pub const PERIOD_VERIFIED_BY_EXHAUSTION: &str = "period verified by exhaustion";

/// A search hit whose full period was observed by direct iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalCandidate {
    pub spec: F2GeneratorSpec,
    pub amounts: Vec<usize>,
    pub period: u64,
    pub tag: &'static str,
}

pub const SEARCH_MAX_N: usize = 24;

/// Enumerates shift amounts in `1..=max(1, n-1)` lexicographically, trying
/// at most `budget` candidates, and keeps those with cycle length `2^n - 1`
/// from the default seed. Candidates have output width `n`.
pub fn search_maximal(n: usize, template: ShiftTemplate, budget: u64) -> Result<Vec<MaximalCandidate>, GenlinError> {
    if n == 0 || n > SEARCH_MAX_N {
        return Err(GenlinError::TooLarge { n, max: SEARCH_MAX_N });
    }
    let hi = (n - 1).max(1);
    let arity = template.arity();
    let target = (1u64 << n) - 1;
    let mut amounts = vec![1usize; arity];
    let mut found = Vec::new();
    let mut tried = 0u64;
    'outer: loop {
        if tried >= budget {
            break;
        }
        tried += 1;
        let shifts = template.shifts(&amounts);
        let spec = F2GeneratorSpec::xorshift(n, n, &shifts, format!("xorshift{n}-{}", join(&amounts)))?;
        if cycle_length(&spec, &spec.default_seed(), target)? == CycleLength::Exact(target) {
            found.push(MaximalCandidate {
                spec,
                amounts: amounts.clone(),
                period: target,
                tag: PERIOD_VERIFIED_BY_EXHAUSTION,
            });
        }
        // odometer increment
        for pos in (0..arity).rev() {
            if amounts[pos] < hi {
                amounts[pos] += 1;
                continue 'outer;
            }
            amounts[pos] = 1;
        }
        break;
    }
    Ok(found)
}

fn join(v: &[usize]) -> String {
    v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("-")
}

/// `j mod 2^n` as an `n`-bit vector, most significant bit first.
pub fn counter_sequence(n: usize, j: u64) -> BitVector {
    assert!((1..=64).contains(&n), "counter width must be in 1..=64");
    let masked = if n == 64 { j } else { j & ((1u64 << n) - 1) };
    BitVector::from_u64_msb_first(n, masked)
}

/// How (or whether) a maximal period `2^n - 1` was established.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PeriodCertificate {
    /// Observed by iterating from the default seed.
    Exhaustion { period: u64 },
    /// Minimal polynomial of degree `n`, primitive.
    Primitive { min_poly: F2Poly },
    /// Shown not to reach `2^n - 1`.
    NotMaximal { reason: String },
    /// Neither route applies (no factorization of `2^n - 1` available).
    Uncertified { reason: String },
}

impl PeriodCertificate {
    pub fn is_maximal(&self) -> bool {
        matches!(self, PeriodCertificate::Exhaustion { .. } | PeriodCertificate::Primitive { .. })
    }
}

pub const EXHAUSTION_MAX_N: usize = 24;

/// Exhaustion for `n <= 24`, otherwise minimal polynomial plus primitivity
/// using the embedded factor table (`n <= 64`) or `factors` when given.
pub fn certify_period(
    spec: &F2GeneratorSpec,
    factors: Option<&[(num_bigint::BigUint, u32)]>,
) -> Result<PeriodCertificate, GenlinError> {
    let n = spec.n();
    if n <= EXHAUSTION_MAX_N {
        let target = (1u64 << n) - 1;
        return Ok(match cycle_length(spec, &spec.default_seed(), target)? {
            CycleLength::Exact(t) if t == target => PeriodCertificate::Exhaustion { period: t },
            CycleLength::Exact(t) => PeriodCertificate::NotMaximal {
                reason: format!("cycle from the default seed has length {t}"),
            },
            CycleLength::ExceedsCap(_) => PeriodCertificate::NotMaximal {
                reason: "default seed does not return within 2^n - 1 steps".into(),
            },
        });
    }
    let table;
    let factors = match factors {
        Some(f) => f,
        None => match mersenne_factors(n) {
            Some(f) => {
                table = f;
                &table[..]
            }
            None => {
                return Ok(PeriodCertificate::Uncertified {
                    reason: format!("no factorization of 2^{n} - 1 available"),
                })
            }
        },
    };
    let p = min_poly(spec.transition_matrix(), DEFAULT_PROBES)?;
    if p.degree() != Some(n) {
        return Ok(PeriodCertificate::NotMaximal {
            reason: format!("period < 2^n - 1: minimal polynomial has degree {}", p.degree().unwrap_or(0)),
        });
    }
    match poly_order(&p, factors) {
        Ok(o) if o.primitive => Ok(PeriodCertificate::Primitive { min_poly: p }),
        Ok(o) => Ok(PeriodCertificate::NotMaximal {
            reason: format!("minimal polynomial has order {}", o.order),
        }),
        Err(Gf2Error::Reducible(_)) => Ok(PeriodCertificate::NotMaximal {
            reason: "minimal polynomial is reducible".into(),
        }),
        Err(e) => Err(e.into()),
    }
}

/// Ready-made generators used by the demos and tests.
pub mod presets {
    use super::*;

    /// Shift amounts of the first maximal `n = 16` left-right-left triple in
    /// lexicographic order, found by [`search_maximal`] and frozen here.
    pub const XORSHIFT16_TRIPLE: [usize; 3] = [1, 1, 14];

    pub fn xorshift16() -> F2GeneratorSpec {
        let shifts = ShiftTemplate::LeftRightLeft.shifts(&XORSHIFT16_TRIPLE);
        F2GeneratorSpec::xorshift(16, 16, &shifts, "xorshift16").expect("valid preset")
    }

    /// The `n = 16` left-right-left triple with the largest `W` (47, with
    /// `Delta = 1`); unlike the first hit it is `(2, 8)`-equidistributed.
    pub const XORSHIFT16_BEST_TRIPLE: [usize; 3] = [7, 15, 1];

    pub fn xorshift16_best() -> F2GeneratorSpec {
        let shifts = ShiftTemplate::LeftRightLeft.shifts(&XORSHIFT16_BEST_TRIPLE);
        F2GeneratorSpec::xorshift(16, 16, &shifts, "xorshift16-best").expect("valid preset")
    }

    /// `A = I_n`: a constant sequence.
    pub fn identity(n: usize, w: usize) -> F2GeneratorSpec {
        F2GeneratorSpec::new(
            n,
            w,
            Transition::Dense(BitMatrix::identity(n)),
            OutputMap::Leading,
            format!("identity{n}"),
        )
        .expect("valid preset")
    }

    /// Companion matrix of `q` with the leading-`w` projection.
    pub fn companion(q: &F2Poly, w: usize) -> Result<F2GeneratorSpec, GenlinError> {
        let c = BitMatrix::companion(q)?;
        F2GeneratorSpec::new(c.rows(), w, Transition::Dense(c), OutputMap::Leading, format!("companion-{}", q.to_hex()))
    }

    /// Companion matrix of `x^2 + x + 1`, `w = 2`.
    pub fn companion2() -> F2GeneratorSpec {
        companion(&F2Poly::from_exponents(&[2, 1, 0]), 2).expect("valid preset")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(s: &str) -> BitVector {
        BitVector::from_bits(s.bytes().map(|b| b == b'1'))
    }

    #[test]
    fn identity_step_keeps_state() {
        let spec = presets::identity(5, 3);
        let mut st = GeneratorState::new(bits("10110"));
        let v = spec.step(&mut st);
        assert_eq!(st.u, bits("10110"));
        assert_eq!(v, bits("101"));
    }

    #[test]
    fn companion_cycles_through_nonzero_states() {
        let spec = presets::companion2();
        let mut st = GeneratorState::new(bits("10"));
        let mut seen = vec![st.u.clone()];
        for _ in 0..3 {
            spec.step(&mut st);
            seen.push(st.u.clone());
        }
        // C e0 = e1, C e1 = e0 + e1
        assert_eq!(seen, vec![bits("10"), bits("01"), bits("11"), bits("10")]);
    }

    #[test]
    fn output_real_examples() {
        assert_eq!(output_real(&bits("1000")), 0.5);
        assert_eq!(output_real(&bits("0000")), 0.0);
        assert_eq!(output_real(&bits("11")), 0.75);
        assert!(output_real(&BitVector::from_bits(std::iter::repeat_n(true, 64))) < 1.0);
    }

    #[test]
    fn cycle_length_examples() {
        let spec = presets::companion2();
        for seed in ["10", "01", "11"] {
            assert_eq!(cycle_length(&spec, &bits(seed), 100).unwrap(), CycleLength::Exact(3));
        }
        let id = presets::identity(4, 4);
        assert_eq!(cycle_length(&id, &bits("0100"), 10).unwrap(), CycleLength::Exact(1));
        assert_eq!(
            cycle_length(&spec, &bits("10"), 2).unwrap(),
            CycleLength::ExceedsCap(2)
        );
        assert!(cycle_length(&spec, &bits("00"), 2).is_err());
    }

    #[test]
    fn invalid_specs_rejected() {
        let a = Transition::Dense(BitMatrix::identity(3));
        assert!(F2GeneratorSpec::new(3, 4, a.clone(), OutputMap::Leading, "").is_err());
        assert!(F2GeneratorSpec::new(3, 0, a.clone(), OutputMap::Leading, "").is_err());
        assert!(F2GeneratorSpec::new(3, 2, a.clone(), OutputMap::Dense(BitMatrix::zeros(2, 3)), "").is_err());
        assert!(F2GeneratorSpec::new(3, 2, a, OutputMap::Dense(BitMatrix::zeros(3, 3)), "").is_err());
        assert!(F2GeneratorSpec::xorshift(8, 8, &[XorShift::left(0)], "").is_err());
        assert!(F2GeneratorSpec::new(4, 2, Transition::Dense(BitMatrix::identity(3)), OutputMap::Leading, "").is_err());
    }

    #[test]
    fn counter_sequence_examples() {
        assert_eq!(counter_sequence(3, 0), bits("000"));
        assert_eq!(counter_sequence(3, 5), bits("101"));
        assert_eq!(counter_sequence(3, 13), bits("101"));
        assert_eq!(output_real(&counter_sequence(3, 5)), 5.0 / 8.0);
    }

    #[test]
    fn search_small_n() {
        let two = search_maximal(2, ShiftTemplate::LeftRight, 100).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].period, 3);
        assert_eq!(two[0].tag, PERIOD_VERIFIED_BY_EXHAUSTION);
        // its transition realizes x^2 + x + 1
        let p = min_poly(two[0].spec.transition_matrix(), 4).unwrap();
        assert_eq!(p, F2Poly::from_exponents(&[2, 1, 0]));

        let one = search_maximal(1, ShiftTemplate::LeftRightLeft, 10).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].spec.transition_matrix(), &BitMatrix::identity(1));
        assert_eq!(one[0].period, 1);

        assert!(search_maximal(25, ShiftTemplate::LeftRightLeft, 1).is_err());
    }

    #[test]
    fn frozen_xorshift16_is_first_hit() {
        let hits = search_maximal(16, ShiftTemplate::LeftRightLeft, 16 * 16 * 16).unwrap();
        assert!(!hits.is_empty());
        assert_eq!(hits[0].amounts, presets::XORSHIFT16_TRIPLE);
        let spec = presets::xorshift16();
        assert_eq!(
            cycle_length(&spec, &spec.default_seed(), 1 << 20).unwrap(),
            CycleLength::Exact(65535)
        );
    }

    #[test]
    fn certificates() {
        let c = certify_period(&presets::xorshift16(), None).unwrap();
        assert_eq!(c, PeriodCertificate::Exhaustion { period: 65535 });
        assert!(!certify_period(&presets::identity(4, 4), None).unwrap().is_maximal());

        // x^31 + x^3 + 1 is primitive: certified via min_poly and the table
        let p = F2Poly::from_exponents(&[31, 3, 0]);
        let spec = presets::companion(&p, 8).unwrap();
        assert_eq!(
            certify_period(&spec, None).unwrap(),
            PeriodCertificate::Primitive { min_poly: p }
        );
        // x^30 + x^15 + 1 = (x^15 + 1)^2 ... reducible
        let q = F2Poly::from_exponents(&[30, 0]);
        let spec = presets::companion(&q, 8).unwrap();
        assert!(matches!(
            certify_period(&spec, None).unwrap(),
            PeriodCertificate::NotMaximal { .. }
        ));
        let big = presets::identity(70, 4);
        assert!(matches!(
            certify_period(&big, None).unwrap(),
            PeriodCertificate::Uncertified { .. }
        ));
    }
}
