//! Output streams read as fixed-point numbers in `[0, 1)`.

use crate::genlin::{F2GeneratorSpec, GeneratorState};
use crate::gf2::BitVector;
use crate::lcg::LcgSpec;

/// A generator whose outputs can be read to a given number of binary digits.
pub trait OutputSource {
    /// Most binary digits available per output.
    fn max_bits(&self) -> u32;

    /// Next output truncated to its first `w` binary digits, as an integer
    /// in `0 .. 2^w`.
    fn next_bits(&mut self, w: u32) -> u64;
}

/// An F₂-linear generator stream. Uses the single-word kernel when `n <= 64`.
#[derive(Clone, Debug)]
pub struct F2Stream<'a> {
    spec: &'a F2GeneratorSpec,
    word: u64,
    state: GeneratorState,
}

impl<'a> F2Stream<'a> {
    pub fn new(spec: &'a F2GeneratorSpec, seed: &BitVector) -> Self {
        assert_eq!(seed.len(), spec.n(), "seed length does not match generator");
        let word = if spec.has_word_path() { seed.to_u64_msb_first() } else { 0 };
        F2Stream { spec, word, state: GeneratorState::new(seed.clone()) }
    }
}

impl OutputSource for F2Stream<'_> {
    fn max_bits(&self) -> u32 {
        self.spec.w().min(64) as u32
    }

    #[inline]
    fn next_bits(&mut self, w: u32) -> u64 {
        debug_assert!(w <= self.max_bits());
        let full = self.spec.w() as u32;
        if self.spec.has_word_path() {
            self.word = self.spec.word_step(self.word);
            self.spec.word_output(self.word) >> (full - w)
        } else {
            let v = self.spec.step(&mut self.state);
            v.leading_u64(w as usize)
        }
    }
}

/// An LCG stream starting with the output after `z0`.
#[derive(Clone, Debug)]
pub struct LcgStream {
    spec: LcgSpec,
    z: u128,
}

impl LcgStream {
    pub fn new(spec: LcgSpec) -> Self {
        LcgStream { spec, z: spec.z0 }
    }
}

impl OutputSource for LcgStream {
    fn max_bits(&self) -> u32 {
        63
    }

    #[inline]
    fn next_bits(&mut self, w: u32) -> u64 {
        self.z = self.spec.next(self.z);
        self.spec.leading_bits(self.z, w)
    }
}

/// `y_j = j mod 2^n` read as `j 2^-n`, starting at `j = 0`.
#[derive(Clone, Debug)]
pub struct CounterStream {
    n: u32,
    j: u64,
}

impl CounterStream {
    pub fn new(n: u32) -> Self {
        assert!((1..=63).contains(&n), "counter width must be in 1..=63");
        CounterStream { n, j: 0 }
    }
}

impl OutputSource for CounterStream {
    fn max_bits(&self) -> u32 {
        self.n
    }

    #[inline]
    fn next_bits(&mut self, w: u32) -> u64 {
        let y = self.j & ((1u64 << self.n) - 1);
        self.j = self.j.wrapping_add(1);
        y >> (self.n - w)
    }
}
