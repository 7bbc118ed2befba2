use std::fmt;

use super::Gf2Error;

/// A fixed-length vector over GF(2), packed 64 coordinates per word.
///
/// Coordinate `i` lives in bit `i % 64` of word `i / 64`. Bits past `len`
/// are always zero, so derived equality is bitwise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

pub(crate) fn tail_mask(bits: usize) -> u64 {
    match bits % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if b {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        BitVector { len, words }
    }

    /// Builds a vector from raw words, clearing anything past `len`.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = BitVector { len, words };
        v.clear_tail();
        v
    }

    /// Reads the low `len` bits of `value` with coordinate 0 as the most
    /// significant of them.
    pub fn from_u64_msb_first(len: usize, value: u64) -> Self {
        assert!(len <= 64, "from_u64_msb_first needs len <= 64");
        Self::from_bits((0..len).map(|i| (value >> (len - 1 - i)) & 1 == 1))
    }

    /// Inverse of [`BitVector::from_u64_msb_first`]. Coordinate 0 is the
    /// most significant bit of the result.
    pub fn to_u64_msb_first(&self) -> u64 {
        assert!(self.len <= 64, "to_u64_msb_first needs len <= 64");
        let mut out = 0u64;
        for i in 0..self.len {
            out = (out << 1) | self.get(i) as u64;
        }
        out
    }

    /// Value of the first `count` coordinates read MSB-first.
    pub fn leading_u64(&self, count: usize) -> u64 {
        assert!(count <= 64 && count <= self.len);
        let mut out = 0u64;
        for i in 0..count {
            out = (out << 1) | self.get(i) as u64;
        }
        out
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        (self.words[index / 64] >> (index % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % 64);
        if value {
            self.words[index / 64] |= mask;
        } else {
            self.words[index / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        dot_words(&self.words, &other.words)
    }

    /// The first `count` coordinates.
    pub fn truncated(&self, count: usize) -> BitVector {
        assert!(count <= self.len);
        BitVector::from_words(count, self.words[..words_for(count)].to_vec())
    }

    /// Shift toward the leading coordinate: coordinate `i` takes the old
    /// coordinate `i + k`, vacated trailing coordinates become zero.
    ///
    /// Reading the vector as an integer with coordinate 0 most significant,
    /// this is `value << k` truncated to `len` bits.
    pub fn shifted_toward_lead(&self, k: usize) -> BitVector {
        let mut out = BitVector::zeros(self.len);
        if k >= self.len {
            return out;
        }
        let (ws, bs) = (k / 64, k % 64);
        let n = self.words.len();
        for i in 0..n {
            let lo = self.words.get(i + ws).copied().unwrap_or(0);
            let hi = self.words.get(i + ws + 1).copied().unwrap_or(0);
            out.words[i] = if bs == 0 { lo } else { (lo >> bs) | (hi << (64 - bs)) };
        }
        out.clear_tail();
        out
    }

    /// Shift toward the trailing coordinate: coordinate `i` takes the old
    /// coordinate `i - k`, vacated leading coordinates become zero.
    pub fn shifted_toward_tail(&self, k: usize) -> BitVector {
        let mut out = BitVector::zeros(self.len);
        if k >= self.len {
            return out;
        }
        let (ws, bs) = (k / 64, k % 64);
        let n = self.words.len();
        for i in ws..n {
            let lo = self.words[i - ws];
            let below = if i > ws { self.words[i - ws - 1] } else { 0 };
            out.words[i] = if bs == 0 { lo } else { (lo << bs) | (below >> (64 - bs)) };
        }
        out.clear_tail();
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Hex with coordinate 0 in the least significant bit, most significant
    /// digit first. The zero vector is `"0"`.
    pub fn to_hex(&self) -> String {
        words_to_hex(&self.words)
    }

    pub fn from_hex(len: usize, text: &str) -> Result<Self, Gf2Error> {
        let words = hex_to_words(text)?;
        let highest = highest_set_bit(&words);
        if let Some(h) = highest {
            if h >= len {
                return Err(Gf2Error::InvalidHex(format!(
                    "{text:?} has bit {h} set but the vector has only {len} coordinates"
                )));
            }
        }
        Ok(BitVector::from_words(len, words))
    }

    fn clear_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= tail_mask(self.len);
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[")?;
        for b in self.iter() {
            write!(f, "{}", b as u8)?;
        }
        write!(f, "]")
    }
}

#[inline]
pub(crate) fn dot_words(a: &[u64], b: &[u64]) -> bool {
    let mut acc = 0u64;
    for (x, y) in a.iter().zip(b) {
        acc ^= x & y;
    }
    acc.count_ones() & 1 == 1
}

pub(crate) fn highest_set_bit(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

pub(crate) fn words_to_hex(words: &[u64]) -> String {
    let Some(top) = words.iter().rposition(|&w| w != 0) else {
        return "0".to_string();
    };
    let mut s = format!("{:x}", words[top]);
    for w in words[..top].iter().rev() {
        s.push_str(&format!("{w:016x}"));
    }
    s
}

pub(crate) fn hex_to_words(text: &str) -> Result<Vec<u64>, Gf2Error> {
    let t = text.trim();
    let t = t
        .strip_prefix("0x")
        .or_else(|| t.strip_prefix("0X"))
        .unwrap_or(t);
    if t.is_empty() {
        return Err(Gf2Error::InvalidHex(format!("{text:?} is empty")));
    }
    let mut words = vec![0u64; t.len().div_ceil(16)];
    for (pos, c) in t.chars().rev().enumerate() {
        let digit = c
            .to_digit(16)
            .ok_or_else(|| Gf2Error::InvalidHex(format!("{text:?} contains {c:?}")))?
            as u64;
        words[pos / 16] |= digit << (4 * (pos % 16));
    }
    Ok(words)
}
