use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::vector::{hex_to_words, highest_set_bit, words_to_hex};
use super::{BitMatrix, BitVector, Gf2Error};
use crate::factor_table::MERSENNE_FACTORS;

/// A polynomial over GF(2); bit `j` is the coefficient of `x^j`.
///
/// Stored without trailing zero words, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { words: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { words: vec![1] }
    }

    pub fn x() -> Self {
        F2Poly { words: vec![2] }
    }

    pub fn from_words(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        F2Poly { words }
    }

    /// `from_exponents(&[2, 1, 0])` is `x^2 + x + 1`. Repeated exponents cancel.
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = F2Poly::zero();
        for &e in exps {
            p.flip(e);
        }
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    pub fn from_hex(text: &str) -> Result<Self, Gf2Error> {
        Ok(Self::from_words(hex_to_words(text)?))
    }

    /// Hex of the coefficient bit string, constant term in the least
    /// significant bit: `x^2 + x + 1` is `"7"`.
    pub fn to_hex(&self) -> String {
        words_to_hex(&self.words)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        highest_set_bit(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn coeff(&self, j: usize) -> bool {
        self.words
            .get(j / 64)
            .is_some_and(|w| (w >> (j % 64)) & 1 == 1)
    }

    fn flip(&mut self, j: usize) {
        if self.words.len() <= j / 64 {
            self.words.resize(j / 64 + 1, 0);
        }
        self.words[j / 64] ^= 1 << (j % 64);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let n = self.words.len().max(other.words.len());
        let words = (0..n)
            .map(|i| self.words.get(i).unwrap_or(&0) ^ other.words.get(i).unwrap_or(&0))
            .collect();
        F2Poly::from_words(words)
    }

    fn shl_xor_into(acc: &mut Vec<u64>, src: &[u64], shift: usize) {
        let (ws, bs) = (shift / 64, shift % 64);
        let need = src.len() + ws + 1;
        if acc.len() < need {
            acc.resize(need, 0);
        }
        for (i, &w) in src.iter().enumerate() {
            acc[i + ws] ^= w << bs;
            if bs != 0 {
                acc[i + ws + 1] ^= w >> (64 - bs);
            }
        }
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        let mut acc = Vec::new();
        for (wi, &word) in other.words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let j = wi * 64 + bits.trailing_zeros() as usize;
                Self::shl_xor_into(&mut acc, &self.words, j);
                bits &= bits - 1;
            }
        }
        F2Poly::from_words(acc)
    }

    /// Quotient and remainder. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &F2Poly) -> (F2Poly, F2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.words.clone();
        let mut quo = vec![0u64; self.words.len()];
        while let Some(rd) = highest_set_bit(&rem) {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quo[shift / 64] |= 1 << (shift % 64);
            Self::shl_xor_into(&mut rem, &divisor.words, shift);
        }
        (F2Poly::from_words(quo), F2Poly::from_words(rem))
    }

    pub fn rem(&self, divisor: &F2Poly) -> F2Poly {
        self.div_rem(divisor).1
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm(&self, other: &F2Poly) -> F2Poly {
        if self.is_zero() || other.is_zero() {
            return F2Poly::zero();
        }
        let g = self.gcd(other);
        self.div_rem(&g).0.mul(other)
    }

    pub fn mul_mod(&self, other: &F2Poly, modulus: &F2Poly) -> F2Poly {
        self.mul(other).rem(modulus)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &F2Poly) -> F2Poly {
        let mut result = F2Poly::one().rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            result = result.mul_mod(&result, modulus);
            if e.bit(i) {
                result = result.mul_mod(&base, modulus);
            }
        }
        result
    }

    /// Evaluates the polynomial at a square matrix and reports whether the
    /// result is zero. Checks `p(A) e_j = 0` column by column with Horner's
    /// rule on vectors.
    pub fn annihilates(&self, a: &BitMatrix) -> Result<bool, Gf2Error> {
        if !a.is_square() {
            return Err(Gf2Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        if self.degree().is_none() {
            return Ok(true);
        }
        for j in 0..n {
            if !self.apply(a, &BitVector::unit(n, j))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p(A) v` by Horner's rule.
    pub fn apply(&self, a: &BitMatrix, v: &BitVector) -> Result<BitVector, Gf2Error> {
        let mut y = BitVector::zeros(a.rows());
        let Some(deg) = self.degree() else {
            return Ok(y);
        };
        for i in (0..=deg).rev() {
            y = a.mul_vec(&y)?;
            if self.coeff(i) {
                y.xor_assign(v);
            }
        }
        Ok(y)
    }

    /// Ben-Or irreducibility test: no factor of degree `i <= k/2` divides
    /// `x^(2^i) - x`.
    pub fn is_irreducible(&self) -> bool {
        let Some(k) = self.degree() else {
            return false;
        };
        if k == 0 {
            return false;
        }
        let x = F2Poly::x();
        let mut h = x.rem(self);
        for _ in 1..=k / 2 {
            h = h.mul_mod(&h, self);
            if !h.add(&x).gcd(self).is_one() {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for j in (0..=d).rev().filter(|&j| self.coeff(j)) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for F2Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl<'de> Deserialize<'de> for F2Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        F2Poly::from_hex(&s).map_err(serde::de::Error::custom)
    }
}

/// Berlekamp–Massey over GF(2). Returns the minimal polynomial of the
/// sequence in the annihilator orientation: `p(x) = x^L + c_1 x^(L-1) + ...
/// + c_L` where `s_i + c_1 s_{i-1} + ... + c_L s_{i-L} = 0` for `i >= L`.
pub fn berlekamp_massey(seq: &[bool]) -> F2Poly {
    // connection polynomial c(x) = 1 + c_1 x + ... as a bit vector
    let n = seq.len();
    let mut c = vec![false; n + 1];
    let mut b = vec![false; n + 1];
    c[0] = true;
    b[0] = true;
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..n {
        let mut disc = seq[i];
        for j in 1..=l {
            disc ^= c[j] & seq[i - j];
        }
        if !disc {
            m += 1;
            continue;
        }
        let t = c.clone();
        for j in 0..=n - m {
            if b[j] {
                c[j + m] ^= true;
            }
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = t;
            m = 1;
        } else {
            m += 1;
        }
    }
    let exps: Vec<usize> = (0..=l).filter(|&j| c[j]).map(|j| l - j).collect();
    F2Poly::from_exponents(&exps)
}

/// Fixed-seed splitmix64 stream used for reproducible probes.
#[derive(Clone, Debug)]
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub(crate) fn bit_vector(&mut self, len: usize) -> BitVector {
        let words = (0..len.div_ceil(64)).map(|_| self.next_u64()).collect();
        BitVector::from_words(len, words)
    }
}

pub const DEFAULT_PROBES: usize = 4;
const PROBE_SEED: u64 = 0x5eed_0ff2_u64;

/// Minimal polynomial of a square matrix.
///
/// Each of `trials` probe vectors `b` gets its exact minimal polynomial
/// from Berlekamp–Massey on projections `c^T A^i b`: a recovered factor `g`
/// divides the true one, so the search continues on `g(A) b` until that
/// vanishes. The lcm over probes is then completed column by column: if
/// `p(A) e_j = r != 0`, multiplying `p` by the minimal polynomial of `r`
/// gives `lcm(p, m_{e_j})`. On return `p(A) e_j = 0` for every `j`.
pub fn min_poly(a: &BitMatrix, trials: usize) -> Result<F2Poly, Gf2Error> {
    if !a.is_square() {
        return Err(Gf2Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    if n == 0 {
        return Err(Gf2Error::DimensionMismatch(
            "minimal polynomial of a 0x0 matrix".into(),
        ));
    }
    let mut probe = Prober {
        a,
        rng: SplitMix64::new(PROBE_SEED),
        misses_left: trials.max(1) * 16,
        trials,
    };
    let mut acc = F2Poly::one();
    for _ in 0..trials {
        let b = probe.rng.bit_vector(n);
        let mb = probe.vector_min_poly(&b)?;
        acc = acc.lcm(&mb);
        if acc.degree() == Some(n) {
            // every factor divides m_A and deg m_A <= n
            return Ok(acc);
        }
    }
    for j in 0..n {
        let r = acc.apply(a, &BitVector::unit(n, j))?;
        if !r.is_zero() {
            acc = acc.mul(&probe.vector_min_poly(&r)?);
            if acc.degree() == Some(n) {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

struct Prober<'a> {
    a: &'a BitMatrix,
    rng: SplitMix64,
    /// Projections allowed to come back trivial before giving up.
    misses_left: usize,
    trials: usize,
}

impl Prober<'_> {
    /// Exact minimal polynomial of the sequence `A^i v`.
    fn vector_min_poly(&mut self, v: &BitVector) -> Result<F2Poly, Gf2Error> {
        let n = self.a.rows();
        let mut f = F2Poly::one();
        let mut cur = v.clone();
        while !cur.is_zero() {
            let room = n - f.degree().unwrap_or(0);
            let c = self.rng.bit_vector(n);
            let mut x = cur.clone();
            let mut seq = Vec::with_capacity(2 * room);
            for _ in 0..2 * room {
                seq.push(c.dot(&x));
                x = self.a.mul_vec(&x)?;
            }
            let g = berlekamp_massey(&seq);
            if g.degree().unwrap_or(0) == 0 {
                if self.misses_left == 0 {
                    return Err(Gf2Error::ProbeFailure { trials: self.trials });
                }
                self.misses_left -= 1;
                continue;
            }
            cur = g.apply(self.a, &cur)?;
            f = f.mul(&g);
        }
        Ok(f)
    }
}

/// Multiplicative order of `x` modulo an irreducible polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyOrder {
    #[serde(with = "biguint_dec")]
    pub order: BigUint,
    pub primitive: bool,
}

pub(crate) mod biguint_dec {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        BigUint::parse_bytes(s.as_bytes(), 10)
            .ok_or_else(|| serde::de::Error::custom(format!("bad integer {s:?}")))
    }
}

/// Embedded factorization of `2^k - 1`, available for `1 <= k <= 64`.
pub fn mersenne_factors(k: usize) -> Option<Vec<(BigUint, u32)>> {
    if k == 0 || k > MERSENNE_FACTORS.len() {
        return None;
    }
    Some(
        MERSENNE_FACTORS[k - 1]
            .iter()
            .map(|&(p, e)| (BigUint::from(p), e))
            .collect(),
    )
}

/// Order of `x` modulo `p` and whether `p` is primitive, given the prime
/// factorization of `2^deg(p) - 1`.
pub fn poly_order(p: &F2Poly, factorization: &[(BigUint, u32)]) -> Result<PolyOrder, Gf2Error> {
    let k = p.degree().ok_or(Gf2Error::ZeroPolynomial)?;
    if k == 0 {
        return Err(Gf2Error::Reducible(p.to_hex()));
    }
    if !p.is_irreducible() {
        return Err(Gf2Error::Reducible(p.to_hex()));
    }
    if !p.coeff(0) {
        // p = x: x is not a unit modulo p
        return Err(Gf2Error::Reducible(p.to_hex()));
    }
    let group = (BigUint::one() << k) - BigUint::one();
    let mut product = BigUint::one();
    for (q, e) in factorization {
        if !is_probable_prime(q) {
            return Err(Gf2Error::BadFactorization(format!("{q} is not prime")));
        }
        product *= q.pow(*e);
    }
    if product != group {
        return Err(Gf2Error::BadFactorization(format!(
            "factors multiply to {product}, expected 2^{k} - 1 = {group}"
        )));
    }
    let x = F2Poly::x();
    let one = F2Poly::one();
    let primitive = factorization
        .iter()
        .all(|(q, _)| !x.pow_mod(&(&group / q), p).eq(&one));
    let mut order = group.clone();
    for (q, _) in factorization {
        while order.is_multiple_of(q) && x.pow_mod(&(&order / q), p) == one {
            order /= q;
        }
    }
    debug_assert_eq!(primitive, order == group);
    Ok(PolyOrder { order, primitive })
}

/// Miller–Rabin. Deterministic below 3.3e24 with the first 13 prime bases;
/// a strong probable-prime test above that.
pub(crate) fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &b in &BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n1 = n - BigUint::one();
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for &b in &BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn hex_format() {
        let p = F2Poly::from_exponents(&[2, 1, 0]);
        assert_eq!(p.to_hex(), "7");
        assert_eq!(F2Poly::from_hex("7").unwrap(), p);
        assert_eq!(p.to_string(), "x^2 + x + 1");
        assert_eq!(F2Poly::zero().degree(), None);
        assert_eq!(F2Poly::one().degree(), Some(0));
    }

    #[test]
    fn division_identity() {
        let a = F2Poly::from_u64(0b1011_0111_0101);
        let b = F2Poly::from_u64(0b1101);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 3);
    }

    #[test]
    fn gcd_and_lcm() {
        let f = F2Poly::from_exponents(&[2, 1, 0]);
        let g = F2Poly::from_exponents(&[1, 0]);
        let fg = f.mul(&g);
        assert_eq!(fg.gcd(&f), f);
        assert_eq!(fg.lcm(&f), fg);
        assert_eq!(f.lcm(&g), fg);
    }

    #[test]
    fn berlekamp_massey_recovers_lfsr() {
        // s_{i+3} = s_{i+1} + s_i  <->  x^3 + x + 1
        let mut s = vec![true, false, false];
        for i in 0..20 {
            let next = s[i + 1] ^ s[i];
            s.push(next);
        }
        assert_eq!(berlekamp_massey(&s), F2Poly::from_exponents(&[3, 1, 0]));
        assert!(berlekamp_massey(&[false; 8]).is_one());
    }

    #[test]
    fn min_poly_examples() {
        assert_eq!(
            min_poly(&BitMatrix::identity(2), DEFAULT_PROBES).unwrap(),
            F2Poly::from_exponents(&[1, 0])
        );
        let q = F2Poly::from_exponents(&[2, 1, 0]);
        let c = BitMatrix::companion(&q).unwrap();
        assert_eq!(min_poly(&c, DEFAULT_PROBES).unwrap(), q);
        let block = BitMatrix::block_diagonal(&[c.clone(), c]);
        let p = min_poly(&block, DEFAULT_PROBES).unwrap();
        assert_eq!(p, q);
        // no degree-1 annihilator: neither x nor x+1 kills the block matrix
        assert!(!F2Poly::x().annihilates(&block).unwrap());
        assert!(!F2Poly::from_exponents(&[1, 0]).annihilates(&block).unwrap());
        assert!(q.annihilates(&block).unwrap());
    }

    #[test]
    fn min_poly_rejects_non_square() {
        assert!(min_poly(&BitMatrix::zeros(2, 3), 4).is_err());
    }

    #[test]
    fn column_completion_without_probes() {
        let p = min_poly(&BitMatrix::identity(3), 0).unwrap();
        assert_eq!(p, F2Poly::from_exponents(&[0, 1]));
        let nil = BitMatrix::companion(&F2Poly::from_exponents(&[5])).unwrap();
        assert_eq!(min_poly(&nil, 0).unwrap(), F2Poly::from_exponents(&[5]));
    }

    #[test]
    fn poly_order_examples() {
        let r = poly_order(&F2Poly::from_exponents(&[2, 1, 0]), &[(big(3), 1)]).unwrap();
        assert_eq!(r, PolyOrder { order: big(3), primitive: true });
        let r = poly_order(
            &F2Poly::from_exponents(&[4, 3, 2, 1, 0]),
            &[(big(3), 1), (big(5), 1)],
        )
        .unwrap();
        assert_eq!(r, PolyOrder { order: big(5), primitive: false });
        let r = poly_order(&F2Poly::from_exponents(&[1, 0]), &[]).unwrap();
        assert_eq!(r, PolyOrder { order: big(1), primitive: true });
    }

    #[test]
    fn poly_order_errors() {
        assert!(matches!(
            poly_order(&F2Poly::zero(), &[]),
            Err(Gf2Error::ZeroPolynomial)
        ));
        // (x+1)^2 = x^2 + 1
        assert!(matches!(
            poly_order(&F2Poly::from_exponents(&[2, 0]), &[(big(3), 1)]),
            Err(Gf2Error::Reducible(_))
        ));
        assert!(matches!(
            poly_order(&F2Poly::from_exponents(&[2, 1, 0]), &[(big(5), 1)]),
            Err(Gf2Error::BadFactorization(_))
        ));
        // 15 = 15^1 multiplies out but 15 is not prime
        assert!(matches!(
            poly_order(&F2Poly::from_exponents(&[4, 1, 0]), &[(big(15), 1)]),
            Err(Gf2Error::BadFactorization(_))
        ));
    }

    #[test]
    fn embedded_table_multiplies_out() {
        for k in 1..=64 {
            let f = mersenne_factors(k).unwrap();
            let prod = f.iter().fold(BigUint::one(), |acc, (p, e)| {
                assert!(is_probable_prime(p), "k = {k}: {p}");
                acc * p.pow(*e)
            });
            assert_eq!(prod, (BigUint::one() << k) - BigUint::one(), "k = {k}");
        }
        assert!(mersenne_factors(65).is_none());
    }

    #[test]
    fn known_primitive_trinomials() {
        // x^31 + x^3 + 1 and x^63 + x + 1 are primitive
        for exps in [[31usize, 3, 0], [63, 1, 0]] {
            let p = F2Poly::from_exponents(&exps);
            let f = mersenne_factors(exps[0]).unwrap();
            assert!(poly_order(&p, &f).unwrap().primitive, "{p}");
        }
    }

    #[test]
    fn irreducibility_matches_exhaustive_search() {
        for bits in 2u64..(1 << 9) {
            let p = F2Poly::from_u64(bits);
            let d = p.degree().unwrap();
            let has_factor = (2u64..bits).any(|q| {
                let qp = F2Poly::from_u64(q);
                let qd = qp.degree().unwrap();
                qd >= 1 && qd < d && p.rem(&qp).is_zero()
            });
            assert_eq!(p.is_irreducible(), d >= 1 && !has_factor, "{p}");
        }
    }
}
