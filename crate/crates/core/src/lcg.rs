//! Linear congruential generators `z_{n+1} = a z_n + b mod m`, `x_n = z_n / m`,
//! and the lattice structure of their output tuples.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LcgError {
    #[error("invalid LCG: {0}")]
    InvalidSpec(String),
    #[error("RANDU needs an odd seed, got {0}")]
    EvenSeed(u64),
    #[error("plane index {value} at triple {index} is not an integer (tolerance 2^-20); wrong normal or generator")]
    NonIntegralPlane { index: u64, value: f64 },
    #[error("normal vector must be nonzero")]
    ZeroNormal,
    #[error("spectral search supports d = 2 or 3, got {0}")]
    UnsupportedDimension(usize),
    #[error("coefficient bound {bound} too large for d = {d} (max {max})")]
    BoundTooLarge { d: usize, bound: u32, max: u32 },
    #[error("seed does not recur within {0} steps")]
    NoCycle(u128),
}

pub const RANDU_MULTIPLIER: u128 = 65_539;
pub const RANDU_MODULUS: u128 = 1 << 31;
/// Period of RANDU from any odd seed, verified by full cycle detection.
pub const RANDU_PERIOD: u64 = 1 << 29;
/// Normal of the RANDU planes, from `z_{n+2} - 6 z_{n+1} + 9 z_n = 0 mod 2^31`.
pub const RANDU_NORMAL: [i64; 3] = [9, -6, 1];
pub const PLANE_TOLERANCE: f64 = 1.0 / (1u64 << 20) as f64;

/// `(a, b, m, z0)` with `m <= 2^64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LcgSpec {
    pub a: u128,
    pub b: u128,
    pub m: u128,
    pub z0: u128,
}

impl LcgSpec {
    pub fn new(a: u128, b: u128, m: u128, z0: u128) -> Result<Self, LcgError> {
        if !(2..=1u128 << 64).contains(&m) {
            return Err(LcgError::InvalidSpec(format!("modulus {m} outside [2, 2^64]")));
        }
        for (name, v) in [("a", a), ("b", b), ("z0", z0)] {
            if v >= m {
                return Err(LcgError::InvalidSpec(format!("{name} = {v} must be below m = {m}")));
            }
        }
        Ok(LcgSpec { a, b, m, z0 })
    }

    pub fn randu(z0: u64) -> Result<Self, LcgError> {
        if z0 as u128 >= RANDU_MODULUS {
            return Err(LcgError::InvalidSpec(format!("RANDU seed {z0} must be below 2^31")));
        }
        if z0.is_multiple_of(2) {
            return Err(LcgError::EvenSeed(z0));
        }
        Ok(LcgSpec { a: RANDU_MULTIPLIER, b: 0, m: RANDU_MODULUS, z0: z0 as u128 })
    }

    #[inline]
    pub fn next(&self, z: u128) -> u128 {
        // a, z < 2^64 so the product fits
        (self.a * z + self.b) % self.m
    }

    pub fn real(&self, z: u128) -> f64 {
        z as f64 / self.m as f64
    }

    /// First `w` binary digits of `z / m`, i.e. `floor(z 2^w / m)`.
    #[inline]
    pub fn leading_bits(&self, z: u128, w: u32) -> u64 {
        debug_assert!(w <= 63);
        ((z << w) / self.m) as u64
    }

    pub fn is_power_of_two_modulus(&self) -> bool {
        self.m.is_power_of_two()
    }
}

/// One step: `z' = (a z + b) mod m` and `x = z' / m`.
pub fn lcg_step(spec: &LcgSpec, z: u128) -> (u128, f64) {
    let next = spec.next(z);
    (next, spec.real(next))
}

/// Iterator over `z_0, z_1, ...`.
#[derive(Clone, Debug)]
pub struct LcgStates {
    spec: LcgSpec,
    z: u128,
    started: bool,
}

impl LcgStates {
    pub fn new(spec: LcgSpec) -> Self {
        LcgStates { spec, z: spec.z0, started: false }
    }
}

impl Iterator for LcgStates {
    type Item = u128;

    fn next(&mut self) -> Option<u128> {
        if self.started {
            self.z = self.spec.next(self.z);
        }
        self.started = true;
        Some(self.z)
    }
}

/// Runs RANDU for `steps` values from `z0` and counts windows where
/// `z_{n+2} - 6 z_{n+1} + 9 z_n` is nonzero modulo `2^31`.
pub fn randu_recurrence_check(z0: u64, steps: u64) -> Result<u64, LcgError> {
    let spec = LcgSpec::randu(z0)?;
    let m = RANDU_MODULUS as i128;
    let mut violations = 0;
    let mut it = LcgStates::new(spec);
    let (mut z0, mut z1) = match (it.next(), it.next()) {
        (Some(a), Some(b)) => (a as i128, b as i128),
        _ => unreachable!(),
    };
    for z2 in it.take(steps.saturating_sub(2) as usize) {
        let z2 = z2 as i128;
        if (z2 - 6 * z1 + 9 * z0).rem_euclid(m) != 0 {
            violations += 1;
        }
        z0 = z1;
        z1 = z2;
    }
    Ok(violations)
}

fn plane_index(normal: &[i64; 3], x: [f64; 3], index: u64) -> Result<i64, LcgError> {
    let c = normal[0] as f64 * x[0] + normal[1] as f64 * x[1] + normal[2] as f64 * x[2];
    let r = c.round();
    if (c - r).abs() > PLANE_TOLERANCE {
        return Err(LcgError::NonIntegralPlane { index, value: c });
    }
    Ok(r as i64)
}

/// Distinct plane indices `c = n·(x_j, x_{j+1}, x_{j+2})` over the
/// overlapping triples of the first `samples` outputs `x_0 .. x_{samples-1}`.
pub fn plane_count(spec: &LcgSpec, normal: [i64; 3], samples: u64) -> Result<BTreeSet<i64>, LcgError> {
    if normal == [0, 0, 0] {
        return Err(LcgError::ZeroNormal);
    }
    let mut planes = BTreeSet::new();
    let mut window = [0.0; 3];
    for (k, z) in LcgStates::new(*spec).take(samples as usize).enumerate() {
        window = [window[1], window[2], spec.real(z)];
        if k >= 2 {
            planes.insert(plane_index(&normal, window, k as u64 - 2)?);
        }
    }
    Ok(planes)
}

/// Visits every cyclic window of length `d` over one full period of the
/// orbit of `z0`: windows start at `0 .. P` and wrap around. Returns `P`.
pub fn for_each_cyclic_window<F: FnMut(&[u128])>(
    spec: &LcgSpec,
    d: usize,
    cap: u128,
    mut f: F,
) -> Result<u64, LcgError> {
    assert!(d >= 1);
    let mut ring: Vec<u128> = Vec::with_capacity(d);
    let mut period: Option<u64> = None;
    let mut z = spec.z0;
    let mut k: u64 = 0;
    loop {
        if ring.len() == d {
            ring.remove(0);
        }
        ring.push(z);
        if ring.len() == d {
            f(&ring);
            let start = k + 1 - d as u64;
            if period.is_some_and(|p| start + 1 == p) {
                break;
            }
        }
        z = spec.next(z);
        k += 1;
        if period.is_none() {
            if z == spec.z0 {
                period = Some(k);
                if d == 1 {
                    break;
                }
            } else if k as u128 > cap {
                return Err(LcgError::NoCycle(cap));
            }
        }
    }
    Ok(period.expect("loop exits only once the period is known"))
}

/// Plane indices over every cyclic triple of the full period of `z0`.
pub fn plane_count_full_period(spec: &LcgSpec, normal: [i64; 3]) -> Result<(BTreeSet<i64>, u64), LcgError> {
    if normal == [0, 0, 0] {
        return Err(LcgError::ZeroNormal);
    }
    // indices are small, so collect them in a bitmap rather than a set
    let bound: i64 = normal.iter().map(|c| c.abs()).sum::<i64>() + 1;
    let mut seen = vec![false; (2 * bound + 1) as usize];
    let mut err = None;
    let mut index = 0u64;
    let period = for_each_cyclic_window(spec, 3, spec.m, |w| {
        if err.is_some() {
            return;
        }
        let x = [spec.real(w[0]), spec.real(w[1]), spec.real(w[2])];
        match plane_index(&normal, x, index) {
            Ok(c) => seen[(c + bound) as usize] = true,
            Err(e) => err = Some(e),
        }
        index += 1;
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    let planes = seen
        .iter()
        .enumerate()
        .filter(|(_, &s)| s)
        .map(|(i, _)| i as i64 - bound)
        .collect();
    Ok((planes, period))
}

/// Length of the cycle through `z0`, by direct iteration up to `cap` steps.
pub fn lcg_period(spec: &LcgSpec, cap: u128) -> Result<u64, LcgError> {
    let mut z = spec.z0;
    let mut t: u128 = 0;
    loop {
        z = spec.next(z);
        t += 1;
        if z == spec.z0 {
            return Ok(t as u64);
        }
        if t >= cap {
            return Err(LcgError::NoCycle(cap));
        }
    }
}

/// Distance `1 / |normal|` between adjacent parallel planes.
pub fn plane_spacing(normal: &[i64]) -> Result<f64, LcgError> {
    let sq: i128 = normal.iter().map(|&c| c as i128 * c as i128).sum();
    if sq == 0 {
        return Err(LcgError::ZeroNormal);
    }
    Ok(1.0 / (sq as f64).sqrt())
}

/// A nonzero integer vector with its exact squared norm.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVector {
    pub q: Vec<i64>,
    pub norm_sq: u64,
}

impl LatticeVector {
    pub fn new(q: Vec<i64>) -> Self {
        let norm_sq = q.iter().map(|&c| (c * c) as u64).sum();
        LatticeVector { q, norm_sq }
    }

    pub fn norm(&self) -> f64 {
        (self.norm_sq as f64).sqrt()
    }

    pub fn spacing(&self) -> f64 {
        1.0 / self.norm()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SpectralResult {
    Found { vector: LatticeVector },
    BoundTooSmall { bound: u32 },
}

pub const SPECTRAL_MAX_BOUND_D2: u32 = 1 << 14;
pub const SPECTRAL_MAX_BOUND_D3: u32 = 64;

/// Shortest nonzero `q` with `|q_i| <= bound` and
/// `q_1 + q_2 a + ... + q_d a^(d-1) = 0 mod m`, by exhaustive search.
///
/// Among equally short vectors the one with the lexicographically smallest
/// `(|q_1|, |q_2|, ...)` wins; the sign is fixed so the first nonzero
/// component is positive.
pub fn spectral_search(spec: &LcgSpec, d: usize, bound: u32) -> Result<SpectralResult, LcgError> {
    let max = match d {
        2 => SPECTRAL_MAX_BOUND_D2,
        3 => SPECTRAL_MAX_BOUND_D3,
        _ => return Err(LcgError::UnsupportedDimension(d)),
    };
    if bound > max {
        return Err(LcgError::BoundTooLarge { d, bound, max });
    }
    let m = spec.m;
    let a = spec.a % m;
    let powers: Vec<u128> = (0..d)
        .scan(1u128 % m, |p, _| {
            let cur = *p;
            *p = *p * a % m;
            Some(cur)
        })
        .collect();
    let b = bound as i64;
    let residue = |q: &[i64]| -> u128 {
        q.iter().zip(&powers).fold(0u128, |acc, (&c, &p)| {
            let term = (c.unsigned_abs() as u128 % m) * p % m;
            if c >= 0 {
                (acc + term) % m
            } else {
                (acc + m - term) % m
            }
        })
    };
    type Key = (u64, Vec<u64>, Vec<i64>);
    let mut best: Option<Key> = None;
    let mut consider = |q: Vec<i64>| {
        if residue(&q) != 0 {
            return;
        }
        let norm_sq = q.iter().map(|&c| (c * c) as u64).sum();
        let key = (norm_sq, q.iter().map(|c| c.unsigned_abs()).collect(), q);
        if best.as_ref().is_none_or(|bk| key < *bk) {
            best = Some(key);
        }
    };
    // first nonzero component positive
    match d {
        2 => {
            for q1 in 0..=b {
                for q2 in -b..=b {
                    if q1 == 0 && q2 <= 0 {
                        continue;
                    }
                    consider(vec![q1, q2]);
                }
            }
        }
        _ => {
            for q1 in 0..=b {
                for q2 in -b..=b {
                    if q1 == 0 && q2 < 0 {
                        continue;
                    }
                    for q3 in -b..=b {
                        if q1 == 0 && q2 == 0 && q3 <= 0 {
                            continue;
                        }
                        consider(vec![q1, q2, q3]);
                    }
                }
            }
        }
    }
    Ok(match best {
        Some((_, _, q)) => SpectralResult::Found { vector: LatticeVector::new(q) },
        None => SpectralResult::BoundTooSmall { bound },
    })
}

/// `m^(-1/d)`: the order of the typical distance between the points of a
/// full period in `[0,1)^d`. Each point owns a volume of about `1/m`.
pub fn mean_spacing(m: u128, d: u32) -> f64 {
    assert!(m >= 2 && d >= 1);
    if m.is_power_of_two() {
        (-(m.trailing_zeros() as f64) / d as f64).exp2()
    } else {
        (m as f64).powf(-1.0 / d as f64)
    }
}
