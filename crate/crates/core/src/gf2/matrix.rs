use std::fmt;

use super::vector::{dot_words, words_for, BitVector};
use super::{F2Poly, Gf2Error};

/// A dense matrix over GF(2) stored as word-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from row vectors, all of length `cols`.
    pub fn from_rows(cols: usize, rows: &[BitVector]) -> Result<Self, Gf2Error> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Gf2Error::DimensionMismatch(format!(
                    "row {i} has length {} but the matrix has {cols} columns",
                    r.len()
                )));
            }
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Builds a matrix whose column `j` is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[BitVector]) -> Result<Self, Gf2Error> {
        let t = Self::from_rows(rows, columns)?;
        Ok(t.transpose())
    }

    /// The companion matrix of a monic polynomial `q` of degree `k >= 1`:
    /// `C e_i = e_{i+1}` for `i < k - 1` and `C e_{k-1} = sum_{i<k} q_i e_i`.
    /// Its minimal polynomial is `q`.
    pub fn companion(q: &F2Poly) -> Result<Self, Gf2Error> {
        let k = match q.degree() {
            Some(k) if k >= 1 => k,
            _ => {
                return Err(Gf2Error::DimensionMismatch(
                    "companion matrix needs a polynomial of degree >= 1".into(),
                ))
            }
        };
        let mut c = Self::zeros(k, k);
        for i in 0..k - 1 {
            c.set(i + 1, i, true);
        }
        for i in 0..k {
            c.set(i, k - 1, q.coeff(i));
        }
        Ok(c)
    }

    /// Block-diagonal matrix with `blocks` on the diagonal.
    pub fn block_diagonal(blocks: &[BitMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    if b.get(i, j) {
                        m.set(r0 + i, c0 + j, true);
                    }
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols);
        (self.data[row * self.stride + col / 64] >> (col % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols);
        let w = &mut self.data[row * self.stride + col / 64];
        let mask = 1u64 << (col % 64);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, row: usize) -> &[u64] {
        &self.data[row * self.stride..(row + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, row: usize) -> &mut [u64] {
        &mut self.data[row * self.stride..(row + 1) * self.stride]
    }

    pub fn row(&self, row: usize) -> BitVector {
        BitVector::from_words(self.cols, self.row_words(row).to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            let row = self.row_words(i);
            for (wi, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let b = bits.trailing_zeros() as usize;
                    t.set(wi * 64 + b, i, true);
                    bits &= bits - 1;
                }
            }
        }
        t
    }

    /// The first `count` rows.
    pub fn top_rows(&self, count: usize) -> BitMatrix {
        assert!(count <= self.rows);
        BitMatrix {
            rows: count,
            cols: self.cols,
            stride: self.stride,
            data: self.data[..count * self.stride].to_vec(),
        }
    }

    /// Stacks `blocks` vertically; all must share a column count.
    pub fn vstack(cols: usize, blocks: &[&BitMatrix]) -> Result<Self, Gf2Error> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Gf2Error::DimensionMismatch(format!(
                    "cannot stack a block with {} columns onto {cols}",
                    b.cols
                )));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(BitMatrix {
            rows,
            cols,
            stride: words_for(cols),
            data,
        })
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector, Gf2Error> {
        if v.len() != self.cols {
            return Err(Gf2Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(BitVector::from_bits(
            (0..self.rows).map(|i| dot_words(self.row_words(i), v.words())),
        ))
    }

    /// Matrix product over GF(2): row `i` of the result is the XOR of the
    /// rows of `other` selected by row `i` of `self`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix, Gf2Error> {
        if self.cols != other.rows {
            return Err(Gf2Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let stride = out.stride;
        for i in 0..self.rows {
            let acc = &mut out.data[i * stride..(i + 1) * stride];
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let k = wi * 64 + bits.trailing_zeros() as usize;
                    for (a, b) in acc.iter_mut().zip(other.row_words(k)) {
                        *a ^= b;
                    }
                    bits &= bits - 1;
                }
            }
        }
        Ok(out)
    }

    /// `self^e` by square-and-multiply; `self^0` is the identity.
    pub fn pow(&self, mut e: u64) -> Result<BitMatrix, Gf2Error> {
        if !self.is_square() {
            return Err(Gf2Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = BitMatrix::identity(self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Row rank over GF(2). Works on a copy; `self` is untouched.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        let stride = self.stride;
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let (wi, mask) = (col / 64, 1u64 << (col % 64));
            let Some(pivot) = (rank..self.rows).find(|&r| work[r * stride + wi] & mask != 0) else {
                continue;
            };
            if pivot != rank {
                for k in 0..stride {
                    work.swap(pivot * stride + k, rank * stride + k);
                }
            }
            let (head, tail) = work.split_at_mut((rank + 1) * stride);
            let prow = &head[rank * stride..];
            for r in tail.chunks_exact_mut(stride) {
                if r[wi] & mask != 0 {
                    // columns below wi are already cleared in the pivot row
                    for k in wi..stride {
                        r[k] ^= prow[k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Rows as hex strings, column 0 in the least significant bit.
    pub fn to_hex_rows(&self) -> Vec<String> {
        (0..self.rows).map(|i| self.row(i).to_hex()).collect()
    }

    pub fn from_hex_rows(cols: usize, rows: &[String]) -> Result<Self, Gf2Error> {
        let vs = rows
            .iter()
            .map(|r| BitVector::from_hex(cols, r))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(cols, &vs)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
