use std::collections::HashSet;

use f2lab::gf2::{berlekamp_massey, min_poly, BitMatrix, BitVector, F2Poly, DEFAULT_PROBES};
use proptest::prelude::*;

fn matrix_from_words(cols: usize, rows: &[u64]) -> BitMatrix {
    let rows: Vec<BitVector> = rows
        .iter()
        .map(|&r| BitVector::from_bits((0..cols).map(|j| r >> j & 1 == 1)))
        .collect();
    BitMatrix::from_rows(cols, &rows).unwrap()
}

/// Rank as log2 of the size of the row span, built by closure.
fn span_rank(rows: &[u64]) -> usize {
    let mut span: HashSet<u64> = HashSet::from([0]);
    for &r in rows {
        let shifted: Vec<u64> = span.iter().map(|&s| s ^ r).collect();
        span.extend(shifted);
    }
    span.len().trailing_zeros() as usize
}

#[test]
fn rank_matches_span_oracle_exhaustively_up_to_3x3() {
    for rows in 1..=3usize {
        for cols in 1..=3usize {
            let cells = rows * cols;
            for bits in 0u64..(1 << cells) {
                let words: Vec<u64> = (0..rows).map(|i| bits >> (i * cols) & ((1 << cols) - 1)).collect();
                let m = matrix_from_words(cols, &words);
                assert_eq!(m.rank(), span_rank(&words), "{rows}x{cols} {bits:b}");
            }
        }
    }
}

#[test]
fn identity_and_zero_ranks() {
    for n in [1, 7, 64, 65, 200] {
        assert_eq!(BitMatrix::identity(n).rank(), n);
        assert_eq!(BitMatrix::zeros(n, n).rank(), 0);
    }
}

fn small_matrix() -> impl Strategy<Value = (usize, Vec<u64>)> {
    (1usize..=8, 1usize..=8).prop_flat_map(|(r, c)| (Just(c), prop::collection::vec(0u64..(1 << c), r)))
}

fn square(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BitMatrix> {
    n.prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(any::<bool>(), n), n).prop_map(move |rows| {
            let rows: Vec<BitVector> = rows.into_iter().map(BitVector::from_bits).collect();
            BitMatrix::from_rows(n, &rows).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn rank_matches_span_oracle((cols, rows) in small_matrix()) {
        prop_assert_eq!(matrix_from_words(cols, &rows).rank(), span_rank(&rows));
    }

    #[test]
    fn rank_is_transpose_invariant((cols, rows) in small_matrix()) {
        let m = matrix_from_words(cols, &rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_of_product_is_bounded((a, b) in (1usize..=40).prop_flat_map(|n| (square(n..=n), square(n..=n)))) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn power_is_additive(a in square(1..=24), e1 in 0u64..300, e2 in 0u64..300) {
        let lhs = a.pow(e1 + e2).unwrap();
        let rhs = a.pow(e1).unwrap().mul(&a.pow(e2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn power_matches_repeated_multiplication(a in square(1..=12), e in 0u64..20) {
        let mut acc = BitMatrix::identity(a.rows());
        for _ in 0..e {
            acc = acc.mul(&a).unwrap();
        }
        prop_assert_eq!(a.pow(e).unwrap(), acc);
    }

    #[test]
    fn matrix_vector_product_is_linear(a in square(1..=70), x in any::<u64>(), y in any::<u64>()) {
        let n = a.rows();
        let u = BitVector::from_bits((0..n).map(|j| x.rotate_left(j as u32) & 1 == 1));
        let v = BitVector::from_bits((0..n).map(|j| y.rotate_right(j as u32) & 1 == 1));
        let mut s = u.clone();
        s.xor_assign(&v);
        let mut expect = a.mul_vec(&u).unwrap();
        expect.xor_assign(&a.mul_vec(&v).unwrap());
        prop_assert_eq!(a.mul_vec(&s).unwrap(), expect);
    }

    #[test]
    fn min_poly_of_companion_is_its_polynomial(low in any::<u64>(), deg in 1usize..=64) {
        let mask = if deg == 64 { u64::MAX } else { (1u64 << deg) - 1 };
        let mut exps: Vec<usize> = (0..deg).filter(|&j| (low & mask) >> j & 1 == 1).collect();
        exps.push(deg);
        let q = F2Poly::from_exponents(&exps);
        let a = BitMatrix::companion(&q).unwrap();
        let p = min_poly(&a, DEFAULT_PROBES).unwrap();
        prop_assert_eq!(&p, &q);
        prop_assert!(p.annihilates(&a).unwrap());
    }

    #[test]
    fn min_poly_annihilates_random_matrices(a in square(1..=30)) {
        let p = min_poly(&a, DEFAULT_PROBES).unwrap();
        prop_assert!(p.annihilates(&a).unwrap());
        prop_assert!(p.degree().unwrap() <= a.rows());
    }

    #[test]
    fn hex_round_trip(len in 1usize..200, x in any::<u64>()) {
        let v = BitVector::from_bits((0..len).map(|j| x.rotate_left(j as u32 * 7) & 1 == 1));
        prop_assert_eq!(BitVector::from_hex(len, &v.to_hex()).unwrap(), v);
    }
}

#[test]
fn berlekamp_massey_recovers_lfsr() {
    // s_{k+4} = s_{k+1} + s_k, characteristic polynomial x^4 + x + 1
    let mut s = vec![true, false, false, false];
    for k in 0..40 {
        let next = s[k + 1] ^ s[k];
        s.push(next);
    }
    assert_eq!(berlekamp_massey(&s), F2Poly::from_exponents(&[0, 1, 4]));
}

#[test]
fn block_diagonal_min_poly_is_lcm() {
    let p = F2Poly::from_exponents(&[0, 1, 3]);
    let q = F2Poly::from_exponents(&[0, 1, 2]);
    let a = BitMatrix::block_diagonal(&[BitMatrix::companion(&p).unwrap(), BitMatrix::companion(&q).unwrap()]);
    assert_eq!(min_poly(&a, DEFAULT_PROBES).unwrap(), p.lcm(&q));
    let twice = BitMatrix::block_diagonal(&[BitMatrix::companion(&p).unwrap(), BitMatrix::companion(&p).unwrap()]);
    assert_eq!(min_poly(&twice, DEFAULT_PROBES).unwrap(), p);
}

#[test]
fn shape_errors() {
    let a = BitMatrix::zeros(2, 3);
    assert!(a.pow(2).is_err());
    assert!(a.mul(&a).is_err());
    assert!(a.mul_vec(&BitVector::zeros(2)).is_err());
    assert!(BitVector::from_hex(4, "1f").is_err());
    assert!(BitVector::from_hex(4, "zz").is_err());
}
