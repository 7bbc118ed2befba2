//! Bit-packed GF(2) linear algebra: rank, powers, and the minimal
//! polynomial of a companion matrix.
//!
//! cargo run --release --example gf2_basics

use f2lab::gf2::{min_poly, BitMatrix, BitVector, F2Poly, DEFAULT_PROBES};

fn main() {
    // x^8 + x^4 + x^3 + x^2 + 1
    let q = F2Poly::from_exponents(&[8, 4, 3, 2, 0]);
    let c = BitMatrix::companion(&q).unwrap();
    println!("companion of {q:?}: rank {}", c.rank());
    println!("C^255 == I: {}", c.pow(255).unwrap() == BitMatrix::identity(8));
    println!("C^85  == I: {}", c.pow(85).unwrap() == BitMatrix::identity(8));
    println!("minimal polynomial recovered: {}", min_poly(&c, DEFAULT_PROBES).unwrap() == q);

    let mut v = BitVector::from_hex(8, "01").unwrap();
    let mut orbit = Vec::new();
    for _ in 0..6 {
        orbit.push(v.to_hex());
        v = c.mul_vec(&v).unwrap();
    }
    println!("orbit of 01: {}", orbit.join(" -> "));

    let singular = BitMatrix::from_rows(3, &[
        BitVector::from_hex(3, "3").unwrap(),
        BitVector::from_hex(3, "6").unwrap(),
        BitVector::from_hex(3, "5").unwrap(),
    ])
    .unwrap();
    println!("rows 3, 6, 5 span rank {}", singular.rank());
}
