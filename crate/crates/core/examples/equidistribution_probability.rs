//! Probability that 2^n independent uniform points land one per cell in a
//! grid of 2^(dw) cells, against its Stirling approximation.
//!
//! cargo run --release --example equidistribution_probability

use f2lab::stats::log_equidist_probability;

fn main() {
    println!("{:>4} {:>14} {:>14} {:>10}", "n", "log10 P", "Stirling", "rel err");
    for n in [1u32, 2, 4, 8, 12, 16, 20] {
        let p = log_equidist_probability(n, 1, n).unwrap();
        let exact = p.log_exact.unwrap();
        let ten = std::f64::consts::LN_10;
        println!(
            "{n:>4} {:>14.6} {:>14.6} {:>10.2e}",
            exact / ten,
            p.log_stirling / ten,
            (exact - p.log_stirling).abs() / exact.abs()
        );
    }
    println!();
    for (n, d, w) in [(16u32, 2u32, 4u32), (16, 4, 2), (32, 2, 8)] {
        let p = log_equidist_probability(n, d, w).unwrap();
        println!("n = {n}, ({d}, {w}): log10 P = {:.4}", p.log10_probability);
    }
}
