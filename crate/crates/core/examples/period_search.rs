//! Exhaustive search for three-shift xorshift generators of full period
//! 2^n - 1 on small word sizes.
//!
//! cargo run --release --example period_search [n]

use f2lab::genlin::{search_maximal, ShiftTemplate};

fn main() {
    let n: usize = std::env::args().nth(1).map(|s| s.parse().expect("n")).unwrap_or(12);
    for template in [ShiftTemplate::LeftRightLeft, ShiftTemplate::LeftRight] {
        let budget = (n as u64).pow(3);
        let hits = search_maximal(n, template, budget).unwrap();
        println!("n = {n}, {template:?}: {} full-period shift sets", hits.len());
        for h in hits.iter().take(8) {
            println!("  {:?}  period {}", h.amounts, h.period);
        }
        if hits.len() > 8 {
            println!("  ...");
        }
    }
}
