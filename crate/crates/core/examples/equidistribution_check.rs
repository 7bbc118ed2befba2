//! Rank test for (d, w)-equidistribution, checked against an exhaustive
//! full-cycle tally of overlapping d-tuples.
//!
//! cargo run --release --example equidistribution_check

use f2lab::equidist::{is_equidistributed, verify_equidist};
use f2lab::genlin::presets;

fn main() {
    for spec in [presets::xorshift16(), presets::xorshift16_best()] {
        println!("{}", spec.name());
        println!("  {:>2} {:>2} {:>5} {:>6} {:>6} {:>10} {:>10}", "d", "w", "rank", "rank?", "tally?", "zero cell", "min..max");
        for (d, w) in [(1, 16), (2, 3), (2, 4), (2, 8), (3, 4), (3, 5), (4, 4)] {
            let r = verify_equidist(&spec, d, w).unwrap();
            assert!(r.agree);
            println!(
                "  {d:>2} {w:>2} {:>5} {:>6} {:>6} {:>10} {:>4}..{:<5}",
                r.rank, r.rank_verdict, r.tally_verdict, r.zero_cell_count, r.min_count, r.max_count
            );
        }
        let v = is_equidistributed(&spec, 5, 4).unwrap();
        println!("  (5, 4): {:?}\n", v.verdict);
    }
}
