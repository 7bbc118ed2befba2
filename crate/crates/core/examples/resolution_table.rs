//! Resolution table: the largest w_d for which the generator is
//! (d, w_d)-equidistributed, its gap to floor(n/d), and the totals.
//!
//! cargo run --release --example resolution_table

use f2lab::equidist::{resolution_table, wstar_asymptotic};
use f2lab::genlin::presets;

fn main() {
    for spec in [presets::xorshift16(), presets::xorshift16_best(), presets::identity(16, 16)] {
        let t = resolution_table(&spec, 16, true).unwrap();
        println!("{}  (period certified: {})", spec.name(), t.period_certified);
        let row = |f: &dyn Fn(&f2lab::equidist::ResolutionRow) -> usize| {
            t.rows.iter().map(|r| format!("{:>3}", f(r))).collect::<String>()
        };
        println!("  d      {}", row(&|r| r.d));
        println!("  w*     {}", row(&|r| r.w_star));
        println!("  w_d    {}", row(&|r| r.w_d));
        println!("  gap    {}", row(&|r| r.delta_d));
        println!("  {t}\n");
    }
    for n in [16usize, 32, 64, 1024, 19937] {
        let (bound, ratio) = wstar_asymptotic(n);
        println!("n = {n:>5}: sum floor(n/d) = {bound:>7}, ratio to n ln n = {ratio:.4}");
    }
}
