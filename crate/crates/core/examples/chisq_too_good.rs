//! Chi-square on a full period is "too good": every cell holds almost
//! exactly its expectation. Short segments behave like random samples
//! only when the generator is well equidistributed at that resolution.
//!
//! cargo run --release --example chisq_too_good

use f2lab::genlin::presets;
use f2lab::gf2::BitVector;
use f2lab::stats::{segment_chisq, SegmentMode};
use f2lab::stream::F2Stream;

fn main() {
    for spec in [presets::xorshift16(), presets::xorshift16_best()] {
        println!("{}", spec.name());
        let mut src = F2Stream::new(&spec, &spec.default_seed());
        let r = segment_chisq(&mut src, 1, 16, 65535, SegmentMode::OverlapFull).unwrap();
        println!(
            "  full period, d = 1, w = 16: X2 = {:.3e} on {} dof, P(X <= x) = {:.3e} -> {:?}",
            r.statistic,
            r.dof,
            r.p_lower,
            r.decide(0.01)
        );
        for seed in ["1", "1234", "beef", "5a5a"] {
            let seed = BitVector::from_hex(16, seed).unwrap();
            let r = segment_chisq(&mut F2Stream::new(&spec, &seed), 2, 4, 256, SegmentMode::Blocks).unwrap();
            println!(
                "  seed {:>4}, 256 pairs, w = 4: X2 = {:>8.2}, two-tailed p = {:.3e} -> {:?}",
                seed.to_hex(),
                r.statistic,
                r.two_tailed_p,
                r.decide(0.01)
            );
        }
        println!();
    }
}
