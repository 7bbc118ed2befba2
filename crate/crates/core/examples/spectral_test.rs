//! Shortest dual-lattice vector of an LCG in two and three dimensions.
//! Its length bounds the plane spacing from below; a short vector means
//! few, widely spaced hyperplanes.
//!
//! cargo run --release --example spectral_test

use f2lab::lcg::{mean_spacing, spectral_search, LcgSpec, SpectralResult};

fn main() {
    let randu = LcgSpec::randu(1).unwrap();
    let generators = [
        ("RANDU, m = 2^31", randu, vec![(3usize, 16u32)]),
        ("a = 3, m = 2^16", LcgSpec::new(3, 1, 1 << 16, 1).unwrap(), vec![(2, 1024), (3, 64)]),
        ("a = 3533, m = 2^16", LcgSpec::new(3533, 1, 1 << 16, 1).unwrap(), vec![(2, 1024), (3, 64)]),
        ("a = 5045, m = 2^16", LcgSpec::new(5045, 1, 1 << 16, 1).unwrap(), vec![(2, 1024), (3, 64)]),
    ];
    for (name, spec, dims) in generators {
        let m = spec.m;
        println!("{name}");
        for (d, bound) in dims {
            match spectral_search(&spec, d, bound).unwrap() {
                SpectralResult::Found { vector } => println!(
                    "  d = {d}: q = {:?}, |q| = {:.3}, spacing {:.3e} (mean {:.3e})",
                    vector.q,
                    vector.norm(),
                    vector.spacing(),
                    mean_spacing(m, d as u32)
                ),
                SpectralResult::BoundTooSmall { bound } => println!("  d = {d}: nothing within |q_i| <= {bound}"),
            }
        }
    }
}
