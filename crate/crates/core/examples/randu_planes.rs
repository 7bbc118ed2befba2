//! RANDU: every consecutive triple satisfies z_{k+2} = 6 z_{k+1} - 9 z_k
//! (mod 2^31), so the points (x_k, x_{k+1}, x_{k+2}) fall on 15 parallel
//! planes 9x - 6y + z = c.
//!
//! cargo run --release --example randu_planes [samples]

use f2lab::lcg::{
    mean_spacing, plane_count, plane_spacing, randu_recurrence_check, LcgSpec, RANDU_MODULUS, RANDU_NORMAL,
};

fn main() {
    let samples: u64 = std::env::args().nth(1).map(|s| s.parse().expect("samples")).unwrap_or(200_000);
    let spec = LcgSpec::randu(1).unwrap();

    let violations = randu_recurrence_check(1, samples).unwrap();
    println!("recurrence violations in {samples} steps: {violations}");

    let planes = plane_count(&spec, RANDU_NORMAL, samples).unwrap();
    let list: Vec<String> = planes.iter().map(i64::to_string).collect();
    println!("plane offsets 9x - 6y + z: {{{}}}  ({} planes)", list.join(", "), planes.len());

    let spacing = plane_spacing(&RANDU_NORMAL).unwrap();
    println!("distance between planes: {spacing:.6}");
    println!("for comparison, m^(-1/3) = {:.6}", mean_spacing(RANDU_MODULUS, 3));
}
