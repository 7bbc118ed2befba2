//! Period certification beyond exhaustive reach: minimal polynomial of the
//! transition matrix by Berlekamp–Massey, then primitivity from the
//! factorization of 2^n - 1.
//!
//! cargo run --release --example period_certificates

use f2lab::genlin::{certify_period, presets, F2GeneratorSpec, PeriodCertificate, ShiftTemplate};
use f2lab::gf2::{mersenne_factors, min_poly, poly_order, DEFAULT_PROBES};

fn main() {
    let lrl = ShiftTemplate::LeftRightLeft;
    let generators = [
        presets::xorshift16(),
        F2GeneratorSpec::xorshift(32, 32, &lrl.shifts(&[13, 17, 5]), "xorshift32 (13,17,5)").unwrap(),
        F2GeneratorSpec::xorshift(32, 32, &lrl.shifts(&[13, 17, 6]), "xorshift32 (13,17,6)").unwrap(),
        F2GeneratorSpec::xorshift(64, 64, &lrl.shifts(&[13, 7, 17]), "xorshift64 (13,7,17)").unwrap(),
        F2GeneratorSpec::xorshift(128, 64, &lrl.shifts(&[23, 17, 26]), "n = 128 (23,17,26)").unwrap(),
    ];
    for spec in &generators {
        let n = spec.n();
        let p = min_poly(spec.transition_matrix(), DEFAULT_PROBES).expect("square transition matrix");
        println!("{}  (n = {n})", spec.name());
        println!("  minimal polynomial degree {}, irreducible: {}", p.degree().unwrap_or(0), p.is_irreducible());
        if let Some(f) = mersenne_factors(n) {
            let desc: Vec<String> = f.iter().map(|(q, e)| if *e > 1 { format!("{q}^{e}") } else { q.to_string() }).collect();
            println!("  2^{n} - 1 = {}", desc.join(" * "));
            if p.degree() == Some(n) && p.is_irreducible() {
                let o = poly_order(&p, &f).unwrap();
                println!("  order of x: {}  primitive: {}", o.order, o.primitive);
            }
        }
        let cert = certify_period(spec, None).unwrap();
        let verdict = match &cert {
            PeriodCertificate::Exhaustion { period } => format!("maximal, period {period} by exhaustion"),
            PeriodCertificate::Primitive { .. } => "maximal, primitive minimal polynomial".into(),
            PeriodCertificate::NotMaximal { reason } => format!("not maximal: {reason}"),
            PeriodCertificate::Uncertified { reason } => format!("uncertified: {reason}"),
        };
        println!("  certificate: {verdict}\n");
    }
}
