//! Identify the center of the geometric endomorphism algebra for a
//! genus-4 isotypic abelian variety given Frobenius polynomials at two
//! primes, both fourth powers of quadratics.

use frobcenter::center::{compute_center, CenterOptions};
use frobcenter::frobdata::FrobeniusDatum;
use frobcenter::polyq::IntPoly;

fn main() {
    let g19 = IntPoly::from_i64(&[1, -2, 19]);
    let g37 = IntPoly::from_i64(&[1, 7, 37]);
    let data = vec![
        FrobeniusDatum::new(19, g19.pow(4)),
        FrobeniusDatum::new(37, g37.pow(4)),
    ];

    let report = compute_center(4, &data, &CenterOptions::default());

    println!("found: {}", report.found);
    println!("q used: {:?}", report.q_used);
    println!("degree bound d_C: {:?}", report.d_c);
    for f in &report.candidate_fields {
        println!("candidate center: {:?}", f);
    }
    for a in &report.diagnostics {
        println!(
            "prime {}: d_p = {}, r_p = {}, fields = {:?}",
            a.q_of_prime, a.d_p, a.r_p, a.normic_fields
        );
    }
    // The two Frobenius fields Q(sqrt(-18)) and Q(sqrt(-99/4)) are
    // non-isomorphic quadratics, so the center is forced down to Q.
    assert_eq!(report.d_c, Some(1));
    assert!(report.candidate_fields[0].is_rationals());
}
