//! Full pipeline starting from a curve equation: count points on
//! y^2 + y = x^3 - x^2 - 10x - 20 at p = 3 and 7, reconstruct the
//! Frobenius polynomials, and bound the center (which is Q, i.e. the
//! curve has no extra geometric endomorphisms).

use frobcenter::center::{compute_center, CenterOptions};
use frobcenter::pointcount::{frobenius_datum_from_curve, CurveSpec, DEFAULT_ENUM_CAP};

fn main() {
    let curve = CurveSpec::elliptic_i64(0, -1, 1, -10, -20);
    let data: Vec<_> = [3u64, 7]
        .iter()
        .map(|&p| frobenius_datum_from_curve(&curve, p, DEFAULT_ENUM_CAP).unwrap())
        .collect();

    for d in &data {
        println!("p = {}: c = {}", d.q, d.cpoly);
    }

    let report = compute_center(1, &data, &CenterOptions::default());
    println!("found: {}, d_C: {:?}", report.found, report.d_c);
    for f in &report.candidate_fields {
        println!("candidate center: {:?}", f);
    }
    assert_eq!(report.d_c, Some(1));
}
