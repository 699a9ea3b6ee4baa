//! Detect complex multiplication: for y^2 = x^3 - x the Frobenius fields
//! at every good ordinary prime coincide with Q(i), and the algorithm
//! reports a degree-2 center isomorphic to Q[x]/(x^2+1).

use frobcenter::center::{compute_center, CenterOptions};
use frobcenter::numberfield::{is_isomorphic, NumberField};
use frobcenter::pointcount::{frobenius_datum_from_curve, CurveSpec, DEFAULT_ENUM_CAP};
use frobcenter::polyq::IntPoly;

fn main() {
    let curve = CurveSpec::hyperelliptic(IntPoly::from_i64(&[0, -1, 0, 1]));
    let data: Vec<_> = [5u64, 13]
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

    let gaussian = NumberField::new(IntPoly::from_i64(&[1, 0, 1])).unwrap();
    assert_eq!(report.d_c, Some(2));
    assert!(is_isomorphic(&report.candidate_fields[0], &gaussian).unwrap());
    println!("center is Q(i): the curve has CM");
}
