//! Count points on curves over prime fields and their extensions, and
//! check the counts predicted by the Frobenius polynomial against direct
//! enumeration.

use frobcenter::pointcount::{
    count_points, frobenius_datum_from_curve, predicted_count, CurveSpec, DEFAULT_ENUM_CAP,
};
use frobcenter::polyq::IntPoly;
use num::BigInt;

fn main() {
    let curve = CurveSpec::elliptic_i64(0, -1, 1, -10, -20);
    let d = frobenius_datum_from_curve(&curve, 3, DEFAULT_ENUM_CAP).unwrap();
    println!("p = 3: c = {}", d.cpoly);
    for r in 1..=5u32 {
        let counted = count_points(&curve, 3, r, DEFAULT_ENUM_CAP).unwrap();
        let predicted = predicted_count(&d, r).unwrap();
        println!("  #C(F_3^{}) = {} (predicted {})", r, counted, predicted);
        assert_eq!(BigInt::from(counted), predicted);
    }

    // genus-2 hyperelliptic
    let curve = CurveSpec::hyperelliptic(IntPoly::from_i64(&[1, -1, 0, 0, 0, 1]));
    let d = frobenius_datum_from_curve(&curve, 7, DEFAULT_ENUM_CAP).unwrap();
    println!("y^2 = x^5 - x + 1 at p = 7: c = {}", d.cpoly);
    for r in 1..=4u32 {
        let counted = count_points(&curve, 7, r, DEFAULT_ENUM_CAP).unwrap();
        println!("  #C(F_7^{}) = {}", r, counted);
        assert_eq!(BigInt::from(counted), predicted_count(&d, r).unwrap());
    }
}
