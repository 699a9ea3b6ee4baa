//! Exact factorization over Q and over number fields.

use frobcenter::numberfield::{trager_factor, NFPoly, NumberField};
use frobcenter::polyq::{factor_over_q, IntPoly, RatPoly};

fn main() {
    // x^12 - 1 splits into the six cyclotomic factors.
    let f = RatPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
    let fac = factor_over_q(&f).unwrap();
    println!("x^12 - 1 over Q:");
    for (g, e) in &fac.factors {
        println!("  ({})^{}", g, e);
    }
    assert_eq!(fac.factors.len(), 6);

    // x^4 + 1 is irreducible over Q but splits over Q(sqrt 2).
    let f = RatPoly::from_i64(&[1, 0, 0, 0, 1]);
    assert!(factor_over_q(&f).unwrap().is_irreducible());
    let k = NumberField::new(IntPoly::from_i64(&[-2, 0, 1])).unwrap();
    let fk = NFPoly::from_ratpoly(&k, &f);
    println!("x^4 + 1 over Q(sqrt 2):");
    for (g, e) in trager_factor(&fk).unwrap() {
        println!("  ({:?})^{}", g, e);
    }
}
