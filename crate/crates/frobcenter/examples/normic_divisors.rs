//! Enumerate the normic divisors of a rational polynomial over a number
//! field: the monic divisors whose norm from the field generated by their
//! coefficients recovers the whole polynomial.

use frobcenter::normic::{normic_divisors, norm_poly, DEFAULT_SUBSET_CAP};
use frobcenter::numberfield::NumberField;
use frobcenter::polyq::{IntPoly, RatPoly};

fn main() {
    // g = T^2 - 2T + 19 over its own root field M: the two linear factors
    // (each with coefficient field M) and g itself (coefficients in Q).
    let m = NumberField::new(IntPoly::from_i64(&[19, -2, 1])).unwrap();
    let g = RatPoly::from_i64(&[19, -2, 1]);
    for d in normic_divisors(&g, &m, DEFAULT_SUBSET_CAP).unwrap() {
        println!(
            "h = {:?}  over L = {:?}  (norm = {})",
            d.h,
            d.coeff_field,
            norm_poly(&d.h)
        );
    }

    // T^2 + 7T + 37 stays irreducible over Q(sqrt(-2)): only the trivial
    // normic divisor (the polynomial itself, over Q) exists.
    let m = NumberField::new(IntPoly::from_i64(&[2, 0, 1])).unwrap();
    let g = RatPoly::from_i64(&[37, 7, 1]);
    let divs = normic_divisors(&g, &m, DEFAULT_SUBSET_CAP).unwrap();
    assert_eq!(divs.len(), 1);
    println!("over Q(sqrt(-2)): only {:?} with L = Q", divs[0].h);
}
