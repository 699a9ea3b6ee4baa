//! Exact resultants via Sylvester matrices with polynomial entries,
//! eliminated fraction-free (Bareiss). Used for the composed-product
//! (tensor-square) construction and for norms down from number fields.

use super::{IntPoly, RatPoly};
use crate::error::{Error, Result};
use num::{BigRational, One, Zero};

fn trim_outer(a: &[RatPoly]) -> Vec<RatPoly> {
    let mut v = a.to_vec();
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Resultant with respect to the outer variable of two polynomials whose
/// coefficients (`a[i]`, `b[i]`, ascending in the outer variable) are
/// polynomials in a second variable. Returns a polynomial in that second
/// variable.
pub fn resultant_bivariate(a: &[RatPoly], b: &[RatPoly]) -> RatPoly {
    let a = trim_outer(a);
    let b = trim_outer(b);
    if a.is_empty() || b.is_empty() {
        return RatPoly::zero();
    }
    let da = a.len() - 1;
    let db = b.len() - 1;
    if da == 0 && db == 0 {
        return RatPoly::one();
    }
    if da == 0 {
        return a[0].pow(db as u32);
    }
    if db == 0 {
        return b[0].pow(da as u32);
    }
    // Sylvester matrix: db rows of a's coefficients, da rows of b's.
    let n = da + db;
    // All-integer entries take the fraction-free path over Z[T], which is
    // much cheaper than BigRational arithmetic.
    let a_int: Option<Vec<IntPoly>> = a.iter().map(|c| c.to_int_exact()).collect();
    let b_int: Option<Vec<IntPoly>> = b.iter().map(|c| c.to_int_exact()).collect();
    if let (Some(ai), Some(bi)) = (a_int, b_int) {
        let mut m = vec![vec![IntPoly::zero(); n]; n];
        for r in 0..db {
            for (i, c) in ai.iter().enumerate() {
                m[r][r + da - i] = c.clone();
            }
        }
        for r in 0..da {
            for (i, c) in bi.iter().enumerate() {
                m[db + r][r + db - i] = c.clone();
            }
        }
        return bareiss_det_int(m).to_rat();
    }
    let mut m = vec![vec![RatPoly::zero(); n]; n];
    for r in 0..db {
        for (i, c) in a.iter().enumerate() {
            m[r][r + da - i] = c.clone();
        }
    }
    for r in 0..da {
        for (i, c) in b.iter().enumerate() {
            m[db + r][r + db - i] = c.clone();
        }
    }
    bareiss_det(m)
}

/// Fraction-free determinant over Z[T]; Bareiss divisions are exact.
fn bareiss_det_int(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return IntPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Determinant of a square matrix of polynomials by fraction-free
/// Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<RatPoly>>) -> RatPoly {
    let n = m.len();
    if n == 0 {
        return RatPoly::one();
    }
    let mut sign = false;
    let mut prev = RatPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return RatPoly::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = RatPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

/// Scalar resultant of two rational polynomials.
pub fn resultant_q(f: &RatPoly, g: &RatPoly) -> BigRational {
    let a: Vec<RatPoly> = f.coeffs().iter().map(|c| RatPoly::constant_poly(c.clone())).collect();
    let b: Vec<RatPoly> = g.coeffs().iter().map(|c| RatPoly::constant_poly(c.clone())).collect();
    resultant_bivariate(&a, &b).coeff(0)
}

/// Discriminant of a polynomial: Res(f, f') / lc(f), up to the usual sign.
pub fn discriminant_q(f: &RatPoly) -> BigRational {
    let d = f.degree().expect("nonzero polynomial") as i64;
    let r = resultant_q(f, &f.derivative()) / f.leading();
    if (d * (d - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// Composed product of `c` with itself: the integer polynomial with
/// constant term 1 whose reciprocal roots are all ordered products of
/// pairs of reciprocal roots of `c`. Computed exactly as
/// Res_y(f(y), y^d f(x/y)) on the monic reciprocal f, then converted back.
pub fn tensor_square(c: &IntPoly) -> Result<IntPoly> {
    if c.is_zero() || c.constant().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let d = c.degree().unwrap();
    if d == 0 {
        return Ok(IntPoly::one());
    }
    let f = c.reciprocal_monic()?; // roots are the reciprocal roots of c
    // A(y) = f(y): constant in x.
    let a: Vec<RatPoly> = f.coeffs().iter().map(|q| RatPoly::constant_poly(q.clone())).collect();
    // B(x, y) = y^d f(x/y): coefficient of y^j is f_{d-j} x^{d-j}.
    let mut b: Vec<RatPoly> = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut coeffs = vec![BigRational::zero(); d - j + 1];
        coeffs[d - j] = f.coeff(d - j);
        b.push(RatPoly::new(coeffs));
    }
    let res = resultant_bivariate(&a, &b); // monic of degree d^2 in x
    debug_assert_eq!(res.degree(), Some(d * d));
    debug_assert!(res.is_monic());
    // Convert back to the inverse-charpoly convention (constant term 1).
    // The resultant of integer polynomials is integral, and reversing the
    // monic result puts the 1 in the constant term.
    let p = res.reverse().to_int_exact().expect("integral resultant");
    debug_assert!(p.constant().is_one());
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    #[test]
    fn scalar_resultant() {
        // Res(x^2 - 1, x - 2) = (2^2 - 1) * 1 = 3
        let f = RatPoly::from_i64(&[-1, 0, 1]);
        let g = RatPoly::from_i64(&[-2, 1]);
        assert_eq!(resultant_q(&f, &g), BigRational::from(BigInt::from(3)));
    }

    #[test]
    fn discriminant_values() {
        // disc(x^2 + bx + c) = b^2 - 4c
        let f = RatPoly::from_i64(&[19, -2, 1]);
        assert_eq!(discriminant_q(&f), BigRational::from(BigInt::from(4 - 76)));
        // disc(x^4 - x - 1) = -283
        let f = RatPoly::from_i64(&[-1, -1, 0, 0, 1]);
        assert_eq!(discriminant_q(&f), BigRational::from(BigInt::from(-283)));
    }

    #[test]
    fn tensor_square_two_roots() {
        // reciprocal roots 1, 2 -> ordered products {1, 2, 2, 4}
        let c = IntPoly::from_i64(&[1, -3, 2]);
        let expect = {
            let a = IntPoly::from_i64(&[1, -1]);
            let b = IntPoly::from_i64(&[1, -2]);
            let d = IntPoly::from_i64(&[1, -4]);
            &(&a * &b.pow(2)) * &d
        };
        assert_eq!(tensor_square(&c).unwrap(), expect);
    }

    #[test]
    fn tensor_square_imaginary() {
        // c = 1 + 3T^2, reciprocal roots ±i√3, products {-3, 3, 3, -3}
        let c = IntPoly::from_i64(&[1, 0, 3]);
        let expect = {
            let a = IntPoly::from_i64(&[1, 3]);
            let b = IntPoly::from_i64(&[1, -3]);
            &a.pow(2) * &b.pow(2)
        };
        assert_eq!(tensor_square(&c).unwrap(), expect);
    }

    #[test]
    fn tensor_square_degree() {
        let c = IntPoly::from_i64(&[1, 1, 3]);
        let t = tensor_square(&c).unwrap();
        assert_eq!(t.degree(), Some(4));
        assert!(tensor_square(&IntPoly::from_i64(&[0, 1])).is_err());
    }
}
