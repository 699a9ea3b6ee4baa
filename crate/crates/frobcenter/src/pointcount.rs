//! Exhaustive point counting for elliptic and odd-characteristic
//! hyperelliptic curves over small finite fields, plus reconstruction of
//! the Frobenius polynomial from the counts via Newton's identities.

use crate::error::{Error, Result};
use crate::frobdata::{validate_weil, FrobeniusDatum};
use crate::polyq::{is_prime_u64, power_sums_of_reciprocal_roots, FpPoly, IntPoly};
use num::{pow::pow, BigInt, BigRational, Integer, One, ToPrimitive, Zero};

pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

/// A curve given by integral equations, reducible modulo any prime of
/// good reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSpec {
    /// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6, any characteristic.
    Elliptic { a: [BigInt; 5], label: Option<String> },
    /// y^2 = f(x) with f squarefree mod p, odd characteristic only.
    Hyperelliptic { f: IntPoly, label: Option<String> },
}

impl CurveSpec {
    pub fn elliptic_i64(a1: i64, a2: i64, a3: i64, a4: i64, a6: i64) -> Self {
        CurveSpec::Elliptic {
            a: [a1.into(), a2.into(), a3.into(), a4.into(), a6.into()],
            label: None,
        }
    }

    pub fn hyperelliptic(f: IntPoly) -> Self {
        CurveSpec::Hyperelliptic { f, label: None }
    }

    pub fn genus(&self) -> Result<usize> {
        match self {
            CurveSpec::Elliptic { .. } => Ok(1),
            CurveSpec::Hyperelliptic { f, .. } => match f.degree() {
                Some(d) if d >= 3 => Ok((d - 1) / 2),
                _ => Err(Error::InvalidInput(
                    "hyperelliptic model needs deg f >= 3".into(),
                )),
            },
        }
    }

    /// Discriminant of the long Weierstrass model (elliptic only).
    fn elliptic_disc(a: &[BigInt; 5]) -> BigInt {
        let [a1, a2, a3, a4, a6] = a;
        let b2 = a1 * a1 + BigInt::from(4) * a2;
        let b4 = BigInt::from(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + BigInt::from(4) * a6;
        let b8 = a1 * a1 * a6 + BigInt::from(4) * (a2 * a6) - a1 * a3 * a4
            + a2 * (a3 * a3)
            - a4 * a4;
        -(&b2 * &b2 * &b8) - BigInt::from(8) * (&b4 * &b4 * &b4) - BigInt::from(27) * (&b6 * &b6)
            + BigInt::from(9) * &b2 * &b4 * &b6
    }
}

/// Explicit finite field F_{p^r}: elements are residues modulo a fixed
/// monic irreducible polynomial over F_p.
pub struct FiniteField {
    pub p: u64,
    pub r: u32,
    pub(crate) modulus: FpPoly,
    q: u64,
}

impl FiniteField {
    /// Deterministic construction: the modulus is the monic irreducible of
    /// degree r whose coefficient vector, read as a base-p integer, is
    /// smallest.
    pub fn new(p: u64, r: u32, cap: u64) -> Result<FiniteField> {
        assert!(is_prime_u64(p) && r >= 1);
        let q = (0..r).try_fold(1u64, |acc, _| acc.checked_mul(p)).ok_or(Error::FieldTooLarge {
            p,
            r,
            cap,
        })?;
        if q > cap {
            return Err(Error::FieldTooLarge { p, r, cap });
        }
        for k in 0..q {
            let mut coeffs = index_to_digits(k, p, r as usize);
            coeffs.push(1);
            let m = FpPoly::new(p, coeffs);
            if m.is_irreducible() {
                return Ok(FiniteField { p, r, modulus: m, q });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    fn element(&self, k: u64) -> FpPoly {
        FpPoly::new(self.p, index_to_digits(k, self.p, self.r as usize))
    }

    fn mul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        a.mul(b).rem(&self.modulus)
    }

    fn is_zero(&self, a: &FpPoly) -> bool {
        a.is_zero()
    }

    /// Quadratic character: 1 for nonzero squares, -1 for nonsquares,
    /// 0 for zero. Odd characteristic only.
    fn chi(&self, a: &FpPoly) -> i32 {
        debug_assert!(self.p != 2);
        if a.is_zero() {
            return 0;
        }
        let e = a.powmod((self.q - 1) / 2, &self.modulus);
        if e == FpPoly::one(self.p) {
            1
        } else {
            -1
        }
    }

    /// Absolute trace down to F_2 (characteristic 2 only), as 0 or 1.
    fn trace_f2(&self, a: &FpPoly) -> u64 {
        debug_assert!(self.p == 2);
        let mut acc = FpPoly::zero(2);
        let mut x = a.rem(&self.modulus);
        for _ in 0..self.r {
            acc = acc.add(&x);
            x = self.mul(&x, &x);
        }
        debug_assert!(acc.degree().map_or(true, |d| d == 0));
        if acc.is_zero() {
            0
        } else {
            1
        }
    }

    fn eval_intpoly(&self, f: &IntPoly, x: &FpPoly) -> FpPoly {
        let mut acc = FpPoly::zero(self.p);
        let d = match f.degree() {
            None => return acc,
            Some(d) => d,
        };
        for i in (0..=d).rev() {
            let c = f.coeff(i).mod_floor(&BigInt::from(self.p)).to_u64().unwrap();
            acc = self.mul(&acc, x).add(&FpPoly::new(self.p, vec![c]));
        }
        acc
    }
}

fn index_to_digits(mut k: u64, p: u64, len: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(k % p);
        k /= p;
    }
    v
}

fn reduce_coeff(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Number of points of the smooth projective model over F_{p^r}, by
/// exhaustive enumeration.
pub fn count_points(curve: &CurveSpec, p: u64, r: u32, cap: u64) -> Result<u64> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("{} is not prime", p)));
    }
    match curve {
        CurveSpec::Elliptic { a, .. } => {
            if CurveSpec::elliptic_disc(a).mod_floor(&BigInt::from(p)).is_zero() {
                return Err(Error::BadReduction { p });
            }
            let fq = FiniteField::new(p, r, cap)?;
            let [a1, a2, a3, a4, a6] = a;
            let u_poly = IntPoly::new(vec![a3.clone(), a1.clone()]); // a1 x + a3
            let v_poly =
                IntPoly::new(vec![a6.clone(), a4.clone(), a2.clone(), BigInt::one()]);
            let mut n = 1u64; // the point at infinity
            for k in 0..fq.order() {
                let x = fq.element(k);
                let u = fq.eval_intpoly(&u_poly, &x);
                let v = fq.eval_intpoly(&v_poly, &x);
                if p == 2 {
                    // y^2 + u y = v
                    if fq.is_zero(&u) {
                        n += 1; // squaring is a bijection
                    } else {
                        // y = u w: w^2 + w = v / u^2, solvable iff trace 0
                        let u2 = fq.mul(&u, &u);
                        let inv_u2 = u2.powmod(fq.order() - 2, &fq.modulus);
                        let w = fq.mul(&v, &inv_u2);
                        if fq.trace_f2(&w) == 0 {
                            n += 2;
                        }
                    }
                } else {
                    // complete the square: (2y + u)^2 = 4v + u^2
                    let z = fq.mul(&u, &u).add(&v.scale(4 % p));
                    n = n.checked_add((1 + fq.chi(&z)) as u64).unwrap();
                }
            }
            Ok(n)
        }
        CurveSpec::Hyperelliptic { f, .. } => {
            if p == 2 {
                return Err(Error::InvalidInput(
                    "hyperelliptic counting requires odd characteristic".into(),
                ));
            }
            let d = f.degree().ok_or(Error::BadReduction { p })?;
            if reduce_coeff(&f.leading(), p) == 0 {
                return Err(Error::BadReduction { p });
            }
            // squarefree mod p
            let fp = FpPoly::new(
                p,
                (0..=d).map(|i| reduce_coeff(&f.coeff(i), p)).collect(),
            );
            if fp.gcd(&fp.derivative()).degree() != Some(0) {
                return Err(Error::BadReduction { p });
            }
            let g = curve.genus()?;
            let fq = FiniteField::new(p, r, cap)?;
            let mut n = 0u64;
            for k in 0..fq.order() {
                let x = fq.element(k);
                let z = fq.eval_intpoly(f, &x);
                n += (1 + fq.chi(&z)) as u64;
            }
            // points at infinity of the smooth model
            n += if d == 2 * g + 1 {
                1
            } else {
                let lc = FpPoly::new(p, vec![reduce_coeff(&f.leading(), p)]);
                if fq.chi(&lc) == 1 {
                    2
                } else {
                    0
                }
            };
            Ok(n)
        }
    }
}

/// Reconstruct c_p(T) from the counts N_1..N_g: power sums
/// s_r = p^r + 1 - N_r give the elementary symmetric functions of the
/// reciprocal roots by Newton's identities; the top half of the
/// coefficients is filled in by the functional equation.
pub fn charpoly_from_counts(p: u64, g: usize, counts: &[u64]) -> Result<IntPoly> {
    if counts.len() != g || g == 0 {
        return Err(Error::InvalidInput(format!(
            "need exactly g = {} counts, got {}",
            g,
            counts.len()
        )));
    }
    let pz = BigInt::from(p);
    let s: Vec<BigRational> = (1..=g)
        .map(|r| BigRational::from(pow(pz.clone(), r) + 1 - BigInt::from(counts[r - 1])))
        .collect();
    // e_k = (1/k) * sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i, with e_0 = 1
    let mut e: Vec<BigRational> = vec![BigRational::one()];
    for k in 1..=g {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &s[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from(BigInt::from(k)));
    }
    let mut a = vec![BigInt::zero(); 2 * g + 1];
    for (k, ek) in e.iter().enumerate() {
        if !ek.denom().is_one() {
            return Err(Error::InconsistentCounts(format!(
                "coefficient e_{} = {} is not an integer",
                k, ek
            )));
        }
        let v = ek.numer().clone();
        a[k] = if k % 2 == 1 { -v } else { v };
    }
    for i in 0..g {
        a[2 * g - i] = &a[i] * pow(pz.clone(), g - i);
    }
    let c = IntPoly::new(a);
    let datum = FrobeniusDatum::new(p, c.clone());
    if !validate_weil(&datum) {
        return Err(Error::InconsistentCounts(
            "reconstructed polynomial violates the functional equation".into(),
        ));
    }
    Ok(c)
}

/// Count N_1..N_g and reconstruct the Frobenius datum at p.
pub fn frobenius_datum_from_curve(
    curve: &CurveSpec,
    p: u64,
    cap: u64,
) -> Result<FrobeniusDatum> {
    let g = curve.genus()?;
    let counts: Vec<u64> = (1..=g as u32)
        .map(|r| count_points(curve, p, r, cap))
        .collect::<Result<_>>()?;
    let c = charpoly_from_counts(p, g, &counts)?;
    Ok(FrobeniusDatum::new(p, c))
}

/// Point count over F_{p^r} predicted by a Frobenius datum:
/// p^r + 1 - (sum of r-th powers of the reciprocal roots).
pub fn predicted_count(d: &FrobeniusDatum, r: u32) -> Result<BigInt> {
    let s = power_sums_of_reciprocal_roots(&d.cpoly.to_rat(), r as usize)?;
    let sr = &s[r as usize - 1];
    if !sr.denom().is_one() {
        return Err(Error::InconsistentCounts("non-integral power sum".into()));
    }
    Ok(pow(BigInt::from(d.q), r as usize) + 1 - sr.numer())
}
