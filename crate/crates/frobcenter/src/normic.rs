//! Normic divisors: monic divisors of a rational polynomial over a number
//! field M whose norm down to Q recovers the whole polynomial.

use crate::error::{Error, Result};
use crate::numberfield::{
    cmp_nfpoly, express_in_powers, norm_to_q, subfield_generated, trager_factor, NFElem, NFPoly,
    NumberField,
};
use crate::polyq::{factor_over_q, RatPoly};

/// Default bound on the number of distinct irreducible factors before
/// subset enumeration is refused.
pub const DEFAULT_SUBSET_CAP: usize = 20;

/// A normic divisor h of g over M, together with the subfield L of M
/// generated by the coefficients of h and the image in M of L's generator.
#[derive(Clone, Debug)]
pub struct NormicDivisor {
    pub h: NFPoly,
    pub coeff_field: NumberField,
    pub gen_image: NFElem,
}

/// Norm of a polynomial over a number field down to Q: the product of its
/// conjugates under all embeddings of the coefficient field.
pub fn norm_poly(h: &NFPoly) -> RatPoly {
    norm_to_q(h)
}

/// Rewrite h, whose coefficients all lie in the subfield of M generated by
/// `gen_image`, as a polynomial over the abstract field L. `None` if some
/// coefficient falls outside the subfield.
fn rewrite_over_subfield(h: &NFPoly, l: &NumberField, gen_image: &NFElem) -> Option<NFPoly> {
    let dim = l.degree();
    let mut coeffs = Vec::with_capacity(h.coeffs().len());
    for c in h.coeffs() {
        let coords = express_in_powers(gen_image, dim, c)?;
        coeffs.push(NFElem::from_coords(l.clone(), coords));
    }
    Some(NFPoly::new(l.clone(), coeffs))
}

fn irreducible_over(h_over_l: &NFPoly, l: &NumberField) -> Result<bool> {
    if l.is_rationals() {
        let hq = h_over_l.to_ratpoly().expect("rational coefficients");
        return Ok(factor_over_q(&hq)?.is_irreducible());
    }
    let fac = trager_factor(h_over_l)?;
    Ok(fac.len() == 1 && fac[0].1 == 1)
}

/// Whether the monic polynomial h over M is normic for g: h divides g,
/// deg g = [L:Q] * deg h for L the subfield generated by h's coefficients,
/// and h is irreducible over L.
pub fn is_normic(g: &RatPoly, h: &NFPoly) -> Result<(bool, NumberField, NFElem)> {
    let m = h.field().clone();
    if h.is_zero() || !h.is_monic() {
        return Err(Error::InvalidInput("divisor must be monic and nonzero".into()));
    }
    let g_m = NFPoly::from_ratpoly(&m, g);
    if !h.divides(&g_m) {
        return Err(Error::NotADivisor);
    }
    let (l, gen_image) = subfield_generated(&m, h.coeffs())?;
    let dg = g.degree().unwrap_or(0);
    let dh = h.degree().unwrap_or(0);
    if dg != l.degree() * dh {
        return Ok((false, l, gen_image));
    }
    let h_l = rewrite_over_subfield(h, &l, &gen_image)
        .expect("coefficients lie in the subfield they generate");
    let normic = irreducible_over(&h_l, &l)?;
    Ok((normic, l, gen_image))
}

/// All normic divisors of g over M, found by factoring g over M and
/// testing every nonempty product of distinct irreducible factors.
/// The result may be empty. Deterministic order: factors are sorted, and
/// subsets are enumerated by ascending bitmask over that sorted list.
pub fn normic_divisors(g: &RatPoly, m: &NumberField, cap: usize) -> Result<Vec<NormicDivisor>> {
    if g.is_zero() || g.degree() == Some(0) {
        return Err(Error::DegenerateInput("polynomial must have positive degree"));
    }
    let g_m = NFPoly::from_ratpoly(m, &g.monic());
    let mut factors: Vec<NFPoly> = trager_factor(&g_m)?.into_iter().map(|(f, _)| f).collect();
    factors.sort_by(cmp_nfpoly);
    let k = factors.len();
    if k > cap {
        return Err(Error::CombinatorialBlowup { found: k, cap });
    }
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << k) {
        let mut h = NFPoly::one(m.clone());
        for (i, f) in factors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                h = h.mul(f);
            }
        }
        let (l, gen_image) = subfield_generated(m, h.coeffs())?;
        let dg = g.degree().unwrap();
        let dh = h.degree().unwrap();
        if dg != l.degree() * dh {
            continue;
        }
        let h_l = rewrite_over_subfield(&h, &l, &gen_image)
            .expect("coefficients lie in the subfield they generate");
        if irreducible_over(&h_l, &l)? {
            out.push(NormicDivisor { h, coeff_field: l, gen_image });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyq::IntPoly;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(IntPoly::from_i64(c)).unwrap()
    }

    #[test]
    fn norm_of_linear_over_gaussian() {
        let k = field(&[1, 0, 1]);
        let h = NFPoly::new(k.clone(), vec![-&k.generator(), k.one()]);
        assert_eq!(norm_poly(&h), RatPoly::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn linear_factor_is_normic_over_gaussian() {
        // g = T^2 + 1, M = Q(i), h = T - i: L = Q(i), deg matches, h linear
        let m = field(&[1, 0, 1]);
        let g = RatPoly::from_i64(&[1, 0, 1]);
        let h = NFPoly::new(m.clone(), vec![-&m.generator(), m.one()]);
        let (ok, l, _) = is_normic(&g, &h).unwrap();
        assert!(ok);
        assert_eq!(l.degree(), 2);
        // h = g itself: L = Q, deg g = 1 * 2, irreducible over Q
        let hg = NFPoly::from_ratpoly(&m, &g);
        let (ok, l, _) = is_normic(&g, &hg).unwrap();
        assert!(ok);
        assert_eq!(l.degree(), 1);
        // non-divisor is an error
        let bad = NFPoly::from_ratpoly(&m, &RatPoly::from_i64(&[1, 1]));
        assert!(matches!(is_normic(&g, &bad), Err(Error::NotADivisor)));
    }

    #[test]
    fn degree_mismatch_is_not_normic() {
        // g = (T^2+1)^2 over Q(i): T - i has L = Q(i), [L:Q]*1 = 2 != 4
        let m = field(&[1, 0, 1]);
        let g = RatPoly::from_i64(&[1, 0, 1]).pow(2);
        let h = NFPoly::new(m.clone(), vec![-&m.generator(), m.one()]);
        let (ok, _, _) = is_normic(&g, &h).unwrap();
        assert!(!ok);
        // but (T - i)^2 has norm g and is normic... it is (T-i)^2, which is
        // NOT irreducible over L = Q(i), so not normic either.
        let h2 = h.mul(&h);
        let (ok, _, _) = is_normic(&g, &h2).unwrap();
        assert!(!ok);
        // T^2 + 1 over Q(i): L = Q, 1 * 2 != 4
        let hq = NFPoly::from_ratpoly(&m, &RatPoly::from_i64(&[1, 0, 1]));
        let (ok, _, _) = is_normic(&g, &hq).unwrap();
        assert!(!ok);
    }

    #[test]
    fn divisors_of_split_quadratic() {
        // g = T^2 - 2T + 19 over M = Q[x]/(x^2 - 2x + 19): factors are
        // T - alpha and T - (2 - alpha); each is normic (L = M, degree 2);
        // the product g itself is normic over Q.
        let m = field(&[19, -2, 1]);
        let g = RatPoly::from_i64(&[19, -2, 1]);
        let divs = normic_divisors(&g, &m, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(divs.len(), 3);
        let mut deg1_l2 = 0;
        let mut deg2_l1 = 0;
        for d in &divs {
            match (d.h.degree().unwrap(), d.coeff_field.degree()) {
                (1, 2) => deg1_l2 += 1,
                (2, 1) => deg2_l1 += 1,
                other => panic!("unexpected normic divisor shape {:?}", other),
            }
        }
        assert_eq!(deg1_l2, 2);
        assert_eq!(deg2_l1, 1);
    }

    #[test]
    fn irreducible_quadratic_over_imaginary_field() {
        // T^2 + 7T + 37 stays irreducible over Q(sqrt(-2)); the only
        // normic divisor is the polynomial itself, with L = Q.
        let m = field(&[2, 0, 1]);
        let g = RatPoly::from_i64(&[37, 7, 1]);
        let divs = normic_divisors(&g, &m, DEFAULT_SUBSET_CAP).unwrap();
        assert_eq!(divs.len(), 1);
        assert_eq!(divs[0].h.degree(), Some(2));
        assert!(divs[0].coeff_field.is_rationals());
    }

    #[test]
    fn subset_cap_enforced() {
        let m = field(&[19, -2, 1]);
        let g = RatPoly::from_i64(&[19, -2, 1]);
        assert!(matches!(
            normic_divisors(&g, &m, 1),
            Err(Error::CombinatorialBlowup { found: 2, cap: 1 })
        ));
    }
}
