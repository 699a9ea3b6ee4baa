//! Factorization over Q: Yun squarefree decomposition, Berlekamp
//! factorization modulo a good prime, quadratic Hensel lifting to a
//! Mignotte-style bound, and exhaustive subset recombination.

use super::fp::{invm, is_prime_u64, subm, FpPoly};
use super::{gcd_over_q, IntPoly, RatPoly};
use crate::error::{Error, Result};
use num::{BigInt, BigRational, Integer, One, Zero};

/// Complete factorization of a rational polynomial:
/// `input = unit * prod factors[i].0 ^ factors[i].1`
/// with every factor monic irreducible over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFactorization {
    pub unit: BigRational,
    pub factors: Vec<(RatPoly, u32)>,
}

impl QFactorization {
    pub fn expand(&self) -> RatPoly {
        let mut acc = RatPoly::constant_poly(self.unit.clone());
        for (f, e) in &self.factors {
            acc = &acc * &f.pow(*e);
        }
        acc
    }

    /// True iff the input was a nonzero constant times a single
    /// irreducible to the first power.
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Factor a nonzero rational polynomial into monic irreducibles over Q.
pub fn factor_over_q(f: &RatPoly) -> Result<QFactorization> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("cannot factor the zero polynomial"));
    }
    let unit = f.leading();
    let fm = f.monic();
    if fm.degree() == Some(0) {
        return Ok(QFactorization { unit, factors: vec![] });
    }
    let mut factors: Vec<(RatPoly, u32)> = Vec::new();
    for (part, mult) in yun_squarefree(&fm)? {
        let (v, _) = part.to_primitive_int();
        for w in factor_squarefree_primitive(&v) {
            factors.push((w.to_rat().monic(), mult));
        }
    }
    factors.sort_by(|a, b| cmp_ratpoly(&a.0, &b.0));
    Ok(QFactorization { unit, factors })
}

pub(crate) fn cmp_ratpoly(a: &RatPoly, b: &RatPoly) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Yun's algorithm: monic input, returns pairwise-coprime monic squarefree
/// parts with multiplicities.
fn yun_squarefree(f: &RatPoly) -> Result<Vec<(RatPoly, u32)>> {
    let df = f.derivative();
    let g = gcd_over_q(f, &df)?;
    if g.degree() == Some(0) {
        return Ok(vec![(f.clone(), 1)]);
    }
    let mut w = f.exact_div(&g);
    let mut z = &df.exact_div(&g) - &w.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while w.degree().map_or(false, |d| d > 0) {
        let h = gcd_over_q(&w, &z)?;
        if h.degree().map_or(false, |d| d > 0) {
            out.push((h.clone(), i));
        }
        w = w.exact_div(&h);
        z = &z.exact_div(&h) - &w.derivative();
        i += 1;
    }
    Ok(out)
}

/// Factor a squarefree primitive integer polynomial (lc > 0) into
/// primitive irreducibles with positive leading coefficients.
fn factor_squarefree_primitive(u: &IntPoly) -> Vec<IntPoly> {
    let n = match u.degree() {
        None | Some(0) => return vec![],
        Some(1) => return vec![u.clone()],
        Some(n) => n,
    };
    if u.is_monic() {
        return factor_monic_squarefree(u);
    }
    // Monicize: v(x) = l^(n-1) * u(x/l) is monic over Z.
    let l = u.leading();
    let mut v = Vec::with_capacity(n + 1);
    for (i, c) in u.coeffs()[..n].iter().enumerate() {
        v.push(c * num::pow::pow(l.clone(), n - 1 - i));
    }
    v.push(BigInt::one());
    let v = IntPoly::new(v);
    factor_monic_squarefree(&v)
        .into_iter()
        .map(|h| h.scale_arg(&l).primitive_part())
        .collect()
}

/// Core engine: monic squarefree integer polynomial of degree >= 2.
fn factor_monic_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let p = choose_hensel_prime(f);
    let fp = FpPoly::new(p, f.coeffs().iter().map(|c| c.mod_floor(&BigInt::from(p)).try_into().unwrap()).collect());
    let mut modular = berlekamp(&fp.make_monic());
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    modular.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    // Lift past twice the factor-coefficient bound so symmetric
    // representatives of true factors are exact.
    let bound = factor_coeff_bound(f);
    let target = {
        let two_b = &bound * 2 + 1;
        let mut t = BigInt::from(p);
        while t < two_b {
            t = &t * p;
        }
        t
    };
    let lifted = hensel_lift_tree(&red_mod(f, &target), &modular, p, &target);
    recombine(f, lifted, &target)
}

/// Smallest prime dividing neither the leading coefficient nor the
/// discriminant (checked as squarefreeness of the reduction).
fn choose_hensel_prime(f: &IntPoly) -> u64 {
    let n = f.degree().unwrap();
    let lc = f.leading();
    let mut p = 2u64;
    loop {
        if is_prime_u64(p) && !(&lc % BigInt::from(p)).is_zero() {
            let fp = FpPoly::new(p, f.coeffs().iter().map(|c| c.mod_floor(&BigInt::from(p)).try_into().unwrap()).collect());
            if fp.degree() == Some(n) {
                let g = fp.gcd(&fp.derivative());
                if g.degree() == Some(0) {
                    return p;
                }
            }
        }
        p += 1;
    }
}

/// 2^n * ||f||_2, a bound on the coefficients of any monic factor.
fn factor_coeff_bound(f: &IntPoly) -> BigInt {
    let n = f.degree().unwrap();
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    (BigInt::one() << n) * norm
}

// ---- arithmetic on integer polynomials modulo m (coefficients in [0, m)) ----

fn red_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    red_mod(&(a * b), m)
}

fn sub_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    red_mod(&(a - b), m)
}

/// Division with remainder by a divisor whose leading coefficient is 1.
fn divrem_monic_mod(a: &IntPoly, d: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(d.is_monic());
    let dd = d.degree().unwrap();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
    while r.len() > dd {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = r.len() - dd;
        for i in 0..dd {
            let t = (&top * &d.coeffs()[i]).mod_floor(m);
            r[shift + i] = (&r[shift + i] - t).mod_floor(m);
        }
        q[shift] = top;
    }
    (IntPoly::new(q), IntPoly::new(r))
}

/// Symmetric representative with coefficients in (-m/2, m/2].
fn symmetric(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if &c > &half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

fn fp_to_int(f: &FpPoly) -> IntPoly {
    IntPoly::new(f.coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Extended Euclid over F_p: (s, t) with s*a + t*b = 1 for coprime a, b.
fn fp_bezout(a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
    let p = a.p;
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = FpPoly::one(p);
    let mut s1 = FpPoly::zero(p);
    let mut t0 = FpPoly::zero(p);
    let mut t1 = FpPoly::one(p);
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    assert_eq!(r0.degree(), Some(0), "Hensel inputs must be coprime mod p");
    let inv = invm(r0.leading(), p);
    (s0.scale(inv), t0.scale(inv))
}

/// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m),
/// h monic, to the same relations mod m^2.
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let m2 = m * m;
    let e = sub_mod(f, &mul_mod(g, h, &m2), &m2);
    let (_, r) = divrem_monic_mod(&red_mod(&(s * &e), &m2), h, &m2);
    let h2 = red_mod(&(h + &r), &m2);
    debug_assert!(h2.is_monic());
    let (g2, rem) = divrem_monic_mod(&red_mod(f, &m2), &h2, &m2);
    debug_assert!(red_mod(&rem, &m2).is_zero(), "Hensel step lost divisibility");
    // Bezout update.
    let b = sub_mod(&(&mul_mod(s, &g2, &m2) + &mul_mod(t, &h2, &m2)), &IntPoly::one(), &m2);
    let (c, d) = divrem_monic_mod(&red_mod(&(s * &b), &m2), &h2, &m2);
    let s2 = sub_mod(s, &d, &m2);
    let t2 = sub_mod(t, &(&mul_mod(t, &b, &m2) + &mul_mod(&red_mod(&c, &m2), &g2, &m2)), &m2);
    (g2, h2, s2, t2)
}

/// Lift the modular factorization f = prod(facs) (mod p) to mod `target`
/// (a power of p), recursively by binary splitting.
fn hensel_lift_tree(f: &IntPoly, facs: &[FpPoly], p: u64, target: &BigInt) -> Vec<IntPoly> {
    if facs.len() == 1 {
        return vec![red_mod(f, target)];
    }
    let (left, right) = facs.split_at(facs.len() / 2);
    let g0 = left.iter().fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let h0 = right.iter().fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let (s0, t0) = fp_bezout(&g0, &h0);
    let mut g = fp_to_int(&g0);
    let mut h = fp_to_int(&h0);
    let mut s = fp_to_int(&s0);
    let mut t = fp_to_int(&t0);
    let mut m = BigInt::from(p);
    while &m < target {
        let (g2, h2, s2, t2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    let g = red_mod(&g, target);
    let h = red_mod(&h, target);
    debug_assert!(sub_mod(f, &mul_mod(&g, &h, target), target).is_zero());
    let mut out = hensel_lift_tree(&g, left, p, target);
    out.extend(hensel_lift_tree(&h, right, p, target));
    out
}

/// Exhaustive subset recombination of lifted modular factors.
fn recombine(f: &IntPoly, lifted: Vec<IntPoly>, m: &BigInt) -> Vec<IntPoly> {
    let mut pool = lifted;
    let mut f_cur = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= pool.len() {
        let mut restart = true;
        while restart && 2 * size <= pool.len() {
            restart = false;
            let mut indices: Vec<usize> = (0..size).collect();
            loop {
                let mut prod = IntPoly::one();
                for &i in &indices {
                    prod = mul_mod(&prod, &pool[i], m);
                }
                let cand = symmetric(&prod, m);
                if divides_exactly(&cand, &f_cur) {
                    out.push(cand.clone());
                    let (q, _) = divrem_int_by_monic(&f_cur, &cand);
                    f_cur = q;
                    for &i in indices.iter().rev() {
                        pool.remove(i);
                    }
                    restart = true;
                    break;
                }
                if !next_combination(&mut indices, pool.len()) {
                    break;
                }
            }
        }
        size += 1;
    }
    if f_cur.degree().map_or(false, |d| d > 0) {
        out.push(f_cur);
    }
    out
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - (k - i) {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn divides_exactly(d: &IntPoly, f: &IntPoly) -> bool {
    if d.degree() > f.degree() {
        return false;
    }
    let (_, r) = divrem_int_by_monic(f, d);
    r.is_zero()
}

/// Division with remainder over Z by a monic divisor.
fn divrem_int_by_monic(f: &IntPoly, d: &IntPoly) -> (IntPoly, IntPoly) {
    debug_assert!(d.is_monic());
    let dd = d.degree().unwrap();
    let mut r: Vec<BigInt> = f.coeffs().to_vec();
    let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
    while r.len() > dd {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = r.len() - dd;
        for i in 0..dd {
            let t = &top * &d.coeffs()[i];
            r[shift + i] -= t;
        }
        q[shift] = top;
    }
    (IntPoly::new(q), IntPoly::new(r))
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
fn berlekamp(f: &FpPoly) -> Vec<FpPoly> {
    let n = f.degree().unwrap();
    if n == 1 {
        return vec![f.clone()];
    }
    let p = f.p;
    // Columns of the Frobenius matrix: x^(ip) mod f.
    let xp = FpPoly::frobenius_power(f, 1);
    let mut cols: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = FpPoly::one(p);
    for i in 0..n {
        let mut col = cur.coeffs.clone();
        col.resize(n, 0);
        cols.push(col);
        if i + 1 < n {
            cur = cur.mul(&xp).rem(f);
        }
    }
    // Nullspace of (Q - I): vectors v with v^p = v (mod f).
    let mut a = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[j][i] = cols[i][j];
        }
        a[i][i] = subm(a[i][i], 1, p);
    }
    let basis = fp_nullspace(a, p);
    let k = basis.len();
    let mut factors = vec![f.clone()];
    if k == 1 {
        return factors;
    }
    'outer: for v in &basis {
        let vp = FpPoly::new(p, v.clone());
        if vp.degree().map_or(true, |d| d == 0) {
            continue;
        }
        for c in 0..p {
            let shifted = vp.sub(&FpPoly::new(p, vec![c]));
            let mut next = Vec::with_capacity(factors.len());
            for w in factors.drain(..) {
                if factors_done(&w) {
                    next.push(w);
                    continue;
                }
                let g = w.gcd(&shifted);
                match g.degree() {
                    Some(d) if d > 0 && d < w.degree().unwrap() => {
                        let (q, _) = w.divrem(&g);
                        next.push(g);
                        next.push(q.make_monic());
                    }
                    _ => next.push(w),
                }
            }
            factors = next;
            if factors.len() == k {
                break 'outer;
            }
        }
    }
    debug_assert_eq!(factors.len(), k);
    factors
}

fn factors_done(w: &FpPoly) -> bool {
    w.degree() == Some(1)
}

fn fp_nullspace(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        if let Some(r) = (row..n).find(|&r| a[r][col] != 0) {
            a.swap(row, r);
            let inv = invm(a[row][col], p);
            for j in 0..n {
                a[row][j] = super::fp::mulm(a[row][j], inv, p);
            }
            for r2 in 0..n {
                if r2 != row && a[r2][col] != 0 {
                    let c = a[r2][col];
                    for j in 0..n {
                        let t = super::fp::mulm(c, a[row][j], p);
                        a[r2][j] = subm(a[r2][j], t, p);
                    }
                }
            }
            pivot_col_of_row.push(col);
            row += 1;
        }
    }
    let pivots = pivot_col_of_row;
    let mut basis = Vec::new();
    for col in 0..n {
        if !pivots.contains(&col) {
            let mut v = vec![0u64; n];
            v[col] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = subm(0, a[r][col], p);
            }
            basis.push(v);
        }
    }
    basis
}
