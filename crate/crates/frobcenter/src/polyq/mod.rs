//! Dense univariate polynomials over Z and Q with exact arithmetic.
//!
//! All Frobenius data is carried in the inverse-charpoly convention
//! c(0) = 1; the Galois-theoretic machinery works on monic reciprocals.
//! Conversions between the two happen explicitly via [`IntPoly::reciprocal_monic`]
//! and [`RatPoly::reciprocal_monic`].

mod factor;
mod fp;
mod resultant;

pub use factor::{factor_over_q, QFactorization};
pub(crate) use fp::{is_prime_u64, FpPoly};
pub use resultant::{discriminant_q, resultant_bivariate, resultant_q, tensor_square};

use crate::error::{Error, Result};
use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial with arbitrary-precision integer coefficients, ascending order.
/// Canonical form: trailing (leading-degree) zeros trimmed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with arbitrary-precision rational coefficients, ascending order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn trim_rat(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        IntPoly { coeffs: trim_int(coeffs) }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// The monomial T^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// gcd of all coefficients, with the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().sign() == Sign::Minus {
            -g
        } else {
            g
        }
    }

    /// Divide out the content; leading coefficient becomes positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect(),
        }
    }

    /// Coefficient reversal: T^d * self(1/T) for d = deg(self).
    /// Requires a nonzero constant term to be degree-preserving.
    pub fn reverse(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// The monic reciprocal T^d c(1/T) / c(0); its roots are the
    /// reciprocals of the roots of `c`.
    pub fn reciprocal_monic(&self) -> Result<RatPoly> {
        if self.is_zero() || self.constant().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0 = BigRational::from(self.constant());
        let rev = self.reverse();
        Ok(RatPoly::new(
            rev.coeffs.iter().map(|a| BigRational::from(a.clone()) / &c0).collect(),
        ))
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Remainder of division by a monic integer polynomial.
    pub fn rem_monic(&self, d: &IntPoly) -> IntPoly {
        assert!(d.is_monic(), "divisor must be monic");
        let dd = d.degree().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = r.len() - dd;
            for i in 0..dd {
                let t = &top * &d.coeffs[i];
                r[shift + i] -= t;
            }
        }
        IntPoly::new(r)
    }

    /// Quotient by a divisor known to divide exactly over Z[T].
    pub fn exact_div(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(&lc);
            debug_assert!(rem.is_zero(), "inexact integer polynomial division");
            let shift = r.len() - dd;
            for i in 0..dd {
                let t = &c * &d.coeffs[i];
                r[shift + i] -= t;
            }
            q[shift] = c;
        }
        debug_assert!(r.iter().all(|x| x.is_zero()), "inexact integer polynomial division");
        IntPoly::new(q)
    }

    /// Substitute T -> a*T.
    pub fn scale_arg(&self, a: &BigInt) -> IntPoly {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= a;
        }
        IntPoly::new(out)
    }
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RatPoly { coeffs: trim_rat(coeffs) }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::new(coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly { coeffs: vec![BigRational::one()] }
    }

    pub fn constant_poly(c: BigRational) -> Self {
        RatPoly::new(vec![c])
    }

    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant(&self) -> BigRational {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from(BigInt::from(i + 1)))
                .collect(),
        )
    }

    pub fn monic(&self) -> RatPoly {
        if self.is_zero() {
            return RatPoly::zero();
        }
        let lc = self.leading();
        RatPoly::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    /// Quotient and remainder by a nonzero divisor.
    pub fn divrem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let lc = d.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let c = top / &lc;
            let shift = r.len() - dd;
            for i in 0..dd {
                let t = &c * &d.coeffs[i];
                r[shift + i] -= t;
            }
            q[shift] = c;
        }
        (RatPoly::new(q), RatPoly::new(r))
    }

    pub fn exact_div(&self, d: &RatPoly) -> RatPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn divides(&self, other: &RatPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).1.is_zero()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic (or zero).
    pub fn xgcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let mut r0 = self.clone();
        let mut r1 = other.clone();
        let mut s0 = RatPoly::one();
        let mut s1 = RatPoly::zero();
        let mut t0 = RatPoly::zero();
        let mut t1 = RatPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc = r0.leading();
        let inv = RatPoly::constant_poly(BigRational::one() / lc);
        (&r0 * &inv, &s0 * &inv, &t0 * &inv)
    }

    /// Clear denominators and content: returns (p, c) with `self = c * p`,
    /// `p` a primitive integer polynomial with positive leading coefficient.
    /// The same polynomial over Z, if every coefficient is an integer.
    pub fn to_int_exact(&self) -> Option<IntPoly> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.denom().is_one() {
                return None;
            }
            v.push(c.numer().clone());
        }
        Some(IntPoly::new(v))
    }

    pub fn to_primitive_int(&self) -> (IntPoly, BigRational) {
        if self.is_zero() {
            return (IntPoly::zero(), BigRational::zero());
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from(den.clone())).to_integer()).collect();
        let p = IntPoly::new(ints);
        let cont = p.content();
        let prim = p.primitive_part();
        (prim, BigRational::new(cont, den))
    }

    pub fn reverse(&self) -> RatPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        RatPoly::new(v)
    }

    /// Monic reciprocal T^d f(1/T) / f(0); requires f(0) != 0.
    pub fn reciprocal_monic(&self) -> Result<RatPoly> {
        if self.is_zero() || self.constant().is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let c0 = self.constant();
        let rev = self.reverse();
        Ok(RatPoly::new(rev.coeffs.iter().map(|a| a / &c0).collect()))
    }

    pub fn pow(&self, mut e: u32) -> RatPoly {
        let mut base = self.clone();
        let mut acc = RatPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute T -> T + a.
    pub fn shift_arg(&self, a: &BigRational) -> RatPoly {
        let lin = RatPoly::new(vec![a.clone(), BigRational::one()]);
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &RatPoly::constant_poly(c.clone());
        }
        acc
    }

    /// Substitute T -> a*T.
    pub fn scale_arg(&self, a: &BigRational) -> RatPoly {
        let mut pw = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw *= a;
        }
        RatPoly::new(out)
    }
}

macro_rules! impl_poly_ops {
    ($ty:ident, $coef:ty, $zero:expr) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut v = Vec::with_capacity(n);
                for i in 0..n {
                    let mut c: $coef = $zero;
                    if let Some(a) = self.coeffs.get(i) {
                        c += a;
                    }
                    if let Some(b) = rhs.coeffs.get(i) {
                        c += b;
                    }
                    v.push(c);
                }
                $ty::new(v)
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut v = Vec::with_capacity(n);
                for i in 0..n {
                    let mut c: $coef = $zero;
                    if let Some(a) = self.coeffs.get(i) {
                        c += a;
                    }
                    if let Some(b) = rhs.coeffs.get(i) {
                        c -= b;
                    }
                    v.push(c);
                }
                $ty::new(v)
            }
        }
        impl Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: &$ty) -> $ty {
                if self.is_zero() || rhs.is_zero() {
                    return $ty::new(vec![]);
                }
                let mut v = vec![$zero; self.coeffs.len() + rhs.coeffs.len() - 1];
                for (i, a) in self.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in rhs.coeffs.iter().enumerate() {
                        v[i + j] += a * b;
                    }
                }
                $ty::new(v)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                $ty::new(self.coeffs.iter().map(|c| -c.clone()).collect())
            }
        }
    };
}

impl_poly_ops!(IntPoly, BigInt, BigInt::zero());
impl_poly_ops!(RatPoly, BigRational, BigRational::zero());

fn fmt_poly<C: fmt::Display + Zero>(coeffs: &[C], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        match i {
            0 => write!(f, "{}", c)?,
            1 => write!(f, "({})*T", c)?,
            _ => write!(f, "({})*T^{}", c, i)?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_poly(&self.coeffs, f)
    }
}

/// Monic gcd over Q, computed by a primitive polynomial remainder sequence
/// over Z to keep coefficients small.
pub fn gcd_over_q(f: &RatPoly, g: &RatPoly) -> Result<RatPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::DegenerateInput("gcd of two zero polynomials"));
    }
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    let (mut a, _) = f.to_primitive_int();
    let (mut b, _) = g.to_primitive_int();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = r.primitive_part();
    }
    Ok(a.to_rat().monic())
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed over Z.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().unwrap();
    let lc = b.leading();
    let mut r = a.coeffs.clone();
    if r.len() <= db {
        return a.clone();
    }
    let steps = r.len() - db;
    for _ in 0..steps {
        let top = r.pop().unwrap();
        for c in r.iter_mut() {
            *c *= &lc;
        }
        if !top.is_zero() {
            let shift = r.len() - db;
            for i in 0..db {
                let t = &top * &b.coeffs[i];
                r[shift + i] -= t;
            }
        }
    }
    IntPoly::new(r)
}

/// Exact m-th root of a rational polynomial, by coefficient comparison
/// from the lowest degree upward. Normalized so that g(0) = 1 when c(0) = 1,
/// and g(0) > 0 otherwise when m is even.
pub fn mth_root(c: &RatPoly, m: u32) -> Result<RatPoly> {
    if m == 0 {
        return Err(Error::DegenerateInput("0-th root"));
    }
    if c.is_zero() {
        return Err(Error::DegenerateInput("m-th root of zero polynomial"));
    }
    if m == 1 {
        return Ok(c.clone());
    }
    let deg = c.degree().unwrap();
    if deg % (m as usize) != 0 {
        return Err(Error::NotAPerfectPower(m));
    }
    // Strip a power of T if the constant term vanishes.
    let val = c.coeffs.iter().position(|x| !x.is_zero()).unwrap();
    if val > 0 {
        if val % (m as usize) != 0 {
            return Err(Error::NotAPerfectPower(m));
        }
        let stripped = RatPoly::new(c.coeffs[val..].to_vec());
        let root = mth_root(&stripped, m)?;
        return Ok(&root * &RatPoly::monomial(val / m as usize));
    }
    let g0 = rational_mth_root(&c.constant(), m).ok_or(Error::NotAPerfectPower(m))?;
    let dg = deg / m as usize;
    let mut g = vec![BigRational::zero(); dg + 1];
    g[0] = g0.clone();
    // Coefficient of T^k in g^m is m*g0^(m-1)*g_k + (terms in g_1..g_{k-1}).
    let lead = BigRational::from(BigInt::from(m)) * g0.pow((m - 1) as i32);
    for k in 1..=dg {
        let partial = RatPoly::new(g[..k].to_vec()).pow(m);
        let known = partial.coeff(k);
        g[k] = (c.coeff(k) - known) / &lead;
    }
    let g = RatPoly::new(g);
    if g.pow(m) == *c {
        Ok(g)
    } else {
        Err(Error::NotAPerfectPower(m))
    }
}

fn rational_mth_root(x: &BigRational, m: u32) -> Option<BigRational> {
    if x.is_zero() {
        return Some(BigRational::zero());
    }
    if x.is_negative() && m % 2 == 0 {
        return None;
    }
    let n = integer_mth_root(x.numer(), m)?;
    let d = integer_mth_root(x.denom(), m)?;
    Some(BigRational::new(n, d))
}

fn integer_mth_root(x: &BigInt, m: u32) -> Option<BigInt> {
    if x.is_zero() {
        return Some(BigInt::zero());
    }
    let neg = x.is_negative();
    if neg && m % 2 == 0 {
        return None;
    }
    let ax = x.abs();
    let r = ax.nth_root(m);
    if num::pow::pow(r.clone(), m as usize) == ax {
        Some(if neg { -r } else { r })
    } else {
        None
    }
}

/// The n-th cyclotomic polynomial, by iterated exact division of T^n - 1.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut num = {
        // T^n - 1
        let mut v = vec![BigInt::zero(); n as usize + 1];
        v[0] = -BigInt::one();
        v[n as usize] = BigInt::one();
        IntPoly::new(v)
    }
    .to_rat();
    for d in 1..n {
        if n % d == 0 {
            num = num.exact_div(&cyclotomic(d).to_rat());
        }
    }
    let (p, _) = num.to_primitive_int();
    p
}

/// Power sums s_1..s_k of the reciprocal roots of `c` (the roots of the
/// reversed polynomial), via Newton's identities on the normalized
/// coefficients a_i / a_0. Requires c(0) != 0.
pub fn power_sums_of_reciprocal_roots(c: &RatPoly, k: usize) -> Result<Vec<BigRational>> {
    if c.is_zero() || c.constant().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let c0 = c.constant();
    let d = c.degree().unwrap();
    let a: Vec<BigRational> = (0..=d).map(|i| c.coeff(i) / &c0).collect();
    let mut s: Vec<BigRational> = Vec::with_capacity(k + 1);
    s.push(BigRational::from(BigInt::from(d))); // s_0 = number of roots
    for r in 1..=k {
        // s_r + a_1 s_{r-1} + ... + a_{r-1} s_1 + r a_r = 0
        let mut acc = if r <= d {
            BigRational::from(BigInt::from(r as i64)) * &a[r]
        } else {
            BigRational::zero()
        };
        for i in 1..r {
            if i <= d {
                acc += &a[i] * &s[r - i];
            }
        }
        s.push(-acc);
    }
    s.remove(0);
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(v: &[i64]) -> RatPoly {
        RatPoly::from_i64(v)
    }

    #[test]
    fn gcd_shared_root() {
        // gcd(T^2 - 1, T - 1) = T - 1
        let g = gcd_over_q(&rp(&[-1, 0, 1]), &rp(&[-1, 1])).unwrap();
        assert_eq!(g, rp(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        let g = gcd_over_q(&rp(&[1, 0, 1]), &rp(&[-2, 0, 1])).unwrap();
        assert_eq!(g, rp(&[1]));
    }

    #[test]
    fn gcd_multiple_factors() {
        // gcd((T-1)^2 (T+2), (T-1)(T+3)) = T - 1
        let a = &rp(&[-1, 1]).pow(2) * &rp(&[2, 1]);
        let b = &rp(&[-1, 1]) * &rp(&[3, 1]);
        assert_eq!(gcd_over_q(&a, &b).unwrap(), rp(&[-1, 1]));
    }

    #[test]
    fn gcd_both_zero_is_error() {
        assert!(gcd_over_q(&RatPoly::zero(), &RatPoly::zero()).is_err());
    }

    #[test]
    fn reciprocal_examples() {
        // 1 - 2T + 19T^2 -> T^2 - 2T + 19
        let c = IntPoly::from_i64(&[1, -2, 19]);
        assert_eq!(c.reciprocal_monic().unwrap(), rp(&[19, -2, 1]));
        // 1 + 7T + 37T^2 -> T^2 + 7T + 37
        let c = IntPoly::from_i64(&[1, 7, 37]);
        assert_eq!(c.reciprocal_monic().unwrap(), rp(&[37, 7, 1]));
        // degree 0
        assert_eq!(IntPoly::one().reciprocal_monic().unwrap(), RatPoly::one());
    }

    #[test]
    fn reciprocal_zero_constant_term() {
        assert!(IntPoly::from_i64(&[0, 1]).reciprocal_monic().is_err());
    }

    #[test]
    fn mth_root_examples() {
        let g = rp(&[1, 1]);
        assert_eq!(mth_root(&g.pow(2), 2).unwrap(), g);
        let g19 = rp(&[1, -2, 19]);
        assert_eq!(mth_root(&g19.pow(4), 4).unwrap(), g19);
        assert!(mth_root(&rp(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn mth_root_degree_not_divisible() {
        assert!(mth_root(&rp(&[1, 1, 1, 1]), 2).is_err());
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn cyclotomic_product_identity() {
        for n in [6u64, 8, 10, 12] {
            let mut prod = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = &prod * &cyclotomic(d);
                }
            }
            let mut v = vec![BigInt::zero(); n as usize + 1];
            v[0] = -BigInt::one();
            v[n as usize] = BigInt::one();
            assert_eq!(prod, IntPoly::new(v));
        }
    }

    #[test]
    fn reciprocal_involution() {
        let c = IntPoly::from_i64(&[3, -2, 0, 5]);
        let once = c.reciprocal_monic().unwrap();
        let twice = once.reciprocal_monic().unwrap();
        assert_eq!(twice, c.to_rat().monic());
    }

    #[test]
    fn power_sums_basic() {
        // reciprocal roots of 1 - 3T + 2T^2 = (1-T)(1-2T) are 1 and 2
        let c = rp(&[1, -3, 2]);
        let s = power_sums_of_reciprocal_roots(&c, 3).unwrap();
        assert_eq!(s[0], BigRational::from(BigInt::from(3)));
        assert_eq!(s[1], BigRational::from(BigInt::from(5)));
        assert_eq!(s[2], BigRational::from(BigInt::from(9)));
    }
}
