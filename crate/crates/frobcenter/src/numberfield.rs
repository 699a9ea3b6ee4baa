//! Number fields Q[x]/(f) with exact element arithmetic, minimal
//! polynomials, subfield generation, root finding, isomorphism testing,
//! and Trager factorization of polynomials with number-field coefficients.

use crate::error::{Error, Result};
use crate::linalg::{solve_linear, RowBasis};
use crate::polyq::{factor_over_q, gcd_over_q, resultant_bivariate, IntPoly, RatPoly};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

struct NfInner {
    poly: IntPoly,
    poly_rat: RatPoly,
    degree: usize,
}

/// A number field presented as Q[x]/(f) for a monic irreducible integer
/// polynomial f. Cheap to clone; safe to share across threads.
#[derive(Clone)]
pub struct NumberField(Arc<NfInner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.poly == other.0.poly
    }
}
impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.0.poly)
    }
}

impl NumberField {
    /// Construct from a monic integer polynomial, verifying irreducibility.
    pub fn new(poly: IntPoly) -> Result<Self> {
        if !poly.is_monic() || poly.degree().map_or(true, |d| d == 0) {
            return Err(Error::InvalidInput(format!(
                "defining polynomial must be monic of positive degree, got {}",
                poly
            )));
        }
        if poly.degree() != Some(1) {
            let fac = factor_over_q(&poly.to_rat())?;
            if !fac.is_irreducible() {
                return Err(Error::InvalidInput(format!(
                    "defining polynomial {} is reducible over Q",
                    poly
                )));
            }
        }
        Ok(Self::new_unchecked(poly))
    }

    pub(crate) fn new_unchecked(poly: IntPoly) -> Self {
        let degree = poly.degree().expect("nonzero polynomial");
        let poly_rat = poly.to_rat();
        NumberField(Arc::new(NfInner { poly, poly_rat, degree }))
    }

    /// The rationals, presented as Q[x]/(x).
    pub fn rationals() -> Self {
        Self::new_unchecked(IntPoly::from_i64(&[0, 1]))
    }

    /// Construct from a monic irreducible rational polynomial by scaling
    /// the generator (x -> x/d) to clear denominators. Returns the field
    /// and the scale d: the new generator equals d times a root of `g`.
    pub fn from_monic_rational(g: &RatPoly) -> Result<(Self, BigInt)> {
        if !g.is_monic() {
            return Err(Error::InvalidInput("defining polynomial must be monic".into()));
        }
        let n = g.degree().unwrap();
        let mut d = BigInt::one();
        for c in g.coeffs() {
            d = d.lcm(c.denom());
        }
        let scaled = RatPoly::new(
            (0..=n)
                .map(|i| g.coeff(i) * BigRational::from(num::pow::pow(d.clone(), n - i)))
                .collect(),
        );
        let (ip, unit) = scaled.to_primitive_int();
        debug_assert!(unit.is_one() && ip.is_monic());
        Ok((Self::new(ip)?, d))
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.0.poly
    }

    pub(crate) fn defining_poly_rat(&self) -> &RatPoly {
        &self.0.poly_rat
    }

    pub fn is_rationals(&self) -> bool {
        self.0.degree == 1
    }

    pub fn zero(&self) -> NFElem {
        NFElem::from_coords(self.clone(), vec![])
    }

    pub fn one(&self) -> NFElem {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, c: BigRational) -> NFElem {
        NFElem::from_coords(self.clone(), vec![c])
    }

    pub fn generator(&self) -> NFElem {
        if self.degree() == 1 {
            // x - c: the generator is the rational number c
            let c = -self.0.poly_rat.coeff(0);
            return self.from_rational(c);
        }
        NFElem::from_coords(self.clone(), vec![BigRational::zero(), BigRational::one()])
    }

    /// Evaluate a rational polynomial at an element of this field.
    pub fn eval_ratpoly(&self, f: &RatPoly, at: &NFElem) -> NFElem {
        let mut acc = self.zero();
        for c in f.coeffs().iter().rev() {
            acc = &(&acc * at) + &self.from_rational(c.clone());
        }
        acc
    }
}

/// An element of a number field: a rational coordinate vector of length
/// equal to the field degree, in the power basis of the generator.
#[derive(Clone)]
pub struct NFElem {
    field: NumberField,
    coords: Vec<BigRational>,
}

impl PartialEq for NFElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coords == other.coords
    }
}
impl Eq for NFElem {}

impl fmt::Debug for NFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", RatPoly::new(self.coords.clone()))
    }
}

impl NFElem {
    pub(crate) fn from_coords(field: NumberField, mut coords: Vec<BigRational>) -> Self {
        let n = field.degree();
        coords.resize(n, BigRational::zero());
        NFElem { field, coords }
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.field.degree() == 1 {
            // element c0 * gen^0? degree-1 field: coords length 1, the
            // element is coords[0] itself only when the defining poly is x.
            // In general the power basis of a degree-1 field is {1}.
            return Some(self.coords[0].clone());
        }
        if self.is_rational() {
            Some(self.coords[0].clone())
        } else {
            None
        }
    }

    fn check_same_field(&self, other: &NFElem) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MismatchedFields)
        }
    }

    pub fn try_add(&self, other: &NFElem) -> Result<NFElem> {
        self.check_same_field(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &NFElem) -> Result<NFElem> {
        self.check_same_field(other)?;
        Ok(self - other)
    }

    pub fn try_mul(&self, other: &NFElem) -> Result<NFElem> {
        self.check_same_field(other)?;
        Ok(self * other)
    }

    pub fn try_div(&self, other: &NFElem) -> Result<NFElem> {
        self.check_same_field(other)?;
        Ok(self * &other.inv()?)
    }

    /// Multiplicative inverse via extended Euclid against the defining
    /// polynomial.
    pub fn inv(&self) -> Result<NFElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = RatPoly::new(self.coords.clone());
        let f = self.field.defining_poly_rat();
        let (g, s, _) = a.xgcd(f);
        debug_assert_eq!(g.degree(), Some(0));
        let inv = s.exact_div(&RatPoly::constant_poly(g.coeff(0)));
        let (_, r) = inv.divrem(f);
        Ok(NFElem::from_coords(self.field.clone(), r.coeffs().to_vec()))
    }

    pub fn pow(&self, mut e: u64) -> NFElem {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> NFElem {
        NFElem::from_coords(self.field.clone(), self.coords.iter().map(|x| x * c).collect())
    }

    /// Monic minimal polynomial over Q, found as the lowest-degree monic
    /// dependency among the powers 1, a, a^2, ... via exact linear algebra.
    pub fn minimal_polynomial(&self) -> RatPoly {
        let n = self.field.degree();
        let mut powers: Vec<Vec<BigRational>> = vec![self.field.one().coords.clone()];
        let mut cur = self.field.one();
        for k in 1..=n {
            cur = &cur * self;
            if let Some(x) = solve_linear(&powers, &cur.coords) {
                let mut coeffs: Vec<BigRational> = x.iter().map(|c| -c.clone()).collect();
                coeffs.push(BigRational::one());
                return RatPoly::new(coeffs);
            }
            powers.push(cur.coords.clone());
            let _ = k;
        }
        unreachable!("a^n must depend on lower powers in a degree-n field")
    }
}

impl Add for &NFElem {
    type Output = NFElem;
    fn add(self, rhs: &NFElem) -> NFElem {
        assert!(self.field == rhs.field, "elements of different number fields");
        NFElem::from_coords(
            self.field.clone(),
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        )
    }
}

impl Sub for &NFElem {
    type Output = NFElem;
    fn sub(self, rhs: &NFElem) -> NFElem {
        assert!(self.field == rhs.field, "elements of different number fields");
        NFElem::from_coords(
            self.field.clone(),
            self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        )
    }
}

impl Mul for &NFElem {
    type Output = NFElem;
    fn mul(self, rhs: &NFElem) -> NFElem {
        assert!(self.field == rhs.field, "elements of different number fields");
        let a = RatPoly::new(self.coords.clone());
        let b = RatPoly::new(rhs.coords.clone());
        let (_, r) = (&a * &b).divrem(self.field.defining_poly_rat());
        NFElem::from_coords(self.field.clone(), r.coeffs().to_vec())
    }
}

impl Neg for &NFElem {
    type Output = NFElem;
    fn neg(self) -> NFElem {
        NFElem::from_coords(self.field.clone(), self.coords.iter().map(|c| -c.clone()).collect())
    }
}

/// A polynomial with coefficients in a number field, ascending, trimmed.
#[derive(Clone, PartialEq, Eq)]
pub struct NFPoly {
    field: NumberField,
    coeffs: Vec<NFElem>,
}

impl fmt::Debug for NFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({:?})*T^{}", c, i))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl NFPoly {
    pub fn new(field: NumberField, mut coeffs: Vec<NFElem>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        NFPoly { field, coeffs }
    }

    pub fn zero(field: NumberField) -> Self {
        NFPoly { field, coeffs: vec![] }
    }

    pub fn one(field: NumberField) -> Self {
        let c = field.one();
        NFPoly { field, coeffs: vec![c] }
    }

    pub fn from_ratpoly(field: &NumberField, f: &RatPoly) -> Self {
        NFPoly::new(
            field.clone(),
            f.coeffs().iter().map(|c| field.from_rational(c.clone())).collect(),
        )
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[NFElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> NFElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> NFElem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.as_rational().map_or(false, |r| r.is_one()))
    }

    pub fn monic(&self) -> Result<NFPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let inv = self.leading().inv()?;
        Ok(NFPoly::new(
            self.field.clone(),
            self.coeffs.iter().map(|c| c * &inv).collect(),
        ))
    }

    pub fn add(&self, rhs: &NFPoly) -> NFPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NFPoly::new(
            self.field.clone(),
            (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect(),
        )
    }

    pub fn sub(&self, rhs: &NFPoly) -> NFPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        NFPoly::new(
            self.field.clone(),
            (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, rhs: &NFPoly) -> NFPoly {
        if self.is_zero() || rhs.is_zero() {
            return NFPoly::zero(self.field.clone());
        }
        let mut v = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        NFPoly::new(self.field.clone(), v)
    }

    pub fn divrem(&self, d: &NFPoly) -> Result<(NFPoly, NFPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let inv_lc = d.leading().inv()?;
        let mut r: Vec<NFElem> = self.coeffs.clone();
        let mut q = vec![self.field.zero(); r.len().saturating_sub(dd)];
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let c = &top * &inv_lc;
            let shift = r.len() - dd;
            for i in 0..dd {
                r[shift + i] = &r[shift + i] - &(&c * &d.coeffs[i]);
            }
            q[shift] = c;
        }
        Ok((NFPoly::new(self.field.clone(), q), NFPoly::new(self.field.clone(), r)))
    }

    pub fn exact_div(&self, d: &NFPoly) -> Result<NFPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &NFPoly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.divrem(self).map_or(false, |(_, r)| r.is_zero())
    }

    pub fn gcd(&self, rhs: &NFPoly) -> Result<NFPoly> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> NFPoly {
        if self.coeffs.len() <= 1 {
            return NFPoly::zero(self.field.clone());
        }
        NFPoly::new(
            self.field.clone(),
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&BigRational::from(BigInt::from(i + 1))))
                .collect(),
        )
    }

    pub fn eval(&self, at: &NFElem) -> NFElem {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Substitute T -> T + a.
    pub fn shift_arg(&self, a: &NFElem) -> NFPoly {
        let lin = NFPoly::new(
            self.field.clone(),
            vec![a.clone(), self.field.one()],
        );
        let mut acc = NFPoly::zero(self.field.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&NFPoly::new(self.field.clone(), vec![c.clone()]));
        }
        acc
    }

    /// The rational polynomial with the same coefficients, if all of them
    /// are rational.
    pub fn to_ratpoly(&self) -> Option<RatPoly> {
        let mut v = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            v.push(c.as_rational()?);
        }
        Some(RatPoly::new(v))
    }

    pub fn pow(&self, mut e: u32) -> NFPoly {
        let mut base = self.clone();
        let mut acc = NFPoly::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Deterministic total order on polynomials over a fixed field:
/// by degree, then coefficient coordinates lexicographically.
pub(crate) fn cmp_nfpoly(a: &NFPoly, b: &NFPoly) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
            let o = x.coords().cmp(y.coords());
            if o != std::cmp::Ordering::Equal {
                return o;
            }
        }
        std::cmp::Ordering::Equal
    })
}

/// Norm down to Q of a polynomial over a number field: the product of the
/// conjugates of `h`, computed exactly as the resultant in x of the
/// defining polynomial against h with its coefficients written as
/// polynomials in x.
pub(crate) fn norm_to_q(h: &NFPoly) -> RatPoly {
    let field = h.field();
    let n = field.degree();
    // A(x) = defining polynomial, coefficients constant in T.
    let a: Vec<RatPoly> = field
        .defining_poly_rat()
        .coeffs()
        .iter()
        .map(|c| RatPoly::constant_poly(c.clone()))
        .collect();
    // B(x) with coefficient of x^i the polynomial sum_j h_j[i] T^j.
    let deg_t = h.degree().unwrap_or(0);
    let mut b: Vec<RatPoly> = Vec::with_capacity(n);
    for i in 0..n {
        let coeffs: Vec<BigRational> = (0..=deg_t).map(|j| h.coeff(j).coords()[i].clone()).collect();
        b.push(RatPoly::new(coeffs));
    }
    resultant_bivariate(&a, &b)
}

/// Complete factorization into monic irreducibles over the coefficient
/// field, via Trager's norm reduction to factorization over Q.
pub fn trager_factor(h: &NFPoly) -> Result<Vec<(NFPoly, u32)>> {
    if h.is_zero() {
        return Err(Error::DegenerateInput("cannot factor the zero polynomial"));
    }
    let hm = h.monic()?;
    if hm.degree() == Some(0) {
        return Ok(vec![]);
    }
    let mut out: Vec<(NFPoly, u32)> = Vec::new();
    for (part, mult) in nf_squarefree(&hm)? {
        for w in trager_squarefree(&part)? {
            out.push((w, mult));
        }
    }
    out.sort_by(|a, b| cmp_nfpoly(&a.0, &b.0));
    Ok(out)
}

/// Yun's algorithm over K[T] (characteristic zero).
fn nf_squarefree(f: &NFPoly) -> Result<Vec<(NFPoly, u32)>> {
    let df = f.derivative();
    let g = f.gcd(&df)?;
    if g.degree() == Some(0) {
        return Ok(vec![(f.clone(), 1)]);
    }
    let mut w = f.exact_div(&g)?;
    let mut z = df.exact_div(&g)?.sub(&w.derivative());
    let mut out = Vec::new();
    let mut i = 1u32;
    while w.degree().map_or(false, |d| d > 0) {
        let h = w.gcd(&z)?;
        if h.degree().map_or(false, |d| d > 0) {
            out.push((h.clone(), i));
        }
        w = w.exact_div(&h)?;
        z = z.exact_div(&h)?.sub(&w.derivative());
        i += 1;
    }
    Ok(out)
}

fn trager_squarefree(u: &NFPoly) -> Result<Vec<NFPoly>> {
    let field = u.field().clone();
    if u.degree() == Some(1) {
        return Ok(vec![u.clone()]);
    }
    if field.is_rationals() {
        let f = u.to_ratpoly().expect("degree-1 field elements are rational");
        let fac = factor_over_q(&f)?;
        return Ok(fac
            .factors
            .into_iter()
            .map(|(g, _)| NFPoly::from_ratpoly(&field, &g))
            .collect());
    }
    let gen = field.generator();
    // Shift by s*alpha until the norm is squarefree: s = 0, 1, -1, 2, -2, ...
    let mut shift_seq: Vec<i64> = vec![0];
    for k in 1..=64i64 {
        shift_seq.push(k);
        shift_seq.push(-k);
    }
    for s in shift_seq {
        let sa = gen.scale(&BigRational::from(BigInt::from(-s)));
        let v = u.shift_arg(&sa); // v(T) = u(T - s*alpha)
        let norm = norm_to_q(&v);
        let dn = norm.derivative();
        let g = gcd_over_q(&norm, &dn)?;
        if g.degree() != Some(0) {
            continue;
        }
        let fac = factor_over_q(&norm)?;
        if fac.factors.len() == 1 {
            return Ok(vec![u.clone()]);
        }
        let back = gen.scale(&BigRational::from(BigInt::from(s)));
        let mut out = Vec::new();
        let mut total = 0usize;
        for (ni, _) in &fac.factors {
            let ni_nf = NFPoly::from_ratpoly(&field, ni);
            let w = v.gcd(&ni_nf)?;
            let d = w.degree().unwrap_or(0);
            if d > 0 {
                total += d;
                out.push(w.shift_arg(&back));
            }
        }
        debug_assert_eq!(total, u.degree().unwrap());
        return Ok(out);
    }
    unreachable!("no squarefree shift found; only finitely many shifts can be bad")
}

/// All roots of a rational polynomial lying in K, as the linear factors
/// of the Trager factorization of f over K.
pub fn roots_in_field(k: &NumberField, f: &RatPoly) -> Result<Vec<NFElem>> {
    if f.is_zero() {
        return Err(Error::DegenerateInput("root finding for the zero polynomial"));
    }
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    let fk = NFPoly::from_ratpoly(k, &f.monic());
    let mut roots = Vec::new();
    for (g, _) in trager_factor(&fk)? {
        if g.degree() == Some(1) {
            roots.push(-&g.coeff(0));
        }
    }
    Ok(roots)
}

/// Number field isomorphism test: equal degrees and the defining
/// polynomial of one has a root in the other.
pub fn is_isomorphic(l1: &NumberField, l2: &NumberField) -> Result<bool> {
    if l1.degree() != l2.degree() {
        return Ok(false);
    }
    if l1.degree() == 1 {
        return Ok(true);
    }
    Ok(!roots_in_field(l2, &l1.defining_poly().to_rat())?.is_empty())
}

/// The subfield of K generated over Q by `elems`, returned as an abstract
/// number field L together with the image in K of L's generator.
pub fn subfield_generated(k: &NumberField, elems: &[NFElem]) -> Result<(NumberField, NFElem)> {
    for e in elems {
        if e.field() != k {
            return Err(Error::MismatchedFields);
        }
    }
    let n = k.degree();
    // Close the span of {1} and elems under multiplication.
    let mut basis = RowBasis::new(n);
    let mut basis_elems: Vec<NFElem> = Vec::new();
    let one = k.one();
    basis.insert(one.coords());
    basis_elems.push(one);
    for e in elems {
        if basis.insert(e.coords()) {
            basis_elems.push(e.clone());
        }
    }
    loop {
        let len = basis_elems.len();
        let mut grew = false;
        'pairs: for i in 0..len {
            for j in i..len {
                let p = &basis_elems[i] * &basis_elems[j];
                if basis.insert(p.coords()) {
                    basis_elems.push(p);
                    grew = true;
                    break 'pairs;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let dim = basis.dim();
    if dim == 1 {
        return Ok((NumberField::rationals(), k.zero()));
    }
    // Primitive element: integer combinations of elems, enumerated by
    // max-norm then lexicographically.
    let kk = elems.len() as u32;
    for radius in 1..=16i64 {
        let width = 2 * radius + 1;
        let total = num::pow::pow(width as u128, kk as usize);
        for idx in 0..total {
            let mut combo = Vec::with_capacity(kk as usize);
            let mut rem = idx;
            for _ in 0..kk {
                combo.push((rem % width as u128) as i64 - radius);
                rem /= width as u128;
            }
            combo.reverse();
            if combo.iter().map(|c| c.abs()).max() != Some(radius) {
                continue; // covered at a smaller radius
            }
            let mut theta = k.zero();
            for (c, e) in combo.iter().zip(elems) {
                theta = &theta + &e.scale(&BigRational::from(BigInt::from(*c)));
            }
            let mu = theta.minimal_polynomial();
            if mu.degree() == Some(dim) {
                return finish_subfield(&theta, &mu);
            }
        }
    }
    unreachable!("primitive element search exhausted; bad coefficient vectors are confined to finitely many hyperplanes")
}

fn finish_subfield(theta: &NFElem, mu: &RatPoly) -> Result<(NumberField, NFElem)> {
    let (l, scale) = NumberField::from_monic_rational(mu)?;
    let gen_image = theta.scale(&BigRational::from(scale));
    Ok((l, gen_image))
}

/// Write `c` as a polynomial of degree < dim in `gen_image`; `None` if `c`
/// does not lie in the subfield generated by `gen_image`.
pub(crate) fn express_in_powers(
    gen_image: &NFElem,
    dim: usize,
    c: &NFElem,
) -> Option<Vec<BigRational>> {
    let mut cols = Vec::with_capacity(dim);
    let mut cur = gen_image.field().one();
    for _ in 0..dim {
        cols.push(cur.coords().to_vec());
        cur = &cur * gen_image;
    }
    solve_linear(&cols, c.coords())
}
