//! Polynomial arithmetic over the prime field F_p for machine-sized p.
//! Internal helper shared by the rational factorization engine and the
//! point-counting module.

/// Dense polynomial over F_p, coefficients in [0, p), ascending, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct FpPoly {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

pub(crate) fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            v[i] = addm(a, b, p);
        }
        FpPoly::new(p, v)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            v[i] = subm(a, b, p);
        }
        FpPoly::new(p, v)
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(p);
        }
        let mut v = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = addm(v[i + j], mulm(a, b, p), p);
            }
        }
        FpPoly::new(p, v)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let p = self.p;
        FpPoly::new(p, self.coeffs.iter().map(|&a| mulm(a, c, p)).collect())
    }

    pub fn make_monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(invm(self.leading(), self.p))
    }

    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!d.is_zero());
        let p = self.p;
        let dd = d.degree().unwrap();
        let inv_lc = invm(d.leading(), p);
        let mut r = self.coeffs.clone();
        let qlen = self.coeffs.len().saturating_sub(dd);
        let mut q = vec![0u64; qlen];
        while r.len() > dd {
            let top = r.pop().unwrap();
            if top == 0 {
                continue;
            }
            let c = mulm(top, inv_lc, p);
            let shift = r.len() - dd;
            for i in 0..dd {
                r[shift + i] = subm(r[shift + i], mulm(c, d.coeffs[i], p), p);
            }
            q[shift] = c;
        }
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> FpPoly {
        let p = self.p;
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(p);
        }
        FpPoly::new(
            p,
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| mulm(c, (i as u64 + 1) % p, p))
                .collect(),
        )
    }

    /// self^e mod m.
    pub fn powmod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// x^(p^k) mod m, by repeated p-th powering.
    pub fn frobenius_power(m: &FpPoly, k: u32) -> FpPoly {
        let mut x = FpPoly::x(m.p).rem(m);
        for _ in 0..k {
            x = x.powmod(m.p, m);
        }
        x
    }

    /// Irreducibility over F_p: x^(p^n) = x mod f and gcd(x^(p^k) - x, f) = 1
    /// for every k <= n/2.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(0) | None => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let f = self.make_monic();
        let x = FpPoly::x(self.p).rem(&f);
        let mut xp = x.clone();
        for k in 1..=n {
            xp = xp.powmod(self.p, &f);
            if k <= n / 2 {
                let g = f.gcd(&xp.sub(&x));
                if g.degree() != Some(0) {
                    return false;
                }
            }
        }
        xp == x
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
