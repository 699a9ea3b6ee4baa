//! Small exact linear algebra over Q, enough for minimal polynomials and
//! subfield span computations.

use num::{BigRational, One, Zero};

/// Row-echelon basis of a growing subspace of Q^n.
pub(crate) struct RowBasis {
    n: usize,
    rows: Vec<Vec<BigRational>>,
    pivots: Vec<usize>,
}

impl RowBasis {
    pub fn new(n: usize) -> Self {
        RowBasis { n, rows: vec![], pivots: vec![] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for j in 0..self.n {
                    let t = &c * &row[j];
                    v[j] -= t;
                }
            }
        }
        v
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &[BigRational]) -> bool {
        assert_eq!(v.len(), self.n);
        let mut v = self.reduce(v.to_vec());
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = BigRational::one() / v[p].clone();
        for c in v.iter_mut() {
            *c *= &inv;
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    #[allow(dead_code)]
    pub fn contains(&self, v: &[BigRational]) -> bool {
        self.reduce(v.to_vec()).iter().all(|c| c.is_zero())
    }
}

/// Solve sum_j x_j * cols[j] = target exactly; `None` if inconsistent.
pub(crate) fn solve_linear(
    cols: &[Vec<BigRational>],
    target: &[BigRational],
) -> Option<Vec<BigRational>> {
    let n = target.len();
    let k = cols.len();
    // Augmented matrix, n rows by k+1 columns.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0usize;
    for col in 0..k {
        let Some(r) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, r);
        let inv = BigRational::one() / m[row][col].clone();
        for j in col..=k {
            m[row][j] *= &inv;
        }
        for r2 in 0..n {
            if r2 != row && !m[r2][col].is_zero() {
                let c = m[r2][col].clone();
                for j in col..=k {
                    let t = &c * &m[row][j];
                    m[r2][j] -= t;
                }
            }
        }
        pivot_rows.push((row, col));
        row += 1;
    }
    // Inconsistent if any zero row has nonzero rhs.
    for r in row..n {
        if !m[r][k].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); k];
    for &(r, c) in &pivot_rows {
        x[c] = m[r][k].clone();
    }
    // With free variables set to zero this is a valid solution only if
    // substituting back works; verify.
    for i in 0..n {
        let mut acc = BigRational::zero();
        for j in 0..k {
            acc += &x[j] * &cols[j][i];
        }
        if acc != target[i] {
            return None;
        }
    }
    Some(x)
}
