//! Exact rational dense linear algebra and fraction-free polynomial
//! determinants.
//!
//! `RationalMatrix` supports rank, null space and skew-symmetry checks via
//! exact Gauss-Jordan elimination. `PolyMatrix` computes determinants of
//! square matrices of polynomials: cofactor expansion for size <= 3,
//! fraction-free Bareiss elimination for size >= 4 (every intermediate
//! division is exact).

use crate::poly::{Polynomial, Rational};
use num_traits::{One, Zero};

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry grid must be rows*cols");
        RationalMatrix { rows, cols, entries }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        RationalMatrix::new(
            rows,
            cols,
            entries.iter().map(|&v| Rational::from_integer(v.into())).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // first nonzero entry at or below `row` is the pivot
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let a = m.get(row, j).clone();
                let b = m.get(p, j).clone();
                *m.get_mut(row, j) = b;
                *m.get_mut(p, j) = a;
            }
            let inv = m.get(row, col).recip();
            for j in col..m.cols {
                let v = m.get(row, j) * &inv;
                *m.get_mut(row, j) = v;
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j) - &(m.get(row, j) * &factor);
                    *m.get_mut(r, j) = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Rank via exact Gauss-Jordan elimination.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space. Each vector is normalized so its first
    /// nonzero entry is 1; vectors are ordered by free-column index.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row, free).clone();
            }
            // normalize first nonzero entry to 1
            if let Some(first) = v.iter().find(|e| !e.is_zero()).cloned() {
                for e in &mut v {
                    *e /= &first;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// True iff the matrix is square and A^T = -A entrywise.
    pub fn is_skew_symmetric(&self) -> Result<bool, NonSquareError> {
        if self.rows != self.cols {
            return Err(NonSquareError);
        }
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !(self.get(i, j) + self.get(j, i)).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("operation requires a square matrix")]
pub struct NonSquareError;

/// Square matrix of polynomials with a uniform variable count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    nvars: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(size: usize, entries: Vec<Polynomial>) -> Self {
        assert_eq!(entries.len(), size * size, "entry grid must be size*size");
        let nvars = entries.first().map(|p| p.nvars()).unwrap_or(0);
        assert!(
            entries.iter().all(|p| p.nvars() == nvars),
            "all entries must share the same variable count"
        );
        PolyMatrix { size, nvars, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.size + j]
    }

    /// Exact determinant: cofactor expansion for size <= 3, Bareiss
    /// fraction-free elimination for size >= 4. The two paths agree (this is
    /// property-tested).
    pub fn determinant(&self) -> Polynomial {
        if self.size <= 3 {
            self.determinant_cofactor()
        } else {
            self.determinant_bareiss()
        }
    }

    /// Recursive cofactor expansion along the first row.
    pub fn determinant_cofactor(&self) -> Polynomial {
        match self.size {
            0 => Polynomial::one(self.nvars),
            1 => self.get(0, 0).clone(),
            _ => {
                let mut det = Polynomial::zero(self.nvars);
                for j in 0..self.size {
                    if self.get(0, j).is_zero() {
                        continue;
                    }
                    let mut minor = Vec::with_capacity((self.size - 1) * (self.size - 1));
                    for i in 1..self.size {
                        for k in 0..self.size {
                            if k != j {
                                minor.push(self.get(i, k).clone());
                            }
                        }
                    }
                    let sub = PolyMatrix::new(self.size - 1, minor).determinant_cofactor();
                    let term = self.get(0, j).mul(&sub);
                    det = if j % 2 == 0 { det.add(&term) } else { det.sub(&term) };
                }
                det
            }
        }
    }

    /// Fraction-free Bareiss elimination. Pivot selection: among nonzero
    /// candidates in the column, the entry with the fewest terms, tie-broken
    /// by row index, to limit intermediate growth.
    pub fn determinant_bareiss(&self) -> Polynomial {
        let n = self.size;
        if n == 0 {
            return Polynomial::one(self.nvars);
        }
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let mut prev = Polynomial::one(self.nvars);
        for k in 0..n - 1 {
            let pivot_row = (k..n)
                .filter(|&i| !m[i][k].is_zero())
                .min_by_key(|&i| (m[i][k].num_terms(), i));
            let Some(p) = pivot_row else {
                return Polynomial::zero(self.nvars);
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num
                        .exact_div(&prev)
                        .expect("Bareiss intermediate division is exact");
                }
                m[i][k] = Polynomial::zero(self.nvars);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negate {
            det.neg()
        } else {
            det
        }
    }
}
