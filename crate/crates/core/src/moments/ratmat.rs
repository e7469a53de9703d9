use num_traits::{One, Zero};

use crate::scalar::Rational;

/// A dense matrix of exact rationals. Used for the contraction oracles and
/// the Gram pseudo-inverse; sizes here are tiny ((2k-1)!! ≤ 15 for k ≤ 3),
/// so simplicity beats cleverness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.get_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> RatMat {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|t| self.get(i, t) * other.get(t, j)).sum()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (RatMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                let tmp = m.get(p, j).clone();
                *m.get_mut(p, j) = m.get(row, j).clone();
                *m.get_mut(row, j) = tmp;
            }
            let inv = Rational::one() / m.get(row, col).clone();
            for j in 0..m.cols {
                *m.get_mut(row, j) = m.get(row, j) * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(r, j) - &factor * m.get(row, j);
                        *m.get_mut(r, j) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Exact inverse of a square full-rank matrix; `None` if singular.
    pub fn inverse(&self) -> Option<RatMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        aug = r;
        Some(Self::from_fn(n, n, |i, j| aug.get(i, j + n).clone()))
    }

    /// Exact Moore–Penrose pseudo-inverse, via the full-rank factorization
    /// `A = B C` read off the RREF: `A⁺ = Cᵀ (C Cᵀ)⁻¹ (Bᵀ B)⁻¹ Bᵀ`.
    pub fn pseudo_inverse(&self) -> RatMat {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        if rank == 0 {
            return Self::zeros(self.cols, self.rows);
        }
        let b = Self::from_fn(self.rows, rank, |i, j| self.get(i, pivots[j]).clone());
        let c = Self::from_fn(rank, self.cols, |i, j| r.get(i, j).clone());
        let cct_inv = c
            .mul(&c.transpose())
            .inverse()
            .expect("C has full row rank");
        let btb_inv = b
            .transpose()
            .mul(&b)
            .inverse()
            .expect("B has full column rank");
        c.transpose()
            .mul(&cct_inv)
            .mul(&btb_inv)
            .mul(&b.transpose())
    }
}
