//! Dense matrices over an arbitrary exact ring, with Gaussian elimination
//! over fields and fraction-free determinants over the integers.
//!
//! Everything here is exact: elimination happens over `BigRational`,
//! Gaussian rationals, rational functions, or any other [`Field`], and the
//! integer determinant uses Bareiss's fraction-free algorithm so no rational
//! arithmetic sneaks into `Z`-level computations.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;

use super::{Field, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(
            rows.iter().all(|row| row.len() == c),
            "ragged rows in matrix constructor"
        );
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).add(other.at(i, j)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).sub(other.at(i, j)))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.at(i, j).mul(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.at(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    /// Kronecker (tensor) product: block `(i, j)` is `self[i][j] * other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            self.at(i / other.rows, j / other.cols)
                .mul(other.at(i % other.rows, j % other.cols))
        })
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        Self::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |i, j| f(self.at(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Field> Matrix<T> {
    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).inv().unwrap();
            for j in c..m.cols {
                let v = m.at(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).clone();
                for j in c..m.cols {
                    let v = m.at(i, j).sub(&f.mul(m.at(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space (solutions of `self * x = 0`).
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = Some(k);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![T::zero(); self.cols];
            x[free] = T::one();
            for (k, &c) in pivots.iter().enumerate() {
                x[c] = r.at(k, free).neg();
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, b.len());
        let rhs = Matrix::from_fn(self.rows, 1, |i, _| b[i].clone());
        let (r, pivots) = self.hstack(&rhs).rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (k, &c) in pivots.iter().enumerate() {
            x[c] = r.at(k, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Determinant by Gaussian elimination with exact field arithmetic.
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols);
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return T::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            det = det.mul(m.at(c, c));
            let inv = m.at(c, c).inv().unwrap();
            for i in c + 1..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c).mul(&inv);
                for j in c..n {
                    let v = m.at(i, j).sub(&f.mul(m.at(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    /// True when `v` lies in the row span of `self`.
    pub fn row_space_contains(&self, v: &[T]) -> bool {
        assert_eq!(self.cols, v.len());
        let extended = self.vstack(&Matrix::from_fn(1, self.cols, |_, j| v[j].clone()));
        extended.rank() == self.rank()
    }
}

impl Matrix<BigInt> {
    /// Fraction-free determinant (Bareiss).
    pub fn det_bareiss(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut m = self.clone();
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if Ring::is_zero(m.at(k, k)) {
                let Some(p) = (k + 1..n).find(|&i| !Ring::is_zero(m.at(i, k))) else {
                    return BigInt::from(0);
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    debug_assert!(
                        Ring::is_zero(&(&val % &prev)),
                        "Bareiss division must be exact"
                    );
                    m.set(i, j, &val / &prev);
                }
                m.set(i, k, BigInt::from(0));
            }
            prev = m.at(k, k).clone();
        }
        sign * m.at(n - 1, n - 1).clone()
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

impl<T: Ring> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{}", self.at(i, j)))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Ring> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
