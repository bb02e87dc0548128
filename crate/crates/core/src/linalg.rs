//! Small dense integer matrices.
//!
//! Only what the root-system and fan code needs: products, fraction-free
//! determinants and inverses of unimodular matrices. All entries are `i64`;
//! intermediate determinant values are carried in `i128`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul};

/// Greatest common divisor, always nonnegative. `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}

/// gcd of all entries; zero for an empty or all-zero slice.
pub fn gcd_all(xs: &[i64]) -> i64 {
    xs.iter().fold(0, |g, &x| gcd(g, x))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Row-major integer matrix.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from equally long rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns<C: AsRef<[i64]>>(columns: &[C]) -> Self {
        Self::from_rows(columns).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Flat row-major entries.
    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn determinant(&self) -> i128 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a: Vec<i128> = self.data.iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[k * n + k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| a[r * n + k] != 0) else {
                    return 0;
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k];
            for i in k + 1..n {
                for j in k + 1..n {
                    a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) / prev;
                }
                a[i * n + k] = 0;
            }
            prev = pivot;
        }
        sign * a[n * n - 1]
    }

    /// Exact inverse of a matrix with determinant ±1, computed with
    /// unimodular row operations only. Returns `None` when the matrix is
    /// not square or not unimodular.
    pub fn inverse_unimodular(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            // Euclid on column c among rows c.. until one nonzero entry is left.
            loop {
                let nonzero: Vec<usize> = (c..n).filter(|&r| a[(r, c)] != 0).collect();
                match nonzero.as_slice() {
                    [] => return None,
                    [p] => {
                        a.swap_rows(c, *p);
                        inv.swap_rows(c, *p);
                        break;
                    }
                    _ => {
                        let p = *nonzero.iter().min_by_key(|&&r| a[(r, c)].unsigned_abs())?;
                        for &r in &nonzero {
                            if r != p {
                                let q = a[(r, c)] / a[(p, c)];
                                a.add_row_multiple(r, p, -q);
                                inv.add_row_multiple(r, p, -q);
                            }
                        }
                    }
                }
            }
            match a[(c, c)] {
                1 => {}
                -1 => {
                    a.negate_row(c);
                    inv.negate_row(c);
                }
                _ => return None,
            }
            for r in 0..n {
                if r != c && a[(r, c)] != 0 {
                    let q = a[(r, c)];
                    a.add_row_multiple(r, c, -q);
                    inv.add_row_multiple(r, c, -q);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.data.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            self[(i, k)] = -self[(i, k)];
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: i64) {
        for k in 0..self.cols {
            let v = self[(src, k)];
            self[(dst, k)] += factor * v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(12, -18), 6);
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd_all(&[2, 0]), 2);
        assert_eq!(gcd_all(&[-1, 1]), 1);
    }

    #[test]
    fn determinant_small() {
        assert_eq!(IntMatrix::from_rows(&[[1, 2], [3, 4]]).determinant(), -2);
        assert_eq!(IntMatrix::from_rows(&[[0, 1], [1, 0]]).determinant(), -1);
        let m = IntMatrix::from_rows(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]);
        assert_eq!(m.determinant(), 4);
        assert_eq!(IntMatrix::from_rows(&[[1, 2], [2, 4]]).determinant(), 0);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IntMatrix::from_rows(&[[-1, 1], [0, -1]]);
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(&m * &inv, IntMatrix::identity(2));
        let m = IntMatrix::from_rows(&[[2, 3, 1], [1, 2, 1], [0, 1, 2]]);
        assert_eq!(m.determinant(), 1);
        let inv = m.inverse_unimodular().unwrap();
        assert_eq!(&inv * &m, IntMatrix::identity(3));
    }

    #[test]
    fn non_unimodular_has_no_integer_inverse() {
        assert!(IntMatrix::from_rows(&[[2, 0], [0, 1]]).inverse_unimodular().is_none());
        assert!(IntMatrix::from_rows(&[[1, 1], [1, 1]]).inverse_unimodular().is_none());
    }
}
