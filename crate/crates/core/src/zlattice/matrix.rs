use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone().into();
        }
        m
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: r, cols: c, data }
    }

    /// Like [`IntMatrix::from_rows`] but with an explicit column count, so
    /// that zero-row matrices keep their width.
    pub fn from_rows_with_cols<T: Into<BigInt> + Clone>(rows: &[Vec<T>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    pub fn from_cols<T: Into<BigInt> + Clone>(cols: &[Vec<T>], rows: usize) -> Self {
        Self::from_rows_with_cols(cols, rows).transpose()
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> IntMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// `row[dst] += c * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.cols {
            let v = &self[(src, k)] * c;
            self[(dst, k)] += v;
        }
    }

    /// `col[dst] += c * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.rows {
            let v = &self[(k, src)] * c;
            self[(k, dst)] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -&self[(i, k)];
            self[(i, k)] = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for k in 0..self.rows {
            let v = -&self[(k, j)];
            self[(k, j)] = v;
        }
    }

    /// Reduces every entry modulo `m` into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.mod_floor(m)).collect(),
        }
    }

    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.to_i64().ok_or_else(|| Error::Overflow(v.to_string())))
                    .collect()
            })
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn big_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn small_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| x.to_i64().ok_or_else(|| Error::Overflow(x.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]);
        assert_eq!(m.det(), BigInt::from(-8));
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(m.det(), BigInt::from(-2));
        assert!(IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).is_unimodular());
    }

    #[test]
    fn power_of_swap_is_identity() {
        let s = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(s.pow(2), IntMatrix::identity(2));
        assert_eq!(s.pow(0), IntMatrix::identity(2));
    }
}
