use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use super::rational::{int, Rational};
use crate::{Error, Result};

/// Dense row-major matrix of exact rationals. Shape is fixed at construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: alloc::vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Rational::one())
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Matrix unit `E_{ij}` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Rational::one();
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for tests and literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r: Vec<Vec<Rational>> = rows.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect();
        Self::from_rows(r).expect("ragged literal")
    }

    /// Column-stacked matrix from equal-length vectors.
    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Self {
        Self::from_fn(nrows, columns.len(), |r, c| columns[c][r].clone())
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

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self[(r, c)].is_zero()))
    }

    pub fn diag(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn trace(&self) -> Rational {
        self.diag().into_iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    /// `(row, col, value)` of every nonzero entry, row-major.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    /// Nonzero entries grouped by column: `cols[c] = [(row, value)]`.
    pub fn column_support(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut out = alloc::vec![Vec::new(); self.cols];
        for (r, c, v) in self.nonzeros() {
            out[c].push((r, v.clone()));
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * rhs.cols + j] += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rational::one())
    }

    /// `self + c·I`.
    pub fn shift_diagonal(&self, c: &Rational) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] += c;
        }
        m
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let a = &self[(r / rhs.rows, c / rhs.cols)];
            if a.is_zero() {
                Rational::zero()
            } else {
                a * &rhs[(r % rhs.rows, c % rhs.cols)]
            }
        })
    }

    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                rhs[(r, c - self.cols)].clone()
            }
        })
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
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

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            let support: Vec<usize> = (c..cols).filter(|&j| !self[(r, j)].is_zero()).collect();
            for &j in &support {
                self.data[r * cols + j] *= &inv;
            }
            for i in 0..rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for &j in &support {
                    let delta = &f * &self[(r, j)];
                    self.data[i * cols + j] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one column per basis vector.
    pub fn nullspace(&self) -> Matrix {
        let (reduced, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis[(f, k)] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                basis[(p, k)] = -reduced[(row, f)].clone();
            }
        }
        basis
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &pivot;
                for j in c..n {
                    if m[(c, j)].is_zero() {
                        continue;
                    }
                    let delta = &f * &m[(c, j)];
                    m.data[i * n + j] -= delta;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (reduced, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Matrix::from_fn(n, n, |r, c| reduced[(r, n + c)].clone()))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

/// Solutions of `A X = B`: every solution is `particular + kernel · Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Matrix,
    /// Basis of `ker A`, as columns.
    pub kernel: Matrix,
}

impl SolutionSpace {
    pub fn is_unique(&self) -> bool {
        self.kernel.cols() == 0
    }
}

/// Exact solve of `A X = B`. `Ok(None)` means the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Option<SolutionSpace>> {
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let (reduced, pivots) = a.hstack(b).rref();
    if pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut particular = Matrix::zeros(n, b.cols());
    for (row, &p) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            particular[(p, j)] = reduced[(row, n + j)].clone();
        }
    }
    Ok(Some(SolutionSpace {
        particular,
        kernel: a.nullspace(),
    }))
}

/// Sylvester inertia `(n₊, n₋, n₀)` of a symmetric matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }
}

/// Inertia by symmetric Gaussian elimination (congruence transforms only).
pub fn ldlt_signature(g: &Matrix) -> Result<Inertia> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut m = g.clone();
    let mut n = m.rows();
    let mut active: Vec<usize> = (0..n).collect();
    let (mut positive, mut negative) = (0, 0);
    while n > 0 {
        let pivot = active.iter().copied().find(|&i| !m[(i, i)].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // Zero diagonal: find an off-diagonal entry and fold its column in.
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !m[(i, j)].is_zero());
                let Some((i, j)) = pair else { break };
                // row_i += row_j, col_i += col_j
                for &k in &active {
                    let v = m[(j, k)].clone();
                    m[(i, k)] += v;
                }
                for &k in &active {
                    let v = m[(k, j)].clone();
                    m[(k, i)] += v;
                }
                i
            }
        };
        let d = m[(p, p)].clone();
        if d.is_positive() {
            positive += 1;
        } else {
            negative += 1;
        }
        active.retain(|&k| k != p);
        let col: Vec<(usize, Rational)> = active
            .iter()
            .filter(|&&k| !m[(k, p)].is_zero())
            .map(|&k| (k, m[(k, p)].clone()))
            .collect();
        for (r, a) in &col {
            let f = a / &d;
            for (c, b) in &col {
                m[(*r, *c)] -= &f * b;
            }
        }
        n -= 1;
    }
    Ok(Inertia {
        positive,
        negative,
        zero: g.rows() - positive - negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::frac;

    #[test]
    fn solve_identity_system() {
        let a = Matrix::identity(2);
        let b = Matrix::from_i64(&[&[1], &[2]]);
        let s = solve_linear(&a, &b).unwrap().unwrap();
        assert!(s.is_unique());
        assert_eq!(s.particular, b);
    }

    #[test]
    fn solve_zero_map_has_full_kernel() {
        let s = solve_linear(&Matrix::zeros(2, 2), &Matrix::zeros(2, 1)).unwrap().unwrap();
        assert_eq!(s.kernel.cols(), 2);
    }

    #[test]
    fn solve_inconsistent_and_mismatch() {
        assert!(solve_linear(&Matrix::zeros(2, 2), &Matrix::from_i64(&[&[1], &[0]]))
            .unwrap()
            .is_none());
        assert!(matches!(
            solve_linear(&Matrix::zeros(2, 2), &Matrix::zeros(3, 1)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn signature_examples() {
        let inertia = |m: Matrix| {
            let s = ldlt_signature(&m).unwrap();
            (s.positive, s.negative, s.zero)
        };
        assert_eq!(inertia(Matrix::identity(3)), (3, 0, 0));
        assert_eq!(inertia(Matrix::from_i64(&[&[1, 0], &[0, -1]])), (1, 1, 0));
        assert_eq!(inertia(Matrix::from_i64(&[&[1, 1], &[1, 1]])), (1, 0, 1));
        // hyperbolic plane: zero diagonal forces the off-diagonal fold
        assert_eq!(inertia(Matrix::from_i64(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(ldlt_signature(&Matrix::from_i64(&[&[0, 1], &[0, 0]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn inverse_and_determinant_agree() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant(), int(1));
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
        let singular = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), int(0));
        assert_eq!(Matrix::scalar(2, &frac(1, 2)).determinant(), frac(1, 4));
    }
}
