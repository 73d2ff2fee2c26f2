//! Dense matrices over a [`Field`] and the exact linear algebra built on
//! them.

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    /// Builds from rows; every row must have the same length.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from columns.
    pub fn from_cols(field: F, cols: Vec<Vec<F::Elem>>) -> Self {
        Matrix::from_rows(field, cols).transpose()
    }

    pub fn field(&self) -> &F {
        &self.field
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

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Matrix::zero(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            data,
            ..self.clone()
        }
    }

    /// `self * v` for a column vector.
    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| {
                        self.field.add(&acc, &self.field.mul(a, b))
                    })
            })
            .collect()
    }

    /// `v * self` for a row vector.
    pub fn vec_mul(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(o, &f.mul(a, self.get(i, j)));
            }
        }
        out
    }

    /// Evaluates a polynomial at this (square) matrix.
    pub fn eval_poly(&self, p: &Poly<F>) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = Matrix::zero(self.field.clone(), n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let idx = i * n + i;
                acc.data[idx] = self.field.add(&acc.data[idx], c);
            }
        }
        acc
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).unwrap();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let delta = f.mul(&factor, m.get(r, j));
                    let idx = i * m.cols + j;
                    m.data[idx] = f.sub(&m.data[idx], &delta);
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

    /// Basis of the right kernel `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(row, fc));
                }
                v
            })
            .collect()
    }

    /// Basis of the left kernel `{v : v * self = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<F::Elem>> {
        self.transpose().kernel()
    }

    /// Solves `self * X = rhs`; `None` if inconsistent. When the system is
    /// underdetermined one particular solution is returned.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows);
        let f = &self.field;
        let n = self.cols;
        let mut aug_rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.extend_from_slice(rhs.row(i));
            aug_rows.push(row);
        }
        let aug = Matrix::from_rows(f.clone(), aug_rows);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zero(f.clone(), n, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(row, n + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field.clone(), self.rows);
        let x = self.solve(&id)?;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn det(&self) -> Result<F::Elem> {
        if !self.is_square() {
            return Err(Error::domain("determinant of a non-square matrix"));
        }
        let c = self.charpoly()?;
        let n = self.rows;
        let c0 = c.coeff(0);
        Ok(if n.is_multiple_of(2) { c0 } else { self.field.neg(&c0) })
    }

    /// Characteristic polynomial `det(x*I - self)` by Berkowitz's
    /// division-free algorithm.
    pub fn charpoly(&self) -> Result<Poly<F>> {
        if !self.is_square() {
            return Err(Error::domain(format!(
                "characteristic polynomial of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let f = &self.field;
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one(f.clone()));
        }
        // v holds coefficients from the leading one downwards.
        let mut v = vec![f.one(), f.neg(self.get(0, 0))];
        for r in 1..n {
            // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C
            let mut t = Vec::with_capacity(r + 2);
            t.push(f.one());
            t.push(f.neg(self.get(r, r)));
            let mut col: Vec<F::Elem> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for _ in 0..r {
                let rc = (0..r).fold(f.zero(), |acc, j| {
                    f.add(&acc, &f.mul(self.get(r, j), &col[j]))
                });
                t.push(f.neg(&rc));
                col = (0..r)
                    .map(|i| {
                        (0..r).fold(f.zero(), |acc, j| {
                            f.add(&acc, &f.mul(self.get(i, j), &col[j]))
                        })
                    })
                    .collect();
            }
            let mut next = vec![f.zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for j in 0..=i.min(r) {
                    *slot = f.add(slot, &f.mul(&t[i - j], &v[j]));
                }
            }
            v = next;
        }
        v.reverse();
        Ok(Poly::new(f.clone(), v))
    }

    /// Matrix of `self` on the invariant subspace spanned by the columns of
    /// `basis` (acting on column vectors): returns `A'` with
    /// `self * basis = basis * A'`.
    pub fn restrict(&self, basis: &Self) -> Result<Self> {
        let image = self.mul(basis);
        basis
            .solve(&image)
            .ok_or_else(|| Error::Internal("subspace is not invariant".into()))
    }

    pub fn map<G: Field>(&self, target: G, f: impl Fn(&F::Elem) -> G::Elem) -> Matrix<G> {
        Matrix {
            data: self.data.iter().map(f).collect(),
            field: target,
            rows: self.rows,
            cols: self.cols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field::{q, qi, Rationals};

    fn m(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_rows(
            Rationals,
            rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect(),
        )
    }

    #[test]
    fn identity_and_zero_charpolys() {
        let id = Matrix::identity(Rationals, 2);
        assert_eq!(id.charpoly().unwrap(), Poly::from_ints(&[1, -2, 1]));
        let z = Matrix::zero(Rationals, 3, 3);
        assert_eq!(z.charpoly().unwrap(), Poly::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn non_square_charpoly_is_domain_error() {
        let a = Matrix::zero(Rationals, 2, 3);
        assert!(matches!(a.charpoly(), Err(Error::Domain(_))));
    }

    #[test]
    fn charpoly_annihilates_matrix() {
        let a = m(&[&[2, -1, 0, 3], &[1, 1, 4, 0], &[0, 5, -2, 1], &[7, 0, 1, 1]]);
        let c = a.charpoly().unwrap();
        let z = a.eval_poly(&c);
        assert_eq!(z, Matrix::zero(Rationals, 4, 4));
        assert_eq!(a.det().unwrap(), qi(426));
    }

    #[test]
    fn solve_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let k = a.kernel();
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|x| x == &qi(0)));
        let b = m(&[&[2, 1], &[1, 3]]);
        let inv = b.inverse().unwrap();
        assert_eq!(inv.get(0, 0), &q(3, 5));
        assert_eq!(b.mul(&inv), Matrix::identity(Rationals, 2));
    }
}
