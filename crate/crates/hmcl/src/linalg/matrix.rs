use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use super::elim::{self, ModCtx, RatCtx};
use super::field::{FieldSpec, Scalar};
use super::subspace::Subspace;
use super::LinAlgError;

/// Dense matrix over a [`FieldSpec`], row-major. Storage is specialized per
/// field so that `GF(p)` work runs on flat `u64` buffers.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Store,
}

#[derive(Clone, PartialEq)]
enum Store {
    Rat(Vec<BigRational>),
    Mod(Vec<u64>),
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let data = match field {
            FieldSpec::Rationals => Store::Rat(vec![BigRational::zero(); rows * cols]),
            FieldSpec::PrimeField(_) => Store::Mod(vec![0; rows * cols]),
        };
        Matrix { field, rows, cols, data }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zero(field, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(LinAlgError::ShapeMismatch { expected: (r, c), found: (i, row.len()) });
            }
            for (j, s) in row.into_iter().enumerate() {
                if !field.contains(&s) {
                    return Err(LinAlgError::BadScalar(s.to_string()));
                }
                m.set(i, j, s);
            }
        }
        Ok(m)
    }

    /// Test/fixture helper: build from integer literals.
    pub fn from_int_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let converted = rows.iter().map(|r| r.iter().map(|&n| field.from_int(n)).collect()).collect();
        Matrix::from_rows(field, converted).expect("ragged literal matrix")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        match &self.data {
            Store::Rat(v) => Scalar::Rat(v[i * self.cols + j].clone()),
            Store::Mod(v) => Scalar::Mod(v[i * self.cols + j]),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        debug_assert!(self.field.contains(&s), "scalar outside field");
        let idx = i * self.cols + j;
        match (&mut self.data, s) {
            (Store::Rat(v), Scalar::Rat(r)) => v[idx] = r,
            (Store::Mod(v), Scalar::Mod(m)) => v[idx] = m,
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn add_to_entry(&mut self, i: usize, j: usize, s: &Scalar) {
        let cur = self.get(i, j);
        self.set(i, j, self.field.add(&cur, s));
    }

    pub fn is_entry_zero(&self, i: usize, j: usize) -> bool {
        match &self.data {
            Store::Rat(v) => v[i * self.cols + j].is_zero(),
            Store::Mod(v) => v[i * self.cols + j] == 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Store::Rat(v) => v.iter().all(|x| x.is_zero()),
            Store::Mod(v) => v.iter().all(|&x| x == 0),
        }
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.is_entry_zero(i, j) {
                    t.set(j, i, self.get(i, j));
                }
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        match (&mut out.data, &other.data) {
            (Store::Rat(a), Store::Rat(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = &*x + y;
                }
            }
            (Store::Mod(a), Store::Mod(b)) => {
                let p = self.field.characteristic();
                for (x, y) in a.iter_mut().zip(b) {
                    *x = (*x + *y) % p;
                }
            }
            _ => return Err(LinAlgError::FieldMismatch),
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        match (&mut out.data, &other.data) {
            (Store::Rat(a), Store::Rat(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = &*x - y;
                }
            }
            (Store::Mod(a), Store::Mod(b)) => {
                let p = self.field.characteristic();
                for (x, y) in a.iter_mut().zip(b) {
                    *x = (*x + p - *y) % p;
                }
            }
            _ => return Err(LinAlgError::FieldMismatch),
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        match (&mut out.data, s) {
            (Store::Rat(a), Scalar::Rat(r)) => {
                for x in a.iter_mut() {
                    if !x.is_zero() {
                        *x = &*x * r;
                    }
                }
            }
            (Store::Mod(a), Scalar::Mod(m)) => {
                let p = self.field.characteristic();
                for x in a.iter_mut() {
                    *x = *x * *m % p;
                }
            }
            _ => panic!("scalar/field mismatch"),
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinAlgError::ShapeMismatch {
                expected: (self.cols, other.cols),
                found: (other.rows, other.cols),
            });
        }
        let mut out = Matrix::zero(self.field, self.rows, other.cols);
        match (&self.data, &other.data, &mut out.data) {
            (Store::Rat(a), Store::Rat(b), Store::Rat(c)) => {
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let x = &a[i * self.cols + k];
                        if x.is_zero() {
                            continue;
                        }
                        for j in 0..other.cols {
                            let y = &b[k * other.cols + j];
                            if !y.is_zero() {
                                c[i * other.cols + j] = &c[i * other.cols + j] + x * y;
                            }
                        }
                    }
                }
            }
            (Store::Mod(a), Store::Mod(b), Store::Mod(c)) => {
                let p = self.field.characteristic();
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let x = a[i * self.cols + k];
                        if x == 0 {
                            continue;
                        }
                        for j in 0..other.cols {
                            let y = b[k * other.cols + j];
                            if y != 0 {
                                let t = &mut c[i * other.cols + j];
                                *t = (*t + x * y) % p;
                            }
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
        Ok(out)
    }

    /// `v * self` for a row vector `v` of length `rows()`.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "row vector length mismatch");
        let f = self.field;
        let mut out = vec![f.zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for j in 0..self.cols {
                if !self.is_entry_zero(i, j) {
                    let t = f.mul(x, &self.get(i, j));
                    out[j] = f.add(&out[j], &t);
                }
            }
        }
        out
    }

    /// `self * v` for a column vector `v` of length `cols()`.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "column vector length mismatch");
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for (j, x) in v.iter().enumerate() {
                if f.is_zero(x) || self.is_entry_zero(i, j) {
                    continue;
                }
                let t = f.mul(&self.get(i, j), x);
                out[i] = f.add(&out[i], &t);
            }
        }
        out
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<(), LinAlgError> {
        if self.field != other.field {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinAlgError::ShapeMismatch {
                expected: (self.rows, self.cols),
                found: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    fn rat_rows(&self) -> Vec<Vec<BigRational>> {
        match &self.data {
            Store::Rat(v) => (0..self.rows).map(|i| v[i * self.cols..(i + 1) * self.cols].to_vec()).collect(),
            Store::Mod(_) => panic!("rational view of a prime-field matrix"),
        }
    }

    fn mod_rows(&self) -> Vec<Vec<u64>> {
        match &self.data {
            Store::Mod(v) => (0..self.rows).map(|i| v[i * self.cols..(i + 1) * self.cols].to_vec()).collect(),
            Store::Rat(_) => panic!("residue view of a rational matrix"),
        }
    }

    fn int_rows(&self) -> Vec<Vec<BigInt>> {
        match &self.data {
            Store::Rat(v) => (0..self.rows)
                .map(|i| elim::clear_denominators(&v[i * self.cols..(i + 1) * self.cols]))
                .collect(),
            Store::Mod(_) => panic!("integer view of a prime-field matrix"),
        }
    }

    /// Rank over the field. Rational input goes through fraction-free
    /// integer elimination after denominators are cleared row by row.
    pub fn rank(&self) -> usize {
        match &self.data {
            Store::Rat(_) => {
                let mut rows = self.int_rows();
                elim::echelon_int(&mut rows, self.cols).len()
            }
            Store::Mod(_) => {
                let ctx = ModCtx { p: self.field.characteristic() };
                let mut rows = self.mod_rows();
                elim::echelon(&ctx, &mut rows, self.cols).len()
            }
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match &self.data {
            Store::Rat(_) => {
                let ctx = RatCtx;
                let mut rows = self.rat_rows();
                let pivots = elim::echelon(&ctx, &mut rows, self.cols);
                elim::back_reduce(&ctx, &mut rows, &pivots);
                let data = Store::Rat(rows.into_iter().flatten().collect());
                (Matrix { field: self.field, rows: self.rows, cols: self.cols, data }, pivots)
            }
            Store::Mod(_) => {
                let ctx = ModCtx { p: self.field.characteristic() };
                let mut rows = self.mod_rows();
                let pivots = elim::echelon(&ctx, &mut rows, self.cols);
                elim::back_reduce(&ctx, &mut rows, &pivots);
                let data = Store::Mod(rows.into_iter().flatten().collect());
                (Matrix { field: self.field, rows: self.rows, cols: self.cols, data }, pivots)
            }
        }
    }

    /// Basis of `{v : self * v = 0}` as a canonical subspace of `k^cols`.
    ///
    /// Row-reduces the transpose augmented with an identity block, so the
    /// rational path stays fraction-free until the final canonicalization of
    /// the (much smaller) kernel basis.
    pub fn kernel_basis(&self) -> Subspace {
        let m = self.rows;
        let n = self.cols;
        let mut kernel_rows: Vec<Vec<Scalar>> = Vec::new();
        match &self.data {
            Store::Rat(_) => {
                let t_rows = self.transpose().rat_rows();
                let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
                for (i, t_row) in t_rows.iter().enumerate() {
                    let mut row = elim::clear_denominators(t_row);
                    let mut tail = vec![BigInt::zero(); n];
                    tail[i] = BigInt::one();
                    row.extend(tail);
                    rows.push(row);
                }
                elim::echelon_int(&mut rows, m);
                for row in rows {
                    if row[..m].iter().all(|x| x.is_zero()) {
                        kernel_rows.push(
                            row[m..]
                                .iter()
                                .map(|x| Scalar::Rat(BigRational::from_integer(x.clone())))
                                .collect(),
                        );
                    }
                }
            }
            Store::Mod(_) => {
                let ctx = ModCtx { p: self.field.characteristic() };
                let t = self.transpose();
                let mut rows: Vec<Vec<u64>> = t.mod_rows();
                for (i, row) in rows.iter_mut().enumerate() {
                    let mut tail = vec![0u64; n];
                    tail[i] = 1;
                    row.extend(tail);
                }
                elim::echelon(&ctx, &mut rows, m);
                for row in rows {
                    if row[..m].iter().all(|&x| x == 0) {
                        kernel_rows.push(row[m..].iter().map(|&x| Scalar::Mod(x)).collect());
                    }
                }
            }
        }
        Subspace::from_spanning(self.field, n, kernel_rows)
    }

    /// Column span as a canonical subspace of `k^rows`.
    pub fn image_basis(&self) -> Subspace {
        let t = self.transpose();
        let rows = (0..t.rows()).map(|i| t.row(i)).collect();
        Subspace::from_spanning(self.field, self.rows, rows)
    }

    /// Row span as a canonical subspace of `k^cols`.
    pub fn row_space(&self) -> Subspace {
        let rows = (0..self.rows).map(|i| self.row(i)).collect();
        Subspace::from_spanning(self.field, self.cols, rows)
    }

    /// One solution of `self * x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = self.field;
        let mut aug = Matrix::zero(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.is_entry_zero(i, j) {
                    aug.set(i, j, self.get(i, j));
                }
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![f.zero(); self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// `{v : self * v in s}`, as a subspace of the domain `k^cols`.
    pub fn preimage(&self, s: &Subspace) -> Result<Subspace, LinAlgError> {
        if s.ambient_dim() != self.rows {
            return Err(LinAlgError::ShapeMismatch {
                expected: (self.rows, self.rows),
                found: (s.ambient_dim(), s.ambient_dim()),
            });
        }
        if s.field() != self.field {
            return Err(LinAlgError::FieldMismatch);
        }
        // functionals vanishing on s, applied after self
        let ann = s.basis_matrix().kernel_basis();
        let composed = ann.basis_matrix().mul(self).expect("shape checked");
        Ok(composed.kernel_basis())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rank_empty_matrix() {
        assert_eq!(Matrix::zero(q(), 0, 0).rank(), 0);
    }

    #[test]
    fn rank_identity() {
        assert_eq!(Matrix::identity(q(), 3).rank(), 3);
    }

    #[test]
    fn rank_mod_two() {
        // [[2,4],[1,2]] over GF(2): first row vanishes, rank 1
        let f = FieldSpec::prime_field(2).unwrap();
        let m = Matrix::from_int_rows(f, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_zero_map() {
        let m = Matrix::zero(q(), 2, 3);
        assert_eq!(m.kernel_basis().dim(), 3);
    }

    #[test]
    fn kernel_identity() {
        assert_eq!(Matrix::identity(q(), 2).kernel_basis().dim(), 0);
    }

    #[test]
    fn kernel_one_equation() {
        // [[1,1]]: kernel spanned by (1,-1)
        let m = Matrix::from_int_rows(q(), &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        let expected = Subspace::from_spanning(q(), 2, vec![vec![q().from_int(1), q().from_int(-1)]]);
        assert_eq!(k, expected);
    }

    #[test]
    fn image_zero_and_identity() {
        assert_eq!(Matrix::zero(q(), 3, 2).image_basis().dim(), 0);
        assert_eq!(Matrix::identity(q(), 3).image_basis().dim(), 3);
    }

    #[test]
    fn image_proportional_columns() {
        let m = Matrix::from_int_rows(q(), &[&[1, 2], &[2, 4]]);
        let im = m.image_basis();
        assert_eq!(im.dim(), 1);
        let expected = Subspace::from_spanning(q(), 2, vec![vec![q().from_int(1), q().from_int(2)]]);
        assert_eq!(im, expected);
    }

    #[test]
    fn preimage_cases() {
        let m = Matrix::from_int_rows(q(), &[&[1, 0], &[0, 0]]);
        let full = Subspace::full(q(), 2);
        assert_eq!(m.preimage(&full).unwrap().dim(), 2);
        let zero = Subspace::zero_subspace(q(), 2);
        assert_eq!(m.preimage(&zero).unwrap(), m.kernel_basis());
        let e1 = Subspace::from_spanning(q(), 2, vec![vec![q().from_int(1), q().from_int(0)]]);
        assert_eq!(m.preimage(&e1).unwrap().dim(), 2);
    }

    #[test]
    fn preimage_rejects_ambient_mismatch() {
        let m = Matrix::zero(q(), 2, 3);
        let s = Subspace::full(q(), 3);
        assert!(m.preimage(&s).is_err());
    }

    #[test]
    fn solve_simple() {
        let m = Matrix::from_int_rows(q(), &[&[1, 1], &[0, 1]]);
        let b = vec![q().from_int(3), q().from_int(1)];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        // inconsistent system
        let m2 = Matrix::from_int_rows(q(), &[&[1, 1], &[1, 1]]);
        let b2 = vec![q().from_int(0), q().from_int(1)];
        assert!(m2.solve(&b2).is_none());
    }

    #[test]
    fn mixed_field_rejected() {
        let a = Matrix::identity(q(), 2);
        let b = Matrix::identity(FieldSpec::prime_field(3).unwrap(), 2);
        assert_eq!(a.mul(&b).unwrap_err(), LinAlgError::FieldMismatch);
        assert_eq!(a.add(&b).unwrap_err(), LinAlgError::FieldMismatch);
    }

    #[test]
    fn rref_known() {
        let m = Matrix::from_int_rows(q(), &[&[2, 4, 6], &[1, 2, 4]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(r.get(0, 0), q().one());
        assert_eq!(r.get(0, 1), q().from_int(2));
        assert_eq!(r.get(0, 2), q().zero());
        assert_eq!(r.get(1, 2), q().one());
    }
}
