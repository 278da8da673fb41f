use std::fmt;

use super::elim::{self, FieldCtx, ModCtx, RatCtx};
use super::field::{FieldSpec, Scalar};
use super::matrix::Matrix;
use super::LinAlgError;

/// A linear subspace of `k^n`, stored as its reduced-row-echelon basis with
/// pivot columns ascending. Two subspaces are equal exactly when their data
/// is equal.
#[derive(Clone, PartialEq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // RREF, no zero rows
}

/// Result bundle of the pairwise subspace operations.
#[derive(Clone, Debug)]
pub struct SubspaceOps {
    pub sum: Subspace,
    pub intersection: Subspace,
    /// Whether the first operand contains the second.
    pub contains: bool,
    /// `dim a - dim(a /\ b)`, the dimension of `a / (a /\ b)`.
    pub quotient_dim: usize,
}

impl Subspace {
    pub fn zero_subspace(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zero(field, 0, ambient) }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(field, ambient) }
    }

    /// Canonicalizes a spanning set into an RREF basis.
    pub fn from_spanning(field: FieldSpec, ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        for r in &rows {
            assert_eq!(r.len(), ambient, "spanning vector of wrong length");
        }
        let m = Matrix::from_rows(field, rows).expect("validated above");
        Self::from_matrix_rows(ambient, &m)
    }

    fn from_matrix_rows(ambient: usize, m: &Matrix) -> Self {
        let (rref, pivots) = m.rref();
        let mut rows = Vec::with_capacity(pivots.len());
        for i in 0..pivots.len() {
            rows.push(rref.row(i));
        }
        let basis = Matrix::from_rows(m.field(), rows).expect("rectangular");
        let basis = if basis.rows() == 0 { Matrix::zero(m.field(), 0, ambient) } else { basis };
        Subspace { ambient, basis }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.row(i)
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Membership test against the canonical basis.
    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.reduce_vector(v).iter().all(|s| self.field().is_zero(s))
    }

    /// Reduces `v` modulo this subspace (zeroes out its component along the
    /// basis). The result is the canonical coset representative.
    pub fn reduce_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field();
        let mut out = v.to_vec();
        for i in 0..self.basis.rows() {
            // pivot column of row i is the first nonzero entry
            let pivot = (0..self.ambient).find(|&j| !self.basis.is_entry_zero(i, j)).expect("no zero rows");
            if f.is_zero(&out[pivot]) {
                continue;
            }
            let factor = out[pivot].clone(); // pivot entry is 1 in RREF
            for j in pivot..self.ambient {
                if !self.basis.is_entry_zero(i, j) {
                    let t = f.mul(&factor, &self.basis.get(i, j));
                    out[j] = f.sub(&out[j], &t);
                }
            }
        }
        out
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the space.
    pub fn coordinates_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        let mut coords = Vec::with_capacity(self.dim());
        for i in 0..self.basis.rows() {
            let pivot = (0..self.ambient).find(|&j| !self.basis.is_entry_zero(i, j)).expect("no zero rows");
            coords.push(v[pivot].clone());
        }
        Some(coords)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.dim()).all(|i| self.contains_vector(&other.basis_vector(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let mut rows: Vec<Vec<Scalar>> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        rows.extend((0..other.dim()).map(|i| other.basis_vector(i)));
        Ok(Subspace::from_spanning(self.field(), self.ambient, rows))
    }

    /// Zassenhaus: reduce rows `[a | a]` and `[b | 0]`; tails of rows whose
    /// left half vanished span the intersection.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let f = self.field();
        let mut tails: Vec<Vec<Scalar>> = Vec::new();
        match f {
            FieldSpec::Rationals => {
                let ctx = RatCtx;
                let mut rows = Vec::new();
                for i in 0..self.dim() {
                    let v: Vec<_> = self.basis_vector(i).into_iter().map(|s| s.as_rational().unwrap().clone()).collect();
                    let mut row = v.clone();
                    row.extend(v);
                    rows.push(row);
                }
                for i in 0..other.dim() {
                    let mut row: Vec<_> =
                        other.basis_vector(i).into_iter().map(|s| s.as_rational().unwrap().clone()).collect();
                    row.extend(vec![num::rational::BigRational::from_integer(0.into()); n]);
                    rows.push(row);
                }
                elim::echelon(&ctx, &mut rows, n);
                for row in rows {
                    if row[..n].iter().all(|x| ctx.is_zero(x)) && !row[n..].iter().all(|x| ctx.is_zero(x)) {
                        tails.push(row[n..].iter().map(|x| Scalar::Rat(x.clone())).collect());
                    }
                }
            }
            FieldSpec::PrimeField(p) => {
                let ctx = ModCtx { p: p as u64 };
                let mut rows = Vec::new();
                for i in 0..self.dim() {
                    let v: Vec<u64> = self.basis_vector(i).into_iter().map(|s| s.as_residue().unwrap()).collect();
                    let mut row = v.clone();
                    row.extend(v);
                    rows.push(row);
                }
                for i in 0..other.dim() {
                    let mut row: Vec<u64> =
                        other.basis_vector(i).into_iter().map(|s| s.as_residue().unwrap()).collect();
                    row.extend(vec![0u64; n]);
                    rows.push(row);
                }
                elim::echelon(&ctx, &mut rows, n);
                for row in rows {
                    if row[..n].iter().all(|&x| x == 0) && !row[n..].iter().all(|&x| x == 0) {
                        tails.push(row[n..].iter().map(|&x| Scalar::Mod(x)).collect());
                    }
                }
            }
        }
        Ok(Subspace::from_spanning(f, n, tails))
    }

    /// Sum, intersection, containment and relative quotient dimension in one
    /// pass; dimensions satisfy `dim sum + dim inter = dim a + dim b`.
    pub fn ops(&self, other: &Subspace) -> Result<SubspaceOps, LinAlgError> {
        let sum = self.sum(other)?;
        let intersection = self.intersection(other)?;
        debug_assert_eq!(sum.dim() + intersection.dim(), self.dim() + other.dim());
        let contains = self.contains_subspace(other);
        let quotient_dim = self.dim() - intersection.dim();
        Ok(SubspaceOps { sum, intersection, contains, quotient_dim })
    }

    /// `dim self - dim(self /\ other)`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize, LinAlgError> {
        Ok(self.dim() - self.intersection(other)?.dim())
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.field() != other.field() {
            return Err(LinAlgError::FieldMismatch);
        }
        if self.ambient != other.ambient {
            return Err(LinAlgError::ShapeMismatch {
                expected: (1, self.ambient),
                found: (1, other.ambient),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace dim {} of k^{}: {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn span(ambient: usize, rows: &[&[i64]]) -> Subspace {
        let rows = rows.iter().map(|r| r.iter().map(|&n| q().from_int(n)).collect()).collect();
        Subspace::from_spanning(q(), ambient, rows)
    }

    #[test]
    fn ops_equal_spaces() {
        let a = span(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let r = a.ops(&a).unwrap();
        assert_eq!(r.intersection, a);
        assert_eq!(r.sum, a);
        assert!(r.contains);
        assert_eq!(r.quotient_dim, 0);
    }

    #[test]
    fn ops_coordinate_axes() {
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        let r = e1.ops(&e2).unwrap();
        assert_eq!(r.sum.dim(), 2);
        assert_eq!(r.intersection.dim(), 0);
        assert!(!r.contains);
        assert_eq!(r.quotient_dim, 1);
    }

    #[test]
    fn intersection_by_elimination() {
        // span{e1+e2, e1} /\ span{e2} = span{e2} in k^3
        let a = span(3, &[&[1, 1, 0], &[1, 0, 0]]);
        let b = span(3, &[&[0, 1, 0]]);
        let r = a.ops(&b).unwrap();
        assert_eq!(r.intersection, b);
        assert!(r.contains);
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let a = span(2, &[&[1, 0]]);
        let b = span(3, &[&[1, 0, 0]]);
        assert!(a.ops(&b).is_err());
    }

    #[test]
    fn canonicalization_idempotent() {
        let a = span(3, &[&[2, 4, 2], &[1, 1, 1], &[3, 5, 3]]);
        let again = Subspace::from_spanning(q(), 3, (0..a.dim()).map(|i| a.basis_vector(i)).collect());
        assert_eq!(a, again);
    }

    #[test]
    fn coset_reduction() {
        let a = span(3, &[&[1, 0, 1]]);
        let v = vec![q().from_int(2), q().from_int(1), q().from_int(2)];
        let red = a.reduce_vector(&v);
        assert_eq!(red, vec![q().zero(), q().from_int(1), q().zero()]);
        assert!(!a.contains_vector(&v));
        assert!(a.contains_vector(&[q().from_int(5), q().zero(), q().from_int(5)]));
    }

    #[test]
    fn coordinates() {
        let a = span(3, &[&[1, 0, 2], &[0, 1, 3]]);
        let v = vec![q().from_int(2), q().from_int(-1), q().from_int(1)];
        assert_eq!(a.coordinates_of(&v), Some(vec![q().from_int(2), q().from_int(-1)]));
        assert_eq!(a.coordinates_of(&[q().zero(), q().zero(), q().one()]), None);
    }

    #[test]
    fn gf_intersection() {
        let f = FieldSpec::prime_field(3).unwrap();
        let mk = |rows: &[&[i64]]| {
            Subspace::from_spanning(f, 3, rows.iter().map(|r| r.iter().map(|&n| f.from_int(n)).collect()).collect())
        };
        let a = mk(&[&[1, 1, 0], &[1, 0, 0]]);
        let b = mk(&[&[0, 1, 0]]);
        assert_eq!(a.intersection(&b).unwrap(), b);
        let r = a.ops(&b).unwrap();
        assert_eq!(r.sum.dim() + r.intersection.dim(), a.dim() + b.dim());
    }
}
