use super::field::{FieldSpec, Scalar};
use super::subspace::Subspace;

/// An incrementally maintained reduced-row-echelon span. Rows are mutually
/// reduced with unit pivots, so membership tests and insertions are one
/// reduction pass each.
#[derive(Clone, Debug)]
pub struct RrefAccumulator {
    field: FieldSpec,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl RrefAccumulator {
    pub fn new(field: FieldSpec, dim: usize) -> Self {
        RrefAccumulator { field, dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` in place modulo the current span.
    pub fn reduce(&self, v: &mut [Scalar]) {
        let f = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let factor = v[p].clone();
            for (x, b) in v.iter_mut().zip(row.iter()) {
                if !f.is_zero(b) {
                    let t = f.mul(&factor, b);
                    *x = f.sub(x, &t);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|s| self.field.is_zero(s))
    }

    /// Inserts a vector; returns whether the span grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        let f = self.field;
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        self.reduce(&mut v);
        let Some(p) = (0..self.dim).find(|&j| !f.is_zero(&v[j])) else {
            return false;
        };
        let inv = f.inv(&v[p]).expect("nonzero pivot");
        for x in v.iter_mut() {
            if !f.is_zero(x) {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let factor = row[p].clone();
            for (x, b) in row.iter_mut().zip(v.iter()) {
                if !f.is_zero(b) {
                    let t = f.mul(&factor, b);
                    *x = f.sub(x, &t);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn to_subspace(&self) -> Subspace {
        Subspace::from_spanning(self.field, self.dim, self.rows.clone())
    }
}
