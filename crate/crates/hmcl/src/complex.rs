//! Graded based complexes with explicit differential matrices, and homology
//! with cycle/boundary bases and chosen representatives.
//!
//! A chain complex of top degree `N` stores `d_n : C_n -> C_{n-1}` for every
//! `n` (the map out of degree 0 is the zero map); a cochain complex stores
//! `d^n : C^n -> C^{n+1}` for `n < N`. `d . d = 0` is verified exactly at
//! construction. Homology is reported for degrees `<= N - 1` only, so a
//! complex must always be built one degree beyond the last degree of
//! interest.

use crate::linalg::{FieldSpec, Matrix, RrefAccumulator, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Chain,
    Cochain,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComplexError {
    Shape(String),
    /// `d . d != 0` entering the given degree.
    NotAComplex(usize),
    /// A guard refused to build an oversized complex.
    TooLarge(String),
}

impl std::fmt::Display for ComplexError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ComplexError::Shape(s) => write!(f, "complex shape error: {s}"),
            ComplexError::NotAComplex(n) => write!(f, "d.d != 0 at degree {n}"),
            ComplexError::TooLarge(s) => write!(f, "complex too large: {s}"),
        }
    }
}

impl std::error::Error for ComplexError {}

#[derive(Clone, Debug)]
pub struct BasedComplex {
    field: FieldSpec,
    direction: Direction,
    dims: Vec<usize>,
    labels: Vec<Vec<String>>,
    diffs: Vec<Matrix>,
}

/// Homology of one degree: dimension, cycle and boundary subspaces, and a
/// deterministic set of representative vectors (the first cycle-basis
/// vectors spanning a complement of the boundaries).
#[derive(Clone, Debug)]
pub struct DegreeHomology {
    pub degree: usize,
    pub dim: usize,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    pub representatives: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub degrees: Vec<DegreeHomology>,
}

impl HomologyResult {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.dim).collect()
    }
}

impl BasedComplex {
    /// `diffs[n] : C_n -> C_{n-1}`; entry 0 must be the zero map out of
    /// degree 0 (a `0 x dims[0]` matrix).
    pub fn new_chain(
        field: FieldSpec,
        dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        diffs: Vec<Matrix>,
    ) -> Result<Self, ComplexError> {
        let c = BasedComplex { field, direction: Direction::Chain, dims, labels, diffs };
        c.validate()?;
        Ok(c)
    }

    /// `diffs[n] : C^n -> C^{n+1}` for `n` in `0..max_degree`.
    pub fn new_cochain(
        field: FieldSpec,
        dims: Vec<usize>,
        labels: Vec<Vec<String>>,
        diffs: Vec<Matrix>,
    ) -> Result<Self, ComplexError> {
        let c = BasedComplex { field, direction: Direction::Cochain, dims, labels, diffs };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), ComplexError> {
        let n = self.dims.len();
        if n == 0 {
            return Err(ComplexError::Shape("a complex needs at least degree 0".into()));
        }
        if self.labels.len() != n {
            return Err(ComplexError::Shape("labels out of sync with dimensions".into()));
        }
        for (d, l) in self.dims.iter().zip(&self.labels) {
            if l.len() != *d {
                return Err(ComplexError::Shape("label count differs from dimension".into()));
            }
        }
        match self.direction {
            Direction::Chain => {
                if self.diffs.len() != n {
                    return Err(ComplexError::Shape("chain complex needs one differential per degree".into()));
                }
                for k in 0..n {
                    let expected_rows = if k == 0 { 0 } else { self.dims[k - 1] };
                    if self.diffs[k].rows() != expected_rows || self.diffs[k].cols() != self.dims[k] {
                        return Err(ComplexError::Shape(format!("differential {k} has the wrong shape")));
                    }
                }
                for k in 1..n {
                    let sq = self.diffs[k - 1].mul(&self.diffs[k]).map_err(|e| ComplexError::Shape(e.to_string()))?;
                    if !sq.is_zero() {
                        return Err(ComplexError::NotAComplex(k));
                    }
                }
            }
            Direction::Cochain => {
                if self.diffs.len() + 1 != n {
                    return Err(ComplexError::Shape("cochain complex needs max_degree differentials".into()));
                }
                for (k, d) in self.diffs.iter().enumerate() {
                    if d.rows() != self.dims[k + 1] || d.cols() != self.dims[k] {
                        return Err(ComplexError::Shape(format!("differential {k} has the wrong shape")));
                    }
                }
                for k in 0..self.diffs.len().saturating_sub(1) {
                    let sq = self.diffs[k + 1].mul(&self.diffs[k]).map_err(|e| ComplexError::Shape(e.to_string()))?;
                    if !sq.is_zero() {
                        return Err(ComplexError::NotAComplex(k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.dims[degree]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn labels(&self, degree: usize) -> &[String] {
        &self.labels[degree]
    }

    /// The differential leaving `degree`:
    /// chain `d_n : C_n -> C_{n-1}`, cochain `d^n : C^n -> C^{n+1}`.
    /// `None` for the cochain top degree, whose outgoing map is not built.
    pub fn diff_out(&self, degree: usize) -> Option<&Matrix> {
        match self.direction {
            Direction::Chain => self.diffs.get(degree),
            Direction::Cochain => self.diffs.get(degree),
        }
    }

    /// The differential entering `degree`, if inside the truncation.
    pub fn diff_in(&self, degree: usize) -> Option<&Matrix> {
        match self.direction {
            Direction::Chain => self.diffs.get(degree + 1),
            Direction::Cochain => {
                if degree == 0 {
                    None
                } else {
                    self.diffs.get(degree - 1)
                }
            }
        }
    }

    /// Homology dimensions for degrees `0 ..= max_degree - 1`, by rank
    /// computations only.
    pub fn homology_dims(&self) -> Vec<usize> {
        let top = self.max_degree();
        (0..top)
            .map(|k| {
                let out_rank = self.diff_out(k).map_or(0, |d| d.rank());
                let in_rank = self.diff_in(k).map_or(0, |d| d.rank());
                self.dims[k] - out_rank - in_rank
            })
            .collect()
    }

    /// Full homology with cycle/boundary bases and representatives, for
    /// degrees `0 ..= max_degree - 1`.
    pub fn homology(&self) -> HomologyResult {
        let top = self.max_degree();
        let mut degrees = Vec::with_capacity(top);
        for k in 0..top {
            let cycles = match self.diff_out(k) {
                Some(d) if d.rows() > 0 => d.kernel_basis(),
                _ => Subspace::full(self.field, self.dims[k]),
            };
            let boundaries = match self.diff_in(k) {
                Some(d) => d.image_basis(),
                None => Subspace::zero_subspace(self.field, self.dims[k]),
            };
            assert!(
                cycles.contains_subspace(&boundaries),
                "boundaries escape cycles at degree {k}: construction bug"
            );
            let dim = cycles.dim() - boundaries.dim();
            // representatives: first cycle-basis vectors independent of B
            let mut acc = RrefAccumulator::new(self.field, self.dims[k]);
            for i in 0..boundaries.dim() {
                acc.insert(boundaries.basis_vector(i));
            }
            let mut representatives = Vec::with_capacity(dim);
            for i in 0..cycles.dim() {
                let v = cycles.basis_vector(i);
                if acc.insert(v.clone()) {
                    representatives.push(v);
                }
            }
            assert_eq!(representatives.len(), dim);
            degrees.push(DegreeHomology { degree: k, dim, cycles, boundaries, representatives });
        }
        HomologyResult { degrees }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn zero_complex() {
        let c = BasedComplex::new_chain(
            q(),
            vec![0, 0, 0],
            vec![vec![], vec![], vec![]],
            vec![Matrix::zero(q(), 0, 0), Matrix::zero(q(), 0, 0), Matrix::zero(q(), 0, 0)],
        )
        .unwrap();
        assert_eq!(c.homology_dims(), vec![0, 0]);
    }

    #[test]
    fn identity_map_is_acyclic() {
        // C_1 = k --id--> C_0 = k
        let c = BasedComplex::new_chain(
            q(),
            vec![1, 1],
            vec![labels(1), labels(1)],
            vec![Matrix::zero(q(), 0, 1), Matrix::identity(q(), 1)],
        )
        .unwrap();
        assert_eq!(c.homology_dims(), vec![0]);
        let h = c.homology();
        assert_eq!(h.dims(), vec![0]);
    }

    #[test]
    fn ground_field_in_degree_zero() {
        let c = BasedComplex::new_chain(
            q(),
            vec![1, 0],
            vec![labels(1), vec![]],
            vec![Matrix::zero(q(), 0, 1), Matrix::zero(q(), 1, 0)],
        )
        .unwrap();
        assert_eq!(c.homology_dims(), vec![1]);
        let h = c.homology();
        assert_eq!(h.degrees[0].representatives.len(), 1);
    }

    #[test]
    fn dd_nonzero_rejected() {
        // d1 = d2 = identity: composite is not zero
        let r = BasedComplex::new_chain(
            q(),
            vec![1, 1, 1],
            vec![labels(1), labels(1), labels(1)],
            vec![Matrix::zero(q(), 0, 1), Matrix::identity(q(), 1), Matrix::identity(q(), 1)],
        );
        assert_eq!(r.unwrap_err(), ComplexError::NotAComplex(2));
    }

    #[test]
    fn cochain_homology_of_inclusion() {
        // C^0 = k -(0)-> C^1 = k^2 -(sum)-> C^2 = k
        let d0 = Matrix::zero(q(), 2, 1);
        let d1 = Matrix::from_int_rows(q(), &[&[1, 1]]);
        let c = BasedComplex::new_cochain(
            q(),
            vec![1, 2, 1],
            vec![labels(1), labels(2), labels(1)],
            vec![d0, d1],
        )
        .unwrap();
        // H^0 = k, H^1 = ker(sum)/im(0) = 1-dim
        assert_eq!(c.homology_dims(), vec![1, 1]);
        let h = c.homology();
        assert_eq!(h.dims(), vec![1, 1]);
        assert_eq!(h.degrees[1].cycles.dim(), 1);
        assert_eq!(h.degrees[1].boundaries.dim(), 0);
    }

    #[test]
    fn representatives_avoid_boundaries() {
        // chain: C_1 = k^2 --[[1,0],[0,0]]--> C_0 = k^2, truncated with C_2 = 0
        let d1 = Matrix::from_int_rows(q(), &[&[1, 0], &[0, 0]]);
        let c = BasedComplex::new_chain(
            q(),
            vec![2, 2, 0],
            vec![labels(2), labels(2), vec![]],
            vec![Matrix::zero(q(), 0, 2), d1, Matrix::zero(q(), 2, 0)],
        )
        .unwrap();
        let h = c.homology();
        // H_0 = k^2 / im = 1-dim; H_1 = ker d1 = span{e2}
        assert_eq!(h.dims(), vec![1, 1]);
        for rep in &h.degrees[0].representatives {
            assert!(!h.degrees[0].boundaries.contains_vector(rep));
        }
    }
}
