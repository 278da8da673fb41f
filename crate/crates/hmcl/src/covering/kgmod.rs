use crate::linalg::{Matrix, Subspace};

use super::group::FiniteGroup;
use super::CoveringError;

/// A finite-dimensional `kG`-module: one action matrix per group element,
/// multiplying according to the group table.
#[derive(Clone, Debug)]
pub struct KGModule {
    group: FiniteGroup,
    mats: Vec<Matrix>,
}

impl KGModule {
    pub fn new(group: FiniteGroup, mats: Vec<Matrix>) -> Result<Self, CoveringError> {
        if mats.len() != group.order() {
            return Err(CoveringError::BadAction("one matrix per group element required".into()));
        }
        let dim = mats[0].rows();
        let field = mats[0].field();
        for m in &mats {
            if m.rows() != dim || m.cols() != dim || m.field() != field {
                return Err(CoveringError::BadAction("kG-module matrices must be square over one field".into()));
            }
        }
        if mats[group.identity()] != Matrix::identity(field, dim) {
            return Err(CoveringError::BadAction("identity element must act as the identity matrix".into()));
        }
        for s in 0..group.order() {
            for t in 0..group.order() {
                let st = mats[s].mul(&mats[t]).expect("square matrices");
                if st != mats[group.mul(s, t)] {
                    return Err(CoveringError::BadAction(format!(
                        "module law fails on ({}, {})",
                        group.names()[s],
                        group.names()[t]
                    )));
                }
            }
        }
        Ok(KGModule { group, mats })
    }

    /// The trivial one-dimensional module.
    pub fn trivial(group: FiniteGroup, field: crate::linalg::FieldSpec) -> Self {
        let mats = vec![Matrix::identity(field, 1); group.order()];
        KGModule { group, mats }
    }

    /// The regular representation on the group basis.
    pub fn regular(group: FiniteGroup, field: crate::linalg::FieldSpec) -> Self {
        let n = group.order();
        let mats = (0..n)
            .map(|s| {
                let mut m = Matrix::zero(field, n, n);
                for t in 0..n {
                    m.set(group.mul(s, t), t, field.one());
                }
                m
            })
            .collect();
        KGModule::new(group, mats).expect("regular representation is a module")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.mats[0].rows()
    }

    pub fn field(&self) -> crate::linalg::FieldSpec {
        self.mats[0].field()
    }

    pub fn matrix(&self, s: usize) -> &Matrix {
        &self.mats[s]
    }

    /// Span of `{ s.v - v }`, the augmentation-ideal image. The coinvariants
    /// are the quotient by this subspace.
    pub fn augmentation_span(&self) -> Subspace {
        let field = self.field();
        let dim = self.dim();
        let mut rows = Vec::new();
        for s in 0..self.group.order() {
            if s == self.group.identity() {
                continue;
            }
            for j in 0..dim {
                let mut v = Vec::with_capacity(dim);
                for i in 0..dim {
                    let mut x = self.mats[s].get(i, j);
                    if i == j {
                        x = field.sub(&x, &field.one());
                    }
                    v.push(x);
                }
                rows.push(v);
            }
        }
        Subspace::from_spanning(field, dim, rows)
    }

    pub fn coinvariants_dim(&self) -> usize {
        self.dim() - self.augmentation_span().dim()
    }

    /// The fixed subspace `X^G`.
    pub fn invariants(&self) -> Subspace {
        let field = self.field();
        let dim = self.dim();
        let others: Vec<usize> =
            (0..self.group.order()).filter(|&s| s != self.group.identity()).collect();
        if others.is_empty() {
            return Subspace::full(field, dim);
        }
        let mut stacked = Matrix::zero(field, dim * others.len(), dim);
        for (k, &s) in others.iter().enumerate() {
            for i in 0..dim {
                for j in 0..dim {
                    let mut x = self.mats[s].get(i, j);
                    if i == j {
                        x = field.sub(&x, &field.one());
                    }
                    if !field.is_zero(&x) {
                        stacked.set(k * dim + i, j, x);
                    }
                }
            }
        }
        stacked.kernel_basis()
    }

    pub fn invariants_dim(&self) -> usize {
        self.invariants().dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;

    #[test]
    fn regular_rep_of_z2() {
        let g = FiniteGroup::cyclic(2);
        let f3 = FieldSpec::prime_field(3).unwrap();
        let m = KGModule::regular(g, f3);
        // char 3: fixed subspace of the swap is the diagonal, dim 1
        assert_eq!(m.invariants_dim(), 1);
        assert_eq!(m.coinvariants_dim(), 1);
    }

    #[test]
    fn regular_rep_mod_two() {
        let g = FiniteGroup::cyclic(2);
        let f2 = FieldSpec::prime_field(2).unwrap();
        let m = KGModule::regular(g, f2);
        assert_eq!(m.invariants_dim(), 1);
        assert_eq!(m.coinvariants_dim(), 1);
    }

    #[test]
    fn trivial_module() {
        let g = FiniteGroup::cyclic(3);
        let m = KGModule::trivial(g, FieldSpec::Rationals);
        assert_eq!(m.invariants_dim(), 1);
        assert_eq!(m.coinvariants_dim(), 1);
    }

    #[test]
    fn law_violation_rejected() {
        let g = FiniteGroup::cyclic(2);
        let f = FieldSpec::Rationals;
        // t acting by a non-involution
        let bad = Matrix::from_int_rows(f, &[&[1, 1], &[0, 1]]);
        let r = KGModule::new(g, vec![Matrix::identity(f, 2), bad]);
        assert!(matches!(r, Err(CoveringError::BadAction(_))));
    }
}
