use std::sync::Arc;

use crate::linalg::{Matrix, Scalar};

use super::linear::LinearCategory;
use super::CategoryError;

/// A `k`-linear functor given by an object map and one matrix per hom pair,
/// verified to preserve identities and composition on all basis pairs.
#[derive(Clone, Debug)]
pub struct LinearFunctor {
    source: Arc<LinearCategory>,
    target: Arc<LinearCategory>,
    object_map: Vec<usize>,
    /// `hom_maps[y][x]`: matrix from `hom_src(y,x)` to `hom_tgt(Fy,Fx)`,
    /// columns indexed by the source basis.
    hom_maps: Vec<Vec<Matrix>>,
}

impl LinearFunctor {
    pub fn new(
        source: Arc<LinearCategory>,
        target: Arc<LinearCategory>,
        object_map: Vec<usize>,
        hom_maps: Vec<Vec<Matrix>>,
    ) -> Result<Self, CategoryError> {
        let f = LinearFunctor { source, target, object_map, hom_maps };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(c: Arc<LinearCategory>) -> Self {
        let n = c.object_count();
        let hom_maps = (0..n)
            .map(|y| (0..n).map(|x| Matrix::identity(c.field(), c.dim_hom(y, x))).collect())
            .collect();
        LinearFunctor { source: c.clone(), target: c, object_map: (0..n).collect(), hom_maps }
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let n = self.source.object_count();
        if self.object_map.len() != n || self.hom_maps.len() != n {
            return Err(CategoryError::InvalidStructure("functor tables out of sync".into()));
        }
        if self.object_map.iter().any(|&o| o >= self.target.object_count()) {
            return Err(CategoryError::InvalidStructure("object map out of range".into()));
        }
        for y in 0..n {
            if self.hom_maps[y].len() != n {
                return Err(CategoryError::InvalidStructure("hom map table not square".into()));
            }
            for x in 0..n {
                let m = &self.hom_maps[y][x];
                let (fy, fx) = (self.object_map[y], self.object_map[x]);
                if m.rows() != self.target.dim_hom(fy, fx) || m.cols() != self.source.dim_hom(y, x) {
                    return Err(CategoryError::InvalidStructure(format!(
                        "hom map ({y},{x}) has the wrong shape"
                    )));
                }
            }
        }
        // identities
        for x in 0..n {
            let img = self.hom_maps[x][x].mul_vec(self.source.identity(x));
            if img != self.target.identity(self.object_map[x]) {
                return Err(CategoryError::InvalidStructure(format!(
                    "functor does not preserve the identity of `{}`",
                    self.source.objects()[x]
                )));
            }
        }
        // composition on basis pairs
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    let (fz, fy, fx) = (self.object_map[z], self.object_map[y], self.object_map[x]);
                    for g in 0..self.source.dim_hom(z, y) {
                        let fg = self.hom_maps[z][y].mul_vec(&self.source.basis_vec(z, y, g));
                        for h in 0..self.source.dim_hom(y, x) {
                            let fh = self.hom_maps[y][x].mul_vec(&self.source.basis_vec(y, x, h));
                            let composed_src = self.source.compose_basis(z, y, x, g, h);
                            let lhs = self.hom_maps[z][x].mul_vec(&composed_src);
                            let rhs = self.target.compose_vec(fz, fy, fx, &fg, &fh);
                            if lhs != rhs {
                                return Err(CategoryError::InvalidStructure(format!(
                                    "functor breaks composition on ({},{})",
                                    self.source.hom_labels(z, y)[g],
                                    self.source.hom_labels(y, x)[h],
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<LinearCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LinearCategory> {
        &self.target
    }

    pub fn map_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn hom_map(&self, y: usize, x: usize) -> &Matrix {
        &self.hom_maps[y][x]
    }

    /// Image of a morphism coordinate vector in `hom(y, x)`.
    pub fn map_vec(&self, y: usize, x: usize, v: &[Scalar]) -> Vec<Scalar> {
        self.hom_maps[y][x].mul_vec(v)
    }

    /// Composition `self . first` (apply `first`, then `self`).
    pub fn compose(&self, first: &LinearFunctor) -> Result<LinearFunctor, CategoryError> {
        if !std::ptr::eq(Arc::as_ptr(&first.target), Arc::as_ptr(&self.source))
            && *first.target != *self.source
        {
            return Err(CategoryError::InvalidStructure("functor middle categories disagree".into()));
        }
        let n = first.source.object_count();
        let object_map: Vec<usize> = (0..n).map(|x| self.object_map[first.object_map[x]]).collect();
        let mut hom_maps = Vec::with_capacity(n);
        for y in 0..n {
            let mut row = Vec::with_capacity(n);
            for x in 0..n {
                let (fy, fx) = (first.object_map[y], first.object_map[x]);
                row.push(self.hom_maps[fy][fx].mul(&first.hom_maps[y][x]).expect("validated shapes"));
            }
            hom_maps.push(row);
        }
        Ok(LinearFunctor { source: first.source.clone(), target: self.target.clone(), object_map, hom_maps })
    }

    /// Structural equality of the underlying data.
    pub fn same_data(&self, other: &LinearFunctor) -> bool {
        self.object_map == other.object_map
            && self.hom_maps.iter().flatten().zip(other.hom_maps.iter().flatten()).all(|(a, b)| a == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::samples;

    #[test]
    fn identity_functor_validates() {
        let c = Arc::new(samples::kronecker(FieldSpec::Rationals));
        let id = LinearFunctor::identity(c);
        assert!(id.validate().is_ok());
    }

    #[test]
    fn bad_hom_map_rejected() {
        let c = Arc::new(samples::kronecker(FieldSpec::Rationals));
        let n = c.object_count();
        let mut maps: Vec<Vec<Matrix>> = (0..n)
            .map(|y| (0..n).map(|x| Matrix::identity(c.field(), c.dim_hom(y, x))).collect())
            .collect();
        // send the identity of x to 0: breaks the unit axiom
        maps[0][0] = Matrix::zero(c.field(), 1, 1);
        let r = LinearFunctor::new(c.clone(), c.clone(), (0..n).collect(), maps);
        assert!(matches!(r, Err(CategoryError::InvalidStructure(_))));
    }
}
