use std::sync::Arc;

use crate::linalg::{FieldSpec, Matrix, Scalar};

use super::linear::LinearCategory;
use super::quiver::QuiverPresentation;
use super::{CategoryError, LinearFunctor};

/// A category built from a presentation, keeping the path bookkeeping so
/// that arrow-level data (monomial functors, relation checks) can still be
/// interpreted after the quotient is taken.
pub struct PresentedCategory {
    presentation: QuiverPresentation,
    category: Arc<LinearCategory>,
}

impl PresentedCategory {
    pub fn build(q: QuiverPresentation, field: FieldSpec) -> Result<Self, CategoryError> {
        let category = Arc::new(LinearCategory::from_presentation(&q, field)?);
        Ok(PresentedCategory { presentation: q, category })
    }

    pub fn category(&self) -> &Arc<LinearCategory> {
        &self.category
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    /// Position of an arrow's residue class in its hom basis, or the
    /// expansion when the arrow reduces against the ideal. Arrows are
    /// length-1 paths, so the label lookup is exact when the class is a
    /// basis element.
    fn arrow_endpoint_indices(&self, arrow: usize) -> (usize, usize) {
        let a = &self.presentation.arrows[arrow];
        let s = self.presentation.vertex_index(&a.source).unwrap();
        let t = self.presentation.vertex_index(&a.target).unwrap();
        (s, t)
    }

    /// Builds the endofunctor determined by a vertex permutation and a
    /// monomial arrow map `arrow -> scalar * arrow'`. Fails when incidence
    /// is not respected, when the map does not extend to the quotient
    /// (relations not preserved), or when functoriality breaks.
    pub fn monomial_endofunctor(
        &self,
        vertex_map: &[usize],
        arrow_map: &[(Scalar, usize)],
    ) -> Result<LinearFunctor, CategoryError> {
        let q = &self.presentation;
        let c = &self.category;
        let field = c.field();
        let nv = q.vertices.len();
        let na = q.arrows.len();
        if vertex_map.len() != nv || arrow_map.len() != na {
            return Err(CategoryError::InvalidStructure("action map tables have the wrong size".into()));
        }
        {
            let mut seen = vec![false; nv];
            for &v in vertex_map {
                if v >= nv || seen[v] {
                    return Err(CategoryError::InvalidStructure("vertex map is not a permutation".into()));
                }
                seen[v] = true;
            }
        }
        for (a, &(ref s, img)) in arrow_map.iter().enumerate() {
            if img >= na {
                return Err(CategoryError::UnknownArrow(format!("#{img}")));
            }
            if field.is_zero(s) || !field.contains(s) {
                return Err(CategoryError::InvalidStructure("arrow scalar must be a nonzero field element".into()));
            }
            let (src, tgt) = self.arrow_endpoint_indices(a);
            let (isrc, itgt) = self.arrow_endpoint_indices(img);
            if vertex_map[src] != isrc || vertex_map[tgt] != itgt {
                return Err(CategoryError::InvalidStructure(format!(
                    "arrow map breaks incidence on `{}`",
                    q.arrows[a].name
                )));
            }
        }

        // hom map per pair: basis paths are readable from the labels
        let label_path = |label: &str| -> Vec<usize> {
            if label.starts_with("e_") {
                Vec::new()
            } else {
                label.split('.').map(|n| q.arrow_index(n).expect("basis label is a path")).collect()
            }
        };
        let path_label = |arrows: &[usize], src: usize| -> String {
            if arrows.is_empty() {
                format!("e_{}", q.vertices[src])
            } else {
                arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
            }
        };

        let mut hom_maps = Vec::with_capacity(nv);
        for y in 0..nv {
            let mut row = Vec::with_capacity(nv);
            for x in 0..nv {
                let (fy, fx) = (vertex_map[y], vertex_map[x]);
                let dim_src = c.dim_hom(y, x);
                let mut m = Matrix::zero(field, c.dim_hom(fy, fx), dim_src);
                for j in 0..dim_src {
                    let path = label_path(&c.hom_labels(y, x)[j]);
                    let mut coef = field.one();
                    let image: Vec<usize> = path
                        .iter()
                        .map(|&a| {
                            coef = field.mul(&coef, &arrow_map[a].0);
                            arrow_map[a].1
                        })
                        .collect();
                    // the image path's residue class, located by label; a
                    // missing label means the class is not a plain basis
                    // path, which monomial maps of admissible presentations
                    // do not produce
                    let target_label = path_label(&image, fx);
                    let Some(pos) = c.hom_labels(fy, fx).iter().position(|l| *l == target_label) else {
                        return Err(CategoryError::InvalidStructure(format!(
                            "image of basis path `{}` is not a basis path; relations are not preserved",
                            c.hom_labels(y, x)[j]
                        )));
                    };
                    m.set(pos, j, coef.clone());
                }
                row.push(m);
            }
            hom_maps.push(row);
        }
        LinearFunctor::new(self.category.clone(), self.category.clone(), vertex_map.to_vec(), hom_maps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::Arrow;

    fn cover() -> PresentedCategory {
        let q = QuiverPresentation::new(
            vec!["x".into(), "y".into(), "tx".into(), "ty".into()],
            vec![
                Arrow { name: "a".into(), source: "x".into(), target: "y".into() },
                Arrow { name: "b".into(), source: "x".into(), target: "ty".into() },
                Arrow { name: "ta".into(), source: "tx".into(), target: "ty".into() },
                Arrow { name: "tb".into(), source: "tx".into(), target: "y".into() },
            ],
            vec![],
            None,
        )
        .unwrap();
        PresentedCategory::build(q, FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn swap_endofunctor() {
        let p = cover();
        let f = FieldSpec::Rationals;
        // x <-> tx, y <-> ty, a <-> ta, b <-> tb
        let functor = p
            .monomial_endofunctor(&[2, 3, 0, 1], &[(f.one(), 2), (f.one(), 3), (f.one(), 0), (f.one(), 1)])
            .unwrap();
        assert_eq!(functor.map_object(0), 2);
        // squaring gives the identity
        let sq = functor.compose(&functor).unwrap();
        assert!(sq.same_data(&LinearFunctor::identity(p.category().clone())));
    }

    #[test]
    fn incidence_violation_rejected() {
        let p = cover();
        let f = FieldSpec::Rationals;
        // identity on vertices, but a -> ta breaks incidence
        let r = p.monomial_endofunctor(&[0, 1, 2, 3], &[(f.one(), 2), (f.one(), 1), (f.one(), 2), (f.one(), 3)]);
        assert!(r.is_err());
    }
}
