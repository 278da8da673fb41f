//! Bimodules over a linear category: the standard bimodule, duals, lifts
//! along functors, twists by automorphisms, and tensor products.
//!
//! A bimodule stores one based space per object pair and the action of every
//! basis morphism as a matrix; general actions follow by linearity. The four
//! bimodule axioms are verified on all basis triples at construction.

use std::sync::Arc;

use crate::category::{CategoryError, LinearCategory, LinearFunctor};
use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Debug)]
pub struct Bimodule {
    cat: Arc<LinearCategory>,
    labels: Vec<Vec<Vec<String>>>,
    /// `left[z][y][x]`: rows `(c in hom(z,y), m in M(y,x))` pair-major,
    /// columns over the basis of `M(z,x)`.
    left: Vec<Vec<Vec<Matrix>>>,
    /// `right[y][x][u]`: rows `(m in M(y,x), c in hom(x,u))` pair-major,
    /// columns over the basis of `M(y,u)`.
    right: Vec<Vec<Vec<Matrix>>>,
}

impl Bimodule {
    pub fn new(
        cat: Arc<LinearCategory>,
        labels: Vec<Vec<Vec<String>>>,
        left: Vec<Vec<Vec<Matrix>>>,
        right: Vec<Vec<Vec<Matrix>>>,
    ) -> Result<Self, CategoryError> {
        let m = Bimodule { cat, labels, left, right };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let c = &self.cat;
        let f = c.field();
        let n = c.object_count();
        if self.labels.len() != n || self.left.len() != n || self.right.len() != n {
            return Err(CategoryError::InvalidStructure("bimodule tables out of sync".into()));
        }
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    let lb = &self.left[z][y][x];
                    if lb.rows() != c.dim_hom(z, y) * self.dim_space(y, x) || lb.cols() != self.dim_space(z, x) {
                        return Err(CategoryError::InvalidStructure(format!(
                            "left action block ({z},{y},{x}) has the wrong shape"
                        )));
                    }
                    let rb = &self.right[z][y][x];
                    if rb.rows() != self.dim_space(z, y) * c.dim_hom(y, x) || rb.cols() != self.dim_space(z, x) {
                        return Err(CategoryError::InvalidStructure(format!(
                            "right action block ({z},{y},{x}) has the wrong shape"
                        )));
                    }
                }
            }
        }
        // units act as the identity
        for y in 0..n {
            for x in 0..n {
                for j in 0..self.dim_space(y, x) {
                    let m = self.basis_vec(y, x, j);
                    if self.left_act(y, y, x, c.identity(y), &m) != m
                        || self.right_act(y, x, x, &m, c.identity(x)) != m
                    {
                        return Err(CategoryError::InvalidStructure(format!(
                            "unit axiom fails on bimodule basis ({y},{x},{j})"
                        )));
                    }
                }
            }
        }
        // associativity axioms on basis triples
        for u in 0..n {
            for z in 0..n {
                for y in 0..n {
                    for x in 0..n {
                        // (c2 c1) m = c2 (c1 m), c2 in hom(u,z), c1 in hom(z,y)
                        for c2 in 0..c.dim_hom(u, z) {
                            let c2v = c.basis_vec(u, z, c2);
                            for c1 in 0..c.dim_hom(z, y) {
                                let c1v = c.basis_vec(z, y, c1);
                                let c21 = c.compose_vec(u, z, y, &c2v, &c1v);
                                for m in 0..self.dim_space(y, x) {
                                    let mv = self.basis_vec(y, x, m);
                                    let lhs = self.left_act(u, y, x, &c21, &mv);
                                    let c1m = self.left_act(z, y, x, &c1v, &mv);
                                    let rhs = self.left_act(u, z, x, &c2v, &c1m);
                                    if lhs != rhs {
                                        return Err(CategoryError::InvalidStructure(
                                            "left associativity fails".into(),
                                        ));
                                    }
                                }
                            }
                        }
                        // m (c1 c2) = (m c1) c2, c1 in hom(x,z)... with m in M(u,y)
                        for m in 0..self.dim_space(u, z) {
                            let mv = self.basis_vec(u, z, m);
                            for c1 in 0..c.dim_hom(z, y) {
                                let c1v = c.basis_vec(z, y, c1);
                                let mc1 = self.right_act(u, z, y, &mv, &c1v);
                                for c2 in 0..c.dim_hom(y, x) {
                                    let c2v = c.basis_vec(y, x, c2);
                                    let c12 = c.compose_vec(z, y, x, &c1v, &c2v);
                                    let lhs = self.right_act(u, z, x, &mv, &c12);
                                    let rhs = self.right_act(u, y, x, &mc1, &c2v);
                                    if lhs != rhs {
                                        return Err(CategoryError::InvalidStructure(
                                            "right associativity fails".into(),
                                        ));
                                    }
                                }
                            }
                        }
                        // (c m) c' = c (m c'), c in hom(u,z), m in M(z,y), c' in hom(y,x)
                        for ci in 0..c.dim_hom(u, z) {
                            let cv = c.basis_vec(u, z, ci);
                            for m in 0..self.dim_space(z, y) {
                                let mv = self.basis_vec(z, y, m);
                                let cm = self.left_act(u, z, y, &cv, &mv);
                                for cj in 0..c.dim_hom(y, x) {
                                    let cjv = c.basis_vec(y, x, cj);
                                    let lhs = self.right_act(u, y, x, &cm, &cjv);
                                    let mc = self.right_act(z, y, x, &mv, &cjv);
                                    let rhs = self.left_act(u, z, x, &cv, &mc);
                                    if lhs != rhs {
                                        return Err(CategoryError::InvalidStructure(
                                            "middle associativity fails".into(),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let _ = f;
        Ok(())
    }

    pub fn category(&self) -> &Arc<LinearCategory> {
        &self.cat
    }

    pub fn dim_space(&self, y: usize, x: usize) -> usize {
        self.labels[y][x].len()
    }

    pub fn space_labels(&self, y: usize, x: usize) -> &[String] {
        &self.labels[y][x]
    }

    pub fn total_dim(&self) -> usize {
        let n = self.cat.object_count();
        (0..n).map(|y| (0..n).map(|x| self.dim_space(y, x)).sum::<usize>()).sum()
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        let n = self.cat.object_count();
        (0..n).map(|y| (0..n).map(|x| self.dim_space(y, x)).collect()).collect()
    }

    pub fn basis_vec(&self, y: usize, x: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![self.cat.field().zero(); self.dim_space(y, x)];
        v[j] = self.cat.field().one();
        v
    }

    pub fn left_block(&self, z: usize, y: usize, x: usize) -> &Matrix {
        &self.left[z][y][x]
    }

    pub fn right_block(&self, y: usize, x: usize, u: usize) -> &Matrix {
        &self.right[y][x][u]
    }

    /// `c . m` for `c` in `hom(z,y)` and `m` in `M(y,x)`.
    pub fn left_act(&self, z: usize, y: usize, x: usize, c: &[Scalar], m: &[Scalar]) -> Vec<Scalar> {
        let f = self.cat.field();
        let dm = self.dim_space(y, x);
        let mut pair = vec![f.zero(); c.len() * dm];
        for (i, ci) in c.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            for (j, mj) in m.iter().enumerate() {
                if !f.is_zero(mj) {
                    pair[i * dm + j] = f.mul(ci, mj);
                }
            }
        }
        self.left[z][y][x].vec_mul(&pair)
    }

    /// `m . c` for `m` in `M(y,x)` and `c` in `hom(x,u)`.
    pub fn right_act(&self, y: usize, x: usize, u: usize, m: &[Scalar], c: &[Scalar]) -> Vec<Scalar> {
        let f = self.cat.field();
        let dc = self.cat.dim_hom(x, u);
        let mut pair = vec![f.zero(); m.len() * dc];
        for (i, mi) in m.iter().enumerate() {
            if f.is_zero(mi) {
                continue;
            }
            for (j, cj) in c.iter().enumerate() {
                if !f.is_zero(cj) {
                    pair[i * dc + j] = f.mul(mi, cj);
                }
            }
        }
        self.right[y][x][u].vec_mul(&pair)
    }

    /// The standard bimodule: the category acting on itself by composition.
    pub fn standard(cat: Arc<LinearCategory>) -> Self {
        let n = cat.object_count();
        let labels: Vec<Vec<Vec<String>>> = (0..n)
            .map(|y| (0..n).map(|x| cat.hom_labels(y, x).to_vec()).collect())
            .collect();
        let left: Vec<Vec<Vec<Matrix>>> = (0..n)
            .map(|z| {
                (0..n)
                    .map(|y| (0..n).map(|x| cat.compose_block(z, y, x).clone()).collect())
                    .collect()
            })
            .collect();
        let right = left.clone();
        let m = Bimodule { cat, labels, left, right };
        debug_assert!(m.validate().is_ok());
        m
    }

    /// The zero bimodule.
    pub fn zero(cat: Arc<LinearCategory>) -> Self {
        let n = cat.object_count();
        let f = cat.field();
        let labels = vec![vec![Vec::new(); n]; n];
        let left: Vec<Vec<Vec<Matrix>>> =
            (0..n).map(|_| (0..n).map(|_| (0..n).map(|_| Matrix::zero(f, 0, 0)).collect()).collect()).collect();
        let right = left.clone();
        Bimodule { cat, labels, left, right }
    }

    /// Always true for this in-memory representation; the hook exists for
    /// interface completeness.
    pub fn is_locally_finite(&self) -> bool {
        true
    }

    /// The dual bimodule: `DM(y,x) = M(x,y)^*` with transposed, side-swapped
    /// actions.
    pub fn dual(&self) -> Bimodule {
        let c = &self.cat;
        let f = c.field();
        let n = c.object_count();
        let labels: Vec<Vec<Vec<String>>> = (0..n)
            .map(|y| {
                (0..n)
                    .map(|x| self.labels[x][y].iter().map(|l| format!("{l}*")).collect())
                    .collect()
            })
            .collect();
        let mut left = Vec::with_capacity(n);
        for z in 0..n {
            let mut per_y = Vec::with_capacity(n);
            for y in 0..n {
                let mut per_x = Vec::with_capacity(n);
                for x in 0..n {
                    // (c . phi)(m) = phi(m . c): transpose of right[x][z][y]
                    let dc = c.dim_hom(z, y);
                    let dphi = self.dim_space(x, y); // dim of DM(y,x)
                    let dtgt = self.dim_space(x, z); // dim of DM(z,x)
                    let src = &self.right[x][z][y];
                    let mut block = Matrix::zero(f, dc * dphi, dtgt);
                    for i in 0..dc {
                        for j in 0..dphi {
                            for k in 0..dtgt {
                                let s = src.get(k * dc + i, j);
                                if !f.is_zero(&s) {
                                    block.set(i * dphi + j, k, s);
                                }
                            }
                        }
                    }
                    per_x.push(block);
                }
                per_y.push(per_x);
            }
            left.push(per_y);
        }
        let mut right = Vec::with_capacity(n);
        for y in 0..n {
            let mut per_x = Vec::with_capacity(n);
            for x in 0..n {
                let mut per_u = Vec::with_capacity(n);
                for u in 0..n {
                    // (phi . c)(m) = phi(c . m): transpose of left[x][u][y]
                    let dphi = self.dim_space(x, y); // dim of DM(y,x)
                    let dc = c.dim_hom(x, u);
                    let dtgt = self.dim_space(u, y); // dim of DM(y,u)
                    let src = &self.left[x][u][y];
                    let mut block = Matrix::zero(f, dphi * dc, dtgt);
                    for j in 0..dphi {
                        for i in 0..dc {
                            for k in 0..dtgt {
                                let s = src.get(i * dtgt + k, j);
                                if !f.is_zero(&s) {
                                    block.set(j * dc + i, k, s);
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_x.push(per_u);
            }
            right.push(per_x);
        }
        let m = Bimodule { cat: self.cat.clone(), labels, left, right };
        debug_assert!(m.validate().is_ok(), "dual bimodule axioms");
        m
    }

    /// Pullback along a functor: `LM(y,x) = M(Fy, Fx)` with actions through
    /// the functor's hom maps. Defined for any functor.
    pub fn lift(f: &LinearFunctor, m: &Bimodule) -> Result<Bimodule, CategoryError> {
        if **f.target() != **m.category() {
            return Err(CategoryError::InvalidStructure("lift: bimodule lives over the wrong category".into()));
        }
        let src = f.source().clone();
        let fld = src.field();
        let n = src.object_count();
        let labels: Vec<Vec<Vec<String>>> = (0..n)
            .map(|y| {
                (0..n)
                    .map(|x| m.space_labels(f.map_object(y), f.map_object(x)).to_vec())
                    .collect()
            })
            .collect();
        let mut left = Vec::with_capacity(n);
        for z in 0..n {
            let mut per_y = Vec::with_capacity(n);
            for y in 0..n {
                let mut per_x = Vec::with_capacity(n);
                for x in 0..n {
                    let (fz, fy, fx) = (f.map_object(z), f.map_object(y), f.map_object(x));
                    let dc = src.dim_hom(z, y);
                    let dm = m.dim_space(fy, fx);
                    let mut block = Matrix::zero(fld, dc * dm, m.dim_space(fz, fx));
                    for i in 0..dc {
                        let fc = f.map_vec(z, y, &src.basis_vec(z, y, i));
                        for j in 0..dm {
                            let out = m.left_act(fz, fy, fx, &fc, &m.basis_vec(fy, fx, j));
                            for (t, s) in out.into_iter().enumerate() {
                                if !fld.is_zero(&s) {
                                    block.set(i * dm + j, t, s);
                                }
                            }
                        }
                    }
                    per_x.push(block);
                }
                per_y.push(per_x);
            }
            left.push(per_y);
        }
        let mut right = Vec::with_capacity(n);
        for y in 0..n {
            let mut per_x = Vec::with_capacity(n);
            for x in 0..n {
                let mut per_u = Vec::with_capacity(n);
                for u in 0..n {
                    let (fy, fx, fu) = (f.map_object(y), f.map_object(x), f.map_object(u));
                    let dm = m.dim_space(fy, fx);
                    let dc = src.dim_hom(x, u);
                    let mut block = Matrix::zero(fld, dm * dc, m.dim_space(fy, fu));
                    for j in 0..dm {
                        for i in 0..dc {
                            let fc = f.map_vec(x, u, &src.basis_vec(x, u, i));
                            let out = m.right_act(fy, fx, fu, &m.basis_vec(fy, fx, j), &fc);
                            for (t, s) in out.into_iter().enumerate() {
                                if !fld.is_zero(&s) {
                                    block.set(j * dc + i, t, s);
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_x.push(per_u);
            }
            right.push(per_x);
        }
        Bimodule::new(src, labels, left, right)
    }

    /// Twist by an automorphism: the `(y,x)` space becomes
    /// `M(s^{-1}y, s^{-1}x)`, and morphisms act through `s^{-1}`.
    pub fn twist_by(&self, s_inv: &LinearFunctor) -> Result<Bimodule, CategoryError> {
        let c = &self.cat;
        if **s_inv.source() != **c || **s_inv.target() != **c {
            return Err(CategoryError::InvalidStructure("twist: functor is not an endofunctor of the base".into()));
        }
        let fld = c.field();
        let n = c.object_count();
        let inv = |o: usize| s_inv.map_object(o);
        let labels: Vec<Vec<Vec<String>>> =
            (0..n).map(|y| (0..n).map(|x| self.labels[inv(y)][inv(x)].clone()).collect()).collect();
        let mut left = Vec::with_capacity(n);
        for z in 0..n {
            let mut per_y = Vec::with_capacity(n);
            for y in 0..n {
                let mut per_x = Vec::with_capacity(n);
                for x in 0..n {
                    let dc = c.dim_hom(z, y);
                    let dm = self.dim_space(inv(y), inv(x));
                    let mut block = Matrix::zero(fld, dc * dm, self.dim_space(inv(z), inv(x)));
                    for i in 0..dc {
                        let sc = s_inv.map_vec(z, y, &c.basis_vec(z, y, i));
                        for j in 0..dm {
                            let out =
                                self.left_act(inv(z), inv(y), inv(x), &sc, &self.basis_vec(inv(y), inv(x), j));
                            for (t, s) in out.into_iter().enumerate() {
                                if !fld.is_zero(&s) {
                                    block.set(i * dm + j, t, s);
                                }
                            }
                        }
                    }
                    per_x.push(block);
                }
                per_y.push(per_x);
            }
            left.push(per_y);
        }
        let mut right = Vec::with_capacity(n);
        for y in 0..n {
            let mut per_x = Vec::with_capacity(n);
            for x in 0..n {
                let mut per_u = Vec::with_capacity(n);
                for u in 0..n {
                    let dm = self.dim_space(inv(y), inv(x));
                    let dc = c.dim_hom(x, u);
                    let mut block = Matrix::zero(fld, dm * dc, self.dim_space(inv(y), inv(u)));
                    for j in 0..dm {
                        for i in 0..dc {
                            let sc = s_inv.map_vec(x, u, &c.basis_vec(x, u, i));
                            let out = self.right_act(
                                inv(y),
                                inv(x),
                                inv(u),
                                &self.basis_vec(inv(y), inv(x), j),
                                &sc,
                            );
                            for (t, s) in out.into_iter().enumerate() {
                                if !fld.is_zero(&s) {
                                    block.set(j * dc + i, t, s);
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_x.push(per_u);
            }
            right.push(per_x);
        }
        Bimodule::new(self.cat.clone(), labels, left, right)
    }

    /// The printed tensor product: `(M1 (x) M2)(y,x) = (+)_z M1(y,z) (x)
    /// M2(z,x)`, outer actions from the outer factors, no coequalizing of
    /// the middle.
    pub fn tensor(&self, other: &Bimodule) -> Result<Bimodule, CategoryError> {
        if **self.category() != **other.category() {
            return Err(CategoryError::InvalidStructure("tensor: base categories differ".into()));
        }
        let c = &self.cat;
        let fld = c.field();
        let n = c.object_count();
        // basis of the (y,x) space: (z, i in M1(y,z), j in M2(z,x))
        let layout = |y: usize, x: usize| -> Vec<(usize, usize, usize)> {
            let mut v = Vec::new();
            for z in 0..n {
                for i in 0..self.dim_space(y, z) {
                    for j in 0..other.dim_space(z, x) {
                        v.push((z, i, j));
                    }
                }
            }
            v
        };
        let labels: Vec<Vec<Vec<String>>> = (0..n)
            .map(|y| {
                (0..n)
                    .map(|x| {
                        layout(y, x)
                            .into_iter()
                            .map(|(z, i, j)| {
                                format!(
                                    "{}(x){}",
                                    self.labels[y][z][i], other.space_labels(z, x)[j]
                                )
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut left = Vec::with_capacity(n);
        for w in 0..n {
            let mut per_y = Vec::with_capacity(n);
            for y in 0..n {
                let mut per_x = Vec::with_capacity(n);
                for x in 0..n {
                    let src_layout = layout(y, x);
                    let tgt_layout = layout(w, x);
                    let dc = c.dim_hom(w, y);
                    let mut block = Matrix::zero(fld, dc * src_layout.len(), tgt_layout.len());
                    for ci in 0..dc {
                        let cv = c.basis_vec(w, y, ci);
                        for (s_idx, &(z, i, j)) in src_layout.iter().enumerate() {
                            let acted = self.left_act(w, y, z, &cv, &self.basis_vec(y, z, i));
                            for (t_idx, &(tz, ti, tj)) in tgt_layout.iter().enumerate() {
                                if tz == z && tj == j && !fld.is_zero(&acted[ti]) {
                                    block.set(ci * src_layout.len() + s_idx, t_idx, acted[ti].clone());
                                }
                            }
                        }
                    }
                    per_x.push(block);
                }
                per_y.push(per_x);
            }
            left.push(per_y);
        }
        let mut right = Vec::with_capacity(n);
        for y in 0..n {
            let mut per_x = Vec::with_capacity(n);
            for x in 0..n {
                let mut per_u = Vec::with_capacity(n);
                for u in 0..n {
                    let src_layout = layout(y, x);
                    let tgt_layout = layout(y, u);
                    let dc = c.dim_hom(x, u);
                    let mut block = Matrix::zero(fld, src_layout.len() * dc, tgt_layout.len());
                    for (s_idx, &(z, i, j)) in src_layout.iter().enumerate() {
                        for ci in 0..dc {
                            let cv = c.basis_vec(x, u, ci);
                            let acted = other.right_act(z, x, u, &other.basis_vec(z, x, j), &cv);
                            for (t_idx, &(tz, ti, tj)) in tgt_layout.iter().enumerate() {
                                if tz == z && ti == i && !fld.is_zero(&acted[tj]) {
                                    block.set(s_idx * dc + ci, t_idx, acted[tj].clone());
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_x.push(per_u);
            }
            right.push(per_x);
        }
        Bimodule::new(self.cat.clone(), labels, left, right)
    }

    /// Structural equality of spaces and action matrices (labels included).
    pub fn same_data(&self, other: &Bimodule) -> bool {
        self.labels == other.labels
            && self.left == other.left
            && self.right == other.right
    }

    /// Equality of dimension tables and action matrices, ignoring labels.
    pub fn same_shape_and_actions(&self, other: &Bimodule) -> bool {
        self.dims() == other.dims() && self.left == other.left && self.right == other.right
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::FieldSpec;
    use crate::samples;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn standard_dims() {
        let k = Bimodule::standard(Arc::new(samples::one_object_field(q())));
        assert_eq!(k.total_dim(), 1);

        let b = Bimodule::standard(Arc::new(samples::kronecker(q())));
        let c = b.category().clone();
        let x = c.object_index("x").unwrap();
        let y = c.object_index("y").unwrap();
        assert_eq!(b.dim_space(x, x), 1);
        assert_eq!(b.dim_space(y, x), 2);
        assert_eq!(b.dim_space(x, y), 0);
        assert_eq!(b.dim_space(y, y), 1);

        let cover = Bimodule::standard(Arc::new(samples::kronecker_double_cover(q())));
        assert_eq!(cover.total_dim(), 8);
    }

    #[test]
    fn dual_transposes_dims() {
        let b = Bimodule::standard(Arc::new(samples::kronecker(q())));
        let d = b.dual();
        let dims = b.dims();
        let ddims = d.dims();
        for y in 0..2 {
            for x in 0..2 {
                assert_eq!(ddims[y][x], dims[x][y]);
            }
        }
    }

    #[test]
    fn double_dual_is_original() {
        for cat in [samples::kronecker(q()), samples::dual_numbers(q())] {
            let b = Bimodule::standard(Arc::new(cat));
            let dd = b.dual().dual();
            assert!(b.same_shape_and_actions(&dd));
        }
    }

    #[test]
    fn lift_along_identity() {
        let c = Arc::new(samples::kronecker(q()));
        let b = Bimodule::standard(c.clone());
        let id = LinearFunctor::identity(c);
        let lifted = Bimodule::lift(&id, &b).unwrap();
        assert!(b.same_data(&lifted));
    }

    #[test]
    fn twist_by_identity() {
        let c = Arc::new(samples::kronecker_double_cover(q()));
        let b = Bimodule::standard(c.clone());
        let id = LinearFunctor::identity(c);
        let t = b.twist_by(&id).unwrap();
        assert!(b.same_data(&t));
    }

    #[test]
    fn tensor_with_ground_field() {
        let c = Arc::new(samples::one_object_field(q()));
        let b = Bimodule::standard(c);
        let t = b.tensor(&b).unwrap();
        assert_eq!(t.dims(), b.dims());
    }

    #[test]
    fn tensor_square_of_kronecker() {
        let c = Arc::new(samples::kronecker(q()));
        let b = Bimodule::standard(c.clone());
        let t = b.tensor(&b).unwrap();
        let x = c.object_index("x").unwrap();
        let y = c.object_index("y").unwrap();
        // dim (B(x)B)(y,x) = sum_z dim B(y,z) dim B(z,x) = 1*2 + 2*1 = 4
        assert_eq!(t.dim_space(y, x), 4);
        assert_eq!(t.dim_space(x, y), 0);
        assert_eq!(t.dim_space(x, x), 1);
    }

    #[test]
    fn tensor_with_zero() {
        let c = Arc::new(samples::kronecker(q()));
        let b = Bimodule::standard(c.clone());
        let z = Bimodule::zero(c);
        let t = b.tensor(&z).unwrap();
        assert_eq!(t.total_dim(), 0);
    }

    #[test]
    fn locally_finite() {
        let b = Bimodule::standard(Arc::new(samples::kronecker(q())));
        assert!(b.is_locally_finite());
        assert!(b.dual().is_locally_finite());
    }

    #[test]
    fn base_mismatch_rejected() {
        let b1 = Bimodule::standard(Arc::new(samples::kronecker(q())));
        let b2 = Bimodule::standard(Arc::new(samples::a2(q())));
        assert!(b1.tensor(&b2).is_err());
    }
}
