use std::collections::BTreeMap;

use crate::linalg::{FieldSpec, Matrix, RrefAccumulator, Scalar, Subspace};

use super::algebra;
use super::quiver::QuiverPresentation;
use super::CategoryError;

/// A finite `k`-linear category with a chosen basis of every hom space.
///
/// `hom_labels[y][x]` names the basis of the morphisms `x -> y`;
/// `compose[z][y][x]` holds the structure constants of composition
/// `(g, f) -> g . f` as a matrix whose row `g_idx * dim(y,x) + f_idx` is the
/// coordinate vector of the composite in `hom(z,x)`. Associativity and the
/// unit axioms are verified on all basis tuples at construction.
#[derive(Clone, PartialEq, Debug)]
pub struct LinearCategory {
    field: FieldSpec,
    objects: Vec<String>,
    hom_labels: Vec<Vec<Vec<String>>>,
    identities: Vec<Vec<Scalar>>,
    compose: Vec<Vec<Vec<Matrix>>>,
}

/// Results of the hypothesis checks used by the degree-one theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CategoryProperties {
    pub connected: bool,
    pub hom_finite: bool,
    pub basic: bool,
    pub totally_split: bool,
}

impl LinearCategory {
    /// Builds a category from raw data and verifies all axioms exhaustively.
    pub fn new(
        field: FieldSpec,
        objects: Vec<String>,
        hom_labels: Vec<Vec<Vec<String>>>,
        identities: Vec<Vec<Scalar>>,
        compose: Vec<Vec<Vec<Matrix>>>,
    ) -> Result<Self, CategoryError> {
        let cat = LinearCategory { field, objects, hom_labels, identities, compose };
        cat.validate()?;
        Ok(cat)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let n = self.objects.len();
        {
            let mut seen = BTreeMap::new();
            for o in &self.objects {
                if seen.insert(o, ()).is_some() {
                    return Err(CategoryError::DuplicateName(o.clone()));
                }
            }
        }
        if self.hom_labels.len() != n || self.identities.len() != n || self.compose.len() != n {
            return Err(CategoryError::InvalidStructure("table sizes disagree with object count".into()));
        }
        for y in 0..n {
            if self.hom_labels[y].len() != n {
                return Err(CategoryError::InvalidStructure("hom table is not square".into()));
            }
        }
        for x in 0..n {
            if self.identities[x].len() != self.dim_hom(x, x) {
                return Err(CategoryError::InvalidStructure(format!(
                    "identity of `{}` has wrong length",
                    self.objects[x]
                )));
            }
        }
        for z in 0..n {
            for y in 0..n {
                for x in 0..n {
                    let block = &self.compose[z][y][x];
                    let expected = (self.dim_hom(z, y) * self.dim_hom(y, x), self.dim_hom(z, x));
                    if (block.rows(), block.cols()) != expected {
                        return Err(CategoryError::InvalidStructure(format!(
                            "composition block ({z},{y},{x}) has shape {}x{}, expected {}x{}",
                            block.rows(),
                            block.cols(),
                            expected.0,
                            expected.1
                        )));
                    }
                    if block.field() != self.field {
                        return Err(CategoryError::InvalidStructure("composition block over wrong field".into()));
                    }
                }
            }
        }
        // unit axioms on every basis morphism
        for y in 0..n {
            for x in 0..n {
                for j in 0..self.dim_hom(y, x) {
                    let e = self.basis_vec(y, x, j);
                    let left = self.compose_vec(y, y, x, &self.identities[y], &e);
                    let right = self.compose_vec(y, x, x, &e, &self.identities[x]);
                    if left != e || right != e {
                        return Err(CategoryError::InvalidStructure(format!(
                            "unit axiom fails on `{}`",
                            self.hom_labels[y][x][j]
                        )));
                    }
                }
            }
        }
        // associativity on every composable basis triple
        for w in 0..n {
            for z in 0..n {
                for y in 0..n {
                    for x in 0..n {
                        for h in 0..self.dim_hom(w, z) {
                            let hv = self.basis_vec(w, z, h);
                            for g in 0..self.dim_hom(z, y) {
                                let gv = self.basis_vec(z, y, g);
                                let hg = self.compose_vec(w, z, y, &hv, &gv);
                                for f in 0..self.dim_hom(y, x) {
                                    let fv = self.basis_vec(y, x, f);
                                    let gf = self.compose_vec(z, y, x, &gv, &fv);
                                    let lhs = self.compose_vec(w, y, x, &hg, &fv);
                                    let rhs = self.compose_vec(w, z, x, &hv, &gf);
                                    if lhs != rhs {
                                        return Err(CategoryError::InvalidStructure(format!(
                                            "associativity fails on ({}, {}, {})",
                                            self.hom_labels[w][z][h],
                                            self.hom_labels[z][y][g],
                                            self.hom_labels[y][x][f],
                                        )));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn dim_hom(&self, y: usize, x: usize) -> usize {
        self.hom_labels[y][x].len()
    }

    pub fn hom_labels(&self, y: usize, x: usize) -> &[String] {
        &self.hom_labels[y][x]
    }

    pub fn identity(&self, x: usize) -> &[Scalar] {
        &self.identities[x]
    }

    pub fn compose_block(&self, z: usize, y: usize, x: usize) -> &Matrix {
        &self.compose[z][y][x]
    }

    /// Unit coordinate vector of the `j`-th basis morphism of `hom(y, x)`.
    pub fn basis_vec(&self, y: usize, x: usize, j: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim_hom(y, x)];
        v[j] = self.field.one();
        v
    }

    /// Composite `g . f` of coordinate vectors `g` in `hom(z,y)`, `f` in
    /// `hom(y,x)`.
    pub fn compose_vec(&self, z: usize, y: usize, x: usize, g: &[Scalar], f: &[Scalar]) -> Vec<Scalar> {
        let dzy = self.dim_hom(z, y);
        let dyx = self.dim_hom(y, x);
        assert_eq!(g.len(), dzy, "left factor length");
        assert_eq!(f.len(), dyx, "right factor length");
        let fld = self.field;
        let mut pair = vec![fld.zero(); dzy * dyx];
        for (i, gi) in g.iter().enumerate() {
            if fld.is_zero(gi) {
                continue;
            }
            for (j, fj) in f.iter().enumerate() {
                if !fld.is_zero(fj) {
                    pair[i * dyx + j] = fld.mul(gi, fj);
                }
            }
        }
        self.compose[z][y][x].vec_mul(&pair)
    }

    /// Composite of two basis morphisms.
    pub fn compose_basis(&self, z: usize, y: usize, x: usize, g: usize, f: usize) -> Vec<Scalar> {
        let dyx = self.dim_hom(y, x);
        self.compose[z][y][x].row(g * dyx + f)
    }

    pub fn total_dim(&self) -> usize {
        let n = self.objects.len();
        (0..n).map(|y| (0..n).map(|x| self.dim_hom(y, x)).sum::<usize>()).sum()
    }

    pub fn hom_dims(&self) -> Vec<Vec<usize>> {
        let n = self.objects.len();
        (0..n).map(|y| (0..n).map(|x| self.dim_hom(y, x)).collect()).collect()
    }

    /// Builds the category presented by a quiver with relations: hom bases
    /// are residue classes of paths modulo the two-sided ideal generated by
    /// the relations (and all paths of length `>= nilpotence_bound` when a
    /// bound is present); composition is path concatenation followed by
    /// reduction.
    pub fn from_presentation(q: &QuiverPresentation, field: FieldSpec) -> Result<Self, CategoryError> {
        let n = q.vertices.len();
        let paths = q.enumerate_paths();
        let cap = q.nilpotence_bound.map(|b| b - 1);

        // path position lookup per hom pair
        let mut index: Vec<Vec<BTreeMap<Vec<usize>, usize>>> = vec![vec![BTreeMap::new(); n]; n];
        for y in 0..n {
            for x in 0..n {
                for (i, p) in paths[y][x].iter().enumerate() {
                    index[y][x].insert(p.arrows.clone(), i);
                }
            }
        }

        let mut ideal: Vec<Vec<RrefAccumulator>> = (0..n)
            .map(|y| (0..n).map(|x| RrefAccumulator::new(field, paths[y][x].len())).collect())
            .collect();

        for rel in &q.relations {
            if rel.terms.is_empty() {
                continue;
            }
            let (src, tgt) = q.path_endpoints(&rel.terms[0].1)?;
            let mut vec = vec![field.zero(); paths[tgt][src].len()];
            for (coef, path) in &rel.terms {
                if !field.contains(coef) {
                    return Err(CategoryError::Field(crate::linalg::LinAlgError::BadScalar(coef.to_string())));
                }
                if cap.is_some_and(|c| path.len() > c) {
                    continue; // the path is already zero under the bound
                }
                let arrows: Vec<usize> = path.iter().map(|a| q.arrow_index(a).unwrap()).collect();
                let pos = index[tgt][src][&arrows];
                vec[pos] = field.add(&vec[pos], coef);
            }
            ideal[tgt][src].insert(vec);
        }

        // saturate: multiply current generators by arrows on both sides
        // until the spans stabilize
        loop {
            let mut grew = false;
            let snapshot: Vec<(usize, usize, Vec<Vec<Scalar>>)> = (0..n)
                .flat_map(|y| (0..n).map(move |x| (y, x)))
                .map(|(y, x)| (y, x, ideal[y][x].rows().to_vec()))
                .collect();
            for (y, x, rows) in snapshot {
                for v in rows {
                    for (ai, a) in q.arrows.iter().enumerate() {
                        // extend on the target side: path, then a
                        if q.vertex_index(&a.source).unwrap() == y {
                            let z = q.vertex_index(&a.target).unwrap();
                            let mut w = vec![field.zero(); paths[z][x].len()];
                            let mut any = false;
                            for (pos, coef) in v.iter().enumerate() {
                                if field.is_zero(coef) {
                                    continue;
                                }
                                let p = &paths[y][x][pos];
                                if cap.is_some_and(|c| p.arrows.len() + 1 > c) {
                                    continue;
                                }
                                let mut arrows = p.arrows.clone();
                                arrows.push(ai);
                                let npos = index[z][x][&arrows];
                                w[npos] = field.add(&w[npos], coef);
                                any = true;
                            }
                            if any && ideal[z][x].insert(w) {
                                grew = true;
                            }
                        }
                        // extend on the source side: b, then path
                        if q.vertex_index(&a.target).unwrap() == x {
                            let u = q.vertex_index(&a.source).unwrap();
                            let mut w = vec![field.zero(); paths[y][u].len()];
                            let mut any = false;
                            for (pos, coef) in v.iter().enumerate() {
                                if field.is_zero(coef) {
                                    continue;
                                }
                                let p = &paths[y][x][pos];
                                if cap.is_some_and(|c| p.arrows.len() + 1 > c) {
                                    continue;
                                }
                                let mut arrows = vec![ai];
                                arrows.extend(&p.arrows);
                                let npos = index[y][u][&arrows];
                                w[npos] = field.add(&w[npos], coef);
                                any = true;
                            }
                            if any && ideal[y][u].insert(w) {
                                grew = true;
                            }
                        }
                    }
                }
            }
            if !grew {
                break;
            }
        }

        // residue basis: non-pivot paths, in path order
        let mut residues: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; n];
        for y in 0..n {
            for x in 0..n {
                for i in 0..paths[y][x].len() {
                    if !ideal[y][x].pivots().contains(&i) {
                        residues[y][x].push(i);
                    }
                }
            }
        }
        let reduce_path = |y: usize, x: usize, pos: usize| -> Vec<Scalar> {
            let mut v = vec![field.zero(); paths[y][x].len()];
            v[pos] = field.one();
            ideal[y][x].reduce(&mut v);
            residues[y][x].iter().map(|&i| v[i].clone()).collect()
        };

        let hom_labels: Vec<Vec<Vec<String>>> = (0..n)
            .map(|y| {
                (0..n)
                    .map(|x| residues[y][x].iter().map(|&i| paths[y][x][i].label(q)).collect())
                    .collect()
            })
            .collect();
        let identities: Vec<Vec<Scalar>> = (0..n)
            .map(|x| {
                // e_x is the unique length-0 path, position 0, never in the ideal
                let mut v = vec![field.zero(); residues[x][x].len()];
                let slot = residues[x][x].iter().position(|&i| i == 0).expect("identity path survives");
                v[slot] = field.one();
                v
            })
            .collect();

        let mut compose: Vec<Vec<Vec<Matrix>>> = Vec::with_capacity(n);
        for z in 0..n {
            let mut per_y = Vec::with_capacity(n);
            for y in 0..n {
                let mut per_x = Vec::with_capacity(n);
                for x in 0..n {
                    let dzy = residues[z][y].len();
                    let dyx = residues[y][x].len();
                    let dzx = residues[z][x].len();
                    let mut block = Matrix::zero(field, dzy * dyx, dzx);
                    for (gi, &gpos) in residues[z][y].iter().enumerate() {
                        let gp = &paths[z][y][gpos];
                        for (fi, &fpos) in residues[y][x].iter().enumerate() {
                            let fp = &paths[y][x][fpos];
                            let total = fp.arrows.len() + gp.arrows.len();
                            if cap.is_some_and(|c| total > c) {
                                continue; // composite is zero
                            }
                            let mut arrows = fp.arrows.clone();
                            arrows.extend(&gp.arrows);
                            let pos = index[z][x][&arrows];
                            let coords = reduce_path(z, x, pos);
                            for (col, s) in coords.into_iter().enumerate() {
                                if !field.is_zero(&s) {
                                    block.set(gi * dyx + fi, col, s);
                                }
                            }
                        }
                    }
                    per_x.push(block);
                }
                per_y.push(per_x);
            }
            compose.push(per_y);
        }

        LinearCategory::new(field, q.vertices.clone(), hom_labels, identities, compose)
    }

    /// Replaces a set of objects by a single object whose endomorphism
    /// algebra is the flat algebra of the full subcategory; hom spaces
    /// to and from the rest are the evident direct sums.
    pub fn contract(&self, subset: &[usize]) -> Result<LinearCategory, CategoryError> {
        let n = self.objects.len();
        let mut subset: Vec<usize> = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if subset.is_empty() || subset.iter().any(|&i| i >= n) {
            return Err(CategoryError::BadObjectSubset(format!("{subset:?}")));
        }
        let kept: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
        // new object `k` is a pair list of original (y, x); kept objects are
        // singleton diagonals
        let mut new_objects: Vec<String> = kept.iter().map(|&i| self.objects[i].clone()).collect();
        new_objects.push(subset.iter().map(|&i| self.objects[i].as_str()).collect::<Vec<_>>().join("+"));
        let m = new_objects.len();
        let lumped = m - 1;

        // each new hom space is a list of (orig_y, orig_x, basis index)
        let members = |v: usize| -> Vec<usize> {
            if v == lumped {
                subset.clone()
            } else {
                vec![kept[v]]
            }
        };
        let mut entries: Vec<Vec<Vec<(usize, usize, usize)>>> = vec![vec![Vec::new(); m]; m];
        for v in 0..m {
            for u in 0..m {
                for &oy in &members(v) {
                    for &ox in &members(u) {
                        for j in 0..self.dim_hom(oy, ox) {
                            entries[v][u].push((oy, ox, j));
                        }
                    }
                }
            }
        }
        let labels: Vec<Vec<Vec<String>>> = (0..m)
            .map(|v| {
                (0..m)
                    .map(|u| {
                        entries[v][u]
                            .iter()
                            .map(|&(oy, ox, j)| {
                                if members(v).len() == 1 && members(u).len() == 1 {
                                    self.hom_labels[oy][ox][j].clone()
                                } else {
                                    format!("{}<-{}:{}", self.objects[oy], self.objects[ox], self.hom_labels[oy][ox][j])
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let identities: Vec<Vec<Scalar>> = (0..m)
            .map(|v| {
                entries[v][v]
                    .iter()
                    .map(|&(oy, ox, j)| {
                        if oy == ox {
                            self.identities[oy][j].clone()
                        } else {
                            self.field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut compose: Vec<Vec<Vec<Matrix>>> = Vec::with_capacity(m);
        for w in 0..m {
            let mut per_v = Vec::with_capacity(m);
            for v in 0..m {
                let mut per_u = Vec::with_capacity(m);
                for u in 0..m {
                    let rows = entries[w][v].len() * entries[v][u].len();
                    let mut block = Matrix::zero(self.field, rows, entries[w][u].len());
                    for (gi, &(gy, gx, gj)) in entries[w][v].iter().enumerate() {
                        for (fi, &(fy, fx, fj)) in entries[v][u].iter().enumerate() {
                            if gx != fy {
                                continue; // summands only compose through a common middle
                            }
                            let coords = self.compose_basis(gy, gx, fx, gj, fj);
                            for (t, &(ty, tx, tj)) in entries[w][u].iter().enumerate() {
                                if ty == gy && tx == fx && !self.field.is_zero(&coords[tj]) {
                                    block.set(gi * entries[v][u].len() + fi, t, coords[tj].clone());
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_v.push(per_u);
            }
            compose.push(per_v);
        }
        LinearCategory::new(self.field, new_objects, labels, identities, compose)
    }

    /// Splits an object along a complete system of orthogonal idempotents of
    /// its endomorphism algebra; hom spaces are the peeled summands
    /// `e_i . hom . e_j`.
    pub fn expand(&self, x: usize, idempotents: &[Vec<Scalar>]) -> Result<LinearCategory, CategoryError> {
        let n = self.objects.len();
        if x >= n {
            return Err(CategoryError::BadObjectSubset(format!("object {x}")));
        }
        let f = self.field;
        let dxx = self.dim_hom(x, x);
        if idempotents.is_empty() || idempotents.iter().any(|e| e.len() != dxx) {
            return Err(CategoryError::IdempotentAxiom("wrong number of coordinates".into()));
        }
        // orthogonality, idempotency, completeness
        for (i, ei) in idempotents.iter().enumerate() {
            for (j, ej) in idempotents.iter().enumerate() {
                let prod = self.compose_vec(x, x, x, ei, ej);
                let expected = if i == j { ei.clone() } else { vec![f.zero(); dxx] };
                if prod != expected {
                    return Err(CategoryError::IdempotentAxiom(format!("e{i} * e{j}")));
                }
            }
        }
        let mut total = vec![f.zero(); dxx];
        for e in idempotents {
            for (t, s) in total.iter_mut().zip(e) {
                *t = f.add(t, s);
            }
        }
        if total != self.identities[x] {
            return Err(CategoryError::IdempotentAxiom("idempotents do not sum to the identity".into()));
        }

        let k = idempotents.len();
        // new object list: x replaced in place by its pieces
        let mut new_objects = Vec::new();
        // map: new object -> (orig object, Option<piece index>)
        let mut origin: Vec<(usize, Option<usize>)> = Vec::new();
        for o in 0..n {
            if o == x {
                for i in 0..k {
                    new_objects.push(format!("{}@{}", self.objects[o], i));
                    origin.push((o, Some(i)));
                }
            } else {
                new_objects.push(self.objects[o].clone());
                origin.push((o, None));
            }
        }
        let m = new_objects.len();

        // each new hom space: basis vectors inside the original hom space
        let peel = |v: usize, u: usize| -> (usize, usize, Matrix) {
            let (oy, py) = origin[v];
            let (ox, px) = origin[u];
            let d = self.dim_hom(oy, ox);
            let mut spanning: Vec<Vec<Scalar>> = Vec::new();
            for j in 0..d {
                let mut vcoords = self.basis_vec(oy, ox, j);
                if let Some(i) = py {
                    vcoords = self.compose_vec(oy, oy, ox, &idempotents[i], &vcoords);
                }
                if let Some(i) = px {
                    vcoords = self.compose_vec(oy, ox, ox, &vcoords, &idempotents[i]);
                }
                spanning.push(vcoords);
            }
            let sub = Subspace::from_spanning(f, d, spanning);
            let rows: Vec<Vec<Scalar>> = (0..sub.dim()).map(|i| sub.basis_vector(i)).collect();
            (oy, ox, Matrix::from_rows(f, rows).expect("rectangular"))
        };
        let mut bases: Vec<Vec<(usize, usize, Matrix)>> = Vec::with_capacity(m);
        for v in 0..m {
            let mut row = Vec::with_capacity(m);
            for u in 0..m {
                row.push(peel(v, u));
            }
            bases.push(row);
        }
        let labels: Vec<Vec<Vec<String>>> = (0..m)
            .map(|v| {
                (0..m)
                    .map(|u| (0..bases[v][u].2.rows()).map(|i| format!("p{i}")).collect())
                    .collect()
            })
            .collect();
        let identities: Vec<Vec<Scalar>> = (0..m)
            .map(|v| {
                let (o, piece) = origin[v];
                let idv = match piece {
                    Some(i) => idempotents[i].clone(),
                    None => self.identities[o].clone(),
                };
                let sub = Subspace::from_spanning(
                    f,
                    self.dim_hom(o, o),
                    (0..bases[v][v].2.rows()).map(|i| bases[v][v].2.row(i)).collect(),
                );
                sub.coordinates_of(&idv).expect("identity lies in its peeled summand")
            })
            .collect();
        let mut compose: Vec<Vec<Vec<Matrix>>> = Vec::with_capacity(m);
        for w in 0..m {
            let mut per_v = Vec::with_capacity(m);
            for v in 0..m {
                let mut per_u = Vec::with_capacity(m);
                for u in 0..m {
                    let (gy, gx, gb) = &bases[w][v];
                    let (fy, fx, fb) = &bases[v][u];
                    debug_assert_eq!(*gx, *fy);
                    let (ty, tx, tb) = &bases[w][u];
                    debug_assert_eq!((*ty, *tx), (*gy, *fx));
                    let target = Subspace::from_spanning(f, self.dim_hom(*ty, *tx), (0..tb.rows()).map(|i| tb.row(i)).collect());
                    let mut block = Matrix::zero(f, gb.rows() * fb.rows(), tb.rows());
                    for gi in 0..gb.rows() {
                        for fi in 0..fb.rows() {
                            let comp = self.compose_vec(*gy, *gx, *fx, &gb.row(gi), &fb.row(fi));
                            let coords = target
                                .coordinates_of(&comp)
                                .expect("peeled summands are closed under composition");
                            for (t, s) in coords.into_iter().enumerate() {
                                if !f.is_zero(&s) {
                                    block.set(gi * fb.rows() + fi, t, s);
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_v.push(per_u);
            }
            compose.push(per_v);
        }
        LinearCategory::new(f, new_objects, labels, identities, compose)
    }

    /// Connectivity, hom-finiteness, basicness and total splitness of the
    /// category, per the hypotheses of the degree-one theorems.
    pub fn properties(&self) -> CategoryProperties {
        CategoryProperties {
            connected: self.is_connected(),
            hom_finite: true,
            basic: self.is_basic(),
            totally_split: self.is_totally_split(),
        }
    }

    fn is_connected(&self) -> bool {
        let n = self.objects.len();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in 0..n {
                if !seen[w] && (self.dim_hom(v, w) > 0 || self.dim_hom(w, v) > 0) {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn is_basic(&self) -> bool {
        let n = self.objects.len();
        for x in 0..n {
            for y in x + 1..n {
                if self.objects_isomorphic(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Searches for mutually inverse morphisms between two objects. The
    /// candidate `f` runs over basis vectors and pairwise sums of basis
    /// vectors of `hom(y, x)`; for each candidate the two-sided inverse
    /// condition is a linear system in `g`.
    pub fn objects_isomorphic(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        let f = self.field;
        let dyx = self.dim_hom(y, x);
        let dxy = self.dim_hom(x, y);
        if dyx == 0 || dxy == 0 || self.dim_hom(x, x) != self.dim_hom(y, y) || dyx != dxy {
            return false;
        }
        let mut candidates: Vec<Vec<Scalar>> = (0..dyx).map(|j| self.basis_vec(y, x, j)).collect();
        for i in 0..dyx {
            for j in i + 1..dyx {
                let mut v = self.basis_vec(y, x, i);
                v[j] = f.one();
                candidates.push(v);
            }
        }
        for cand in candidates {
            // columns: images of basis g under g |-> (g.f, f.g)
            let rows = self.dim_hom(x, x) + self.dim_hom(y, y);
            let mut system = Matrix::zero(f, rows, dxy);
            for gk in 0..dxy {
                let gvec = self.basis_vec(x, y, gk);
                let gf = self.compose_vec(x, y, x, &gvec, &cand);
                let fg = self.compose_vec(y, x, y, &cand, &gvec);
                for (i, s) in gf.into_iter().chain(fg.into_iter()).enumerate() {
                    if !f.is_zero(&s) {
                        system.set(i, gk, s);
                    }
                }
            }
            let mut rhs: Vec<Scalar> = self.identities[x].clone();
            rhs.extend(self.identities[y].iter().cloned());
            if system.solve(&rhs).is_some() {
                return true;
            }
        }
        false
    }

    fn is_totally_split(&self) -> bool {
        (0..self.objects.len()).all(|x| {
            let d = self.dim_hom(x, x);
            let mult = |i: usize, j: usize| self.compose_basis(x, x, x, i, j);
            let rad = algebra::radical_dim(self.field, d, &mult);
            d - rad == 1
        })
    }

    /// The nilpotent complement of `k . 1_x` inside `hom(x, x)` when the
    /// object is split; `None` otherwise. Used by the degree-zero splitting
    /// check of the embedding theorem.
    pub fn nilpotent_part(&self, x: usize) -> Option<Subspace> {
        let d = self.dim_hom(x, x);
        let mult = |i: usize, j: usize| self.compose_basis(x, x, x, i, j);
        let rad = algebra::radical_subspace(self.field, d, &mult);
        if d - rad.dim() == 1 {
            Some(rad)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::quiver::Arrow;
    use super::*;
    use crate::samples;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn one_object_field_category() {
        let c = samples::one_object_field(q());
        assert_eq!(c.object_count(), 1);
        assert_eq!(c.dim_hom(0, 0), 1);
    }

    #[test]
    fn kronecker_dims() {
        let c = samples::kronecker(q());
        let x = c.object_index("x").unwrap();
        let y = c.object_index("y").unwrap();
        assert_eq!(c.dim_hom(x, x), 1);
        assert_eq!(c.dim_hom(y, y), 1);
        assert_eq!(c.dim_hom(y, x), 2);
        assert_eq!(c.dim_hom(x, y), 0);
        assert_eq!(c.total_dim(), 4);
    }

    #[test]
    fn square_cover_dims() {
        let c = samples::kronecker_double_cover(q());
        assert_eq!(c.object_count(), 4);
        assert_eq!(c.total_dim(), 8); // 4 identities + 4 arrows
        let x = c.object_index("x").unwrap();
        let y = c.object_index("y").unwrap();
        let tx = c.object_index("tx").unwrap();
        let ty = c.object_index("ty").unwrap();
        assert_eq!(c.dim_hom(y, x), 1);
        assert_eq!(c.dim_hom(ty, x), 1);
        assert_eq!(c.dim_hom(ty, tx), 1);
        assert_eq!(c.dim_hom(y, tx), 1);
        assert_eq!(c.dim_hom(tx, x), 0);
    }

    #[test]
    fn relation_kills_composite() {
        // x -a-> y -c-> z with relation c.a = 0 (traversal order: a then c)
        let f = q();
        let qp = QuiverPresentation::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                Arrow { name: "a".into(), source: "x".into(), target: "y".into() },
                Arrow { name: "c".into(), source: "y".into(), target: "z".into() },
            ],
            vec![QuiverPresentation::relation_from_ints(f, &[(1, &["a", "c"])])],
            None,
        )
        .unwrap();
        let c = LinearCategory::from_presentation(&qp, f).unwrap();
        let z = c.object_index("z").unwrap();
        let x = c.object_index("x").unwrap();
        assert_eq!(c.dim_hom(z, x), 0);
        assert_eq!(c.total_dim(), 5);
    }

    #[test]
    fn commutativity_relation() {
        // square with two routes and the commutativity relation
        let f = q();
        let qp = QuiverPresentation::new(
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
            vec![
                Arrow { name: "a".into(), source: "1".into(), target: "2".into() },
                Arrow { name: "b".into(), source: "2".into(), target: "4".into() },
                Arrow { name: "c".into(), source: "1".into(), target: "3".into() },
                Arrow { name: "d".into(), source: "3".into(), target: "4".into() },
            ],
            vec![QuiverPresentation::relation_from_ints(f, &[(1, &["a", "b"]), (-1, &["c", "d"])])],
            None,
        )
        .unwrap();
        let c = LinearCategory::from_presentation(&qp, f).unwrap();
        let top = c.object_index("4").unwrap();
        let bot = c.object_index("1").unwrap();
        assert_eq!(c.dim_hom(top, bot), 1); // the two routes are identified
    }

    #[test]
    fn truncated_loop_algebra() {
        let c = samples::dual_numbers(q());
        assert_eq!(c.total_dim(), 2);
        // t * t = 0
        let t = c.compose_basis(0, 0, 0, 1, 1);
        assert!(t.iter().all(|s| q().is_zero(s)));
    }

    #[test]
    fn contract_single_object_keeps_dims() {
        let c = samples::kronecker(q());
        let d = c.contract(&[0]).unwrap();
        assert_eq!(d.total_dim(), c.total_dim());
        assert_eq!(d.object_count(), 2);
    }

    #[test]
    fn contract_kronecker_to_algebra() {
        let c = samples::kronecker(q());
        let d = c.contract(&[0, 1]).unwrap();
        assert_eq!(d.object_count(), 1);
        assert_eq!(d.dim_hom(0, 0), 4);
    }

    #[test]
    fn contract_cover_along_two() {
        let c = samples::kronecker_double_cover(q());
        let x = c.object_index("x").unwrap();
        let y = c.object_index("y").unwrap();
        let d = c.contract(&[x, y]).unwrap();
        assert_eq!(d.object_count(), 3);
        let lumped = d.object_index("x+y").unwrap();
        assert_eq!(d.dim_hom(lumped, lumped), 3); // 1 + 1 + a
        assert_eq!(d.total_dim(), c.total_dim());
    }

    #[test]
    fn expand_by_unit_is_identity_on_dims() {
        let c = samples::kronecker(q());
        let e = c.expand(0, &[c.identity(0).to_vec()]).unwrap();
        assert_eq!(e.total_dim(), c.total_dim());
        assert_eq!(e.hom_dims(), c.hom_dims());
    }

    #[test]
    fn expand_undoes_contract() {
        let c = samples::kronecker(q());
        let d = c.contract(&[0, 1]).unwrap();
        // idempotents of the lumped endomorphism algebra: original identities.
        // lumped End basis order: (x,x):e_x, (y,x):a, (y,x):b, (y,y):e_y
        let e0: Vec<Scalar> =
            vec![q().one(), q().zero(), q().zero(), q().zero()];
        let e1: Vec<Scalar> =
            vec![q().zero(), q().zero(), q().zero(), q().one()];
        let expanded = d.expand(0, &[e0, e1]).unwrap();
        let mut dims: Vec<usize> = expanded.hom_dims().into_iter().flatten().collect();
        dims.sort_unstable();
        let mut orig: Vec<usize> = c.hom_dims().into_iter().flatten().collect();
        orig.sort_unstable();
        assert_eq!(dims, orig);
    }

    #[test]
    fn expand_split_one_object_square() {
        // k x k as a one-object category, expanded along its two idempotents
        let f = q();
        let flat = samples::product_of_fields(f, 2);
        let e0 = vec![f.one(), f.zero()];
        let e1 = vec![f.zero(), f.one()];
        let e = flat.expand(0, &[e0, e1]).unwrap();
        assert_eq!(e.object_count(), 2);
        assert_eq!(e.dim_hom(0, 0), 1);
        assert_eq!(e.dim_hom(1, 1), 1);
        assert_eq!(e.dim_hom(0, 1), 0);
        assert_eq!(e.dim_hom(1, 0), 0);
    }

    #[test]
    fn rejects_bad_idempotents() {
        let c = samples::kronecker(q());
        // 2 * 1_x is not idempotent over Q
        let bad = vec![vec![q().from_int(2)]];
        assert!(matches!(c.expand(0, &bad), Err(CategoryError::IdempotentAxiom(_))));
    }

    #[test]
    fn properties_one_object() {
        let c = samples::one_object_field(q());
        let p = c.properties();
        assert!(p.connected && p.hom_finite && p.basic && p.totally_split);
    }

    #[test]
    fn properties_kronecker() {
        let p = samples::kronecker(q()).properties();
        assert!(p.connected && p.basic && p.totally_split);
    }

    #[test]
    fn disconnected_pair() {
        let c = samples::two_points(q());
        let p = c.properties();
        assert!(!p.connected);
        assert!(p.basic && p.totally_split);
    }

    #[test]
    fn product_of_fields_is_not_split() {
        let c = samples::product_of_fields(q(), 2);
        assert!(!c.properties().totally_split);
    }

    #[test]
    fn matrix_algebra_category_not_basic() {
        // 2x2 matrix units as a two-object category: the objects are isomorphic
        let c = samples::matrix_units_category(q());
        let p = c.properties();
        assert!(!p.basic);
        assert!(c.objects_isomorphic(0, 1));
    }

    #[test]
    fn dual_numbers_totally_split_mod_two() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        let c = samples::dual_numbers(f2);
        assert!(c.properties().totally_split);
    }
}
