use num::bigint::BigInt;
use num::{One, Zero};

use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};

use super::linear::LinearCategory;
use super::CategoryError;

/// The algebra `Lambda_C = (+)_{x,y} hom(y,x)` of a finite category, with
/// the matrix product, or any associative algebra handed in with a complete
/// system of orthogonal idempotents.
///
/// `blocks[i]` remembers the `(target, source)` tag of a basis element when
/// the algebra was flattened from a category; raw algebras carry `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatAlgebra {
    field: FieldSpec,
    labels: Vec<String>,
    blocks: Vec<Option<(usize, usize)>>,
    object_names: Vec<String>,
    mult: Vec<Vec<Vec<Scalar>>>,
    idempotents: Vec<Vec<Scalar>>,
}

impl FlatAlgebra {
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        mult: Vec<Vec<Vec<Scalar>>>,
        idempotents: Vec<Vec<Scalar>>,
        object_names: Vec<String>,
    ) -> Result<Self, CategoryError> {
        let blocks = vec![None; labels.len()];
        let alg = FlatAlgebra { field, labels, blocks, object_names, mult, idempotents };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let n = self.dim();
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n) {
            return Err(CategoryError::InvalidStructure("multiplication table is not square".into()));
        }
        for row in &self.mult {
            for v in row {
                if v.len() != n {
                    return Err(CategoryError::InvalidStructure("product vector of wrong length".into()));
                }
            }
        }
        if self.object_names.len() != self.idempotents.len() {
            return Err(CategoryError::InvalidStructure("idempotent names out of sync".into()));
        }
        // associativity on basis triples
        for i in 0..n {
            for j in 0..n {
                let ij = self.mult[i][j].clone();
                for k in 0..n {
                    let jk = self.mult[j][k].clone();
                    let left = self.mult_vec(&ij, &self.basis_vec(k));
                    let right = self.mult_vec(&self.basis_vec(i), &jk);
                    if left != right {
                        return Err(CategoryError::InvalidStructure(format!(
                            "associativity fails on basis triple ({i},{j},{k})"
                        )));
                    }
                }
            }
        }
        // orthogonal idempotents summing to a two-sided unit
        let f = self.field;
        for (a, ea) in self.idempotents.iter().enumerate() {
            for (b, eb) in self.idempotents.iter().enumerate() {
                let prod = self.mult_vec(ea, eb);
                let expected = if a == b { ea.clone() } else { vec![f.zero(); n] };
                if prod != expected {
                    return Err(CategoryError::IdempotentAxiom(format!("e{a} * e{b}")));
                }
            }
        }
        let unit = self.unit();
        for i in 0..n {
            let b = self.basis_vec(i);
            if self.mult_vec(&unit, &b) != b || self.mult_vec(&b, &unit) != b {
                return Err(CategoryError::IdempotentAxiom(format!(
                    "idempotents do not sum to a unit (fails on basis {i})"
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn idempotent_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotent(&self, i: usize) -> &[Scalar] {
        &self.idempotents[i]
    }

    /// `(target, source, index within the hom block)` of a basis element,
    /// when the algebra was flattened from a category.
    pub fn block_of(&self, i: usize) -> Option<(usize, usize, usize)> {
        let (y, x) = self.blocks[i]?;
        let local = self.blocks[..i].iter().filter(|b| **b == Some((y, x))).count();
        Some((y, x, local))
    }

    pub fn basis_vec(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        v[i] = self.field.one();
        v
    }

    pub fn unit(&self) -> Vec<Scalar> {
        let f = self.field;
        let mut u = vec![f.zero(); self.dim()];
        for e in &self.idempotents {
            for (t, s) in u.iter_mut().zip(e) {
                *t = f.add(t, s);
            }
        }
        u
    }

    /// Bilinear extension of the basis product.
    pub fn mult_vec(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for (i, a) in u.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (t, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    if !f.is_zero(m) {
                        let term = f.mul(&ab, m);
                        *t = f.add(t, &term);
                    }
                }
            }
        }
        out
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i][j]
    }

    /// Flattens a finite category into its algebra. Basis order: target
    /// object outer, source object inner, then the hom basis order.
    pub fn from_category(c: &LinearCategory) -> Self {
        let f = c.field();
        let n = c.object_count();
        let mut labels = Vec::new();
        let mut blocks = Vec::new();
        let mut offset = vec![vec![0usize; n]; n];
        for y in 0..n {
            for x in 0..n {
                offset[y][x] = labels.len();
                for j in 0..c.dim_hom(y, x) {
                    labels.push(format!("{}<-{}:{}", c.objects()[y], c.objects()[x], c.hom_labels(y, x)[j]));
                    blocks.push(Some((y, x)));
                }
            }
        }
        let dim = labels.len();
        let mut mult = vec![vec![vec![f.zero(); dim]; dim]; dim];
        for (i, &bi) in blocks.iter().enumerate() {
            let (yi, xi) = bi.unwrap();
            for (j, &bj) in blocks.iter().enumerate() {
                let (yj, xj) = bj.unwrap();
                if xi != yj {
                    continue;
                }
                let coords = c.compose_basis(yi, xi, xj, i - offset[yi][xi], j - offset[yj][xj]);
                let base = offset[yi][xj];
                for (t, s) in coords.into_iter().enumerate() {
                    if !f.is_zero(&s) {
                        mult[i][j][base + t] = s;
                    }
                }
            }
        }
        let idempotents: Vec<Vec<Scalar>> = (0..n)
            .map(|x| {
                let mut v = vec![f.zero(); dim];
                for (t, s) in c.identity(x).iter().enumerate() {
                    v[offset[x][x] + t] = s.clone();
                }
                v
            })
            .collect();
        let alg = FlatAlgebra {
            field: f,
            labels,
            blocks,
            object_names: c.objects().to_vec(),
            mult,
            idempotents,
        };
        debug_assert!(alg.validate().is_ok());
        alg
    }

    /// The category with one object per idempotent and `hom(y, x) = y A x`.
    pub fn to_category(&self) -> Result<LinearCategory, CategoryError> {
        let f = self.field;
        let n = self.dim();
        let k = self.idempotents.len();
        // peeled corner subspaces, kept in algebra coordinates
        let mut corners: Vec<Vec<Subspace>> = Vec::with_capacity(k);
        for y in 0..k {
            let mut row = Vec::with_capacity(k);
            for x in 0..k {
                let spanning: Vec<Vec<Scalar>> = (0..n)
                    .map(|i| {
                        let bi = self.basis_vec(i);
                        self.mult_vec(&self.idempotents[y], &self.mult_vec(&bi, &self.idempotents[x]))
                    })
                    .collect();
                row.push(Subspace::from_spanning(f, n, spanning));
            }
            corners.push(row);
        }
        let labels: Vec<Vec<Vec<String>>> = (0..k)
            .map(|y| (0..k).map(|x| (0..corners[y][x].dim()).map(|i| format!("m{i}")).collect()).collect())
            .collect();
        let identities: Vec<Vec<Scalar>> = (0..k)
            .map(|x| {
                corners[x][x]
                    .coordinates_of(&self.idempotents[x])
                    .ok_or(())
                    .expect("idempotent lies in its corner")
            })
            .collect();
        let mut compose = Vec::with_capacity(k);
        for z in 0..k {
            let mut per_y = Vec::with_capacity(k);
            for y in 0..k {
                let mut per_x = Vec::with_capacity(k);
                for x in 0..k {
                    let dzy = corners[z][y].dim();
                    let dyx = corners[y][x].dim();
                    let dzx = corners[z][x].dim();
                    let mut block = Matrix::zero(f, dzy * dyx, dzx);
                    for g in 0..dzy {
                        for h in 0..dyx {
                            let prod = self.mult_vec(&corners[z][y].basis_vector(g), &corners[y][x].basis_vector(h));
                            let coords = corners[z][x]
                                .coordinates_of(&prod)
                                .expect("corner spaces are closed under the product");
                            for (t, s) in coords.into_iter().enumerate() {
                                if !f.is_zero(&s) {
                                    block.set(g * dyx + h, t, s);
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
        LinearCategory::new(f, self.object_names.clone(), labels, identities, compose)
    }
}

/// Dimension of the Jacobson radical of an `n`-dimensional unital algebra
/// given by its basis products.
pub(crate) fn radical_dim(field: FieldSpec, n: usize, mult: &dyn Fn(usize, usize) -> Vec<Scalar>) -> usize {
    radical_subspace(field, n, mult).dim()
}

/// The Jacobson radical as a subspace in basis coordinates.
///
/// Characteristic zero uses the trace-form kernel of the left regular
/// representation. In characteristic `p` the trace form can degenerate, so
/// the chain of Friedl-Ronyai subspaces is computed instead: over the prime
/// field the conditions `e_{p^j}(L_x L_y) = 0` are linear in `x` once the
/// lower levels vanish, and the chain ends at the radical after all levels
/// `p^j <= n`.
pub(crate) fn radical_subspace(field: FieldSpec, n: usize, mult: &dyn Fn(usize, usize) -> Vec<Scalar>) -> Subspace {
    if n == 0 {
        return Subspace::zero_subspace(field, 0);
    }
    // left regular representation matrices
    let left: Vec<Matrix> = (0..n)
        .map(|i| {
            let mut m = Matrix::zero(field, n, n);
            for j in 0..n {
                for (r, s) in mult(i, j).into_iter().enumerate() {
                    if !field.is_zero(&s) {
                        m.set(r, j, s);
                    }
                }
            }
            m
        })
        .collect();
    let l_of = |v: &[Scalar]| -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for (i, c) in v.iter().enumerate() {
            if !field.is_zero(c) {
                m = m.add(&left[i].scale(c)).expect("same shape");
            }
        }
        m
    };
    let trace = |m: &Matrix| -> Scalar {
        let mut t = field.zero();
        for i in 0..m.rows() {
            t = field.add(&t, &m.get(i, i));
        }
        t
    };

    match field {
        FieldSpec::Rationals => {
            let mut gram = Matrix::zero(field, n, n);
            for i in 0..n {
                for j in 0..n {
                    let prod = left[i].mul(&left[j]).expect("square");
                    gram.set(i, j, trace(&prod));
                }
            }
            gram.kernel_basis()
        }
        FieldSpec::PrimeField(p) => {
            let p = p as u64;
            let mut v = Subspace::full(field, n);
            let mut pj: u128 = 1;
            while pj <= n as u128 {
                let dim_v = v.dim();
                if dim_v == 0 {
                    break;
                }
                let basis: Vec<Vec<Scalar>> = (0..dim_v).map(|i| v.basis_vector(i)).collect();
                let l_basis: Vec<Matrix> = basis.iter().map(|b| l_of(b)).collect();
                let mut cond = Matrix::zero(field, dim_v, dim_v);
                for a in 0..dim_v {
                    for b in 0..dim_v {
                        let prod = l_basis[a].mul(&l_basis[b]).expect("square");
                        let e = elementary_symmetric_mod(&prod, pj as usize, p);
                        cond.set(a, b, Scalar::Mod(e));
                    }
                }
                // t with t^T . cond = 0
                let t_space = cond.transpose().kernel_basis();
                let basis_mat = Matrix::from_rows(field, basis).expect("rectangular");
                let new_rows: Vec<Vec<Scalar>> =
                    (0..t_space.dim()).map(|i| basis_mat.vec_mul(&t_space.basis_vector(i))).collect();
                v = Subspace::from_spanning(field, n, new_rows);
                pj *= p as u128;
            }
            v
        }
    }
}

/// `e_m` of a `GF(p)` matrix, via the integer characteristic polynomial of
/// an entrywise lift, reduced mod `p`. Zero/nonzero is all callers need, so
/// the sign of the coefficient is irrelevant.
fn elementary_symmetric_mod(m: &Matrix, deg: usize, p: u64) -> u64 {
    let n = m.rows();
    if deg > n {
        return 0;
    }
    let lifted: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(m.get(i, j).as_residue().unwrap())).collect())
        .collect();
    let coeffs = char_poly_int(&lifted);
    let c = &coeffs[n - deg];
    let r = c % BigInt::from(p);
    let r = if r < BigInt::zero() { r + BigInt::from(p) } else { r };
    u64::try_from(&r).unwrap()
}

/// Integer characteristic polynomial by Faddeev-LeVerrier; the divisions by
/// `k` are exact over the integers. Returns coefficients `c_0..c_n` with
/// `c_n = 1` for `chi(t) = sum c_k t^k`.
fn char_poly_int(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    if n == 0 {
        return coeffs;
    }
    let mat_mul = |a: &[Vec<BigInt>], b: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !b[k][j].is_zero() {
                        let t = &a[i][k] * &b[k][j];
                        out[i][j] += t;
                    }
                }
            }
        }
        out
    };
    let tr = |a: &[Vec<BigInt>]| -> BigInt { (0..n).map(|i| a[i][i].clone()).sum() };

    let mut nmat = m.to_vec();
    coeffs[n - 1] = -tr(&nmat);
    for k in 2..=n {
        // N_k = M (N_{k-1} + c_{n-k+1} I)
        let mut shifted = nmat.clone();
        for i in 0..n {
            shifted[i][i] += &coeffs[n - k + 1];
        }
        nmat = mat_mul(m, &shifted);
        let t = tr(&nmat);
        coeffs[n - k] = -t / BigInt::from(k as i64); // exact
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn char_poly_diag() {
        let m = vec![
            vec![BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(2)],
        ];
        // (t-1)(t-2) = t^2 - 3t + 2
        assert_eq!(char_poly_int(&m), vec![BigInt::from(2), BigInt::from(-3), BigInt::from(1)]);
    }

    #[test]
    fn char_poly_companion() {
        // companion of t^3 - 2t - 5
        let m = vec![
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(5)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(
            char_poly_int(&m),
            vec![BigInt::from(-5), BigInt::from(-2), BigInt::from(0), BigInt::from(1)]
        );
    }

    #[test]
    fn flatten_one_object() {
        let c = samples::one_object_field(q());
        let a = FlatAlgebra::from_category(&c);
        assert_eq!(a.dim(), 1);
        assert_eq!(a.idempotent_count(), 1);
    }

    #[test]
    fn flatten_kronecker() {
        let a = FlatAlgebra::from_category(&samples::kronecker(q()));
        assert_eq!(a.dim(), 4);
        assert_eq!(a.idempotent_count(), 2);
    }

    #[test]
    fn flatten_cover() {
        let a = FlatAlgebra::from_category(&samples::kronecker_double_cover(q()));
        assert_eq!(a.dim(), 8);
        assert_eq!(a.idempotent_count(), 4);
    }

    #[test]
    fn round_trip_preserves_dims() {
        let c = samples::kronecker(q());
        let a = FlatAlgebra::from_category(&c);
        let c2 = a.to_category().unwrap();
        assert_eq!(c2.hom_dims(), c.hom_dims());
        assert_eq!(c2.total_dim(), c.total_dim());
        let a2 = FlatAlgebra::from_category(&c2);
        assert_eq!(a2.dim(), a.dim());
    }

    #[test]
    fn matrix_algebra_splits_into_two_objects() {
        let a = samples::matrix_algebra_2x2(q());
        let c = a.to_category().unwrap();
        assert_eq!(c.object_count(), 2);
        for y in 0..2 {
            for x in 0..2 {
                assert_eq!(c.dim_hom(y, x), 1);
            }
        }
    }

    #[test]
    fn one_dim_algebra_to_category() {
        let f = q();
        let a = FlatAlgebra::new(
            f,
            vec!["1".into()],
            vec![vec![vec![f.one()]]],
            vec![vec![f.one()]],
            vec!["pt".into()],
        )
        .unwrap();
        let c = a.to_category().unwrap();
        assert_eq!(c.object_count(), 1);
        assert_eq!(c.dim_hom(0, 0), 1);
    }

    #[test]
    fn bad_idempotents_rejected() {
        let f = q();
        // "idempotent" 2 in the one-dimensional algebra
        let a = FlatAlgebra::new(
            f,
            vec!["1".into()],
            vec![vec![vec![f.one()]]],
            vec![vec![f.from_int(2)]],
            vec!["pt".into()],
        );
        assert!(matches!(a, Err(CategoryError::IdempotentAxiom(_))));
    }

    #[test]
    fn radical_of_dual_numbers() {
        let c = samples::dual_numbers(q());
        let mult = |i: usize, j: usize| c.compose_basis(0, 0, 0, i, j);
        assert_eq!(radical_dim(q(), 2, &mult), 1);
        // and over GF(2), where the trace form degenerates
        let f2 = FieldSpec::prime_field(2).unwrap();
        let c2 = samples::dual_numbers(f2);
        let mult2 = |i: usize, j: usize| c2.compose_basis(0, 0, 0, i, j);
        assert_eq!(radical_dim(f2, 2, &mult2), 1);
    }

    #[test]
    fn radical_of_semisimple_is_zero() {
        for field in [q(), FieldSpec::prime_field(2).unwrap()] {
            let c = samples::product_of_fields(field, 2);
            let mult = |i: usize, j: usize| c.compose_basis(0, 0, 0, i, j);
            assert_eq!(radical_dim(field, 2, &mult), 0);
        }
    }

    #[test]
    fn radical_of_matrix_algebra_is_zero_mod_two() {
        let f2 = FieldSpec::prime_field(2).unwrap();
        let a = samples::matrix_algebra_2x2(f2);
        let mult = |i: usize, j: usize| a.mult_basis(i, j).to_vec();
        assert_eq!(radical_dim(f2, 4, &mult), 0);
    }
}
