use crate::bimodule::Bimodule;
use crate::covering::{self, Covering, EquivariantComplex};
use crate::linalg::{FieldSpec, Matrix};

use super::SpectralError;

/// A first-quadrant double complex with anticommuting differentials:
/// `dh[p][q] : D[p][q] -> D[p-1][q]`, `dv[p][q] : D[p][q] -> D[p][q-1]`.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    field: FieldSpec,
    dims: Vec<Vec<usize>>,
    dh: Vec<Vec<Matrix>>,
    dv: Vec<Vec<Matrix>>,
}

impl DoubleComplex {
    pub fn new(
        field: FieldSpec,
        dims: Vec<Vec<usize>>,
        dh: Vec<Vec<Matrix>>,
        dv: Vec<Vec<Matrix>>,
    ) -> Result<Self, SpectralError> {
        let d = DoubleComplex { field, dims, dh, dv };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<(), SpectralError> {
        let pm = self.p_max();
        let qm = self.q_max();
        for p in 0..=pm {
            if self.dims[p].len() != qm + 1 || self.dh[p].len() != qm + 1 || self.dv[p].len() != qm + 1 {
                return Err(SpectralError::BadBicomplex("ragged grid".into()));
            }
            for q in 0..=qm {
                let h = &self.dh[p][q];
                let hrows = if p == 0 { 0 } else { self.dims[p - 1][q] };
                if h.rows() != hrows || h.cols() != self.dims[p][q] {
                    return Err(SpectralError::BadBicomplex(format!("dh shape at ({p},{q})")));
                }
                let v = &self.dv[p][q];
                let vrows = if q == 0 { 0 } else { self.dims[p][q - 1] };
                if v.rows() != vrows || v.cols() != self.dims[p][q] {
                    return Err(SpectralError::BadBicomplex(format!("dv shape at ({p},{q})")));
                }
            }
        }
        for p in 0..=pm {
            for q in 0..=qm {
                if p >= 2 {
                    let sq = self.dh[p - 1][q].mul(&self.dh[p][q]).expect("shapes");
                    if !sq.is_zero() {
                        return Err(SpectralError::BadBicomplex(format!("dh.dh != 0 at ({p},{q})")));
                    }
                }
                if q >= 2 {
                    let sq = self.dv[p][q - 1].mul(&self.dv[p][q]).expect("shapes");
                    if !sq.is_zero() {
                        return Err(SpectralError::BadBicomplex(format!("dv.dv != 0 at ({p},{q})")));
                    }
                }
                if p >= 1 && q >= 1 {
                    let hv = self.dh[p][q - 1].mul(&self.dv[p][q]).expect("shapes");
                    let vh = self.dv[p - 1][q].mul(&self.dh[p][q]).expect("shapes");
                    let sum = hv.add(&vh).expect("shapes");
                    if !sum.is_zero() {
                        return Err(SpectralError::BadBicomplex(format!(
                            "anticommutation fails at ({p},{q})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn p_max(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn q_max(&self) -> usize {
        self.dims[0].len() - 1
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.dims[p][q]
    }

    pub fn horizontal(&self, p: usize, q: usize) -> &Matrix {
        &self.dh[p][q]
    }

    pub fn vertical(&self, p: usize, q: usize) -> &Matrix {
        &self.dv[p][q]
    }

    /// Swaps the two directions (and hence the two filtrations).
    pub fn transpose(&self) -> DoubleComplex {
        let pm = self.p_max();
        let qm = self.q_max();
        let dims = (0..=qm).map(|a| (0..=pm).map(|b| self.dims[b][a]).collect()).collect();
        let dh = (0..=qm).map(|a| (0..=pm).map(|b| self.dv[b][a].clone()).collect()).collect();
        let dv = (0..=qm).map(|a| (0..=pm).map(|b| self.dh[b][a].clone()).collect()).collect();
        DoubleComplex { field: self.field, dims, dh, dv }
    }

    /// Homology dimensions of the row `q` with respect to the horizontal
    /// differential, for `p <= p_max - 1`.
    pub fn row_homology_dims(&self, q: usize) -> Vec<usize> {
        let pm = self.p_max();
        (0..pm)
            .map(|p| {
                let out_rank = self.dh[p][q].rank();
                let in_rank = self.dh[p + 1][q].rank();
                self.dims[p][q] - out_rank - in_rank
            })
            .collect()
    }
}

/// The Cartan-Leray double complex of a Galois covering with coefficients
/// in a bimodule over the quotient: `D[p][q] = P_p (x)_{kG} C_q(C, L M)`,
/// realized on the bar basis as `k[G^p] (x) C_q`. The horizontal
/// differential is the group-homology boundary of the `kG`-module `C_q`;
/// the vertical one is the Hochschild-Mitchell boundary times `(-1)^p`.
pub fn cartan_leray_double_complex(
    cov: &Covering,
    m: &Bimodule,
    p_max: usize,
    q_max: usize,
) -> Result<(DoubleComplex, EquivariantComplex), SpectralError> {
    let eq = covering::action_on_chains(cov, m, q_max)?;
    let field = eq.complex.field();
    let g = eq.modules[0].group().clone();
    let o = g.order();
    let pow = |e: usize| (0..e).fold(1usize, |a, _| a * o);
    let tuples = |len: usize| -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            let mut next = Vec::with_capacity(out.len() * o);
            for t in &out {
                for s in 0..o {
                    let mut u = t.clone();
                    u.push(s);
                    next.push(u);
                }
            }
            out = next;
        }
        out
    };
    let bar_index = |t: &[usize]| t.iter().fold(0usize, |acc, &s| acc * o + s);

    let dims: Vec<Vec<usize>> =
        (0..=p_max).map(|p| (0..=q_max).map(|q| pow(p) * eq.complex.dim(q)).collect()).collect();

    let mut dh: Vec<Vec<Matrix>> = Vec::with_capacity(p_max + 1);
    let mut dv: Vec<Vec<Matrix>> = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let mut dh_row = Vec::with_capacity(q_max + 1);
        let mut dv_row = Vec::with_capacity(q_max + 1);
        for q in 0..=q_max {
            let xd = eq.complex.dim(q);
            let idx = |t: &[usize], j: usize| bar_index(t) * xd + j;
            // horizontal: inhomogeneous bar boundary with coefficients in C_q
            let hrows = if p == 0 { 0 } else { dims[p - 1][q] };
            let mut h = Matrix::zero(field, hrows, dims[p][q]);
            if p >= 1 {
                for tuple in tuples(p) {
                    for j in 0..xd {
                        let col = idx(&tuple, j);
                        {
                            let t = tuple[1..].to_vec();
                            let act = eq.modules[q].matrix(g.inv(tuple[0]));
                            for r in 0..xd {
                                let s = act.get(r, j);
                                if !field.is_zero(&s) {
                                    h.add_to_entry(idx(&t, r), col, &s);
                                }
                            }
                        }
                        for i in 1..p {
                            let sign = if i % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                            let mut t = tuple[..i - 1].to_vec();
                            t.push(g.mul(tuple[i - 1], tuple[i]));
                            t.extend(&tuple[i + 1..]);
                            h.add_to_entry(idx(&t, j), col, &sign);
                        }
                        {
                            let sign = if p % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                            let t = tuple[..p - 1].to_vec();
                            h.add_to_entry(idx(&t, j), col, &sign);
                        }
                    }
                }
            }
            dh_row.push(h);
            // vertical: (-1)^p (id (x) d)
            let vrows = if q == 0 { 0 } else { dims[p][q - 1] };
            let mut v = Matrix::zero(field, vrows, dims[p][q]);
            if q >= 1 {
                let d = eq.complex.diff_out(q).unwrap();
                let sign = if p % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                let prev_xd = eq.complex.dim(q - 1);
                for t in 0..pow(p) {
                    for j in 0..xd {
                        for r in 0..prev_xd {
                            let s = d.get(r, j);
                            if !field.is_zero(&s) {
                                let val = field.mul(&sign, &s);
                                v.set(t * prev_xd + r, t * xd + j, val);
                            }
                        }
                    }
                }
            }
            dv_row.push(v);
        }
        dh.push(dh_row);
        dv.push(dv_row);
    }
    let dc = DoubleComplex::new(field, dims, dh, dv)?;
    Ok((dc, eq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hochschild;
    use crate::covering::{FiniteGroup, GroupAction};
    use crate::category::LinearFunctor;
    use crate::samples;
    use std::sync::Arc;

    fn f3() -> FieldSpec {
        FieldSpec::prime_field(3).unwrap()
    }

    #[test]
    fn trivial_group_gives_single_column() {
        let c = Arc::new(samples::kronecker(FieldSpec::Rationals));
        let action =
            GroupAction::new(FiniteGroup::cyclic(1), c.clone(), vec![LinearFunctor::identity(c.clone())])
                .unwrap();
        let cov = Covering::quotient_category(action).unwrap();
        let m = Bimodule::standard(cov.quotient().clone());
        let (dc, _) = cartan_leray_double_complex(&cov, &m, 2, 2).unwrap();
        let direct = hochschild::chain_complex(cov.quotient(), &m, 2);
        for q in 0..=2 {
            for p in 0..=2 {
                assert_eq!(dc.dim(p, q), direct.dim(q));
            }
        }
    }

    #[test]
    fn column_zero_is_the_covering_chain_complex() {
        let (_, cov) = samples::swap_covering_data(f3());
        let m = Bimodule::standard(cov.quotient().clone());
        let (dc, eq) = cartan_leray_double_complex(&cov, &m, 2, 2).unwrap();
        for q in 0..=2 {
            assert_eq!(dc.dim(0, q), eq.complex.dim(q));
        }
    }

    #[test]
    fn rows_are_exact_away_from_p_zero() {
        // freeness of C_q over kG makes every row exact for p >= 1,
        // regardless of the characteristic
        for field in [f3(), FieldSpec::prime_field(2).unwrap()] {
            let (_, cov) = samples::swap_covering_data(field);
            let m = Bimodule::standard(cov.quotient().clone());
            let (dc, _) = cartan_leray_double_complex(&cov, &m, 3, 2).unwrap();
            let direct = hochschild::chain_complex(cov.quotient(), &m, 2);
            for q in 0..=2 {
                let row_h = dc.row_homology_dims(q);
                for (p, h) in row_h.iter().enumerate() {
                    if p == 0 {
                        assert_eq!(*h, direct.dim(q), "H_0 of row {q} over {field}");
                    } else {
                        assert_eq!(*h, 0, "row {q} not exact at p={p} over {field}");
                    }
                }
            }
        }
    }
}
