use crate::linalg::{FieldSpec, Matrix, Subspace};

use super::double::DoubleComplex;

/// Which filtration of the total complex drives the pages. Columns filter
/// by the first index `p` (vertical homology first, the Cartan-Leray
/// reading); rows filter by `q` (horizontal homology first, the collapsing
/// reading). Row-filtration results are reported in the original `(p,q)`
/// coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filtration {
    ByColumns,
    ByRows,
}

/// One spot of one page: the dimension, a reliability flag for the
/// truncation window, the rank of the page differential leaving this spot,
/// and the numerator/denominator subspaces of the subquotient inside the
/// total complex of degree `p + q`.
#[derive(Clone, Debug)]
pub struct PageEntry {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
    pub reliable: bool,
    pub d_rank: Option<usize>,
    pub numerator: Subspace,
    pub denominator: Subspace,
}

#[derive(Clone, Debug)]
pub struct SSPage {
    pub r: usize,
    /// Entries indexed `[p][q]`.
    pub entries: Vec<Vec<PageEntry>>,
}

impl SSPage {
    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.entries[p][q].dim
    }

    pub fn dims(&self) -> Vec<Vec<usize>> {
        self.entries.iter().map(|row| row.iter().map(|e| e.dim).collect()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct SpectralSequence {
    pub filtration: Filtration,
    pub pages: Vec<SSPage>,
    /// First page index from which all later computed pages agree on the
    /// reliable window.
    pub stabilized_at: Option<usize>,
}

impl SpectralSequence {
    pub fn page(&self, r: usize) -> &SSPage {
        &self.pages[r]
    }

    /// The last computed page; with `r_max` past the window size this is
    /// the stable page on all reliable entries.
    pub fn infinity_page(&self) -> &SSPage {
        self.pages.last().expect("at least page 0")
    }
}

/// The total complex with its column filtration.
struct Total {
    field: FieldSpec,
    p_max: usize,
    q_max: usize,
    dims: Vec<usize>,
    /// `offsets[n]`: list of `(p, offset, size)` for the components of `T_n`
    /// in ascending `p`.
    offsets: Vec<Vec<(usize, usize, usize)>>,
    /// `diffs[n] : T_n -> T_{n-1}`.
    diffs: Vec<Matrix>,
}

impl Total {
    fn build(dc: &DoubleComplex) -> Total {
        let field = dc.field();
        let (pm, qm) = (dc.p_max(), dc.q_max());
        let nmax = pm + qm;
        let mut dims = Vec::with_capacity(nmax + 1);
        let mut offsets = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let mut comps = Vec::new();
            let mut acc = 0usize;
            for p in n.saturating_sub(qm)..=n.min(pm) {
                let q = n - p;
                comps.push((p, acc, dc.dim(p, q)));
                acc += dc.dim(p, q);
            }
            dims.push(acc);
            offsets.push(comps);
        }
        let component_offset = |n: usize, p: usize| -> Option<usize> {
            offsets[n].iter().find(|&&(cp, _, _)| cp == p).map(|&(_, off, _)| off)
        };
        let mut diffs = vec![Matrix::zero(field, 0, dims[0])];
        for n in 1..=nmax {
            let mut d = Matrix::zero(field, dims[n - 1], dims[n]);
            for &(p, off, size) in &offsets[n] {
                let q = n - p;
                // horizontal part into (p-1, q)
                if p >= 1 {
                    if let Some(toff) = component_offset(n - 1, p - 1) {
                        let h = dc.horizontal(p, q);
                        for j in 0..size {
                            for i in 0..h.rows() {
                                if !h.is_entry_zero(i, j) {
                                    d.set(toff + i, off + j, h.get(i, j));
                                }
                            }
                        }
                    }
                }
                // vertical part into (p, q-1)
                if q >= 1 {
                    if let Some(toff) = component_offset(n - 1, p) {
                        let v = dc.vertical(p, q);
                        for j in 0..size {
                            for i in 0..v.rows() {
                                if !v.is_entry_zero(i, j) {
                                    d.set(toff + i, off + j, v.get(i, j));
                                }
                            }
                        }
                    }
                }
            }
            diffs.push(d);
        }
        // anticommutation makes the total differential square to zero
        for n in 2..=nmax {
            debug_assert!(diffs[n - 1].mul(&diffs[n]).expect("shapes").is_zero(), "total d^2 != 0");
        }
        Total { field, p_max: pm, q_max: qm, dims, offsets, diffs }
    }

    fn n_max(&self) -> usize {
        self.p_max + self.q_max
    }

    /// `F_p(T_n)`: the coordinate span of the components with column `<= p`.
    fn filtration_subspace(&self, n: usize, p: i64) -> Subspace {
        let dim = self.dims[n];
        if p < 0 {
            return Subspace::zero_subspace(self.field, dim);
        }
        let mut rows = Vec::new();
        for &(cp, off, size) in &self.offsets[n] {
            if (cp as i64) <= p {
                for j in 0..size {
                    let mut v = vec![self.field.zero(); dim];
                    v[off + j] = self.field.one();
                    rows.push(v);
                }
            }
        }
        Subspace::from_spanning(self.field, dim, rows)
    }

    /// `A^r_p(n) = F_p(T_n) /\ d^{-1}(F_{p-r}(T_{n-1}))`.
    ///
    /// Both filtration subspaces are coordinate prefixes, so this reduces
    /// to one kernel: vectors supported on the columns of the components
    /// with index `<= p` whose boundary vanishes on the rows of the
    /// components with index `> p - r`.
    fn a_space(&self, r: i64, p: i64, n: usize) -> Subspace {
        let field = self.field;
        let dim = self.dims[n];
        // columns allowed (a coordinate prefix)
        let col_count: usize = self
            .offsets[n]
            .iter()
            .filter(|&&(cp, _, _)| (cp as i64) <= p)
            .map(|&(_, _, size)| size)
            .sum();
        if col_count == 0 {
            return Subspace::zero_subspace(field, dim);
        }
        if n == 0 {
            return self.filtration_subspace(n, p);
        }
        // constraint rows: boundary components with index > p - r
        let mut row_ranges = Vec::new();
        for &(cp, off, size) in &self.offsets[n - 1] {
            if (cp as i64) > p - r {
                row_ranges.push((off, size));
            }
        }
        let row_count: usize = row_ranges.iter().map(|&(_, s)| s).sum();
        let d = &self.diffs[n];
        let mut sub = Matrix::zero(field, row_count, col_count);
        let mut rr = 0usize;
        for &(off, size) in &row_ranges {
            for i in 0..size {
                for j in 0..col_count {
                    if !d.is_entry_zero(off + i, j) {
                        sub.set(rr, j, d.get(off + i, j));
                    }
                }
                rr += 1;
            }
        }
        let kernel = sub.kernel_basis();
        // pad kernel vectors back to the full ambient (the allowed columns
        // are a prefix, so the canonical form is preserved)
        let rows: Vec<Vec<_>> = (0..kernel.dim())
            .map(|i| {
                let mut v = kernel.basis_vector(i);
                v.resize(dim, field.zero());
                v
            })
            .collect();
        Subspace::from_spanning(field, dim, rows)
    }

    fn boundary_of(&self, n_src: usize, s: &Subspace) -> Subspace {
        let rows: Vec<Vec<_>> =
            (0..s.dim()).map(|i| self.diffs[n_src].mul_vec(&s.basis_vector(i))).collect();
        Subspace::from_spanning(self.field, self.dims[n_src - 1], rows)
    }
}

/// Pages `E^0 ... E^{r_max}` of the filtered total complex, by explicit
/// subquotient arithmetic. Unreliable entries (outside the truncation
/// window `p + q + 1 <= min(p_max, q_max)`) carry provisional values and
/// are flagged.
pub fn spectral_pages(dc: &DoubleComplex, filtration: Filtration, r_max: usize) -> SpectralSequence {
    match filtration {
        Filtration::ByColumns => spectral_pages_columns(dc, filtration, r_max, false),
        Filtration::ByRows => spectral_pages_columns(&dc.transpose(), filtration, r_max, true),
    }
}

fn spectral_pages_columns(
    dc: &DoubleComplex,
    filtration: Filtration,
    r_max: usize,
    transpose_back: bool,
) -> SpectralSequence {
    let total = Total::build(dc);
    let (pm, qm) = (total.p_max, total.q_max);
    let window = pm.min(qm);
    let mut pages = Vec::with_capacity(r_max + 1);
    for r in 0..=r_max {
        let mut entries = Vec::with_capacity(pm + 1);
        for p in 0..=pm {
            let mut row = Vec::with_capacity(qm + 1);
            for q in 0..=qm {
                let n = p + q;
                let reliable = n + 1 <= window;
                let (num, den) = if r == 0 {
                    (total.filtration_subspace(n, p as i64), total.filtration_subspace(n, p as i64 - 1))
                } else {
                    let num = total.a_space(r as i64, p as i64, n);
                    let den1 = total.a_space(r as i64 - 1, p as i64 - 1, n);
                    let den2 = if n + 1 <= total.n_max() {
                        let up = total.a_space(r as i64 - 1, p as i64 + r as i64 - 1, n + 1);
                        total.boundary_of(n + 1, &up)
                    } else {
                        Subspace::zero_subspace(total.field, total.dims[n])
                    };
                    (num, den1.sum(&den2).expect("same ambient"))
                };
                debug_assert!(num.contains_subspace(&den), "denominator escapes numerator");
                let dim = num.dim() - den.dim();
                // rank of d_r leaving (p,q): dim A^r_p - dim(A^{r+1}_p + den)
                let d_rank = if r >= 1 {
                    let deeper = total.a_space(r as i64 + 1, p as i64, n);
                    Some(num.dim() - deeper.sum(&den).expect("same ambient").dim())
                } else {
                    None
                };
                row.push(PageEntry { p, q, dim, reliable, d_rank, numerator: num, denominator: den });
            }
            entries.push(row);
        }
        pages.push(SSPage { r, entries });
    }
    if transpose_back {
        for page in pages.iter_mut() {
            let old = std::mem::take(&mut page.entries);
            let new_pm = qm;
            let new_qm = pm;
            let mut flipped: Vec<Vec<PageEntry>> = Vec::with_capacity(new_pm + 1);
            for p in 0..=new_pm {
                let mut row = Vec::with_capacity(new_qm + 1);
                for q in 0..=new_qm {
                    let mut e = old[q][p].clone();
                    e.p = p;
                    e.q = q;
                    row.push(e);
                }
                flipped.push(row);
            }
            page.entries = flipped;
        }
    }
    // stabilization: first page from which the reliable dims stop changing
    let reliable_dims = |page: &SSPage| -> Vec<usize> {
        page.entries
            .iter()
            .flatten()
            .filter(|e| e.reliable)
            .map(|e| e.dim)
            .collect()
    };
    let mut stabilized_at = None;
    for r in (1..=r_max).rev() {
        if reliable_dims(&pages[r]) == reliable_dims(&pages[r - 1]) {
            stabilized_at = Some(r - 1);
        } else {
            break;
        }
    }
    SpectralSequence { filtration, pages, stabilized_at }
}

/// Homology dimensions of the total complex, `None` where the truncation
/// makes the value untrustworthy.
pub fn abutment_dims(dc: &DoubleComplex) -> Vec<Option<usize>> {
    let total = Total::build(dc);
    let window = total.p_max.min(total.q_max);
    let nmax = total.n_max();
    (0..nmax)
        .map(|n| {
            if n + 1 > window {
                return None;
            }
            let out_rank = total.diffs[n].rank();
            let in_rank = total.diffs[n + 1].rank();
            Some(total.dims[n] - out_rank - in_rank)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::Bimodule;
    use crate::category::LinearFunctor;
    use crate::covering::{Covering, FiniteGroup, GroupAction};
    use crate::hochschild;
    use crate::linalg::FieldSpec;
    use crate::samples;
    use crate::spectral::cartan_leray_double_complex;
    use std::sync::Arc;

    fn f3() -> FieldSpec {
        FieldSpec::prime_field(3).unwrap()
    }

    #[test]
    fn single_column_collapses_to_column_homology() {
        let c = Arc::new(samples::kronecker(FieldSpec::Rationals));
        let action =
            GroupAction::new(FiniteGroup::cyclic(1), c.clone(), vec![LinearFunctor::identity(c.clone())])
                .unwrap();
        let cov = Covering::quotient_category(action).unwrap();
        let m = Bimodule::standard(cov.quotient().clone());
        let (dc, _) = cartan_leray_double_complex(&cov, &m, 3, 3).unwrap();
        let ss = spectral_pages(&dc, Filtration::ByColumns, 4);
        let direct = hochschild::chain_complex(cov.quotient(), &m, 3).homology_dims();
        let e2 = ss.page(2);
        for q in 0..=2 {
            assert_eq!(e2.dim(0, q), direct[q], "E2(0,{q})");
            for p in 1..=3 {
                if e2.entries[p][q].reliable {
                    assert_eq!(e2.dim(p, q), 0, "E2({p},{q}) should vanish");
                }
            }
        }
        assert!(ss.stabilized_at.is_some());
    }

    #[test]
    fn maschke_collapse_at_char_three() {
        let (_, cov) = samples::swap_covering_data(f3());
        let m = Bimodule::standard(cov.quotient().clone());
        let (dc, _) = cartan_leray_double_complex(&cov, &m, 4, 4).unwrap();
        let ss = spectral_pages(&dc, Filtration::ByColumns, 5);
        let direct = hochschild::chain_complex(cov.quotient(), &m, 4).homology_dims();
        let e2 = ss.page(2);
        for p in 0..=4 {
            for q in 0..=4 {
                let e = &e2.entries[p][q];
                if !e.reliable {
                    continue;
                }
                if p > 0 {
                    assert_eq!(e.dim, 0, "kG semisimple: E2({p},{q}) must vanish");
                } else {
                    assert_eq!(e.dim, direct[q], "E2(0,{q})");
                }
            }
        }
    }

    #[test]
    fn row_filtration_is_concentrated_in_column_zero() {
        let (_, cov) = samples::swap_covering_data(f3());
        let m = Bimodule::standard(cov.quotient().clone());
        let (dc, _) = cartan_leray_double_complex(&cov, &m, 4, 4).unwrap();
        let ss = spectral_pages(&dc, Filtration::ByRows, 3);
        let direct = hochschild::chain_complex(cov.quotient(), &m, 4).homology_dims();
        let e2 = ss.page(2);
        for p in 0..=4 {
            for q in 0..=4 {
                let e = &e2.entries[p][q];
                if !e.reliable {
                    continue;
                }
                if p == 0 {
                    assert_eq!(e.dim, direct[q], "row-filtration E2(0,{q})");
                } else {
                    assert_eq!(e.dim, 0, "row-filtration E2({p},{q})");
                }
            }
        }
    }

    #[test]
    fn abutment_matches_direct_homology() {
        let (_, cov) = samples::swap_covering_data(f3());
        let m = Bimodule::standard(cov.quotient().clone());
        let (dc, _) = cartan_leray_double_complex(&cov, &m, 4, 4).unwrap();
        let direct = hochschild::chain_complex(cov.quotient(), &m, 4).homology_dims();
        let ab = abutment_dims(&dc);
        for n in 0..=2 {
            assert_eq!(ab[n], Some(direct[n]), "H_{n}(Tot)");
        }
        // and the infinity page sums to the abutment on the window
        let ss = spectral_pages(&dc, Filtration::ByColumns, 6);
        let inf = ss.infinity_page();
        for n in 0..=2 {
            let sum: usize = (0..=n).map(|p| inf.dim(p, n - p)).sum();
            assert_eq!(sum, direct[n], "sum of E^inf on the diagonal {n}");
        }
    }
}
