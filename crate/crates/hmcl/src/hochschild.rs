//! Hochschild-Mitchell chain and cochain complexes of a finite linear
//! category with bimodule coefficients, the degree-zero center, and the
//! naive algebra-level Hochschild complex used as an independent oracle.
//!
//! Conventions: an `(n+1)`-object sequence is stored in application order
//! `[o_0, ..., o_n]`, the `i`-th tensor slot being a morphism `o_i -> o_{i+1}`.
//! The chain coefficient lives in `M(o_0, o_n)`, the cochain value in
//! `M(o_n, o_0)`. The cochain differential follows the printed three-term
//! formula (left-action term signed `(-1)^{n+1}`, right-action term
//! unsigned); the chain boundary is the classical Hochschild one.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::category::{FlatAlgebra, LinearCategory};
use crate::complex::{BasedComplex, ComplexError};
use crate::linalg::{Matrix, Subspace};

/// All object sequences of the given length whose consecutive hom spaces
/// are nonzero, in lexicographic order.
fn sequences(c: &LinearCategory, len: usize) -> Vec<Vec<usize>> {
    let n = c.object_count();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(c: &LinearCategory, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for o in 0..n {
            if let Some(&prev) = cur.last() {
                if c.dim_hom(o, prev) == 0 {
                    continue;
                }
            }
            cur.push(o);
            rec(c, n, len, cur, out);
            cur.pop();
        }
    }
    rec(c, n, len, &mut cur, &mut out);
    out
}

/// Odometer over mixed radices; yields multi-indices in lexicographic order.
fn multi_indices(radices: &[usize]) -> Vec<Vec<usize>> {
    if radices.iter().any(|&r| r == 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur = vec![0usize; radices.len()];
    loop {
        out.push(cur.clone());
        let mut i = radices.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < radices[i] {
                break;
            }
            cur[i] = 0;
        }
    }
}

/// Dimension of the degree-`n` k-nerve: the direct sum over composable
/// `(n+1)`-sequences of the tensor products of hom spaces, with the
/// degree-0 nerve being the sum of the endomorphism spaces.
pub fn nerve_dim(c: &LinearCategory, n: usize) -> usize {
    if n == 0 {
        return (0..c.object_count()).map(|x| c.dim_hom(x, x)).sum();
    }
    sequences(c, n + 1)
        .into_iter()
        .map(|seq| (0..n).map(|i| c.dim_hom(seq[i + 1], seq[i])).product::<usize>())
        .sum()
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) struct ChainKey {
    pub(crate) seq: Vec<usize>,
    pub(crate) m: usize,
    pub(crate) arrows: Vec<usize>,
}

pub(crate) struct ChainBasis {
    pub(crate) keys: Vec<ChainKey>,
    pub(crate) index: BTreeMap<ChainKey, usize>,
    pub(crate) labels: Vec<String>,
}

pub(crate) fn chain_basis(c: &LinearCategory, m: &Bimodule, n: usize) -> ChainBasis {
    let mut keys = Vec::new();
    let mut labels = Vec::new();
    if n == 0 {
        for x in 0..c.object_count() {
            for j in 0..m.dim_space(x, x) {
                keys.push(ChainKey { seq: vec![x], m: j, arrows: vec![] });
                labels.push(format!("{}@{}", m.space_labels(x, x)[j], c.objects()[x]));
            }
        }
    } else {
        for seq in sequences(c, n + 1) {
            let dm = m.dim_space(seq[0], seq[n]);
            if dm == 0 {
                continue;
            }
            let radices: Vec<usize> = (0..n).map(|i| c.dim_hom(seq[i + 1], seq[i])).collect();
            for arrows in multi_indices(&radices) {
                for j in 0..dm {
                    let names: Vec<&str> = seq.iter().map(|&o| c.objects()[o].as_str()).collect();
                    // paper order (m; c_n, ..., c_1)
                    let cs: Vec<&str> = (0..n)
                        .rev()
                        .map(|i| c.hom_labels(seq[i + 1], seq[i])[arrows[i]].as_str())
                        .collect();
                    labels.push(format!(
                        "[{}] ({}; {})",
                        names.join(","),
                        m.space_labels(seq[0], seq[n])[j],
                        cs.join(",")
                    ));
                    keys.push(ChainKey { seq: seq.clone(), m: j, arrows: arrows.clone() });
                }
            }
        }
    }
    let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    ChainBasis { keys, index, labels }
}

/// The Hochschild-Mitchell chain complex `C_n = M (x) Nerve_n` through
/// `max_degree`, with the classical boundary.
pub fn chain_complex(cat: &Arc<LinearCategory>, m: &Bimodule, max_degree: usize) -> BasedComplex {
    assert!(std::ptr::eq(Arc::as_ptr(cat), Arc::as_ptr(m.category())) || **cat == **m.category());
    let f = cat.field();
    let bases: Vec<ChainBasis> = (0..=max_degree).map(|n| chain_basis(cat, m, n)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.keys.len()).collect();
    let labels: Vec<Vec<String>> = bases.iter().map(|b| b.labels.clone()).collect();

    let mut diffs = Vec::with_capacity(max_degree + 1);
    diffs.push(Matrix::zero(f, 0, dims[0]));
    for n in 1..=max_degree {
        let mut d = Matrix::zero(f, dims[n - 1], dims[n]);
        for (col, key) in bases[n].keys.iter().enumerate() {
            let seq = &key.seq;
            let mv = m.basis_vec(seq[0], seq[n], key.m);
            // + (m . c_n): absorb the last arrow into the coefficient
            {
                let cv = cat.basis_vec(seq[n], seq[n - 1], key.arrows[n - 1]);
                let out = m.right_act(seq[0], seq[n], seq[n - 1], &mv, &cv);
                let tseq: Vec<usize> = seq[..n].to_vec();
                let tarrows: Vec<usize> = key.arrows[..n - 1].to_vec();
                for (mj, s) in out.into_iter().enumerate() {
                    if f.is_zero(&s) {
                        continue;
                    }
                    let row = bases[n - 1].index[&ChainKey { seq: tseq.clone(), m: mj, arrows: tarrows.clone() }];
                    d.add_to_entry(row, col, &s);
                }
            }
            // middle compositions, removing the object seq[i]; the tuple is
            // reversed relative to the classical ordering, so the face
            // composing at position i carries the classical index n - i
            for i in 1..n {
                let sign = if (n - i) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                let comp = cat.compose_basis(seq[i + 1], seq[i], seq[i - 1], key.arrows[i], key.arrows[i - 1]);
                let mut tseq = seq.clone();
                tseq.remove(i);
                for (b, s) in comp.into_iter().enumerate() {
                    if f.is_zero(&s) {
                        continue;
                    }
                    let mut tarrows = key.arrows.clone();
                    tarrows.remove(i);
                    tarrows[i - 1] = b;
                    let row = bases[n - 1].index[&ChainKey { seq: tseq.clone(), m: key.m, arrows: tarrows }];
                    let v = f.mul(&sign, &s);
                    d.add_to_entry(row, col, &v);
                }
            }
            // (-1)^n (c_1 . m): absorb the first arrow on the left
            {
                let sign = if n % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                let cv = cat.basis_vec(seq[1], seq[0], key.arrows[0]);
                let out = m.left_act(seq[1], seq[0], seq[n], &cv, &mv);
                let tseq: Vec<usize> = seq[1..].to_vec();
                let tarrows: Vec<usize> = key.arrows[1..].to_vec();
                for (mj, s) in out.into_iter().enumerate() {
                    if f.is_zero(&s) {
                        continue;
                    }
                    let row = bases[n - 1].index[&ChainKey { seq: tseq.clone(), m: mj, arrows: tarrows.clone() }];
                    let v = f.mul(&sign, &s);
                    d.add_to_entry(row, col, &v);
                }
            }
        }
        diffs.push(d);
    }
    BasedComplex::new_chain(f, dims, labels, diffs).expect("chain boundary squares to zero")
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub(crate) struct CochainKey {
    pub(crate) seq: Vec<usize>,
    pub(crate) arrows: Vec<usize>,
    pub(crate) w: usize,
}

pub(crate) struct CochainBasis {
    pub(crate) keys: Vec<CochainKey>,
    pub(crate) index: BTreeMap<CochainKey, usize>,
    pub(crate) labels: Vec<String>,
}

pub(crate) fn cochain_basis(c: &LinearCategory, m: &Bimodule, n: usize) -> CochainBasis {
    let mut keys = Vec::new();
    let mut labels = Vec::new();
    if n == 0 {
        for x in 0..c.object_count() {
            for w in 0..m.dim_space(x, x) {
                keys.push(CochainKey { seq: vec![x], arrows: vec![], w });
                labels.push(format!("{}@{}", m.space_labels(x, x)[w], c.objects()[x]));
            }
        }
    } else {
        for seq in sequences(c, n + 1) {
            let dw = m.dim_space(seq[n], seq[0]);
            if dw == 0 {
                continue;
            }
            let radices: Vec<usize> = (0..n).map(|i| c.dim_hom(seq[i + 1], seq[i])).collect();
            for arrows in multi_indices(&radices) {
                for w in 0..dw {
                    let names: Vec<&str> = seq.iter().map(|&o| c.objects()[o].as_str()).collect();
                    let cs: Vec<&str> =
                        (0..n).map(|i| c.hom_labels(seq[i + 1], seq[i])[arrows[i]].as_str()).collect();
                    labels.push(format!(
                        "[{}] {} -> {}",
                        names.join(","),
                        cs.join("(x)"),
                        m.space_labels(seq[n], seq[0])[w]
                    ));
                    keys.push(CochainKey { seq: seq.clone(), arrows: arrows.clone(), w });
                }
            }
        }
    }
    let index = keys.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    CochainBasis { keys, index, labels }
}

/// The Hochschild-Mitchell cochain complex `C^n = Hom(Nerve_n, M)` through
/// `max_degree`, with the printed three-term coboundary.
pub fn cochain_complex(cat: &Arc<LinearCategory>, m: &Bimodule, max_degree: usize) -> BasedComplex {
    assert!(std::ptr::eq(Arc::as_ptr(cat), Arc::as_ptr(m.category())) || **cat == **m.category());
    let f = cat.field();
    let nobj = cat.object_count();
    let bases: Vec<CochainBasis> = (0..=max_degree).map(|n| cochain_basis(cat, m, n)).collect();
    let dims: Vec<usize> = bases.iter().map(|b| b.keys.len()).collect();
    let labels: Vec<Vec<String>> = bases.iter().map(|b| b.labels.clone()).collect();

    let mut diffs = Vec::with_capacity(max_degree);
    for n in 0..max_degree {
        let mut d = Matrix::zero(f, dims[n + 1], dims[n]);
        for (col, key) in bases[n].keys.iter().enumerate() {
            let seq = &key.seq;
            let wv = m.basis_vec(seq[n], seq[0], key.w);
            // left-action term, signed (-1)^{n+1}
            let lsign = if (n + 1) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
            for z in 0..nobj {
                let dh = cat.dim_hom(z, seq[n]);
                if dh == 0 {
                    continue;
                }
                for uc in 0..dh {
                    let cv = cat.basis_vec(z, seq[n], uc);
                    let out = m.left_act(z, seq[n], seq[0], &cv, &wv);
                    let mut tseq = seq.clone();
                    tseq.push(z);
                    let mut tarrows = key.arrows.clone();
                    tarrows.push(uc);
                    for (wj, s) in out.iter().enumerate() {
                        if f.is_zero(s) {
                            continue;
                        }
                        let row = bases[n + 1].index[&CochainKey { seq: tseq.clone(), arrows: tarrows.clone(), w: wj }];
                        let v = f.mul(&lsign, s);
                        d.add_to_entry(row, col, &v);
                    }
                }
            }
            // middle terms: insert an object at position `ins`, signed (-1)^ins
            for ins in 1..=n {
                let sign = if ins % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                for q in 0..nobj {
                    let d_low = cat.dim_hom(q, seq[ins - 1]);
                    let d_high = cat.dim_hom(seq[ins], q);
                    if d_low == 0 || d_high == 0 {
                        continue;
                    }
                    for lo in 0..d_low {
                        for hi in 0..d_high {
                            let comp = cat.compose_basis(seq[ins], q, seq[ins - 1], hi, lo);
                            let coef = &comp[key.arrows[ins - 1]];
                            if f.is_zero(coef) {
                                continue;
                            }
                            let mut tseq = seq.clone();
                            tseq.insert(ins, q);
                            let mut tarrows = key.arrows.clone();
                            tarrows[ins - 1] = lo;
                            tarrows.insert(ins, hi);
                            let row =
                                bases[n + 1].index[&CochainKey { seq: tseq, arrows: tarrows, w: key.w }];
                            let v = f.mul(&sign, coef);
                            d.add_to_entry(row, col, &v);
                        }
                    }
                }
            }
            // right-action term, unsigned
            for z in 0..nobj {
                let dh = cat.dim_hom(seq[0], z);
                if dh == 0 {
                    continue;
                }
                for uc in 0..dh {
                    let cv = cat.basis_vec(seq[0], z, uc);
                    let out = m.right_act(seq[n], seq[0], z, &wv, &cv);
                    let mut tseq = vec![z];
                    tseq.extend(seq.iter());
                    let mut tarrows = vec![uc];
                    tarrows.extend(key.arrows.iter());
                    for (wj, s) in out.iter().enumerate() {
                        if f.is_zero(s) {
                            continue;
                        }
                        let row = bases[n + 1].index[&CochainKey { seq: tseq.clone(), arrows: tarrows.clone(), w: wj }];
                        d.add_to_entry(row, col, s);
                    }
                }
            }
        }
        diffs.push(d);
    }
    BasedComplex::new_cochain(f, dims, labels, diffs).expect("printed coboundary squares to zero")
}

/// The center of a category: tuples `(m_x)` in the product of the
/// endomorphism spaces commuting with every morphism. Independent of the
/// cochain complex; equals its degree-0 cohomology with standard
/// coefficients.
#[derive(Clone, Debug)]
pub struct Center {
    pub dim: usize,
    /// Basis rows over the product of the endomorphism spaces.
    pub basis: Subspace,
    pub labels: Vec<String>,
}

pub fn center(c: &LinearCategory) -> Center {
    let f = c.field();
    let n = c.object_count();
    let mut offsets = vec![0usize; n + 1];
    for x in 0..n {
        offsets[x + 1] = offsets[x] + c.dim_hom(x, x);
    }
    let total = offsets[n];
    let mut labels = Vec::with_capacity(total);
    for x in 0..n {
        for j in 0..c.dim_hom(x, x) {
            labels.push(format!("{}@{}", c.hom_labels(x, x)[j], c.objects()[x]));
        }
    }
    // conditions: c . m_x = m_y . c for every basis morphism c in hom(y,x)
    let mut rows_count = 0usize;
    for y in 0..n {
        for x in 0..n {
            rows_count += c.dim_hom(y, x) * c.dim_hom(y, x);
        }
    }
    let mut sys = Matrix::zero(f, rows_count, total);
    let mut row_base = 0usize;
    for y in 0..n {
        for x in 0..n {
            let dyx = c.dim_hom(y, x);
            for ci in 0..dyx {
                let cv = c.basis_vec(y, x, ci);
                // coefficient of m_x components
                for j in 0..c.dim_hom(x, x) {
                    let prod = c.compose_vec(y, x, x, &cv, &c.basis_vec(x, x, j));
                    for (t, s) in prod.into_iter().enumerate() {
                        if !f.is_zero(&s) {
                            sys.add_to_entry(row_base + t, offsets[x] + j, &s);
                        }
                    }
                }
                // minus coefficient of m_y components
                for j in 0..c.dim_hom(y, y) {
                    let prod = c.compose_vec(y, y, x, &c.basis_vec(y, y, j), &cv);
                    for (t, s) in prod.into_iter().enumerate() {
                        if !f.is_zero(&s) {
                            let neg = f.neg(&s);
                            sys.add_to_entry(row_base + t, offsets[y] + j, &neg);
                        }
                    }
                }
                row_base += dyx;
            }
        }
    }
    let basis = sys.kernel_basis();
    Center { dim: basis.dim(), basis, labels }
}

/// Flattens a category bimodule to a bimodule over the flat algebra:
/// the total space with one action matrix per algebra basis element.
/// Returns `(left, right, labels)`.
pub fn flatten_bimodule(a: &FlatAlgebra, m: &Bimodule) -> (Vec<Matrix>, Vec<Matrix>, Vec<String>) {
    let c = m.category();
    let f = c.field();
    let n = c.object_count();
    let mut moff = vec![vec![0usize; n]; n];
    let mut total = 0usize;
    let mut labels = Vec::new();
    for y in 0..n {
        for x in 0..n {
            moff[y][x] = total;
            total += m.dim_space(y, x);
            for l in m.space_labels(y, x) {
                labels.push(format!("{}<-{}:{}", c.objects()[y], c.objects()[x], l));
            }
        }
    }
    let mut left = Vec::with_capacity(a.dim());
    let mut right = Vec::with_capacity(a.dim());
    for i in 0..a.dim() {
        let (yi, xi, local) = a.block_of(i).expect("oracle needs a category-tagged algebra");
        let mut lm = Matrix::zero(f, total, total);
        let mut rm = Matrix::zero(f, total, total);
        let cv = c.basis_vec(yi, xi, local);
        for y in 0..n {
            for x in 0..n {
                for j in 0..m.dim_space(y, x) {
                    let mv = m.basis_vec(y, x, j);
                    if xi == y {
                        // left action lands in M(yi, x)
                        let out = m.left_act(yi, y, x, &cv, &mv);
                        for (t, s) in out.into_iter().enumerate() {
                            if !f.is_zero(&s) {
                                lm.set(moff[yi][x] + t, moff[y][x] + j, s);
                            }
                        }
                    }
                    if x == yi {
                        // right action lands in M(y, xi)
                        let out = m.right_act(y, x, xi, &mv, &cv);
                        for (t, s) in out.into_iter().enumerate() {
                            if !f.is_zero(&s) {
                                rm.set(moff[y][xi] + t, moff[y][x] + j, s);
                            }
                        }
                    }
                }
            }
        }
        left.push(lm);
        right.push(rm);
    }
    (left, right, labels)
}

/// The naive Hochschild cochain complex `Hom(Lambda^{(x)n}, M)` of the flat
/// algebra with the classical coboundary, not using the idempotent
/// decomposition. Refuses to build spaces larger than `dim_cap`.
pub fn algebra_cochain_complex(
    a: &FlatAlgebra,
    m: &Bimodule,
    max_degree: usize,
    dim_cap: usize,
) -> Result<BasedComplex, ComplexError> {
    let f = a.field();
    let d = a.dim();
    let (left, right, mlabels) = flatten_bimodule(a, m);
    let md = mlabels.len();

    let mut dims = Vec::with_capacity(max_degree + 1);
    for n in 0..=max_degree {
        let mut size = md;
        for _ in 0..n {
            size = size.saturating_mul(d);
            if size > dim_cap {
                return Err(ComplexError::TooLarge(format!(
                    "dim C^{n} = {}^{n} * {} exceeds the cap {}",
                    d, md, dim_cap
                )));
            }
        }
        dims.push(size);
    }
    // basis of C^n: (i_1, ..., i_n, w), index big-endian in the tuple
    let tuple_index = |tuple: &[usize], w: usize| -> usize {
        let mut idx = 0usize;
        for &i in tuple {
            idx = idx * d + i;
        }
        idx * md + w
    };
    let labels: Vec<Vec<String>> = (0..=max_degree)
        .map(|n| {
            let mut v = Vec::with_capacity(dims[n]);
            let radices = vec![d; n];
            if n == 0 {
                return mlabels.clone();
            }
            for tuple in multi_indices(&radices) {
                for w in 0..md {
                    let ts: Vec<&str> = tuple.iter().map(|&i| a.labels()[i].as_str()).collect();
                    v.push(format!("{} -> {}", ts.join("(x)"), mlabels[w]));
                }
            }
            v
        })
        .collect();

    let mut diffs = Vec::with_capacity(max_degree);
    for n in 0..max_degree {
        let mut dm = Matrix::zero(f, dims[n + 1], dims[n]);
        let radices = vec![d; n];
        for tuple in multi_indices(&radices) {
            for w in 0..md {
                let col = tuple_index(&tuple, w);
                // b_1 . f(b_2, ..., b_{n+1})
                for b in 0..d {
                    let mut t = vec![b];
                    t.extend(&tuple);
                    for wj in 0..md {
                        let s = left[b].get(wj, w);
                        if !f.is_zero(&s) {
                            dm.add_to_entry(tuple_index(&t, wj), col, &s);
                        }
                    }
                }
                // middle compositions
                for pos in 1..=n {
                    let sign = if pos % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                    for p in 0..d {
                        for q in 0..d {
                            let coef = &a.mult_basis(p, q)[tuple[pos - 1]];
                            if f.is_zero(coef) {
                                continue;
                            }
                            let mut t = Vec::with_capacity(n + 1);
                            t.extend(&tuple[..pos - 1]);
                            t.push(p);
                            t.push(q);
                            t.extend(&tuple[pos..]);
                            let v = f.mul(&sign, coef);
                            dm.add_to_entry(tuple_index(&t, w), col, &v);
                        }
                    }
                }
                // (-1)^{n+1} f(b_1, ..., b_n) . b_{n+1}
                let rsign = if (n + 1) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                for b in 0..d {
                    let mut t = tuple.clone();
                    t.push(b);
                    for wj in 0..md {
                        let s = right[b].get(wj, w);
                        if !f.is_zero(&s) {
                            let v = f.mul(&rsign, &s);
                            dm.add_to_entry(tuple_index(&t, wj), col, &v);
                        }
                    }
                }
            }
        }
        diffs.push(dm);
    }
    BasedComplex::new_cochain(f, dims, labels, diffs)
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
    fn nerve_dims_one_object() {
        let c = samples::one_object_field(q());
        for n in 0..4 {
            assert_eq!(nerve_dim(&c, n), 1);
        }
    }

    #[test]
    fn nerve_dims_kronecker() {
        let c = samples::kronecker(q());
        assert_eq!(nerve_dim(&c, 0), 2);
        assert_eq!(nerve_dim(&c, 1), 4);
    }

    #[test]
    fn nerve_dims_cover() {
        let c = samples::kronecker_double_cover(q());
        assert_eq!(nerve_dim(&c, 1), 8);
        // hand count of composable basis pairs (identities included):
        // 3 pairs through each of x, tx; 1 through each remaining start
        assert_eq!(nerve_dim(&c, 2), 12);
    }

    #[test]
    fn chain_of_ground_field() {
        let c = Arc::new(samples::one_object_field(q()));
        let m = Bimodule::standard(c.clone());
        let cx = chain_complex(&c, &m, 3);
        assert_eq!(cx.dims(), &[1, 1, 1, 1]);
        assert_eq!(cx.homology_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn chain_dims_kronecker() {
        let c = Arc::new(samples::kronecker(q()));
        let m = Bimodule::standard(c.clone());
        let cx = chain_complex(&c, &m, 3);
        // enumeration: only the two constant sequences contribute in each
        // positive degree
        assert_eq!(cx.dims(), &[2, 2, 2, 2]);
    }

    #[test]
    fn chain_of_zero_bimodule() {
        let c = Arc::new(samples::kronecker(q()));
        let m = Bimodule::zero(c.clone());
        let cx = chain_complex(&c, &m, 2);
        assert_eq!(cx.dims(), &[0, 0, 0]);
        assert_eq!(cx.homology_dims(), vec![0, 0]);
    }

    #[test]
    fn cochain_of_ground_field() {
        let c = Arc::new(samples::one_object_field(q()));
        let m = Bimodule::standard(c.clone());
        let cx = cochain_complex(&c, &m, 3);
        assert_eq!(cx.homology_dims(), vec![1, 0, 0]);
    }

    #[test]
    fn kronecker_cohomology_dims() {
        for field in [q(), FieldSpec::prime_field(3).unwrap()] {
            let c = Arc::new(samples::kronecker(field));
            let m = Bimodule::standard(c.clone());
            let cx = cochain_complex(&c, &m, 2);
            let h = cx.homology_dims();
            assert_eq!(h[0], 1, "H^0 over {field}");
            assert_eq!(h[1], 3, "H^1 over {field}");
        }
    }

    #[test]
    fn cover_first_cohomology_is_one() {
        for field in [q(), FieldSpec::prime_field(3).unwrap()] {
            let c = Arc::new(samples::kronecker_double_cover(field));
            let m = Bimodule::standard(c.clone());
            let cx = cochain_complex(&c, &m, 2);
            assert_eq!(cx.homology_dims()[1], 1, "H^1(C,C) over {field}");
        }
    }

    #[test]
    fn center_examples() {
        assert_eq!(center(&samples::one_object_field(q())).dim, 1);
        assert_eq!(center(&samples::kronecker(q())).dim, 1);
        assert_eq!(center(&samples::two_points(q())).dim, 2);
    }

    #[test]
    fn center_equals_degree_zero_cohomology() {
        for cat in [
            samples::one_object_field(q()),
            samples::kronecker(q()),
            samples::kronecker_double_cover(q()),
            samples::dual_numbers(q()),
            samples::a3_zero_relation(q()),
        ] {
            let c = Arc::new(cat);
            let m = Bimodule::standard(c.clone());
            let h0 = cochain_complex(&c, &m, 1).homology_dims()[0];
            assert_eq!(center(&c).dim, h0);
        }
    }

    #[test]
    fn algebra_oracle_ground_field() {
        let c = Arc::new(samples::one_object_field(q()));
        let m = Bimodule::standard(c.clone());
        let a = FlatAlgebra::from_category(&c);
        let cx = algebra_cochain_complex(&a, &m, 2, 100_000).unwrap();
        assert_eq!(cx.homology_dims(), vec![1, 0]);
    }

    #[test]
    fn algebra_oracle_kronecker() {
        let c = Arc::new(samples::kronecker(q()));
        let m = Bimodule::standard(c.clone());
        let a = FlatAlgebra::from_category(&c);
        let cx = algebra_cochain_complex(&a, &m, 2, 100_000).unwrap();
        let h = cx.homology_dims();
        assert_eq!(h[0], 1);
        assert_eq!(h[1], 3);
    }

    #[test]
    fn algebra_oracle_cover() {
        let f3 = FieldSpec::prime_field(3).unwrap();
        let c = Arc::new(samples::kronecker_double_cover(f3));
        let m = Bimodule::standard(c.clone());
        let a = FlatAlgebra::from_category(&c);
        let cx = algebra_cochain_complex(&a, &m, 2, 100_000).unwrap();
        assert_eq!(cx.homology_dims()[1], 1);
    }

    #[test]
    fn oracle_size_guard() {
        let c = Arc::new(samples::kronecker_double_cover(q()));
        let m = Bimodule::standard(c.clone());
        let a = FlatAlgebra::from_category(&c);
        assert!(matches!(
            algebra_cochain_complex(&a, &m, 3, 100).unwrap_err(),
            ComplexError::TooLarge(_)
        ));
    }
}
