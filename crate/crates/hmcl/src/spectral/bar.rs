use crate::complex::BasedComplex;
use crate::covering::{FiniteGroup, KGModule};
use crate::linalg::{FieldSpec, Matrix};

/// The unnormalized bar resolution of the trivial module: `P_p` is the free
/// `kG`-module on `[s_1 | ... | s_p]`, realized here as a based complex of
/// `k`-spaces of dimension `|G|^{p+1}` together with the augmentation.
pub struct BarResolution {
    pub group: FiniteGroup,
    pub field: FieldSpec,
    pub complex: BasedComplex,
    pub augmentation: Matrix,
}

fn pow(base: usize, exp: usize) -> usize {
    (0..exp).fold(1usize, |a, _| a * base)
}

/// Index of `(s_0, [s_1|...|s_p])` in the degree-`p` basis.
fn bar_index(order: usize, elems: &[usize]) -> usize {
    elems.iter().fold(0usize, |acc, &s| acc * order + s)
}

fn bar_tuples(order: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * order);
        for t in &out {
            for s in 0..order {
                let mut u = t.clone();
                u.push(s);
                next.push(u);
            }
        }
        out = next;
    }
    out
}

/// Builds the bar resolution through homological degree `p_max`.
pub fn bar_resolution(group: &FiniteGroup, field: FieldSpec, p_max: usize) -> BarResolution {
    let o = group.order();
    let dims: Vec<usize> = (0..=p_max).map(|p| pow(o, p + 1)).collect();
    let labels: Vec<Vec<String>> = (0..=p_max)
        .map(|p| {
            bar_tuples(o, p + 1)
                .into_iter()
                .map(|t| {
                    let head = group.names()[t[0]].clone();
                    let tail: Vec<&str> = t[1..].iter().map(|&s| group.names()[s].as_str()).collect();
                    format!("{head}[{}]", tail.join("|"))
                })
                .collect()
        })
        .collect();
    let mut diffs = vec![Matrix::zero(field, 0, dims[0])];
    for p in 1..=p_max {
        let mut d = Matrix::zero(field, dims[p - 1], dims[p]);
        for tuple in bar_tuples(o, p + 1) {
            let col = bar_index(o, &tuple);
            // face 0: absorb s_1 into the module coordinate s_0
            {
                let mut t = vec![group.mul(tuple[0], tuple[1])];
                t.extend(&tuple[2..]);
                d.add_to_entry(bar_index(o, &t), col, &field.one());
            }
            for i in 1..p {
                let sign = if i % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                let mut t = tuple[..i].to_vec();
                t.push(group.mul(tuple[i], tuple[i + 1]));
                t.extend(&tuple[i + 2..]);
                d.add_to_entry(bar_index(o, &t), col, &sign);
            }
            {
                let sign = if p % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                let t = tuple[..p].to_vec();
                d.add_to_entry(bar_index(o, &t), col, &sign);
            }
        }
        diffs.push(d);
    }
    let complex = BasedComplex::new_chain(field, dims, labels, diffs).expect("bar boundary squares to zero");
    let mut augmentation = Matrix::zero(field, 1, o);
    for s in 0..o {
        augmentation.set(0, s, field.one());
    }
    BarResolution { group: group.clone(), field, complex, augmentation }
}

impl BarResolution {
    /// Ranks of the free `kG`-modules `P_p`.
    pub fn kg_ranks(&self) -> Vec<usize> {
        let o = self.group.order();
        (0..=self.complex.max_degree()).map(|p| pow(o, p)).collect()
    }

    /// Exactness of `... -> P_1 -> P_0 -> k -> 0` in homological degrees
    /// `<= p_max - 1`, by rank counting on the augmented complex.
    pub fn is_exact(&self) -> bool {
        let p_max = self.complex.max_degree();
        // H_0 of the augmented complex: ker(aug) = im(d_1)
        let ker_aug = self.complex.dim(0) - self.augmentation.rank();
        if p_max >= 1 && self.complex.diff_out(1).map_or(0, |d| d.rank()) != ker_aug {
            return false;
        }
        // middle degrees 1..p_max-1
        for p in 1..p_max {
            let out_rank = self.complex.diff_out(p).unwrap().rank();
            let in_rank = self.complex.diff_in(p).unwrap().rank();
            if self.complex.dim(p) - out_rank != in_rank {
                return false;
            }
        }
        // surjectivity of the augmentation
        self.augmentation.rank() == 1
    }
}

/// The standard complex computing group homology `H_p(G, X)`:
/// `C_p = k[G^p] (x) X` with the inhomogeneous boundary.
pub fn group_homology_complex(x: &KGModule, p_max: usize) -> BasedComplex {
    let g = x.group().clone();
    let field = x.field();
    let o = g.order();
    let xd = x.dim();
    let dims: Vec<usize> = (0..=p_max).map(|p| pow(o, p) * xd).collect();
    let labels: Vec<Vec<String>> = (0..=p_max)
        .map(|p| {
            let mut v = Vec::with_capacity(dims[p]);
            for t in bar_tuples(o, p) {
                for j in 0..xd {
                    let tail: Vec<&str> = t.iter().map(|&s| g.names()[s].as_str()).collect();
                    v.push(format!("[{}](x)e{j}", tail.join("|")));
                }
            }
            v
        })
        .collect();
    let idx = |tuple: &[usize], j: usize| bar_index(o, tuple) * xd + j;
    let mut diffs = vec![Matrix::zero(field, 0, dims[0])];
    for p in 1..=p_max {
        let mut d = Matrix::zero(field, dims[p - 1], dims[p]);
        for tuple in bar_tuples(o, p) {
            for j in 0..xd {
                let col = idx(&tuple, j);
                // face 0: [s_2|...] (x) s_1^{-1} x
                {
                    let t = tuple[1..].to_vec();
                    let act = x.matrix(g.inv(tuple[0]));
                    for r in 0..xd {
                        let s = act.get(r, j);
                        if !field.is_zero(&s) {
                            d.add_to_entry(idx(&t, r), col, &s);
                        }
                    }
                }
                for i in 1..p {
                    let sign = if i % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                    let mut t = tuple[..i - 1].to_vec();
                    t.push(g.mul(tuple[i - 1], tuple[i]));
                    t.extend(&tuple[i + 1..]);
                    d.add_to_entry(idx(&t, j), col, &sign);
                }
                {
                    let sign = if p % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                    let t = tuple[..p - 1].to_vec();
                    d.add_to_entry(idx(&t, j), col, &sign);
                }
            }
        }
        diffs.push(d);
    }
    BasedComplex::new_chain(field, dims, labels, diffs).expect("group boundary squares to zero")
}

/// `H_p(G, X)` for `p <= p_max - 1`.
pub fn group_homology(x: &KGModule, p_max: usize) -> Vec<usize> {
    group_homology_complex(x, p_max + 1).homology_dims()[..=p_max].to_vec()
}

/// The standard complex computing group cohomology `H^p(G, X)`:
/// `C^p = Maps(G^p, X)` with the inhomogeneous coboundary.
pub fn group_cohomology_complex(x: &KGModule, p_max: usize) -> BasedComplex {
    let g = x.group().clone();
    let field = x.field();
    let o = g.order();
    let xd = x.dim();
    let dims: Vec<usize> = (0..=p_max).map(|p| pow(o, p) * xd).collect();
    let labels: Vec<Vec<String>> = (0..=p_max)
        .map(|p| {
            let mut v = Vec::with_capacity(dims[p]);
            for t in bar_tuples(o, p) {
                for j in 0..xd {
                    let tail: Vec<&str> = t.iter().map(|&s| g.names()[s].as_str()).collect();
                    v.push(format!("({}) -> e{j}", tail.join(",")));
                }
            }
            v
        })
        .collect();
    let idx = |tuple: &[usize], j: usize| bar_index(o, tuple) * xd + j;
    let mut diffs = Vec::with_capacity(p_max);
    for p in 0..p_max {
        let mut d = Matrix::zero(field, dims[p + 1], dims[p]);
        for tuple in bar_tuples(o, p) {
            for j in 0..xd {
                let col = idx(&tuple, j);
                // s_1 . f(s_2, ..., s_{p+1})
                for s in 0..o {
                    let mut t = vec![s];
                    t.extend(&tuple);
                    let act = x.matrix(s);
                    for r in 0..xd {
                        let v = act.get(r, j);
                        if !field.is_zero(&v) {
                            d.add_to_entry(idx(&t, r), col, &v);
                        }
                    }
                }
                // middle compositions
                for pos in 1..=p {
                    let sign = if pos % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                    for a in 0..o {
                        for b in 0..o {
                            if g.mul(a, b) != tuple[pos - 1] {
                                continue;
                            }
                            let mut t = tuple[..pos - 1].to_vec();
                            t.push(a);
                            t.push(b);
                            t.extend(&tuple[pos..]);
                            d.add_to_entry(idx(&t, j), col, &sign);
                        }
                    }
                }
                // (-1)^{p+1} f(s_1, ..., s_p)
                let sign = if (p + 1) % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                for s in 0..o {
                    let mut t = tuple.clone();
                    t.push(s);
                    d.add_to_entry(idx(&t, j), col, &sign);
                }
            }
        }
        diffs.push(d);
    }
    BasedComplex::new_cochain(field, dims, labels, diffs).expect("group coboundary squares to zero")
}

/// `H^p(G, X)` for `p <= p_max - 1`.
pub fn group_cohomology(x: &KGModule, p_max: usize) -> Vec<usize> {
    group_cohomology_complex(x, p_max + 1).homology_dims()[..=p_max].to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    #[test]
    fn trivial_group_resolution() {
        let g = FiniteGroup::cyclic(1);
        let bar = bar_resolution(&g, FieldSpec::Rationals, 3);
        assert_eq!(bar.complex.dims(), &[1, 1, 1, 1]);
        assert_eq!(bar.kg_ranks(), vec![1, 1, 1, 1]);
        assert!(bar.is_exact());
    }

    #[test]
    fn z2_resolution_is_exact() {
        let g = FiniteGroup::cyclic(2);
        for field in [FieldSpec::Rationals, f(2), f(3)] {
            let bar = bar_resolution(&g, field, 3);
            assert!(bar.is_exact(), "bar resolution not exact over {field}");
        }
    }

    #[test]
    fn z2_homology_of_trivial_module() {
        let g = FiniteGroup::cyclic(2);
        // mod 2: all degrees one-dimensional
        let k2 = KGModule::trivial(g.clone(), f(2));
        assert_eq!(group_homology(&k2, 2), vec![1, 1, 1]);
        // mod 3: concentrated in degree 0
        let k3 = KGModule::trivial(g.clone(), f(3));
        assert_eq!(group_homology(&k3, 2), vec![1, 0, 0]);
        // rationals likewise
        let kq = KGModule::trivial(g, FieldSpec::Rationals);
        assert_eq!(group_homology(&kq, 2), vec![1, 0, 0]);
    }

    #[test]
    fn homology_of_free_module_vanishes() {
        for order in [2usize, 3] {
            let g = FiniteGroup::cyclic(order);
            for field in [f(2), f(3), FieldSpec::Rationals] {
                let reg = KGModule::regular(g.clone(), field);
                assert_eq!(group_homology(&reg, 2), vec![1, 0, 0], "kG over {field}, order {order}");
            }
        }
    }

    #[test]
    fn z2_cohomology_matches_hom_to_k() {
        let g = FiniteGroup::cyclic(2);
        // H^1(G, k) = Hom(G, k^+): one-dimensional in char 2, zero in char 3
        let k2 = KGModule::trivial(g.clone(), f(2));
        assert_eq!(group_cohomology(&k2, 2), vec![1, 1, 1]);
        let k3 = KGModule::trivial(g, f(3));
        assert_eq!(group_cohomology(&k3, 2), vec![1, 0, 0]);
    }

    #[test]
    fn cohomology_of_regular_module() {
        let g = FiniteGroup::cyclic(2);
        for field in [f(2), f(3)] {
            let reg = KGModule::regular(g.clone(), field);
            assert_eq!(group_cohomology(&reg, 2), vec![1, 0, 0], "over {field}");
        }
    }

    #[test]
    fn h0_is_coinvariants_and_invariants() {
        let g = FiniteGroup::cyclic(3);
        for field in [f(2), f(3), FieldSpec::Rationals] {
            let reg = KGModule::regular(g.clone(), field);
            assert_eq!(group_homology(&reg, 1)[0], reg.coinvariants_dim());
            assert_eq!(group_cohomology(&reg, 1)[0], reg.invariants_dim());
        }
    }
}
