
use crate::bimodule::Bimodule;
use crate::complex::{BasedComplex, Direction, HomologyResult};
use crate::hochschild::{self, ChainKey};
use crate::linalg::{Matrix, Scalar};

use super::kgmod::KGModule;
use super::quotient::Covering;
use super::CoveringError;

/// A based complex together with a `kG`-module structure on every degree,
/// commuting with the differential.
#[derive(Clone, Debug)]
pub struct EquivariantComplex {
    pub complex: BasedComplex,
    pub modules: Vec<KGModule>,
}

/// Expands a tensor product of expansion vectors over target slots: yields
/// `(multi_index, coefficient)` for all nonzero combinations.
fn tensor_expand(field: crate::linalg::FieldSpec, slots: &[Vec<Scalar>]) -> Vec<(Vec<usize>, Scalar)> {
    let mut out: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), field.one())];
    for slot in slots {
        let mut next = Vec::new();
        for (prefix, coef) in &out {
            for (i, s) in slot.iter().enumerate() {
                if field.is_zero(s) {
                    continue;
                }
                let mut idx = prefix.clone();
                idx.push(i);
                next.push((idx, field.mul(coef, s)));
            }
        }
        out = next;
    }
    out
}

fn check_lifted(cov: &Covering, lifted: &Bimodule) -> Result<(), CoveringError> {
    let g = cov.action().group();
    for s in 0..g.order() {
        let tw = cov.action().twist_bimodule(lifted, s)?;
        if !tw.same_data(lifted) {
            return Err(CoveringError::NotLifted(format!(
                "twisting by `{}` changes the coefficients",
                g.names()[s]
            )));
        }
    }
    Ok(())
}

/// The chain complex `C_*(C, L M)` with the induced `G`-action
/// `(u, c_n, ..., c_1) -> (u, s c_n, ..., s c_1)`; the coefficient entry is
/// carried unchanged since lifted spaces are constant on orbits.
pub fn action_on_chains(
    cov: &Covering,
    m: &Bimodule,
    max_degree: usize,
) -> Result<EquivariantComplex, CoveringError> {
    let lifted = cov.lift_bimodule(m)?;
    action_on_chains_with_coefficients(cov, &lifted, max_degree)
}

/// Same as [`action_on_chains`], but with coefficients given directly as a
/// bimodule over the covering category. Rejects coefficients that are not
/// fixed under twisting (only lifted bimodules make the action formula
/// well defined).
pub fn action_on_chains_with_coefficients(
    cov: &Covering,
    lifted: &Bimodule,
    max_degree: usize,
) -> Result<EquivariantComplex, CoveringError> {
    check_lifted(cov, lifted)?;
    let base = cov.base().clone();
    let field = base.field();
    let g = cov.action().group().clone();
    let complex = hochschild::chain_complex(&base, lifted, max_degree);

    let mut modules = Vec::with_capacity(max_degree + 1);
    for q in 0..=max_degree {
        let basis = hochschild::chain_basis(&base, lifted, q);
        let dim = basis.keys.len();
        let mut mats = Vec::with_capacity(g.order());
        for s in 0..g.order() {
            let functor = cov.action().functor(s);
            let mut a = Matrix::zero(field, dim, dim);
            for (col, key) in basis.keys.iter().enumerate() {
                let tseq: Vec<usize> = key.seq.iter().map(|&o| functor.map_object(o)).collect();
                let slots: Vec<Vec<Scalar>> = (0..q)
                    .map(|i| {
                        functor.map_vec(
                            key.seq[i + 1],
                            key.seq[i],
                            &base.basis_vec(key.seq[i + 1], key.seq[i], key.arrows[i]),
                        )
                    })
                    .collect();
                for (arrows, coef) in tensor_expand(field, &slots) {
                    let row = basis.index[&ChainKey { seq: tseq.clone(), m: key.m, arrows }];
                    a.add_to_entry(row, col, &coef);
                }
            }
            mats.push(a);
        }
        let module = KGModule::new(g.clone(), mats)?;
        modules.push(module);
    }
    // the action must commute with the boundary
    for q in 1..=max_degree {
        let d = complex.diff_out(q).unwrap();
        for s in 0..g.order() {
            let lhs = d.mul(modules[q].matrix(s)).expect("shapes");
            let rhs = modules[q - 1].matrix(s).mul(d).expect("shapes");
            if lhs != rhs {
                return Err(CoveringError::NotEquivariant(q));
            }
        }
    }
    Ok(EquivariantComplex { complex, modules })
}

/// The cochain complex `C^*(C, L M)` with the induced `G`-action
/// `(s f)(u) = f(s^{-1} u)`.
pub fn action_on_cochains(
    cov: &Covering,
    m: &Bimodule,
    max_degree: usize,
) -> Result<EquivariantComplex, CoveringError> {
    let lifted = cov.lift_bimodule(m)?;
    check_lifted(cov, &lifted)?;
    let base = cov.base().clone();
    let field = base.field();
    let g = cov.action().group().clone();
    let complex = hochschild::cochain_complex(&base, &lifted, max_degree);

    let mut modules = Vec::with_capacity(max_degree + 1);
    for q in 0..=max_degree {
        let basis = hochschild::cochain_basis(&base, &lifted, q);
        let dim = basis.keys.len();
        let mut mats = Vec::with_capacity(g.order());
        for s in 0..g.order() {
            let fwd = cov.action().functor(s);
            let bwd = cov.action().functor(g.inv(s));
            let mut a = Matrix::zero(field, dim, dim);
            for (col, key) in basis.keys.iter().enumerate() {
                // s.f is supported on the translated sequence; its value on
                // a tensor basis element u is the coefficient of the f-slot
                // basis in s^{-1} u
                let tseq: Vec<usize> = key.seq.iter().map(|&o| fwd.map_object(o)).collect();
                let slots: Vec<Vec<Scalar>> = (0..q)
                    .map(|i| {
                        // row key.arrows[i] of the backward hom map on the
                        // translated slot
                        let hm = bwd.hom_map(tseq[i + 1], tseq[i]);
                        (0..hm.cols()).map(|u| hm.get(key.arrows[i], u)).collect()
                    })
                    .collect();
                for (arrows, coef) in tensor_expand(field, &slots) {
                    let row = basis.index[&hochschild::CochainKey { seq: tseq.clone(), arrows, w: key.w }];
                    a.add_to_entry(row, col, &coef);
                }
            }
            mats.push(a);
        }
        modules.push(KGModule::new(g.clone(), mats)?);
    }
    for q in 0..max_degree {
        let d = complex.diff_out(q).unwrap();
        for s in 0..g.order() {
            let lhs = d.mul(modules[q].matrix(s)).expect("shapes");
            let rhs = modules[q + 1].matrix(s).mul(d).expect("shapes");
            if lhs != rhs {
                return Err(CoveringError::NotEquivariant(q));
            }
        }
    }
    Ok(EquivariantComplex { complex, modules })
}

/// Degreewise quotient by `span{s.v - v}` with the induced differentials.
pub fn coinvariants_complex(eq: &EquivariantComplex) -> BasedComplex {
    let cx = &eq.complex;
    let field = cx.field();
    let top = cx.max_degree();
    // per degree: augmentation span, complement positions, reduction
    let spans: Vec<_> = eq.modules.iter().map(|m| m.augmentation_span()).collect();
    let positions: Vec<Vec<usize>> = (0..=top)
        .map(|q| {
            let piv: Vec<usize> = (0..cx.dim(q))
                .filter(|&j| {
                    // pivot columns of the span basis
                    (0..spans[q].dim()).any(|r| {
                        let row = spans[q].basis_vector(r);
                        (0..cx.dim(q)).find(|&c| !field.is_zero(&row[c])) == Some(j)
                    })
                })
                .collect();
            (0..cx.dim(q)).filter(|j| !piv.contains(j)).collect()
        })
        .collect();
    let dims: Vec<usize> = positions.iter().map(|p| p.len()).collect();
    let labels: Vec<Vec<String>> = (0..=top)
        .map(|q| positions[q].iter().map(|&j| format!("[{}]", cx.labels(q)[j])).collect())
        .collect();
    let project = |q: usize, v: &[Scalar]| -> Vec<Scalar> {
        let reduced = spans[q].reduce_vector(v);
        positions[q].iter().map(|&j| reduced[j].clone()).collect()
    };
    let mut diffs = Vec::new();
    match cx.direction() {
        Direction::Chain => {
            diffs.push(Matrix::zero(field, 0, dims[0]));
            for q in 1..=top {
                let d = cx.diff_out(q).unwrap();
                let mut m = Matrix::zero(field, dims[q - 1], dims[q]);
                for (col, &j) in positions[q].iter().enumerate() {
                    let mut image = Vec::with_capacity(cx.dim(q - 1));
                    for r in 0..cx.dim(q - 1) {
                        image.push(d.get(r, j));
                    }
                    for (row, s) in project(q - 1, &image).into_iter().enumerate() {
                        if !field.is_zero(&s) {
                            m.set(row, col, s);
                        }
                    }
                }
                diffs.push(m);
            }
            BasedComplex::new_chain(field, dims, labels, diffs).expect("induced boundary squares to zero")
        }
        Direction::Cochain => {
            for q in 0..top {
                let d = cx.diff_out(q).unwrap();
                let mut m = Matrix::zero(field, dims[q + 1], dims[q]);
                for (col, &j) in positions[q].iter().enumerate() {
                    let mut image = Vec::with_capacity(cx.dim(q + 1));
                    for r in 0..cx.dim(q + 1) {
                        image.push(d.get(r, j));
                    }
                    for (row, s) in project(q + 1, &image).into_iter().enumerate() {
                        if !field.is_zero(&s) {
                            m.set(row, col, s);
                        }
                    }
                }
                diffs.push(m);
            }
            BasedComplex::new_cochain(field, dims, labels, diffs).expect("induced coboundary squares to zero")
        }
    }
}

/// Degreewise fixed subspaces with the induced differentials.
pub fn invariants_complex(eq: &EquivariantComplex) -> BasedComplex {
    let cx = &eq.complex;
    let field = cx.field();
    let top = cx.max_degree();
    let fixed: Vec<_> = eq.modules.iter().map(|m| m.invariants()).collect();
    let dims: Vec<usize> = fixed.iter().map(|f| f.dim()).collect();
    let labels: Vec<Vec<String>> =
        (0..=top).map(|q| (0..dims[q]).map(|i| format!("inv{i}")).collect()).collect();
    let induced = |q_from: usize, q_to: usize, d: &Matrix| -> Matrix {
        let mut m = Matrix::zero(field, dims[q_to], dims[q_from]);
        for col in 0..dims[q_from] {
            let v = fixed[q_from].basis_vector(col);
            let image = d.mul_vec(&v);
            let coords = fixed[q_to]
                .coordinates_of(&image)
                .expect("differential preserves invariants");
            for (row, s) in coords.into_iter().enumerate() {
                if !field.is_zero(&s) {
                    m.set(row, col, s);
                }
            }
        }
        m
    };
    match cx.direction() {
        Direction::Chain => {
            let mut diffs = vec![Matrix::zero(field, 0, dims[0])];
            for q in 1..=top {
                diffs.push(induced(q, q - 1, cx.diff_out(q).unwrap()));
            }
            BasedComplex::new_chain(field, dims, labels, diffs).expect("restricted boundary squares to zero")
        }
        Direction::Cochain => {
            let mut diffs = Vec::new();
            for q in 0..top {
                diffs.push(induced(q, q + 1, cx.diff_out(q).unwrap()));
            }
            BasedComplex::new_cochain(field, dims, labels, diffs).expect("restricted coboundary squares to zero")
        }
    }
}

/// Homology together with the induced `kG`-module structure on each degree,
/// given by projecting translated representatives back to the chosen ones.
pub fn homology_with_action(eq: &EquivariantComplex) -> Result<(HomologyResult, Vec<KGModule>), CoveringError> {
    let h = eq.complex.homology();
    let field = eq.complex.field();
    let g = eq.modules[0].group().clone();
    let mut actions = Vec::with_capacity(h.degrees.len());
    for deg in &h.degrees {
        let q = deg.degree;
        let k = deg.dim;
        let nb = deg.boundaries.dim();
        let ambient = eq.complex.dim(q);
        // columns: representatives then boundary basis
        let mut sys = Matrix::zero(field, ambient, k + nb);
        for (c, rep) in deg.representatives.iter().enumerate() {
            for (r, s) in rep.iter().enumerate() {
                if !field.is_zero(s) {
                    sys.set(r, c, s.clone());
                }
            }
        }
        for c in 0..nb {
            let b = deg.boundaries.basis_vector(c);
            for (r, s) in b.into_iter().enumerate() {
                if !field.is_zero(&s) {
                    sys.set(r, k + c, s);
                }
            }
        }
        let mut mats = Vec::with_capacity(g.order());
        for s in 0..g.order() {
            let mut a = Matrix::zero(field, k, k);
            for (col, rep) in deg.representatives.iter().enumerate() {
                let moved = eq.modules[q].matrix(s).mul_vec(rep);
                let coords = sys
                    .solve(&moved)
                    .ok_or_else(|| CoveringError::BadAction("translated representative leaves Z".into()))?;
                for row in 0..k {
                    if !field.is_zero(&coords[row]) {
                        a.set(row, col, coords[row].clone());
                    }
                }
            }
            mats.push(a);
        }
        actions.push(KGModule::new(g.clone(), mats)?);
    }
    Ok((h, actions))
}

/// Per-degree verdicts of the chain-level coinvariants isomorphism
/// `C_*(C, L M)/G = C_*(B, M)`.
#[derive(Clone, Debug)]
pub struct CoinvariantsIsoReport {
    pub degrees: Vec<CoinvariantsDegree>,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct CoinvariantsDegree {
    pub degree: usize,
    pub coinvariants_dim: usize,
    pub direct_dim: usize,
    pub phi_rank: usize,
    pub phi_kills_augmentation: bool,
    pub phi_chain_map: bool,
}

/// Verifies that the explicit map `phi` (project morphisms through the
/// covering, carry the coefficient) identifies the coinvariants of
/// `C_*(C, L M)` with `C_*(B, M)` degreewise.
pub fn chain_coinvariants_iso_check(
    cov: &Covering,
    m: &Bimodule,
    max_degree: usize,
) -> Result<CoinvariantsIsoReport, CoveringError> {
    let eq = action_on_chains(cov, m, max_degree)?;
    let lifted = cov.lift_bimodule(m)?;
    let co = coinvariants_complex(&eq);
    let base = cov.base().clone();
    let quot = cov.quotient().clone();
    let field = base.field();
    let direct = hochschild::chain_complex(&quot, m, max_degree);
    let g = cov.action().group();

    // phi per degree
    let mut phis = Vec::with_capacity(max_degree + 1);
    for q in 0..=max_degree {
        let up = hochschild::chain_basis(&base, &lifted, q);
        let down = hochschild::chain_basis(&quot, m, q);
        let mut phi = Matrix::zero(field, down.keys.len(), up.keys.len());
        for (col, key) in up.keys.iter().enumerate() {
            let tseq: Vec<usize> = key.seq.iter().map(|&o| cov.orbit_of(o)).collect();
            let proj = cov.projection();
            let slots: Vec<Vec<Scalar>> = (0..q)
                .map(|i| {
                    proj.map_vec(
                        key.seq[i + 1],
                        key.seq[i],
                        &base.basis_vec(key.seq[i + 1], key.seq[i], key.arrows[i]),
                    )
                })
                .collect();
            for (arrows, coef) in tensor_expand(field, &slots) {
                let row = down.index[&ChainKey { seq: tseq.clone(), m: key.m, arrows }];
                phi.add_to_entry(row, col, &coef);
            }
        }
        phis.push(phi);
    }

    let mut degrees = Vec::new();
    let mut holds = true;
    for q in 0..=max_degree {
        let phi_rank = phis[q].rank();
        let direct_dim = direct.dim(q);
        let coinvariants_dim = co.dim(q);
        // phi factors through the coinvariants
        let mut kills = true;
        for s in 0..g.order() {
            let moved = phis[q].mul(eq.modules[q].matrix(s)).expect("shapes");
            if moved != phis[q] {
                kills = false;
            }
        }
        // chain map
        let mut chain_map = true;
        if q >= 1 {
            let lhs = phis[q - 1].mul(eq.complex.diff_out(q).unwrap()).expect("shapes");
            let rhs = direct.diff_out(q).unwrap().mul(&phis[q]).expect("shapes");
            if lhs != rhs {
                chain_map = false;
            }
        }
        let ok = phi_rank == direct_dim && coinvariants_dim == direct_dim && kills && chain_map;
        holds &= ok;
        degrees.push(CoinvariantsDegree {
            degree: q,
            coinvariants_dim,
            direct_dim,
            phi_rank,
            phi_kills_augmentation: kills,
            phi_chain_map: chain_map,
        });
    }
    Ok(CoinvariantsIsoReport { degrees, holds })
}

/// Freeness evidence for each degree of an equivariant complex: dimension
/// divisibility and, for monomial actions, the regular-orbit partition of
/// the basis.
#[derive(Clone, Debug)]
pub struct FreenessReport {
    pub degrees: Vec<FreenessDegree>,
    pub all_free: bool,
}

#[derive(Clone, Debug)]
pub struct FreenessDegree {
    pub degree: usize,
    pub dim: usize,
    pub divisible: bool,
    /// `Some(true)` when the action permutes the basis (up to scalars) in
    /// orbits of full group size; `None` when the action is not monomial.
    pub regular_partition: Option<bool>,
}

pub fn kg_freeness_report(eq: &EquivariantComplex) -> FreenessReport {
    let g = eq.modules[0].group().clone();
    let field = eq.complex.field();
    let mut degrees = Vec::new();
    let mut all_free = true;
    for (q, module) in eq.modules.iter().enumerate() {
        let dim = module.dim();
        let divisible = g.order() > 0 && dim % g.order() == 0;
        // monomial: every column of every element matrix has exactly one
        // nonzero entry
        let mut perms: Vec<Vec<usize>> = Vec::new();
        let mut monomial = true;
        'outer: for s in 0..g.order() {
            let mat = module.matrix(s);
            let mut perm = Vec::with_capacity(dim);
            for j in 0..dim {
                let nz: Vec<usize> = (0..dim).filter(|&i| !mat.is_entry_zero(i, j)).collect();
                if nz.len() != 1 {
                    monomial = false;
                    break 'outer;
                }
                perm.push(nz[0]);
            }
            perms.push(perm);
        }
        let regular_partition = if monomial {
            let mut seen = vec![false; dim];
            let mut regular = true;
            for j in 0..dim {
                if seen[j] {
                    continue;
                }
                let mut orbit = std::collections::BTreeSet::new();
                for perm in &perms {
                    orbit.insert(perm[j]);
                }
                for &o in &orbit {
                    seen[o] = true;
                }
                if orbit.len() != g.order() {
                    regular = false;
                }
            }
            Some(regular)
        } else {
            None
        };
        let free_here = divisible && regular_partition != Some(false);
        all_free &= free_here;
        degrees.push(FreenessDegree { degree: q, dim, divisible, regular_partition });
    }
    let _ = field;
    FreenessReport { degrees, all_free }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::{Covering, FiniteGroup, GroupAction};
    use std::sync::Arc;
    use crate::category::LinearFunctor;
    use crate::linalg::FieldSpec;
    use crate::samples;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn f3() -> FieldSpec {
        FieldSpec::prime_field(3).unwrap()
    }

    fn trivial_covering(field: FieldSpec) -> Covering {
        let c = Arc::new(samples::kronecker(field));
        let action = GroupAction::new(
            FiniteGroup::cyclic(1),
            c.clone(),
            vec![LinearFunctor::identity(c)],
        )
        .unwrap();
        Covering::quotient_category(action).unwrap()
    }

    #[test]
    fn trivial_group_acts_as_identity() {
        let cov = trivial_covering(q());
        let m = Bimodule::standard(cov.quotient().clone());
        let eq = action_on_chains(&cov, &m, 2).unwrap();
        for (qd, module) in eq.modules.iter().enumerate() {
            let id = Matrix::identity(q(), eq.complex.dim(qd));
            assert_eq!(*module.matrix(0), id);
        }
        let co = coinvariants_complex(&eq);
        assert_eq!(co.dims(), eq.complex.dims());
        let inv = invariants_complex(&eq);
        assert_eq!(inv.dims(), eq.complex.dims());
    }

    #[test]
    fn swap_acts_freely_on_degree_one_chains() {
        let (_, cov) = samples::swap_covering_data(q());
        let m = Bimodule::standard(cov.quotient().clone());
        let eq = action_on_chains(&cov, &m, 1).unwrap();
        let t = eq.modules[1].matrix(1);
        // permutation matrix with no fixed basis vector
        for j in 0..t.cols() {
            assert!(t.is_entry_zero(j, j), "basis vector {j} is fixed");
            let nonzero: Vec<usize> = (0..t.rows()).filter(|&i| !t.is_entry_zero(i, j)).collect();
            assert_eq!(nonzero.len(), 1);
        }
    }

    #[test]
    fn chains_are_kg_free() {
        let (_, cov) = samples::swap_covering_data(q());
        let m = Bimodule::standard(cov.quotient().clone());
        let eq = action_on_chains(&cov, &m, 3).unwrap();
        let report = kg_freeness_report(&eq);
        assert!(report.all_free);
        for d in &report.degrees {
            assert!(d.divisible, "degree {} has dim {}", d.degree, d.dim);
            assert_eq!(d.regular_partition, Some(true));
        }
    }

    #[test]
    fn coinvariants_match_quotient_chains() {
        for field in [q(), f3()] {
            let (_, cov) = samples::swap_covering_data(field);
            let m = Bimodule::standard(cov.quotient().clone());
            let eq = action_on_chains(&cov, &m, 3).unwrap();
            let co = coinvariants_complex(&eq);
            let direct = hochschild::chain_complex(cov.quotient(), &m, 3);
            assert_eq!(co.dims(), direct.dims());
            assert_eq!(co.homology_dims(), direct.homology_dims());
        }
    }

    #[test]
    fn coinvariants_iso_check_passes() {
        let (_, cov) = samples::swap_covering_data(q());
        let m = Bimodule::standard(cov.quotient().clone());
        let report = chain_coinvariants_iso_check(&cov, &m, 3).unwrap();
        assert!(report.holds, "{report:?}");
    }

    #[test]
    fn coinvariants_iso_check_trivial_cover() {
        let cov = trivial_covering(q());
        let m = Bimodule::standard(cov.quotient().clone());
        assert!(chain_coinvariants_iso_check(&cov, &m, 2).unwrap().holds);
    }

    #[test]
    fn unlifted_coefficients_rejected() {
        let (_, cov) = samples::swap_covering_data(q());
        // the standard bimodule of the cover is not of the form L M
        let std_cover = Bimodule::standard(cov.base().clone());
        let r = action_on_chains_with_coefficients(&cov, &std_cover, 2);
        assert!(matches!(r, Err(CoveringError::NotLifted(_))));
    }

    #[test]
    fn lifted_kronecker_cochain_h1_is_five_with_three_fixed() {
        for field in [q(), f3()] {
            let (_, cov) = samples::swap_covering_data(field);
            let m = Bimodule::standard(cov.quotient().clone());
            let eq = action_on_cochains(&cov, &m, 2).unwrap();
            let (h, actions) = homology_with_action(&eq).unwrap();
            assert_eq!(h.dims()[1], 5, "dim H^1(C, LB) over {field}");
            assert_eq!(actions[1].invariants_dim(), 3, "dim H^1(C, LB)^G over {field}");
        }
    }

    #[test]
    fn invariants_complex_h1_is_three() {
        for field in [q(), f3()] {
            let (_, cov) = samples::swap_covering_data(field);
            let m = Bimodule::standard(cov.quotient().clone());
            let eq = action_on_cochains(&cov, &m, 2).unwrap();
            let inv = invariants_complex(&eq);
            assert_eq!(inv.homology_dims()[1], 3, "invariants-side H^1 over {field}");
        }
    }

    #[test]
    fn homology_coinvariants_match_quotient_h0() {
        let (_, cov) = samples::swap_covering_data(f3());
        let m = Bimodule::standard(cov.quotient().clone());
        let eq = action_on_chains(&cov, &m, 2).unwrap();
        let (h, actions) = homology_with_action(&eq).unwrap();
        let direct = hochschild::chain_complex(cov.quotient(), &m, 2);
        let direct_h = direct.homology_dims();
        assert_eq!(actions[0].coinvariants_dim(), direct_h[0]);
        let _ = h;
    }
}
