
use crate::bimodule::Bimodule;
use crate::covering::{
    self, Covering, GroupPresentation,
};
use crate::hochschild;
use crate::linalg::{smith_normal_form, FieldSpec, Scalar, Subspace};

use super::pages::{spectral_pages, Filtration};
use super::SpectralError;

/// Per-degree comparison of the Maschke-case identities
/// `H^n(B,M) = H^n(C,LM)^G` and `H_n(B,M) = H_n(C,LM)/G`.
#[derive(Clone, Debug)]
pub struct MaschkeReport {
    pub degrees: Vec<MaschkeDegree>,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct MaschkeDegree {
    pub n: usize,
    pub quotient_cohomology: usize,
    pub invariants_of_cover_cohomology: usize,
    pub quotient_homology: usize,
    pub coinvariants_of_cover_homology: usize,
}

/// Runs both Maschke-case comparisons through degree `n_max`; refuses when
/// the characteristic divides the group order.
pub fn maschke_compare(cov: &Covering, m: &Bimodule, n_max: usize) -> Result<MaschkeReport, SpectralError> {
    let field = cov.base().field();
    let order = cov.action().group().order() as u64;
    let p = field.characteristic();
    if p != 0 && order % p == 0 {
        return Err(SpectralError::Hypothesis(format!(
            "characteristic {p} divides the group order {order}"
        )));
    }
    let quotient = cov.quotient().clone();
    let coh_direct = hochschild::cochain_complex(&quotient, m, n_max + 1).homology_dims();
    let hom_direct = hochschild::chain_complex(&quotient, m, n_max + 1).homology_dims();

    let eq_coh = covering::action_on_cochains(cov, m, n_max + 1)?;
    let (_, coh_actions) = covering::homology_with_action(&eq_coh)?;
    let eq_hom = covering::action_on_chains(cov, m, n_max + 1)?;
    let (_, hom_actions) = covering::homology_with_action(&eq_hom)?;

    let mut degrees = Vec::with_capacity(n_max + 1);
    let mut holds = true;
    for n in 0..=n_max {
        let d = MaschkeDegree {
            n,
            quotient_cohomology: coh_direct[n],
            invariants_of_cover_cohomology: coh_actions[n].invariants_dim(),
            quotient_homology: hom_direct[n],
            coinvariants_of_cover_homology: hom_actions[n].coinvariants_dim(),
        };
        holds &= d.quotient_cohomology == d.invariants_of_cover_cohomology
            && d.quotient_homology == d.coinvariants_of_cover_homology;
        degrees.push(d);
    }
    Ok(MaschkeReport { degrees, holds })
}

/// `dim Hom(G, k^+)` of a finitely presented group, through the Smith
/// normal form of the abelianized relator matrix: the free rank plus, in
/// characteristic `p`, the invariant factors divisible by `p`.
pub fn hom_to_field_dim(pres: &GroupPresentation, field: FieldSpec) -> usize {
    let m = pres.abelianized_relator_matrix();
    let (factors, free_rank) = smith_normal_form(&m);
    match field.characteristic() {
        0 => free_rank,
        p => {
            let p = num::BigInt::from(p);
            free_rank + factors.iter().filter(|f| (*f % &p) == num::BigInt::from(0)).count()
        }
    }
}

/// Free rank of the abelianization (the paper's `rank G`).
pub fn presentation_rank(pres: &GroupPresentation) -> usize {
    smith_normal_form(&pres.abelianized_relator_matrix()).1
}

/// The degree-zero splitting `H^0(C, L B) = k (+) (nilpotent tuples /\ H^0)`
/// verified with the literal constant tuple.
#[derive(Clone, Debug)]
pub struct SplittingReport {
    pub h0_dim: usize,
    pub constant_tuple_in_h0: bool,
    pub nilpotent_intersection_dim: usize,
    pub splits: bool,
}

/// Verdict of the embedding `Hom(G, k^+) -> H^1(B, B)`.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub hom_dim: usize,
    pub h1_dim: usize,
    pub bound_holds: bool,
    pub splitting: SplittingReport,
}

fn check_hypotheses(cov: &Covering) -> Result<(), SpectralError> {
    if !cov.base().properties().connected {
        return Err(SpectralError::Hypothesis("the covering category is not connected".into()));
    }
    let props = cov.quotient().properties();
    if !props.hom_finite {
        return Err(SpectralError::Hypothesis("the quotient is not hom-finite".into()));
    }
    if !props.basic {
        return Err(SpectralError::Hypothesis("the quotient is not basic".into()));
    }
    if !props.totally_split {
        return Err(SpectralError::Hypothesis("the quotient is not totally split".into()));
    }
    Ok(())
}

/// Checks `dim Hom(G, k^+) <= dim H^1(B, B)` under the theorem's
/// hypotheses, and verifies the degree-zero splitting with an explicit
/// constant-tuple basis vector.
pub fn verify_hom_embedding(cov: &Covering, pres: &GroupPresentation) -> Result<EmbeddingReport, SpectralError> {
    check_hypotheses(cov)?;
    let field = cov.base().field();
    let quotient = cov.quotient().clone();
    let std_b = Bimodule::standard(quotient.clone());
    let hom_dim = hom_to_field_dim(pres, field);
    let h1_dim = hochschild::cochain_complex(&quotient, &std_b, 2).homology_dims()[1];

    // H^0(C, L B) inside the product of the endomorphism coefficient spaces
    let lb = cov.lift_bimodule(&std_b).map_err(covering::CoveringError::Category)?;
    let base = cov.base().clone();
    let cx = hochschild::cochain_complex(&base, &lb, 1);
    let h0 = match cx.diff_out(0) {
        Some(d) => d.kernel_basis(),
        None => Subspace::full(field, cx.dim(0)),
    };

    // the constant tuple (1, 1, ..., 1): identity of the quotient object in
    // every coefficient slot
    let keys = crate::hochschild::cochain_basis(&base, &lb, 0);
    let mut constant = vec![field.zero(); cx.dim(0)];
    for (i, key) in keys.keys.iter().enumerate() {
        let x = key.seq[0];
        let u = cov.orbit_of(x);
        constant[i] = quotient.identity(u)[key.w].clone();
    }
    let constant_in_h0 = h0.contains_vector(&constant);

    // tuples valued in the nilpotent parts
    let mut nil_rows: Vec<Vec<Scalar>> = Vec::new();
    for x in 0..base.object_count() {
        let u = cov.orbit_of(x);
        let nil = quotient
            .nilpotent_part(u)
            .ok_or_else(|| SpectralError::Hypothesis("quotient object is not split".into()))?;
        for r in 0..nil.dim() {
            let v = nil.basis_vector(r);
            let mut row = vec![field.zero(); cx.dim(0)];
            for (i, key) in keys.keys.iter().enumerate() {
                if key.seq[0] == x {
                    row[i] = v[key.w].clone();
                }
            }
            nil_rows.push(row);
        }
    }
    let nil_tuples = Subspace::from_spanning(field, cx.dim(0), nil_rows);
    let inter = nil_tuples.intersection(&h0).expect("same ambient");
    let splits = constant_in_h0
        && !inter.contains_vector(&constant)
        && h0.dim() == 1 + inter.dim();

    Ok(EmbeddingReport {
        hom_dim,
        h1_dim,
        bound_holds: hom_dim <= h1_dim,
        splitting: SplittingReport {
            h0_dim: h0.dim(),
            constant_tuple_in_h0: constant_in_h0,
            nilpotent_intersection_dim: inter.dim(),
            splits,
        },
    })
}

/// Verdict of `rank G <= dim H^1(B, B)`.
#[derive(Clone, Debug)]
pub struct RankBoundReport {
    pub rank: usize,
    pub h1_dim: usize,
    pub holds: bool,
}

pub fn verify_rank_bound(cov: &Covering, pres: &GroupPresentation) -> Result<RankBoundReport, SpectralError> {
    check_hypotheses(cov)?;
    let quotient = cov.quotient().clone();
    let std_b = Bimodule::standard(quotient.clone());
    let rank = presentation_rank(pres);
    let h1_dim = hochschild::cochain_complex(&quotient, &std_b, 2).homology_dims()[1];
    Ok(RankBoundReport { rank, h1_dim, holds: rank <= h1_dim })
}

/// Dimensions of the cohomological Cartan-Leray page `E_r^{p,q}` for a
/// locally finite coefficient bimodule, obtained by dualization: they equal
/// the homological page dimensions with coefficients in the dual bimodule.
/// Returns `(dim, reliable)` per spot.
pub fn cohomological_page_dims(
    cov: &Covering,
    m: &Bimodule,
    p_max: usize,
    q_max: usize,
    r: usize,
) -> Result<Vec<Vec<(usize, bool)>>, SpectralError> {
    let dual = m.dual();
    let (dc, _) = super::double::cartan_leray_double_complex(cov, &dual, p_max, q_max)?;
    let ss = spectral_pages(&dc, Filtration::ByColumns, r);
    let page = ss.page(r);
    Ok(page.entries.iter().map(|row| row.iter().map(|e| (e.dim, e.reliable)).collect()).collect())
}

/// `H^q(C, L M)` as a `kG`-module, for independent cross-checks of the
/// cohomological edge terms.
pub fn cover_cohomology_modules(
    cov: &Covering,
    m: &Bimodule,
    n_max: usize,
) -> Result<Vec<covering::KGModule>, SpectralError> {
    let eq = covering::action_on_cochains(cov, m, n_max + 1)?;
    let (_, actions) = covering::homology_with_action(&eq)?;
    Ok(actions.into_iter().take(n_max + 1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::LinearFunctor;
    use crate::covering::{FiniteGroup, GroupAction};
    use crate::samples;
    use crate::spectral::group_cohomology;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime_field(p).unwrap()
    }

    fn z2_presentation() -> GroupPresentation {
        GroupPresentation::new(vec!["t".into()], vec![vec![(0, 2)]]).unwrap()
    }

    #[test]
    fn hom_dims_by_characteristic() {
        let p = z2_presentation();
        assert_eq!(hom_to_field_dim(&p, q()), 0);
        assert_eq!(hom_to_field_dim(&p, f(2)), 1);
        assert_eq!(hom_to_field_dim(&p, f(3)), 0);
        let free2 = GroupPresentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(hom_to_field_dim(&free2, q()), 2);
        assert_eq!(hom_to_field_dim(&free2, f(5)), 2);
        assert_eq!(presentation_rank(&free2), 2);
        assert_eq!(presentation_rank(&z2_presentation()), 0);
    }

    #[test]
    fn maschke_holds_at_char_three() {
        let (_, cov) = samples::swap_covering_data(f(3));
        let m = Bimodule::standard(cov.quotient().clone());
        let report = maschke_compare(&cov, &m, 2).unwrap();
        assert!(report.holds, "{report:?}");
        // the paper's degree-one values
        assert_eq!(report.degrees[1].quotient_cohomology, 3);
        assert_eq!(report.degrees[1].invariants_of_cover_cohomology, 3);
    }

    #[test]
    fn maschke_refuses_bad_characteristic() {
        let (_, cov) = samples::swap_covering_data(f(2));
        let m = Bimodule::standard(cov.quotient().clone());
        assert!(matches!(maschke_compare(&cov, &m, 1), Err(SpectralError::Hypothesis(_))));
    }

    #[test]
    fn embedding_bound_char_zero() {
        let (_, cov) = samples::swap_covering_data(q());
        let report = verify_hom_embedding(&cov, &z2_presentation()).unwrap();
        assert_eq!(report.hom_dim, 0);
        assert_eq!(report.h1_dim, 3);
        assert!(report.bound_holds);
        assert!(report.splitting.splits, "{report:?}");
        assert_eq!(report.splitting.h0_dim, 1);
    }

    #[test]
    fn embedding_bound_char_two() {
        let (_, cov) = samples::swap_covering_data(f(2));
        let report = verify_hom_embedding(&cov, &z2_presentation()).unwrap();
        assert_eq!(report.hom_dim, 1);
        assert!(report.bound_holds, "1 <= {}", report.h1_dim);
        assert!(report.splitting.splits);
    }

    #[test]
    fn embedding_trivial_covering() {
        let c = std::sync::Arc::new(samples::kronecker(q()));
        let action =
            GroupAction::new(FiniteGroup::cyclic(1), c.clone(), vec![LinearFunctor::identity(c.clone())])
                .unwrap();
        let cov = Covering::quotient_category(action).unwrap();
        let trivial = GroupPresentation::new(vec![], vec![]).unwrap();
        let report = verify_hom_embedding(&cov, &trivial).unwrap();
        assert_eq!(report.hom_dim, 0);
        assert!(report.bound_holds);
    }

    #[test]
    fn rank_bound_for_z2() {
        let (_, cov) = samples::swap_covering_data(q());
        let report = verify_rank_bound(&cov, &z2_presentation()).unwrap();
        assert_eq!(report.rank, 0);
        assert_eq!(report.h1_dim, 3);
        assert!(report.holds);
    }

    #[test]
    fn hypothesis_failure_is_reported() {
        // a quotient that is not basic: trivial covering of the matrix-unit
        // category
        let c = std::sync::Arc::new(samples::matrix_units_category(q()));
        let action =
            GroupAction::new(FiniteGroup::cyclic(1), c.clone(), vec![LinearFunctor::identity(c.clone())])
                .unwrap();
        let cov = Covering::quotient_category(action).unwrap();
        let trivial = GroupPresentation::new(vec![], vec![]).unwrap();
        assert!(matches!(verify_hom_embedding(&cov, &trivial), Err(SpectralError::Hypothesis(_))));
    }

    #[test]
    fn cohomological_edge_term_via_duality() {
        for field in [f(3), f(2)] {
            let (_, cov) = samples::swap_covering_data(field);
            let m = Bimodule::standard(cov.quotient().clone());
            let dims = cohomological_page_dims(&cov, &m, 3, 3, 2).unwrap();
            // independent route: H^1(G, H^0(C, L B)) by the bar complex
            let modules = cover_cohomology_modules(&cov, &m, 0).unwrap();
            let edge = group_cohomology(&modules[0], 1)[1];
            assert!(dims[1][0].1, "edge spot must be reliable");
            assert_eq!(dims[1][0].0, edge, "E_2^(1,0) over {field}");
            // edge embeds into the degree-one abutment
            let h1 = hochschild::cochain_complex(cov.quotient(), &m, 2).homology_dims()[1];
            assert!(edge <= h1);
        }
    }

    #[test]
    fn cohomological_pages_match_invariants_in_semisimple_char() {
        let (_, cov) = samples::swap_covering_data(f(3));
        let m = Bimodule::standard(cov.quotient().clone());
        let dims = cohomological_page_dims(&cov, &m, 3, 3, 2).unwrap();
        let direct = hochschild::cochain_complex(cov.quotient(), &m, 3).homology_dims();
        for q in 0..=2 {
            assert_eq!(dims[0][q].0, direct[q], "E_2^(0,{q})");
            for p in 1..=2 {
                if dims[p][q].1 {
                    assert_eq!(dims[p][q].0, 0);
                }
            }
        }
    }
}
