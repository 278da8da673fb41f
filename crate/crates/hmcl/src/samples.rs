//! Ready-made categories, algebras and coverings used by the examples and
//! the test suites.

use crate::category::{Arrow, FlatAlgebra, LinearCategory, PresentedCategory, QuiverPresentation};
use crate::covering::{Covering, FiniteGroup, GroupAction};
use crate::linalg::{FieldSpec, Matrix, Scalar};

fn arrow(name: &str, source: &str, target: &str) -> Arrow {
    Arrow { name: name.into(), source: source.into(), target: target.into() }
}

/// The one-object category with `End = k`.
pub fn one_object_field(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(vec!["x".into()], vec![], vec![], None).unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// Two objects, no morphisms between them.
pub fn two_points(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(vec!["x".into(), "y".into()], vec![], vec![], None).unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// The Kronecker category: two objects and two parallel arrows `a, b`.
pub fn kronecker(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(
        vec!["x".into(), "y".into()],
        vec![arrow("a", "x", "y"), arrow("b", "x", "y")],
        vec![],
        None,
    )
    .unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// The double cover of the Kronecker category: the square quiver
/// `a: x -> y`, `b: x -> ty`, `ta: tx -> ty`, `tb: tx -> y`.
pub fn kronecker_double_cover(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(
        vec!["x".into(), "y".into(), "tx".into(), "ty".into()],
        vec![arrow("a", "x", "y"), arrow("b", "x", "ty"), arrow("ta", "tx", "ty"), arrow("tb", "tx", "y")],
        vec![],
        None,
    )
    .unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// `k[t]/(t^2)` as a one-object category (one loop, nilpotence bound 2).
pub fn dual_numbers(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(
        vec!["x".into()],
        vec![arrow("t", "x", "x")],
        vec![],
        Some(2),
    )
    .unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// The `A_2` quiver `x -> y`; total dimension 3.
pub fn a2(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(
        vec!["x".into(), "y".into()],
        vec![arrow("a", "x", "y")],
        vec![],
        None,
    )
    .unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// The `A_3` quiver `x -> y -> z` with the zero relation on the long path;
/// total dimension 5.
pub fn a3_zero_relation(field: FieldSpec) -> LinearCategory {
    let q = QuiverPresentation::new(
        vec!["x".into(), "y".into(), "z".into()],
        vec![arrow("a", "x", "y"), arrow("c", "y", "z")],
        vec![QuiverPresentation::relation_from_ints(field, &[(1, &["a", "c"])])],
        None,
    )
    .unwrap();
    LinearCategory::from_presentation(&q, field).unwrap()
}

/// The one-object category with endomorphism algebra `k^n` (componentwise
/// product); not split for `n > 1`.
pub fn product_of_fields(field: FieldSpec, n: usize) -> LinearCategory {
    assert!(n >= 1);
    let labels = vec![vec![(0..n).map(|i| format!("u{i}")).collect::<Vec<_>>()]];
    let identity = vec![vec![field.one(); n]];
    let mut block = Matrix::zero(field, n * n, n);
    for i in 0..n {
        block.set(i * n + i, i, field.one());
    }
    LinearCategory::new(field, vec!["x".into()], labels, identity, vec![vec![vec![block]]]).unwrap()
}

/// Two objects with every hom space one-dimensional and matrix-unit
/// composition; flattens to the 2x2 matrix algebra, and the two objects are
/// isomorphic.
pub fn matrix_units_category(field: FieldSpec) -> LinearCategory {
    let n = 2;
    let labels: Vec<Vec<Vec<String>>> =
        (0..n).map(|y| (0..n).map(|x| vec![format!("E{y}{x}")]).collect()).collect();
    let identities = vec![vec![field.one()]; n];
    let mut compose = Vec::with_capacity(n);
    for _z in 0..n {
        let mut per_y = Vec::with_capacity(n);
        for _y in 0..n {
            let mut per_x = Vec::with_capacity(n);
            for _x in 0..n {
                // E_{zy} . E_{yx} = E_{zx}: all blocks are 1x1 identity
                let mut block = Matrix::zero(field, 1, 1);
                block.set(0, 0, field.one());
                per_x.push(block);
            }
            per_y.push(per_x);
        }
        compose.push(per_y);
    }
    LinearCategory::new(field, vec!["p".into(), "q".into()], labels, identities, compose).unwrap()
}

/// The 2x2 matrix algebra on the matrix-unit basis `E00, E01, E10, E11`,
/// with the two diagonal idempotents.
pub fn matrix_algebra_2x2(field: FieldSpec) -> FlatAlgebra {
    let f = field;
    let idx = |a: usize, b: usize| a * 2 + b; // E_{ab}
    let dim = 4;
    let mut mult = vec![vec![vec![f.zero(); dim]; dim]; dim];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    if b == c {
                        mult[idx(a, b)][idx(c, d)][idx(a, d)] = f.one();
                    }
                }
            }
        }
    }
    let mut e0 = vec![f.zero(); dim];
    e0[idx(0, 0)] = f.one();
    let mut e1 = vec![f.zero(); dim];
    e1[idx(1, 1)] = f.one();
    FlatAlgebra::new(
        f,
        vec!["E00".into(), "E01".into(), "E10".into(), "E11".into()],
        mult,
        vec![e0, e1],
        vec!["p".into(), "q".into()],
    )
    .unwrap()
}

/// Scalar shorthand used by sample constructors in tests.
pub fn ints(field: FieldSpec, values: &[i64]) -> Vec<Scalar> {
    values.iter().map(|&v| field.from_int(v)).collect()
}

/// The Kronecker double cover as a presented category, for building
/// monomial actions on it.
pub fn presented_double_cover(field: FieldSpec) -> PresentedCategory {
    let q = QuiverPresentation::new(
        vec!["x".into(), "y".into(), "tx".into(), "ty".into()],
        vec![arrow("a", "x", "y"), arrow("b", "x", "ty"), arrow("ta", "tx", "ty"), arrow("tb", "tx", "y")],
        vec![],
        None,
    )
    .unwrap();
    PresentedCategory::build(q, field).unwrap()
}

/// The paper's running example: `Z/2` swapping the two sheets of the
/// Kronecker double cover (`x <-> tx`, `y <-> ty`, `a <-> ta`, `b <-> tb`),
/// with the quotient projection onto the Kronecker category.
pub fn swap_covering_data(field: FieldSpec) -> (GroupAction, Covering) {
    let p = presented_double_cover(field);
    let one = field.one();
    // vertex order: x, y, tx, ty; arrow order: a, b, ta, tb
    let swap = p
        .monomial_endofunctor(&[2, 3, 0, 1], &[(one.clone(), 2), (one.clone(), 3), (one.clone(), 0), (one, 1)])
        .unwrap();
    let action = GroupAction::from_generators(FiniteGroup::cyclic(2), p.category().clone(), &[(1, swap)])
        .unwrap();
    let covering = Covering::quotient_category(action.clone()).unwrap();
    (action, covering)
}

/// Two isolated objects swapped by `Z/2`; the quotient is a single point.
pub fn two_points_swap_covering(field: FieldSpec) -> (GroupAction, Covering) {
    let q = QuiverPresentation::new(vec!["x".into(), "tx".into()], vec![], vec![], None).unwrap();
    let p = PresentedCategory::build(q, field).unwrap();
    let swap = p.monomial_endofunctor(&[1, 0], &[]).unwrap();
    let action =
        GroupAction::from_generators(FiniteGroup::cyclic(2), p.category().clone(), &[(1, swap)]).unwrap();
    let covering = Covering::quotient_category(action.clone()).unwrap();
    (action, covering)
}
