use crate::linalg::IntMatrix;

use super::CoveringError;

/// A finite group as an explicit multiplication table.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroup {
    names: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self, CoveringError> {
        let n = names.len();
        if n == 0 {
            return Err(CoveringError::BadGroup("empty element list".into()));
        }
        if mul.len() != n || mul.iter().any(|r| r.len() != n) {
            return Err(CoveringError::BadGroup("table is not square".into()));
        }
        if mul.iter().flatten().any(|&v| v >= n) {
            return Err(CoveringError::BadGroup("table entry out of range".into()));
        }
        // identity
        let identity = (0..n)
            .find(|&e| (0..n).all(|s| mul[e][s] == s && mul[s][e] == s))
            .ok_or_else(|| CoveringError::BadGroup("no identity element".into()))?;
        // inverses
        let mut inv = vec![usize::MAX; n];
        for s in 0..n {
            inv[s] = (0..n)
                .find(|&t| mul[s][t] == identity && mul[t][s] == identity)
                .ok_or_else(|| CoveringError::BadGroup(format!("`{}` has no inverse", names[s])))?;
        }
        // associativity, exhaustively
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(CoveringError::BadGroup(format!(
                            "associativity fails on ({}, {}, {})",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { names, mul, identity, inv })
    }

    /// The cyclic group of order `n`, elements `1, t, t^2, ...`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let names = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            })
            .collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(names, mul).expect("cyclic table is a group")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let names: Vec<String> = a
            .names
            .iter()
            .flat_map(|sa| b.names.iter().map(move |sb| format!("({sa},{sb})")))
            .collect();
        let nb = b.order();
        let n = names.len();
        let mul = (0..n)
            .map(|p| {
                let (pa, pb) = (p / nb, p % nb);
                (0..n)
                    .map(|q| {
                        let (qa, qb) = (q / nb, q % nb);
                        a.mul(pa, qa) * nb + b.mul(pb, qb)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(names, mul).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }
}

/// A finitely presented group `< generators | relators >`, used for the
/// degree-one rank bounds. Relator words are sequences of
/// `(generator, exponent)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupPresentation {
    pub generators: Vec<String>,
    pub relators: Vec<Vec<(usize, i64)>>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Vec<(usize, i64)>>) -> Result<Self, CoveringError> {
        let g = generators.len();
        for word in &relators {
            if word.iter().any(|&(i, _)| i >= g) {
                return Err(CoveringError::BadGroup("relator uses an undeclared generator".into()));
            }
        }
        Ok(GroupPresentation { generators, relators })
    }

    /// Exponent-sum matrix of the relators: one row per relator, one column
    /// per generator. Its Smith normal form describes the abelianization.
    pub fn abelianized_relator_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|word| {
                let mut row = vec![0i64; self.generators.len()];
                for &(g, e) in word {
                    row[g] += e;
                }
                row
            })
            .collect();
        if rows.is_empty() {
            IntMatrix::zero(0, self.generators.len())
        } else {
            IntMatrix::from_rows(&rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two() {
        let g = FiniteGroup::cyclic(2);
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.mul(1, 1), 0);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn product_order() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3));
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn bad_table_rejected() {
        // constant table: no identity
        let r = FiniteGroup::new(vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]);
        assert!(matches!(r, Err(CoveringError::BadGroup(_))));
    }

    #[test]
    fn abelianized_relators() {
        // < t | t^2 >
        let p = GroupPresentation::new(vec!["t".into()], vec![vec![(0, 2)]]).unwrap();
        let m = p.abelianized_relator_matrix();
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(m.get(0, 0), &num::BigInt::from(2));
        // free group on two generators
        let f2 = GroupPresentation::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert_eq!(f2.abelianized_relator_matrix().rows(), 0);
    }
}
