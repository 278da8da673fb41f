use std::collections::BTreeMap;

use crate::linalg::{FieldSpec, Scalar};

use super::CategoryError;

/// An arrow of a quiver; `source` and `target` are vertex names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// A linear combination of parallel paths. Paths are arrow-name sequences
/// written in traversal order: `["a", "b"]` is "follow `a`, then `b`" and
/// requires `target(a) = source(b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<String>)>,
}

/// A quiver with relations and an optional nilpotence bound. The bound is
/// mandatory when the quiver has an oriented cycle; all paths of length
/// `>= nilpotence_bound` are then declared zero.
#[derive(Clone, Debug, PartialEq)]
pub struct QuiverPresentation {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub nilpotence_bound: Option<usize>,
}

/// A path in traversal order: `arrows[0]` is applied first. Empty paths are
/// the identities and carry their vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn label(&self, q: &QuiverPresentation) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join(".")
        }
    }
}

impl QuiverPresentation {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
        nilpotence_bound: Option<usize>,
    ) -> Result<Self, CategoryError> {
        let q = QuiverPresentation { vertices, arrows, relations, nilpotence_bound };
        q.validate()?;
        Ok(q)
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    fn validate(&self) -> Result<(), CategoryError> {
        let mut seen = BTreeMap::new();
        for v in &self.vertices {
            if seen.insert(v.clone(), ()).is_some() {
                return Err(CategoryError::DuplicateName(v.clone()));
            }
        }
        let mut seen_arrows = BTreeMap::new();
        for a in &self.arrows {
            if seen_arrows.insert(a.name.clone(), ()).is_some() {
                return Err(CategoryError::DuplicateName(a.name.clone()));
            }
            if self.vertex_index(&a.source).is_none() {
                return Err(CategoryError::UnknownVertex(a.source.clone()));
            }
            if self.vertex_index(&a.target).is_none() {
                return Err(CategoryError::UnknownVertex(a.target.clone()));
            }
        }
        if self.nilpotence_bound == Some(0) {
            return Err(CategoryError::InvalidStructure("nilpotence bound must be positive".into()));
        }
        if self.has_cycle() && self.nilpotence_bound.is_none() {
            return Err(CategoryError::CyclicWithoutBound);
        }
        for r in &self.relations {
            self.check_relation(r)?;
        }
        Ok(())
    }

    /// Endpoints of a relation path; rejects unknown arrows and breaks in
    /// the chain.
    pub(crate) fn path_endpoints(&self, path: &[String]) -> Result<(usize, usize), CategoryError> {
        if path.is_empty() {
            return Err(CategoryError::NonComposablePath("empty path".into()));
        }
        let mut idx = Vec::with_capacity(path.len());
        for name in path {
            idx.push(self.arrow_index(name).ok_or_else(|| CategoryError::UnknownArrow(name.clone()))?);
        }
        for w in idx.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(CategoryError::NonComposablePath(path.join(".")));
            }
        }
        let src = self.vertex_index(&self.arrows[idx[0]].source).unwrap();
        let tgt = self.vertex_index(&self.arrows[*idx.last().unwrap()].target).unwrap();
        Ok((src, tgt))
    }

    fn check_relation(&self, r: &Relation) -> Result<(), CategoryError> {
        if r.terms.is_empty() {
            return Ok(());
        }
        let mut endpoints = None;
        for (_, path) in &r.terms {
            let e = self.path_endpoints(path)?;
            match endpoints {
                None => endpoints = Some(e),
                Some(prev) if prev != e => {
                    let detail = r
                        .terms
                        .iter()
                        .map(|(_, p)| p.join("."))
                        .collect::<Vec<_>>()
                        .join("  vs  ");
                    return Err(CategoryError::NonParallelRelation(detail));
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn has_cycle(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for a in &self.arrows {
            let s = self.vertex_index(&a.source).unwrap();
            let t = self.vertex_index(&a.target).unwrap();
            adj[s].push(t);
        }
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; n];
        fn dfs(v: usize, adj: &[Vec<usize>], state: &mut [u8]) -> bool {
            state[v] = 1;
            for &w in &adj[v] {
                if state[w] == 1 {
                    return true;
                }
                if state[w] == 0 && dfs(w, adj, state) {
                    return true;
                }
            }
            state[v] = 2;
            false
        }
        (0..n).any(|v| state[v] == 0 && dfs(v, &adj, &mut state))
    }

    /// All paths up to the effective length cap, grouped by (target, source)
    /// and ordered by length then lexicographically by arrow names.
    pub(crate) fn enumerate_paths(&self) -> Vec<Vec<Vec<Path>>> {
        let n = self.vertices.len();
        let cap = self.nilpotence_bound.map(|b| b - 1);
        let mut by_pair: Vec<Vec<Vec<Path>>> = vec![vec![Vec::new(); n]; n];
        let mut frontier: Vec<Path> = (0..n)
            .map(|v| Path { source: v, target: v, arrows: Vec::new() })
            .collect();
        for p in &frontier {
            by_pair[p.target][p.source].push(p.clone());
        }
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                if cap.is_some_and(|c| p.arrows.len() >= c) {
                    continue;
                }
                for (ai, a) in self.arrows.iter().enumerate() {
                    if self.vertex_index(&a.source).unwrap() == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        let q = Path {
                            source: p.source,
                            target: self.vertex_index(&a.target).unwrap(),
                            arrows,
                        };
                        by_pair[q.target][q.source].push(q.clone());
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        // order: by length, then lexicographic on arrow-name sequences
        for row in by_pair.iter_mut() {
            for paths in row.iter_mut() {
                paths.sort_by(|a, b| {
                    a.arrows.len().cmp(&b.arrows.len()).then_with(|| {
                        let na: Vec<&str> = a.arrows.iter().map(|&i| self.arrows[i].name.as_str()).collect();
                        let nb: Vec<&str> = b.arrows.iter().map(|&i| self.arrows[i].name.as_str()).collect();
                        na.cmp(&nb)
                    })
                });
            }
        }
        by_pair
    }

    /// Interprets integer-coefficient relation data in `field`.
    pub fn relation_from_ints(field: FieldSpec, terms: &[(i64, &[&str])]) -> Relation {
        Relation {
            terms: terms
                .iter()
                .map(|(c, path)| (field.from_int(*c), path.iter().map(|s| s.to_string()).collect()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> QuiverPresentation {
        QuiverPresentation::new(
            vec!["x".into(), "y".into()],
            vec![
                Arrow { name: "a".into(), source: "x".into(), target: "y".into() },
                Arrow { name: "b".into(), source: "x".into(), target: "y".into() },
            ],
            vec![],
            None,
        )
        .unwrap()
    }

    #[test]
    fn kronecker_paths() {
        let q = q2();
        let paths = q.enumerate_paths();
        assert_eq!(paths[0][0].len(), 1); // e_x
        assert_eq!(paths[1][1].len(), 1); // e_y
        assert_eq!(paths[1][0].len(), 2); // a, b
        assert_eq!(paths[0][1].len(), 0);
    }

    #[test]
    fn cycle_requires_bound() {
        let loops = QuiverPresentation::new(
            vec!["x".into()],
            vec![Arrow { name: "t".into(), source: "x".into(), target: "x".into() }],
            vec![],
            None,
        );
        assert_eq!(loops.unwrap_err(), CategoryError::CyclicWithoutBound);
    }

    #[test]
    fn bounded_loop_paths() {
        let q = QuiverPresentation::new(
            vec!["x".into()],
            vec![Arrow { name: "t".into(), source: "x".into(), target: "x".into() }],
            vec![],
            Some(3),
        )
        .unwrap();
        // e_x, t, t.t
        assert_eq!(q.enumerate_paths()[0][0].len(), 3);
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let f = FieldSpec::Rationals;
        let rel = QuiverPresentation::relation_from_ints(f, &[(1, &["a"]), (1, &["a", "c"])]);
        let r = QuiverPresentation::new(
            vec!["x".into(), "y".into(), "z".into()],
            vec![
                Arrow { name: "a".into(), source: "x".into(), target: "y".into() },
                Arrow { name: "c".into(), source: "y".into(), target: "z".into() },
            ],
            vec![rel],
            None,
        );
        assert!(matches!(r.unwrap_err(), CategoryError::NonParallelRelation(_)));
    }

    #[test]
    fn non_composable_path_rejected() {
        let f = FieldSpec::Rationals;
        let rel = QuiverPresentation::relation_from_ints(f, &[(1, &["a", "a"])]);
        let r = QuiverPresentation::new(
            vec!["x".into(), "y".into()],
            vec![Arrow { name: "a".into(), source: "x".into(), target: "y".into() }],
            vec![rel],
            None,
        );
        assert!(matches!(r.unwrap_err(), CategoryError::NonComposablePath(_)));
    }

    #[test]
    fn path_ordering_by_length_then_name() {
        let q = QuiverPresentation::new(
            vec!["x".into()],
            vec![
                Arrow { name: "u".into(), source: "x".into(), target: "x".into() },
                Arrow { name: "t".into(), source: "x".into(), target: "x".into() },
            ],
            vec![],
            Some(3),
        )
        .unwrap();
        let labels: Vec<String> = q.enumerate_paths()[0][0].iter().map(|p| p.label(&q)).collect();
        assert_eq!(labels, vec!["e_x", "t", "u", "t.t", "t.u", "u.t", "u.u"]);
    }
}
