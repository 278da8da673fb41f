use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::category::{LinearCategory, LinearFunctor};

use super::group::FiniteGroup;
use super::CoveringError;

/// An action of a finite group on a category: one verified endofunctor per
/// element, satisfying `F_1 = id` and `F_s . F_t = F_{st}` on the nose.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteGroup,
    cat: Arc<LinearCategory>,
    functors: Vec<LinearFunctor>,
}

impl GroupAction {
    pub fn new(
        group: FiniteGroup,
        cat: Arc<LinearCategory>,
        functors: Vec<LinearFunctor>,
    ) -> Result<Self, CoveringError> {
        if functors.len() != group.order() {
            return Err(CoveringError::BadAction("one functor per group element required".into()));
        }
        for f in &functors {
            if **f.source() != *cat || **f.target() != *cat {
                return Err(CoveringError::BadAction("functor is not an endofunctor of the category".into()));
            }
        }
        let id = LinearFunctor::identity(cat.clone());
        if !functors[group.identity()].same_data(&id) {
            return Err(CoveringError::BadAction("identity element must act as the identity functor".into()));
        }
        for s in 0..group.order() {
            for t in 0..group.order() {
                let st = functors[s].compose(&functors[t]).map_err(CoveringError::Category)?;
                if !st.same_data(&functors[group.mul(s, t)]) {
                    return Err(CoveringError::BadAction(format!(
                        "functor law fails on ({}, {})",
                        group.names()[s],
                        group.names()[t]
                    )));
                }
            }
        }
        Ok(GroupAction { group, cat, functors })
    }

    /// Generates the action from functors for a generating set. Every
    /// element must be reached, and different words for the same element
    /// must give the same functor.
    pub fn from_generators(
        group: FiniteGroup,
        cat: Arc<LinearCategory>,
        generators: &[(usize, LinearFunctor)],
    ) -> Result<Self, CoveringError> {
        let n = group.order();
        let mut known: Vec<Option<LinearFunctor>> = vec![None; n];
        known[group.identity()] = Some(LinearFunctor::identity(cat.clone()));
        loop {
            let mut progressed = false;
            for s in 0..n {
                let Some(fs) = known[s].clone() else { continue };
                for (g, fg) in generators {
                    let target = group.mul(*g, s);
                    let composed = fg.compose(&fs).map_err(CoveringError::Category)?;
                    match &known[target] {
                        None => {
                            known[target] = Some(composed);
                            progressed = true;
                        }
                        Some(existing) => {
                            if !existing.same_data(&composed) {
                                return Err(CoveringError::BadAction(format!(
                                    "inconsistent generator words at `{}`",
                                    group.names()[target]
                                )));
                            }
                        }
                    }
                }
            }
            if !progressed {
                break;
            }
        }
        let functors: Option<Vec<_>> = known.into_iter().collect();
        let functors = functors
            .ok_or_else(|| CoveringError::BadAction("the given elements do not generate the group".into()))?;
        GroupAction::new(group, cat, functors)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn category(&self) -> &Arc<LinearCategory> {
        &self.cat
    }

    pub fn functor(&self, s: usize) -> &LinearFunctor {
        &self.functors[s]
    }

    pub fn act_object(&self, s: usize, x: usize) -> usize {
        self.functors[s].map_object(x)
    }

    /// True when no non-identity element fixes an object.
    pub fn is_free(&self) -> bool {
        let n = self.cat.object_count();
        (0..self.group.order())
            .filter(|&s| s != self.group.identity())
            .all(|s| (0..n).all(|x| self.act_object(s, x) != x))
    }

    /// The twisted bimodule `^s U`: spaces re-indexed by `s^{-1}`, actions
    /// through `s^{-1}`.
    pub fn twist_bimodule(&self, m: &Bimodule, s: usize) -> Result<Bimodule, CoveringError> {
        if **m.category() != *self.cat {
            return Err(CoveringError::BadAction("bimodule lives over a different category".into()));
        }
        m.twist_by(&self.functors[self.group.inv(s)]).map_err(CoveringError::Category)
    }
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
    fn swap_action_is_free() {
        let (action, _) = samples::swap_covering_data(q());
        assert!(action.is_free());
    }

    #[test]
    fn trivial_action_on_anything_is_free() {
        let c = Arc::new(samples::kronecker(q()));
        let action = GroupAction::new(
            FiniteGroup::cyclic(1),
            c.clone(),
            vec![LinearFunctor::identity(c.clone())],
        )
        .unwrap();
        assert!(action.is_free());
    }

    #[test]
    fn identity_object_action_is_not_free() {
        // Z/2 acting trivially: not free
        let c = Arc::new(samples::kronecker(q()));
        let id = LinearFunctor::identity(c.clone());
        let action = GroupAction::new(FiniteGroup::cyclic(2), c, vec![id.clone(), id]).unwrap();
        assert!(!action.is_free());
    }

    #[test]
    fn twist_by_identity_element() {
        let (action, _) = samples::swap_covering_data(q());
        let std = Bimodule::standard(action.category().clone());
        let t = action.twist_bimodule(&std, action.group().identity()).unwrap();
        assert!(std.same_data(&t));
    }

    #[test]
    fn twist_of_standard_swaps_spaces() {
        let (action, _) = samples::swap_covering_data(q());
        let c = action.category().clone();
        let std = Bimodule::standard(c.clone());
        let tw = action.twist_bimodule(&std, 1).unwrap();
        let x = c.object_index("x").unwrap();
        let y = c.object_index("y").unwrap();
        let tx = c.object_index("tx").unwrap();
        let ty = c.object_index("ty").unwrap();
        // (y,x) space of the twist is the (ty,tx) space of the original
        assert_eq!(tw.dim_space(y, x), std.dim_space(ty, tx));
        assert_eq!(tw.dim_space(ty, x), std.dim_space(y, tx));
        // double twist is the identity
        let back = action.twist_bimodule(&tw, 1).unwrap();
        assert!(back.same_data(&std));
    }

    #[test]
    fn twist_composition_law() {
        let (action, _) = samples::swap_covering_data(q());
        let std = Bimodule::standard(action.category().clone());
        let g = action.group().clone();
        for s in 0..g.order() {
            for u in 0..g.order() {
                let lhs = action.twist_bimodule(&action.twist_bimodule(&std, u).unwrap(), s).unwrap();
                let rhs = action.twist_bimodule(&std, g.mul(s, u)).unwrap();
                assert!(lhs.same_data(&rhs), "twist law fails at ({s},{u})");
            }
        }
    }
}
