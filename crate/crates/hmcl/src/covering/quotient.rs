use std::sync::Arc;

use crate::bimodule::Bimodule;
use crate::category::{CategoryError, LinearCategory, LinearFunctor};
use crate::linalg::Matrix;

use super::action::GroupAction;
use super::CoveringError;

/// A Galois covering: a free action together with the quotient category and
/// the projection functor. The quotient hom spaces are realized through a
/// chosen section object per orbit.
#[derive(Clone, Debug)]
pub struct Covering {
    action: GroupAction,
    quotient: Arc<LinearCategory>,
    projection: LinearFunctor,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
    section: Vec<usize>,
    /// `transporter[x]` is the unique `s` with `s . section[orbit(x)] = x`.
    transporter: Vec<usize>,
}

impl Covering {
    pub fn quotient_category(action: GroupAction) -> Result<Self, CoveringError> {
        Self::build(action, None)
    }

    /// Quotient with explicitly chosen section objects (one per orbit), for
    /// checking that the construction does not depend on the choice.
    pub fn quotient_with_section(action: GroupAction, section: Vec<usize>) -> Result<Self, CoveringError> {
        Self::build(action, Some(section))
    }

    fn build(action: GroupAction, chosen_section: Option<Vec<usize>>) -> Result<Self, CoveringError> {
        if !action.is_free() {
            return Err(CoveringError::NotFree("a non-identity element fixes an object".into()));
        }
        let cat = action.category().clone();
        let g = action.group().clone();
        let n = cat.object_count();

        // orbits, ordered by smallest member
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if orbit_of[x] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..g.order()).map(|s| action.act_object(s, x)).collect();
            members.sort_unstable();
            members.dedup();
            let idx = orbits.len();
            for &m in &members {
                orbit_of[m] = idx;
            }
            orbits.push(members);
        }
        let section: Vec<usize> = match chosen_section {
            Some(sec) => {
                if sec.len() != orbits.len()
                    || sec.iter().enumerate().any(|(u, &x)| x >= n || orbit_of[x] != u)
                {
                    return Err(CoveringError::BadAction("section does not pick one object per orbit".into()));
                }
                sec
            }
            None => orbits.iter().map(|m| m[0]).collect(),
        };
        let mut transporter = vec![usize::MAX; n];
        for x in 0..n {
            let x0 = section[orbit_of[x]];
            let mut found = None;
            for s in 0..g.order() {
                if action.act_object(s, x0) == x {
                    if found.is_some() {
                        return Err(CoveringError::NotFree(format!(
                            "two transporters for object {x}: the action is not free"
                        )));
                    }
                    found = Some(s);
                }
            }
            transporter[x] =
                found.ok_or_else(|| CoveringError::BadAction(format!("object {x} unreachable from its section")))?;
        }

        let field = cat.field();
        let k = orbits.len();
        // quotient hom entries: (member object y of the target orbit, basis
        // index into hom(y, section of the source orbit))
        let entries = |v: usize, u: usize| -> Vec<(usize, usize)> {
            let mut e = Vec::new();
            for &y in &orbits[v] {
                for j in 0..cat.dim_hom(y, section[u]) {
                    e.push((y, j));
                }
            }
            e
        };
        let names: Vec<String> = orbits.iter().map(|m| format!("[{}]", cat.objects()[m[0]])).collect();
        let labels: Vec<Vec<Vec<String>>> = (0..k)
            .map(|v| {
                (0..k)
                    .map(|u| {
                        entries(v, u)
                            .into_iter()
                            .map(|(y, j)| format!("{}:{}", cat.objects()[y], cat.hom_labels(y, section[u])[j]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let identities: Vec<Vec<_>> = (0..k)
            .map(|u| {
                entries(u, u)
                    .into_iter()
                    .map(|(y, j)| {
                        if y == section[u] {
                            cat.identity(section[u])[j].clone()
                        } else {
                            field.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut compose = Vec::with_capacity(k);
        for w in 0..k {
            let mut per_v = Vec::with_capacity(k);
            for v in 0..k {
                let mut per_u = Vec::with_capacity(k);
                for u in 0..k {
                    let ge = entries(w, v);
                    let fe = entries(v, u);
                    let te = entries(w, u);
                    let mut block = Matrix::zero(field, ge.len() * fe.len(), te.len());
                    for (gi, &(z, gj)) in ge.iter().enumerate() {
                        for (fi, &(y, fj)) in fe.iter().enumerate() {
                            // translate the g-component so its source is y
                            let s = transporter[y];
                            let sz = action.act_object(s, z);
                            let sg =
                                action.functor(s).map_vec(z, section[v], &cat.basis_vec(z, section[v], gj));
                            let comp =
                                cat.compose_vec(sz, y, section[u], &sg, &cat.basis_vec(y, section[u], fj));
                            for (t, &(ty, tj)) in te.iter().enumerate() {
                                if ty == sz && !field.is_zero(&comp[tj]) {
                                    block.set(gi * fe.len() + fi, t, comp[tj].clone());
                                }
                            }
                        }
                    }
                    per_u.push(block);
                }
                per_v.push(per_u);
            }
            compose.push(per_v);
        }
        let quotient = Arc::new(
            LinearCategory::new(field, names, labels, identities, compose).map_err(CoveringError::Category)?,
        );

        // projection functor: translate each morphism so its source becomes
        // the section object of its orbit
        let mut hom_maps = Vec::with_capacity(n);
        for y in 0..n {
            let mut row = Vec::with_capacity(n);
            for x in 0..n {
                let (v, u) = (orbit_of[y], orbit_of[x]);
                let te = entries(v, u);
                let s = action.group().inv(transporter[x]);
                let sy = action.act_object(s, y);
                let mut m = Matrix::zero(field, te.len(), cat.dim_hom(y, x));
                for j in 0..cat.dim_hom(y, x) {
                    let img = action.functor(s).map_vec(y, x, &cat.basis_vec(y, x, j));
                    for (t, &(ty, tj)) in te.iter().enumerate() {
                        if ty == sy && !field.is_zero(&img[tj]) {
                            m.set(t, j, img[tj].clone());
                        }
                    }
                }
                row.push(m);
            }
            hom_maps.push(row);
        }
        let projection = LinearFunctor::new(cat.clone(), quotient.clone(), orbit_of.clone(), hom_maps)
            .map_err(CoveringError::Category)?;

        Ok(Covering { action, quotient, projection, orbits, orbit_of, section, transporter })
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn base(&self) -> &Arc<LinearCategory> {
        self.action.category()
    }

    pub fn quotient(&self) -> &Arc<LinearCategory> {
        &self.quotient
    }

    pub fn projection(&self) -> &LinearFunctor {
        &self.projection
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_of[x]
    }

    pub fn orbit_members(&self, u: usize) -> &[usize] {
        &self.orbits[u]
    }

    pub fn section(&self, u: usize) -> usize {
        self.section[u]
    }

    pub fn transporter(&self, x: usize) -> usize {
        self.transporter[x]
    }

    /// The lifted bimodule `L M` of a bimodule over the quotient.
    pub fn lift_bimodule(&self, m: &Bimodule) -> Result<Bimodule, CategoryError> {
        Bimodule::lift(&self.projection, m)
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
    fn trivial_group_quotient_is_isomorphic() {
        use crate::covering::FiniteGroup;
        let c = Arc::new(samples::kronecker(q()));
        let action = GroupAction::new(
            FiniteGroup::cyclic(1),
            c.clone(),
            vec![LinearFunctor::identity(c.clone())],
        )
        .unwrap();
        let cov = Covering::quotient_category(action).unwrap();
        assert_eq!(cov.quotient().hom_dims(), c.hom_dims());
    }

    #[test]
    fn cover_quotient_is_kronecker() {
        let (_, cov) = samples::swap_covering_data(q());
        let b = cov.quotient();
        assert_eq!(b.object_count(), 2);
        let u = cov.orbit_of(cov.base().object_index("x").unwrap());
        let v = cov.orbit_of(cov.base().object_index("y").unwrap());
        assert_eq!(b.dim_hom(v, u), 2);
        assert_eq!(b.dim_hom(u, v), 0);
        assert_eq!(b.dim_hom(u, u), 1);
        assert_eq!(b.dim_hom(v, v), 1);
        // the quotient is connected, basic and totally split
        let p = b.properties();
        assert!(p.connected && p.basic && p.totally_split);
    }

    #[test]
    fn two_swapped_points_quotient_to_one() {
        let (_, cov) = samples::two_points_swap_covering(q());
        assert_eq!(cov.quotient().object_count(), 1);
        assert_eq!(cov.quotient().dim_hom(0, 0), 1);
    }

    #[test]
    fn projection_identifies_translated_arrows() {
        let (_, cov) = samples::swap_covering_data(q());
        let c = cov.base().clone();
        let proj = cov.projection();
        let y = c.object_index("y").unwrap();
        let x = c.object_index("x").unwrap();
        let ty = c.object_index("ty").unwrap();
        let tx = c.object_index("tx").unwrap();
        // a in hom(y,x) and ta in hom(ty,tx) project to the same class
        let a_img = proj.map_vec(y, x, &c.basis_vec(y, x, 0));
        let ta_img = proj.map_vec(ty, tx, &c.basis_vec(ty, tx, 0));
        assert_eq!(a_img, ta_img);
        // b and tb likewise, and differently from a
        let b_img = proj.map_vec(ty, x, &c.basis_vec(ty, x, 0));
        let tb_img = proj.map_vec(y, tx, &c.basis_vec(y, tx, 0));
        assert_eq!(b_img, tb_img);
        assert_ne!(a_img, b_img);
    }

    #[test]
    fn section_choice_gives_isomorphic_quotient() {
        let (action, cov) = samples::swap_covering_data(q());
        // pick the other representative in each orbit
        let other: Vec<usize> = (0..cov.orbit_count())
            .map(|u| *cov.orbit_members(u).iter().find(|&&m| m != cov.section(u)).unwrap())
            .collect();
        let cov2 = Covering::quotient_with_section(action, other).unwrap();
        assert_eq!(cov.quotient().hom_dims(), cov2.quotient().hom_dims());

        // explicit isomorphism: identity on objects, translation on homs
        let qa = cov.quotient().clone();
        let qb = cov2.quotient().clone();
        let cat = cov.base().clone();
        let g = cov.action().group().clone();
        let field = cat.field();
        let k = cov.orbit_count();
        let mut hom_maps = Vec::with_capacity(k);
        for v in 0..k {
            let mut row = Vec::with_capacity(k);
            for u in 0..k {
                // entries of A-quotient: (y, j in hom(y, secA_u));
                // translate by s with s . secA_u = secB_u
                let s = {
                    let mut found = None;
                    for cand in 0..g.order() {
                        if cov.action().act_object(cand, cov.section(u)) == cov2.section(u) {
                            found = Some(cand);
                        }
                    }
                    found.unwrap()
                };
                let mut entries_a = Vec::new();
                for &y in cov.orbit_members(v) {
                    for j in 0..cat.dim_hom(y, cov.section(u)) {
                        entries_a.push((y, j));
                    }
                }
                let mut entries_b = Vec::new();
                for &y in cov2.orbit_members(v) {
                    for j in 0..cat.dim_hom(y, cov2.section(u)) {
                        entries_b.push((y, j));
                    }
                }
                let mut m = Matrix::zero(field, entries_b.len(), entries_a.len());
                for (col, &(y, j)) in entries_a.iter().enumerate() {
                    let img = cov
                        .action()
                        .functor(s)
                        .map_vec(y, cov.section(u), &cat.basis_vec(y, cov.section(u), j));
                    let sy = cov.action().act_object(s, y);
                    for (rw, &(ty, tj)) in entries_b.iter().enumerate() {
                        if ty == sy && !field.is_zero(&img[tj]) {
                            m.set(rw, col, img[tj].clone());
                        }
                    }
                }
                row.push(m);
            }
            hom_maps.push(row);
        }
        let iso = LinearFunctor::new(qa.clone(), qb.clone(), (0..k).collect(), hom_maps)
            .expect("translation is a functor");
        // invertible on every hom space
        for v in 0..k {
            for u in 0..k {
                assert_eq!(iso.hom_map(v, u).rank(), qa.dim_hom(v, u));
            }
        }
    }
}
