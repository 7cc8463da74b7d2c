use crate::error::{Error, Result};
use crate::fintop::FinSpace;
use crate::quniform::FiniteQuasiUniformity;
use crate::relcore::{PointSet, Relation};

use super::{EntourageChain, SetModel};

/// A finite space as a [`SetModel`]; entourages are [`Relation`]s and the
/// topology is the ambient one (never the one induced by the entourages).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    space: FinSpace,
}

impl FiniteModel {
    pub fn new(space: FinSpace) -> Self {
        FiniteModel { space }
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }
}

impl SetModel for FiniteModel {
    type Point = usize;
    type Set = PointSet;
    type Entourage = Relation;

    fn universe(&self) -> PointSet {
        self.space.carrier()
    }

    fn identity(&self) -> Relation {
        Relation::identity(self.space.n()).expect("valid carrier")
    }

    fn compose(&self, u: &Relation, v: &Relation) -> Relation {
        u.compose(v).expect("entourages on the model carrier")
    }

    fn entourage_subset(&self, u: &Relation, v: &Relation) -> bool {
        u.is_subset(v)
    }

    fn ball(&self, a: &PointSet, u: &Relation) -> PointSet {
        u.ball(*a)
    }

    fn closure(&self, a: &PointSet) -> PointSet {
        self.space.closure(*a)
    }

    fn interior(&self, a: &PointSet) -> PointSet {
        self.space.interior(*a)
    }

    fn complement(&self, a: &PointSet) -> PointSet {
        a.complement(self.space.n())
    }

    fn is_subset(&self, a: &PointSet, b: &PointSet) -> bool {
        a.is_subset(*b)
    }

    fn contains(&self, a: &PointSet, p: &usize) -> bool {
        a.contains(*p)
    }

    fn is_empty(&self, a: &PointSet) -> bool {
        a.is_empty()
    }

    fn finite_points(&self) -> Option<Vec<usize>> {
        Some((0..self.space.n()).collect())
    }

    fn set_of(&self, points: &[usize]) -> Option<PointSet> {
        Some(points.iter().copied().collect())
    }
}

/// The default finite chain inside `q`: every level and the tail equal the
/// minimal entourage. `top` must belong to `q`.
pub fn canonical_chain(
    model: &FiniteModel,
    q: &FiniteQuasiUniformity,
    top: Relation,
    depth: u32,
) -> Result<EntourageChain<Relation>> {
    if !q.minimal().is_subset(&top) {
        return Err(Error::InvalidChain(
            "top entourage does not belong to the quasi-uniformity".into(),
        ));
    }
    let m = *q.minimal();
    EntourageChain::new(model, top, vec![m; depth as usize], Some(m))
}
