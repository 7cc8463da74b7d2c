//! Finite quasi-uniformities.
//!
//! On a finite carrier every entourage filter is principal, generated by the
//! intersection of its base. The filter is a quasi-uniformity exactly when that
//! minimal entourage is a preorder, and the induced topology has the minimal
//! entourage as its minimal-open relation.

use crate::error::{Error, Result};
use crate::fintop::FinSpace;
use crate::relcore::{PointSet, Relation};
use crate::separation::{classify, Classification};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuasiUniformity {
    base: Vec<Relation>,
    minimal: Relation,
}

/// A subset `A` and entourage `U` with `cl A ⊄ int cl B(A;U)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityWitness {
    pub subset: PointSet,
    pub entourage: Relation,
    pub closure: PointSet,
    pub target: PointSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    /// `⋂𝒰 = Δ`.
    pub separated: bool,
    /// `𝒰 = 𝒰⁻¹`.
    pub is_uniformity: bool,
    /// `τ_𝒰` is contained in the ambient topology.
    pub continuous: bool,
}

impl FiniteQuasiUniformity {
    /// Normalizes a base to its minimal entourage, rejecting bases whose
    /// generated filter fails the composition axiom.
    pub fn normalize(base: Vec<Relation>) -> Result<Self> {
        let first = *base
            .first()
            .ok_or_else(|| Error::NotQuasiUniformity("empty base".into()))?;
        let mut minimal = first;
        for r in &base[1..] {
            minimal = minimal.intersection(r)?;
        }
        if let Some((x, y, z)) = minimal.transitivity_violation() {
            return Err(Error::NotQuasiUniformity(format!(
                "minimal entourage is not transitive: ({x},{y}) and ({y},{z}) present, ({x},{z}) missing"
            )));
        }
        Ok(FiniteQuasiUniformity { base, minimal })
    }

    /// The principal quasi-uniformity of a preorder.
    pub fn principal(m: Relation) -> Result<Self> {
        FiniteQuasiUniformity::normalize(vec![m])
    }

    pub fn n(&self) -> usize {
        self.minimal.n()
    }

    pub fn base(&self) -> &[Relation] {
        &self.base
    }

    pub fn minimal(&self) -> &Relation {
        &self.minimal
    }

    pub fn induced_topology(&self) -> FinSpace {
        FinSpace::from_preorder(self.minimal).expect("minimal entourage is a preorder")
    }

    fn witness_for(&self, u: &Relation, ambient: &FinSpace) -> Option<NormalityWitness> {
        PointSet::all_subsets(self.n()).find_map(|a| {
            let closure = ambient.closure(a);
            let target = ambient.interior_of_closure(u.ball(a));
            (!closure.is_subset(target)).then_some(NormalityWitness {
                subset: a,
                entourage: *u,
                closure,
                target,
            })
        })
    }

    /// First subset (in bit order) violating normality for the minimal
    /// entourage. Balls, closures and interiors are monotone in the
    /// entourage, so the minimal one is the hardest case.
    ///
    /// Panics if `ambient` lives on a different carrier.
    pub fn normality_witness(&self, ambient: &FinSpace) -> Option<NormalityWitness> {
        assert_eq!(self.n(), ambient.n(), "carrier mismatch");
        self.witness_for(&self.minimal, ambient)
    }

    /// `cl A ⊆ int cl B(A;U)` for every `A` and every `U` in the filter.
    pub fn is_normal(&self, ambient: &FinSpace) -> bool {
        self.normality_witness(ambient).is_none()
    }

    /// Normality by full quantification over every subset and every
    /// intersection of base members. Independent of the minimal-entourage
    /// shortcut; kept as an oracle.
    pub fn is_normal_brute(&self, ambient: &FinSpace) -> bool {
        assert_eq!(self.n(), ambient.n(), "carrier mismatch");
        let k = self.base.len();
        assert!(k < 20, "brute-force normality limited to small bases");
        (1u32..(1 << k)).all(|mask| {
            let mut members = (0..k)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.base[i]);
            let first = members.next().expect("nonempty mask");
            let u = members.fold(first, |acc, r| acc.intersection(&r).expect("same size"));
            PointSet::all_subsets(self.n()).all(|a| {
                ambient
                    .closure(a)
                    .is_subset(ambient.interior(ambient.closure(u.ball(a))))
            })
        })
    }

    pub fn check_axioms(&self, ambient: &FinSpace) -> AxiomReport {
        assert_eq!(self.n(), ambient.n(), "carrier mismatch");
        AxiomReport {
            separated: self.minimal.is_identity(),
            is_uniformity: self.minimal.is_symmetric(),
            continuous: (0..self.n()).all(|x| ambient.is_open(self.minimal.row(x))),
        }
    }
}

/// The quasi-uniformity generating the topology of `s`: the principal filter
/// of its minimal-open preorder. On a finite carrier it is the only one, since
/// `τ_𝒰` determines the minimal entourage.
pub fn canonical_qu(s: &FinSpace) -> FiniteQuasiUniformity {
    FiniteQuasiUniformity::principal(*s.preorder()).expect("space preorder")
}

pub fn is_normally_quasi_uniformizable(s: &FinSpace) -> bool {
    canonical_qu(s).is_normal(s)
}

/// [`classify`] with the normal quasi-uniformizability flag filled in.
pub fn classify_with_normality(s: &FinSpace) -> Classification {
    let mut c = classify(s);
    c.normally_quasi_uniformizable = Some(is_normally_quasi_uniformizable(s));
    c
}
