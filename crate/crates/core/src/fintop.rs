//! Finite topological spaces.
//!
//! Every finite topology is Alexandrov, so it is fixed by the minimal open
//! set `U_x` of each point. We store that as a preorder `m` with
//! `(x,y) ∈ m ⇔ y ∈ U_x`; the specialization order `x ∈ cl{y}` is `m⁻¹`.

use crate::error::{Error, Result};
use crate::relcore::{check_size, PointSet, Relation};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FinSpace {
    m: Relation,
    closure_rel: Relation,
}

impl FinSpace {
    /// Wraps a minimal-open relation; it must be a preorder.
    pub fn from_preorder(m: Relation) -> Result<Self> {
        if let Some((x, y, z)) = m.transitivity_violation() {
            return Err(Error::NotPreorder { x, y, z });
        }
        Ok(FinSpace {
            m,
            closure_rel: m.inverse(),
        })
    }

    /// Builds a space from an explicit open-set family. The family must
    /// contain `∅` and the carrier and be closed under pairwise union and
    /// intersection; it is then exactly the family of opens of the result.
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<Self> {
        check_size(n)?;
        let full = PointSet::full(n);
        for &o in opens {
            if !o.is_subset(full) {
                return Err(Error::InvalidTopology(format!(
                    "open set {o} mentions points outside 0..{n}"
                )));
            }
        }
        if !opens.contains(&PointSet::EMPTY) {
            return Err(Error::InvalidTopology(
                "empty set is not listed as open".into(),
            ));
        }
        if !opens.contains(&full) {
            return Err(Error::InvalidTopology(
                "carrier is not listed as open".into(),
            ));
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if !opens.contains(&(a | b)) {
                    return Err(Error::InvalidTopology(format!(
                        "union of {a} and {b} is not open"
                    )));
                }
                if !opens.contains(&(a & b)) {
                    return Err(Error::InvalidTopology(format!(
                        "intersection of {a} and {b} is not open"
                    )));
                }
            }
        }
        let rows: Vec<PointSet> = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|o| o.contains(x))
                    .fold(full, |acc, &o| acc & o)
            })
            .collect();
        FinSpace::from_preorder(Relation::from_rows(n, &rows)?)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        FinSpace::from_preorder(Relation::identity(n)?)
    }

    pub fn indiscrete(n: usize) -> Result<Self> {
        FinSpace::from_preorder(Relation::full(n)?)
    }

    /// Two points, opens `∅, {1}, {0,1}`.
    pub fn sierpinski() -> Self {
        let m = Relation::from_pairs(2, &[(0, 0), (0, 1), (1, 1)]).expect("valid");
        FinSpace::from_preorder(m).expect("preorder")
    }

    pub fn n(&self) -> usize {
        self.m.n()
    }

    pub fn carrier(&self) -> PointSet {
        PointSet::full(self.n())
    }

    /// The minimal-open relation.
    pub fn preorder(&self) -> &Relation {
        &self.m
    }

    /// `U_x`, the smallest open set containing `x`.
    pub fn minimal_open(&self, x: usize) -> PointSet {
        self.m.row(x)
    }

    /// Points every neighborhood of which meets `a`.
    pub fn closure(&self, a: PointSet) -> PointSet {
        self.closure_rel.ball(a)
    }

    pub fn interior(&self, a: PointSet) -> PointSet {
        a.iter().filter(|&x| self.m.row(x).is_subset(a)).collect()
    }

    /// `int(cl(a))`.
    pub fn interior_of_closure(&self, a: PointSet) -> PointSet {
        self.interior(self.closure(a))
    }

    pub fn is_open(&self, a: PointSet) -> bool {
        self.interior(a) == a
    }

    pub fn is_closed(&self, a: PointSet) -> bool {
        self.closure(a) == a
    }

    pub fn is_clopen(&self, a: PointSet) -> bool {
        self.is_open(a) && self.is_closed(a)
    }

    /// Every open set, in increasing bit order. Exponential in `n`.
    pub fn opens(&self) -> Vec<PointSet> {
        PointSet::all_subsets(self.n())
            .filter(|&a| self.is_open(a))
            .collect()
    }

    /// Open sets containing `x`, in increasing bit order.
    pub fn open_neighborhoods(&self, x: usize) -> Vec<PointSet> {
        PointSet::all_subsets(self.n())
            .filter(|&a| a.contains(x) && self.is_open(a))
            .collect()
    }

    /// Finest partition of the carrier into clopen sets: the connected
    /// components of `m ∪ m⁻¹`. Blocks are ordered by their least point.
    pub fn clopen_partition(&self) -> Vec<PointSet> {
        let sym = self.m.union(&self.closure_rel).expect("same carrier");
        let mut remaining = self.carrier();
        let mut blocks = Vec::new();
        while let Some(seed) = remaining.first() {
            let mut block = PointSet::singleton(seed);
            loop {
                let grown = sym.ball(block);
                if grown == block {
                    break;
                }
                block = grown;
            }
            remaining = remaining.difference(block);
            blocks.push(block);
        }
        blocks
    }

    /// The block of [`FinSpace::clopen_partition`] containing `x`.
    pub fn clopen_class(&self, x: usize) -> PointSet {
        self.clopen_partition()
            .into_iter()
            .find(|b| b.contains(x))
            .expect("partition covers the carrier")
    }

    /// Whether every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &FinSpace) -> bool {
        self.n() == other.n() && (0..self.n()).all(|x| other.is_open(self.minimal_open(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(points: &[usize]) -> PointSet {
        points.iter().copied().collect()
    }

    #[test]
    fn from_opens_examples() {
        let s = FinSpace::from_opens(2, &[set(&[]), set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(s, FinSpace::sierpinski());
        assert_eq!(
            *s.preorder(),
            Relation::from_pairs(2, &[(0, 0), (0, 1), (1, 1)]).unwrap()
        );
        let ind = FinSpace::from_opens(2, &[set(&[]), set(&[0, 1])]).unwrap();
        assert_eq!(*ind.preorder(), Relation::full(2).unwrap());
        let disc =
            FinSpace::from_opens(2, &[set(&[]), set(&[0]), set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(*disc.preorder(), Relation::identity(2).unwrap());
    }

    #[test]
    fn from_opens_rejects_invalid_families() {
        let missing_empty = FinSpace::from_opens(2, &[set(&[1]), set(&[0, 1])]);
        assert!(matches!(missing_empty, Err(Error::InvalidTopology(_))));
        let missing_full = FinSpace::from_opens(2, &[set(&[]), set(&[1])]);
        assert!(matches!(missing_full, Err(Error::InvalidTopology(_))));
        let no_union = FinSpace::from_opens(3, &[set(&[]), set(&[0]), set(&[1]), set(&[0, 1, 2])]);
        assert!(matches!(no_union, Err(Error::InvalidTopology(_))));
        let no_meet =
            FinSpace::from_opens(3, &[set(&[]), set(&[0, 1]), set(&[1, 2]), set(&[0, 1, 2])]);
        assert!(matches!(no_meet, Err(Error::InvalidTopology(_))));
    }

    #[test]
    fn from_preorder_rejects_non_transitive() {
        let r = Relation::diagonal_with(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            FinSpace::from_preorder(r),
            Err(Error::NotPreorder { x: 0, y: 1, z: 2 })
        );
    }

    #[test]
    fn closure_and_interior_on_sierpinski() {
        let s = FinSpace::sierpinski();
        assert_eq!(s.closure(set(&[1])), set(&[0, 1]));
        assert_eq!(s.closure(set(&[0])), set(&[0]));
        assert_eq!(s.closure(PointSet::EMPTY), PointSet::EMPTY);
        assert_eq!(s.interior(set(&[0])), PointSet::EMPTY);
        assert_eq!(s.interior(set(&[1])), set(&[1]));
        assert_eq!(s.interior(s.carrier()), s.carrier());
    }

    #[test]
    fn clopen_partitions() {
        assert_eq!(
            FinSpace::sierpinski().clopen_partition(),
            vec![set(&[0, 1])]
        );
        assert_eq!(
            FinSpace::discrete(2).unwrap().clopen_partition(),
            vec![set(&[0]), set(&[1])]
        );
        assert_eq!(
            FinSpace::indiscrete(3).unwrap().clopen_partition(),
            vec![set(&[0, 1, 2])]
        );
        // Two Sierpiński components side by side.
        let m = Relation::diagonal_with(4, &[(0, 1), (2, 3)]).unwrap();
        let s = FinSpace::from_preorder(m).unwrap();
        assert_eq!(s.clopen_partition(), vec![set(&[0, 1]), set(&[2, 3])]);
        for block in s.clopen_partition() {
            assert!(s.is_clopen(block));
        }
    }

    fn space(max_n: usize) -> impl Strategy<Value = FinSpace> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<u32>(), n).prop_map(move |raw| {
                let rows: Vec<PointSet> = raw
                    .iter()
                    .enumerate()
                    .map(|(i, &b)| (PointSet::from_bits(b) & PointSet::full(n)).with(i))
                    .collect();
                let r = Relation::from_rows(n, &rows).unwrap().transitive_closure();
                FinSpace::from_preorder(r).unwrap()
            })
        })
    }

    fn subset_of(s: &FinSpace, bits: u32) -> PointSet {
        PointSet::from_bits(bits) & s.carrier()
    }

    proptest! {
        #[test]
        fn kuratowski_axioms(s in space(7), a in any::<u32>(), b in any::<u32>()) {
            let a = subset_of(&s, a);
            let b = subset_of(&s, b);
            let ca = s.closure(a);
            prop_assert!(a.is_subset(ca));
            prop_assert_eq!(s.closure(ca), ca);
            prop_assert_eq!(s.closure(a | b), ca | s.closure(b));
            prop_assert!(s.closure(a & b).is_subset(ca));
        }

        #[test]
        fn interior_is_dual_of_closure(s in space(7), a in any::<u32>()) {
            let a = subset_of(&s, a);
            let n = s.n();
            prop_assert_eq!(s.interior(a), s.closure(a.complement(n)).complement(n));
        }

        #[test]
        fn open_iff_union_of_minimal_opens(s in space(7), a in any::<u32>()) {
            let a = subset_of(&s, a);
            let union = a.iter().fold(PointSet::EMPTY, |acc, x| acc | s.minimal_open(x));
            prop_assert_eq!(s.is_open(a), union == a);
            prop_assert_eq!(s.is_open(a), s.interior(a) == a);
        }

        #[test]
        fn from_opens_round_trip(s in space(6)) {
            let opens = s.opens();
            let rebuilt = FinSpace::from_opens(s.n(), &opens).unwrap();
            prop_assert_eq!(rebuilt, s);
            prop_assert_eq!(rebuilt.opens(), opens);
        }

        #[test]
        fn clopen_blocks_are_clopen_and_connected(s in space(7)) {
            let blocks = s.clopen_partition();
            let mut cover = PointSet::EMPTY;
            for &b in &blocks {
                prop_assert!(s.is_clopen(b));
                prop_assert!(!b.intersects(cover));
                cover |= b;
                // No proper nonempty clopen subset.
                for sub in PointSet::all_subsets(s.n()) {
                    if sub.is_subset(b) && !sub.is_empty() && sub != b {
                        prop_assert!(!s.is_clopen(sub));
                    }
                }
            }
            prop_assert_eq!(cover, s.carrier());
        }
    }
}
