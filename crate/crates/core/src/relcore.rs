//! Entourages on a finite carrier `{0, .., n-1}`.
//!
//! A [`Relation`] stores one machine word per row, so composition, balls and
//! inclusion tests are word-level operations. Every relation built through the
//! public constructors contains the diagonal; the constructors refuse input that
//! lacks it instead of repairing it.

use std::fmt;

use crate::error::{Error, Result};

/// Largest carrier size a [`Relation`] or [`PointSet`] can describe.
pub const MAX_POINTS: usize = 32;

type Word = u32;

/// A subset of the carrier, one bit per point.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(Word);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u32) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// The whole carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n >= MAX_POINTS {
            PointSet(Word::MAX)
        } else {
            PointSet((1 << n) - 1)
        }
    }

    pub fn singleton(point: usize) -> Self {
        debug_assert!(point < MAX_POINTS);
        PointSet(1 << point)
    }

    pub fn contains(self, point: usize) -> bool {
        point < MAX_POINTS && self.0 & (1 << point) != 0
    }

    pub fn with(self, point: usize) -> Self {
        self | PointSet::singleton(point)
    }

    pub fn without(self, point: usize) -> Self {
        PointSet(self.0 & !(1 << point))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: PointSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to the carrier of size `n`.
    pub fn complement(self, n: usize) -> Self {
        PointSet(!self.0 & PointSet::full(n).0)
    }

    pub fn difference(self, other: PointSet) -> Self {
        PointSet(self.0 & !other.0)
    }

    /// Smallest point of the set, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// The highest point index plus one, or zero for the empty set.
    pub(crate) fn span(self) -> usize {
        (Word::BITS - self.0.leading_zeros()) as usize
    }

    pub fn iter(self) -> Points {
        Points(self.0)
    }

    /// All subsets of `{0, .., n-1}` in increasing bit order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = PointSet> {
        assert!(n < 64, "subset enumeration limited to fewer than 64 points");
        (0u64..(1u64 << n)).map(|bits| PointSet(bits as Word))
    }
}

impl std::ops::BitOr for PointSet {
    type Output = PointSet;
    fn bitor(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 | rhs.0)
    }
}

impl std::ops::BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: PointSet) {
        self.0 |= rhs.0;
    }
}

impl std::ops::BitAnd for PointSet {
    type Output = PointSet;
    fn bitand(self, rhs: PointSet) -> PointSet {
        PointSet(self.0 & rhs.0)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(PointSet::EMPTY, |acc, p| acc.with(p))
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Points;
    fn into_iter(self) -> Points {
        self.iter()
    }
}

/// Iterator over the points of a [`PointSet`] in increasing order.
#[derive(Clone)]
pub struct Points(Word);

impl Iterator for Points {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let p = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyCarrier)
    } else if n > MAX_POINTS {
        Err(Error::CapExceeded { n, max: MAX_POINTS })
    } else {
        Ok(())
    }
}

/// A reflexive binary relation (entourage) on `n` points.
///
/// Row `i` is the ball `B(i; self) = { j : (i,j) ∈ self }`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: usize,
    rows: [PointSet; MAX_POINTS],
}

impl Relation {
    /// The diagonal `Δ`.
    pub fn identity(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut rows = [PointSet::EMPTY; MAX_POINTS];
        for (i, row) in rows.iter_mut().enumerate().take(n) {
            *row = PointSet::singleton(i);
        }
        Ok(Relation { n, rows })
    }

    /// The full relation `X × X`.
    pub fn full(n: usize) -> Result<Self> {
        check_size(n)?;
        let mut rows = [PointSet::EMPTY; MAX_POINTS];
        rows[..n].fill(PointSet::full(n));
        Ok(Relation { n, rows })
    }

    /// Builds a relation from its rows. Rejects rows lacking the diagonal or
    /// mentioning points outside the carrier.
    pub fn from_rows(n: usize, rows: &[PointSet]) -> Result<Self> {
        check_size(n)?;
        if rows.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: rows.len(),
            });
        }
        let full = PointSet::full(n);
        let mut out = [PointSet::EMPTY; MAX_POINTS];
        for (i, &row) in rows.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::PointOutOfRange {
                    point: row.span() - 1,
                    n,
                });
            }
            if !row.contains(i) {
                return Err(Error::MissingDiagonal(i));
            }
            out[i] = row;
        }
        Ok(Relation { n, rows: out })
    }

    /// Builds a relation from an explicit list of pairs, which must include
    /// every diagonal pair.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut rows = vec![PointSet::EMPTY; n];
        for &(x, y) in pairs {
            for p in [x, y] {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, n });
                }
            }
            rows[x] = rows[x].with(y);
        }
        Relation::from_rows(n, &rows)
    }

    /// `Δ ∪ pairs`.
    pub fn diagonal_with(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut all: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        all.extend_from_slice(pairs);
        Relation::from_pairs(n, &all)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, x: usize) -> PointSet {
        self.rows[x]
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.rows[..self.n]
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        x < self.n && self.rows[x].contains(y)
    }

    /// Pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.rows[x].iter().map(move |y| (x, y)))
    }

    fn same_size(&self, other: &Relation) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// `self ∘ other = { (x,z) : ∃y (x,y) ∈ self, (y,z) ∈ other }`.
    pub fn compose(&self, other: &Relation) -> Result<Relation> {
        self.same_size(other)?;
        let mut rows = [PointSet::EMPTY; MAX_POINTS];
        for (x, row) in rows.iter_mut().enumerate().take(self.n) {
            *row = other.ball(self.rows[x]);
        }
        Ok(Relation { n: self.n, rows })
    }

    pub fn inverse(&self) -> Relation {
        let mut rows = [PointSet::EMPTY; MAX_POINTS];
        for (x, y) in self.pairs() {
            rows[y] = rows[y].with(x);
        }
        Relation { n: self.n, rows }
    }

    /// `B(A; self) = ⋃_{x ∈ A} B(x; self)`.
    pub fn ball(&self, a: PointSet) -> PointSet {
        a.iter()
            .filter(|&x| x < self.n)
            .fold(PointSet::EMPTY, |acc, x| acc | self.rows[x])
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && (0..self.n).all(|x| self.rows[x].is_subset(other.rows[x]))
    }

    pub fn intersection(&self, other: &Relation) -> Result<Relation> {
        self.same_size(other)?;
        let mut rows = self.rows;
        for (row, o) in rows.iter_mut().zip(other.rows.iter()) {
            *row = *row & *o;
        }
        Ok(Relation { n: self.n, rows })
    }

    pub fn union(&self, other: &Relation) -> Result<Relation> {
        self.same_size(other)?;
        let mut rows = self.rows;
        for (row, o) in rows.iter_mut().zip(other.rows.iter()) {
            *row |= *o;
        }
        Ok(Relation { n: self.n, rows })
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|x| self.rows[x] == PointSet::singleton(x))
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.inverse()
    }

    /// Reflexive (always, by construction) and `self ∘ self ⊆ self`.
    pub fn is_preorder(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    /// A triple `(x,y,z)` with `(x,y), (y,z)` present and `(x,z)` absent.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in self.rows[x] {
                let missing = self.rows[y].difference(self.rows[x]);
                if let Some(z) = missing.first() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    /// Smallest preorder containing `self` (Warshall).
    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows;
        for k in 0..self.n {
            for i in 0..self.n {
                if rows[i].contains(k) {
                    rows[i] |= rows[k];
                }
            }
        }
        Relation { n: self.n, rows }
    }

    /// Parses the text form: `n` lines of `n` characters `0`/`1`.
    /// `first_line` is the 1-based line number used in error positions.
    pub fn parse_text(lines: &[&str], first_line: usize) -> Result<Relation> {
        let n = lines.len();
        if n == 0 {
            return Err(Error::parse(first_line, 1, "empty relation"));
        }
        if n > MAX_POINTS {
            return Err(Error::CapExceeded { n, max: MAX_POINTS });
        }
        let mut rows = vec![PointSet::EMPTY; n];
        for (i, line) in lines.iter().enumerate() {
            let line_no = first_line + i;
            let chars: Vec<char> = line.trim_end().chars().collect();
            if chars.len() != n {
                return Err(Error::parse(
                    line_no,
                    chars.len().min(n) + 1,
                    format!("expected {n} characters of 0/1, found {}", chars.len()),
                ));
            }
            for (j, c) in chars.into_iter().enumerate() {
                match c {
                    '1' => rows[i] = rows[i].with(j),
                    '0' => {}
                    other => {
                        return Err(Error::parse(
                            line_no,
                            j + 1,
                            format!("unexpected character {other:?}"),
                        ))
                    }
                }
            }
            if !rows[i].contains(i) {
                return Err(Error::parse(
                    line_no,
                    i + 1,
                    format!("diagonal entry ({i},{i}) must be 1"),
                ));
            }
        }
        Relation::from_rows(n, &rows)
    }
}

impl fmt::Display for Relation {
    /// Text form: one line per row, `1` marks membership.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in 0..self.n {
            for y in 0..self.n {
                f.write_str(if self.rows[x].contains(y) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, [", self.n)?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{row}")?;
        }
        f.write_str("])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m_sierpinski() -> Relation {
        Relation::from_pairs(2, &[(0, 0), (0, 1), (1, 1)]).unwrap()
    }

    fn set(points: &[usize]) -> PointSet {
        points.iter().copied().collect()
    }

    #[test]
    fn compose_identity() {
        let d = Relation::identity(3).unwrap();
        assert_eq!(d.compose(&d).unwrap(), d);
    }

    #[test]
    fn compose_opposite_arrows_is_full() {
        let r = Relation::diagonal_with(2, &[(0, 1)]).unwrap();
        let s = Relation::diagonal_with(2, &[(1, 0)]).unwrap();
        assert_eq!(r.compose(&s).unwrap(), Relation::full(2).unwrap());
    }

    #[test]
    fn compose_preorder_is_idempotent() {
        let m = m_sierpinski();
        assert_eq!(m.compose(&m).unwrap(), m);
    }

    #[test]
    fn compose_size_mismatch() {
        let a = Relation::identity(2).unwrap();
        let b = Relation::identity(3).unwrap();
        assert_eq!(
            a.compose(&b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inverse_examples() {
        let d = Relation::identity(4).unwrap();
        assert_eq!(d.inverse(), d);
        let expected = Relation::from_pairs(2, &[(0, 0), (1, 0), (1, 1)]).unwrap();
        assert_eq!(m_sierpinski().inverse(), expected);
    }

    #[test]
    fn ball_examples() {
        let d = Relation::identity(3).unwrap();
        assert_eq!(d.ball(set(&[0, 2])), set(&[0, 2]));
        assert_eq!(m_sierpinski().ball(set(&[0])), set(&[0, 1]));
        assert_eq!(m_sierpinski().ball(PointSet::EMPTY), PointSet::EMPTY);
    }

    #[test]
    fn preorder_examples() {
        assert!(Relation::identity(3).unwrap().is_preorder());
        assert!(m_sierpinski().is_preorder());
        let chain = Relation::diagonal_with(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!chain.is_preorder());
        assert_eq!(chain.transitivity_violation(), Some((0, 1, 2)));
    }

    #[test]
    fn constructors_reject_missing_diagonal() {
        assert_eq!(
            Relation::from_pairs(2, &[(0, 0), (0, 1)]),
            Err(Error::MissingDiagonal(1))
        );
        assert_eq!(
            Relation::identity(MAX_POINTS + 1),
            Err(Error::CapExceeded {
                n: MAX_POINTS + 1,
                max: MAX_POINTS
            })
        );
        assert_eq!(Relation::identity(0), Err(Error::EmptyCarrier));
        assert!(matches!(
            Relation::from_pairs(2, &[(0, 0), (1, 1), (1, 2)]),
            Err(Error::PointOutOfRange { point: 2, n: 2 })
        ));
    }

    #[test]
    fn text_form() {
        let m = m_sierpinski();
        assert_eq!(m.to_string(), "11\n01\n");
        let lines: Vec<&str> = "11\n01".lines().collect();
        assert_eq!(Relation::parse_text(&lines, 1).unwrap(), m);
        let bad: Vec<&str> = "10\n00".lines().collect();
        assert!(matches!(
            Relation::parse_text(&bad, 4),
            Err(Error::Parse {
                line: 5,
                column: 2,
                ..
            })
        ));
        let ragged: Vec<&str> = "1\n01".lines().collect();
        assert!(matches!(
            Relation::parse_text(&ragged, 1),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn full_carrier_width() {
        let full = Relation::full(MAX_POINTS).unwrap();
        assert_eq!(full.row(MAX_POINTS - 1).len(), MAX_POINTS);
        assert!(full.is_preorder());
    }

    fn relation(max_n: usize) -> impl Strategy<Value = Relation> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<u32>(), n).prop_map(move |raw| {
                let rows: Vec<PointSet> = raw
                    .iter()
                    .enumerate()
                    .map(|(i, &bits)| (PointSet::from_bits(bits) & PointSet::full(n)).with(i))
                    .collect();
                Relation::from_rows(n, &rows).unwrap()
            })
        })
    }

    fn triple(max_n: usize) -> impl Strategy<Value = (Relation, Relation, Relation)> {
        (1..=max_n).prop_flat_map(|n| {
            let one = move || {
                proptest::collection::vec(any::<u32>(), n).prop_map(move |raw| {
                    let rows: Vec<PointSet> = raw
                        .iter()
                        .enumerate()
                        .map(|(i, &b)| (PointSet::from_bits(b) & PointSet::full(n)).with(i))
                        .collect();
                    Relation::from_rows(n, &rows).unwrap()
                })
            };
            (one(), one(), one())
        })
    }

    proptest! {
        #[test]
        fn compose_is_associative((a, b, c) in triple(6)) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn compose_is_monotone((a, b, c) in triple(6)) {
            let a2 = a.union(&c).unwrap();
            let b2 = b.union(&c).unwrap();
            prop_assert!(a.compose(&b).unwrap().is_subset(&a2.compose(&b2).unwrap()));
        }

        #[test]
        fn inverse_is_anti_homomorphism((a, b, _c) in triple(6)) {
            let lhs = a.compose(&b).unwrap().inverse();
            let rhs = b.inverse().compose(&a.inverse()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_is_involution(r in relation(8)) {
            prop_assert_eq!(r.inverse().inverse(), r);
        }

        #[test]
        fn ball_distributes_over_union(r in relation(8), a in any::<u32>(), b in any::<u32>()) {
            let full = PointSet::full(r.n());
            let a = PointSet::from_bits(a) & full;
            let b = PointSet::from_bits(b) & full;
            prop_assert_eq!(r.ball(a | b), r.ball(a) | r.ball(b));
        }

        #[test]
        fn closure_is_least_preorder(r in relation(6)) {
            let t = r.transitive_closure();
            prop_assert!(t.is_preorder());
            prop_assert!(r.is_subset(&t));
            prop_assert_eq!(r.is_preorder(), r == t);
        }

        #[test]
        fn text_round_trip(r in relation(8)) {
            let text = r.to_string();
            let lines: Vec<&str> = text.lines().collect();
            prop_assert_eq!(Relation::parse_text(&lines, 1).unwrap(), r);
        }
    }
}
