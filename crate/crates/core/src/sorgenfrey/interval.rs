//! Finite unions of intervals with exact endpoints.
//!
//! An [`IntervalSet`] is always canonical: intervals are nonempty, sorted,
//! pairwise disjoint and never adjacent in a way that would let two of them
//! merge. Structural equality is therefore set equality.

use std::cmp::Ordering;
use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Bound<T> {
    /// `−∞` as a lower bound, `+∞` as an upper bound.
    Unbounded,
    Open(T),
    Closed(T),
}

impl<T: Scalar> Bound<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Bound::Unbounded => None,
            Bound::Open(v) | Bound::Closed(v) => Some(v),
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Bound::Closed(_))
    }

    /// Same point, opposite inclusion.
    fn flipped(&self) -> Bound<T> {
        match self {
            Bound::Unbounded => Bound::Unbounded,
            Bound::Open(v) => Bound::Closed(v.clone()),
            Bound::Closed(v) => Bound::Open(v.clone()),
        }
    }

    fn map(&self, f: impl Fn(&T) -> T) -> Bound<T> {
        match self {
            Bound::Unbounded => Bound::Unbounded,
            Bound::Open(v) => Bound::Open(f(v)),
            Bound::Closed(v) => Bound::Closed(f(v)),
        }
    }

    fn plus(&self, other: &Bound<T>) -> Bound<T> {
        match (self, other) {
            (Bound::Unbounded, _) | (_, Bound::Unbounded) => Bound::Unbounded,
            (Bound::Closed(a), Bound::Closed(b)) => Bound::Closed(a.clone() + b.clone()),
            (a, b) => {
                Bound::Open(a.value().expect("finite").clone() + b.value().expect("finite").clone())
            }
        }
    }
}

/// Order of lower bounds by where the interval starts.
fn cmp_lower<T: Scalar>(a: &Bound<T>, b: &Bound<T>) -> Ordering {
    match (a, b) {
        (Bound::Unbounded, Bound::Unbounded) => Ordering::Equal,
        (Bound::Unbounded, _) => Ordering::Less,
        (_, Bound::Unbounded) => Ordering::Greater,
        _ => {
            let (x, y) = (a.value().unwrap(), b.value().unwrap());
            x.cmp(y).then_with(|| match (a.is_closed(), b.is_closed()) {
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                _ => Ordering::Equal,
            })
        }
    }
}

/// Order of upper bounds by where the interval ends.
fn cmp_upper<T: Scalar>(a: &Bound<T>, b: &Bound<T>) -> Ordering {
    match (a, b) {
        (Bound::Unbounded, Bound::Unbounded) => Ordering::Equal,
        (Bound::Unbounded, _) => Ordering::Greater,
        (_, Bound::Unbounded) => Ordering::Less,
        _ => {
            let (x, y) = (a.value().unwrap(), b.value().unwrap());
            x.cmp(y).then_with(|| match (a.is_closed(), b.is_closed()) {
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Less,
                _ => Ordering::Equal,
            })
        }
    }
}

/// Whether an interval ending at `upper` and one starting at `lower` (which
/// does not start before it) have an interval as their union.
fn reaches<T: Scalar>(upper: &Bound<T>, lower: &Bound<T>) -> bool {
    match (upper.value(), lower.value()) {
        (None, _) | (_, None) => true,
        (Some(b), Some(a)) => a < b || (a == b && (upper.is_closed() || lower.is_closed())),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    pub lower: Bound<T>,
    pub upper: Bound<T>,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lower: Bound<T>, upper: Bound<T>) -> Self {
        Interval { lower, upper }
    }

    pub fn is_empty(&self) -> bool {
        match (self.lower.value(), self.upper.value()) {
            (Some(a), Some(b)) => match a.cmp(b) {
                Ordering::Greater => true,
                Ordering::Equal => !(self.lower.is_closed() && self.upper.is_closed()),
                Ordering::Less => false,
            },
            _ => false,
        }
    }

    /// A single point `[a,a]`.
    pub fn is_degenerate(&self) -> bool {
        matches!((self.lower.value(), self.upper.value()), (Some(a), Some(b)) if a == b)
    }

    pub fn contains(&self, x: &T) -> bool {
        let above = match &self.lower {
            Bound::Unbounded => true,
            Bound::Open(a) => a < x,
            Bound::Closed(a) => a <= x,
        };
        let below = match &self.upper {
            Bound::Unbounded => true,
            Bound::Open(b) => x < b,
            Bound::Closed(b) => x <= b,
        };
        above && below
    }

    fn intersect(&self, other: &Interval<T>) -> Interval<T> {
        let lower = if cmp_lower(&self.lower, &other.lower) == Ordering::Greater {
            self.lower.clone()
        } else {
            other.lower.clone()
        };
        let upper = if cmp_upper(&self.upper, &other.upper) == Ordering::Less {
            self.upper.clone()
        } else {
            other.upper.clone()
        };
        Interval { lower, upper }
    }
}

impl<T: Scalar> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lower {
            Bound::Unbounded => f.write_str("(-inf")?,
            Bound::Open(a) => write!(f, "({a}")?,
            Bound::Closed(a) => write!(f, "[{a}")?,
        }
        f.write_str(",")?;
        match &self.upper {
            Bound::Unbounded => f.write_str("inf)"),
            Bound::Open(b) => write!(f, "{b})"),
            Bound::Closed(b) => write!(f, "{b}]"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet<T> {
    intervals: Vec<Interval<T>>,
}

impl<T: Scalar> IntervalSet<T> {
    pub fn empty() -> Self {
        IntervalSet { intervals: vec![] }
    }

    /// The whole line.
    pub fn line() -> Self {
        IntervalSet {
            intervals: vec![Interval::new(Bound::Unbounded, Bound::Unbounded)],
        }
    }

    /// `[0, ∞)`.
    pub fn half_line() -> Self {
        IntervalSet::from_interval(Interval::new(Bound::Closed(T::zero()), Bound::Unbounded))
    }

    pub fn point(x: T) -> Self {
        IntervalSet::from_interval(Interval::new(Bound::Closed(x.clone()), Bound::Closed(x)))
    }

    /// `[a, b)`.
    pub fn half_open(a: T, b: T) -> Self {
        IntervalSet::from_interval(Interval::new(Bound::Closed(a), Bound::Open(b)))
    }

    /// `(a, b)`.
    pub fn open(a: T, b: T) -> Self {
        IntervalSet::from_interval(Interval::new(Bound::Open(a), Bound::Open(b)))
    }

    /// `[a, b]`.
    pub fn closed(a: T, b: T) -> Self {
        IntervalSet::from_interval(Interval::new(Bound::Closed(a), Bound::Closed(b)))
    }

    pub fn from_interval(i: Interval<T>) -> Self {
        IntervalSet::from_intervals(vec![i])
    }

    /// Canonicalizes an arbitrary list of intervals.
    pub fn from_intervals(mut list: Vec<Interval<T>>) -> Self {
        list.retain(|i| !i.is_empty());
        list.sort_by(|a, b| cmp_lower(&a.lower, &b.lower).then(cmp_upper(&a.upper, &b.upper)));
        let mut out: Vec<Interval<T>> = Vec::with_capacity(list.len());
        for next in list {
            match out.last_mut() {
                Some(cur) if reaches(&cur.upper, &next.lower) => {
                    if cmp_upper(&next.upper, &cur.upper) == Ordering::Greater {
                        cur.upper = next.upper;
                    }
                }
                _ => out.push(next),
            }
        }
        IntervalSet { intervals: out }
    }

    pub fn intervals(&self) -> &[Interval<T>] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.intervals.iter().any(|i| i.contains(x))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut all = self.intervals.clone();
        all.extend(other.intervals.iter().cloned());
        IntervalSet::from_intervals(all)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let pieces = self
            .intervals
            .iter()
            .flat_map(|a| other.intervals.iter().map(move |b| a.intersect(b)))
            .collect();
        IntervalSet::from_intervals(pieces)
    }

    /// Complement in the real line.
    pub fn complement(&self) -> Self {
        let mut gaps = Vec::with_capacity(self.intervals.len() + 1);
        let mut cursor = Some(Bound::Unbounded);
        for i in &self.intervals {
            if let (Some(start), Some(_)) = (cursor.take(), i.lower.value()) {
                gaps.push(Interval::new(start, i.lower.flipped()));
            }
            cursor = i.upper.value().map(|_| i.upper.flipped());
        }
        if let Some(start) = cursor {
            gaps.push(Interval::new(start, Bound::Unbounded));
        }
        IntervalSet::from_intervals(gaps)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Closure in the Sorgenfrey line: a point is adherent when every
    /// `[x, x+δ)` meets the set, so left endpoints of nondegenerate intervals
    /// are added and right endpoints are left alone.
    pub fn closure_sorgenfrey(&self) -> Self {
        let closed = self
            .intervals
            .iter()
            .map(|i| {
                let mut i = i.clone();
                if !i.is_degenerate() {
                    if let Bound::Open(a) = &i.lower {
                        i.lower = Bound::Closed(a.clone());
                    }
                }
                i
            })
            .collect();
        IntervalSet::from_intervals(closed)
    }

    pub fn interior_sorgenfrey(&self) -> Self {
        self.complement().closure_sorgenfrey().complement()
    }

    pub fn closure_euclidean(&self) -> Self {
        let closed = self
            .intervals
            .iter()
            .map(|i| {
                let mut i = i.clone();
                if !i.is_degenerate() {
                    if let Bound::Open(a) = &i.lower {
                        i.lower = Bound::Closed(a.clone());
                    }
                    if let Bound::Open(b) = &i.upper {
                        i.upper = Bound::Closed(b.clone());
                    }
                }
                i
            })
            .collect();
        IntervalSet::from_intervals(closed)
    }

    pub fn interior_euclidean(&self) -> Self {
        self.complement().closure_euclidean().complement()
    }

    pub fn is_open_sorgenfrey(&self) -> bool {
        self.interior_sorgenfrey() == *self
    }

    pub fn is_closed_sorgenfrey(&self) -> bool {
        self.closure_sorgenfrey() == *self
    }

    /// `{ a + b : a ∈ self, b ∈ other }`.
    pub fn minkowski_sum(&self, other: &Self) -> Self {
        let pieces = self
            .intervals
            .iter()
            .flat_map(|a| {
                other
                    .intervals
                    .iter()
                    .map(move |b| Interval::new(a.lower.plus(&b.lower), a.upper.plus(&b.upper)))
            })
            .collect();
        IntervalSet::from_intervals(pieces)
    }

    /// `{ −a : a ∈ self }`.
    pub fn negate(&self) -> Self {
        let pieces = self
            .intervals
            .iter()
            .map(|i| Interval::new(i.upper.map(|v| -v.clone()), i.lower.map(|v| -v.clone())))
            .collect();
        IntervalSet::from_intervals(pieces)
    }

    pub fn translate(&self, x: &T) -> Self {
        let pieces = self
            .intervals
            .iter()
            .map(|i| {
                Interval::new(
                    i.lower.map(|v| v.clone() + x.clone()),
                    i.upper.map(|v| v.clone() + x.clone()),
                )
            })
            .collect();
        IntervalSet::from_intervals(pieces)
    }

    /// `self + [0, ε)`: lower ends keep their flag, upper ends become open
    /// at `upper + ε`.
    pub fn minkowski_right(&self, eps: &T) -> Self {
        self.minkowski_sum(&IntervalSet::half_open(T::zero(), eps.clone()))
    }

    /// `[0, ε) + self`; equal to [`IntervalSet::minkowski_right`] since
    /// addition commutes.
    pub fn minkowski_left(&self, eps: &T) -> Self {
        IntervalSet::half_open(T::zero(), eps.clone()).minkowski_sum(self)
    }
}

impl<T: Scalar> fmt::Display for IntervalSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("empty");
        }
        for (k, i) in self.intervals.iter().enumerate() {
            if k > 0 {
                f.write_str(" U ")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for IntervalSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.intervals).finish()
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    _src: &'a str,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, msg)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    /// rat := integer ['/' positive-integer]
    fn rational<T: Scalar>(&mut self) -> Result<T> {
        self.skip_ws();
        let start = self.pos;
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let num = self.digits();
        if num.is_empty() {
            return Err(self.err("expected an integer"));
        }
        let mut text = format!("{}{}", if negative { "-" } else { "" }, num);
        if self.peek() == Some('/') {
            self.pos += 1;
            let den = self.digits();
            if den.is_empty() || den.chars().all(|c| c == '0') {
                return Err(self.err("expected a positive denominator"));
            }
            text.push('/');
            text.push_str(&den);
        }
        text.parse::<T>()
            .map_err(|_| Error::parse(self.line, start + 1, format!("bad rational {text:?}")))
    }

    fn interval<T: Scalar>(&mut self) -> Result<Interval<T>> {
        self.skip_ws();
        let lower_closed = match self.peek() {
            Some('[') => true,
            Some('(') => false,
            _ => return Err(self.err("expected '[' or '('")),
        };
        self.pos += 1;
        self.skip_ws();
        let lower = if self.keyword("-inf") {
            if lower_closed {
                return Err(self.err("-inf cannot be a closed endpoint"));
            }
            Bound::Unbounded
        } else {
            let a = self.rational::<T>()?;
            if lower_closed {
                Bound::Closed(a)
            } else {
                Bound::Open(a)
            }
        };
        self.expect(',')?;
        self.skip_ws();
        let upper_value = if self.keyword("inf") || self.keyword("+inf") {
            None
        } else {
            Some(self.rational::<T>()?)
        };
        self.skip_ws();
        let upper_closed = match self.peek() {
            Some(']') => true,
            Some(')') => false,
            _ => return Err(self.err("expected ']' or ')'")),
        };
        self.pos += 1;
        let upper = match upper_value {
            None if upper_closed => return Err(self.err("inf cannot be a closed endpoint")),
            None => Bound::Unbounded,
            Some(b) if upper_closed => Bound::Closed(b),
            Some(b) => Bound::Open(b),
        };
        Ok(Interval::new(lower, upper))
    }
}

impl<T: Scalar> IntervalSet<T> {
    /// Parses `empty | interval ('U' interval)*`, e.g. `[0,1/2) U (3,inf)`.
    /// `line` is reported in error positions.
    pub fn parse(text: &str, line: usize) -> Result<Self> {
        let mut c = Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            _src: text,
        };
        c.skip_ws();
        if c.keyword("empty") {
            c.skip_ws();
            if c.pos != c.chars.len() {
                return Err(c.err("trailing input after 'empty'"));
            }
            return Ok(IntervalSet::empty());
        }
        let mut list = vec![c.interval::<T>()?];
        loop {
            c.skip_ws();
            match c.peek() {
                None => break,
                Some('U') => {
                    c.pos += 1;
                    list.push(c.interval::<T>()?);
                }
                Some(_) => return Err(c.err("expected 'U' or end of input")),
            }
        }
        Ok(IntervalSet::from_intervals(list))
    }
}

impl<T: Scalar> std::str::FromStr for IntervalSet<T> {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IntervalSet::parse(s, 1)
    }
}
