//! Exact model of the Sorgenfrey line and half-line.
//!
//! Sets are finite unions of intervals with exact rational endpoints. The
//! additive structure gives entourages `{(x,y) : y ∈ x + [0,r)}` indexed by a
//! radius `r ≥ 0`; composing two of them adds the radii.

mod interval;

pub use interval::{Bound, Interval, IntervalSet};

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{Num, Signed};

use crate::error::{Error, Result};
use crate::urysohn::{EntourageChain, SetModel, MAX_DEPTH};

/// Exact ordered field used for endpoints.
pub trait Scalar:
    Clone + Ord + Num + Signed + FromStr + Display + Debug + Hash + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Ord + Num + Signed + FromStr + Display + Debug + Hash + Send + Sync + 'static
{
}

fn positive<T: Scalar>(eps: &T) -> Result<()> {
    if eps.is_positive() {
        Ok(())
    } else {
        Err(Error::Domain(format!("radius must be positive, got {eps}")))
    }
}

/// `(x−ε, x+ε)`.
pub fn euclidean_ball<T: Scalar>(x: &T, eps: &T) -> IntervalSet<T> {
    IntervalSet::open(x.clone() - eps.clone(), x.clone() + eps.clone())
}

/// Basic quasi-Roelcke neighborhood of `x` in the group `(ℝ,+)` for
/// `U = [0,ε)`: the `y` with `(U+x) ∩ (y+U) ≠ ∅` and `(U+y) ∩ (x+U) ≠ ∅`.
pub fn qball_line<T: Scalar>(x: &T, eps: &T) -> Result<IntervalSet<T>> {
    positive(eps)?;
    let u = IntervalSet::half_open(T::zero(), eps.clone());
    let minus_u = u.negate();
    // (U+x) ∩ (y+U) ≠ ∅  ⟺  y ∈ (U+x) + (−U)
    let first = u.translate(x).minkowski_sum(&minus_u);
    // (U+y) ∩ (x+U) ≠ ∅  ⟺  y ∈ (x+U) + (−U)
    let second = IntervalSet::point(x.clone())
        .minkowski_sum(&u)
        .minkowski_sum(&minus_u);
    Ok(first.intersection(&second))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Universe {
    /// `[0, ∞)`, the additive monoid.
    HalfLine,
    /// `ℝ`, the additive group.
    Line,
}

impl FromStr for Universe {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "halfline" | "half-line" | "halfLine" => Ok(Universe::HalfLine),
            "line" => Ok(Universe::Line),
            other => Err(Error::Domain(format!("unknown universe {other:?}"))),
        }
    }
}

impl Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Universe::HalfLine => "halfline",
            Universe::Line => "line",
        })
    }
}

/// Sorgenfrey topology on the chosen universe. Entourages are radii.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SorgenfreyModel<T> {
    universe: Universe,
    carrier: IntervalSet<T>,
}

impl<T: Scalar> SorgenfreyModel<T> {
    pub fn new(universe: Universe) -> Self {
        let carrier = match universe {
            Universe::HalfLine => IntervalSet::half_line(),
            Universe::Line => IntervalSet::line(),
        };
        SorgenfreyModel { universe, carrier }
    }

    pub fn half_line() -> Self {
        SorgenfreyModel::new(Universe::HalfLine)
    }

    pub fn line() -> Self {
        SorgenfreyModel::new(Universe::Line)
    }

    pub fn universe_kind(&self) -> Universe {
        self.universe
    }

    /// Radii `ε/2^n` for `n = 1..=depth` under top `ε`, with tail `Δ`.
    pub fn chain(&self, eps: &T, depth: u32) -> Result<EntourageChain<T>> {
        positive(eps)?;
        if depth == 0 || depth > MAX_DEPTH {
            return Err(Error::Domain(format!(
                "chain depth {depth} must lie in 1..={MAX_DEPTH}"
            )));
        }
        let two = T::one() + T::one();
        let mut r = eps.clone();
        let levels = (0..depth)
            .map(|_| {
                r = r.clone() / two.clone();
                r.clone()
            })
            .collect();
        EntourageChain::new(self, eps.clone(), levels, None)
    }
}

impl<T: Scalar> SetModel for SorgenfreyModel<T> {
    type Point = T;
    type Set = IntervalSet<T>;
    type Entourage = T;

    fn universe(&self) -> IntervalSet<T> {
        self.carrier.clone()
    }

    fn identity(&self) -> T {
        T::zero()
    }

    fn compose(&self, u: &T, v: &T) -> T {
        u.clone() + v.clone()
    }

    fn entourage_subset(&self, u: &T, v: &T) -> bool {
        u <= v
    }

    fn ball(&self, a: &IntervalSet<T>, r: &T) -> IntervalSet<T> {
        if r.is_zero() {
            a.intersection(&self.carrier)
        } else {
            a.minkowski_right(r).intersection(&self.carrier)
        }
    }

    // The half-line is clopen in ℝ_S, so relative closure and interior are
    // the ambient ones cut down to it.
    fn closure(&self, a: &IntervalSet<T>) -> IntervalSet<T> {
        a.closure_sorgenfrey().intersection(&self.carrier)
    }

    fn interior(&self, a: &IntervalSet<T>) -> IntervalSet<T> {
        a.intersection(&self.carrier).interior_sorgenfrey()
    }

    fn complement(&self, a: &IntervalSet<T>) -> IntervalSet<T> {
        self.carrier.difference(a)
    }

    fn is_subset(&self, a: &IntervalSet<T>, b: &IntervalSet<T>) -> bool {
        a.is_subset(b)
    }

    fn contains(&self, a: &IntervalSet<T>, p: &T) -> bool {
        a.contains(p)
    }

    fn is_empty(&self, a: &IntervalSet<T>) -> bool {
        a.is_empty()
    }
}

/// How far the family `{[0, 1/2^n)}` is searched for a separating member.
pub const SEPARATION_SEARCH_LIMIT: u32 = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallCheck<T> {
    pub x: T,
    pub eps: T,
    pub computed: IntervalSet<T>,
    pub reference: IntervalSet<T>,
    pub contains_center: bool,
}

impl<T: Scalar> BallCheck<T> {
    pub fn passed(&self) -> bool {
        self.contains_center && self.computed == self.reference
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    /// `x = y`; nothing to separate.
    Skipped,
    /// Least `n` with `y` outside the basic neighborhood of `x` for
    /// `U = [0, 1/2^n)`.
    Separated(u32),
    NotSeparated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCheck<T> {
    pub x: T,
    pub y: T,
    /// `|x − y|`, the witness metric.
    pub distance: T,
    pub separation: Separation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmetrizabilityReport<T> {
    pub balls: Vec<BallCheck<T>>,
    pub pairs: Vec<PairCheck<T>>,
}

impl<T: Scalar> SubmetrizabilityReport<T> {
    pub fn passed(&self) -> bool {
        self.balls.iter().all(BallCheck::passed)
            && self
                .pairs
                .iter()
                .all(|p| p.separation != Separation::NotSeparated)
    }
}

impl<T: Scalar> Display for SubmetrizabilityReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.balls {
            writeln!(
                f,
                "ball\tx={}\teps={}\tcomputed={}\treference={}\t{}",
                b.x,
                b.eps,
                b.computed,
                b.reference,
                if b.passed() { "ok" } else { "MISMATCH" }
            )?;
        }
        for p in &self.pairs {
            let sep = match &p.separation {
                Separation::Skipped => "skipped".to_string(),
                Separation::Separated(n) => format!("separated at n={n}"),
                Separation::NotSeparated => "NOT SEPARATED".to_string(),
            };
            writeln!(f, "pair\tx={}\ty={}\td={}\t{}", p.x, p.y, p.distance, sep)?;
        }
        write!(
            f,
            "verdict\t{}",
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

/// Checks on the Sorgenfrey group that the quasi-Roelcke balls are the
/// Euclidean balls (so `|x−y|` is a continuous metric) and that the family
/// `{[0,1/2^n)}` separates each sampled pair.
pub fn submetrizability_witness<T: Scalar>(
    samples: &[(T, T)],
    eps_list: &[T],
) -> Result<SubmetrizabilityReport<T>> {
    submetrizability_witness_with(samples, eps_list, euclidean_ball)
}

/// [`submetrizability_witness`] against an arbitrary reference ball.
pub fn submetrizability_witness_with<T: Scalar>(
    samples: &[(T, T)],
    eps_list: &[T],
    reference: impl Fn(&T, &T) -> IntervalSet<T>,
) -> Result<SubmetrizabilityReport<T>> {
    for eps in eps_list {
        positive(eps)?;
    }
    let mut centers: Vec<T> = samples
        .iter()
        .flat_map(|(x, y)| [x.clone(), y.clone()])
        .collect();
    centers.sort();
    centers.dedup();

    let mut balls = Vec::new();
    for x in &centers {
        for eps in eps_list {
            let computed = qball_line(x, eps)?;
            balls.push(BallCheck {
                x: x.clone(),
                eps: eps.clone(),
                contains_center: computed.contains(x),
                reference: reference(x, eps),
                computed,
            });
        }
    }

    let two = T::one() + T::one();
    let mut pairs = Vec::new();
    for (x, y) in samples {
        let distance = (x.clone() - y.clone()).abs();
        let separation = if x == y {
            Separation::Skipped
        } else {
            let mut radius = T::one();
            let mut found = Separation::NotSeparated;
            for n in 0..=SEPARATION_SEARCH_LIMIT {
                if !qball_line(x, &radius)?.contains(y) {
                    found = Separation::Separated(n);
                    break;
                }
                radius = radius / two.clone();
            }
            found
        };
        pairs.push(PairCheck {
            x: x.clone(),
            y: y.clone(),
            distance,
            separation,
        });
    }
    Ok(SubmetrizabilityReport { balls, pairs })
}
