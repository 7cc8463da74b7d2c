//! Urysohn-type function synthesis from a chain of entourages.
//!
//! Given entourages `U ⊇ U_1U_1`, `U_{n-1} ⊇ U_nU_n` and a source set `A`,
//! every dyadic `q = Σ q_i/2^i` selects the entourage
//! `U^q = U_1^{q_1} ··· U_l^{q_l}` (with `V^0 = Δ`), and
//!
//! ```text
//! f(z) = inf({1} ∪ { q : z ∈ cl B(A; U^q) })
//! ```
//!
//! The engine is generic over a [`SetModel`], so the same code runs on finite
//! spaces and on the exact Sorgenfrey model.
//!
//! A chain of depth `k` is extended past level `k` by a *tail* entourage `T`
//! with `TT ⊆ T` and `TT ⊆ U_k` (so `U_{k+j} = T` is a valid continuation).
//! Then every `q` with more than `k` bits has `U^q = U^p T` where `p` is its
//! `k`-bit truncation, and the infimum becomes the finite minimum
//!
//! ```text
//! f(z) = min({1} ∪ { p ∈ {0, 1/2^k, …, (2^k−1)/2^k} : z ∈ cl B(A; U^p T) })
//! ```
//!
//! which is exact for the extended chain. With `T = Δ` it is the truncation of
//! the infimum to level `k`, within `2^-k` of the value for any longer chain.

mod dyadic;
mod finite;

pub use dyadic::{Dyadic, MAX_LEVEL};
pub use finite::{canonical_chain, FiniteModel};

use std::fmt::{self, Debug};

use crate::error::{Error, Result};

/// Depth limit for chains and evaluation grids.
pub const MAX_DEPTH: u32 = 60;

/// Depth limit for [`verify_theorem`], which walks every pair of grid points.
pub const VERIFY_MAX_DEPTH: u32 = 14;

/// A space with enough structure to run the construction: sets, entourages,
/// balls, closure and interior.
pub trait SetModel {
    type Point: Clone + Debug;
    type Set: Clone + PartialEq + Debug;
    type Entourage: Clone + PartialEq + Debug;

    fn universe(&self) -> Self::Set;
    fn identity(&self) -> Self::Entourage;
    fn compose(&self, u: &Self::Entourage, v: &Self::Entourage) -> Self::Entourage;
    fn entourage_subset(&self, u: &Self::Entourage, v: &Self::Entourage) -> bool;
    /// `B(A; U)`.
    fn ball(&self, a: &Self::Set, u: &Self::Entourage) -> Self::Set;
    fn closure(&self, a: &Self::Set) -> Self::Set;
    fn interior(&self, a: &Self::Set) -> Self::Set;
    /// Complement relative to the universe.
    fn complement(&self, a: &Self::Set) -> Self::Set;
    fn is_subset(&self, a: &Self::Set, b: &Self::Set) -> bool;
    fn contains(&self, a: &Self::Set, p: &Self::Point) -> bool;
    fn is_empty(&self, a: &Self::Set) -> bool;

    fn is_open(&self, a: &Self::Set) -> bool {
        self.interior(a) == *a
    }

    /// All points, when the model is finite.
    fn finite_points(&self) -> Option<Vec<Self::Point>> {
        None
    }

    /// The set of the given points, when the model is finite.
    fn set_of(&self, _points: &[Self::Point]) -> Option<Self::Set> {
        None
    }
}

/// `U ⊇ U_1U_1`, `U_{n-1} ⊇ U_nU_n`, plus a tail `T` with `T ⊇ TT`,
/// `U_k ⊇ TT`. Certificates are checked at construction.
#[derive(Clone, Debug, PartialEq)]
pub struct EntourageChain<E> {
    top: E,
    levels: Vec<E>,
    tail: E,
}

impl<E: Clone + PartialEq + Debug> EntourageChain<E> {
    /// Validates every composition certificate. A missing tail means `Δ`.
    pub fn new<M>(model: &M, top: E, levels: Vec<E>, tail: Option<E>) -> Result<Self>
    where
        M: SetModel<Entourage = E>,
    {
        if levels.is_empty() {
            return Err(Error::InvalidChain("chain needs at least one level".into()));
        }
        if levels.len() > MAX_DEPTH as usize {
            return Err(Error::InvalidChain(format!(
                "chain depth {} exceeds {MAX_DEPTH}",
                levels.len()
            )));
        }
        let mut parent = &top;
        for (i, u) in levels.iter().enumerate() {
            let square = model.compose(u, u);
            if !model.entourage_subset(&square, parent) {
                return Err(Error::InvalidChain(format!(
                    "U_{n}∘U_{n} is not contained in U_{p}",
                    n = i + 1,
                    p = i
                )));
            }
            parent = u;
        }
        let tail = tail.unwrap_or_else(|| model.identity());
        let square = model.compose(&tail, &tail);
        if !model.entourage_subset(&square, &tail) {
            return Err(Error::InvalidChain(
                "tail entourage is not transitive".into(),
            ));
        }
        if !model.entourage_subset(&square, parent) {
            return Err(Error::InvalidChain(format!(
                "tail∘tail is not contained in U_{}",
                levels.len()
            )));
        }
        Ok(EntourageChain { top, levels, tail })
    }

    pub fn depth(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn top(&self) -> &E {
        &self.top
    }

    pub fn levels(&self) -> &[E] {
        &self.levels
    }

    pub fn tail(&self) -> &E {
        &self.tail
    }

    /// `U^q = U_1^{q_1} ··· U_l^{q_l}`; `U^0 = Δ`. Defined for `q ∈ [0,1)`
    /// with at most `depth` bits.
    pub fn power<M>(&self, model: &M, q: Dyadic) -> Result<E>
    where
        M: SetModel<Entourage = E>,
    {
        if q.is_zero() {
            return Ok(model.identity());
        }
        let bits = q.binary_expansion()?;
        if bits.len() > self.levels.len() {
            return Err(Error::Domain(format!(
                "{q} needs a chain of depth {}, this chain has depth {}",
                bits.len(),
                self.levels.len()
            )));
        }
        let mut acc: Option<E> = None;
        for (bit, u) in bits.iter().zip(&self.levels) {
            if *bit {
                acc = Some(match acc {
                    None => u.clone(),
                    Some(prev) => model.compose(&prev, u),
                });
            }
        }
        Ok(acc.expect("expansion ends in a set bit"))
    }
}

/// Dyadics `j / 2^depth` for `j = 0 .. 2^depth − 1`.
pub fn dyadic_grid(depth: u32) -> impl Iterator<Item = Dyadic> {
    assert!(depth <= MAX_DEPTH);
    (0u128..(1u128 << depth)).map(move |j| Dyadic::new(j, depth).expect("grid point"))
}

/// The function of the construction, evaluated lazily.
pub struct UrysohnFunction<'m, M: SetModel> {
    model: &'m M,
    chain: EntourageChain<M::Entourage>,
    source: M::Set,
    depth: u32,
}

impl<'m, M: SetModel> UrysohnFunction<'m, M> {
    pub fn new(
        model: &'m M,
        chain: EntourageChain<M::Entourage>,
        source: M::Set,
        depth: u32,
    ) -> Result<Self> {
        if model.is_empty(&source) {
            return Err(Error::Domain("source set must be nonempty".into()));
        }
        if !model.is_subset(&source, &model.universe()) {
            return Err(Error::Domain("source set leaves the universe".into()));
        }
        if depth == 0 || depth > chain.depth() {
            return Err(Error::Domain(format!(
                "evaluation depth {depth} must lie in 1..={}",
                chain.depth()
            )));
        }
        Ok(UrysohnFunction {
            model,
            chain,
            source,
            depth,
        })
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn chain(&self) -> &EntourageChain<M::Entourage> {
        &self.chain
    }

    pub fn source(&self) -> &M::Set {
        &self.source
    }

    pub fn model(&self) -> &M {
        self.model
    }

    /// `cl B(A; U^q)`.
    pub fn closed_neighborhood(&self, q: Dyadic) -> Result<M::Set> {
        let u = self.chain.power(self.model, q)?;
        Ok(self.model.closure(&self.model.ball(&self.source, &u)))
    }

    /// `cl B(A; U^p T)`, the set where the function is at most `p`.
    pub fn sublevel_set(&self, p: Dyadic) -> Result<M::Set> {
        let u = self.chain.power(self.model, p)?;
        let u = self.model.compose(&u, &self.chain.tail);
        Ok(self.model.closure(&self.model.ball(&self.source, &u)))
    }

    fn grid_member(&self, j: u128, z: &M::Point) -> bool {
        let p = Dyadic::new(j, self.depth).expect("grid point");
        let set = self.sublevel_set(p).expect("grid point within depth");
        self.model.contains(&set, z)
    }

    /// Least grid dyadic `p` with `z ∈ cl B(A; U^p T)`, or 1. Binary search;
    /// relies on the sublevel sets increasing with `p`.
    pub fn evaluate(&self, z: &M::Point) -> Dyadic {
        let (mut lo, mut hi) = (0u128, 1u128 << self.depth);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.grid_member(mid, z) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        if lo == 1u128 << self.depth {
            Dyadic::ONE
        } else {
            Dyadic::new(lo, self.depth).expect("grid point")
        }
    }

    /// Linear-scan evaluation over every grid point; reference for
    /// [`UrysohnFunction::evaluate`].
    pub fn evaluate_scan(&self, z: &M::Point) -> Dyadic {
        (0u128..(1u128 << self.depth))
            .find(|&j| self.grid_member(j, z))
            .map(|j| Dyadic::new(j, self.depth).expect("grid point"))
            .unwrap_or(Dyadic::ONE)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    fn pass() -> Self {
        Check {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Check {
            passed: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("pass"),
            Some(w) => write!(f, "FAIL ({w})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The monotone inclusions fail, so the entourages cannot come from a
    /// normal quasi-uniformity.
    HypothesisViolated,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::HypothesisViolated => "hypothesis-violated",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremReport {
    pub depth: u32,
    /// `A ⊆ f⁻¹(0)`.
    pub zero_on_source: Check,
    /// `f⁻¹([0,1)) ⊆ int cl B(A;U)`.
    pub support_in_target: Check,
    /// `cl B(A;U^q) ⊆ int cl B(A;U^r)` for grid dyadics `q < r`.
    pub monotone_inclusions: Check,
    pub failing_pair: Option<(Dyadic, Dyadic)>,
    /// Openness of the preimages of `[0,a)` and `(a,1]`.
    pub continuity: Check,
}

impl TheoremReport {
    pub fn verdict(&self) -> Verdict {
        if !self.monotone_inclusions.passed {
            Verdict::HypothesisViolated
        } else if self.zero_on_source.passed
            && self.support_in_target.passed
            && self.continuity.passed
        {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "depth\t{}", self.depth)?;
        writeln!(f, "zero_on_source\t{}", self.zero_on_source)?;
        writeln!(f, "support_in_target\t{}", self.support_in_target)?;
        writeln!(f, "monotone_inclusions\t{}", self.monotone_inclusions)?;
        writeln!(f, "continuity\t{}", self.continuity)?;
        writeln!(f, "verdict\t{}", self.verdict())
    }
}

/// Checks the conclusions of the construction for `A` along the given chain:
/// the source lies in the zero set, the support of `f < 1` lies in
/// `int cl B(A;U)`, the closed neighborhoods increase with interior
/// inclusions, and the level sets are open.
pub fn verify_theorem<M: SetModel>(
    model: &M,
    chain: &EntourageChain<M::Entourage>,
    source: &M::Set,
    depth: u32,
) -> Result<TheoremReport> {
    if depth > VERIFY_MAX_DEPTH {
        return Err(Error::Domain(format!(
            "exhaustive verification is limited to depth {VERIFY_MAX_DEPTH}"
        )));
    }
    let f = UrysohnFunction::new(model, chain.clone(), source.clone(), depth)?;
    let grid: Vec<Dyadic> = dyadic_grid(depth).collect();

    let sublevels: Vec<M::Set> = grid
        .iter()
        .map(|&p| f.sublevel_set(p))
        .collect::<Result<_>>()?;
    let neighborhoods: Vec<M::Set> = grid
        .iter()
        .map(|&q| f.closed_neighborhood(q))
        .collect::<Result<_>>()?;
    let interiors: Vec<M::Set> = neighborhoods.iter().map(|s| model.interior(s)).collect();

    let zero_on_source = if model.is_subset(source, &sublevels[0]) {
        Check::pass()
    } else {
        Check::fail("source not contained in the zero set".into())
    };

    let target = model.interior(&model.closure(&model.ball(source, chain.top())));
    let support_in_target = match grid
        .iter()
        .zip(&sublevels)
        .find(|(_, s)| !model.is_subset(s, &target))
    {
        None => Check::pass(),
        Some((p, _)) => Check::fail(format!("sublevel set at {p} leaves int cl B(A;U)")),
    };

    let mut failing_pair = None;
    'outer: for (i, zq) in neighborhoods.iter().enumerate() {
        for (j, int_r) in interiors.iter().enumerate().skip(i + 1) {
            if !model.is_subset(zq, int_r) {
                failing_pair = Some((grid[i], grid[j]));
                break 'outer;
            }
        }
    }
    let monotone_inclusions = match failing_pair {
        None => Check::pass(),
        Some((q, r)) => Check::fail(format!("cl B(A;U^{q}) ⊄ int cl B(A;U^{r})")),
    };

    let continuity = continuity_check(model, &f, &grid, &neighborhoods, &interiors);

    Ok(TheoremReport {
        depth,
        zero_on_source,
        support_in_target,
        monotone_inclusions,
        failing_pair,
        continuity,
    })
}

fn continuity_check<M: SetModel>(
    model: &M,
    f: &UrysohnFunction<'_, M>,
    grid: &[Dyadic],
    neighborhoods: &[M::Set],
    interiors: &[M::Set],
) -> Check {
    // The sets in the preimage identities: int cl B(A;U^q) and X ∖ cl B(A;U^r).
    for (q, (zq, int_q)) in grid.iter().zip(neighborhoods.iter().zip(interiors)) {
        if !model.is_open(int_q) {
            return Check::fail(format!("int cl B(A;U^{q}) is not open"));
        }
        if !model.is_open(&model.complement(zq)) {
            return Check::fail(format!("complement of cl B(A;U^{q}) is not open"));
        }
    }
    // Finite models: tabulate f. Preimages of [0,a) and (a,1] only change
    // when a crosses a value of f, so test just below and just above each one.
    let Some(points) = model.finite_points() else {
        return Check::pass();
    };
    let values: Vec<Dyadic> = points.iter().map(|z| f.evaluate(z)).collect();
    let mut distinct = values.clone();
    distinct.sort();
    distinct.dedup();
    let preimage = |keep: &dyn Fn(Dyadic) -> bool| -> M::Set {
        let pts: Vec<M::Point> = points
            .iter()
            .zip(&values)
            .filter(|(_, &v)| keep(v))
            .map(|(p, _)| p.clone())
            .collect();
        model.set_of(&pts).expect("finite model builds sets")
    };
    for &v in &distinct {
        let mut cases: Vec<(String, M::Set)> = Vec::new();
        if !v.is_one() {
            cases.push((format!("[0,a) for a just above {v}"), preimage(&|w| w <= v)));
            cases.push((format!("(a,1] for a just above {v}"), preimage(&|w| w > v)));
        }
        if !v.is_zero() {
            cases.push((format!("[0,a) for a just below {v}"), preimage(&|w| w < v)));
            cases.push((format!("(a,1] for a just below {v}"), preimage(&|w| w >= v)));
        }
        for (label, set) in cases {
            if !model.is_open(&set) {
                return Check::fail(format!("preimage of {label} is not open"));
            }
        }
    }
    Check::pass()
}
