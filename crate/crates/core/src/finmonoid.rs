//! Finite topologized monoids and their canonical quasi-uniformities.

use std::fmt;

use crate::error::{Error, Result};
use crate::fintop::FinSpace;
use crate::quniform::{FiniteQuasiUniformity, NormalityWitness};
use crate::relcore::{check_size, PointSet, Relation};
use crate::urysohn::{canonical_chain, Dyadic, FiniteModel, UrysohnFunction};

pub use crate::campaigns::{search_lvr, LvrSearch};

/// Reason a table is not a monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonoidViolation {
    OutOfRange { a: usize, b: usize, value: usize },
    Unit { x: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl fmt::Display for MonoidViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            MonoidViolation::OutOfRange { a, b, value } => {
                write!(f, "{a}·{b} = {value} is outside the carrier")
            }
            MonoidViolation::Unit { x } => write!(f, "unit law fails at x = {x}"),
            MonoidViolation::Associativity { a, b, c } => {
                write!(f, "({a}·{b})·{c} ≠ {a}·({b}·{c})")
            }
        }
    }
}

/// A validated multiplication table on `0..n` with a two-sided unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleyTable {
    n: usize,
    unit: usize,
    cells: Vec<usize>,
}

impl CayleyTable {
    /// First violation in the order: range, unit, associativity.
    pub fn violation(n: usize, unit: usize, cells: &[usize]) -> Option<MonoidViolation> {
        debug_assert_eq!(cells.len(), n * n);
        let mul = |a: usize, b: usize| cells[a * n + b];
        for a in 0..n {
            for b in 0..n {
                if mul(a, b) >= n {
                    return Some(MonoidViolation::OutOfRange {
                        a,
                        b,
                        value: mul(a, b),
                    });
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| mul(unit, x) != x || mul(x, unit) != x) {
            return Some(MonoidViolation::Unit { x });
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Some(MonoidViolation::Associativity { a, b, c });
                    }
                }
            }
        }
        None
    }

    pub fn new(n: usize, unit: usize, rows: &[Vec<usize>]) -> Result<Self> {
        check_size(n)?;
        if unit >= n {
            return Err(Error::PointOutOfRange { point: unit, n });
        }
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotMonoid(format!("table must be {n}×{n}")));
        }
        let cells: Vec<usize> = rows.iter().flatten().copied().collect();
        CayleyTable::from_cells(n, unit, cells)
    }

    pub(crate) fn from_cells(n: usize, unit: usize, cells: Vec<usize>) -> Result<Self> {
        match CayleyTable::violation(n, unit, &cells) {
            Some(v) => Err(Error::NotMonoid(v.to_string())),
            None => Ok(CayleyTable { n, unit, cells }),
        }
    }

    /// `ℤ_n` under addition.
    pub fn cyclic_group(n: usize) -> Result<Self> {
        check_size(n)?;
        let cells = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        CayleyTable::from_cells(n, 0, cells)
    }

    /// `{0,…,n−1}` under `max`, unit 0.
    pub fn max_monoid(n: usize) -> Result<Self> {
        check_size(n)?;
        let cells = (0..n * n).map(|k| (k / n).max(k % n)).collect();
        CayleyTable::from_cells(n, 0, cells)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cells[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// `{ab : a ∈ A, b ∈ B}`.
    pub fn mul_sets(&self, a: PointSet, b: PointSet) -> PointSet {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| self.mul(x, y)))
            .collect()
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.n).find(|&b| self.mul(a, b) == self.unit && self.mul(b, a) == self.unit)
    }

    pub fn is_group(&self) -> bool {
        (0..self.n).all(|a| self.inverse(a).is_some())
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.cells.chunks(self.n).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Monoid tables on `0..n` with unit 0, in lexicographic order of the
/// row-major cell list. Backtracking fills the non-unit cells and prunes on
/// every associativity triple whose entries are already known.
pub fn enumerate_tables(n: usize) -> Result<Vec<CayleyTable>> {
    check_size(n)?;
    const UNSET: usize = usize::MAX;
    let mut cells = vec![UNSET; n * n];
    for x in 0..n {
        cells[x] = x;
        cells[x * n] = x;
    }
    let free: Vec<usize> = (0..n * n).filter(|&k| k / n != 0 && k % n != 0).collect();

    fn consistent(n: usize, cells: &[usize]) -> bool {
        let get = |a: usize, b: usize| cells[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = get(a, b);
                if ab == usize::MAX {
                    continue;
                }
                for c in 0..n {
                    let bc = get(b, c);
                    if bc == usize::MAX {
                        continue;
                    }
                    let (l, r) = (get(ab, c), get(a, bc));
                    if l != usize::MAX && r != usize::MAX && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn fill(
        n: usize,
        k: usize,
        free: &[usize],
        cells: &mut Vec<usize>,
        out: &mut Vec<CayleyTable>,
    ) {
        if k == free.len() {
            out.push(CayleyTable::from_cells(n, 0, cells.clone()).expect("complete table checked"));
            return;
        }
        for v in 0..n {
            cells[free[k]] = v;
            if consistent(n, cells) {
                fill(n, k + 1, free, cells, out);
            }
        }
        cells[free[k]] = usize::MAX;
    }

    let mut out = Vec::new();
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    fill(n, 0, &free, &mut cells, &mut out);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QuKind {
    /// `y ∈ xU`.
    L,
    /// `y ∈ Ux`.
    R,
    /// `y ∈ xU ∩ Ux`.
    LvR,
    /// `y ∈ UxU`.
    RL,
    /// `Ux ∩ yU ≠ ∅ ≠ Uy ∩ xU`.
    Q,
}

impl QuKind {
    pub const ALL: [QuKind; 5] = [QuKind::L, QuKind::R, QuKind::LvR, QuKind::RL, QuKind::Q];

    pub fn label(self) -> &'static str {
        match self {
            QuKind::L => "L",
            QuKind::R => "R",
            QuKind::LvR => "LvR",
            QuKind::RL => "RL",
            QuKind::Q => "Q",
        }
    }
}

impl fmt::Display for QuKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A monoid table together with a topology on its carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopMonoid {
    table: CayleyTable,
    space: FinSpace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Item {
    pub name: String,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum P2Verdict {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl fmt::Display for P2Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            P2Verdict::Pass => "pass",
            P2Verdict::Fail => "fail",
            P2Verdict::HypothesisNotMet => "hypothesis-not-met",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Report {
    pub continuous: bool,
    pub open_shifts: bool,
    /// Empty when the hypotheses fail.
    pub items: Vec<P2Item>,
}

impl P2Report {
    pub fn verdict(&self) -> P2Verdict {
        if !(self.continuous && self.open_shifts) {
            P2Verdict::HypothesisNotMet
        } else if self.items.iter().all(|i| i.passed) {
            P2Verdict::Pass
        } else {
            P2Verdict::Fail
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &P2Item> {
        self.items.iter().filter(|i| !i.passed)
    }
}

impl fmt::Display for P2Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "continuous\t{}", u8::from(self.continuous))?;
        writeln!(f, "open_shifts\t{}", u8::from(self.open_shifts))?;
        for i in &self.items {
            write!(f, "{}\t{}", i.name, if i.passed { "ok" } else { "FAIL" })?;
            if let Some(d) = &i.detail {
                write!(f, "\t{d}")?;
            }
            writeln!(f)?;
        }
        write!(f, "verdict\t{}", self.verdict())
    }
}

/// The product of the left and right functions for a source set `A` and an
/// open neighborhood `U` of the unit, tabulated on every point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParaFunction {
    pub source: PointSet,
    pub neighborhood: PointSet,
    pub left: Vec<Dyadic>,
    pub right: Vec<Dyadic>,
    pub product: Vec<Dyadic>,
    /// `int cl(AU) ∩ int cl(UA)`.
    pub target: PointSet,
    pub zero_on_source: bool,
    pub support_in_target: bool,
}

impl ParaFunction {
    pub fn passed(&self) -> bool {
        self.zero_on_source && self.support_in_target
    }
}

impl fmt::Display for ParaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source\t{}", self.source)?;
        writeln!(f, "neighborhood\t{}", self.neighborhood)?;
        writeln!(f, "point\tf_L\tf_R\tf")?;
        for (z, ((l, r), p)) in self
            .left
            .iter()
            .zip(&self.right)
            .zip(&self.product)
            .enumerate()
        {
            writeln!(f, "{z}\t{l}\t{r}\t{p}")?;
        }
        writeln!(f, "target\t{}", self.target)?;
        writeln!(f, "zero_on_source\t{}", u8::from(self.zero_on_source))?;
        writeln!(f, "support_in_target\t{}", u8::from(self.support_in_target))?;
        write!(
            f,
            "verdict\t{}",
            if self.passed() { "pass" } else { "fail" }
        )
    }
}

impl TopMonoid {
    pub fn new(table: CayleyTable, space: FinSpace) -> Result<Self> {
        if table.n() != space.n() {
            return Err(Error::DimensionMismatch {
                left: table.n(),
                right: space.n(),
            });
        }
        Ok(TopMonoid { table, space })
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn unit(&self) -> usize {
        self.table.unit()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn space(&self) -> &FinSpace {
        &self.space
    }

    /// A pair `(a,b)` with `U_a·U_b ⊄ U_{ab}`.
    pub fn discontinuity(&self) -> Option<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .find(|&(a, b)| {
                let prod = self
                    .table
                    .mul_sets(self.space.minimal_open(a), self.space.minimal_open(b));
                !prod.is_subset(self.space.minimal_open(self.table.mul(a, b)))
            })
    }

    pub fn multiplication_continuous(&self) -> bool {
        self.discontinuity().is_none()
    }

    /// Joint continuity by the neighborhood definition, over all opens.
    pub fn multiplication_continuous_brute(&self) -> bool {
        let n = self.n();
        let opens = self.space.opens();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.table.mul(a, b);
                opens.iter().filter(|w| w.contains(ab)).all(|&w| {
                    opens.iter().filter(|v| v.contains(a)).any(|&v| {
                        opens
                            .iter()
                            .filter(|v2| v2.contains(b))
                            .any(|&v2| self.table.mul_sets(v, v2).is_subset(w))
                    })
                })
            })
        })
    }

    /// `(a, x, b)` with `a·U_x·b` not open.
    pub fn closed_shift(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for x in 0..n {
                    if !self
                        .space
                        .is_open(self.shift(a, self.space.minimal_open(x), b))
                    {
                        return Some((a, x, b));
                    }
                }
            }
        }
        None
    }

    pub fn has_open_shifts(&self) -> bool {
        self.closed_shift().is_none()
    }

    /// Open shifts checked on every open set.
    pub fn has_open_shifts_brute(&self) -> bool {
        let n = self.n();
        let opens = self.space.opens();
        (0..n).all(|a| {
            (0..n).all(|b| {
                opens
                    .iter()
                    .all(|&o| self.space.is_open(self.shift(a, o, b)))
            })
        })
    }

    /// `a·S·b`.
    pub fn shift(&self, a: usize, s: PointSet, b: usize) -> PointSet {
        s.iter()
            .map(|x| self.table.mul(self.table.mul(a, x), b))
            .collect()
    }

    /// Continuous multiplication and inversion on a group table.
    pub fn is_topological_group(&self) -> bool {
        self.is_paratopological_group()
            && (0..self.n()).all(|x| {
                let inv = |y: usize| self.table.inverse(y).expect("group");
                self.space
                    .minimal_open(x)
                    .iter()
                    .map(inv)
                    .collect::<PointSet>()
                    .is_subset(self.space.minimal_open(inv(x)))
            })
    }

    pub fn is_paratopological_group(&self) -> bool {
        self.table.is_group() && self.multiplication_continuous()
    }

    /// The entourage of the given kind for a neighborhood `u` of the unit.
    pub fn entourage(&self, kind: QuKind, u: PointSet) -> Relation {
        let t = &self.table;
        let n = self.n();
        let left = |x: usize| t.mul_sets(PointSet::singleton(x), u);
        let right = |x: usize| t.mul_sets(u, PointSet::singleton(x));
        let rows: Vec<PointSet> = (0..n)
            .map(|x| match kind {
                QuKind::L => left(x),
                QuKind::R => right(x),
                QuKind::LvR => PointSet::from_bits(left(x).bits() & right(x).bits()),
                QuKind::RL => t.mul_sets(right(x), u),
                QuKind::Q => (0..n)
                    .filter(|&y| right(x).intersects(left(y)) && right(y).intersects(left(x)))
                    .collect(),
            })
            .collect();
        Relation::from_rows(n, &rows).expect("unit in the neighborhood gives a reflexive relation")
    }

    /// The quasi-uniformity of the given kind, with one base entourage per
    /// open neighborhood of the unit. Normalization failures propagate.
    pub fn qu_base(&self, kind: QuKind) -> Result<FiniteQuasiUniformity> {
        let base = self
            .space
            .open_neighborhoods(self.unit())
            .into_iter()
            .map(|u| self.entourage(kind, u))
            .collect();
        FiniteQuasiUniformity::normalize(base)
    }

    /// Entourage of the minimal open neighborhood of the unit, which is the
    /// minimal member of the filter since every kind is monotone in `U`.
    pub fn qu_minimal(&self, kind: QuKind) -> Relation {
        self.entourage(kind, self.space.minimal_open(self.unit()))
    }

    /// Normality of `L`, `R`, `RL`; regeneration of the topology by `L`, `R`,
    /// `LvR`, `RL`; symmetry and coarseness of `Q`.
    pub fn check_p2(&self) -> P2Report {
        let continuous = self.multiplication_continuous();
        let open_shifts = self.has_open_shifts();
        let mut items = Vec::new();
        if !(continuous && open_shifts) {
            return P2Report {
                continuous,
                open_shifts,
                items,
            };
        }
        let mut push = |name: String, passed: bool, detail: Option<String>| {
            items.push(P2Item {
                name,
                passed,
                detail,
            })
        };
        let mut bases = Vec::new();
        for kind in QuKind::ALL {
            match self.qu_base(kind) {
                Ok(q) => {
                    if *q.minimal() != self.qu_minimal(kind) {
                        push(
                            format!("{kind} minimal"),
                            false,
                            Some("base intersection differs from the U_e entourage".into()),
                        );
                    }
                    bases.push((kind, Some(q)));
                }
                Err(e) => {
                    push(format!("{kind} base"), false, Some(e.to_string()));
                    bases.push((kind, None));
                }
            }
        }
        for (kind, q) in &bases {
            let Some(q) = q else { continue };
            if matches!(kind, QuKind::L | QuKind::R | QuKind::RL) {
                let w = q.normality_witness(&self.space);
                push(
                    format!("{kind} normal"),
                    w.is_none(),
                    w.as_ref().map(witness_text),
                );
            }
            if *kind != QuKind::Q {
                let same = q.induced_topology() == self.space;
                push(format!("{kind} topology"), same, None);
            } else {
                push("Q symmetric".into(), q.minimal().is_symmetric(), None);
                let coarser = q.induced_topology().is_coarser_than(&self.space);
                push("Q coarser".into(), coarser, None);
            }
        }
        P2Report {
            continuous,
            open_shifts,
            items,
        }
    }

    /// `f_L · f_R` built from the left and right quasi-uniformities with top
    /// entourages `L_U` and `R_U`, and the checks `A ⊆ f⁻¹(0)` and
    /// `f⁻¹([0,1)) ⊆ int cl(AU) ∩ int cl(UA)`.
    pub fn para_function(&self, source: PointSet, u: PointSet, depth: u32) -> Result<ParaFunction> {
        if !(self.multiplication_continuous() && self.has_open_shifts()) {
            return Err(Error::HypothesisNotMet(
                "multiplication must be continuous with open shifts".into(),
            ));
        }
        if !self.space.is_open(u) || !u.contains(self.unit()) {
            return Err(Error::HypothesisNotMet(format!(
                "{u} is not an open neighborhood of the unit"
            )));
        }
        if source.is_empty() {
            return Err(Error::Domain("source set must be nonempty".into()));
        }
        if !source.is_subset(self.space.carrier()) {
            return Err(Error::Domain("source set leaves the carrier".into()));
        }
        let model = FiniteModel::new(self.space);
        let tabulate = |kind: QuKind| -> Result<Vec<Dyadic>> {
            let q = self.qu_base(kind)?;
            let chain = canonical_chain(&model, &q, self.entourage(kind, u), depth)?;
            let f = UrysohnFunction::new(&model, chain, source, depth)?;
            Ok((0..self.n()).map(|z| f.evaluate(&z)).collect())
        };
        let left = tabulate(QuKind::L)?;
        let right = tabulate(QuKind::R)?;
        let product: Vec<Dyadic> = left.iter().zip(&right).map(|(&a, &b)| a * b).collect();
        let au = self.table.mul_sets(source, u);
        let ua = self.table.mul_sets(u, source);
        let target = PointSet::from_bits(
            self.space.interior_of_closure(au).bits() & self.space.interior_of_closure(ua).bits(),
        );
        let zero_on_source = source.iter().all(|z| product[z].is_zero());
        let support_in_target = (0..self.n())
            .filter(|&z| !product[z].is_one())
            .all(|z| target.contains(z));
        Ok(ParaFunction {
            source,
            neighborhood: u,
            left,
            right,
            product,
            target,
            zero_on_source,
            support_in_target,
        })
    }
}

pub(crate) fn witness_text(w: &NormalityWitness) -> String {
    format!(
        "A={} cl A={} int cl B(A;U)={}",
        w.subset, w.closure, w.target
    )
}
