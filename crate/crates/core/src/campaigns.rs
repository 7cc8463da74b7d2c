//! Exhaustive enumeration of finite spaces and monoids, and batch checks
//! over them.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::finmonoid::{enumerate_tables, witness_text, CayleyTable, P2Verdict, QuKind, TopMonoid};
use crate::fintop::FinSpace;
use crate::quniform::{canonical_qu, classify_with_normality};
use crate::relcore::{PointSet, Relation};
use crate::separation::{classify, diagram_violations, Axiom, Classification, DIAGRAM};

/// Largest carrier for space enumeration.
pub const SPACE_CAP: usize = 4;
/// Largest carrier for monoid enumeration.
pub const MONOID_CAP: usize = 4;

/// Labeled topologies on `n` points for `n = 0..=5`.
pub const LABELED_TOPOLOGIES: [usize; 6] = [1, 1, 4, 29, 355, 6942];

fn check_cap(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if n > max {
        return Err(Error::CapExceeded { n, max });
    }
    Ok(())
}

/// Every preorder on `n` labeled points, once each, ordered by the
/// off-diagonal entries read row-major as a binary number (first entry most
/// significant).
pub fn enumerate_spaces(n: usize) -> Result<Vec<FinSpace>> {
    check_cap(n, SPACE_CAP)?;
    let cells: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
        .collect();
    let k = cells.len();
    let spaces = (0u64..1 << k)
        .into_par_iter()
        .filter_map(|code| {
            let pairs: Vec<(usize, usize)> = cells
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> (k - 1 - i) & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let m = Relation::diagonal_with(n, &pairs).expect("in range");
            m.is_preorder()
                .then(|| FinSpace::from_preorder(m).expect("preorder"))
        })
        .collect();
    Ok(spaces)
}

/// Rows of the preorder as bit strings, e.g. `11/01` for Sierpiński.
pub fn preorder_code(s: &FinSpace) -> String {
    let n = s.n();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    if s.preorder().contains(x, y) {
                        '1'
                    } else {
                        '0'
                    }
                })
                .collect::<String>()
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// Cayley table rows as digit strings, e.g. `01/10` for ℤ₂.
pub fn table_code(t: &CayleyTable) -> String {
    t.rows()
        .iter()
        .map(|r| r.iter().map(usize::to_string).collect::<String>())
        .collect::<Vec<_>>()
        .join("/")
}

pub fn space_id(n: usize, index: usize) -> String {
    format!("s{n}.{index}")
}

pub fn monoid_id(n: usize, table: usize, space: usize) -> String {
    format!("m{n}.{table}.{space}")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MonoidFilter {
    pub continuous: bool,
    pub open_shifts: bool,
}

impl MonoidFilter {
    pub const NONE: MonoidFilter = MonoidFilter {
        continuous: false,
        open_shifts: false,
    };
    pub const CONTINUOUS: MonoidFilter = MonoidFilter {
        continuous: true,
        open_shifts: false,
    };
    pub const OPEN_SHIFTS: MonoidFilter = MonoidFilter {
        continuous: true,
        open_shifts: true,
    };

    fn accepts(self, m: &TopMonoid) -> bool {
        (!self.continuous || m.multiplication_continuous())
            && (!self.open_shifts || m.has_open_shifts())
    }
}

/// A topologized monoid with its position in the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidInstance {
    pub id: String,
    pub table_index: usize,
    pub space_index: usize,
    pub monoid: TopMonoid,
}

/// All (table, topology) pairs on `n` points passing the filter, ordered by
/// table index, then space index.
pub fn enumerate_monoids(n: usize, filter: MonoidFilter) -> Result<Vec<MonoidInstance>> {
    check_cap(n, MONOID_CAP)?;
    let tables = enumerate_tables(n)?;
    let spaces = enumerate_spaces(n)?;
    let out = tables
        .par_iter()
        .enumerate()
        .flat_map_iter(|(ti, t)| {
            let spaces = &spaces;
            spaces.iter().enumerate().filter_map(move |(si, s)| {
                let m = TopMonoid::new(t.clone(), *s).expect("same carrier");
                filter.accepts(&m).then(|| MonoidInstance {
                    id: monoid_id(n, ti, si),
                    table_index: ti,
                    space_index: si,
                    monoid: m,
                })
            })
        })
        .collect();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoidCensus {
    pub tables: usize,
    pub raw: usize,
    pub continuous: usize,
    pub continuous_open_shifts: usize,
    pub paratopological_groups: usize,
    pub topological_groups: usize,
}

pub fn monoid_census(n: usize) -> Result<MonoidCensus> {
    let all = enumerate_monoids(n, MonoidFilter::NONE)?;
    let flags: Vec<(bool, bool, bool, bool)> = all
        .par_iter()
        .map(|i| {
            let m = &i.monoid;
            let c = m.multiplication_continuous();
            (
                c,
                c && m.has_open_shifts(),
                m.is_paratopological_group(),
                m.is_topological_group(),
            )
        })
        .collect();
    Ok(MonoidCensus {
        tables: enumerate_tables(n)?.len(),
        raw: all.len(),
        continuous: flags.iter().filter(|f| f.0).count(),
        continuous_open_shifts: flags.iter().filter(|f| f.1).count(),
        paratopological_groups: flags.iter().filter(|f| f.2).count(),
        topological_groups: flags.iter().filter(|f| f.3).count(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CampaignKind {
    Diagram,
    Equi,
    Characterization,
    Count,
    P2,
    Monoreg,
    Qrl,
    Lvr,
}

impl CampaignKind {
    pub const ALL: [CampaignKind; 8] = [
        CampaignKind::Diagram,
        CampaignKind::Equi,
        CampaignKind::Characterization,
        CampaignKind::Count,
        CampaignKind::P2,
        CampaignKind::Monoreg,
        CampaignKind::Qrl,
        CampaignKind::Lvr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CampaignKind::Diagram => "diagram",
            CampaignKind::Equi => "equi",
            CampaignKind::Characterization => "characterization",
            CampaignKind::Count => "count",
            CampaignKind::P2 => "p2",
            CampaignKind::Monoreg => "monoreg",
            CampaignKind::Qrl => "qrl",
            CampaignKind::Lvr => "lvr",
        }
    }

    /// Whether the campaign runs over monoids rather than spaces.
    pub fn is_monoid(self) -> bool {
        matches!(
            self,
            CampaignKind::P2 | CampaignKind::Monoreg | CampaignKind::Qrl | CampaignKind::Lvr
        )
    }

    /// Exploratory campaigns record findings and never report violations.
    pub fn is_exploratory(self) -> bool {
        self == CampaignKind::Lvr
    }
}

impl FromStr for CampaignKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CampaignKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown campaign {s:?}")))
    }
}

impl fmt::Display for CampaignKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessStatus {
    Found { instance: String, code: String },
    ProvablyNone(&'static str),
    NoneFound,
}

/// Search result for a space satisfying `conclusion` but not `premise`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowWitness {
    pub premise: Axiom,
    pub conclusion: Axiom,
    pub status: WitnessStatus,
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub kind: CampaignKind,
    pub n: usize,
    pub instances: usize,
    pub header: String,
    pub rows: Vec<String>,
    pub violations: Vec<Violation>,
    pub witnesses: Vec<ArrowWitness>,
    /// Named property combinations and the first instance showing them.
    pub examples: Vec<(String, Option<String>)>,
    /// Exploratory results (campaign lvr).
    pub findings: Vec<Violation>,
    pub stats: Vec<(String, String)>,
    pub duration: Duration,
}

impl CampaignReport {
    fn new(kind: CampaignKind, n: usize, header: &str) -> Self {
        CampaignReport {
            kind,
            n,
            instances: 0,
            header: header.to_string(),
            rows: vec![],
            violations: vec![],
            witnesses: vec![],
            examples: vec![],
            findings: vec![],
            stats: vec![],
            duration: Duration::ZERO,
        }
    }

    fn stat(&mut self, key: &str, value: impl ToString) {
        self.stats.push((key.to_string(), value.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Full deterministic TSV report. The duration is not included.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "campaign\t{}", self.kind);
        let _ = writeln!(out, "n\t{}", self.n);
        let _ = writeln!(out, "instances\t{}", self.instances);
        let _ = writeln!(out, "violations\t{}", self.violations.len());
        let _ = writeln!(out, "\n[instances]\n{}", self.header);
        for r in &self.rows {
            let _ = writeln!(out, "{r}");
        }
        out.push('\n');
        out.push_str(&self.summary_block());
        out
    }

    fn summary_block(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "[violations]");
        for v in &self.violations {
            let _ = writeln!(out, "{}\t{}", v.instance, v.detail);
        }
        if !self.witnesses.is_empty() {
            let _ = writeln!(out, "\n[witnesses]\narrow\tstatus\tinstance\tpreorder");
            for w in &self.witnesses {
                let arrow = format!("{}=>{}", w.premise, w.conclusion);
                let _ = match &w.status {
                    WitnessStatus::Found { instance, code } => {
                        writeln!(out, "{arrow}\tfound\t{instance}\t{code}")
                    }
                    WitnessStatus::ProvablyNone(why) => {
                        writeln!(out, "{arrow}\tprovably none\t-\t{why}")
                    }
                    WitnessStatus::NoneFound => {
                        writeln!(out, "{arrow}\tnone found at n={}\t-\t-", self.n)
                    }
                };
            }
        }
        if !self.examples.is_empty() {
            let _ = writeln!(out, "\n[examples]");
            for (label, inst) in &self.examples {
                let _ = writeln!(out, "{label}\t{}", inst.as_deref().unwrap_or("none"));
            }
        }
        if self.kind.is_exploratory() {
            let _ = writeln!(out, "\n[findings]");
            for v in &self.findings {
                let _ = writeln!(out, "{}\t{}", v.instance, v.detail);
            }
        }
        let _ = writeln!(out, "\n[stats]");
        for (k, v) in &self.stats {
            let _ = writeln!(out, "{k}\t{v}");
        }
        out
    }

    /// Human-readable summary without per-instance rows.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "campaign {} n={}: {} instances, {} violations\n",
            self.kind,
            self.n,
            self.instances,
            self.violations.len()
        );
        out.push_str(&self.summary_block());
        out
    }
}

/// Runs a campaign over all structures of size exactly `n`.
pub fn run_campaign(kind: CampaignKind, n: usize) -> Result<CampaignReport> {
    let start = Instant::now();
    let mut report = match kind {
        CampaignKind::Diagram => diagram(n)?,
        CampaignKind::Equi => equi(n)?,
        CampaignKind::Characterization => characterization(n)?,
        CampaignKind::Count => count(n)?,
        CampaignKind::P2 => p2(n)?,
        CampaignKind::Monoreg => monoreg(n)?,
        CampaignKind::Qrl => qrl(n)?,
        CampaignKind::Lvr => lvr(n)?,
    };
    report.duration = start.elapsed();
    Ok(report)
}

struct Classified {
    id: String,
    space: FinSpace,
    class: Classification,
}

fn classified_spaces(n: usize) -> Result<Vec<Classified>> {
    Ok(enumerate_spaces(n)?
        .into_par_iter()
        .enumerate()
        .map(|(i, space)| Classified {
            id: space_id(n, i),
            class: classify_with_normality(&space),
            space,
        })
        .collect())
}

/// Why no finite space has `conclusion` without `premise`, if that is known.
fn finite_obstruction(premise: Axiom, conclusion: Axiom) -> Option<&'static str> {
    let implies_t1 = matches!(
        conclusion,
        Axiom::T1
            | Axiom::SemiHausdorff
            | Axiom::Hausdorff
            | Axiom::FunctionallyHausdorff
            | Axiom::T3
            | Axiom::SemiT3
            | Axiom::Tychonoff
            | Axiom::Submetrizable
    );
    if implies_t1 {
        Some("finite T1 spaces are discrete")
    } else if premise == Axiom::CompletelyRegular && conclusion == Axiom::Regular {
        Some("finite regular spaces have clopen minimal opens")
    } else {
        None
    }
}

fn first_with(
    spaces: &[Classified],
    pred: impl Fn(&Classification) -> bool,
) -> Option<&Classified> {
    spaces.iter().find(|c| pred(&c.class))
}

fn diagram(n: usize) -> Result<CampaignReport> {
    let spaces = classified_spaces(n)?;
    let mut r = CampaignReport::new(CampaignKind::Diagram, n, &Classification::tsv_header());
    r.instances = spaces.len();
    for c in &spaces {
        r.rows.push(c.class.tsv_row(&c.id, n));
        for (p, q) in diagram_violations(&c.class) {
            r.violations.push(Violation {
                instance: c.id.clone(),
                detail: format!("{p} holds but {q} fails"),
            });
        }
    }
    for (p, q) in DIAGRAM {
        let status = match first_with(&spaces, |c| c.get(q) && !c.get(p)) {
            Some(c) => WitnessStatus::Found {
                instance: c.id.clone(),
                code: preorder_code(&c.space),
            },
            None => match finite_obstruction(p, q) {
                Some(why) => WitnessStatus::ProvablyNone(why),
                None => WitnessStatus::NoneFound,
            },
        };
        r.witnesses.push(ArrowWitness {
            premise: p,
            conclusion: q,
            status,
        });
    }
    type Combo = (&'static str, fn(&Classification) -> bool);
    let combos: [Combo; 4] = [
        ("T0 and not T1", |c| c.t0 && !c.t1),
        ("R and not T0", |c| c.regular && !c.t0),
        ("sR and not R", |c| c.semiregular && !c.regular),
        ("sR and not nqu", |c| {
            c.semiregular && c.normally_quasi_uniformizable == Some(false)
        }),
    ];
    for (label, pred) in combos {
        let found =
            first_with(&spaces, pred).map(|c| format!("{} {}", c.id, preorder_code(&c.space)));
        r.examples.push((label.to_string(), found));
    }
    for a in Axiom::ALL {
        r.stat(a.label(), spaces.iter().filter(|c| c.class.get(a)).count());
    }
    r.stat(
        "nqu",
        spaces
            .iter()
            .filter(|c| c.class.normally_quasi_uniformizable == Some(true))
            .count(),
    );
    Ok(r)
}

/// Labels of the axioms in `group` whose values disagree, or `None`.
fn disagreement(c: &Classification, group: &[Axiom]) -> Option<String> {
    let first = c.get(group[0]);
    group.iter().any(|&a| c.get(a) != first).then(|| {
        group
            .iter()
            .map(|&a| format!("{a}={}", u8::from(c.get(a))))
            .collect::<Vec<_>>()
            .join(" ")
    })
}

const REGULARITY: [Axiom; 3] = [Axiom::Semiregular, Axiom::Regular, Axiom::CompletelyRegular];
const HAUSDORFF: [Axiom; 3] = [
    Axiom::SemiHausdorff,
    Axiom::Hausdorff,
    Axiom::FunctionallyHausdorff,
];

fn equi(n: usize) -> Result<CampaignReport> {
    let spaces = classified_spaces(n)?;
    let mut r = CampaignReport::new(CampaignKind::Equi, n, &Classification::tsv_header());
    r.instances = spaces.len();
    let mut nqu = 0;
    for c in &spaces {
        r.rows.push(c.class.tsv_row(&c.id, n));
        if c.class.normally_quasi_uniformizable != Some(true) {
            continue;
        }
        nqu += 1;
        for group in [&REGULARITY[..], &HAUSDORFF[..]] {
            if let Some(d) = disagreement(&c.class, group) {
                r.violations.push(Violation {
                    instance: c.id.clone(),
                    detail: d,
                });
            }
        }
    }
    r.stat("nqu", nqu);
    Ok(r)
}

fn characterization(n: usize) -> Result<CampaignReport> {
    let spaces = classified_spaces(n)?;
    let mut r = CampaignReport::new(
        CampaignKind::Characterization,
        n,
        &Classification::tsv_header(),
    );
    r.instances = spaces.len();
    let (mut semiregular, mut both) = (0, 0);
    for c in &spaces {
        r.rows.push(c.class.tsv_row(&c.id, n));
        if !c.class.semiregular {
            continue;
        }
        semiregular += 1;
        let nqu = c.class.normally_quasi_uniformizable == Some(true);
        if nqu && c.class.completely_regular {
            both += 1;
        }
        if nqu != c.class.completely_regular {
            let detail = match canonical_qu(&c.space).normality_witness(&c.space) {
                Some(w) => format!(
                    "cR={} nqu=0 {}",
                    u8::from(c.class.completely_regular),
                    witness_text(&w)
                ),
                None => format!("cR={} nqu=1", u8::from(c.class.completely_regular)),
            };
            r.violations.push(Violation {
                instance: c.id.clone(),
                detail,
            });
        }
    }
    r.stat("semiregular", semiregular);
    r.stat("semiregular_cr_nqu", both);
    Ok(r)
}

fn count(n: usize) -> Result<CampaignReport> {
    let spaces = enumerate_spaces(n)?;
    let mut r = CampaignReport::new(CampaignKind::Count, n, "id\tn\tpreorder\topens");
    r.instances = spaces.len();
    for (i, s) in spaces.iter().enumerate() {
        r.rows.push(format!(
            "{}\t{n}\t{}\t{}",
            space_id(n, i),
            preorder_code(s),
            s.opens().len()
        ));
    }
    let expected = LABELED_TOPOLOGIES[n];
    if spaces.len() != expected {
        r.violations.push(Violation {
            instance: "-".into(),
            detail: format!("{} spaces, expected {expected}", spaces.len()),
        });
    }
    r.stat("expected", expected);
    Ok(r)
}

const MONOID_HEADER: &str = "id\ttable\tpreorder\tverdict";

fn monoid_row(i: &MonoidInstance, verdict: &str) -> String {
    format!(
        "{}\t{}\t{}\t{verdict}",
        i.id,
        table_code(i.monoid.table()),
        preorder_code(i.monoid.space())
    )
}

fn census_stats(r: &mut CampaignReport, n: usize) -> Result<()> {
    let c = monoid_census(n)?;
    r.stat("tables", c.tables);
    r.stat("raw", c.raw);
    r.stat("continuous", c.continuous);
    r.stat("continuous_open_shifts", c.continuous_open_shifts);
    r.stat("paratopological_groups", c.paratopological_groups);
    r.stat("topological_groups", c.topological_groups);
    Ok(())
}

fn p2(n: usize) -> Result<CampaignReport> {
    let monoids = enumerate_monoids(n, MonoidFilter::OPEN_SHIFTS)?;
    let mut r = CampaignReport::new(CampaignKind::P2, n, MONOID_HEADER);
    r.instances = monoids.len();
    let reports: Vec<_> = monoids.par_iter().map(|i| i.monoid.check_p2()).collect();
    for (i, rep) in monoids.iter().zip(&reports) {
        let verdict = rep.verdict();
        r.rows.push(monoid_row(i, &verdict.to_string()));
        if verdict != P2Verdict::Pass {
            let failed: Vec<String> = rep
                .failures()
                .map(|f| match &f.detail {
                    Some(d) => format!("{} ({d})", f.name),
                    None => f.name.clone(),
                })
                .collect();
            r.violations.push(Violation {
                instance: i.id.clone(),
                detail: format!("{verdict}: {}", failed.join("; ")),
            });
        }
    }
    census_stats(&mut r, n)?;
    Ok(r)
}

fn monoreg(n: usize) -> Result<CampaignReport> {
    let monoids = enumerate_monoids(n, MonoidFilter::OPEN_SHIFTS)?;
    let mut r = CampaignReport::new(CampaignKind::Monoreg, n, MONOID_HEADER);
    r.instances = monoids.len();
    for i in &monoids {
        let c = classify(i.monoid.space());
        let mut bad = Vec::new();
        for group in [&REGULARITY[..], &HAUSDORFF[..]] {
            if let Some(d) = disagreement(&c, group) {
                bad.push(d);
            }
        }
        r.rows
            .push(monoid_row(i, if bad.is_empty() { "ok" } else { "fail" }));
        if !bad.is_empty() {
            r.violations.push(Violation {
                instance: i.id.clone(),
                detail: bad.join("; "),
            });
        }
    }
    r.stat(
        "regular",
        monoids
            .iter()
            .filter(|i| classify(i.monoid.space()).regular)
            .count(),
    );
    Ok(r)
}

fn qrl(n: usize) -> Result<CampaignReport> {
    let groups: Vec<MonoidInstance> = enumerate_monoids(n, MonoidFilter::CONTINUOUS)?
        .into_iter()
        .filter(|i| i.monoid.table().is_group())
        .collect();
    let mut r = CampaignReport::new(CampaignKind::Qrl, n, MONOID_HEADER);
    r.instances = groups.len();
    for i in &groups {
        let m = &i.monoid;
        let mut bad = Vec::new();
        if !m.is_topological_group() {
            bad.push("inversion is not continuous".to_string());
        }
        match (m.qu_base(QuKind::Q), m.qu_base(QuKind::RL)) {
            (Ok(q), Ok(rl)) if q.minimal() == rl.minimal() => {}
            (Ok(q), Ok(rl)) => bad.push(format!(
                "Q minimal {} differs from RL minimal {}",
                q.minimal()
                    .rows()
                    .iter()
                    .map(PointSet::to_string)
                    .collect::<Vec<_>>()
                    .join(""),
                rl.minimal()
                    .rows()
                    .iter()
                    .map(PointSet::to_string)
                    .collect::<Vec<_>>()
                    .join("")
            )),
            (Err(e), _) | (_, Err(e)) => bad.push(e.to_string()),
        }
        r.rows
            .push(monoid_row(i, if bad.is_empty() { "ok" } else { "fail" }));
        if !bad.is_empty() {
            r.violations.push(Violation {
                instance: i.id.clone(),
                detail: bad.join("; "),
            });
        }
    }
    Ok(r)
}

fn lvr(n: usize) -> Result<CampaignReport> {
    let monoids = enumerate_monoids(n, MonoidFilter::OPEN_SHIFTS)?;
    let mut r = CampaignReport::new(CampaignKind::Lvr, n, MONOID_HEADER);
    r.instances = monoids.len();
    let results: Vec<Result<Option<String>>> = monoids
        .par_iter()
        .map(|i| {
            let q = i.monoid.qu_base(QuKind::LvR)?;
            Ok(q.normality_witness(i.monoid.space())
                .map(|w| witness_text(&w)))
        })
        .collect();
    for (i, res) in monoids.iter().zip(results) {
        let (verdict, finding) = match res {
            Ok(None) => ("normal".to_string(), None),
            Ok(Some(w)) => ("not-normal".to_string(), Some(w)),
            Err(e) => ("base-error".to_string(), Some(e.to_string())),
        };
        r.rows.push(monoid_row(i, &verdict));
        if let Some(detail) = finding {
            r.findings.push(Violation {
                instance: i.id.clone(),
                detail,
            });
        }
    }
    r.stat("not_normal", r.findings.len());
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LvrSearch {
    /// `(n, instances checked)` for each size searched.
    pub checked: Vec<(usize, usize)>,
    /// First instance whose two-sided quasi-uniformity is not normal.
    pub witness: Option<Violation>,
}

impl fmt::Display for LvrSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, k) in &self.checked {
            writeln!(f, "checked\tn={n}\t{k}")?;
        }
        match &self.witness {
            Some(w) => write!(f, "witness\t{}\t{}", w.instance, w.detail),
            None => write!(f, "witness\tnone"),
        }
    }
}

/// Searches all monoids with open shifts and continuous multiplication up to
/// `max_n` for one whose `L∨R` quasi-uniformity is not normal. Sizes are
/// searched completely even after a witness is found so the counts are exact.
pub fn search_lvr(max_n: usize) -> Result<LvrSearch> {
    check_cap(max_n, MONOID_CAP)?;
    let mut out = LvrSearch {
        checked: vec![],
        witness: None,
    };
    for n in 1..=max_n {
        let report = lvr(n)?;
        out.checked.push((n, report.instances));
        if out.witness.is_none() {
            out.witness = report.findings.into_iter().next();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_counts_small() {
        for (n, &count) in LABELED_TOPOLOGIES.iter().enumerate().take(4).skip(1) {
            assert_eq!(enumerate_spaces(n).unwrap().len(), count);
        }
        assert_eq!(
            enumerate_spaces(5).unwrap_err(),
            Error::CapExceeded { n: 5, max: 4 }
        );
        assert_eq!(enumerate_spaces(0).unwrap_err(), Error::EmptyCarrier);
    }

    #[test]
    fn space_order_is_lexicographic() {
        let codes: Vec<String> = enumerate_spaces(2)
            .unwrap()
            .iter()
            .map(preorder_code)
            .collect();
        assert_eq!(codes, ["10/01", "10/11", "11/01", "11/11"]);
    }

    #[test]
    fn monoid_counts_two() {
        let c = monoid_census(2).unwrap();
        assert_eq!(c.tables, 2);
        assert_eq!(c.raw, 8);
        assert_eq!(c.continuous, 6);
        assert_eq!(c.continuous_open_shifts, 4);
    }

    #[test]
    fn diagram_three() {
        let r = run_campaign(CampaignKind::Diagram, 3).unwrap();
        assert_eq!(r.instances, 29);
        assert!(r.passed());
        let w = r
            .witnesses
            .iter()
            .find(|w| w.premise == Axiom::T1 && w.conclusion == Axiom::T0)
            .unwrap();
        assert!(matches!(w.status, WitnessStatus::Found { .. }));
    }

    #[test]
    fn reports_are_deterministic() {
        for kind in [CampaignKind::Diagram, CampaignKind::P2, CampaignKind::Lvr] {
            let a = run_campaign(kind, 3).unwrap().to_tsv();
            let b = run_campaign(kind, 3).unwrap().to_tsv();
            assert_eq!(a, b, "{kind}");
        }
    }

    #[test]
    fn lvr_search_one() {
        let s = search_lvr(1).unwrap();
        assert_eq!(s.checked, vec![(1, 1)]);
        assert!(s.witness.is_none());
    }
}
