//! Separation axioms on finite spaces.
//!
//! Neighborhood quantifiers are evaluated on minimal opens: `U_x` is the
//! smallest neighborhood of `x`, and closure, interior and `int∘cl` are
//! monotone, so "some neighborhood works" and "every neighborhood is beaten"
//! both reduce to `U_x`. Function-valued axioms use the clopen partition: a
//! continuous real function on a finite space is constant on clopen classes and
//! every clopen indicator is continuous. [`literal`] keeps definition-level
//! versions of every axiom as an oracle.

use std::fmt;

use crate::fintop::FinSpace;
use crate::relcore::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    T0,
    T1,
    SemiHausdorff,
    Hausdorff,
    FunctionallyHausdorff,
    Semiregular,
    Regular,
    CompletelyRegular,
    T3,
    SemiT3,
    Tychonoff,
    Submetrizable,
}

impl Axiom {
    pub const ALL: [Axiom; 12] = [
        Axiom::T0,
        Axiom::T1,
        Axiom::SemiHausdorff,
        Axiom::Hausdorff,
        Axiom::FunctionallyHausdorff,
        Axiom::Semiregular,
        Axiom::Regular,
        Axiom::CompletelyRegular,
        Axiom::T3,
        Axiom::SemiT3,
        Axiom::Tychonoff,
        Axiom::Submetrizable,
    ];

    /// Column label used in TSV output.
    pub fn label(self) -> &'static str {
        match self {
            Axiom::T0 => "T0",
            Axiom::T1 => "T1",
            Axiom::SemiHausdorff => "sH",
            Axiom::Hausdorff => "T2",
            Axiom::FunctionallyHausdorff => "fH",
            Axiom::Semiregular => "sR",
            Axiom::Regular => "R",
            Axiom::CompletelyRegular => "cR",
            Axiom::T3 => "T3",
            Axiom::SemiT3 => "T12_3",
            Axiom::Tychonoff => "T3_12",
            Axiom::Submetrizable => "sM",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Implications of the general separation diagram, as `(premise, conclusion)`.
pub const DIAGRAM: [(Axiom, Axiom); 15] = [
    (Axiom::T1, Axiom::T0),
    (Axiom::SemiHausdorff, Axiom::T1),
    (Axiom::SemiT3, Axiom::SemiHausdorff),
    (Axiom::SemiT3, Axiom::Semiregular),
    (Axiom::Hausdorff, Axiom::SemiHausdorff),
    (Axiom::T3, Axiom::Hausdorff),
    (Axiom::T3, Axiom::Regular),
    (Axiom::T3, Axiom::SemiT3),
    (Axiom::Regular, Axiom::Semiregular),
    (Axiom::Submetrizable, Axiom::FunctionallyHausdorff),
    (Axiom::FunctionallyHausdorff, Axiom::Hausdorff),
    (Axiom::Tychonoff, Axiom::FunctionallyHausdorff),
    (Axiom::Tychonoff, Axiom::T3),
    (Axiom::Tychonoff, Axiom::CompletelyRegular),
    (Axiom::CompletelyRegular, Axiom::Regular),
];

/// Which separation axioms a space satisfies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Classification {
    pub t0: bool,
    pub t1: bool,
    pub semi_hausdorff: bool,
    pub hausdorff: bool,
    pub functionally_hausdorff: bool,
    pub semiregular: bool,
    pub regular: bool,
    pub completely_regular: bool,
    pub t3: bool,
    pub semi_t3: bool,
    pub tychonoff: bool,
    pub submetrizable: bool,
    /// Filled by [`crate::quniform::classify_with_normality`].
    pub normally_quasi_uniformizable: Option<bool>,
}

impl Classification {
    pub fn get(&self, axiom: Axiom) -> bool {
        match axiom {
            Axiom::T0 => self.t0,
            Axiom::T1 => self.t1,
            Axiom::SemiHausdorff => self.semi_hausdorff,
            Axiom::Hausdorff => self.hausdorff,
            Axiom::FunctionallyHausdorff => self.functionally_hausdorff,
            Axiom::Semiregular => self.semiregular,
            Axiom::Regular => self.regular,
            Axiom::CompletelyRegular => self.completely_regular,
            Axiom::T3 => self.t3,
            Axiom::SemiT3 => self.semi_t3,
            Axiom::Tychonoff => self.tychonoff,
            Axiom::Submetrizable => self.submetrizable,
        }
    }

    pub fn set(&mut self, axiom: Axiom, value: bool) {
        let slot = match axiom {
            Axiom::T0 => &mut self.t0,
            Axiom::T1 => &mut self.t1,
            Axiom::SemiHausdorff => &mut self.semi_hausdorff,
            Axiom::Hausdorff => &mut self.hausdorff,
            Axiom::FunctionallyHausdorff => &mut self.functionally_hausdorff,
            Axiom::Semiregular => &mut self.semiregular,
            Axiom::Regular => &mut self.regular,
            Axiom::CompletelyRegular => &mut self.completely_regular,
            Axiom::T3 => &mut self.t3,
            Axiom::SemiT3 => &mut self.semi_t3,
            Axiom::Tychonoff => &mut self.tychonoff,
            Axiom::Submetrizable => &mut self.submetrizable,
        };
        *slot = value;
    }

    /// Header line matching [`Classification::tsv_row`].
    pub fn tsv_header() -> String {
        let mut cols = vec!["id", "n"];
        cols.extend(Axiom::ALL.iter().map(|a| a.label()));
        cols.push("nqu");
        cols.join("\t")
    }

    /// `id n T0 T1 sH T2 fH sR R cR T3 T12_3 T3_12 sM nqu`, tab separated.
    /// An unknown `nqu` is written as `-`.
    pub fn tsv_row(&self, id: &str, n: usize) -> String {
        let mut cols = vec![id.to_string(), n.to_string()];
        cols.extend(
            Axiom::ALL
                .iter()
                .map(|&a| if self.get(a) { "1" } else { "0" }.to_string()),
        );
        cols.push(match self.normally_quasi_uniformizable {
            Some(true) => "1".into(),
            Some(false) => "0".into(),
            None => "-".into(),
        });
        cols.join("\t")
    }
}

fn distinct_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
}

pub fn is_t0(s: &FinSpace) -> bool {
    distinct_pairs(s.n())
        .all(|(x, y)| !(s.minimal_open(x).contains(y) && s.minimal_open(y).contains(x)))
}

pub fn is_t1(s: &FinSpace) -> bool {
    distinct_pairs(s.n()).all(|(x, y)| !s.minimal_open(x).contains(y))
}

pub fn is_hausdorff(s: &FinSpace) -> bool {
    distinct_pairs(s.n()).all(|(x, y)| !s.closure(s.minimal_open(x)).contains(y))
}

pub fn is_semi_hausdorff(s: &FinSpace) -> bool {
    distinct_pairs(s.n()).all(|(x, y)| !s.interior_of_closure(s.minimal_open(x)).contains(y))
}

pub fn is_regular(s: &FinSpace) -> bool {
    (0..s.n()).all(|x| {
        let u = s.minimal_open(x);
        s.closure(u).is_subset(u)
    })
}

pub fn is_semiregular(s: &FinSpace) -> bool {
    (0..s.n()).all(|x| {
        let u = s.minimal_open(x);
        s.interior_of_closure(u).is_subset(u)
    })
}

pub fn is_completely_regular(s: &FinSpace) -> bool {
    let blocks = s.clopen_partition();
    (0..s.n()).all(|x| {
        let class = blocks
            .iter()
            .find(|b| b.contains(x))
            .copied()
            .unwrap_or_default();
        class.is_subset(s.minimal_open(x))
    })
}

pub fn is_functionally_hausdorff(s: &FinSpace) -> bool {
    s.clopen_partition().iter().all(|b| b.len() == 1)
}

/// Computes every flag except normal quasi-uniformizability.
pub fn classify(s: &FinSpace) -> Classification {
    let t1 = is_t1(s);
    let semiregular = is_semiregular(s);
    let regular = is_regular(s);
    let completely_regular = is_completely_regular(s);
    let functionally_hausdorff = is_functionally_hausdorff(s);
    Classification {
        t0: is_t0(s),
        t1,
        semi_hausdorff: is_semi_hausdorff(s),
        hausdorff: is_hausdorff(s),
        functionally_hausdorff,
        semiregular,
        regular,
        completely_regular,
        t3: regular && t1,
        semi_t3: semiregular && t1,
        tychonoff: completely_regular && t1,
        // Finite metric spaces are discrete, so a continuous metric exists
        // exactly when continuous functions separate points.
        submetrizable: functionally_hausdorff,
        normally_quasi_uniformizable: None,
    }
}

/// Diagram arrows that the record contradicts.
pub fn diagram_violations(rec: &Classification) -> Vec<(Axiom, Axiom)> {
    DIAGRAM
        .iter()
        .copied()
        .filter(|&(p, q)| rec.get(p) && !rec.get(q))
        .collect()
}

pub fn verify_diagram(rec: &Classification) -> bool {
    diagram_violations(rec).is_empty()
}

/// Definition-level versions of the axioms, quantifying over every
/// neighborhood (any superset of an open set around the point) and, for the
/// function axioms, over every continuous map into the chain `{0, ½, 1}`.
/// Exponential; intended for cross-checking on small spaces.
pub mod literal {
    use super::*;

    /// All neighborhoods of `x`: sets containing some open set around `x`.
    pub fn neighborhoods(s: &FinSpace, x: usize) -> Vec<PointSet> {
        PointSet::all_subsets(s.n())
            .filter(|&a| s.interior(a).contains(x))
            .collect()
    }

    fn open_sets_containing_exactly_one(s: &FinSpace, x: usize, y: usize) -> bool {
        s.opens().iter().any(|o| o.contains(x) != o.contains(y))
    }

    pub fn t0(s: &FinSpace) -> bool {
        distinct_pairs(s.n()).all(|(x, y)| open_sets_containing_exactly_one(s, x, y))
    }

    fn pointwise<F: Fn(PointSet) -> PointSet>(s: &FinSpace, sep: F) -> bool {
        distinct_pairs(s.n())
            .all(|(x, y)| neighborhoods(s, x).into_iter().any(|u| !sep(u).contains(y)))
    }

    pub fn t1(s: &FinSpace) -> bool {
        pointwise(s, |u| u)
    }

    pub fn hausdorff(s: &FinSpace) -> bool {
        pointwise(s, |u| s.closure(u))
    }

    pub fn semi_hausdorff(s: &FinSpace) -> bool {
        pointwise(s, |u| s.interior_of_closure(u))
    }

    fn local<F: Fn(PointSet) -> PointSet>(s: &FinSpace, shrink: F) -> bool {
        (0..s.n()).all(|x| {
            let nbhds = neighborhoods(s, x);
            nbhds
                .iter()
                .all(|&o| nbhds.iter().any(|&u| shrink(u).is_subset(o)))
        })
    }

    pub fn regular(s: &FinSpace) -> bool {
        local(s, |u| s.closure(u))
    }

    /// Literal semiregularity: every neighborhood `O` of `x` contains
    /// `int cl U` for some neighborhood `U` of `x`.
    pub fn semiregular(s: &FinSpace) -> bool {
        local(s, |u| s.interior_of_closure(u))
    }

    /// Values `0, ½, 1` encoded as `0, 1, 2`.
    pub type ChainFunction = Vec<u8>;

    /// Every continuous `f: X → {0, ½, 1} ⊂ [0,1]`. The codomain is discrete
    /// as a subspace of `[0,1]`, so continuity means every fiber is open.
    pub fn continuous_chain_functions(s: &FinSpace) -> Vec<ChainFunction> {
        let n = s.n();
        let total = 3usize.pow(n as u32);
        (0..total)
            .map(|mut code| {
                (0..n)
                    .map(|_| {
                        let v = (code % 3) as u8;
                        code /= 3;
                        v
                    })
                    .collect::<ChainFunction>()
            })
            .filter(|f| {
                (0..3u8).all(|v| {
                    let fiber: PointSet = (0..n).filter(|&z| f[z] == v).collect();
                    s.is_open(fiber)
                })
            })
            .collect()
    }

    pub fn functionally_hausdorff(s: &FinSpace) -> bool {
        let fs = continuous_chain_functions(s);
        distinct_pairs(s.n()).all(|(x, y)| fs.iter().any(|f| f[x] != f[y]))
    }

    pub fn completely_regular(s: &FinSpace) -> bool {
        let fs = continuous_chain_functions(s);
        (0..s.n()).all(|x| {
            neighborhoods(s, x).into_iter().all(|o| {
                fs.iter().any(|f| {
                    let below_one: PointSet = (0..s.n()).filter(|&z| f[z] < 2).collect();
                    f[x] == 0 && below_one.is_subset(o)
                })
            })
        })
    }

    pub fn classify(s: &FinSpace) -> Classification {
        let t1 = t1(s);
        let semiregular = semiregular(s);
        let regular = regular(s);
        let completely_regular = completely_regular(s);
        let functionally_hausdorff = functionally_hausdorff(s);
        Classification {
            t0: t0(s),
            t1,
            semi_hausdorff: semi_hausdorff(s),
            hausdorff: hausdorff(s),
            functionally_hausdorff,
            semiregular,
            regular,
            completely_regular,
            t3: regular && t1,
            semi_t3: semiregular && t1,
            tychonoff: completely_regular && t1,
            submetrizable: functionally_hausdorff,
            normally_quasi_uniformizable: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcore::Relation;

    fn set(points: &[usize]) -> PointSet {
        points.iter().copied().collect()
    }

    fn w3() -> FinSpace {
        FinSpace::from_opens(
            3,
            &[
                set(&[]),
                set(&[0]),
                set(&[1]),
                set(&[0, 1]),
                set(&[0, 1, 2]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sierpinski_is_only_t0() {
        let c = classify(&FinSpace::sierpinski());
        assert!(c.t0);
        for axiom in Axiom::ALL.into_iter().filter(|&a| a != Axiom::T0) {
            assert!(!c.get(axiom), "{axiom} should fail on Sierpiński");
        }
        assert!(verify_diagram(&c));
    }

    #[test]
    fn indiscrete_is_regular_not_t0() {
        let c = classify(&FinSpace::indiscrete(2).unwrap());
        assert!(!c.t0);
        assert!(c.semiregular && c.regular && c.completely_regular);
        assert!(verify_diagram(&c));
    }

    #[test]
    fn discrete_satisfies_everything() {
        for n in 1..=5 {
            let c = classify(&FinSpace::discrete(n).unwrap());
            assert!(Axiom::ALL.iter().all(|&a| c.get(a)));
            assert!(verify_diagram(&c));
        }
    }

    #[test]
    fn w3_is_semiregular_but_not_regular() {
        let c = classify(&w3());
        assert!(c.semiregular);
        assert!(!c.regular);
        assert!(!c.completely_regular);
    }

    #[test]
    fn artificial_record_breaks_diagram() {
        let rec = Classification {
            hausdorff: true,
            ..Default::default()
        };
        assert!(!verify_diagram(&rec));
        assert!(diagram_violations(&rec).contains(&(Axiom::Hausdorff, Axiom::SemiHausdorff)));
    }

    #[test]
    fn literal_matches_fast_on_examples() {
        for s in [
            FinSpace::sierpinski(),
            FinSpace::indiscrete(3).unwrap(),
            FinSpace::discrete(3).unwrap(),
            w3(),
            FinSpace::from_preorder(Relation::diagonal_with(3, &[(0, 1), (0, 2)]).unwrap())
                .unwrap(),
        ] {
            assert_eq!(literal::classify(&s), classify(&s));
        }
    }

    #[test]
    fn tsv_row_layout() {
        let mut c = classify(&FinSpace::sierpinski());
        assert_eq!(
            Classification::tsv_header(),
            "id\tn\tT0\tT1\tsH\tT2\tfH\tsR\tR\tcR\tT3\tT12_3\tT3_12\tsM\tnqu"
        );
        assert_eq!(
            c.tsv_row("s", 2),
            "s\t2\t1\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\t0\t-"
        );
        c.normally_quasi_uniformizable = Some(true);
        assert!(c.tsv_row("s", 2).ends_with("\t1"));
    }
}
