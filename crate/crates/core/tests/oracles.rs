mod common;

use proptest::prelude::*;
use qtop_core::campaigns::{enumerate_monoids, enumerate_spaces, MonoidFilter};
use qtop_core::quniform::canonical_qu;
use qtop_core::separation::{self, literal};
use qtop_core::urysohn::FiniteModel;
use qtop_core::{
    qtop, Axiom, FinSpace, FiniteQuasiUniformity, PointSet, QuKind, Relation, UrysohnFunction,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=3 {
        let mut ours: Vec<Vec<u32>> = enumerate_spaces(n)
            .unwrap()
            .iter()
            .map(common::opens_of)
            .collect();
        ours.sort();
        ours.dedup();
        assert_eq!(ours, common::brute_topologies(n), "n={n}");
    }
}

#[test]
fn fast_separation_matches_literal() {
    for n in 1..=3 {
        for s in enumerate_spaces(n).unwrap() {
            let fast = separation::classify(&s);
            let lit = literal::classify(&s);
            for a in Axiom::ALL {
                assert_eq!(fast.get(a), lit.get(a), "{a:?} on {}", qtop::dump_space(&s));
            }
        }
    }
}

#[test]
fn monoid_fast_checks_match_brute() {
    for n in 1..=3 {
        for m in enumerate_monoids(n, MonoidFilter::NONE).unwrap() {
            let t = &m.monoid;
            assert_eq!(
                t.multiplication_continuous(),
                t.multiplication_continuous_brute(),
                "{}",
                m.id
            );
            assert_eq!(t.has_open_shifts(), t.has_open_shifts_brute(), "{}", m.id);
        }
    }
}

#[test]
fn q_is_symmetric_and_coarser() {
    for n in 1..=3 {
        for m in enumerate_monoids(n, MonoidFilter::OPEN_SHIFTS).unwrap() {
            let q = m.monoid.qu_minimal(QuKind::Q);
            assert!(q.is_symmetric(), "{}", m.id);
            let tq = FiniteQuasiUniformity::principal(q)
                .unwrap()
                .induced_topology();
            assert!(tq.is_coarser_than(m.monoid.space()), "{}", m.id);
        }
    }
}

#[test]
fn para_functions_vanish_on_source() {
    for n in 1..=3 {
        for m in enumerate_monoids(n, MonoidFilter::OPEN_SHIFTS).unwrap() {
            let s = m.monoid.space();
            let e = m.monoid.unit();
            for u in s.open_neighborhoods(e) {
                for bits in 1..1u32 << n {
                    let a = PointSet::from_bits(bits);
                    let f = m.monoid.para_function(a, u, 3).unwrap();
                    assert!(f.zero_on_source, "{} A={a} U={u}", m.id);
                }
            }
        }
    }
}

#[test]
fn random_normality_oracle() {
    println!("seed {:#x}", common::SEED);
    let mut rng = common::rng(100);
    for _ in 0..300 {
        let n = rand::Rng::gen_range(&mut rng, 1..=5);
        let base = vec![
            common::random_preorder(&mut rng, n),
            common::random_preorder(&mut rng, n),
        ];
        let q = FiniteQuasiUniformity::normalize(base).unwrap();
        let ambient = common::random_space(&mut rng, n);
        assert_eq!(q.is_normal(&ambient), q.is_normal_brute(&ambient));
        assert_eq!(
            q.is_normal(&ambient),
            q.normality_witness(&ambient).is_none()
        );
    }
}

fn preorder_strategy() -> impl Strategy<Value = Relation> {
    (1usize..=6, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        common::random_preorder(&mut rng, n)
    })
}

proptest! {
    #[test]
    fn closure_interior_duality(m in preorder_strategy(), bits in any::<u32>()) {
        let s = FinSpace::from_preorder(m).unwrap();
        let n = s.n();
        let a = PointSet::from_bits(bits & ((1u32 << n) - 1));
        prop_assert_eq!(s.closure(a), s.interior(a.complement(n)).complement(n));
        prop_assert!(s.is_open(s.interior(a)));
        prop_assert!(s.is_closed(s.closure(a)));
        prop_assert!(a.is_subset(s.closure(a)));
    }

    #[test]
    fn opens_determine_the_space(m in preorder_strategy()) {
        let s = FinSpace::from_preorder(m).unwrap();
        let t = FinSpace::from_opens(s.n(), &s.opens()).unwrap();
        prop_assert_eq!(s, t);
    }

    #[test]
    fn dump_parse_round_trip(m in preorder_strategy()) {
        let s = FinSpace::from_preorder(m).unwrap();
        prop_assert_eq!(qtop::parse_space(&qtop::dump_space(&s)).unwrap(), s);
        prop_assert_eq!(qtop::parse_space(&qtop::dump_space_opens(&s)).unwrap(), s);
    }

    #[test]
    fn clopen_partition_covers(m in preorder_strategy()) {
        let s = FinSpace::from_preorder(m).unwrap();
        let parts = s.clopen_partition();
        let mut seen = PointSet::EMPTY;
        for p in parts {
            prop_assert!(s.is_clopen(p));
            prop_assert!(!p.intersects(seen));
            seen = PointSet::from_bits(seen.bits() | p.bits());
        }
        prop_assert_eq!(seen, s.carrier());
    }

    #[test]
    fn canonical_qu_induces_the_topology(m in preorder_strategy()) {
        let s = FinSpace::from_preorder(m).unwrap();
        prop_assert_eq!(canonical_qu(&s).induced_topology(), s);
    }

    #[test]
    fn evaluate_matches_scan(m in preorder_strategy(), seed in any::<u64>()) {
        let s = FinSpace::from_preorder(m).unwrap();
        let n = s.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let depth = rand::Rng::gen_range(&mut rng, 1..=4);
        let model = FiniteModel::new(s);
        let (top, levels, tail) = common::random_chain_parts(&mut rng, s.preorder(), depth);
        let chain = common::chain(&model, top, levels, tail).unwrap();
        let a = common::random_nonempty(&mut rng, n);
        let f = UrysohnFunction::new(&model, chain, a, depth as u32).unwrap();
        for z in 0..n {
            prop_assert_eq!(f.evaluate(&z), f.evaluate_scan(&z));
        }
    }
}
