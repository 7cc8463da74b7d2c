#![allow(dead_code)]

use std::collections::BTreeMap;

use qtop_core::urysohn::{EntourageChain, FiniteModel};
use qtop_core::{FinSpace, PointSet, Relation};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2026;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

/// Reflexive relation with each off-diagonal pair present with probability `p`.
pub fn random_reflexive(rng: &mut impl Rng, n: usize, p: f64) -> Relation {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Relation::diagonal_with(n, &pairs).unwrap()
}

pub fn random_preorder(rng: &mut impl Rng, n: usize) -> Relation {
    let p = rng.gen_range(0.0..0.6);
    random_reflexive(rng, n, p).transitive_closure()
}

pub fn random_space(rng: &mut impl Rng, n: usize) -> FinSpace {
    FinSpace::from_preorder(random_preorder(rng, n)).unwrap()
}

pub fn random_nonempty(rng: &mut impl Rng, n: usize) -> PointSet {
    loop {
        let a = PointSet::from_bits(rng.gen_range(0..1u32 << n));
        if !a.is_empty() {
            return a;
        }
    }
}

/// A valid chain above `m`: `U_d ⊇ m` at random, each parent is the square of
/// its child plus random pairs, tail `m`.
pub fn random_chain_parts(
    rng: &mut impl Rng,
    m: &Relation,
    depth: usize,
) -> (Relation, Vec<Relation>, Relation) {
    let n = m.n();
    let mut levels = vec![m.union(&random_reflexive(rng, n, 0.15)).unwrap()];
    for _ in 1..depth {
        let child = levels.last().unwrap();
        let parent = child
            .compose(child)
            .unwrap()
            .union(&random_reflexive(rng, n, 0.1))
            .unwrap();
        levels.push(parent);
    }
    let child = levels.last().unwrap();
    let top = child
        .compose(child)
        .unwrap()
        .union(&random_reflexive(rng, n, 0.1))
        .unwrap();
    levels.reverse();
    (top, levels, *m)
}

pub fn chain(
    model: &FiniteModel,
    top: Relation,
    levels: Vec<Relation>,
    tail: Relation,
) -> qtop_core::Result<EntourageChain<Relation>> {
    EntourageChain::new(model, top, levels, Some(tail))
}

/// The frozen census in `fixtures/counts.tsv`, keyed by row name.
pub fn frozen_counts() -> BTreeMap<String, Vec<usize>> {
    let text = include_str!("../../fixtures/counts.tsv");
    text.lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("count\t"))
        .map(|l| {
            let mut cols = l.split('\t');
            let key = cols.next().unwrap().to_string();
            (key, cols.map(|c| c.parse().unwrap()).collect())
        })
        .collect()
}

/// Every topology on `n ≤ 3` points as a sorted list of open sets, found by
/// brute force over all families of subsets.
pub fn brute_topologies(n: usize) -> Vec<Vec<u32>> {
    let subsets = 1u32 << n;
    let full = subsets - 1;
    let mut out = vec![];
    for family in 0u64..(1u64 << subsets) {
        let has = |s: u32| family >> s & 1 == 1;
        if !has(0) || !has(full) {
            continue;
        }
        let closed = (0..subsets).filter(|&a| has(a)).all(|a| {
            (0..subsets)
                .filter(|&b| has(b))
                .all(|b| has(a | b) && has(a & b))
        });
        if closed {
            out.push((0..subsets).filter(|&a| has(a)).collect());
        }
    }
    out.sort();
    out
}

pub fn opens_of(s: &FinSpace) -> Vec<u32> {
    let mut v: Vec<u32> = s.opens().iter().map(|o| o.bits()).collect();
    v.sort();
    v
}
