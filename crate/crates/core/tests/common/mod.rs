#![allow(dead_code)]

use hopfrad::algcore::fixtures::{builtin_corpus, Fixture};
use hopfrad::exactla::{enumerate_subspaces, vector, Subspace, Vector};
use hopfrad::haction::HModuleAlgebra;
use hopfrad::hideal::{ideal_product, is_h_ideal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CAP: u128 = 10_000;

pub fn corpus() -> Vec<Fixture> {
    builtin_corpus().unwrap()
}

pub fn finite_corpus() -> Vec<Fixture> {
    corpus().into_iter().filter(|f| f.module.field().is_finite()).collect()
}

pub fn fixture(name: &str) -> Fixture {
    corpus().into_iter().find(|f| f.name == name).unwrap()
}

/// A random subspace spanned by up to `dim` vectors with small entries.
pub fn random_subspace(m: &HModuleAlgebra, rng: &mut ChaCha8Rng) -> Subspace {
    let n = m.dim_r();
    let k = rng.gen_range(0..=n);
    let vs: Vec<Vector> = (0..k)
        .map(|_| {
            let xs: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            vector::from_i64s(m.field(), &xs)
        })
        .collect();
    Subspace::span(m.field(), vs, n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Least H-ideal containing `e`, as the intersection of every enumerated
/// H-ideal that contains it.
pub fn least_h_ideal_containing(ideals: &[Subspace], e: &Subspace) -> Subspace {
    let mut acc = Subspace::full(e.field(), e.ambient_dim());
    for i in ideals {
        if e.is_subspace_of(i).unwrap() {
            acc = acc.intersect(i).unwrap();
        }
    }
    acc
}

/// H-stable subspaces `C ⊆ B` with `BC + CB ⊆ C`.
pub fn h_ideals_of(m: &HModuleAlgebra, b: &Subspace) -> Vec<Subspace> {
    enumerate_subspaces(m.dim_r(), m.field(), CAP)
        .unwrap()
        .filter(|c| {
            c.is_subspace_of(b).unwrap()
                && m.is_h_stable(c)
                && ideal_product(m, b, c).unwrap().is_subspace_of(c).unwrap()
                && ideal_product(m, c, b).unwrap().is_subspace_of(c).unwrap()
        })
        .collect()
}

pub fn all_h_ideals(m: &HModuleAlgebra) -> Vec<Subspace> {
    enumerate_subspaces(m.dim_r(), m.field(), CAP)
        .unwrap()
        .filter(|s| is_h_ideal(m, s))
        .collect()
}
