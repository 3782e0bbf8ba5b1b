mod common;

use common::*;
use hopfrad::exactla::{vector, Subspace};
use hopfrad::hideal::{h_ideal_generated, ideal_power, is_h_ideal};
use proptest::prelude::*;

fn small_rows(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, dim), 0..=dim)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_is_least_over_finite_fields(idx in 0usize..8, rows in small_rows(4)) {
        let fx = finite_corpus();
        let m = &fx[idx % fx.len()].module;
        let n = m.dim_r();
        let vs = rows.iter().map(|r| vector::from_i64s(m.field(), &r[..n]));
        let e = Subspace::span(m.field(), vs, n).unwrap();
        let gen = h_ideal_generated(m, &e).unwrap().into_space();
        prop_assert!(is_h_ideal(m, &gen));
        prop_assert!(e.is_subspace_of(&gen).unwrap());
        prop_assert_eq!(gen, least_h_ideal_containing(&all_h_ideals(m), &e));
    }

    #[test]
    fn generated_is_idempotent_over_q(idx in 0usize..5, rows in small_rows(4)) {
        let fx: Vec<_> = corpus().into_iter().filter(|f| !f.module.field().is_finite()).collect();
        let m = &fx[idx % fx.len()].module;
        let n = m.dim_r();
        let vs = rows.iter().map(|r| vector::from_i64s(m.field(), &r[..n]));
        let e = Subspace::span(m.field(), vs, n).unwrap();
        let gen = h_ideal_generated(m, &e).unwrap().into_space();
        prop_assert!(is_h_ideal(m, &gen));
        prop_assert!(e.is_subspace_of(&gen).unwrap());
        let again = h_ideal_generated(m, &gen).unwrap().into_space();
        prop_assert_eq!(again, gen);
    }
}

#[test]
fn cube_of_generated_ideal_lies_in_c() {
    for fx in finite_corpus() {
        let m = &fx.module;
        for b in all_h_ideals(m) {
            for c in h_ideals_of(m, &b) {
                let gen = h_ideal_generated(m, &c).unwrap().into_space();
                let cube = ideal_power(m, &gen, 3).unwrap();
                assert!(cube.is_subspace_of(&c).unwrap(), "{}: (C)^3 not in C for C = {c}", fx.name);
            }
        }
    }
}
