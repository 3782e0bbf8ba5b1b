mod common;

use common::*;
use hopfrad::exactla::vector;
use hopfrad::hradical::{wh_membership, Options, WhVerdict};
use proptest::prelude::*;

fn member(v: &WhVerdict) -> Option<bool> {
    match v {
        WhVerdict::Nilpotent { .. } => Some(true),
        WhVerdict::NotNilpotent { .. } => Some(false),
        WhVerdict::Unknown { .. } => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_is_scale_invariant(idx in 0usize..8, xs in prop::collection::vec(-6i64..=6, 4), c in 1i64..=6, seed in any::<u64>()) {
        let fx = finite_corpus();
        let m = &fx[idx % fx.len()].module;
        let f = m.field();
        prop_assume!(!(c as u64).is_multiple_of(f.characteristic()));
        let a = vector::from_i64s(f, &xs[..m.dim_r()]);
        let ca = vector::scale(&f.from_i64(c), &a);
        let opts = Options { seed, ..Options::default() };
        let x = wh_membership(m, &a, None, &opts).unwrap();
        let y = wh_membership(m, &ca, None, &opts).unwrap();
        prop_assert_eq!(member(&x.verdict), member(&y.verdict));
        prop_assert_eq!(x.exact_member, y.exact_member);
        prop_assert_eq!(x.oracle_member, y.oracle_member);
    }

    #[test]
    fn sources_agree_over_q(idx in 0usize..5, xs in prop::collection::vec(-5i64..=5, 4), seed in any::<u64>()) {
        let fx: Vec<_> = corpus().into_iter().filter(|f| !f.module.field().is_finite()).collect();
        let m = &fx[idx % fx.len()].module;
        let a = vector::from_i64s(m.field(), &xs[..m.dim_r()]);
        let opts = Options { seed, ..Options::default() };
        let w = wh_membership(m, &a, None, &opts).unwrap();
        prop_assert!(w.oracle_member.is_some());
        prop_assert_eq!(member(&w.verdict), w.oracle_member);
    }
}
