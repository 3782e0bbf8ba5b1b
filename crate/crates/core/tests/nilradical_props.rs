//! Nilradical backends against each other on subalgebras of matrix algebras
//! generated by random matrices.

use hopfrad::algcore::FiniteDimAlgebra;
use hopfrad::exactla::{Matrix, Subspace, Vector};
use hopfrad::hradical::{nilradical_with, NilBackend};
use hopfrad::FieldSpec;
use proptest::prelude::*;

fn flat(m: &Matrix) -> Vector {
    m.rows().iter().flatten().cloned().collect()
}

fn unflat(f: FieldSpec, n: usize, v: &[hopfrad::Scalar]) -> Matrix {
    Matrix::from_rows(f, n, v.chunks(n).map(|c| c.to_vec()).collect()).unwrap()
}

/// The (possibly non-unital) subalgebra of `M_n(F_p)` generated by `gens`,
/// with structure constants in its RREF basis.
fn generated_subalgebra(f: FieldSpec, n: usize, gens: &[Matrix]) -> FiniteDimAlgebra {
    let mut span = Subspace::span(f, gens.iter().map(flat), n * n).unwrap();
    loop {
        let basis: Vec<Matrix> = span.basis().iter().map(|v| unflat(f, n, v)).collect();
        let products = basis.iter().flat_map(|a| basis.iter().map(move |b| flat(&a.mul(b).unwrap())));
        let next = span.sum(&Subspace::span(f, products, n * n).unwrap()).unwrap();
        if next == span {
            break;
        }
        span = next;
    }
    let basis: Vec<Matrix> = span.basis().iter().map(|v| unflat(f, n, v)).collect();
    let d = basis.len();
    let coords = Matrix::from_rows(f, d, (0..n * n).map(|r| span.basis().iter().map(|b| b[r].clone()).collect()).collect())
        .unwrap();
    let mut triples = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let c = coords.solve(&flat(&a.mul(b).unwrap())).unwrap().expect("closed under products");
            for (k, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    triples.push((i, j, k, x));
                }
            }
        }
    }
    FiniteDimAlgebra::from_triples(f, d, &triples).unwrap()
}

fn matrices(p: u64, n: usize, upper: bool) -> impl Strategy<Value = Vec<Vec<u64>>> {
    prop::collection::vec(prop::collection::vec(0..p, n * n), 1..=2).prop_map(move |ms| {
        ms.into_iter()
            .map(|mut m| {
                if upper {
                    for r in 0..n {
                        for c in 0..r {
                            m[r * n + c] = 0;
                        }
                    }
                }
                m
            })
            .collect()
    })
}

fn case(p: u64, n: usize, gens: Vec<Vec<u64>>) -> Result<(), TestCaseError> {
    let f = FieldSpec::prime(p).unwrap();
    let gens: Vec<Matrix> = gens
        .iter()
        .map(|g| unflat(f, n, &g.iter().map(|&x| f.from_i64(x as i64)).collect::<Vec<_>>()))
        .collect();
    let a = generated_subalgebra(f, n, &gens);
    prop_assume!((p as u128).pow(a.dim() as u32) <= 10_000);
    let exhaustive = nilradical_with(&a, NilBackend::Exhaustive, 10_000).unwrap().space;
    let modular = nilradical_with(&a, NilBackend::Modular, 10_000).unwrap().space;
    prop_assert_eq!(&modular, &exhaustive);
    if p > a.dim() as u64 {
        let trace = nilradical_with(&a, NilBackend::Trace, 10_000).unwrap().space;
        prop_assert_eq!(&trace, &exhaustive);
    }
    prop_assert!(a.is_nilpotent(&exhaustive));
    let q = a.quotient(&exhaustive).unwrap();
    prop_assert!(nilradical_with(&q, NilBackend::Exhaustive, 10_000).unwrap().space.is_zero());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn upper_triangular_f2(gens in matrices(2, 3, true)) { case(2, 3, gens)?; }

    #[test]
    fn upper_triangular_f3(gens in matrices(3, 3, true)) { case(3, 3, gens)?; }

    #[test]
    fn full_2x2_f5(gens in matrices(5, 2, false)) { case(5, 2, gens)?; }

    #[test]
    fn full_2x2_f2(gens in matrices(2, 2, false)) { case(2, 2, gens)?; }
}
