//! Builtin H-module algebras used as the regression corpus.

use std::collections::BTreeMap;

use crate::algcore::{FiniteDimAlgebra, HopfAlgebra};
use crate::error::Result;
use crate::exactla::vector::from_i64s;
use crate::field::FieldSpec;
use crate::haction::{CheckLevel, HModuleAlgebra};

/// `k[x]/(x^2)` on the basis `{1, x}`.
pub fn dual_numbers(f: FieldSpec) -> Result<FiniteDimAlgebra> {
    let o = f.one();
    FiniteDimAlgebra::from_triples(f, 2, &[(0, 0, 0, o.clone()), (0, 1, 1, o.clone()), (1, 0, 1, o)])?
        .with_unit(from_i64s(f, &[1, 0]))
}

/// Upper-triangular 2x2 matrices on `{e11, e12, e22}`.
pub fn upper_triangular(f: FieldSpec) -> Result<FiniteDimAlgebra> {
    let o = f.one();
    FiniteDimAlgebra::from_triples(
        f,
        3,
        &[(0, 0, 0, o.clone()), (0, 1, 1, o.clone()), (1, 2, 1, o.clone()), (2, 2, 2, o)],
    )?
    .with_unit(from_i64s(f, &[1, 0, 1]))
}

/// Full 2x2 matrices on `{e11, e12, e21, e22}`.
pub fn matrix_2x2(f: FieldSpec) -> Result<FiniteDimAlgebra> {
    let idx = |i: usize, j: usize| 2 * i + j;
    let mut t = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for l in 0..2 {
                t.push((idx(i, j), idx(j, l), idx(i, l), f.one()));
            }
        }
    }
    FiniteDimAlgebra::from_triples(f, 4, &t)?.with_unit(from_i64s(f, &[1, 0, 0, 1]))
}

/// E1: the trivial Hopf algebra acting on upper-triangular matrices.
pub fn e1(f: FieldSpec) -> Result<HModuleAlgebra> {
    HModuleAlgebra::trivial_action(upper_triangular(f)?, HopfAlgebra::trivial(f))
}

/// E2: `kC_2` on `k[x]/(x^2)` by `g · x = -x`.
pub fn e2(f: FieldSpec) -> Result<HModuleAlgebra> {
    let o = f.one();
    HModuleAlgebra::from_triples(
        dual_numbers(f)?,
        HopfAlgebra::group_c2(f),
        &[(0, 0, 0, o.clone()), (0, 1, 1, o.clone()), (1, 0, 0, o.clone()), (1, 1, 1, -o)],
    )
}

/// E3: `kC_2` acting trivially on `M_2(k)`.
pub fn e3(f: FieldSpec) -> Result<HModuleAlgebra> {
    HModuleAlgebra::trivial_action(matrix_2x2(f)?, HopfAlgebra::group_c2(f))
}

/// E4: `(kC_2)^*` on `k[x]/(x^2)` through the grading `deg x = 1`.
pub fn e4(f: FieldSpec) -> Result<HModuleAlgebra> {
    let o = f.one();
    HModuleAlgebra::from_triples(dual_numbers(f)?, HopfAlgebra::dual_c2(f), &[(0, 0, 0, o.clone()), (1, 1, 1, o)])
}

/// E5: Sweedler's algebra on `k[x]/(x^2)` by `g · x = -x`, `y · x = 1`, `y · 1 = 0`.
pub fn e5(f: FieldSpec) -> Result<HModuleAlgebra> {
    let o = f.one();
    HModuleAlgebra::from_triples(
        dual_numbers(f)?,
        HopfAlgebra::sweedler(f)?,
        &[
            (0, 0, 0, o.clone()),
            (0, 1, 1, o.clone()),
            (1, 0, 0, o.clone()),
            (1, 1, 1, -o.clone()),
            (2, 1, 0, o.clone()),
            (3, 1, 0, o),
        ],
    )
}

/// A named corpus entry with its expected validation level and the radicals
/// it is known to have (basis rows over integers).
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub level: CheckLevel,
    pub module: HModuleAlgebra,
    pub expected: BTreeMap<String, Vec<Vec<i64>>>,
}

fn expect(pairs: &[(&str, &[&[i64]])]) -> BTreeMap<String, Vec<Vec<i64>>> {
    pairs
        .iter()
        .map(|(k, rows)| (k.to_string(), rows.iter().map(|r| r.to_vec()).collect()))
        .collect()
}

fn fixture(
    name: &str,
    description: &str,
    module: HModuleAlgebra,
    expected: BTreeMap<String, Vec<Vec<i64>>>,
) -> Fixture {
    Fixture {
        name: name.into(),
        description: description.into(),
        level: CheckLevel::Unital,
        module,
        expected,
    }
}

/// E1..E5 over ℚ, finite-field twins of E2/E4/E5 over F_3 and F_5, and the
/// characteristic-2 variants of E2 and E3.
pub fn builtin_corpus() -> Result<Vec<Fixture>> {
    let q = FieldSpec::Rationals;
    let f2 = FieldSpec::prime(2)?;
    let f3 = FieldSpec::prime(3)?;
    let f5 = FieldSpec::prime(5)?;
    let x: &[&[i64]] = &[&[0, 1]];
    let zero: &[&[i64]] = &[];
    let x_radicals = |gt: bool| {
        let mut pairs = vec![("r_Hb", x), ("r_Hl", x), ("r_Hj", x), ("r_Hbm", x)];
        if gt {
            pairs.push(("r_gt", x));
        }
        expect(&pairs)
    };
    let zero_radicals = expect(&[("r_Hb", zero), ("r_Hl", zero), ("r_Hj", zero), ("r_Hbm", zero)]);
    let e12: &[&[i64]] = &[&[0, 1, 0]];

    let mut out = vec![
        fixture(
            "e1",
            "trivial Hopf algebra k acting on upper-triangular 2x2 matrices",
            e1(q)?,
            expect(&[("r_Hb", e12), ("r_Hl", e12), ("r_Hj", e12), ("r_Hbm", e12)]),
        ),
        fixture("e2", "kC2 acting on Q[x]/(x^2) by g.x = -x", e2(q)?, x_radicals(false)),
        fixture("e3", "kC2 acting trivially on M2(Q)", e3(q)?, zero_radicals.clone()),
        fixture("e4", "(kC2)* acting on Q[x]/(x^2) by the grading deg x = 1", e4(q)?, x_radicals(false)),
        fixture("e5", "Sweedler H4 acting on Q[x]/(x^2)", e5(q)?, zero_radicals.clone()),
        fixture("e2-f2", "F2C2 acting on F2[x]/(x^2) (g.x = -x = x)", e2(f2)?, x_radicals(false)),
        fixture("e3-f2", "F2C2 acting trivially on M2(F2)", e3(f2)?, zero_radicals.clone()),
    ];
    for (tag, f) in [("f3", f3), ("f5", f5)] {
        out.push(fixture(&format!("e2-{tag}"), "kC2 acting on k[x]/(x^2) by g.x = -x", e2(f)?, x_radicals(true)));
        out.push(fixture(&format!("e4-{tag}"), "(kC2)* acting on k[x]/(x^2) by the grading", e4(f)?, x_radicals(true)));
        out.push(fixture(&format!("e5-{tag}"), "Sweedler H4 acting on k[x]/(x^2)", e5(f)?, zero_radicals.clone()));
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(out)
}
