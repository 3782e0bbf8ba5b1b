//! Acceptance suite: ten criteria, one PASS/FAIL line each.
//!
//! All comparisons are exact (tolerance 0) since every scalar is exact.
//! The only numeric knobs are pinned below.

mod common;

use std::path::Path;
use std::time::{Duration, Instant};

use common::*;
use hopfrad::algcore::{smash_product, HopfAlgebra};
use hopfrad::cli;
use hopfrad::exactla::{vector, Subspace, Vector};
use hopfrad::haction::{CheckLevel, HModuleAlgebra};
use hopfrad::hideal::{h_ideal_generated, ideal_power, ideal_product, is_h_ideal};
use hopfrad::hradical::{
    baer_chain, comparison_report, gt_radical, h_baer_radical, h_brown_mccoy_radical, h_jacobson_radical,
    h_locally_nilpotent_radical, nilradical, oracle, wh_exact_set, wh_membership, CheckStatus, Options, WhVerdict,
};
use hopfrad::FieldSpec;

/// Random subspaces tried per fixture for the generated-ideal check.
const SUBSPACES_PER_FIXTURE: usize = 50;
/// Seed for those subspaces.
const SUBSPACE_SEED: u64 = 0x5EED;
/// Wall-clock budget per criterion.
const TIME_BUDGET: Duration = Duration::from_secs(10);
/// Largest `p^dim` for which the oracle must run.
const ORACLE_BOUND: u128 = 10_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|err| format!("{ctx}: {err}"))
}

fn axiom_suite() -> Outcome {
    let corpus = corpus();
    for fx in &corpus {
        let m = &fx.module;
        for (what, rep) in cli::validate_all(m, fx.level) {
            ensure(rep.is_ok(), || format!("{} {what}: {rep}", fx.name))?;
        }
    }
    let q = FieldSpec::Rationals;
    let e5 = e(hopfrad::algcore::fixtures::e5(q), "e5")?;
    let mut s = e5.h().antipode_matrix().clone();
    // S(x) = -gx becomes gx
    let v = s.get(2, 3).clone();
    s.set(2, 3, -v);
    let bad = e(e5.h().with_antipode(s), "mutated antipode")?;
    let rep = bad.validate();
    ensure(rep.failures.iter().any(|f| f.axiom == "antipode" && f.indices == vec![2]), || {
        format!("antipode mutation missed: {rep}")
    })?;

    let e2 = e(hopfrad::algcore::fixtures::e2(q), "e2")?;
    let mut act = e2.action_table().to_vec();
    act[2] = vector::from_i64s(q, &[-1, 0]);
    let bad = e(HModuleAlgebra::new(e2.r().clone(), e2.h().clone(), act), "mutated action")?;
    let rep = bad.validate_action(CheckLevel::Module);
    let hit = rep.failures.iter().any(|f| f.axiom == "measuring" && f.indices == vec![1, 0, 0]);
    ensure(hit, || format!("measuring mutation missed: {rep}"))?;
    Ok(format!(
        "{} fixtures clean; antipode and measuring (g; 1, 1) mutations named",
        corpus.len()
    ))
}

/// `HE + R(HE) + (HE)R + R(HE)R`, computed directly.
fn generated_directly(m: &HModuleAlgebra, e: &Subspace) -> Subspace {
    let he = m.h_image(e);
    let r = m.r().whole();
    let left = ideal_product(m, &r, &he).unwrap();
    let right = ideal_product(m, &he, &r).unwrap();
    let both = ideal_product(m, &left, &r).unwrap();
    he.sum(&left).unwrap().sum(&right).unwrap().sum(&both).unwrap()
}

fn generated_ideals() -> Outcome {
    let mut rng = rng(SUBSPACE_SEED);
    let mut pairs = 0;
    let corpus = corpus();
    for fx in &corpus {
        let m = &fx.module;
        let ideals = if m.field().is_finite() { Some(all_h_ideals(m)) } else { None };
        for _ in 0..SUBSPACES_PER_FIXTURE {
            let sub = random_subspace(m, &mut rng);
            let gen = e(h_ideal_generated(m, &sub), &fx.name)?.into_space();
            ensure(is_h_ideal(m, &gen) && sub.is_subspace_of(&gen).unwrap(), || {
                format!("{}: ({sub}) = {gen} is not an H-ideal over E", fx.name)
            })?;
            ensure(gen == generated_directly(m, &sub), || format!("{}: formula disagrees for E = {sub}", fx.name))?;
            if let Some(ideals) = &ideals {
                let least = least_h_ideal_containing(ideals, &sub);
                ensure(gen == least, || format!("{}: ({sub}) = {gen} but least is {least}", fx.name))?;
            }
        }
        if m.field().is_finite() {
            for b in all_h_ideals(m) {
                for c in h_ideals_of(m, &b) {
                    let gen = e(h_ideal_generated(m, &c), &fx.name)?.into_space();
                    let cube = e(ideal_power(m, &gen, 3), &fx.name)?;
                    ensure(cube.is_subspace_of(&c).unwrap(), || format!("{}: (C)^3 not in C = {c}", fx.name))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{SUBSPACES_PER_FIXTURE} subspaces x {} fixtures; (C)^3 in C on {pairs} nested pairs",
        corpus.len()
    ))
}

fn ternary_vectors(f: FieldSpec, n: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for mut idx in 0..3usize.pow(n as u32) {
        let mut xs = Vec::with_capacity(n);
        for _ in 0..n {
            xs.push((idx % 3) as i64 - 1);
            idx /= 3;
        }
        out.push(vector::from_i64s(f, &xs));
    }
    out
}

fn wh_sources() -> Outcome {
    let opts = Options::default();
    let mut checked = 0;
    for fx in corpus() {
        let m = &fx.module;
        let elements: Vec<Vector> = if m.field().is_finite() {
            vector::all_vectors(m.field(), m.dim_r()).collect()
        } else {
            ternary_vectors(m.field(), m.dim_r())
        };
        for a in &elements {
            let w = e(wh_membership(m, a, None, &opts), &fx.name)?;
            let decided = match w.verdict {
                WhVerdict::Nilpotent { .. } => Some(true),
                WhVerdict::NotNilpotent { .. } => Some(false),
                WhVerdict::Unknown { .. } => None,
            };
            for other in [w.oracle_member, w.exact_member, w.over_approximation.map(|_| true), w.search.as_ref().map(|_| false)]
                .into_iter()
                .flatten()
            {
                ensure(decided == Some(other), || format!("{} at {}: {:?}", fx.name, vector::render(a), w))?;
            }
            checked += 1;
        }
    }
    let q = FieldSpec::Rationals;
    let e5 = e(hopfrad::algcore::fixtures::e5(q), "e5")?;
    let hb = e(h_baer_radical(&e5, &opts), "e5")?;
    ensure(hb.space.is_zero(), || format!("E5 W_H = {}", hb.space))?;
    let rb = e(nilradical(e5.r()), "e5")?;
    let x = Subspace::span(q, [vector::from_i64s(q, &[0, 1])], 2).unwrap();
    ensure(rb == x, || format!("E5 r_b = {rb}"))?;
    Ok(format!("{checked} elements, no disagreement; E5: W_H = 0, r_b = span{{x}}"))
}

/// Intersection of the H-ideals `I` with no H-ideal `K ⊋ I` having `K² ⊆ I`.
fn semiprime_intersection(m: &HModuleAlgebra) -> Subspace {
    let ideals = all_h_ideals(m);
    let mut acc = m.r().whole();
    for i in &ideals {
        let semiprime = !ideals.iter().any(|k| {
            k.dim() > i.dim()
                && i.is_subspace_of(k).unwrap()
                && ideal_product(m, k, k).unwrap().is_subspace_of(i).unwrap()
        });
        if semiprime {
            acc = acc.intersect(i).unwrap();
        }
    }
    acc
}

fn n_tau_vs_semiprime() -> Outcome {
    let f3 = FieldSpec::prime(3).unwrap();
    let mut parts = Vec::new();
    for (name, m) in [
        ("e2", hopfrad::algcore::fixtures::e2(f3)),
        ("e4", hopfrad::algcore::fixtures::e4(f3)),
        ("e5", hopfrad::algcore::fixtures::e5(f3)),
    ] {
        let m = e(m, name)?;
        let nt = e(baer_chain(&m), name)?.top().clone();
        let si = semiprime_intersection(&m);
        ensure(nt == si, || format!("{name}/F3: N_tau = {nt}, intersection = {si}"))?;
        parts.push(format!("{name}: dim {}", nt.dim()));
    }
    Ok(parts.join(", "))
}

fn alternative_basis(m: &HModuleAlgebra) -> Vec<Vector> {
    // b_0, b_0 + b_1, b_1 + b_2, ...: a basis that is not the standard one
    let basis = m.h_basis();
    (0..basis.len())
        .map(|i| if i == 0 { basis[0].clone() } else { vector::add(&basis[i - 1], &basis[i]) })
        .collect()
}

fn wl_equals_wh() -> Outcome {
    let mut n = 0;
    for fx in finite_corpus() {
        let m = &fx.module;
        let wh = e(wh_exact_set(m, None, CAP), &fx.name)?;
        for l in [m.h_basis(), alternative_basis(m)] {
            let wl = e(wh_exact_set(m, Some(&l), CAP), &fx.name)?;
            ensure(wl == wh, || format!("{}: W_L != W_H for L = {:?}", fx.name, l.iter().map(|v| vector::render(v)).collect::<Vec<_>>()))?;
            n += 1;
        }
    }
    Ok(format!("{n} (fixture, L) pairs agree elementwise"))
}

fn smash_identities() -> Outcome {
    let corpus = corpus();
    for fx in &corpus {
        let m = &fx.module;
        if m.r().unit().is_some() {
            let rep = e(m.check_conjugation_identity(), &fx.name)?;
            ensure(rep.is_ok(), || format!("{}: conjugation {rep}", fx.name))?;
        }
        let s = e(smash_product(m), &fx.name)?;
        ensure(s.dim() == m.dim_r() * m.dim_h(), || format!("{}: dim R#H = {}", fx.name, s.dim()))?;
        let rep = s.validate();
        ensure(rep.is_ok(), || format!("{}: R#H {rep}", fx.name))?;
    }
    Ok(format!("{} fixtures", corpus.len()))
}

fn gt_equals_brown_mccoy() -> Outcome {
    let f5 = FieldSpec::prime(5).unwrap();
    let m = e(hopfrad::algcore::fixtures::e2(f5), "e2/F5")?;
    let t = vector::from_i64s(f5, &[3, 3]);
    let opts = Options::default();
    let gt = e(gt_radical(&m, Some(&t), &opts), "gt")?;
    let bm = e(h_brown_mccoy_radical(&m, &opts), "bm")?;
    let x = Subspace::span(f5, [vector::from_i64s(f5, &[0, 1])], 2).unwrap();
    ensure(gt.space == x, || format!("r_gt = {}", gt.space))?;
    ensure(bm.space == x, || format!("r_Hbm = {}", bm.space))?;
    ensure(gt.method != bm.method, || "both routes report the same method".into())?;
    Ok(format!("r_gt = r_Hbm = span{{x}} via \"{}\" and \"{}\"", gt.method, bm.method))
}

fn containment() -> Outcome {
    let opts = Options::default();
    let corpus = corpus();
    for fx in &corpus {
        let rep = e(comparison_report(&fx.module, &opts), &fx.name)?;
        let c = rep.check("containment").ok_or_else(|| format!("{}: no containment check", fx.name))?;
        ensure(c.status == CheckStatus::Pass, || format!("{}: {}", fx.name, c.detail))?;
    }
    let mut collapsed = 0;
    for fx in &corpus {
        let f = fx.module.field();
        let m = e(HModuleAlgebra::trivial_action(fx.module.r().clone(), HopfAlgebra::trivial(f)), &fx.name)?;
        let rad = e(nilradical(m.r()), &fx.name)?;
        let radicals = [
            ("r_Hb", h_baer_radical(&m, &opts)),
            ("r_Hl", h_locally_nilpotent_radical(&m, &opts)),
            ("r_Hj", h_jacobson_radical(&m, &opts)),
        ];
        for (name, r) in radicals {
            let r = e(r, &fx.name)?;
            ensure(r.space == rad, || format!("{} trivial H: {name} = {} but nilradical = {rad}", fx.name, r.space))?;
        }
        let bm = e(h_brown_mccoy_radical(&m, &opts), &fx.name)?;
        let classical = e(hopfrad::hradical::classical_brown_mccoy(m.r(), &opts), &fx.name)?;
        ensure(bm.space == classical, || format!("{} trivial H: r_Hbm = {} but r_bm = {classical}", fx.name, bm.space))?;
        let rep = e(comparison_report(&m, &opts), &fx.name)?;
        let c = rep.check("trivial-hopf-collapse").ok_or("no collapse check")?;
        ensure(c.status == CheckStatus::Pass, || format!("{}: {}", fx.name, c.detail))?;
        collapsed += 1;
    }
    Ok(format!("{} fixtures contained; {collapsed} trivial-Hopf twins collapse", corpus.len()))
}

fn oracle_parity() -> Outcome {
    let mut n = 0;
    for fx in finite_corpus() {
        let m = &fx.module;
        let size = (m.field().characteristic() as u128).pow(m.dim_r() as u32);
        if size > ORACLE_BOUND {
            continue;
        }
        let rep = e(oracle::oracle(m, &Options::default()), &fx.name)?;
        ensure(rep.diffs.is_empty(), || format!("{}: {:?}", fx.name, rep.diffs))?;
        n += 1;
    }
    Ok(format!("{n} finite-field fixtures, all diffs empty"))
}

fn determinism() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let dir = dir.to_str().unwrap();
    let mut runs = Vec::new();
    for _ in 0..2 {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(["hopfrad", "--seed", "0xA1CEB", "regress", dir], &mut out, &mut err);
        ensure(code == 0, || format!("regress exited {code}: {}", String::from_utf8_lossy(&err)))?;
        runs.push(out);
    }
    ensure(runs[0] == runs[1], || "regress outputs differ".into())?;
    Ok(format!("two regress runs, {} identical bytes", runs[0].len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("axiom suite and mutations", axiom_suite),
        ("generated H-ideals are least; (C)^3 in C", generated_ideals),
        ("W_H membership sources agree", wh_sources),
        ("N_tau equals the H-semiprime intersection", n_tau_vs_semiprime),
        ("W_L equals W_H", wl_equals_wh),
        ("smash product identities", smash_identities),
        ("r_gt equals r_Hbm on E2/F5", gt_equals_brown_mccoy),
        ("containment chain and trivial-Hopf collapse", containment),
        ("oracle parity", oracle_parity),
        ("byte-identical regress", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let (status, detail) = match (&outcome, took <= TIME_BUDGET) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over the {TIME_BUDGET:?} budget")),
            (Err(d), _) => ("FAIL", d.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} {name} ({:.2}s): {detail}", i + 1, took.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
