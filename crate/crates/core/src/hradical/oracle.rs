//! Brute-force recomputation of every radical by enumeration over a small
//! prime field, diffed against the structural routes.

use std::collections::BTreeMap;

use serde::Serialize;

use super::baer::semiprime_intersection;
use super::nilradical::{nilradical_with, NilBackend};
use super::{
    baer_chain, gt_radical, h_brown_mccoy_radical, h_jacobson_radical, h_locally_nilpotent_radical, wh_exact_set,
    Options,
};
use crate::algcore::{smash, smash_product, FiniteDimAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{self, vector, Subspace};
use crate::haction::HModuleAlgebra;
use crate::hideal::{enumerate_h_ideals, HIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OraclePair {
    pub brute: Option<Vec<Vec<String>>>,
    pub fast: Option<Vec<Vec<String>>>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub h_ideal_count: usize,
    pub radicals: BTreeMap<String, OraclePair>,
    pub diffs: Vec<String>,
}

/// Every two-sided ideal, as sums of principal ideals of all elements.
pub fn enumerate_ideals(a: &FiniteDimAlgebra, cap: u128) -> Result<Vec<Subspace>> {
    let f = a.field();
    let n = a.dim();
    exactla::check_cap(f, n, cap)?;
    let mut principal: Vec<Subspace> = Vec::new();
    for v in vector::projective_points(f, n) {
        let g = a.ideal_generated(&Subspace::span(f, [v], n)?);
        if !principal.contains(&g) {
            principal.push(g);
        }
    }
    let mut all = vec![Subspace::zero(f, n)];
    let mut frontier = all.clone();
    while let Some(i) = frontier.pop() {
        for p in &principal {
            let s = i.sum(p)?;
            if !all.contains(&s) {
                all.push(s.clone());
                frontier.push(s);
            }
        }
        if all.len() as u128 > cap {
            return Err(Error::CapExceeded {
                needed: all.len() as u128,
                cap,
            });
        }
    }
    Ok(all)
}

fn maximal_among(ideals: &[Subspace], proper: impl Fn(&Subspace) -> bool) -> Vec<&Subspace> {
    let props: Vec<&Subspace> = ideals.iter().filter(|s| proper(s)).collect();
    props
        .iter()
        .filter(|i| {
            !props
                .iter()
                .any(|j| j.dim() > i.dim() && i.is_subspace_of(j).unwrap_or(false))
        })
        .copied()
        .collect()
}

/// Intersection in `R` of the maximal ideals `M` of `R # H` with `R # 1 ⊄ M`.
fn brute_jacobson(m: &HModuleAlgebra, cap: u128) -> Result<Subspace> {
    let a = smash_product(m)?;
    let ideals = enumerate_ideals(&a, cap)?;
    let mut acc = m.r().whole();
    for mi in maximal_among(&ideals, |s| !s.is_full()) {
        let r_inside = (0..m.dim_r()).all(|k| mi.contains(&smash::embed_r(m, &m.r().basis_vector(k))).unwrap_or(false));
        if !r_inside {
            acc = acc.intersect(&smash::r_preimage(m, mi)?)?;
        }
    }
    Ok(acc)
}

fn brute_locnil(m: &HModuleAlgebra, ideals: &[HIdeal]) -> Result<Subspace> {
    let mut acc = Subspace::zero(m.field(), m.dim_r());
    for i in ideals {
        if m.r().is_nilpotent(i.space()) {
            acc = acc.sum(i.space())?;
        }
    }
    Ok(acc)
}

/// Intersection of the H-ideals `P` with `R/P` H-simple and unital.
fn brute_brown_mccoy(m: &HModuleAlgebra, ideals: &[HIdeal]) -> Result<Subspace> {
    let spaces: Vec<Subspace> = ideals.iter().map(|i| i.space().clone()).collect();
    let mut acc = m.r().whole();
    for p in maximal_among(&spaces, |s| !s.is_full()) {
        let q = m.r().quotient(p)?;
        let simple = !q.product_space(&q.whole(), &q.whole()).is_zero();
        if simple && (q.unit().is_some() || q.find_unit().is_some()) {
            acc = acc.intersect(p)?;
        }
    }
    Ok(acc)
}

fn rows(s: &Subspace) -> Vec<Vec<String>> {
    s.integer_rows()
}

/// Enumerates the H-ideals and recomputes each radical by brute force.
pub fn oracle(m: &HModuleAlgebra, opts: &Options) -> Result<OracleReport> {
    if !m.field().is_finite() {
        return Err(Error::Unsupported("the oracle enumerates over a prime field".into()));
    }
    exactla::check_cap(m.field(), m.dim_r(), opts.cap)?;
    let ideals = enumerate_h_ideals(m, opts.cap)?;
    let mut radicals = BTreeMap::new();
    let mut diffs = Vec::new();
    let mut record = |name: &str, brute: Result<Subspace>, fast: Result<Subspace>| -> Result<()> {
        let note = match (&brute, &fast) {
            (Ok(b), Ok(f)) if b != f => {
                diffs.push(format!("{name}: brute {b} != fast {f}"));
                "differs".to_string()
            }
            (Ok(_), Ok(_)) => "agrees".to_string(),
            (Err(e @ Error::Contradiction(_)), _) | (_, Err(e @ Error::Contradiction(_))) => {
                return Err(Error::Contradiction(e.to_string()))
            }
            (Err(e), _) => format!("brute unavailable: {e}"),
            (_, Err(e)) => format!("fast unavailable: {e}"),
        };
        radicals.insert(
            name.to_string(),
            OraclePair {
                brute: brute.as_ref().ok().map(rows),
                fast: fast.as_ref().ok().map(rows),
                note,
            },
        );
        Ok(())
    };

    let fast_nil = |a: &FiniteDimAlgebra| -> Result<Subspace> {
        let backend = if a.field().characteristic() > a.dim() as u64 {
            NilBackend::Trace
        } else {
            NilBackend::Modular
        };
        Ok(nilradical_with(a, backend, opts.cap)?.space)
    };
    record(
        "r_b",
        nilradical_with(m.r(), NilBackend::Exhaustive, opts.cap).map(|n| n.space),
        fast_nil(m.r()),
    )?;
    let n_tau = baer_chain(m).map(|c| c.top().clone());
    record("r_Hb", semiprime_intersection(m, opts.cap), n_tau.as_ref().map(Clone::clone).map_err(clone_err))?;
    record(
        "r_Hl",
        brute_locnil(m, &ideals),
        h_locally_nilpotent_radical(m, opts).map(|r| r.space),
    )?;
    record(
        "r_Hj",
        brute_jacobson(m, opts.cap),
        h_jacobson_radical(m, opts).map(|r| r.space),
    )?;
    let bm_brute = brute_brown_mccoy(m, &ideals);
    record(
        "r_Hbm",
        bm_brute.as_ref().map(Clone::clone).map_err(clone_err),
        h_brown_mccoy_radical(m, opts).map(|r| r.space),
    )?;
    if m.h().normalized_integral().is_some() {
        record(
            "r_gt",
            bm_brute.as_ref().map(Clone::clone).map_err(clone_err),
            gt_radical(m, None, opts).map(|r| r.space),
        )?;
    }
    let mut wh_diffs = Vec::new();
    if let Ok(nt) = &n_tau {
        let table = wh_exact_set(m, None, opts.cap)?;
        let mut members = Vec::new();
        for (v, member) in vector::all_vectors(m.field(), m.dim_r()).zip(table) {
            if member != nt.contains(&v)? {
                wh_diffs.push(format!("W_H: {} member = {member}, N_tau disagrees", vector::render(&v)));
            }
            if member {
                members.push(v);
            }
        }
        record("W_H", Subspace::span(m.field(), members, m.dim_r()), Ok(nt.clone()))?;
    }
    diffs.extend(wh_diffs);
    Ok(OracleReport {
        h_ideal_count: ideals.len(),
        radicals,
        diffs,
    })
}

fn clone_err(e: &Error) -> Error {
    match e {
        Error::Contradiction(s) => Error::Contradiction(s.clone()),
        Error::Unsupported(s) => Error::Unsupported(s.clone()),
        Error::CapExceeded { needed, cap } => Error::CapExceeded {
            needed: *needed,
            cap: *cap,
        },
        other => Error::Precondition(other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::fixtures;
    use crate::field::FieldSpec;

    #[test]
    fn counts_and_parity() {
        let f3 = FieldSpec::prime(3).unwrap();
        let o = Options::default();
        let r = oracle(&fixtures::e2(f3).unwrap(), &o).unwrap();
        assert_eq!(r.h_ideal_count, 3);
        assert!(r.diffs.is_empty(), "{:?}", r.diffs);
        let r = oracle(&fixtures::e5(f3).unwrap(), &o).unwrap();
        assert_eq!(r.h_ideal_count, 2);
        assert!(r.diffs.is_empty(), "{:?}", r.diffs);
        let f2 = FieldSpec::prime(2).unwrap();
        let r = oracle(&fixtures::e3(f2).unwrap(), &o).unwrap();
        assert!(r.diffs.is_empty(), "{:?}", r.diffs);
    }

    #[test]
    fn ideal_enumeration() {
        let f3 = FieldSpec::prime(3).unwrap();
        let ut = fixtures::upper_triangular(f3).unwrap();
        // 0, span{e12}, span{e11,e12}, span{e12,e22}, everything
        assert_eq!(enumerate_ideals(&ut, 10_000).unwrap().len(), 5);
        let m2 = fixtures::matrix_2x2(f3).unwrap();
        assert_eq!(enumerate_ideals(&m2, 10_000).unwrap().len(), 2);
    }
}
