use std::collections::BTreeMap;

use serde::Serialize;

use super::baer::semiprime_intersection;
use super::nilradical::{nilradical_with, NilBackend};
use super::{
    classical_brown_mccoy, fisher_radical, gt_radical, h_baer_radical, h_brown_mccoy_radical, h_jacobson_radical,
    h_locally_nilpotent_radical, smash_radical_in_r, wh_exact_set, wh_membership, BaseRadical, Options,
    RadicalResult, WhVerdict,
};
use crate::algcore::smash_product;
use crate::error::{Error, Result};
use crate::exactla::{self, vector, Subspace};
use crate::field::FieldSpec;
use crate::haction::HModuleAlgebra;
use crate::hideal;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Entry {
    Computed {
        #[serde(flatten)]
        result: RadicalResult,
    },
    Unavailable {
        reason: String,
    },
}

impl Entry {
    pub fn space(&self) -> Option<&Subspace> {
        match self {
            Entry::Computed { result } => Some(&result.space),
            Entry::Unavailable { .. } => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unknown,
    Unsupported,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl Check {
    fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status,
            detail: detail.into(),
        }
    }

    fn from_bool(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check::new(name, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub entries: BTreeMap<String, Entry>,
    pub checks: Vec<Check>,
    pub observations: Vec<String>,
}

impl ComparisonReport {
    pub fn space(&self, name: &str) -> Option<&Subspace> {
        self.entries.get(name).and_then(Entry::space)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

/// Contradictions abort; every other error becomes an unavailable entry.
fn entry(r: Result<RadicalResult>) -> Result<Entry> {
    match r {
        Ok(result) => Ok(Entry::Computed { result }),
        Err(e @ Error::Contradiction(_)) => Err(e),
        Err(e) => Ok(Entry::Unavailable { reason: e.to_string() }),
    }
}

/// The containment chain checked on every input.
pub const CHAIN: [&str; 5] = ["fisher:baer", "r_Hb", "r_Hl", "r_Hj", "r_Hbm"];

/// Every available radical, the relations between them, and the identities
/// the theory predicts.
pub fn comparison_report(m: &HModuleAlgebra, opts: &Options) -> Result<ComparisonReport> {
    let mut entries = BTreeMap::new();
    let nil = nilradical_with(m.r(), NilBackend::Auto, opts.cap)
        .map(|n| RadicalResult::new("r_b", n.space, format!("classical nilradical ({})", n.method)));
    entries.insert("r_b".to_string(), entry(nil)?);
    let bm = classical_brown_mccoy(m.r(), opts).map(|s| RadicalResult::new("r_bm", s, "classical Brown-McCoy"));
    entries.insert("r_bm".to_string(), entry(bm)?);
    entries.insert("r_Hb".into(), entry(h_baer_radical(m, opts))?);
    entries.insert("r_Hl".into(), entry(h_locally_nilpotent_radical(m, opts))?);
    entries.insert("r_Hj".into(), entry(h_jacobson_radical(m, opts))?);
    entries.insert("r_Hbm".into(), entry(h_brown_mccoy_radical(m, opts))?);
    entries.insert("r_gt".into(), entry(gt_radical(m, None, opts))?);
    entries.insert("rad_smash_cap_r".into(), entry(smash_radical_in_r(m, opts))?);
    for b in BaseRadical::ALL {
        entries.insert(format!("fisher:{b}"), entry(fisher_radical(m, b, opts))?);
    }

    let get = |k: &str| entries.get(k).and_then(Entry::space);
    let mut checks = Vec::new();

    let chain: Vec<(&str, &Subspace)> = CHAIN.iter().filter_map(|k| get(k).map(|s| (*k, s))).collect();
    if chain.len() < CHAIN.len() {
        let missing: Vec<&str> = CHAIN.iter().copied().filter(|k| get(k).is_none()).collect();
        checks.push(Check::new(
            "containment",
            CheckStatus::Unsupported,
            format!("unavailable: {}", missing.join(", ")),
        ));
    } else {
        let bad: Vec<String> = chain
            .windows(2)
            .filter(|w| !w[0].1.is_subspace_of(w[1].1).unwrap_or(false))
            .map(|w| format!("{} ⊄ {}", w[0].0, w[1].0))
            .collect();
        checks.push(Check::from_bool("containment", bad.is_empty(), bad.join("; ")));
    }

    let unstable: Vec<String> = entries
        .iter()
        .filter(|(k, _)| k.starts_with("r_H") || k.starts_with("fisher") || k.as_str() == "r_gt")
        .filter_map(|(k, e)| e.space().filter(|s| !m.is_h_stable(s)).map(|_| k.clone()))
        .collect();
    checks.push(Check::from_bool("h-stable", unstable.is_empty(), unstable.join(", ")));

    match (get("r_Hb"), get("r_Hl")) {
        (Some(a), Some(b)) => checks.push(Check::from_bool("baer-equals-locnil", a == b, format!("{a} vs {b}"))),
        _ => checks.push(Check::new("baer-equals-locnil", CheckStatus::Unsupported, "unavailable")),
    }
    match (get("r_gt"), get("r_Hbm")) {
        (Some(a), Some(b)) => {
            checks.push(Check::from_bool("gt-equals-brown-mccoy", a == b, format!("{a} vs {b}")))
        }
        _ => checks.push(Check::new(
            "gt-equals-brown-mccoy",
            CheckStatus::Unsupported,
            "r_gt or r_Hbm unavailable",
        )),
    }

    let in_cap = exactla::check_cap(m.field(), m.dim_r(), opts.cap).is_ok();
    match get("r_Hb") {
        Some(hb) if in_cap => {
            let brute = semiprime_intersection(m, opts.cap)?;
            checks.push(Check::from_bool(
                "baer-equals-semiprime-intersection",
                &brute == hb,
                format!("N_tau = {hb}, intersection = {brute}"),
            ));
        }
        _ => checks.push(Check::new(
            "baer-equals-semiprime-intersection",
            CheckStatus::Unsupported,
            "needs a prime field within the enumeration cap",
        )),
    }

    checks.push(wh_check(m, get("r_Hb"), opts)?);
    checks.push(wl_check(m, opts)?);

    if m.dim_h() == 1 {
        let pairs = [("r_Hb", "r_b"), ("r_Hl", "r_b"), ("r_Hj", "r_b"), ("r_Hbm", "r_bm")];
        let bad: Vec<String> = pairs
            .iter()
            .filter(|(a, b)| get(a) != get(b))
            .map(|(a, b)| format!("{a} != {b}"))
            .collect();
        checks.push(Check::from_bool("trivial-hopf-collapse", bad.is_empty(), bad.join("; ")));
    }

    match m.check_conjugation_identity() {
        Ok(rep) => checks.push(Check::from_bool("conjugation-identity", rep.is_ok(), rep.to_string())),
        Err(e) => checks.push(Check::new("conjugation-identity", CheckStatus::Unsupported, e.to_string())),
    }
    match smash_product(m) {
        Ok(s) => {
            let ok = s.dim() == m.dim_r() * m.dim_h() && s.validate().is_ok();
            checks.push(Check::from_bool("smash-product", ok, format!("dim R#H = {}", s.dim())));
        }
        Err(e) => checks.push(Check::new("smash-product", CheckStatus::Unsupported, e.to_string())),
    }
    match get("r_Hb") {
        Some(hb) if hb.is_zero() && (m.r().find_left_unit().is_some() || m.r().find_right_unit().is_some()) => {
            checks.push(Check::from_bool(
                "semiprime-one-sided-unit",
                m.r().find_unit().is_some(),
                "H-semiprime with a one-sided unit",
            ))
        }
        _ => checks.push(Check::new(
            "semiprime-one-sided-unit",
            CheckStatus::Unsupported,
            "not H-semiprime or no one-sided unit",
        )),
    }

    let mut observations = Vec::new();
    if let (Some(s), Some(j)) = (get("rad_smash_cap_r"), get("r_Hj")) {
        let rel = if s == j {
            "="
        } else if s.is_subspace_of(j).unwrap_or(false) {
            "⊊"
        } else if j.is_subspace_of(s).unwrap_or(false) {
            "⊋"
        } else {
            "incomparable with"
        };
        observations.push(format!("rad(R#H)∩R {rel} r_Hj"));
    }
    if let (Some(b), Some(hb)) = (get("r_b"), get("r_Hb")) {
        if b != hb {
            observations.push(format!("classical r_b = {b} differs from r_Hb = {hb}"));
        }
    }
    Ok(ComparisonReport {
        entries,
        checks,
        observations,
    })
}

fn wh_check(m: &HModuleAlgebra, hb: Option<&Subspace>, opts: &Options) -> Result<Check> {
    let name = "wh-equals-baer";
    let Some(hb) = hb else {
        return Ok(Check::new(name, CheckStatus::Unsupported, "r_Hb unavailable"));
    };
    let n = m.dim_r();
    if let FieldSpec::Prime { .. } = m.field() {
        if exactla::check_cap(m.field(), n, opts.cap).is_ok() {
            let table = wh_exact_set(m, None, opts.cap)?;
            let bad = vector::all_vectors(m.field(), n)
                .zip(table)
                .filter(|(v, member)| hb.contains(v).unwrap_or(false) != *member)
                .count();
            return Ok(Check::from_bool(
                name,
                bad == 0,
                format!("{bad} elements where W_H and N_tau differ"),
            ));
        }
    }
    let mut checked = 0;
    for v in hideal::sweep_vectors(m, opts.seed).into_iter().take(3usize.pow(n.min(6) as u32) + n) {
        let w = wh_membership(m, &v, None, opts)?;
        let nil = matches!(w.verdict, WhVerdict::Nilpotent { .. });
        if nil != hb.contains(&v)? {
            return Ok(Check::new(name, CheckStatus::Fail, format!("{} disagrees", vector::render(&v))));
        }
        checked += 1;
    }
    Ok(Check::new(
        name,
        CheckStatus::Pass,
        format!("{checked} swept elements agree with N_tau"),
    ))
}

fn wl_check(m: &HModuleAlgebra, opts: &Options) -> Result<Check> {
    let name = "wl-equals-wh";
    if !m.field().is_finite() || exactla::check_cap(m.field(), m.dim_r(), opts.cap).is_err() {
        return Ok(Check::new(
            name,
            CheckStatus::Unsupported,
            "needs a prime field within the enumeration cap",
        ));
    }
    let l = m.h_basis();
    let wl = wh_exact_set(m, Some(&l), opts.cap)?;
    let wh = wh_exact_set(m, None, opts.cap)?;
    let bad = wl.iter().zip(&wh).filter(|(a, b)| a != b).count();
    Ok(Check::from_bool(
        name,
        bad == 0,
        format!("L = basis of H; {bad} elements differ"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::fixtures;

    #[test]
    fn e2_all_routes_agree() {
        let q = FieldSpec::Rationals;
        let r = comparison_report(&fixtures::e2(q).unwrap(), &Options::default()).unwrap();
        let x = r.space("r_Hb").unwrap().clone();
        assert_eq!(x.dim(), 1);
        for k in ["r_Hl", "r_Hj", "r_Hbm", "rad_smash_cap_r", "fisher:baer", "fisher:jacobson", "fisher:locnil"] {
            assert_eq!(r.space(k), Some(&x), "{k}");
        }
        assert!(r.all_passed(), "{:?}", r.checks);
    }

    #[test]
    fn e5_contrast() {
        let q = FieldSpec::Rationals;
        let r = comparison_report(&fixtures::e5(q).unwrap(), &Options::default()).unwrap();
        for (k, e) in &r.entries {
            if let Some(s) = e.space() {
                if k != "r_b" && k != "r_bm" {
                    assert!(s.is_zero(), "{k}");
                }
            }
        }
        assert_eq!(r.space("r_b").unwrap().dim(), 1);
        assert!(matches!(r.entries["r_gt"], Entry::Unavailable { .. }));
        assert!(r.all_passed(), "{:?}", r.checks);
    }

    #[test]
    fn e1_collapses() {
        let q = FieldSpec::Rationals;
        let r = comparison_report(&fixtures::e1(q).unwrap(), &Options::default()).unwrap();
        assert_eq!(r.check("trivial-hopf-collapse").unwrap().status, CheckStatus::Pass);
        assert!(r.all_passed(), "{:?}", r.checks);
    }
}
