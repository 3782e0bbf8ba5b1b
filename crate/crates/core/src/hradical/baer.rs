use serde::Serialize;

use super::{nilradical, Options, RadicalResult};
use crate::error::{Error, Result};
use crate::exactla::{self, vector, Subspace, Vector};
use crate::haction::HModuleAlgebra;
use crate::hideal::{self, enumerate_h_ideals, HIdeal};
use crate::verdict::Verdict;

/// The ascending chain `N_0 = 0 ⊂ N_1 ⊂ ...` whose successive quotients are
/// the sums of all nilpotent H-ideals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaerChain {
    /// Distinct members, starting with `0`.
    pub chain: Vec<Subspace>,
    pub methods: Vec<String>,
}

impl BaerChain {
    pub fn top(&self) -> &Subspace {
        self.chain.last().expect("chain starts at 0")
    }
}

/// One step: the preimage of `(rad(R/N) : H)` under `R -> R/N`. In finite
/// dimension every nilpotent H-ideal sits in the nilradical and its colon
/// ideal is itself a nilpotent H-ideal, so that colon ideal is their sum.
fn step(m: &HModuleAlgebra, n: &Subspace) -> Result<(Subspace, String)> {
    let q = m.quotient_action(n)?;
    let nil = nilradical::nilradical_with(q.r(), nilradical::NilBackend::Auto, exactla::DEFAULT_CAP)?;
    let c = q.colon_ideal(&nil.space)?;
    let lifted = Subspace::span(m.field(), c.basis().iter().map(|v| n.lift(v)), m.dim_r())?;
    Ok((n.sum(&lifted)?, nil.method))
}

pub fn baer_chain(m: &HModuleAlgebra) -> Result<BaerChain> {
    let mut chain = vec![Subspace::zero(m.field(), m.dim_r())];
    let mut methods = Vec::new();
    loop {
        let cur = chain.last().expect("nonempty");
        let (next, method) = step(m, cur)?;
        methods.push(method);
        if &next == cur {
            break;
        }
        if chain.len() >= 2 {
            return Err(Error::Contradiction(format!(
                "H-Baer chain did not stabilize at N_1: N_{} = {next}",
                chain.len()
            )));
        }
        chain.push(next);
    }
    Ok(BaerChain { chain, methods })
}

/// The intersection of every H-ideal `I` such that no H-ideal `K ⊋ I` has
/// `K^2 ⊆ I`, by full enumeration.
pub(crate) fn semiprime_intersection(m: &HModuleAlgebra, cap: u128) -> Result<Subspace> {
    let ideals = enumerate_h_ideals(m, cap)?;
    let mut acc = m.r().whole();
    for i in &ideals {
        let semiprime = ideals.iter().all(|k| {
            k.space() == i.space()
                || !i.space().is_subspace_of(k.space()).expect("sized")
                || !m.r().product_space(k.space(), k.space()).is_subspace_of(i.space()).expect("sized")
        });
        if semiprime {
            acc = acc.intersect(i.space())?;
        }
    }
    Ok(acc)
}

pub fn h_baer_radical(m: &HModuleAlgebra, opts: &Options) -> Result<RadicalResult> {
    let bc = baer_chain(m)?;
    let top = bc.top().clone();
    let mut res = RadicalResult::new("r_Hb", top.clone(), "N_tau of the (nilradical : H) chain")
        .with_certificate(format!("chain length {}", bc.chain.len()))
        .with_certificate(format!("nilradical backend: {}", bc.methods.join(" | ")));
    let (nilp, k) = m.r().nilpotency_index(&top);
    if !nilp {
        return Err(Error::Contradiction(format!("r_Hb = {top} is not nilpotent")));
    }
    res.certificates.push(format!("nilpotency index {k}"));
    if exactla::check_cap(m.field(), m.dim_r(), opts.cap).is_ok() {
        let brute = semiprime_intersection(m, opts.cap)?;
        if brute != top {
            return Err(Error::Contradiction(format!(
                "N_tau = {top} but the intersection of H-semiprime H-ideals is {brute}"
            )));
        }
        res.certificates.push("equals the intersection of enumerated H-semiprime H-ideals".into());
    }
    Ok(res)
}

pub fn is_h_semiprime(m: &HModuleAlgebra) -> Result<bool> {
    Ok(baer_chain(m)?.top().is_zero())
}

/// Witness that `R` is not H-prime: nonzero `a, b` with `(H·a) R (H·b) = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeWitness {
    pub a: String,
    pub b: String,
}

impl std::fmt::Display for PrimeWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(H·{})R(H·{}) = 0", self.a, self.b)
    }
}

fn annihilates(m: &HModuleAlgebra, ha_r: &Subspace, hb: &Subspace) -> bool {
    m.r().product_space(ha_r, hb).is_zero()
}

fn orbit(m: &HModuleAlgebra, v: &Vector) -> Subspace {
    m.h_image(&Subspace::span(m.field(), [v.clone()], m.dim_r()).expect("sized"))
}

pub fn is_h_prime(m: &HModuleAlgebra, opts: &Options) -> Verdict<PrimeWitness> {
    let n = m.dim_r();
    let whole = m.r().whole();
    let witness = |a: &Vector, b: &Vector| PrimeWitness {
        a: vector::render(a),
        b: vector::render(b),
    };
    if n == 0 {
        return Verdict::Unknown {
            reason: "the zero algebra".into(),
        };
    }
    if exactla::check_cap(m.field(), n, opts.cap).is_ok() {
        let points: Vec<Vector> = vector::projective_points(m.field(), n).collect();
        let left: Vec<Subspace> = points.iter().map(|a| m.r().product_space(&orbit(m, a), &whole)).collect();
        let right: Vec<Subspace> = points.iter().map(|b| orbit(m, b)).collect();
        for (a, l) in points.iter().zip(&left) {
            for (b, r) in points.iter().zip(&right) {
                if annihilates(m, l, r) {
                    return Verdict::False { witness: witness(a, b) };
                }
            }
        }
        return Verdict::certified("no nonzero pair annihilates (exhaustive)");
    }
    if let Ok(bc) = baer_chain(m) {
        if bc.chain.len() > 1 {
            let mut p = bc.chain[1].clone();
            loop {
                let next = m.r().product_space(&p, &bc.chain[1]);
                if next.is_zero() {
                    break;
                }
                p = next;
            }
            let a = p.basis()[0].clone();
            return Verdict::False { witness: witness(&a, &a) };
        }
    }
    let sweep: Vec<Vector> = hideal::sweep_vectors(m, opts.seed).into_iter().take(40).collect();
    let ideals: Vec<HIdeal> = sweep
        .iter()
        .filter_map(|v| {
            let s = Subspace::span(m.field(), [v.clone()], n).ok()?;
            hideal::h_ideal_generated(m, &s).ok()
        })
        .collect();
    for (a, i) in sweep.iter().zip(&ideals) {
        for (b, j) in sweep.iter().zip(&ideals) {
            if m.r().product_space(i.space(), j.space()).is_zero() {
                return Verdict::False { witness: witness(a, b) };
            }
        }
    }
    match hideal::is_h_simple(m, opts.seed, opts.cap) {
        Verdict::True { certified: true, .. } => Verdict::certified("R is H-simple"),
        _ => Verdict::Unknown {
            reason: "no annihilating pair among swept elements and no H-simplicity certificate".into(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::fixtures;
    use crate::exactla::vector::from_i64s;
    use crate::field::FieldSpec;

    fn x(f: FieldSpec) -> Subspace {
        Subspace::span(f, [from_i64s(f, &[0, 1])], 2).unwrap()
    }

    #[test]
    fn chains() {
        let q = FieldSpec::Rationals;
        let e2 = fixtures::e2(q).unwrap();
        assert_eq!(baer_chain(&e2).unwrap().chain, vec![Subspace::zero(q, 2), x(q)]);
        let e5 = fixtures::e5(q).unwrap();
        assert_eq!(baer_chain(&e5).unwrap().chain, vec![Subspace::zero(q, 2)]);
        assert!(baer_chain(&fixtures::e3(q).unwrap()).unwrap().top().is_zero());
    }

    #[test]
    fn baer_radicals() {
        let q = FieldSpec::Rationals;
        let f3 = FieldSpec::prime(3).unwrap();
        let o = Options::default();
        assert_eq!(h_baer_radical(&fixtures::e2(q).unwrap(), &o).unwrap().space, x(q));
        assert_eq!(h_baer_radical(&fixtures::e4(q).unwrap(), &o).unwrap().space, x(q));
        assert!(h_baer_radical(&fixtures::e5(f3).unwrap(), &o).unwrap().space.is_zero());
        assert!(!is_h_semiprime(&fixtures::e2(q).unwrap()).unwrap());
        assert!(is_h_semiprime(&fixtures::e5(q).unwrap()).unwrap());
    }

    #[test]
    fn primeness() {
        let q = FieldSpec::Rationals;
        let f3 = FieldSpec::prime(3).unwrap();
        let o = Options::default();
        assert!(is_h_prime(&fixtures::e5(f3).unwrap(), &o).is_certified_true());
        let v = is_h_prime(&fixtures::e2(q).unwrap(), &o);
        assert_eq!(v.witness().unwrap().a, "(0,1)");
        assert!(is_h_prime(&fixtures::e1(q).unwrap(), &o).is_false());
        assert!(is_h_prime(&fixtures::e5(q).unwrap(), &o).is_certified_true());
    }
}
