//! Membership in `W_H(R)` (or `W_L(R)`), the elements all of whose
//! m-sequences `a_{n+1} = (h_n·a_n) b_n (h'_n·a_n)` reach zero.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{baer_chain, Options};
use crate::error::{check_dim, Error, Result};
use crate::exactla::{self, vector, Subspace, Vector};
use crate::field::{FieldSpec, Scalar};
use crate::haction::HModuleAlgebra;

/// The middle factor of a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BChoice {
    /// The `i`-th basis element of `R`.
    Basis(usize),
    /// The current value `a_n` itself.
    Current,
}

/// `(h, b, h')` with `h`, `h'` indices into `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub h: usize,
    pub b: BChoice,
    pub h2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MSequence {
    pub start: Vec<String>,
    pub steps: Vec<Step>,
    pub values: Vec<Vec<String>>,
}

fn advance(m: &HModuleAlgebra, l: &[Vector], a: &[Scalar], s: Step) -> Vector {
    let b = match s.b {
        BChoice::Basis(i) => m.r().basis_vector(i),
        BChoice::Current => a.to_vec(),
    };
    m.r().mul3(&m.act(&l[s.h], a), &b, &m.act(&l[s.h2], a))
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

impl MSequence {
    /// Recomputes every value from the recorded steps.
    pub fn verify(&self, m: &HModuleAlgebra, l: &[Vector], start: &[Scalar]) -> bool {
        if strings(start) != self.start || self.values.len() != self.steps.len() {
            return false;
        }
        let mut a = start.to_vec();
        for (s, v) in self.steps.iter().zip(&self.values) {
            a = advance(m, l, &a, *s);
            if &strings(&a) != v {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum WhVerdict {
    /// Every m-sequence vanishes by step `bound` (`a_bound = 0`, counting
    /// `a_1 = a`).
    Nilpotent { bound: usize },
    NotNilpotent { certificate: String },
    Unknown { reason: String },
}

impl fmt::Display for WhVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WhVerdict::Nilpotent { bound } => write!(f, "nilpotent({bound})"),
            WhVerdict::NotNilpotent { certificate } => write!(f, "not-nilpotent({certificate})"),
            WhVerdict::Unknown { reason } => write!(f, "unknown({reason})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhMembership {
    pub verdict: WhVerdict,
    /// First `k` with `V_k = 0`, if the over-approximation closes.
    pub over_approximation: Option<usize>,
    /// A sequence that revisits a value up to a nonzero scalar.
    pub search: Option<MSequence>,
    pub oracle_member: Option<bool>,
    /// Exact finite-field answer by state-space search, when it fits the cap.
    pub exact_member: Option<bool>,
}

fn resolve_l(m: &HModuleAlgebra, l: Option<&[Vector]>) -> Result<Vec<Vector>> {
    match l {
        None => Ok(m.h_basis()),
        Some(l) => {
            for h in l {
                check_dim(m.dim_h(), h.len())?;
            }
            let span = Subspace::span(m.field(), l.iter().cloned(), m.dim_h())?;
            if !span.is_full() {
                return Err(Error::Precondition(format!(
                    "L spans a {}-dimensional subspace of H (dim {})",
                    span.dim(),
                    m.dim_h()
                )));
            }
            Ok(l.to_vec())
        }
    }
}

fn over_approximation(m: &HModuleAlgebra, l: &[Vector], a: &[Scalar]) -> Option<usize> {
    let whole = m.r().whole();
    let mut v = Subspace::span(m.field(), [a.to_vec()], m.dim_r()).expect("sized");
    let mut seen = vec![v.clone()];
    for k in 1.. {
        if v.is_zero() {
            return Some(k);
        }
        let lv = m.act_image(l, &v).expect("nonempty L");
        let next = m.r().product_space(&m.r().product_space(&lv, &whole), &lv);
        if seen.contains(&next) {
            return None;
        }
        seen.push(next.clone());
        v = next;
    }
    unreachable!()
}

/// The ratio `λ` with `x = λ y`, if any.
fn proportional(x: &[Scalar], y: &[Scalar]) -> Option<Scalar> {
    let i = y.iter().position(|c| !c.is_zero())?;
    let lambda = &x[i] * &y[i].inv()?;
    (vector::scale(&lambda, y) == x && !lambda.is_zero()).then_some(lambda)
}

fn random_search(m: &HModuleAlgebra, l: &[Vector], a: &[Scalar], seed: u64) -> Option<MSequence> {
    if vector::is_zero(a) {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let depth = 2 * m.dim_r().max(1);
    for _ in 0..64 {
        let mut cur = a.to_vec();
        let mut history = vec![cur.clone()];
        let mut steps = Vec::new();
        for _ in 0..depth {
            let pick = rng.gen_range(0..=m.dim_r());
            let s = Step {
                h: rng.gen_range(0..l.len()),
                b: if pick == m.dim_r() {
                    BChoice::Current
                } else {
                    BChoice::Basis(pick)
                },
                h2: rng.gen_range(0..l.len()),
            };
            cur = advance(m, l, &cur, s);
            steps.push(s);
            if vector::is_zero(&cur) {
                break;
            }
            if history.iter().any(|prev| proportional(&cur, prev).is_some()) {
                return Some(MSequence {
                    start: strings(a),
                    values: history[1..].iter().chain([&cur]).map(|v| strings(v)).collect(),
                    steps,
                });
            }
            history.push(cur.clone());
        }
    }
    None
}

fn encode(v: &[Scalar], p: u64) -> usize {
    v.iter().fold(0usize, |acc, x| acc * p as usize + x.residue().expect("prime field") as usize)
}

/// The exact set `W_L(R)` over a prime field, as a membership table indexed
/// like `vector::all_vectors`. With `l = None` the h's range over all of `H`.
///
/// An element lies outside `W_L` iff a cycle of nonzero values is reachable
/// from it, so the complement is the greatest set of nonzero states in which
/// every state has a successor.
pub fn wh_exact_set(m: &HModuleAlgebra, l: Option<&[Vector]>, cap: u128) -> Result<Vec<bool>> {
    let f = m.field();
    let n = m.dim_r();
    exactla::check_cap(f, n, cap)?;
    let p = f.order().expect("finite");
    let all: Vec<Vector> = vector::all_vectors(f, n).collect();
    let r_elems = &all;
    let successors: Vec<Vec<usize>> = all
        .iter()
        .map(|a| {
            if vector::is_zero(a) {
                return Vec::new();
            }
            let images: Vec<Vector> = match l {
                Some(l) => l.iter().map(|h| m.act(h, a)).collect(),
                None => {
                    let s = Subspace::span(f, [a.clone()], n).expect("sized");
                    m.h_image(&s).elements().expect("finite").collect()
                }
            };
            let mut out: Vec<usize> = Vec::new();
            for u in &images {
                let ub: Vec<Vector> = r_elems.iter().map(|b| m.r().mul(u, b)).collect();
                for v in &images {
                    for x in &ub {
                        let val = m.r().mul(x, v);
                        if !vector::is_zero(&val) {
                            out.push(encode(&val, p));
                        }
                    }
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();
    let mut alive: Vec<bool> = all.iter().map(|v| !vector::is_zero(v)).collect();
    loop {
        let mut changed = false;
        for i in 0..all.len() {
            if alive[i] && !successors[i].iter().any(|&j| alive[j]) {
                alive[i] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(alive.into_iter().map(|x| !x).collect())
}

/// Reconciles the over-approximation, the randomized search, the `N_τ`
/// oracle and (when it fits the cap) the exact state-space search.
pub fn wh_membership(m: &HModuleAlgebra, a: &[Scalar], l: Option<&[Vector]>, opts: &Options) -> Result<WhMembership> {
    check_dim(m.dim_r(), a.len())?;
    let l_given = l.is_some();
    let l = resolve_l(m, l)?;
    let over = over_approximation(m, &l, a);
    let search = random_search(m, &l, a, opts.seed);
    if let Some(seq) = &search {
        debug_assert!(seq.verify(m, &l, a));
    }
    if over.is_some() && search.is_some() {
        return Err(Error::Contradiction(
            "over-approximation vanishes but a recurring m-sequence was found".into(),
        ));
    }
    let oracle = baer_chain(m).and_then(|bc| bc.top().contains(a)).ok();
    let exact = match m.field() {
        FieldSpec::Prime { p } if exactla::check_cap(m.field(), m.dim_r(), opts.cap).is_ok() => {
            let table = wh_exact_set(m, if l_given { Some(&l) } else { None }, opts.cap)?;
            Some(table[encode(a, p)])
        }
        _ => None,
    };
    for (name, verdict) in [("over-approximation", over.map(|_| true)), ("search", search.as_ref().map(|_| false)), ("exact", exact)] {
        let (Some(v), Some(o)) = (verdict, oracle) else { continue };
        if v != o {
            return Err(Error::Contradiction(format!(
                "{name} says member = {v} but N_tau membership is {o} for {}",
                vector::render(a)
            )));
        }
    }
    let verdict = match (oracle.or(exact), over, &search) {
        (Some(true), Some(k), _) => WhVerdict::Nilpotent { bound: k },
        (Some(true), None, _) => {
            return Err(Error::Contradiction(format!(
                "{} lies in N_tau but the over-approximation does not vanish",
                vector::render(a)
            )))
        }
        (Some(false), _, Some(seq)) => WhVerdict::NotNilpotent {
            certificate: format!("recurring m-sequence of length {}", seq.steps.len()),
        },
        (Some(false), _, None) => WhVerdict::NotNilpotent {
            certificate: "not in N_tau".into(),
        },
        (None, Some(k), _) => WhVerdict::Nilpotent { bound: k },
        (None, None, Some(seq)) => WhVerdict::NotNilpotent {
            certificate: format!("recurring m-sequence of length {}", seq.steps.len()),
        },
        (None, None, None) => WhVerdict::Unknown {
            reason: "no oracle and no decisive search".into(),
        },
    };
    Ok(WhMembership {
        verdict,
        over_approximation: over,
        search,
        oracle_member: oracle,
        exact_member: exact,
    })
}
