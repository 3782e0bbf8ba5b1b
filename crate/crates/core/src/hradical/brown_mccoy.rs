use super::nilradical::{nilradical_with, NilBackend};
use super::wedderburn::Blocks;
use super::{Options, RadicalResult};
use crate::algcore::FiniteDimAlgebra;
use crate::error::{check_dim, Error, Result};
use crate::exactla::{Subspace, Vector};
use crate::field::Scalar;
use crate::haction::HModuleAlgebra;
use crate::hideal::{enumerate_h_ideals, is_h_simple};
use crate::verdict::Verdict;

/// `G_t(a)`: the image of `x -> x + (t·a)x` plus `span{ u(t·a)v + uv }`.
pub fn gt_subspace(m: &HModuleAlgebra, t: &[Scalar], a: &[Scalar]) -> Result<Subspace> {
    check_dim(m.dim_h(), t.len())?;
    check_dim(m.dim_r(), a.len())?;
    if !m.h().is_normalized_integral(t) {
        return Err(Error::Precondition("t is not a normalized left integral".into()));
    }
    let r = m.r();
    let n = m.dim_r();
    let ta = m.act(t, a);
    let mut rows: Vec<Vector> = Vec::with_capacity(n + n * n);
    for i in 0..n {
        let x = r.basis_vector(i);
        rows.push(crate::exactla::vector::add(&x, &r.mul(&ta, &x)));
    }
    for i in 0..n {
        let u = r.basis_vector(i);
        let uta = r.mul(&u, &ta);
        for j in 0..n {
            let v = r.basis_vector(j);
            rows.push(crate::exactla::vector::add(&r.mul(&uta, &v), r.basis_product(i, j)));
        }
    }
    Subspace::span(m.field(), rows, n)
}

pub fn gt_member(m: &HModuleAlgebra, t: &[Scalar], a: &[Scalar]) -> Result<bool> {
    gt_subspace(m, t, a)?.contains(a)
}

fn integral(m: &HModuleAlgebra, t: Option<&[Scalar]>) -> Result<Vector> {
    match t {
        Some(t) => Ok(t.to_vec()),
        None => m
            .h()
            .normalized_integral()
            .ok_or_else(|| Error::Unsupported("H has no normalized left integral".into())),
    }
}

/// Sum of every H-ideal all of whose elements lie in their own `G_t`, by
/// enumeration over a prime field.
pub fn gt_radical(m: &HModuleAlgebra, t: Option<&[Scalar]>, opts: &Options) -> Result<RadicalResult> {
    let t = integral(m, t)?;
    if !m.field().is_finite() {
        return Err(Error::Unsupported("r_gt is computed by enumeration over a prime field".into()));
    }
    let qualifies = |s: &Subspace| -> Result<bool> {
        for a in s.elements()? {
            if !gt_member(m, &t, &a)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let ideals = enumerate_h_ideals(m, opts.cap)?;
    let mut acc = Subspace::zero(m.field(), m.dim_r());
    let mut count = 0;
    for i in &ideals {
        if qualifies(i.space())? {
            acc = acc.sum(i.space())?;
            count += 1;
        }
    }
    if !qualifies(&acc)? {
        return Err(Error::Contradiction(format!("the sum {acc} of G_t-ideals is not itself one")));
    }
    Ok(RadicalResult::new("r_gt", acc, "sum of enumerated H-ideals I with a in G_t(a) for all a in I")
        .with_certificate(format!("{count} of {} H-ideals qualify", ideals.len())))
}

/// Intersection of the maximal ideals of `R` with simple unital quotient.
pub fn classical_brown_mccoy(a: &FiniteDimAlgebra, opts: &Options) -> Result<Subspace> {
    let j = nilradical_with(a, NilBackend::Auto, opts.cap)?;
    let blocks = Blocks::new(a, &j.space)?;
    let mut acc = a.whole();
    for mi in blocks.maximal_ideals() {
        acc = acc.intersect(&mi)?;
    }
    Ok(acc)
}

/// Intersection of the H-ideals `P` with `R/P` H-simple with unit. Each such
/// `P` is `(M:H)` for a maximal ideal `M` containing the nilradical, so the
/// candidates come from the block decomposition of `R / rad R`.
pub fn h_brown_mccoy_radical(m: &HModuleAlgebra, opts: &Options) -> Result<RadicalResult> {
    let j = nilradical_with(m.r(), NilBackend::Auto, opts.cap)?;
    let blocks = Blocks::new(m.r(), &j.space)?;
    let mut candidates: Vec<Subspace> = Vec::new();
    for mi in blocks.maximal_ideals() {
        let c = m.colon_ideal(&mi)?;
        if !candidates.contains(&c) {
            candidates.push(c);
        }
    }
    let mut acc = m.r().whole();
    let mut certs = Vec::new();
    for c in &candidates {
        let q = m.quotient_action(c)?;
        if q.r().unit().is_none() && q.r().find_unit().is_none() {
            certs.push(format!("{c}: quotient has no unit"));
            continue;
        }
        match is_h_simple(&q, opts.seed, opts.cap) {
            Verdict::False { witness } => {
                certs.push(format!("{c}: quotient not H-simple ({witness})"));
                continue;
            }
            Verdict::True { certified, .. } => {
                certs.push(format!("{c}: H-simple unital quotient (certified: {certified})"));
            }
            Verdict::Unknown { reason } => certs.push(format!("{c}: kept, H-simplicity unknown ({reason})")),
        }
        acc = acc.intersect(c)?;
    }
    let mut res = RadicalResult::new(
        "r_Hbm",
        acc,
        format!("(M:H) over maximal ideals M of R ({})", j.method),
    );
    res.certificates = certs;
    Ok(res)
}
