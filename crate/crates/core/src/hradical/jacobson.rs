use super::nilradical::{nilradical_with, NilBackend};
use super::wedderburn::Blocks;
use super::{Options, RadicalResult};
use crate::algcore::smash::{self, smash_product};
use crate::error::Result;
use crate::exactla::vector;
use crate::haction::HModuleAlgebra;

/// `{ a : a # 1 in rad(R # H) }`.
pub fn smash_radical_in_r(m: &HModuleAlgebra, opts: &Options) -> Result<RadicalResult> {
    let a = smash_product(m)?;
    let j = nilradical_with(&a, NilBackend::Auto, opts.cap)?;
    let space = smash::r_preimage(m, &j.space)?;
    Ok(RadicalResult::new("rad_smash_cap_r", space, format!("nilradical of R#H ({})", j.method))
        .with_certificate(format!("dim rad(R#H) = {}", j.space.dim())))
}

/// Intersection in `R` of the annihilators of the simple `R # H`-modules on
/// which `R` acts nonzero. Each simple module is a block of
/// `(R # H) / rad(R # H)`, and its annihilator is the matching maximal ideal.
pub fn h_jacobson_radical(m: &HModuleAlgebra, opts: &Options) -> Result<RadicalResult> {
    let a = smash_product(m)?;
    let j = nilradical_with(&a, NilBackend::Auto, opts.cap)?;
    let blocks = Blocks::new(&a, &j.space)?;
    let mut space = m.r().whole();
    let mut used = 0;
    let mut skipped = 0;
    for i in 0..blocks.len() {
        let r_acts = (0..m.dim_r()).any(|k| {
            let x = smash::embed_r(m, &m.r().basis_vector(k));
            !vector::is_zero(&blocks.component(i, &x))
        });
        if !r_acts {
            skipped += 1;
            continue;
        }
        used += 1;
        space = space.intersect(&smash::r_preimage(m, &blocks.maximal_ideal(i))?)?;
    }
    Ok(RadicalResult::new(
        "r_Hj",
        space,
        format!("annihilators of simple R#H-modules ({})", j.method),
    )
    .with_certificate(format!("{} simple blocks, {used} with R acting nonzero, {skipped} excluded", blocks.len())))
}
