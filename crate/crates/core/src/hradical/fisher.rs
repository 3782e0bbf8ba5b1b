use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::brown_mccoy::classical_brown_mccoy;
use super::nilradical::{nilradical_with, NilBackend};
use super::{baer_chain, Options, RadicalResult};
use crate::error::{Error, Result};
use crate::haction::HModuleAlgebra;

/// Classical radicals that `(r(R):H)` can be built from. In finite
/// dimension the first three all equal the nilradical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseRadical {
    Baer,
    Jacobson,
    Locnil,
    BrownMcCoy,
}

impl BaseRadical {
    pub const ALL: [BaseRadical; 4] = [
        BaseRadical::Baer,
        BaseRadical::Jacobson,
        BaseRadical::Locnil,
        BaseRadical::BrownMcCoy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BaseRadical::Baer => "baer",
            BaseRadical::Jacobson => "jacobson",
            BaseRadical::Locnil => "locnil",
            BaseRadical::BrownMcCoy => "brownmccoy",
        }
    }
}

impl fmt::Display for BaseRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BaseRadical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BaseRadical::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown base radical '{s}' (baer|jacobson|locnil|brownmccoy)")))
    }
}

/// `(r(R):H)`, the largest H-ideal inside the classical radical `r(R)`.
pub fn fisher_radical(m: &HModuleAlgebra, base: BaseRadical, opts: &Options) -> Result<RadicalResult> {
    let (r, method) = match base {
        BaseRadical::BrownMcCoy => (classical_brown_mccoy(m.r(), opts)?, "maximal ideals of R".to_string()),
        _ => {
            let n = nilradical_with(m.r(), NilBackend::Auto, opts.cap)?;
            (n.space, format!("nilradical ({})", n.method))
        }
    };
    let c = m.colon_ideal(&r)?;
    Ok(RadicalResult::new(format!("fisher:{base}"), c, format!("colon ideal of {base} radical via {method}"))
        .with_certificate(format!("dim r(R) = {}", r.dim())))
}

/// `(rad R : H)`; equals `N_1` of the Baer chain.
pub fn h_locally_nilpotent_radical(m: &HModuleAlgebra, opts: &Options) -> Result<RadicalResult> {
    let mut r = fisher_radical(m, BaseRadical::Locnil, opts)?;
    let bc = baer_chain(m)?;
    let n1 = bc.chain.get(1).unwrap_or(&bc.chain[0]);
    if n1 != &r.space {
        return Err(Error::Contradiction(format!(
            "(rad R : H) = {} differs from N_1 = {n1}",
            r.space
        )));
    }
    r.name = "r_Hl".into();
    r.certificates.push("locally nilpotent = nilpotent in finite dimension; equals N_1".into());
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::fixtures;
    use crate::exactla::vector::from_i64s;
    use crate::exactla::Subspace;
    use crate::field::FieldSpec;

    #[test]
    fn examples() {
        let q = FieldSpec::Rationals;
        let o = Options::default();
        let x = Subspace::span(q, [from_i64s(q, &[0, 1])], 2).unwrap();
        let e2 = fixtures::e2(q).unwrap();
        assert_eq!(fisher_radical(&e2, BaseRadical::Baer, &o).unwrap().space, x);
        let e5 = fixtures::e5(q).unwrap();
        assert!(fisher_radical(&e5, BaseRadical::Jacobson, &o).unwrap().space.is_zero());
        assert_eq!(h_locally_nilpotent_radical(&e2, &o).unwrap().space, x);
        assert!(h_locally_nilpotent_radical(&e5, &o).unwrap().space.is_zero());
        assert!(h_locally_nilpotent_radical(&fixtures::e3(q).unwrap(), &o).unwrap().space.is_zero());
    }

    #[test]
    fn trivial_hopf_gives_base_radical() {
        let q = FieldSpec::Rationals;
        let o = Options::default();
        let e1 = fixtures::e1(q).unwrap();
        let e12 = Subspace::span(q, [from_i64s(q, &[0, 1, 0])], 3).unwrap();
        for b in BaseRadical::ALL {
            assert_eq!(fisher_radical(&e1, b, &o).unwrap().space, e12, "{b}");
        }
        assert_eq!("brownmccoy".parse::<BaseRadical>().unwrap(), BaseRadical::BrownMcCoy);
        assert!("nope".parse::<BaseRadical>().is_err());
    }
}
