//! Radicals of H-module algebras and the cross-checks between them.

mod baer;
mod brown_mccoy;
mod fisher;
mod jacobson;
pub mod nilradical;
pub mod oracle;
mod report;
pub mod wedderburn;
mod wh;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::exactla::{Subspace, DEFAULT_CAP};

pub use baer::{baer_chain, h_baer_radical, is_h_prime, is_h_semiprime, BaerChain};
pub use brown_mccoy::{classical_brown_mccoy, gt_member, gt_radical, gt_subspace, h_brown_mccoy_radical};
pub use fisher::{fisher_radical, h_locally_nilpotent_radical, BaseRadical};
pub use jacobson::{h_jacobson_radical, smash_radical_in_r};
pub use nilradical::{nilradical, nilradical_with, NilBackend, Nilradical};
pub use report::{comparison_report, Check, CheckStatus, ComparisonReport, Entry};
pub use wh::{wh_exact_set, wh_membership, BChoice, MSequence, Step, WhMembership, WhVerdict};

/// The default seed for every randomized search.
pub const DEFAULT_SEED: u64 = 0xA1CEB;

/// Knobs shared by all radical computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub seed: u64,
    /// Bound on `p^n` for anything that enumerates a finite vector space.
    pub cap: u128,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: DEFAULT_SEED,
            cap: DEFAULT_CAP,
        }
    }
}

/// A computed radical with provenance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalResult {
    pub name: String,
    pub space: Subspace,
    pub method: String,
    pub certificates: Vec<String>,
}

impl RadicalResult {
    pub fn new(name: impl Into<String>, space: Subspace, method: impl Into<String>) -> Self {
        RadicalResult {
            name: name.into(),
            space,
            method: method.into(),
            certificates: Vec::new(),
        }
    }

    pub fn with_certificate(mut self, c: impl Into<String>) -> Self {
        self.certificates.push(c.into());
        self
    }
}

impl Serialize for RadicalResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RadicalResult", 5)?;
        st.serialize_field("basis", &self.space.integer_rows())?;
        st.serialize_field("certificates", &self.certificates)?;
        st.serialize_field("dim", &self.space.dim())?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("name", &self.name)?;
        st.end()
    }
}
