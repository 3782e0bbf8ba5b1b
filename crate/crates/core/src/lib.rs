//! Exact computation of radicals of finite-dimensional Hopf module algebras.
//!
//! Algebras, Hopf algebras and actions are given by structure constants over
//! ℚ or a prime field. On top of exact linear algebra the crate computes
//! H-ideals, the H-Baer chain, H-Jacobson radicals through the smash product,
//! the `G_t` radical and the H-Brown-McCoy radical, and cross-checks them
//! against brute-force enumeration over small finite fields.

pub mod algcore;
pub mod cli;
pub mod error;
pub mod exactla;
pub mod field;
pub mod haction;
pub mod hideal;
pub mod hradical;
pub mod verdict;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
