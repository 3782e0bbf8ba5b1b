//! Exact linear algebra over ℚ and `F_p`.

mod enumerate;
mod matrix;
mod subspace;
pub mod vector;

pub use enumerate::{check_cap, enumerate_subspaces, DEFAULT_CAP};
pub use matrix::Matrix;
pub use subspace::Subspace;
pub use vector::Vector;
