//! Structure-constant algebras, Hopf data, the smash product and the fixture corpus.

mod algebra;
pub mod fixtures;
mod hopf;
mod report;
pub mod smash;

pub use algebra::{Element, FiniteDimAlgebra};
pub use hopf::HopfAlgebra;
pub use report::{Failure, ValidationReport};
pub use smash::smash_product;
