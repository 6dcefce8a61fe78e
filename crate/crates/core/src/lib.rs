pub mod base_change;
pub mod error;
pub mod hnf;
pub mod intersect;
pub mod kisin;
pub mod lattice;
pub mod lparams;
pub mod sample;
pub mod suites;
pub mod weights;

pub use error::{Error, Result};
