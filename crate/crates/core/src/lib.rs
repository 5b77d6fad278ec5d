pub mod algebra;
pub mod classical;
pub mod coeffs;
pub mod report;
pub mod representations;
pub mod roots;
pub mod suite;
pub mod weight;
pub mod error;

pub use error::{Error, Result};
