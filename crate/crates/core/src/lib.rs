//! Exact invariants of singularities: spectra, Bernstein–Sato roots, local
//! cohomology of determinantal varieties and the HRH level.

pub mod bsato;
pub mod cli;
pub mod determinantal;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod hrh;
pub mod oracle;
pub mod spectrum;

pub use error::{HrhError, Result};
pub use hrh::HrhValue;
