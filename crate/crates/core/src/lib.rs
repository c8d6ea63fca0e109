//! Refined q,t-Catalan polynomials computed two ways: by brute-force
//! enumeration of k-Dyck paths with the rank-tableau bounce statistic, and by
//! assembling rational generating functions from half-open simplicial cones.

pub mod error;
pub mod catalog;
pub mod cli;
pub mod cones;
pub mod exec;
pub mod paths;
pub mod polynomial;
pub mod verify;

pub use error::{Error, Result};
