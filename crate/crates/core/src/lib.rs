//! Exact symbolic verification for Lie algebroids, matched pairs, double
//! vector bundles and Lie bialgebroids.

#![allow(clippy::needless_range_loop)]

pub mod algebroid;
pub mod bialgebroid;
pub mod corpus;
pub mod double_vb;
pub mod error;
pub mod frontend;
pub mod matched_pair;
pub mod poisson;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
pub use report::{CheckOptions, CheckReport, Witness};
