//! Graph families, Laplacian spectra, exact eigenvalue interval counting,
//! and machine checks of diameter-based eigenvalue distribution bounds.
//!
//! The crate is organized around one pipeline: build or ingest graphs
//! ([`graph`], [`families`], [`corpus`]), count Laplacian eigenvalues in
//! rational intervals exactly ([`spectra`]), and evaluate the distribution
//! bounds over whole corpora ([`theorems`]). All verdicts come from exact
//! integer/rational arithmetic; floating point appears only in the
//! informational Jacobi spectrum and in cross-validation tests.

pub mod bits;
pub mod corpus;
pub mod families;
pub mod graph;
pub mod spectra;
pub mod theorems;

pub use graph::{Diameter, Graph, GraphError};
pub use spectra::{count_interval_exact, eigenvalue_rank_test, IntervalQuery};
pub use theorems::{check, check_conjecture, scan, TheoremId};
