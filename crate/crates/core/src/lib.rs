//! Exact combinatorics of interval subdivisions of simplicial complexes.
//!
//! Everything here is integer-exact: f-, h-, gamma-, local h- and local
//! gamma-vectors, the hyperoctahedral statistics behind them, and the
//! verification suites that re-derive every table and recurrence by
//! exhaustive enumeration.

pub mod balanced_ffk;
pub mod bounds;
pub mod error;
pub mod eulerian;
pub mod gamma_main;
pub mod interval;
pub mod local_h;
pub mod polynomials;
pub mod report;
pub mod signed_perms;
pub mod simplicial;
pub mod suites;

pub use error::Error;
pub type Result<T> = std::result::Result<T, Error>;
