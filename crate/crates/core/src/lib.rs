//! Exact decision procedures for factorial-closure properties (fc, pfc, qfc,
//! retracts, normality) of subalgebras of Laurent polynomial rings, with
//! machine-checkable certificates and a finite-field brute-force oracle.

pub mod cli;
pub mod cone;
pub mod decide;
pub mod error;
pub mod lattice;
pub mod laurent;
pub mod monoid;
pub mod numsgp;
pub mod oracle;
pub mod rational;
pub mod verdict;
pub mod verify;

pub use error::{Error, Result};
