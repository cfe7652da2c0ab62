//! Index of sequences over cyclic groups Z_n.
//!
//! The crate computes `Index(S)` and the related set functions, searches for
//! subsequences of index `n`, machine-checks the `n = 4k + 2` counterexample
//! family, evaluates the Farey-interval machinery used for prime moduli, and
//! runs exhaustive searches for the extremal lengths `t(n)` and `T(n)`.
//!
//! Every verifier and search is also registered by name in
//! [`commands::Registry`], which is what the `zindex` binary dispatches on.

pub mod commands;
pub mod error;
pub mod extremal;
pub mod family;
pub mod farey;
pub mod geometry;
pub mod index;
pub mod report;
mod subset;
pub mod sweeps;
pub mod zn;

pub use error::{Error, Result};
pub use index::{IndexReport, SubseqWitness, SumIndexSet};
pub use zn::{Modulus, NormalizedSequence, Residue, ZnSequence};
