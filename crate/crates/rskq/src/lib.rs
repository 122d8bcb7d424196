//! Combinatorics of multisegments for type-A quiver Hecke modules.
//!
//! The crate implements the Robinson–Schensted–Knuth transform on
//! multisegments together with its explicit inverse, the graded counting
//! invariants attached to permissible pairs (C, D, kappa, lambda-tilde,
//! the normalization shift d), and a quantum-shuffle engine for graded
//! characters of segment, ladder, indicator and RSK-standard products.
//!
//! Everything is exact: integer endpoints, Laurent polynomials over the
//! integers, no floating point. The `verify` module sweeps exhaustive
//! desk-scale grids over all implemented identities; the `rskq` binary
//! exposes the same machinery as a small command-line tool.
//!
//! See the `examples/` directory for one runnable walkthrough per major
//! capability.

pub mod characters;
pub mod cli;
mod error;
pub mod invariants;
pub mod mackey;
pub mod multisegments;
pub mod root_lattice;
pub mod rsk;
pub mod verify;

pub use error::{Error, Result};
pub use multisegments::{LadderMultisegment, Multisegment, Segment};
pub use root_lattice::{RootVector, Word};
