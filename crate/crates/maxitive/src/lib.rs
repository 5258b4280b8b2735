//! Capacities (non-additive normalized monotone set functions) on finite
//! point spaces, t-normed integrals against them, and the machinery needed
//! to study which axiom systems pin such integrals down.
//!
//! The crate is organised around a handful of small pieces:
//!
//! * [`capacity`] — subsets of an n-point space, unit-interval function
//!   vectors, capacities and their validation/enumeration;
//! * [`tnorm`] — built-in and user-supplied t-norms plus a grid-based
//!   axiom checker;
//! * [`integral`] — the t-normed integral, an exact finite algorithm and a
//!   dense-grid oracle, wrapped as reusable [`integral::Functional`]s;
//! * [`comonotone`] — comonotonicity tests, samplers and the constructive
//!   gadgets (monotone chains, level raises, squeeze witnesses) used in
//!   the characterization arguments;
//! * [`functional`] — sampled axiom checking for arbitrary functionals;
//! * [`characterize`] — capacity reconstruction from a functional and the
//!   round-trip verification lemmas;
//! * [`extension`] — finitely generated join/scale subspaces, a functional
//!   on them that is monotone and homogeneous yet not comonotone maxitive,
//!   and a one-step extension operator.

pub mod capacity;
pub mod characterize;
pub mod cli;
pub mod comonotone;
pub mod error;
pub mod extension;
pub mod functional;
pub mod integral;
pub mod report;
pub mod tnorm;

pub use capacity::{unit_grid, Capacity, FnVec, Subset};
pub use error::{Error, Result};
pub use report::{Check, CheckReport, Verdict, Witness};
pub use tnorm::TNorm;

/// Absolute tolerance used wherever two computed unit-interval values are
/// compared for equality.
pub const DEFAULT_TOL: f64 = 1e-9;
