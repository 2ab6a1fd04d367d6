//! Exact computations with finite-dimensional Lie algebras over the
//! rationals: structure theory, Chevalley–Eilenberg and Leibniz
//! (co)homology, and executable checks of the relations between them.
//!
//! Everything is exact. Floating point never enters a rank or a verdict.

pub mod catalog;
pub mod cechain;
pub mod error;
pub mod exact;
pub mod io;
pub mod leibniz;
pub mod liealg;
mod par;
pub mod repn;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{Matrix, Rational, Vector};
pub use liealg::{LieAlgebra, Subspace};
pub use repn::Representation;
