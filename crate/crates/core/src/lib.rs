//! Exact solving of sparse polynomial systems through toric resultants.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: exact scalars (rationals, GF(p), GF(p^k)) and univariate polynomials;
//! * [`geometry`]: lattice polytopes, mixed volumes and essential subsets;
//! * [`fill`]: fills of support tuples and generic systems on them;
//! * [`resultant`]: resultant matrices, Division-Method evaluation and a matrix cache;
//! * [`chowpert`]: evaluation of twisted Chow forms and toric perturbations;
//! * [`solver`]: the univariate encoding `(h, h_1, ..., h_n)` and root counts.

pub mod arith;
pub mod chowpert;
pub mod error;
pub mod fill;
pub mod geometry;
pub mod resultant;
pub mod solver;
mod system;

pub use arith::{Field, FieldDesc, Scalar, UniPoly};
pub use error::{Error, Result};
pub use geometry::{Point, Polytope, Support, SupportTuple};
pub use system::{CoeffAssignment, SparseSystem};
