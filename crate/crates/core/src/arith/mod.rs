//! Exact field arithmetic and the univariate polynomial toolkit.

mod field;
pub mod matrix;
mod poly;

pub use field::{Field, FieldDesc, Gf, Scalar};
pub(crate) use field::is_prime;
pub use poly::{
    first_subresultant, gcd, interpolate, quotient_invert, quotient_reduce, rational_roots,
    squarefree_part, UniPoly,
};
