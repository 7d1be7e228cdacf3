//! Exact arithmetic in Q(beta) for a real algebraic base beta.

mod base;
mod field;
pub(crate) mod poly;
mod real;

pub use base::Base;
pub use field::{FieldElement, NumberField};
pub use real::AlgebraicReal;
