//! Exact negative-base numeration.
//!
//! Expansions in base `-beta` on an arbitrary interval `[l, l+1)`, the
//! alternate-order admissibility test, the set of `(-beta)`-integers with
//! its gap lengths, and the antimorphism whose square fixes the gap word.
//! All decisions are made in exact arithmetic over Q(beta).

pub mod admissibility;
pub mod algebraic;
pub mod coding;
pub mod digits;
pub mod error;
pub mod expansion;
pub mod integers;
pub mod serial;

pub use algebraic::{AlgebraicReal, Base, FieldElement, NumberField};
pub use error::{Error, Result};
