//! Exact construction of the classical Z2 x Z2-graded Lie algebras as matrix algebras,
//! together with machinery that checks their defining identities.
//!
//! Scalars live in Q(√2) so that parafermion generators, which carry a √2 prefactor,
//! stay exact.

pub mod axioms;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod families;
pub mod graded;
pub mod json;
pub mod parafermions;

pub use error::{Error, Result};
