//! Exact support, co-support and adic-finiteness computations for bounded
//! complexes over computable noetherian rings.

pub mod adic;
pub mod complexes;
pub mod corpus;
pub mod derived;
pub mod dvrcalc;
pub mod error;
pub mod exactla;
pub mod grobner;
pub mod ring;
pub mod support;

pub use error::{Error, Result};
