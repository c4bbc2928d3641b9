//! Exact computations with q-deformed noncommutative symmetric functions,
//! permutation tableaux of types A and B, and the PASEP.

pub mod bases;
pub mod cli;
pub mod combinatorics;
pub mod conjectures;
pub mod error;
pub mod output;
pub mod pasep;
pub mod qpoly;
pub mod report;
pub mod tableaux;

pub use error::{Error, Result};
pub use qpoly::LaurentQPoly;
