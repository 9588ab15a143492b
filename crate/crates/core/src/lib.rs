//! Exact verification of fixed and cofixed Hilbert series for finite general
//! linear groups and their parabolic subgroups acting on polynomial rings
//! modulo Frobenius powers of the maximal ideal.

pub mod error;
pub mod action;
pub mod bivariate;
pub mod check;
pub mod cli;
pub mod engine;
pub mod gf;
pub mod linalg;
pub mod mpoly;
pub mod orbits;
pub mod qtcomb;
pub mod series;

pub use error::{Error, Result};
