//! Exact invariants of weighted noncommutative curves over the reals.
//!
//! The crate models Klein and Witt surfaces, their local data at points,
//! weight insertion, orbifold Euler characteristics and the resulting
//! domestic / elliptic / tubular / wild trichotomy. A twisted power series
//! engine checks the local ring theory, and an enumerator rebuilds the
//! tables of real curves with nonnegative orbifold Euler characteristic.

pub mod algebra;
pub mod cli;
pub mod curve_file;
pub mod error;
pub mod ktheory;
mod linear;
pub mod local_data;
pub mod report;
pub mod skew_series;
pub mod weighted_curve;
pub mod witt_surface;
pub mod zoo;

pub use error::{Error, Result, ValidationError};
