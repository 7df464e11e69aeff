//! Exact algebra for finite collineation groups of projective 3-space.
//!
//! The crate is layered bottom-up: cyclotomic numbers, dense matrices, finite
//! matrix groups, projective points and lines, homogeneous polynomials,
//! Gröbner bases, and a Riemann–Hurwitz enumerator. [`catalog`] holds the
//! explicit constants and [`verify`] binds them into named checks.

pub mod error;
pub mod cyclo;
pub mod linalg;
pub mod group;
pub mod projgeom;
pub mod poly;
pub mod ideals;
pub mod rhenum;
pub mod catalog;
pub mod verify;

pub use cyclo::CycNum;
pub use linalg::Mat;
pub use error::{Error, Result};
