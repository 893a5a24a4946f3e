//! Exact symbolic engine for exceptional Jacobi operators.
//!
//! The crate builds exceptional Jacobi operators in the rational gauge from
//! spectral-diagram data, produces their quasi-polynomial eigenfunctions and
//! formal norms, and verifies every claim by exact rational arithmetic.

pub mod exactmath;
pub mod classical;
pub mod darboux;
pub mod diagrams;
pub mod construct;
pub mod verify;
pub mod cli;
