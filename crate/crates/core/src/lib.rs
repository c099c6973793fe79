//! Numerics for the (k,a)-generalized Fourier transform.

// Negated float comparisons are deliberate: NaN must fail the test.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod geometry;
pub mod harness;
pub mod par;
pub mod quad;
pub mod rearrange;
pub mod specfun;
pub mod spectral;
pub mod transform;

pub use error::{FkaError, Result};
pub use num_complex::Complex64 as C64;
