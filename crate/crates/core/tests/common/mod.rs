#![allow(dead_code)]
#[allow(clippy::approx_constant, clippy::type_complexity)]
pub mod oracles;

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}
