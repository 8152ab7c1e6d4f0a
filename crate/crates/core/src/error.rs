use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the evaluation and continuation machinery.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("series must retain at least one coefficient")]
    EmptySeries,

    #[error("non-finite series coefficient at index {index}")]
    NonFiniteCoefficient { index: usize },

    #[error("taylor expansion order must be at least {min}, got {order}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("initial data violates s^6 + c^6 = 1: residual {residual:.3e}")]
    InvalidInitialState { residual: f64 },

    #[error("point {z} lies outside the band 2|Im z| < L")]
    OutOfBand { z: Complex64 },

    #[error(
        "path to {target} passes within {clearance:.3e} of the hexagon vertex {vertex} \
         (exclusion radius {radius:.1e})"
    )]
    PathNearSingularity {
        target: Complex64,
        vertex: Complex64,
        clearance: f64,
        radius: f64,
    },

    #[error("continuation path to {target} exceeded the step budget")]
    PathTooLong { target: Complex64 },

    #[error("{what}: argument {value} outside domain")]
    OutOfDomain { what: &'static str, value: f64 },

    #[error("|w| = {modulus} lies outside the closed unit disc")]
    OutsideDisc { modulus: f64 },

    #[error("band period requires m + n = 0 (mod 4) and (m, n) != (0, 0); got m={m}, n={n}")]
    BandPeriodDomain { m: i64, n: i64 },

    #[error("lattice construction self-check failed: {detail}")]
    LatticeCheck { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
