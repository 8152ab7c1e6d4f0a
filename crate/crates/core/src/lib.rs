//! Numerics for the degree-6 trigonometric system
//!
//!   s' = c^5,  c' = -s^5,  s(0) = 0, c(0) = 1,
//!
//! whose solution pair satisfies s^6 + c^6 = 1. The crate provides:
//!
//! - truncated power-series arithmetic and Taylor-jet analytic
//!   continuation for s, c, the quotient t = s/c and the companion pair
//!   (f, g) ([`series`], [`solution`]);
//! - an independent evaluator for the elliptic function with invariants
//!   g2 = 0, g3 = 16, whose reciprocal globally extends s^2 c^2
//!   ([`weierstrass`]);
//! - the constants K, L, omega, r by quadrature and Gamma closed forms
//!   ([`constants`]);
//! - the hexagon-band geometry, the 4K-periodic band extension of t, the
//!   disc-to-hexagon conformal map, the monomial extension classifier and
//!   the identity residual checks ([`geometry`], [`band`]);
//! - a seeded verification suite over all of the above ([`verify`]).

pub mod band;
pub mod constants;
pub mod error;
pub mod geometry;
pub mod quad;
pub mod series;
pub mod solution;
pub mod value;
pub mod verify;
pub mod weierstrass;

pub use constants::Constants;
pub use error::{Error, Result};
pub use geometry::HexGeometry;
pub use num_complex::Complex64;
pub use series::TruncatedSeries;
pub use solution::{ContinuationPath, JetPair, Solution};
pub use value::ExtComplex;
pub use weierstrass::Lattice;

/// Everything wired together: constants, band geometry, the continuation
/// evaluator and the lattice evaluator.
#[derive(Debug, Clone)]
pub struct System {
    pub constants: Constants,
    pub geometry: HexGeometry,
    pub solution: Solution,
    pub lattice: Lattice,
}

impl System {
    /// Computes the constants, builds the geometry and the lattice, and
    /// runs the lattice construction self-checks.
    pub fn new() -> Result<Self> {
        let constants = Constants::compute();
        let geometry = HexGeometry::new(&constants);
        let solution = Solution::new(geometry, constants.delta_rot);
        let lattice = Lattice::new(&constants)?;
        Ok(System {
            constants,
            geometry,
            solution,
            lattice,
        })
    }

    pub fn eval_sc(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        self.solution.eval_sc(z)
    }

    pub fn eval_t(&self, z: Complex64) -> Result<ExtComplex> {
        self.solution.eval_t(z)
    }

    pub fn eval_fg(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        self.solution.eval_fg(z)
    }

    pub fn wp(&self, z: Complex64) -> ExtComplex {
        self.lattice.wp(z)
    }

    pub fn wp_prime(&self, z: Complex64) -> ExtComplex {
        self.lattice.wp_prime(z)
    }

    pub fn q_global(&self, z: Complex64) -> ExtComplex {
        self.lattice.q_global(z)
    }

    pub fn t_band(&self, z: Complex64) -> Result<ExtComplex> {
        band::t_band(&self.solution, &self.geometry, z)
    }

    pub fn schwarz_christoffel(&self, w: Complex64) -> Result<Complex64> {
        band::schwarz_christoffel(&self.constants, w)
    }

    pub fn sc_inverse_residual(&self, z: Complex64) -> Result<f64> {
        band::sc_inverse_residual(&self.solution, &self.constants, z)
    }

    pub fn identity_residual_s12(&self, z: Complex64) -> Result<f64> {
        band::identity_residual_s12(&self.solution, &self.lattice, z)
    }

    pub fn identity_residual_s24(&self, z: Complex64) -> Result<(f64, f64)> {
        band::identity_residual_s24(&self.solution, &self.lattice, z)
    }

    pub fn band_period(&self, m: i64, n: i64) -> Result<f64> {
        band::band_period(&self.constants, m, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_is_send_and_sync() {
        // Grid rendering evaluates points from many threads at once.
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<System>();
    }
}
