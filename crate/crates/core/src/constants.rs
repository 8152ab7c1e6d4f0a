//! The constants of the system, each obtained by two independent routes
//! where a cross-check exists:
//!
//! - K = integral of (1 + x^6)^{-1/3} over (0, 1)
//!   = Gamma(1/6)^2 / (12 Gamma(1/3))
//! - L = integral of (1 - x^6)^{-1/3} over (0, 1), cube-root endpoint
//!   singularity; K = (sqrt 3 / 2) L by hexagon geometry.
//! - omega = Gamma(1/6) Gamma(1/2) / (6 * 2^{1/3} Gamma(2/3)), the least
//!   positive zero of the derivative of the associated elliptic function;
//!   the Gamma duplication formula at z = 1/6 gives omega = K.
//! - r = 4^4 / 5^5, the Picard existence radius, exact as a rational.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad;

/// Lanczos coefficients, g = 7, 9 terms (the GSL/Boost-published set,
/// digits as published).
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Gamma function for positive real arguments via the Lanczos
/// approximation, relative error around 1e-13 over the range used here.
pub fn gamma(x: f64) -> Result<f64> {
    // NaN must fail the gate too, hence the negated comparison.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(x > 0.0) {
        return Err(Error::OutOfDomain {
            what: "gamma",
            value: x,
        });
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection keeps the Lanczos sum in its accurate range.
        return std::f64::consts::PI
            / ((std::f64::consts::PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

/// K by the Gamma closed form.
pub fn k_gamma() -> f64 {
    let g16 = gamma_unchecked(1.0 / 6.0);
    g16 * g16 / (12.0 * gamma_unchecked(1.0 / 3.0))
}

/// K by quadrature of (1 + x^6)^{-1/3} over (0, 1). The integrand is
/// smooth, so adaptive Gauss-Legendre panels suffice.
pub fn k_quad() -> f64 {
    quad::adaptive_gl(&|x: f64| 1.0 / (1.0 + x.powi(6)).cbrt(), 0.0, 1.0, 1e-13)
}

/// L by tanh-sinh quadrature of (1 - x^6)^{-1/3} over (0, 1).
///
/// Split at 1/2 and substitute x -> 1 - v on the singular half so the
/// distance to the singularity is the integration variable itself; that
/// way 1 - x^6 = v (1 + (1-v) + ... + (1-v)^5) is formed without
/// cancellation right down to the endpoint.
pub fn l_quad() -> f64 {
    let smooth = quad::tanh_sinh(&|x: f64| 1.0 / (1.0 - x.powi(6)).cbrt(), 0.0, 0.5, 1e-12);
    let singular = quad::tanh_sinh(
        &|v: f64| {
            let w = 1.0 - v;
            let geom = 1.0 + w * (1.0 + w * (1.0 + w * (1.0 + w * (1.0 + w))));
            1.0 / (v * geom).cbrt()
        },
        0.0,
        0.5,
        1e-12,
    );
    smooth + singular
}

/// omega by the Gamma closed form.
pub fn omega_gamma() -> f64 {
    gamma_unchecked(1.0 / 6.0) * gamma_unchecked(0.5)
        / (6.0 * 2.0f64.cbrt() * gamma_unchecked(2.0 / 3.0))
}

/// Relative residual of the Gamma duplication formula
/// 2 Gamma(1/2) Gamma(2z) = 2^{2z} Gamma(z) Gamma(z + 1/2)
/// at z in (0, 1/2].
pub fn duplication_residual(z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 0.5) {
        return Err(Error::OutOfDomain {
            what: "duplication_residual",
            value: z,
        });
    }
    let lhs = 2.0 * gamma_unchecked(0.5) * gamma_unchecked(2.0 * z);
    let rhs = 2.0f64.powf(2.0 * z) * gamma_unchecked(z) * gamma_unchecked(z + 0.5);
    Ok((lhs - rhs).abs() / rhs.abs())
}

/// Numerator and denominator of the Picard radius 4^4 / 5^5.
pub const PICARD_RADIUS_NUM: u32 = 256;
pub const PICARD_RADIUS_DEN: u32 = 3125;

/// The constants table. `k` (the canonical quarter-period used by the band
/// geometry) is taken from the Gamma route; `k_quad` records the quadrature
/// value for cross-checking.
#[derive(Debug, Clone, Copy)]
pub struct Constants {
    pub k: f64,
    pub k_quad: f64,
    pub l: f64,
    pub omega: f64,
    /// gamma = e^{i pi/3}, the rotation sending s to gamma s.
    pub gamma_rot: Complex64,
    /// delta = e^{i pi/6} = gamma^{1/2}; delta^6 = -1.
    pub delta_rot: Complex64,
}

impl Constants {
    pub fn compute() -> Self {
        let half_sqrt3 = 0.5 * 3.0f64.sqrt();
        Constants {
            k: k_gamma(),
            k_quad: k_quad(),
            l: l_quad(),
            omega: omega_gamma(),
            gamma_rot: Complex64::new(0.5, half_sqrt3),
            delta_rot: Complex64::new(half_sqrt3, 0.5),
        }
    }

    pub fn picard_radius(&self) -> f64 {
        f64::from(PICARD_RADIUS_NUM) / f64::from(PICARD_RADIUS_DEN)
    }

    pub fn two_k(&self) -> f64 {
        2.0 * self.k
    }

    pub fn four_k(&self) -> f64 {
        4.0 * self.k
    }
}
