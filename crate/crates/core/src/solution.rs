//! The solution pair of s' = c^5, c' = -s^5 with s(0) = 0, c(0) = 1.
//!
//! Local solutions are Taylor jets generated by the coefficient recurrence
//!
//!   a_{n+1} = [z^n](C^5) / (n+1),   b_{n+1} = -[z^n](S^5) / (n+1),
//!
//! where S, C are the partial series for s and c about the current center.
//! The fifth powers are accumulated incrementally (one convolution
//! coefficient per product per step), so a jet of order N costs O(N^2).
//!
//! Global values come from straight-segment re-expansion from the origin.
//! The only singularities bounding a jet's disc of convergence are the
//! vertices of the hexagon tiling, so the step policy is: advance by
//! min(0.4 * distance to the nearest vertex, 0.5) and re-expand at order 32.
//! The per-step truncation error then decays like 0.4^33, and the conserved
//! quantity s^6 + c^6 - 1 (never renormalized) doubles as a running
//! accuracy diagnostic.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{HexGeometry, EPS_VERTEX};
use crate::series::TruncatedSeries;
use crate::value::ExtComplex;

/// Re-expansion order along continuation paths.
pub const STEP_ORDER: usize = 32;
/// Tolerated drift of s^6 + c^6 - 1 in initial data fed back into the
/// recurrence during continuation.
pub const SEXTIC_DRIFT_TOL: f64 = 1e-9;
/// |c| below this reports the quotient s/c as a pole.
pub const POLE_THRESHOLD: f64 = 1e-8;

const STEP_VERTEX_FRACTION: f64 = 0.4;
const STEP_CAP: f64 = 0.5;
const MAX_PATH_STEPS: usize = 20_000;

/// Taylor coefficients of the solution pair about a center with values
/// (s0, c0), to the requested order. The initial data must satisfy the
/// sextic relation up to the tolerated drift.
pub fn taylor_pair(
    s0: Complex64,
    c0: Complex64,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    if order < 1 {
        return Err(Error::OrderTooSmall { order, min: 1 });
    }
    let residual = (s0.powu(6) + c0.powu(6) - 1.0).norm();
    if residual >= SEXTIC_DRIFT_TOL {
        return Err(Error::InvalidInitialState { residual });
    }

    let zero = Complex64::new(0.0, 0.0);
    let n = order;
    let mut a = vec![zero; n + 1];
    let mut b = vec![zero; n + 1];
    a[0] = s0;
    b[0] = c0;

    // Degree-k coefficients of s^2, s^4, s^5 (and the c-side), filled as
    // the solution coefficients become available.
    let mut s2 = vec![zero; n];
    let mut s4 = vec![zero; n];
    let mut s5 = vec![zero; n];
    let mut c2 = vec![zero; n];
    let mut c4 = vec![zero; n];
    let mut c5 = vec![zero; n];

    for k in 0..n {
        let conv = |u: &[Complex64], v: &[Complex64]| -> Complex64 {
            (0..=k).map(|i| u[i] * v[k - i]).sum()
        };
        s2[k] = conv(&a, &a);
        c2[k] = conv(&b, &b);
        s4[k] = conv(&s2, &s2);
        c4[k] = conv(&c2, &c2);
        s5[k] = conv(&s4, &a);
        c5[k] = conv(&c4, &b);
        let step = (k + 1) as f64;
        a[k + 1] = c5[k] / step;
        b[k + 1] = -s5[k] / step;
    }

    Ok((TruncatedSeries::new(a)?, TruncatedSeries::new(b)?))
}

/// A Taylor pair about a center, with the radius inside which the
/// continuation engine is willing to use it.
#[derive(Debug, Clone)]
pub struct JetPair {
    pub center: Complex64,
    pub s_series: TruncatedSeries,
    pub c_series: TruncatedSeries,
    pub trust_radius: f64,
}

impl JetPair {
    /// Values (s, c) at z by Horner evaluation in z - center.
    pub fn eval(&self, z: Complex64) -> (Complex64, Complex64) {
        let h = z - self.center;
        (self.s_series.eval(h), self.c_series.eval(h))
    }

    /// s at the center.
    pub fn s_value(&self) -> Complex64 {
        self.s_series.coeff(0)
    }

    /// c at the center.
    pub fn c_value(&self) -> Complex64 {
        self.c_series.coeff(0)
    }

    pub fn order(&self) -> usize {
        self.s_series.order()
    }

    /// Residual of the sextic relation at the center; a direct read of the
    /// accumulated continuation error.
    pub fn sextic_residual(&self) -> f64 {
        (self.s_value().powu(6) + self.c_value().powu(6) - 1.0).norm()
    }
}

/// The re-expansion centers of a straight-segment continuation from the
/// origin. Consecutive points are within the step policy radius of the
/// earlier point, and the whole segment keeps clear of the vertex
/// exclusion disks.
#[derive(Debug, Clone)]
pub struct ContinuationPath {
    pub target: Complex64,
    pub step_points: Vec<Complex64>,
}

/// Evaluator for s, c and the derived functions t = s/c and the rotated
/// pair (f, g).
#[derive(Debug, Clone, Copy)]
pub struct Solution {
    geom: HexGeometry,
    delta_rot: Complex64,
}

impl Solution {
    pub fn new(geom: HexGeometry, delta_rot: Complex64) -> Self {
        Solution { geom, delta_rot }
    }

    pub fn geometry(&self) -> &HexGeometry {
        &self.geom
    }

    /// Step policy: how far a jet centered at z may be trusted.
    pub fn step_radius(&self, z: Complex64) -> f64 {
        (STEP_VERTEX_FRACTION * self.geom.vertex_distance(z)).min(STEP_CAP)
    }

    /// Jet of the solution pair about `center` from the values (s0, c0)
    /// there.
    pub fn local_taylor(
        &self,
        center: Complex64,
        s0: Complex64,
        c0: Complex64,
        order: usize,
    ) -> Result<JetPair> {
        let (s_series, c_series) = taylor_pair(s0, c0, order)?;
        Ok(JetPair {
            center,
            s_series,
            c_series,
            trust_radius: self.step_radius(center),
        })
    }

    /// Plans the straight-segment path from 0 to `target`: checks the band
    /// and the vertex exclusion zone, then lays out re-expansion centers
    /// by the step policy. Pure geometry; no series work.
    pub fn plan_path(&self, target: Complex64) -> Result<ContinuationPath> {
        if !self.geom.in_band(target) {
            return Err(Error::OutOfBand { z: target });
        }
        let origin = Complex64::new(0.0, 0.0);
        let (clearance, vertex) = self.geom.segment_vertex_clearance(origin, target);
        if clearance < EPS_VERTEX {
            return Err(Error::PathNearSingularity {
                target,
                vertex,
                clearance,
                radius: EPS_VERTEX,
            });
        }

        let mut step_points = vec![origin];
        let mut current = origin;
        loop {
            let remaining = target - current;
            let distance = remaining.norm();
            let radius = self.step_radius(current);
            if distance <= radius {
                step_points.push(target);
                return Ok(ContinuationPath {
                    target,
                    step_points,
                });
            }
            current += remaining * (radius / distance);
            step_points.push(current);
            if step_points.len() > MAX_PATH_STEPS {
                return Err(Error::PathTooLong { target });
            }
        }
    }

    /// Continues the solution pair from the origin to z along a straight
    /// segment, returning the jet about z at the requested order.
    pub fn continue_to(&self, z: Complex64, order: usize) -> Result<JetPair> {
        let path = self.plan_path(z)?;
        let mut jet = self.local_taylor(
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            STEP_ORDER,
        )?;
        for window in path.step_points.windows(2) {
            let next = window[1];
            let (s, c) = jet.eval(next);
            let step_order = if next == z { order } else { STEP_ORDER };
            jet = self.local_taylor(next, s, c, step_order)?;
        }
        if jet.order() != order {
            // Path with a single point (z = 0): rebuild at the asked order.
            jet = self.local_taylor(jet.center, jet.s_value(), jet.c_value(), order)?;
        }
        Ok(jet)
    }

    /// (s(z), c(z)).
    pub fn eval_sc(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let jet = self.continue_to(z, STEP_ORDER)?;
        Ok((jet.s_value(), jet.c_value()))
    }

    /// t(z) = s(z)/c(z), as a point of the sphere. |c| below the pole
    /// threshold reports the point at infinity.
    pub fn eval_t(&self, z: Complex64) -> Result<ExtComplex> {
        let (s, c) = self.eval_sc(z)?;
        if c.norm() < POLE_THRESHOLD {
            Ok(ExtComplex::Infinity)
        } else {
            Ok(ExtComplex::Finite(s / c))
        }
    }

    /// The companion pair (f, g) = (conj(delta) s(delta z), c(delta z))
    /// satisfying f' = g^5, g' = f^5 and g^6 - f^6 = 1.
    pub fn eval_fg(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        let w = self.delta_rot * z;
        let (s, c) = self.eval_sc(w)?;
        Ok((self.delta_rot.conj() * s, c))
    }
}
