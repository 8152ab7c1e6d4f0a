//! Quadrature kernels: Gauss-Legendre panels with adaptive bisection for
//! smooth integrands, tanh-sinh (double-exponential) for integrable
//! endpoint singularities.

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use num_complex::Complex64;

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton
/// iteration on the Legendre recurrence. Accurate to ~1 ulp for the orders
/// used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess.
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Recurrence for P_n(x) and its derivative.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn gl32() -> &'static (Vec<f64>, Vec<f64>) {
    static TABLE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    TABLE.get_or_init(|| gauss_legendre(32))
}

fn gl64() -> &'static (Vec<f64>, Vec<f64>) {
    static TABLE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    TABLE.get_or_init(|| gauss_legendre(64))
}

fn gl_panel<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, table: &(Vec<f64>, Vec<f64>)) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (&x, &w) in table.0.iter().zip(&table.1) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

fn gl_panel_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    table: &(Vec<f64>, Vec<f64>),
) -> Complex64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &w) in table.0.iter().zip(&table.1) {
        acc += f(mid + half * x) * w;
    }
    acc * half
}

/// Adaptive 32-point Gauss-Legendre: a panel is accepted when bisecting it
/// moves the estimate by less than `panel_tol`.
pub fn adaptive_gl<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panel_tol: f64) -> f64 {
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let mid = 0.5 * (a + b);
        let left = gl_panel(f, a, mid, gl32());
        let right = gl_panel(f, mid, b, gl32());
        if (left + right - whole).abs() <= tol || depth == 0 {
            return left + right;
        }
        recurse(f, a, mid, left, 0.5 * tol, depth - 1)
            + recurse(f, mid, b, right, 0.5 * tol, depth - 1)
    }
    let whole = gl_panel(f, a, b, gl32());
    recurse(f, a, b, whole, panel_tol, 20)
}

/// Adaptive 64-point Gauss-Legendre over a complex-valued integrand of a
/// real parameter (used for path integrals along a segment).
pub fn adaptive_gl_complex<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    panel_tol: f64,
) -> Complex64 {
    fn recurse<F: Fn(f64) -> Complex64>(
        f: &F,
        a: f64,
        b: f64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    ) -> Complex64 {
        let mid = 0.5 * (a + b);
        let left = gl_panel_complex(f, a, mid, gl64());
        let right = gl_panel_complex(f, mid, b, gl64());
        if (left + right - whole).norm() <= tol || depth == 0 {
            return left + right;
        }
        recurse(f, a, mid, left, 0.5 * tol, depth - 1)
            + recurse(f, mid, b, right, 0.5 * tol, depth - 1)
    }
    let whole = gl_panel_complex(f, a, b, gl64());
    recurse(f, a, b, whole, panel_tol, 24)
}

/// Tanh-sinh quadrature on (a, b).
///
/// Nodes are placed at x = a + (b-a)/(1 + e^{-2u}) with u = (pi/2) sinh t,
/// so offsets from either endpoint are formed without cancellation and an
/// integrable algebraic singularity at an endpoint is harmless. Nodes that
/// collapse onto an endpoint in double precision are skipped; their weights
/// are far below the tolerance by then.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    let len = b - a;
    if len == 0.0 {
        return 0.0;
    }

    let term = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u.abs()).exp();
        let sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
        let weight = 0.5 * len * FRAC_PI_2 * t.cosh() * sech2;
        let x = if u <= 0.0 {
            a + len * (1.0 / (1.0 + (-2.0 * u).exp()))
        } else {
            b - len * (1.0 / (1.0 + (2.0 * u).exp()))
        };
        if x <= a || x >= b || weight == 0.0 {
            return 0.0;
        }
        let v = f(x);
        if v.is_finite() {
            weight * v
        } else {
            0.0
        }
    };

    const T_MAX: f64 = 6.5;
    let mut h = 1.0;
    let mut previous = f64::MAX;
    for level in 0..12 {
        let mut sum = term(0.0);
        let mut k = 1usize;
        loop {
            let t = k as f64 * h;
            if t > T_MAX {
                break;
            }
            let contribution = term(t) + term(-t);
            sum += contribution;
            if contribution.abs() < 1e-18 * sum.abs().max(1e-300) && t > 3.0 {
                break;
            }
            k += 1;
        }
        let estimate = h * sum;
        if level > 0 && (estimate - previous).abs() <= tol * estimate.abs().max(1.0) {
            return estimate;
        }
        previous = estimate;
        h *= 0.5;
    }
    previous
}
