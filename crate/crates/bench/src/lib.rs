//! Shared fixtures for the benchmark targets.

pub use sextic::{Complex64, System};

/// One fully constructed system (constants, geometry, lattice) for the
/// benches to share; construction itself is benchmarked separately.
pub fn system() -> System {
    System::new().expect("system construction")
}
