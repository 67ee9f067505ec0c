//! A desk-scale numerical laboratory for operators linear over finite-dimensional
//! C*-algebras: Clifford, matrix and finite-group algebra backends, Hilbert module
//! calculus, spectral functional calculus, discretized continuous fields of modules
//! with compactness/Fredholmness certificates, lattice Dirac operators with index
//! computation, and the K-cycle calculus (concordances, Morita, Thom, Bott).
//!
//! Everything is finite-dimensional and certificate-driven: claims that are
//! analytic in the continuum (compactness, Fredholmness, coercivity) are recorded
//! as quantitative verdicts — ε-rank tables across grid refinements, restricted
//! quadratic-form bounds, thresholded kernel counts with certified gaps.

pub mod acceptance;
pub mod algebra;
pub mod calculus;
pub mod dirac;
pub mod error;
pub mod fields;
pub mod hilmod;
pub mod ktheory;
pub mod linalg;
pub mod scenario;

pub use algebra::{Algebra, AlgebraElement, AlgebraKind, CliffordSignature};
pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
