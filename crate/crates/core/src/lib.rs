//! Distance spectra of minimal `(k,g)`-cages (Moore graphs) and their
//! subdivision graphs.
//!
//! Every closed-form result is paired with an independent oracle: BFS
//! distance matrices, a cyclic Jacobi eigensolver and an exact integer
//! characteristic polynomial. The [`verify`] module runs the whole battery
//! for one `(k,g)`.

pub mod cages;
pub mod closed_forms;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod polynomial;
pub mod regularity;
pub mod scalar;
pub mod spectra;
pub mod surd;
pub mod verify;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::Matrix;
pub use polynomial::Polynomial;
pub use scalar::Scalar;
pub use spectra::Spectrum;
pub use surd::{ExactSpectrum, QuadSurd};

/// Integer matrix: adjacency, distance, shell and incidence matrices.
pub type IntMatrix = Matrix<i64>;
/// Symmetric integer matrix; symmetry is a runtime invariant, not a type.
pub type IntSymMatrix = IntMatrix;
pub type RatMatrix = Matrix<BigRational>;
pub type RealMatrix = Matrix<f64>;
pub type RationalPolynomial = Polynomial<BigRational>;
pub type IntPolynomial = Polynomial<BigInt>;
