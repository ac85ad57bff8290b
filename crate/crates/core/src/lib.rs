//! Symbolic and numeric toolkit for the reflection equation algebra with
//! hermitian star structure: generator relations and quantum minors,
//! central elements, shapes of irreducible representations, concrete
//! truncated representations, and the highest-weight classification data.
//!
//! Layers, from exact to numeric:
//!
//! * [`scalars`] — Laurent polynomials in `q` over Gaussian rationals.
//! * [`combinatorics`] — ordered index sets and the two orders on them.
//! * [`braid`] — the braid operator and minor-level coefficient tables.
//! * [`rea`] — normal forms, quantum minors, central elements, identity
//!   verification, all with exactly-zero residuals.
//! * [`shapes`] — shape matrices, their transforms and combinatorics.
//! * [`reps`] — finite and truncated Hilbert-space representations with
//!   tolerance-based verification.
//! * [`classify`] — central characters, adapted weights and label
//!   validation.

pub mod braid;
pub mod classify;
pub mod combinatorics;
pub mod error;
pub mod rea;
pub mod reps;
pub mod scalars;
pub mod shapes;

pub use error::CoreError;
pub use scalars::{ExactQ, FloatC, GaussRational};
