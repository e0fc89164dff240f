//! Exact symmetric-function arithmetic over `Q(q,t)` and tools for measuring
//! when sequences of symmetric functions stabilize under padding.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`]: partitions, padding `λ[n]`, diagram cells.
//! * [`qt`]: Laurent polynomials in `q, t` and q-multinomials.
//! * [`coeffs`] and [`matrix`]: combinatorial change-of-basis coefficients and
//!   the cached matrices between the bases `m, e, h, p, p/z, s`.
//! * [`symfunc`]: homogeneous symmetric functions.
//! * [`frobenius`]: coinvariant, shuffle and Macdonald generators.
//! * [`stability`]: stable ranges, transfer conditions and certificates.
//! * [`tableaux`]: single brick and special rim hook tableaux.

pub mod coeffs;
pub mod error;
pub mod frobenius;
pub mod limits;
pub mod matrix;
pub mod partition;
pub mod qt;
pub mod stability;
pub mod symfunc;
pub mod tableaux;

pub use error::{Error, Result};
pub use matrix::{change_of_basis_matrix, Basis, CoefficientMatrix};
pub use partition::{Cell, Composition, Partition};
pub use qt::{QtPoly, Rational};
pub use symfunc::SymFunc;
