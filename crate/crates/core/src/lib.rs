//! Exact computation of generalized Hurwitz numbers from the semi-infinite
//! wedge, together with series-level verification of their spectral curves
//! and quantum curves.
//!
//! Everything in this crate is exact: the scalar type is an
//! arbitrary-precision rational, series are truncated formal power series
//! with exact coefficients, and the quantum-curve checks run over an
//! exponential-polynomial coefficient ring in which equality with zero is
//! decidable. No floating point is used anywhere in the library.
//!
//! The main layers, bottom up:
//! - [`rings`]: rationals, polynomials in the genus parameter, and the
//!   exponential-polynomial ring [`rings::ExpPoly`].
//! - [`series`]: truncated power series over a pluggable coefficient ring,
//!   the Lambert W expansion, and a multivariate series in power-sum
//!   variables ([`series::MultiSeries`]).
//! - [`partitions`]: integer partitions, border strips, and symmetric-group
//!   characters via the Murnaghan-Nakayama rule.
//! - [`fock`]: a finite-support model of the charged infinite wedge space,
//!   used as a brute-force oracle for every character-formula computation.
//! - [`hurwitz`]: disconnected and connected q-double, r-spin and mixed
//!   Hurwitz numbers, with three mutually independent computation paths.
//! - [`spectral`]: the y(x) series of each family and spectral-curve checks.
//! - [`quantum`]: exact differential-operator algebra and quantum-curve
//!   annihilation checks.
//! - [`cli`]: the command-line front end (`compute`, `table`, `verify`).
//!
//! The `examples/` directory of this crate has one runnable example per
//! capability; `cargo run --example spectral_curves` is a good starting
//! point.

pub mod cli;
pub mod fock;
pub mod hurwitz;
pub mod partitions;
pub mod quantum;
pub mod rings;
pub mod series;
pub mod spectral;

pub use partitions::Partition;
pub use rings::{ExpPoly, LambdaPoly, Rational};
pub use series::TruncSeries;
