//! Exact stability computations for polarized weighted pointed nodal curves.
//!
//! Curves are given by their dual graph. The crate decides slope stability through
//! extremes intervals and the h0 inequality, computes Chow weights of diagonal
//! one-parameter subgroups through Newton polygons, twists degree vectors into the
//! admissible set, and evaluates Donaldson-Futaki invariants of two-weight test
//! configurations.
//!
//! All arithmetic is exact. Functions are generic over [`Scalar`], which is
//! implemented for `num_rational::Ratio<T>`; [`Rational`] is the default backend.

pub mod bounds;
pub mod chow_weight;
pub mod curve_model;
pub mod degree_class;
pub mod error;
pub mod k_stability;
pub mod newton;
pub mod scalar;
pub mod slope;

pub use curve_model::{Curve, CurveModel, Polarization, Subcurve};
pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; overflow panics, so keep inputs small.
pub type Rational64 = num_rational::Rational64;
