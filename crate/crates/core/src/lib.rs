//! Exact computations for an exceptional collection of thirteen line bundles
//! on an Enriques surface obtained by smoothing a rational elliptic surface
//! with two contracted (-4)-curves.
//!
//! The numerics live in [`lattice`]; [`pencil`] and [`interpolation`] turn
//! plane geometry into rank problems; [`verifier`] assembles the proof.

pub mod algebra;
pub mod interpolation;
pub mod lattice;
pub mod pencil;
pub mod verifier;

pub use algebra::{AlgebraError, Field, Matrix, MultiPoly, Ring, UniPoly};

pub type Rational = num_rational::BigRational;
pub type QPoly = UniPoly<Rational>;
pub type QMultiPoly = MultiPoly<Rational>;
pub type QMatrix = Matrix<Rational>;
