//! Exact arithmetic: scalars, polynomials, resultants and matrix rank.

pub mod matrix;
pub mod modular;
pub mod multipoly;
pub mod prs;
pub mod scalar;
pub mod unipoly;

pub use matrix::Matrix;
pub use modular::{ModularRank, PrimeSource};
pub use multipoly::{Monomial, MultiPoly};
pub use prs::{resultant, resultant_uni, subresultant_prs};
pub use scalar::{q, qf, Field, Fp, Ring};
pub use unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("modulus must have positive degree")]
    InvalidModulus,
    #[error("not invertible: shares a factor with the modulus")]
    ZeroDivisor,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomial involves variables other than `{0}`")]
    NotUnivariate(String),
    #[error("polynomial is constant in `{0}`")]
    ConstantIn(String),
}
