//! Hypergeometric-type equations as a computational toolkit.
//!
//! The crate covers the six classical families attached to the operator
//! `sigma(z) d²/dz² + tau(z) d/dz + eta` with `deg sigma <= 2`,
//! `deg tau <= 1` and constant `eta`:
//!
//! * the Gauss function ₂F₁,
//! * the confluent function ₁F₁ and its companion ₂F₀,
//! * the ₀F₁ function,
//! * Gegenbauer functions,
//! * Hermite functions.
//!
//! On top of plain series evaluation ([`series`]) it exposes the discrete
//! symmetry group of each equation ([`symmetry`]), first-order parameter
//! ladders ([`recurrence`]), connection formulas between solution bases
//! ([`connection`]), an exact-arithmetic Rodriguez engine for the classical
//! orthogonal polynomials ([`polynomials`]) and a complex contour quadrature
//! layer with branch tracking that numerically verifies the classical
//! integral representations ([`contour`]).

pub mod connection;
pub mod contour;
pub mod numeric;
pub mod operators;
pub mod params;
pub mod poly;
pub mod polynomials;
pub mod recurrence;
pub mod series;
pub mod symmetry;

pub use numeric::{SeriesResult, SeriesStatus};
pub use params::{Family, FamilyParams};

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("argument lies on the branch cut")]
    BranchCut,
    #[error("pole of the gamma function at {0}")]
    GammaPole(String),
    #[error("zero factor in a denominator product")]
    Division,
    #[error("invalid operator: {0}")]
    InvalidOperator(String),
    #[error("irregular singular point")]
    IrregularPoint,
    #[error("unknown factorization index {0}")]
    UnknownFactorization(usize),
    #[error("argument outside the evaluation domain: {0}")]
    OutOfDomain(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("degenerate normalization: {0}")]
    DegenerateNormalization(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("endpoint exponent makes the integrand non-integrable")]
    NonIntegrableEndpoint,
    #[error("ray truncation error above tolerance")]
    Truncation,
    #[error("parameter constraint violated: {0}")]
    ParameterConstraint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
