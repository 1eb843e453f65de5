//! Exact symbolic verification of lambda-deformed group schemes over F_p:
//! the deformed affine line and plane, the Frobenius kernel G, the unit-group
//! scheme of its group algebra, cleft torsors, and coinvariant quotients.
//!
//! All arithmetic is exact over F_p[λ, a, c, d]; nothing is floated, sampled
//! modulo a random prime, or normalized heuristically. Every verification
//! suite reports per-check pass/fail with a rendered witness on failure.

pub mod algebra;
pub mod cleft;
pub mod exec;
pub mod hom;
pub mod hopf;
pub mod param;
pub mod poly;
pub mod quotient;
pub mod report;
pub mod schemes;
pub mod suites;
pub mod torsor;
pub mod unit_group;

/// Errors surfaced by construction and arithmetic. Verification failures are
/// not errors; they are `fail` entries in a report.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("not a prime: {0}")]
    NotPrime(u32),
    #[error("unsupported prime {0}: {1}")]
    UnsupportedPrime(u32, String),
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("denominator reduces to zero: {0}")]
    ZeroDenominator(String),
    #[error("denominator not certifiably invertible nor a nonzerodivisor: {0}")]
    BadDenominator(String),
    #[error("not invertible ({reason}): {rendered}")]
    NotInvertible { reason: String, rendered: String },
    #[error("homomorphism `{0}` is ill-defined: {1}")]
    IllDefinedHom(String, String),
    #[error("basis expansion failed: {0}")]
    BasisExpansion(String),
    #[error("convolution recursion has no invertible cofactor at `{0}`")]
    ConvolutionStuck(String),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
