//! Exact-arithmetic laboratory for trace functions of rank-1 sheaves on the
//! affine line over prime fields.
//!
//! The crate computes kernel transforms of trace functions, predicts the
//! generic rank, candidate singularities and conductor bounds of a transform
//! through the Euler-Poincare calculus, and ships empirical verifiers for
//! square-root cancellation, second-moment irreducibility and the classical
//! worked examples (Fourier/Kloosterman, Conrey-Iwaniec, the Polymath8
//! kernel, multiplicative convolution by a Kloosterman sheaf).
//!
//! Module map:
//! - [`gf`]: arithmetic in `F_p` and `F_{p^nu}`, trace/norm maps, additive
//!   and multiplicative characters;
//! - [`ratfun`]: exact algebra of univariate/bivariate rational functions
//!   (normalization, resultants, pole censuses, structural tests);
//! - [`sheaves`]: symbolic rank-1 sheaf descriptors (Artin-Schreier, Kummer,
//!   tensor products) with local invariants and conductors;
//! - [`transform`]: the kernel transform on trace functions plus the
//!   Euler-Poincare fiber-dimension machinery and transform reports;
//! - [`diagnostics`]: moment series, irreducibility verdicts, twist censuses
//!   and Weil-bound audits;
//! - [`casestudies`]: packaged reproductions of the worked examples;
//! - [`cli`]: the command-line front end.

pub mod casestudies;
pub mod cli;
pub mod diagnostics;
pub mod gf;
pub mod ratfun;
pub mod sheaves;
pub mod transform;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("field order {0} exceeds the supported bound {1}")]
    FieldTooLarge(u128, u128),
    #[error("element of degree {elt} used with field of degree {field}")]
    DegreeMismatch { elt: usize, field: usize },
    #[error("no monic irreducible polynomial found (p = {p}, nu = {nu})")]
    NoIrreducible { p: u64, nu: usize },
    #[error("polynomial of degree {0} is not a valid field modulus")]
    BadModulus(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by an identically-zero polynomial")]
    DivisionByZeroPoly,
    #[error("no valid base point for the split test over the supplied field")]
    NoBasePoint,
    #[error("conductor {cond} is not smaller than the characteristic {p}")]
    ConductorTooLarge { cond: usize, p: u64 },
    #[error("descriptors live over different primes ({0} vs {1})")]
    PrimeMismatch(u64, u64),
    #[error("summation domain of size {0} exceeds the work-unit guard {1}")]
    DomainTooLarge(u128, u128),
    #[error("Euler-Poincare samples disagree: {0:?}")]
    InconsistentRank(Vec<(u64, usize)>),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
