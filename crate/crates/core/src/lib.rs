//! Exact computational models of affine Weyl groups and the Iwahori-Hecke
//! algebras attached to them, including the unequal-parameter and
//! automorphism-extended variants that show up for classical groups of odd
//! orthogonal and metaplectic type.
//!
//! Everything is exact: group elements are integral affine transformations,
//! coefficients are Laurent polynomials over arbitrary-precision integers,
//! and the numeric paths use arbitrary-precision rationals. The crate is
//! organised as
//!
//! * [`laurent`] - the coefficient ring `Z[q, q^-1]` and its rational cousin,
//! * [`coxeter`] - affine Weyl groups as groups of affine transformations,
//!   with the word problem solved through root positivity,
//! * [`hecke`] - Hecke algebra elements and multiplication over a chosen
//!   Coxeter system and parameter set,
//! * [`presentations`] - the four named algebras, their generator-level
//!   verification, and the isomorphisms between matched pairs,
//! * [`specdims`] - dimension bookkeeping and eigenvalue extraction for the
//!   rank-one subalgebra decompositions,
//! * [`plancherel`] - weighted growth series and Steinberg formal degrees.

pub mod coxeter;
pub mod hecke;
pub mod laurent;
pub mod plancherel;
pub mod presentations;
pub mod specdims;

pub use coxeter::{AffineElt, AffineRoot, CoxeterSystem, ExtendedElt, SignedPerm, SystemKind};
pub use hecke::{Gen, HeckeAlgebra, HeckeElt, HeckeParams};
pub use laurent::{LaurentPoly, RatLaurent};
pub use plancherel::{FdResult, PoincareSeries};
pub use presentations::{AlgebraName, AlgebraSpec, IsoMap, VerifyReport, WeightedEmbedding};

/// Default bound on ball enumeration depth; callers can raise it explicitly.
pub const DEFAULT_BALL_CAP: usize = 14;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("generator index {index} out of range for a system of rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("rank mismatch: expected ambient dimension {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("requested radius {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("element does not belong to this group or algebra")]
    ForeignElement,
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("division is not exact")]
    InexactDivision,
    #[error("evaluation at zero is undefined for Laurent polynomials")]
    EvalAtZero,
    #[error("{name} requires n >= {min}, got {n}")]
    RankTooSmall { name: String, min: usize, n: usize },
    #[error("defining relation failed: {0}")]
    RelationFailure(String),
    #[error("invalid character datum: i={i}, sign={sign}")]
    InvalidDimRequest { i: usize, sign: String },
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
