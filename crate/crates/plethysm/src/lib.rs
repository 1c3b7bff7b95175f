//! Exact plethysm of Schur functions.
//!
//! The crate computes the Schur expansion of s_ν∘s_μ with arbitrary-precision
//! coefficients, the closed-form extreme constituents under the lexicographic
//! and conjugate-lexicographic orders, the dominance-maximal constituents via
//! an exact count of plethystic tableaux along a lattice walk, and the
//! classification sweeps (homogeneity, indecomposability, product
//! coincidences) that check those closed forms exhaustively at small degree.
//!
//! Design notes:
//! - Partitions index everything; their parts are checked `u64`. Coefficients
//!   are `BigInt` end to end, with exact rationals inside the power-sum
//!   cross-check oracle.
//! - The production expansion path never materializes individual monomials:
//!   all intermediates live in the monomial-symmetric basis (at most p(d)
//!   keys in degree d), built from power sums of the substituted alphabet via
//!   Newton's identities and a Jacobi–Trudi determinant.
//! - Every closed formula is validated at runtime, and every major algorithm
//!   has an independent oracle somewhere in the test suite.

pub mod engine;
pub mod maxterms;
pub mod monomial;
pub mod partition;
pub mod plethystic;
pub mod powersum;
pub mod schur;
pub mod tableau;
pub mod verify;

pub use engine::{omega_twist, Engine};
pub use maxterms::{leading_term, max_lex, max_translex, maximal_pleth_weights, TermOrder};
pub use partition::{enumerate_partitions, Composition, Partition};
pub use schur::SchurExpansion;
pub use verify::{
    cross_check_expansions, is_homogeneous, is_indecomposable, products_equal,
    verify_homogeneity_classification, verify_square_formula, verify_unique_factorization,
    CoincidenceReport, CrossCheckReport, HomogeneityRecord, HomogeneityReport, ProductKey,
    SquareFormulaReport,
};

use thiserror::Error;

/// Every fallible operation in the crate reports through this one error type.
///
/// The CLI maps [`Error::Verification`] to exit status 1 (a theorem
/// contradiction was found and reported) and everything else to exit status 2
/// (invalid input or an I/O problem).
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse partition literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("not a partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("not a semistandard tableau: {reason}")]
    InvalidTableau { reason: String },

    #[error("{context}: sizes differ ({left:?} vs {right:?})")]
    SizeMismatch {
        context: &'static str,
        left: Vec<u64>,
        right: Vec<u64>,
    },

    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: Vec<u64>, right: Vec<u64> },

    #[error("{context}: expected degree {expected}, found {found}")]
    DegreeMismatch {
        context: &'static str,
        expected: u64,
        found: u64,
    },

    #[error("twist by m = 0 is undefined")]
    TwistByZero,

    #[error("parts {parts:?} are not pairwise distinct")]
    RepeatedParts { parts: Vec<u64> },

    #[error("{context}: partition must be nonempty")]
    EmptyPartition { context: &'static str },

    #[error("expansion is empty; no leading term")]
    EmptyExpansion,

    #[error("input is not a symmetric polynomial: {reason}")]
    NotSymmetric { reason: String },

    #[error("negative coefficient {coefficient} at {partition:?} in a Schur-positive context")]
    NegativeCoefficient {
        partition: Vec<u64>,
        coefficient: String,
    },

    #[error("non-integral coefficient {coefficient} at {partition:?} in the power-sum oracle")]
    NonIntegralCoefficient {
        partition: Vec<u64>,
        coefficient: String,
    },

    #[error("invalid argument: {reason}")]
    InvalidArgument { reason: String },

    #[error("verification failed: {detail}")]
    Verification { detail: String },

    #[error("cache I/O: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache record: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit status the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification { .. } => 1,
            _ => 2,
        }
    }
}
