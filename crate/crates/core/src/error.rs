//! Crate-wide error type. Domain failures are explicit variants so callers
//! (and the CLI) can map them to stable machine-readable kinds.

use thiserror::Error;

/// Every fallible operation in the crate returns this error type.
///
/// Context mismatches between already-constructed elements are programming
/// errors and panic instead; constructors and parsers return
/// [`Error::ContextMismatch`] where mixed inputs can reach them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Extension degree outside the supported 1..=16 window.
    #[error("extension degree m={m} out of supported range 1..=16")]
    BadDegree { m: u32 },

    /// Modulus fails validation (degree, constant term, or irreducibility).
    #[error("0x{modulus:x} is not a valid degree-{m} field modulus: {reason}")]
    BadModulus {
        m: u32,
        modulus: u64,
        reason: &'static str,
    },

    /// Element bit-vector does not fit the field context.
    #[error("element 0x{bits:x} out of range for a degree-{m} field")]
    ElemOutOfRange { bits: u64, m: u32 },

    /// Malformed field specification string.
    #[error("bad field spec {spec:?}: {reason}")]
    BadFieldSpec { spec: String, reason: String },

    /// Mixed field contexts reached a checked operation.
    #[error("field context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    /// Multiplicative inverse of zero requested.
    #[error("inverse of zero")]
    InverseOfZero,

    /// Exact polynomial division left a remainder; carries the remainder's
    /// leading monomial as a diagnostic.
    #[error("not divisible: remainder leading monomial x^{x} y^{y} z^{z}")]
    NotDivisible { x: u16, y: u16, z: u16 },

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    ZeroPolyDivisor,

    /// Polynomial is not invariant under variable permutations; carries a
    /// monomial whose orbit is unbalanced.
    #[error("not symmetric: witness monomial x^{x} y^{y} z^{z}")]
    NotSymmetric { x: u16, y: u16, z: u16 },

    /// Relative trace of the supplied element is nonzero.
    #[error("relative trace of {elem} is nonzero")]
    TraceNotZero { elem: String },

    /// Extension element expected to lie in the embedded base field does not.
    #[error("{elem} does not lie in the embedded base field")]
    NotInBaseField { elem: String },

    /// Linearized map is singular on the field.
    #[error("linearized polynomial is not a permutation")]
    NotAPermutation,

    /// Reduced composition has a monomial outside the x^e + S + affine form.
    #[error("not decomposable: {reason}")]
    NotDecomposable { reason: String },

    /// A documented operation precondition was violated.
    #[error("precondition violated: {what}")]
    Precondition { what: String },

    /// Work bound exceeded without an explicit override.
    #[error("budget exceeded for {what}: limit {limit}, requested {requested}")]
    BudgetExceeded {
        what: String,
        limit: u64,
        requested: u64,
    },

    /// Too few data points for an evidence verdict.
    #[error("insufficient data: {what}")]
    InsufficientData { what: String },

    /// Text input does not match the polynomial grammar.
    #[error("parse error at byte {at}: {reason}")]
    Parse { at: usize, reason: String },

    /// No field embedding exists between the given contexts.
    #[error("no embedding of a degree-{from_m} field into a degree-{to_m} field")]
    EmbeddingUnavailable { from_m: u32, to_m: u32 },

    /// A symbolic identity that should hold failed on a concrete instance.
    #[error("identity failed: {what}")]
    IdentityFailed { what: String },
}

impl Error {
    /// Stable machine-readable kind, used by the CLI error schema.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::BadDegree { .. } => "bad_degree",
            Error::BadModulus { .. } => "bad_modulus",
            Error::ElemOutOfRange { .. } => "element_out_of_range",
            Error::BadFieldSpec { .. } => "bad_field_spec",
            Error::ContextMismatch { .. } => "context_mismatch",
            Error::InverseOfZero => "inverse_of_zero",
            Error::NotDivisible { .. } => "not_divisible",
            Error::ZeroPolyDivisor => "zero_poly_divisor",
            Error::NotSymmetric { .. } => "not_symmetric",
            Error::TraceNotZero { .. } => "trace_nonzero",
            Error::NotInBaseField { .. } => "not_in_base_field",
            Error::NotAPermutation => "not_a_permutation",
            Error::NotDecomposable { .. } => "not_decomposable",
            Error::Precondition { .. } => "precondition",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::InsufficientData { .. } => "insufficient_data",
            Error::Parse { .. } => "parse",
            Error::EmbeddingUnavailable { .. } => "embedding_unavailable",
            Error::IdentityFailed { .. } => "identity_failed",
        }
    }

    /// True for errors that should map to the budget exit code.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
