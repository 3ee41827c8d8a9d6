use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    // lattice plumbing
    #[error("ambient rank mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("quotient is infinite: rank {sup_rank} over rank {sub_rank}")]
    InfiniteQuotient { sup_rank: usize, sub_rank: usize },
    #[error("sublattice is not contained in the superlattice")]
    NotContained,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    // datum validation
    #[error("malformed config: {0}")]
    Config(String),
    #[error("generator {index} has determinant {det}, not ±1 (not a lattice automorphism)")]
    Determinant { index: usize, det: String },
    #[error("generated group exceeds the closure cap of {cap} elements (group not finite?)")]
    GroupNotFinite { cap: usize },
    #[error("quadratic form is not invariant under generator {index}: {detail}")]
    FormNotInvariant { index: usize, detail: String },
    #[error("frobenius does not normalize the inertia group (inertia generator {index})")]
    InertiaNotNormalized { index: usize },
    #[error("ramification index e = {e} is not relatively prime to the cover degree n = {n}")]
    RamificationGcd { n: u64, e: u64 },
    #[error("n = {n} does not divide q - 1 = {q_minus_one}: roots of unity mu_n are not in the residue field")]
    RootsOfUnity { n: u64, q_minus_one: u64 },
    #[error("q = {q} is not a prime power")]
    NotPrimePower { q: u64 },

    // residue points
    #[error("sublattice is not stable under the Galois action")]
    NotGaloisStable,
    #[error("level must be at least 1")]
    InvalidLevel,
    #[error("internal: containment violated: {0}")]
    ContainmentViolation(String),
    #[error("internal: invariant factor {factor} does not divide n = {n}")]
    NTorsionViolation { factor: String, n: u64 },
    #[error("packet group did not stabilize by level {max_level}; trace: {trace}")]
    NotStabilized { max_level: u64, trace: String },

    // cohomology
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("sequence is not exact: {0}")]
    Exactness(String),
    #[error("element is not Frobenius-invariant")]
    NotInH0,
    #[error("module exponent {exponent} does not divide n = {n}")]
    ExponentMismatch { exponent: String, n: String },
    #[error("precondition violated: {0}")]
    Precondition(String),

    // tame symbols
    #[error("invalid tame field: {0}")]
    InvalidField(String),

    // oracle
    #[error("enumeration size {size} exceeds cap {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("element set is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("element-order profile does not determine a unique abelian group")]
    OrderProfileAmbiguous,
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    NotStabilized,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::NotStabilized { .. } => ErrorClass::NotStabilized,
            Error::ContainmentViolation(_) | Error::NTorsionViolation { .. } => ErrorClass::Internal,
            _ => ErrorClass::Input,
        }
    }
}
