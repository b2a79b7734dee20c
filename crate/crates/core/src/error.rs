use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraKind, ViolationWitness};
use crate::scalar::Field;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),

    #[error("{0} is not defined modulo the requested prime")]
    NotReducible(String),

    #[error("map is not bijective")]
    NotBijective,

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("{kind} expects {expected} product(s), found {found}")]
    ProductArity {
        kind: AlgebraKind,
        expected: usize,
        found: usize,
    },

    #[error("no product labelled {0:?}")]
    UnknownProduct(String),

    #[error("{0} has no left/right opposite")]
    NoOpposite(AlgebraKind),

    #[error("construction not defined for kind {kind}: {reason}")]
    UnsupportedKind { kind: AlgebraKind, reason: &'static str },

    #[error("hypothesis failed: {clause} ({} witness(es))", witnesses.len())]
    Hypothesis {
        clause: String,
        witnesses: Vec<ViolationWitness>,
    },

    #[error("search space {family_size} exceeds budget 2^{budget_log2}")]
    BudgetExceeded { family_size: String, budget_log2: u32 },

    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("candidate does not match the reduction of the rational algebra")]
    ReductionMismatch,

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
}

impl Error {
    pub fn hypothesis(clause: impl Into<String>, witnesses: Vec<ViolationWitness>) -> Self {
        Error::Hypothesis {
            clause: clause.into(),
            witnesses,
        }
    }
}
