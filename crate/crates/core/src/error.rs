use thiserror::Error;

use crate::perm::PermError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("element index {0} out of range")]
    BadIndex(usize),
    #[error("{slot} is not an involution (order {order})")]
    NotInvolution { slot: &'static str, order: u64 },
    #[error("the triple generates a subgroup of order {generated}, not the whole group of order {order}")]
    NotGenerating { generated: usize, order: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{n} does not divide {modulus}")]
    BadDivisor { n: u64, modulus: u64 },
    #[error("{0}")]
    SpecViolation(String),
    #[error("{label} requires n {parity}, got n = {n}")]
    ParityMismatch {
        label: &'static str,
        parity: &'static str,
        n: u64,
    },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
