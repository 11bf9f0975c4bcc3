//! Permutation groups: permutations, stabilizer chains and graph
//! automorphism groups.

mod automorphism;
mod chain;
mod partition;
mod perm;

use thiserror::Error;

pub use automorphism::{automorphism_group, automorphism_search, is_automorphism, AutomorphismSearch};
pub use chain::StabilizerChain;
pub use perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("permutation of degree {found} where degree {expected} was expected")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image list is not a bijection")]
    NotBijective,
}
