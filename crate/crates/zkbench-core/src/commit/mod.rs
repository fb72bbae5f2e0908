//! Hash commitments: a domain-separated SHA3-256 Merkle tree and the
//! Fiat-Shamir transcript that supplies all verifier randomness.

mod merkle;
mod transcript;

pub use merkle::{hash_leaf, hash_node, merkle_verify, MerklePath, MerkleTree};
pub use transcript::Transcript;

/// Raw SHA3-256 output.
pub type Digest = [u8; 32];

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CommitError {
    #[error("cannot commit to an empty leaf list")]
    EmptyTree,
    #[error("leaf index {index} out of range for {len} leaves")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("index bound must be at least 1")]
    ZeroBound,
    #[error("truncated path: needed {needed} bytes, {available} available")]
    Truncated { needed: usize, available: usize },
}
