//! Transparent proof that the 1023rd element of the sequence
//! `a[n+2] = a[n+1]^2 + a[n]^2`, `a[0] = 1`, `a[1] = 3141592`, over
//! `F_q` (`q = 3 * 2^30 + 1`) is `2338775057`.
//!
//! The trace is interpolated over the order-1024 subgroup, extended 8x onto
//! a coset of the order-8192 subgroup, and committed with Merkle trees.
//! Constraint quotients are combined into one composition polynomial whose
//! low degree is shown with FRI. All challenges come from a SHA3 transcript.

mod constraints;
mod domain;
mod encoding;
mod fri;
mod proof;
mod trace;

pub use constraints::{
    compose_constraints, composition_at, constraint_quotients, generate_program_constraints,
    transition_vanishing, transition_vanishing_at, CompositionPoly, ConstraintKind, ConstraintSet,
    QuotientsAndRemainders,
};
pub use domain::{
    build_domains, interpolate_trace, low_degree_extend, root_of_unity, Domains, BLOWUP,
    COSET_SHIFT, EVAL_DOMAIN_SIZE, TRACE_DOMAIN_SIZE,
};
pub use encoding::{deserialize_stark_proof, serialize_stark_proof};
pub use fri::{fold_pair, fri_commit, fri_fold, next_domain, FriLayer};
pub use proof::{
    check_stark, replay_challenges, stark_prove, stark_prove_with, stark_verify, Challenges,
    Opening, PhaseHook, QueryBundle, StarkParams, StarkPhase, StarkProof, DEFAULT_NUM_QUERIES,
    MAX_FRI_LAYERS, QUERY_BOUND, TRACE_OFFSETS,
};
pub use trace::{generate_trace, Trace, CLAIMED_RESULT, FIRST_VALUE, SECOND_VALUE, TRACE_LEN};

use crate::algebra::AlgebraError;
use crate::commit::CommitError;
use crate::wire::WireError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StarkError {
    #[error("{0} constraint leaves a nonzero remainder; the trace is not valid")]
    ConstraintRemainder(ConstraintKind),
    #[error("invalid parameters: {0}")]
    InvalidParameters(&'static str),
    #[error("proof rejected: {0}")]
    Rejected(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Commit(#[from] CommitError),
    #[error(transparent)]
    Wire(#[from] WireError),
}
