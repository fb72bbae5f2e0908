use alloc::vec::Vec;

use super::constraints::{
    compose_constraints, composition_at, draw_alphas, generate_program_constraints,
};
use super::domain::{
    build_domains, interpolate_trace, low_degree_extend, Domains, BLOWUP, EVAL_DOMAIN_SIZE,
};
use super::fri::{commit_evaluations, fold_pair, fri_commit, CP_ROOT_LABEL, FRI_ROOT_LABEL};
use super::trace::generate_trace;
use super::StarkError;
use crate::algebra::{Field, Fq, PrimeField};
use crate::commit::{Digest, MerklePath, Transcript};

pub(crate) const TRANSCRIPT_DOMAIN: &[u8] = b"zkbench/stark/fibonacci-square";
const TRACE_ROOT_LABEL: &[u8] = b"trace_root";

/// Query indices range over the first half of the evaluation domain so the
/// layer-0 pair `(i, i + 4096)` and the trace offsets `i + 8`, `i + 16`
/// stay in range.
pub const QUERY_BOUND: usize = EVAL_DOMAIN_SIZE / 2;
pub const DEFAULT_NUM_QUERIES: usize = 10;
/// Offsets of the trace openings: `x`, `g x`, `g^2 x`.
pub const TRACE_OFFSETS: [usize; 3] = [0, BLOWUP, 2 * BLOWUP];
/// Upper bound on folds over an 8192-point domain.
pub const MAX_FRI_LAYERS: usize = EVAL_DOMAIN_SIZE.trailing_zeros() as usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StarkParams {
    pub num_queries: usize,
}

impl Default for StarkParams {
    fn default() -> Self {
        StarkParams {
            num_queries: DEFAULT_NUM_QUERIES,
        }
    }
}

/// A committed value and the Merkle path authenticating it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Opening {
    pub value: Fq,
    pub path: MerklePath,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QueryBundle {
    /// Trace LDE at `i`, `i + 8`, `i + 16`.
    pub trace: [Opening; 3],
    /// Per FRI layer (composition layer first), the pair at `j` and
    /// `j + n/2` where `j = i mod n/2` for a layer of size `n`.
    pub layers: Vec<[Opening; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarkProof {
    pub blowup: u32,
    pub num_queries: u32,
    pub trace_root: Digest,
    pub cp_root: Digest,
    /// Roots of the folded layers, the last one being the constant layer.
    pub fri_roots: Vec<Digest>,
    pub final_constant: Fq,
    pub queries: Vec<QueryBundle>,
}

impl StarkProof {
    pub fn num_layers(&self) -> usize {
        self.fri_roots.len()
    }
}

/// Every verifier challenge in the order it is drawn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Challenges {
    pub alphas: [Fq; 3],
    pub betas: Vec<Fq>,
    pub query_indices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarkPhase {
    Trace,
    Interpolate,
    Lde,
    Commit,
    Constraints,
    Fri,
    Queries,
}

impl StarkPhase {
    pub const ALL: [StarkPhase; 7] = [
        Self::Trace,
        Self::Interpolate,
        Self::Lde,
        Self::Commit,
        Self::Constraints,
        Self::Fri,
        Self::Queries,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Self::Trace => "trace",
            Self::Interpolate => "interpolate",
            Self::Lde => "lde",
            Self::Commit => "commit",
            Self::Constraints => "constraints",
            Self::Fri => "fri",
            Self::Queries => "queries",
        }
    }
}

/// Observer notified as the prover moves between phases. `enter` marks the
/// start of a phase (and the end of the previous one); `finish` marks the
/// end of the last. Lets a std caller time phases without this crate
/// depending on a clock.
pub trait PhaseHook {
    fn enter(&mut self, phase: StarkPhase);
    fn finish(&mut self) {}
}

impl PhaseHook for () {
    fn enter(&mut self, _: StarkPhase) {}
}

fn open(
    tree: &crate::commit::MerkleTree,
    values: &[Fq],
    index: usize,
) -> Result<Opening, StarkError> {
    Ok(Opening {
        value: values[index],
        path: tree.open(index)?,
    })
}

fn draw_queries(transcript: &mut Transcript, n: usize) -> Result<Vec<usize>, StarkError> {
    (0..n)
        .map(|_| Ok(transcript.challenge_index(QUERY_BOUND)?))
        .collect()
}

pub fn stark_prove(params: &StarkParams) -> Result<StarkProof, StarkError> {
    Ok(stark_prove_with(params, &mut ())?.0)
}

/// Runs the full pipeline, reporting phase boundaries to `hook`, and returns
/// the proof with the challenge stream the prover drew.
pub fn stark_prove_with(
    params: &StarkParams,
    hook: &mut dyn PhaseHook,
) -> Result<(StarkProof, Challenges), StarkError> {
    if params.num_queries == 0 || params.num_queries > QUERY_BOUND {
        return Err(StarkError::InvalidParameters(
            "query count must be in 1..=4096",
        ));
    }

    hook.enter(StarkPhase::Trace);
    let trace = generate_trace();
    let domains = build_domains();

    hook.enter(StarkPhase::Interpolate);
    let p = interpolate_trace(&trace, &domains);

    hook.enter(StarkPhase::Lde);
    let trace_evals = low_degree_extend(&p, &domains);

    hook.enter(StarkPhase::Commit);
    let trace_tree = commit_evaluations(&trace_evals)?;
    let mut transcript = Transcript::new(TRANSCRIPT_DOMAIN);
    transcript.absorb(TRACE_ROOT_LABEL, &trace_tree.root());

    hook.enter(StarkPhase::Constraints);
    let cs = generate_program_constraints(&p, &domains)?;
    let composition = compose_constraints(&cs, &mut transcript);

    hook.enter(StarkPhase::Fri);
    let (layers, final_constant) =
        fri_commit(&composition.cp, &domains.eval_domain, &mut transcript)?;

    hook.enter(StarkPhase::Queries);
    let query_indices = draw_queries(&mut transcript, params.num_queries)?;
    let mut queries = Vec::with_capacity(query_indices.len());
    for &idx in &query_indices {
        let trace = [
            open(&trace_tree, &trace_evals, idx + TRACE_OFFSETS[0])?,
            open(&trace_tree, &trace_evals, idx + TRACE_OFFSETS[1])?,
            open(&trace_tree, &trace_evals, idx + TRACE_OFFSETS[2])?,
        ];
        // The constant layer is checked against `final_constant`, not opened.
        let mut pairs = Vec::with_capacity(layers.len() - 1);
        for l in &layers[..layers.len() - 1] {
            let half = l.evaluations.len() / 2;
            let j = idx % half;
            pairs.push([
                open(&l.tree, &l.evaluations, j)?,
                open(&l.tree, &l.evaluations, j + half)?,
            ]);
        }
        queries.push(QueryBundle {
            trace,
            layers: pairs,
        });
    }
    hook.finish();

    let challenges = Challenges {
        alphas: composition.alphas,
        betas: layers.iter().filter_map(|l| l.beta).collect(),
        query_indices,
    };
    let proof = StarkProof {
        blowup: BLOWUP as u32,
        num_queries: params.num_queries as u32,
        trace_root: trace_tree.root(),
        cp_root: layers[0].tree.root(),
        fri_roots: layers[1..].iter().map(|l| l.tree.root()).collect(),
        final_constant,
        queries,
    };
    Ok((proof, challenges))
}

/// Re-derives the challenge stream from the commitments in `proof`.
pub fn replay_challenges(proof: &StarkProof) -> Result<Challenges, StarkError> {
    let mut transcript = Transcript::new(TRANSCRIPT_DOMAIN);
    transcript.absorb(TRACE_ROOT_LABEL, &proof.trace_root);
    let alphas = draw_alphas(&mut transcript);
    transcript.absorb(CP_ROOT_LABEL, &proof.cp_root);
    let mut betas = Vec::with_capacity(proof.fri_roots.len());
    for root in &proof.fri_roots {
        betas.push(transcript.challenge());
        transcript.absorb(FRI_ROOT_LABEL, root);
    }
    let query_indices = draw_queries(&mut transcript, proof.num_queries as usize)?;
    Ok(Challenges {
        alphas,
        betas,
        query_indices,
    })
}

fn reject(reason: &'static str) -> StarkError {
    StarkError::Rejected(reason)
}

fn check_opening(
    root: &Digest,
    opening: &Opening,
    index: usize,
    what: &'static str,
) -> Result<(), StarkError> {
    if opening.path.leaf_index != index || !opening.path.verify(root, &opening.value.to_bytes_be())
    {
        return Err(reject(what));
    }
    Ok(())
}

/// Full verification with the reason for the first failed check.
///
/// The proof's own `num_queries` sets its soundness; callers with a
/// security target should also check that field.
pub fn check_stark(proof: &StarkProof) -> Result<(), StarkError> {
    let layers = proof.num_layers();
    if proof.blowup as usize != BLOWUP {
        return Err(reject("unsupported blowup factor"));
    }
    if proof.num_queries == 0 || proof.queries.len() != proof.num_queries as usize {
        return Err(reject("query count mismatch"));
    }
    if layers > MAX_FRI_LAYERS || proof.queries.iter().any(|q| q.layers.len() != layers) {
        return Err(reject("FRI layer count mismatch"));
    }

    let challenges = replay_challenges(proof)?;
    let h = crate::stark::domain::root_of_unity(EVAL_DOMAIN_SIZE);
    let g = h.pow_u64(BLOWUP as u64);

    // The last layer is constant, so its commitment must be that constant
    // repeated over the final domain.
    let last_root = proof.fri_roots.last().unwrap_or(&proof.cp_root);
    let last_len = EVAL_DOMAIN_SIZE >> layers;
    if commit_evaluations(&alloc::vec![proof.final_constant; last_len])?.root() != *last_root {
        return Err(reject("final layer does not commit to the final constant"));
    }

    for (query, &idx) in proof.queries.iter().zip(&challenges.query_indices) {
        for (opening, offset) in query.trace.iter().zip(TRACE_OFFSETS) {
            check_opening(&proof.trace_root, opening, idx + offset, "trace opening")?;
        }
        let x = Domains::eval_point(h, idx);
        let trace_values = [
            query.trace[0].value,
            query.trace[1].value,
            query.trace[2].value,
        ];
        let mut expected = composition_at(x, trace_values, &challenges.alphas, g)?;

        // `expected` is the claimed value of layer k at position `pos`.
        let mut pos = idx;
        for (k, pair) in query.layers.iter().enumerate() {
            let n = EVAL_DOMAIN_SIZE >> k;
            let half = n / 2;
            let j = idx % half;
            let root = if k == 0 {
                &proof.cp_root
            } else {
                &proof.fri_roots[k - 1]
            };
            check_opening(root, &pair[0], j, "FRI opening")?;
            check_opening(root, &pair[1], j + half, "FRI opening")?;
            let at_pos = if pos == j {
                pair[0].value
            } else {
                pair[1].value
            };
            if at_pos != expected {
                return Err(reject(if k == 0 {
                    "composition mismatch"
                } else {
                    "FRI fold mismatch"
                }));
            }
            let xk = Domains::eval_point(h, j).pow_u64(1 << k);
            expected = fold_pair(pair[0].value, pair[1].value, xk, challenges.betas[k])?;
            pos = j;
        }
        if expected != proof.final_constant {
            return Err(reject("final constant mismatch"));
        }
    }
    Ok(())
}

pub fn stark_verify(proof: &StarkProof) -> bool {
    check_stark(proof).is_ok()
}
