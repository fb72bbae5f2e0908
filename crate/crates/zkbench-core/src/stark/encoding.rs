//! Proof layout, all integers big-endian:
//!
//! ```text
//! blowup u32 | num_queries u32 | layers u32
//! trace_root | cp_root | fri_root * layers | final_constant u32
//! per query: 3 trace openings, then `layers` opening pairs
//! opening:   value u32 | path index u32 | siblings (32 B each)
//! ```
//!
//! Path lengths are implied by tree heights: 13 for the trace and
//! composition trees, one less per folded layer.

use alloc::vec::Vec;

use super::domain::EVAL_DOMAIN_SIZE;
use super::proof::{Opening, QueryBundle, StarkProof, MAX_FRI_LAYERS, QUERY_BOUND};
use super::StarkError;
use crate::algebra::Fq;
use crate::commit::MerklePath;
use crate::wire::{Reader, WireError};

const BASE_HEIGHT: usize = EVAL_DOMAIN_SIZE.trailing_zeros() as usize;

fn write_opening(out: &mut Vec<u8>, o: &Opening) {
    out.extend_from_slice(&o.value.to_u32().to_be_bytes());
    o.path.write_to(out);
}

fn read_opening(r: &mut Reader<'_>, height: usize) -> Result<Opening, StarkError> {
    let value = Fq::from_u32_canonical(r.u32()?)?;
    let (path, used) = MerklePath::from_bytes(r.remaining(), height)?;
    r.advance(used);
    Ok(Opening { value, path })
}

pub fn serialize_stark_proof(proof: &StarkProof) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(&proof.blowup.to_be_bytes());
    out.extend_from_slice(&proof.num_queries.to_be_bytes());
    out.extend_from_slice(&(proof.fri_roots.len() as u32).to_be_bytes());
    out.extend_from_slice(&proof.trace_root);
    out.extend_from_slice(&proof.cp_root);
    for root in &proof.fri_roots {
        out.extend_from_slice(root);
    }
    out.extend_from_slice(&proof.final_constant.to_u32().to_be_bytes());
    for q in &proof.queries {
        for o in &q.trace {
            write_opening(&mut out, o);
        }
        for [a, b] in &q.layers {
            write_opening(&mut out, a);
            write_opening(&mut out, b);
        }
    }
    out
}

pub fn deserialize_stark_proof(bytes: &[u8]) -> Result<StarkProof, StarkError> {
    let mut r = Reader::new(bytes);
    let blowup = r.u32()?;
    let num_queries = r.u32()?;
    let layers = r.u32()? as usize;
    if layers > MAX_FRI_LAYERS {
        return Err(WireError::Invalid("too many FRI layers").into());
    }
    if num_queries as usize > QUERY_BOUND {
        return Err(WireError::Invalid("too many queries").into());
    }
    let trace_root = r.digest()?;
    let cp_root = r.digest()?;
    let fri_roots = (0..layers)
        .map(|_| r.digest())
        .collect::<Result<Vec<_>, _>>()?;
    let final_constant = Fq::from_u32_canonical(r.u32()?)?;

    let mut queries = Vec::with_capacity(num_queries as usize);
    for _ in 0..num_queries {
        let trace = [
            read_opening(&mut r, BASE_HEIGHT)?,
            read_opening(&mut r, BASE_HEIGHT)?,
            read_opening(&mut r, BASE_HEIGHT)?,
        ];
        let mut pairs = Vec::with_capacity(layers);
        for k in 0..layers {
            pairs.push([
                read_opening(&mut r, BASE_HEIGHT - k)?,
                read_opening(&mut r, BASE_HEIGHT - k)?,
            ]);
        }
        queries.push(QueryBundle {
            trace,
            layers: pairs,
        });
    }
    r.finish()?;
    Ok(StarkProof {
        blowup,
        num_queries,
        trace_root,
        cp_root,
        fri_roots,
        final_constant,
        queries,
    })
}
