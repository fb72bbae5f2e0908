//! Byte layouts for proofs and keys.
//!
//! A proof is the fixed 576-byte concatenation
//! `pi_a || pi_a' || pi_b || pi_b' || pi_c || pi_c' || pi_h || pi_kp`.
//! Keys are written field by field in declaration order; vectors carry a
//! `u32` big-endian element count.

use alloc::vec::Vec;

use super::prover::SnarkProof;
use super::setup::{ProvingKey, VerificationKey};
use super::SnarkError;
use crate::pairing::{G1Point, G2Point, G1_BYTES, G2_BYTES};
use crate::wire::{Reader, WireError};

pub const SNARK_PROOF_BYTES: usize = 7 * G1_BYTES + G2_BYTES;

// Bounds element counts so a corrupt prefix cannot trigger huge allocations.
const MAX_LIST_LEN: u32 = 1 << 20;

fn read_g1(r: &mut Reader<'_>) -> Result<G1Point, SnarkError> {
    Ok(G1Point::from_bytes(r.take(G1_BYTES)?)?)
}

fn read_g2(r: &mut Reader<'_>) -> Result<G2Point, SnarkError> {
    Ok(G2Point::from_bytes(r.take(G2_BYTES)?)?)
}

fn read_len(r: &mut Reader<'_>) -> Result<usize, SnarkError> {
    let n = r.u32()?;
    if n > MAX_LIST_LEN {
        return Err(WireError::Invalid("list length too large").into());
    }
    Ok(n as usize)
}

fn read_g1_list(r: &mut Reader<'_>) -> Result<Vec<G1Point>, SnarkError> {
    let n = read_len(r)?;
    (0..n).map(|_| read_g1(r)).collect()
}

fn read_g2_list(r: &mut Reader<'_>) -> Result<Vec<G2Point>, SnarkError> {
    let n = read_len(r)?;
    (0..n).map(|_| read_g2(r)).collect()
}

fn write_g1_list(out: &mut Vec<u8>, pts: &[G1Point]) {
    out.extend_from_slice(&(pts.len() as u32).to_be_bytes());
    for p in pts {
        out.extend_from_slice(&p.to_bytes());
    }
}

fn write_g2_list(out: &mut Vec<u8>, pts: &[G2Point]) {
    out.extend_from_slice(&(pts.len() as u32).to_be_bytes());
    for p in pts {
        out.extend_from_slice(&p.to_bytes());
    }
}

impl SnarkProof {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(SNARK_PROOF_BYTES);
        out.extend_from_slice(&self.pi_a.to_bytes());
        out.extend_from_slice(&self.pi_a_prime.to_bytes());
        out.extend_from_slice(&self.pi_b.to_bytes());
        out.extend_from_slice(&self.pi_b_prime.to_bytes());
        out.extend_from_slice(&self.pi_c.to_bytes());
        out.extend_from_slice(&self.pi_c_prime.to_bytes());
        out.extend_from_slice(&self.pi_h.to_bytes());
        out.extend_from_slice(&self.pi_kp.to_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, SnarkError> {
        if bytes.len() != SNARK_PROOF_BYTES {
            return Err(SnarkError::ProofLength {
                expected: SNARK_PROOF_BYTES,
                found: bytes.len(),
            });
        }
        let mut r = Reader::new(bytes);
        let proof = SnarkProof {
            pi_a: read_g1(&mut r)?,
            pi_a_prime: read_g1(&mut r)?,
            pi_b: read_g2(&mut r)?,
            pi_b_prime: read_g1(&mut r)?,
            pi_c: read_g1(&mut r)?,
            pi_c_prime: read_g1(&mut r)?,
            pi_h: read_g1(&mut r)?,
            pi_kp: read_g1(&mut r)?,
        };
        r.finish()?;
        Ok(proof)
    }
}

pub fn serialize_snark_proof(proof: &SnarkProof) -> Vec<u8> {
    proof.to_bytes()
}

pub fn deserialize_snark_proof(bytes: &[u8]) -> Result<SnarkProof, SnarkError> {
    SnarkProof::from_bytes(bytes)
}

impl ProvingKey {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        write_g1_list(&mut out, &self.a);
        write_g1_list(&mut out, &self.a_prime);
        write_g2_list(&mut out, &self.b);
        write_g1_list(&mut out, &self.b_prime);
        write_g1_list(&mut out, &self.c);
        write_g1_list(&mut out, &self.c_prime);
        write_g1_list(&mut out, &self.k);
        write_g1_list(&mut out, &self.t_powers);
        out.extend_from_slice(&(self.public_indices.len() as u32).to_be_bytes());
        for &i in &self.public_indices {
            out.extend_from_slice(&(i as u32).to_be_bytes());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, SnarkError> {
        let mut r = Reader::new(bytes);
        let mut pk = ProvingKey {
            a: read_g1_list(&mut r)?,
            a_prime: read_g1_list(&mut r)?,
            b: read_g2_list(&mut r)?,
            b_prime: read_g1_list(&mut r)?,
            c: read_g1_list(&mut r)?,
            c_prime: read_g1_list(&mut r)?,
            k: read_g1_list(&mut r)?,
            t_powers: read_g1_list(&mut r)?,
            public_indices: Vec::new(),
        };
        let n = read_len(&mut r)?;
        for _ in 0..n {
            pk.public_indices.push(r.u32()? as usize);
        }
        r.finish()?;
        let vars = pk.a.len();
        let uniform = [
            pk.a_prime.len(),
            pk.b.len(),
            pk.b_prime.len(),
            pk.c.len(),
            pk.c_prime.len(),
            pk.k.len(),
        ]
        .iter()
        .all(|&l| l == vars);
        if !uniform || pk.public_indices.iter().any(|&i| i >= vars) {
            return Err(WireError::Invalid("inconsistent proving key shape").into());
        }
        Ok(pk)
    }
}

impl VerificationKey {
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(&self.v_a.to_bytes());
        out.extend_from_slice(&self.v_b.to_bytes());
        out.extend_from_slice(&self.v_c.to_bytes());
        out.extend_from_slice(&self.v_z.to_bytes());
        write_g1_list(&mut out, &self.ic);
        write_g1_list(&mut out, &self.ic_c);
        out.extend_from_slice(&self.g1_kbg.to_bytes());
        out.extend_from_slice(&self.g2_kbg.to_bytes());
        out.extend_from_slice(&self.g2_kg.to_bytes());
        out.extend_from_slice(&self.g1.to_bytes());
        out.extend_from_slice(&self.g2.to_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, SnarkError> {
        let mut r = Reader::new(bytes);
        let vk = VerificationKey {
            v_a: read_g2(&mut r)?,
            v_b: read_g1(&mut r)?,
            v_c: read_g2(&mut r)?,
            v_z: read_g2(&mut r)?,
            ic: read_g1_list(&mut r)?,
            ic_c: read_g1_list(&mut r)?,
            g1_kbg: read_g1(&mut r)?,
            g2_kbg: read_g2(&mut r)?,
            g2_kg: read_g2(&mut r)?,
            g1: read_g1(&mut r)?,
            g2: read_g2(&mut r)?,
        };
        r.finish()?;
        if vk.ic.is_empty() || vk.ic.len() != vk.ic_c.len() {
            return Err(WireError::Invalid("verification key without input commitments").into());
        }
        Ok(vk)
    }
}
