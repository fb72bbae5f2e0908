use super::qap::Qap;
use super::r1cs::Witness;
use super::setup::ProvingKey;
use super::SnarkError;
use crate::algebra::{Field, Fr};
use crate::pairing::{AffinePoint, CurveParams, G1Point, G2Point};

/// The eight group elements of a proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnarkProof {
    pub pi_a: G1Point,
    pub pi_a_prime: G1Point,
    pub pi_b: G2Point,
    pub pi_b_prime: G1Point,
    pub pi_c: G1Point,
    pub pi_c_prime: G1Point,
    pub pi_h: G1Point,
    pub pi_kp: G1Point,
}

fn msm<'a, C: CurveParams + 'a>(
    bases: &'a [AffinePoint<C>],
    scalars: impl IntoIterator<Item = (usize, &'a Fr)>,
) -> AffinePoint<C> {
    scalars
        .into_iter()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| bases[i].mul(s))
        .sum()
}

/// Builds the proof elements from the witness-weighted key encodings.
///
/// The A and C terms exclude public variables, whose shares the verifier
/// rebuilds from the input commitments; `B` covers every variable.
pub fn prove(pk: &ProvingKey, witness: &Witness, qap: &Qap) -> Result<SnarkProof, SnarkError> {
    let h = qap.quotient(witness)?;
    if pk.t_powers.len() < h.coeffs().len() {
        return Err(SnarkError::Shape {
            expected: h.coeffs().len(),
            found: pk.t_powers.len(),
        });
    }
    let w = &witness.values;
    let all = || w.iter().enumerate();
    let private = || {
        w.iter()
            .enumerate()
            .filter(|(k, _)| !pk.public_indices.contains(k))
    };

    Ok(SnarkProof {
        pi_a: msm(&pk.a, private()),
        pi_a_prime: msm(&pk.a_prime, private()),
        pi_b: msm(&pk.b, all()),
        pi_b_prime: msm(&pk.b_prime, all()),
        pi_c: msm(&pk.c, private()),
        pi_c_prime: msm(&pk.c_prime, private()),
        pi_h: msm(&pk.t_powers, h.coeffs().iter().enumerate()),
        pi_kp: msm(&pk.k, all()),
    })
}
