use super::prover::SnarkProof;
use super::setup::VerificationKey;
use super::SnarkError;
use crate::algebra::Fr;
use crate::pairing::{pairing, G1Point};

/// Outcome of each of the five pairing equations, in order: the A, B and C
/// knowledge checks, the quotient check and the combined knowledge check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingChecks(pub [bool; 5]);

impl PairingChecks {
    pub fn all_pass(&self) -> bool {
        self.0.iter().all(|&c| c)
    }
}

/// `ic[0] + sum_i public_i * ic[i + 1]`.
fn input_commitment(ic: &[G1Point], public_inputs: &[Fr]) -> Result<G1Point, SnarkError> {
    if public_inputs.len() + 1 != ic.len() {
        return Err(SnarkError::PublicInputCount {
            expected: ic.len().saturating_sub(1),
            found: public_inputs.len(),
        });
    }
    Ok(core::iter::once(ic[0].clone())
        .chain(public_inputs.iter().zip(&ic[1..]).map(|(x, p)| p.mul(x)))
        .sum())
}

/// Evaluates all five equations without short-circuiting:
///
/// 1. `e(pi_a, V_a) = e(pi_a', g2)`
/// 2. `e(V_b, pi_b) = e(pi_b', g2)`
/// 3. `e(pi_c, V_c) = e(pi_c', g2)`
/// 4. `e(A_io + pi_a, pi_b) = e(pi_h, V_z) * e(C_io + pi_c, g2)`
/// 5. `e(A_io + pi_a + C_io + pi_c, g2_kbg) * e(g1_kbg, pi_b) = e(pi_kp, g2_kg)`
///
/// `A_io` and `C_io` are the public-input shares rebuilt from `ic` and `ic_c`.
pub fn check_pairings(
    vk: &VerificationKey,
    proof: &SnarkProof,
    public_inputs: &[Fr],
) -> Result<PairingChecks, SnarkError> {
    let a_full = &input_commitment(&vk.ic, public_inputs)? + &proof.pi_a;
    let c_full = &input_commitment(&vk.ic_c, public_inputs)? + &proof.pi_c;

    let c1 = pairing(&proof.pi_a, &vk.v_a) == pairing(&proof.pi_a_prime, &vk.g2);
    let c2 = pairing(&vk.v_b, &proof.pi_b) == pairing(&proof.pi_b_prime, &vk.g2);
    let c3 = pairing(&proof.pi_c, &vk.v_c) == pairing(&proof.pi_c_prime, &vk.g2);
    let c4 =
        pairing(&a_full, &proof.pi_b) == pairing(&proof.pi_h, &vk.v_z) * pairing(&c_full, &vk.g2);
    let c5 = pairing(&(&a_full + &c_full), &vk.g2_kbg) * pairing(&vk.g1_kbg, &proof.pi_b)
        == pairing(&proof.pi_kp, &vk.g2_kg);
    Ok(PairingChecks([c1, c2, c3, c4, c5]))
}

/// True iff all five pairing equations hold. A public-input vector of the
/// wrong length is treated as an invalid proof.
pub fn verify_snark(vk: &VerificationKey, proof: &SnarkProof, public_inputs: &[Fr]) -> bool {
    check_pairings(vk, proof, public_inputs).is_ok_and(|c| c.all_pass())
}
