//! Pairing-based SNARK for the statement "I know `x` with `x^3 + x + 5 = y`".
//!
//! Pipeline: circuit -> R1CS -> witness -> QAP -> trusted setup -> proof
//! of eight group elements -> five pairing checks. Proofs carry no prover
//! randomness, so they are deterministic for a given key and witness and do
//! not hide the witness in the zero-knowledge sense.

mod encoding;
mod prover;
mod qap;
mod r1cs;
mod setup;
mod verifier;

pub use encoding::{deserialize_snark_proof, serialize_snark_proof, SNARK_PROOF_BYTES};
pub use prover::{prove, SnarkProof};
pub use qap::{r1cs_to_qap, Qap};
pub use r1cs::{build_cubic_circuit, generate_witness, var, R1cs, Witness};
pub use setup::{trusted_setup, ProvingKey, ToxicWaste, VerificationKey};
pub use verifier::{check_pairings, verify_snark, PairingChecks};

use crate::algebra::AlgebraError;
use crate::pairing::PairingError;
use crate::wire::WireError;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SnarkError {
    #[error("witness does not satisfy the circuit (nonzero QAP remainder)")]
    Unsatisfied,
    #[error("secret evaluation point is a root of the vanishing polynomial")]
    SecretPointIsRoot,
    #[error("toxic waste values must be nonzero")]
    ZeroToxicValue,
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("expected {expected} public inputs, found {found}")]
    PublicInputCount { expected: usize, found: usize },
    #[error("proof must be {expected} bytes, found {found}")]
    ProofLength { expected: usize, found: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Point(#[from] PairingError),
    #[error(transparent)]
    Wire(#[from] WireError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fr, PrimeField};
    use crate::pairing::{G1Point, G2Point};

    struct Fixture {
        qap: Qap,
        pk: ProvingKey,
        vk: VerificationKey,
        proof: SnarkProof,
    }

    fn fixture(waste: ToxicWaste) -> Fixture {
        let circuit = build_cubic_circuit();
        let qap = r1cs_to_qap(&circuit).unwrap();
        let (pk, vk) = trusted_setup(&qap, waste).unwrap();
        let w = generate_witness(&circuit, &Fr::from_u64(3)).unwrap();
        let proof = prove(&pk, &w, &qap).unwrap();
        Fixture { qap, pk, vk, proof }
    }

    #[test]
    fn honest_proof_passes_every_check() {
        let f = fixture(ToxicWaste::test_vector());
        let checks = check_pairings(&f.vk, &f.proof, &[Fr::from_u64(35)]).unwrap();
        assert_eq!(checks, PairingChecks([true; 5]));
        assert!(verify_snark(&f.vk, &f.proof, &[Fr::from_u64(35)]));
    }

    #[test]
    fn wrong_public_output_fails_quotient_check() {
        let f = fixture(ToxicWaste::test_vector());
        let checks = check_pairings(&f.vk, &f.proof, &[Fr::from_u64(36)]).unwrap();
        assert!(!checks.0[3]);
        assert!(!verify_snark(&f.vk, &f.proof, &[Fr::from_u64(36)]));
    }

    #[test]
    fn doubled_pi_a_fails_first_check() {
        let f = fixture(ToxicWaste::test_vector());
        let mut bad = f.proof.clone();
        bad.pi_a = bad.pi_a.double();
        let checks = check_pairings(&f.vk, &bad, &[Fr::from_u64(35)]).unwrap();
        assert!(!checks.0[0]);
    }

    #[test]
    fn public_input_count_is_enforced() {
        let f = fixture(ToxicWaste::test_vector());
        assert_eq!(
            check_pairings(&f.vk, &f.proof, &[]),
            Err(SnarkError::PublicInputCount {
                expected: 1,
                found: 0
            })
        );
        assert!(!verify_snark(
            &f.vk,
            &f.proof,
            &[Fr::from_u64(35), Fr::from_u64(1)]
        ));
    }

    #[test]
    fn unsatisfied_witness_is_refused() {
        let f = fixture(ToxicWaste::test_vector());
        let circuit = build_cubic_circuit();
        let mut w = generate_witness(&circuit, &Fr::from_u64(3)).unwrap();
        w.values[var::Y] = Fr::from_u64(36);
        assert_eq!(prove(&f.pk, &w, &f.qap), Err(SnarkError::Unsatisfied));
    }

    #[test]
    fn proof_wire_format() {
        let f = fixture(ToxicWaste::test_vector());
        let bytes = serialize_snark_proof(&f.proof);
        assert_eq!(bytes.len(), 576);
        assert_eq!(&bytes[..64], &f.proof.pi_a.to_bytes());
        assert_eq!(&bytes[128..256], &f.proof.pi_b.to_bytes());
        assert_eq!(&bytes[512..], &f.proof.pi_kp.to_bytes());
        assert_eq!(deserialize_snark_proof(&bytes).unwrap(), f.proof);
        assert_eq!(
            deserialize_snark_proof(&bytes[..575]),
            Err(SnarkError::ProofLength {
                expected: 576,
                found: 575
            })
        );
        let mut off_curve = bytes.clone();
        off_curve[63] ^= 1;
        assert!(matches!(
            deserialize_snark_proof(&off_curve),
            Err(SnarkError::Point(_))
        ));
    }

    #[test]
    fn key_wire_formats_round_trip() {
        let f = fixture(ToxicWaste::test_vector());
        let pk_bytes = f.pk.to_bytes();
        assert_eq!(ProvingKey::from_bytes(&pk_bytes).unwrap(), f.pk);
        let vk_bytes = f.vk.to_bytes();
        assert_eq!(VerificationKey::from_bytes(&vk_bytes).unwrap(), f.vk);
        assert!(VerificationKey::from_bytes(&vk_bytes[..vk_bytes.len() - 1]).is_err());
        let mut extended = pk_bytes.clone();
        extended.push(0);
        assert!(matches!(
            ProvingKey::from_bytes(&extended),
            Err(SnarkError::Wire(WireError::TrailingBytes(1)))
        ));
    }

    #[test]
    fn different_waste_rejects_proof() {
        let f = fixture(ToxicWaste::test_vector());
        let mut other = ToxicWaste::test_vector();
        other.k_alpha = Fr::from_u64(11);
        other.t = Fr::from_u64(19);
        let (_, vk2) = trusted_setup(&f.qap, other).unwrap();
        assert!(!verify_snark(&vk2, &f.proof, &[Fr::from_u64(35)]));
    }

    #[test]
    fn infinity_points_do_not_verify_by_accident() {
        let f = fixture(ToxicWaste::test_vector());
        let mut bad = f.proof.clone();
        bad.pi_h = G1Point::infinity();
        bad.pi_b = G2Point::infinity();
        assert!(!verify_snark(&f.vk, &bad, &[Fr::from_u64(35)]));
    }
}
