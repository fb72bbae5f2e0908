//! BN128 groups, scalar multiplication and the optimal Ate pairing.
//!
//! Points travel on the wire as uncompressed affine coordinates, each
//! coordinate a 32-byte big-endian integer: `x || y` for G1 (64 bytes) and
//! `x.c0 || x.c1 || y.c0 || y.c1` for G2 (128 bytes). The point at infinity
//! is the all-zero block.

mod ate;
mod curve;

pub use ate::{final_exponentiation, miller_loop, pairing, Gt, BN_U};
pub use curve::{AffinePoint, CurveParams, G1Curve, G1Point, G2Curve, G2Point};

use crate::algebra::{AlgebraError, Fp, Fq2, PrimeField};

pub const G1_BYTES: usize = 64;
pub const G2_BYTES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("point is not on the {0} curve")]
    NotOnCurve(&'static str),
    #[error("G2 point is outside the order-r subgroup")]
    NotInSubgroup,
    #[error("final exponentiation of zero")]
    ZeroFinalExponentiation,
    #[error("expected {expected} bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error(transparent)]
    Field(#[from] AlgebraError),
}

fn read_fp(bytes: &[u8]) -> Result<Fp, PairingError> {
    let arr: &[u8; 32] = bytes.try_into().expect("32-byte chunk");
    Ok(Fp::from_bytes_be(arr)?)
}

impl G1Point {
    pub fn to_bytes(&self) -> [u8; G1_BYTES] {
        let mut out = [0u8; G1_BYTES];
        if !self.is_infinity() {
            out[..32].copy_from_slice(&self.x().to_bytes_be());
            out[32..].copy_from_slice(&self.y().to_bytes_be());
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, PairingError> {
        if bytes.len() != G1_BYTES {
            return Err(PairingError::Length {
                expected: G1_BYTES,
                found: bytes.len(),
            });
        }
        if bytes.iter().all(|&b| b == 0) {
            return Ok(G1Point::infinity());
        }
        G1Point::new(read_fp(&bytes[..32])?, read_fp(&bytes[32..])?)
    }
}

impl G2Point {
    pub fn to_bytes(&self) -> [u8; G2_BYTES] {
        let mut out = [0u8; G2_BYTES];
        if !self.is_infinity() {
            out[..32].copy_from_slice(&self.x().c0.to_bytes_be());
            out[32..64].copy_from_slice(&self.x().c1.to_bytes_be());
            out[64..96].copy_from_slice(&self.y().c0.to_bytes_be());
            out[96..].copy_from_slice(&self.y().c1.to_bytes_be());
        }
        out
    }

    /// Decodes and validates both the twist equation and subgroup membership.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, PairingError> {
        if bytes.len() != G2_BYTES {
            return Err(PairingError::Length {
                expected: G2_BYTES,
                found: bytes.len(),
            });
        }
        if bytes.iter().all(|&b| b == 0) {
            return Ok(G2Point::infinity());
        }
        let x = Fq2::new(read_fp(&bytes[..32])?, read_fp(&bytes[32..64])?);
        let y = Fq2::new(read_fp(&bytes[64..96])?, read_fp(&bytes[96..])?);
        let point = G2Point::new(x, y)?;
        if !point.in_prime_subgroup() {
            return Err(PairingError::NotInSubgroup);
        }
        Ok(point)
    }
}
