use num_bigint::BigUint;
use sha3::{Digest as _, Sha3_256};

use super::{CommitError, Digest};
use crate::algebra::{FieldElement, FieldId, PrimeField};

const CHALLENGE_LABEL: &[u8] = b"chal";

/// Fiat-Shamir transcript over a running SHA3-256 state.
///
/// Each absorption sets `state = SHA3-256(state || label || data)`. Drawing a
/// challenge reads the state as a big-endian integer and then absorbs the
/// old state under the label `"chal"`, so consecutive draws differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcript {
    state: Digest,
    absorb_count: u64,
}

impl Transcript {
    pub fn new(domain: &[u8]) -> Self {
        Transcript {
            state: Sha3_256::digest(domain).into(),
            absorb_count: 0,
        }
    }

    pub fn state(&self) -> &Digest {
        &self.state
    }

    pub fn absorb_count(&self) -> u64 {
        self.absorb_count
    }

    pub fn absorb(&mut self, label: &[u8], data: &[u8]) {
        let mut h = Sha3_256::new();
        h.update(self.state);
        h.update(label);
        h.update(data);
        self.state = h.finalize().into();
        self.absorb_count += 1;
    }

    fn advance(&mut self) -> BigUint {
        let value = BigUint::from_bytes_be(&self.state);
        let old = self.state;
        self.absorb(CHALLENGE_LABEL, &old);
        value
    }

    /// Draws an element of `F` by reducing the state modulo its modulus.
    pub fn challenge<F: PrimeField>(&mut self) -> F {
        F::from_biguint(&self.advance())
    }

    /// Runtime-tagged form of [`Transcript::challenge`].
    pub fn challenge_field(&mut self, field: FieldId) -> FieldElement {
        FieldElement::new(self.advance(), field)
    }

    /// Draws an index in `[0, bound)` by modular reduction.
    pub fn challenge_index(&mut self, bound: usize) -> Result<usize, CommitError> {
        if bound == 0 {
            return Err(CommitError::ZeroBound);
        }
        let v = self.advance() % BigUint::from(bound);
        Ok(v.iter_u64_digits().next().unwrap_or(0) as usize)
    }
}
