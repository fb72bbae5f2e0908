use alloc::vec::Vec;

use num_bigint::BigUint;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use super::qap::Qap;
use super::SnarkError;
use crate::algebra::{Field, Fr, PrimeField};
use crate::pairing::{G1Point, G2Point};

/// Secret setup randomness.
///
/// `rho_a` and `rho_b` blind the A and B encodings; the C encodings and
/// `V_z` use the product `rho_c = rho_a * rho_b`, which is what makes the
/// quotient check `A*B = H*Z + C` balance in the exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToxicWaste {
    pub t: Fr,
    pub k_alpha: Fr,
    pub k_beta: Fr,
    pub k_gamma: Fr,
    pub rho_a: Fr,
    pub rho_b: Fr,
}

impl ToxicWaste {
    /// Fixed reproducible values: `t = 17`, `k = (2, 3, 4)`, `rho = (5, 7)`.
    pub fn test_vector() -> Self {
        ToxicWaste {
            t: Fr::from_u64(17),
            k_alpha: Fr::from_u64(2),
            k_beta: Fr::from_u64(3),
            k_gamma: Fr::from_u64(4),
            rho_a: Fr::from_u64(5),
            rho_b: Fr::from_u64(7),
        }
    }

    /// Draws every value from a ChaCha20 stream seeded with `seed`,
    /// resampling zeros and any `t` that is a root of the vanishing polynomial.
    pub fn from_seed(seed: u64, qap: &Qap) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut draw = |reject_root: bool| loop {
            let mut buf = [0u8; 64];
            rng.fill_bytes(&mut buf);
            let v = Fr::from_biguint(&BigUint::from_bytes_be(&buf));
            if v.is_zero() || (reject_root && qap.z.eval(&v).is_zero()) {
                continue;
            }
            break v;
        };
        ToxicWaste {
            t: draw(true),
            k_alpha: draw(false),
            k_beta: draw(false),
            k_gamma: draw(false),
            rho_a: draw(false),
            rho_b: draw(false),
        }
    }

    pub fn rho_c(&self) -> Fr {
        self.rho_a.clone() * &self.rho_b
    }

    fn validate(&self, qap: &Qap) -> Result<(), SnarkError> {
        let all = [
            &self.t,
            &self.k_alpha,
            &self.k_beta,
            &self.k_gamma,
            &self.rho_a,
            &self.rho_b,
        ];
        if all.iter().any(|v| v.is_zero()) {
            return Err(SnarkError::ZeroToxicValue);
        }
        if qap.z.eval(&self.t).is_zero() {
            return Err(SnarkError::SecretPointIsRoot);
        }
        Ok(())
    }
}

/// Per-variable curve encodings used by the prover. Every vector has one
/// entry per circuit variable except `t_powers`, which holds
/// `t^0 .. t^max_quotient_degree` in G1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProvingKey {
    /// `rho_a A_k(t)` in G1
    pub a: Vec<G1Point>,
    /// `k_alpha rho_a A_k(t)` in G1
    pub a_prime: Vec<G1Point>,
    /// `rho_b B_k(t)` in G2
    pub b: Vec<G2Point>,
    /// `k_beta rho_b B_k(t)` in G1
    pub b_prime: Vec<G1Point>,
    /// `rho_c C_k(t)` in G1
    pub c: Vec<G1Point>,
    /// `k_gamma rho_c C_k(t)` in G1
    pub c_prime: Vec<G1Point>,
    /// `k_beta (rho_a A_k + rho_b B_k + rho_c C_k)(t)` in G1
    pub k: Vec<G1Point>,
    pub t_powers: Vec<G1Point>,
    pub public_indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationKey {
    /// `k_alpha` in G2
    pub v_a: G2Point,
    /// `k_beta` in G1
    pub v_b: G1Point,
    /// `k_gamma` in G2
    pub v_c: G2Point,
    /// `rho_c Z(t)` in G2
    pub v_z: G2Point,
    /// `rho_a A_i(t)` in G1 for each public variable, constant wire first.
    pub ic: Vec<G1Point>,
    /// `rho_c C_i(t)` in G1 for each public variable, same order as `ic`.
    pub ic_c: Vec<G1Point>,
    /// `k_beta k_gamma` in G1
    pub g1_kbg: G1Point,
    /// `k_beta k_gamma` in G2
    pub g2_kbg: G2Point,
    /// `k_gamma` in G2
    pub g2_kg: G2Point,
    pub g1: G1Point,
    pub g2: G2Point,
}

/// Generates both keys from the QAP and consumes the toxic waste.
pub fn trusted_setup(
    qap: &Qap,
    waste: ToxicWaste,
) -> Result<(ProvingKey, VerificationKey), SnarkError> {
    waste.validate(qap)?;
    let g1 = G1Point::generator();
    let g2 = G2Point::generator();
    let rho_c = waste.rho_c();
    let n = qap.num_vars();

    let mut pk = ProvingKey {
        a: Vec::with_capacity(n),
        a_prime: Vec::with_capacity(n),
        b: Vec::with_capacity(n),
        b_prime: Vec::with_capacity(n),
        c: Vec::with_capacity(n),
        c_prime: Vec::with_capacity(n),
        k: Vec::with_capacity(n),
        t_powers: Vec::new(),
        public_indices: qap.public_indices.clone(),
    };
    for var in 0..n {
        let at = waste.rho_a.clone() * qap.a_polys[var].eval(&waste.t);
        let bt = waste.rho_b.clone() * qap.b_polys[var].eval(&waste.t);
        let ct = rho_c.clone() * qap.c_polys[var].eval(&waste.t);
        pk.a.push(g1.mul(&at));
        pk.a_prime.push(g1.mul(&(waste.k_alpha.clone() * &at)));
        pk.b.push(g2.mul(&bt));
        pk.b_prime.push(g1.mul(&(waste.k_beta.clone() * &bt)));
        pk.c.push(g1.mul(&ct));
        pk.c_prime.push(g1.mul(&(waste.k_gamma.clone() * &ct)));
        pk.k.push(g1.mul(&(waste.k_beta.clone() * (at + bt + ct))));
    }
    let mut tp = Fr::one();
    for _ in 0..=qap.max_quotient_degree() {
        pk.t_powers.push(g1.mul(&tp));
        tp *= &waste.t;
    }

    let kbg = waste.k_beta.clone() * &waste.k_gamma;
    let vk = VerificationKey {
        v_a: g2.mul(&waste.k_alpha),
        v_b: g1.mul(&waste.k_beta),
        v_c: g2.mul(&waste.k_gamma),
        v_z: g2.mul(&(rho_c * qap.z.eval(&waste.t))),
        ic: pk.public_indices.iter().map(|&i| pk.a[i].clone()).collect(),
        ic_c: pk.public_indices.iter().map(|&i| pk.c[i].clone()).collect(),
        g1_kbg: g1.mul(&kbg),
        g2_kbg: g2.mul(&kbg),
        g2_kg: g2.mul(&waste.k_gamma),
        g1,
        g2,
    };
    Ok((pk, vk))
}
