use alloc::vec;
use alloc::vec::Vec;

use super::SnarkError;
use crate::algebra::{Field, Fr, PrimeField};

/// Variable layout of the cubic circuit: `[one, y, x, x^2, x^3, x^3 + x]`.
pub mod var {
    pub const ONE: usize = 0;
    pub const Y: usize = 1;
    pub const X: usize = 2;
    pub const S1: usize = 3;
    pub const S2: usize = 4;
    pub const S3: usize = 5;
    pub const COUNT: usize = 6;
}

/// Rank-1 constraint system: each row `i` requires
/// `<a_i, w> * <b_i, w> = <c_i, w>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R1cs {
    pub a: Vec<Vec<Fr>>,
    pub b: Vec<Vec<Fr>>,
    pub c: Vec<Vec<Fr>>,
    pub num_vars: usize,
    /// Indices of public variables, always including the constant wire 0.
    pub public_indices: Vec<usize>,
}

impl R1cs {
    pub fn num_constraints(&self) -> usize {
        self.a.len()
    }

    /// Checks every constraint against `w`.
    pub fn is_satisfied(&self, w: &Witness) -> bool {
        if w.values.len() != self.num_vars || w.values[var::ONE] != Fr::one() {
            return false;
        }
        (0..self.num_constraints()).all(|i| {
            dot(&self.a[i], &w.values) * dot(&self.b[i], &w.values) == dot(&self.c[i], &w.values)
        })
    }

    /// Indices of the non-public variables.
    pub fn private_indices(&self) -> Vec<usize> {
        (0..self.num_vars)
            .filter(|k| !self.public_indices.contains(k))
            .collect()
    }
}

fn dot(row: &[Fr], w: &[Fr]) -> Fr {
    row.iter()
        .zip(w)
        .filter(|(r, _)| !r.is_zero())
        .fold(Fr::zero(), |acc, (r, v)| acc + r.clone() * v)
}

/// Assignment to every circuit variable, constant wire first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub values: Vec<Fr>,
}

impl Witness {
    /// Public inputs as passed to the verifier: every public variable except
    /// the implicit constant wire.
    pub fn public_inputs(&self, circuit: &R1cs) -> Vec<Fr> {
        circuit
            .public_indices
            .iter()
            .filter(|&&k| k != var::ONE)
            .map(|&k| self.values[k].clone())
            .collect()
    }
}

fn row(entries: &[(usize, i64)]) -> Vec<Fr> {
    let mut r = vec![Fr::zero(); var::COUNT];
    for &(k, c) in entries {
        r[k] = Fr::from_i64(c);
    }
    r
}

/// Flattens `x^3 + x + 5 = y` into four gates:
///
/// ```text
/// x * x            = s1
/// s1 * x           = s2
/// (s2 + x) * 1     = s3
/// (s3 + 5) * 1     = y
/// ```
pub fn build_cubic_circuit() -> R1cs {
    use var::*;
    R1cs {
        a: vec![
            row(&[(X, 1)]),
            row(&[(S1, 1)]),
            row(&[(S2, 1), (X, 1)]),
            row(&[(S3, 1), (ONE, 5)]),
        ],
        b: vec![
            row(&[(X, 1)]),
            row(&[(X, 1)]),
            row(&[(ONE, 1)]),
            row(&[(ONE, 1)]),
        ],
        c: vec![
            row(&[(S1, 1)]),
            row(&[(S2, 1)]),
            row(&[(S3, 1)]),
            row(&[(Y, 1)]),
        ],
        num_vars: COUNT,
        public_indices: vec![ONE, Y],
    }
}

/// Evaluates the cubic circuit on private input `x`.
pub fn generate_witness(circuit: &R1cs, x: &Fr) -> Result<Witness, SnarkError> {
    if circuit.num_vars != var::COUNT {
        return Err(SnarkError::Shape {
            expected: var::COUNT,
            found: circuit.num_vars,
        });
    }
    let s1 = x.square();
    let s2 = s1.clone() * x;
    let s3 = s2.clone() + x;
    let y = s3.clone() + Fr::from_u64(5);
    Ok(Witness {
        values: vec![Fr::one(), y, x.clone(), s1, s2, s3],
    })
}
