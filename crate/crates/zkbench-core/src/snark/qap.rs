use alloc::vec::Vec;

use super::r1cs::{R1cs, Witness};
use super::SnarkError;
use crate::algebra::{Field, Fr, Polynomial, PrimeField};

/// Quadratic arithmetic program: one polynomial per variable and matrix,
/// interpolated over the domain `{1, ..., num_constraints}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Qap {
    pub domain: Vec<Fr>,
    pub a_polys: Vec<Polynomial<Fr>>,
    pub b_polys: Vec<Polynomial<Fr>>,
    pub c_polys: Vec<Polynomial<Fr>>,
    /// Vanishing polynomial of `domain`.
    pub z: Polynomial<Fr>,
    pub public_indices: Vec<usize>,
}

fn interpolate_columns(
    matrix: &[Vec<Fr>],
    domain: &[Fr],
    num_vars: usize,
) -> Result<Vec<Polynomial<Fr>>, SnarkError> {
    (0..num_vars)
        .map(|k| {
            let column: Vec<Fr> = matrix.iter().map(|r| r[k].clone()).collect();
            Ok(Polynomial::interpolate_xy(domain, &column)?)
        })
        .collect()
}

pub fn r1cs_to_qap(circuit: &R1cs) -> Result<Qap, SnarkError> {
    let domain: Vec<Fr> = (1..=circuit.num_constraints() as u64)
        .map(Fr::from_u64)
        .collect();
    Ok(Qap {
        a_polys: interpolate_columns(&circuit.a, &domain, circuit.num_vars)?,
        b_polys: interpolate_columns(&circuit.b, &domain, circuit.num_vars)?,
        c_polys: interpolate_columns(&circuit.c, &domain, circuit.num_vars)?,
        z: Polynomial::vanishing(&domain),
        domain,
        public_indices: circuit.public_indices.clone(),
    })
}

fn weighted_sum(polys: &[Polynomial<Fr>], w: &[Fr]) -> Polynomial<Fr> {
    polys
        .iter()
        .zip(w)
        .filter(|(_, v)| !v.is_zero())
        .fold(Polynomial::zero(), |acc, (p, v)| &acc + &p.scale(v))
}

impl Qap {
    pub fn num_vars(&self) -> usize {
        self.a_polys.len()
    }

    /// `(A, B, C)` with `A(x) = sum_k w_k a_k(x)` and likewise for B, C.
    pub fn combine(&self, w: &Witness) -> Result<[Polynomial<Fr>; 3], SnarkError> {
        if w.values.len() != self.num_vars() {
            return Err(SnarkError::Shape {
                expected: self.num_vars(),
                found: w.values.len(),
            });
        }
        Ok([
            weighted_sum(&self.a_polys, &w.values),
            weighted_sum(&self.b_polys, &w.values),
            weighted_sum(&self.c_polys, &w.values),
        ])
    }

    /// `P = A * B - C` for the witness.
    pub fn constraint_poly(&self, w: &Witness) -> Result<Polynomial<Fr>, SnarkError> {
        let [a, b, c] = self.combine(w)?;
        Ok(&(&a * &b) - &c)
    }

    /// `(quotient, remainder)` of `P / Z`.
    pub fn divide_by_vanishing(
        &self,
        w: &Witness,
    ) -> Result<(Polynomial<Fr>, Polynomial<Fr>), SnarkError> {
        Ok(self.constraint_poly(w)?.divrem(&self.z)?)
    }

    /// `H = P / Z`, failing when the witness does not satisfy the circuit.
    pub fn quotient(&self, w: &Witness) -> Result<Polynomial<Fr>, SnarkError> {
        let (h, r) = self.divide_by_vanishing(w)?;
        if !r.is_zero() {
            return Err(SnarkError::Unsatisfied);
        }
        Ok(h)
    }

    /// Upper bound on the degree of `H`, which sizes the powers-of-`t` key.
    pub fn max_quotient_degree(&self) -> usize {
        let n = self.domain.len();
        // deg(A*B) <= 2(n-1), deg(Z) = n
        n.saturating_sub(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snark::r1cs::{build_cubic_circuit, generate_witness, var};

    #[test]
    fn columns_interpolate_matrix_entries() {
        let circuit = build_cubic_circuit();
        let qap = r1cs_to_qap(&circuit).unwrap();
        for (i, x) in qap.domain.iter().enumerate() {
            for k in 0..circuit.num_vars {
                assert_eq!(qap.a_polys[k].eval(x), circuit.a[i][k]);
                assert_eq!(qap.b_polys[k].eval(x), circuit.b[i][k]);
                assert_eq!(qap.c_polys[k].eval(x), circuit.c[i][k]);
            }
        }
        assert_eq!(qap.z.degree(), 4);
    }

    #[test]
    fn valid_witness_divides_cleanly() {
        let circuit = build_cubic_circuit();
        let qap = r1cs_to_qap(&circuit).unwrap();
        let w = generate_witness(&circuit, &Fr::from_u64(3)).unwrap();
        let (h, r) = qap.divide_by_vanishing(&w).unwrap();
        assert!(r.is_zero());
        assert!(h.degree() <= qap.max_quotient_degree() as isize);
    }

    #[test]
    fn forced_output_leaves_remainder() {
        let circuit = build_cubic_circuit();
        let qap = r1cs_to_qap(&circuit).unwrap();
        let mut w = generate_witness(&circuit, &Fr::from_u64(3)).unwrap();
        w.values[var::Y] = Fr::from_u64(36);
        let (_, r) = qap.divide_by_vanishing(&w).unwrap();
        assert!(!r.is_zero());
        assert_eq!(qap.quotient(&w), Err(SnarkError::Unsatisfied));
    }
}
