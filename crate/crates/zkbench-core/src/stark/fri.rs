use alloc::vec::Vec;

use super::StarkError;
use crate::algebra::{Field, Fq, Polynomial, PrimeField};
use crate::commit::{MerkleTree, Transcript};

pub(crate) const CP_ROOT_LABEL: &[u8] = b"cp_root";
pub(crate) const FRI_ROOT_LABEL: &[u8] = b"fri_root";

/// One committed FRI layer. Layer 0 is the composition polynomial itself.
#[derive(Clone, Debug)]
pub struct FriLayer {
    pub poly: Polynomial<Fq>,
    pub domain: Vec<Fq>,
    pub evaluations: Vec<Fq>,
    pub tree: MerkleTree,
    /// The challenge that produced this layer; `None` on layer 0.
    pub beta: Option<Fq>,
}

/// `p_even(y) + beta * p_odd(y)`.
pub fn fri_fold(p: &Polynomial<Fq>, beta: &Fq) -> Polynomial<Fq> {
    let (even, odd) = p.split_even_odd();
    even + odd.scale(beta)
}

/// Squares of the first half of `domain`. For a coset of a 2-power
/// subgroup the second half is the negation of the first, so this is the
/// image of the whole domain under `x -> x^2`.
pub fn next_domain(domain: &[Fq]) -> Vec<Fq> {
    domain[..domain.len() / 2]
        .iter()
        .map(|x| x.square())
        .collect()
}

pub(crate) fn commit_evaluations(evals: &[Fq]) -> Result<MerkleTree, StarkError> {
    let leaves: Vec<[u8; 32]> = evals.iter().map(|v| v.to_bytes_be()).collect();
    Ok(MerkleTree::commit(&leaves)?)
}

fn layer(poly: Polynomial<Fq>, domain: Vec<Fq>, beta: Option<Fq>) -> Result<FriLayer, StarkError> {
    let evaluations = poly.eval_many(&domain);
    let tree = commit_evaluations(&evaluations)?;
    Ok(FriLayer {
        poly,
        domain,
        evaluations,
        tree,
        beta,
    })
}

/// Commits to `cp` over `domain` and folds until the polynomial is
/// constant. Returns every layer (composition layer first) and the final
/// constant.
///
/// The domain must have power-of-two length greater than `deg(cp)`, so the
/// folds terminate before the domain is exhausted.
pub fn fri_commit(
    cp: &Polynomial<Fq>,
    domain: &[Fq],
    transcript: &mut Transcript,
) -> Result<(Vec<FriLayer>, Fq), StarkError> {
    if !domain.len().is_power_of_two() || cp.degree() >= domain.len() as isize {
        return Err(StarkError::InvalidParameters(
            "FRI domain must be a power of two exceeding the degree",
        ));
    }
    let first = layer(cp.clone(), domain.to_vec(), None)?;
    transcript.absorb(CP_ROOT_LABEL, &first.tree.root());
    let mut layers = alloc::vec![first];

    loop {
        let prev = layers.last().expect("at least one layer");
        if prev.poly.degree() <= 0 {
            break;
        }
        let beta: Fq = transcript.challenge();
        let next = layer(
            fri_fold(&prev.poly, &beta),
            next_domain(&prev.domain),
            Some(beta),
        )?;
        transcript.absorb(FRI_ROOT_LABEL, &next.tree.root());
        layers.push(next);
    }
    let constant = layers.last().expect("at least one layer").poly.coeff(0);
    Ok((layers, constant))
}

/// The value of the folded layer at `x^2` from the pair `p(x), p(-x)`:
/// `(a + b)/2 + beta (a - b)/(2x)`.
pub fn fold_pair(a: Fq, b: Fq, x: Fq, beta: Fq) -> Result<Fq, StarkError> {
    let two_inv = Fq::new(2).inverse()?;
    let even = (a + b) * two_inv;
    let odd = (a - b) * (x.double()).inverse()?;
    Ok(even + beta * odd)
}
