use alloc::vec::Vec;

use super::trace::Trace;
use crate::algebra::{Field, Fq, Polynomial};

pub const TRACE_DOMAIN_SIZE: usize = 1024;
pub const EVAL_DOMAIN_SIZE: usize = 8192;
pub const BLOWUP: usize = EVAL_DOMAIN_SIZE / TRACE_DOMAIN_SIZE;
/// The evaluation domain is shifted off the subgroup by this element so
/// that constraint denominators never vanish on it.
pub const COSET_SHIFT: Fq = Fq::GENERATOR;

/// Generator of the order-`n` subgroup of `F_q^*`; `n` must divide `q - 1`.
pub fn root_of_unity(n: usize) -> Fq {
    let n = n as u64;
    assert_eq!((Fq::MODULUS - 1) % n, 0, "subgroup order must divide q - 1");
    Fq::GENERATOR.pow_u64((Fq::MODULUS - 1) / n)
}

fn powers(base: Fq, start: Fq, n: usize) -> Vec<Fq> {
    let mut out = Vec::with_capacity(n);
    let mut x = start;
    for _ in 0..n {
        out.push(x);
        x *= base;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domains {
    /// Generator of the trace subgroup.
    pub g: Fq,
    pub trace_domain: Vec<Fq>,
    /// Generator of the evaluation subgroup; `h^8 = g`.
    pub h: Fq,
    /// `COSET_SHIFT * h^i`.
    pub eval_domain: Vec<Fq>,
}

impl Domains {
    /// `i`-th point of the evaluation coset, without materializing the domain.
    pub fn eval_point(h: Fq, i: usize) -> Fq {
        COSET_SHIFT * h.pow_u64(i as u64)
    }
}

pub fn build_domains() -> Domains {
    let g = root_of_unity(TRACE_DOMAIN_SIZE);
    let h = root_of_unity(EVAL_DOMAIN_SIZE);
    assert!(
        g.pow_u64(TRACE_DOMAIN_SIZE as u64) == Fq::one()
            && g.pow_u64(TRACE_DOMAIN_SIZE as u64 / 2) != Fq::one()
    );
    Domains {
        g,
        trace_domain: powers(g, Fq::one(), TRACE_DOMAIN_SIZE),
        h,
        eval_domain: powers(h, COSET_SHIFT, EVAL_DOMAIN_SIZE),
    }
}

/// The unique polynomial of degree below `trace.len()` with `P(g^i) = trace[i]`.
pub fn interpolate_trace(trace: &Trace, domains: &Domains) -> Polynomial<Fq> {
    let xs = &domains.trace_domain[..trace.len()];
    Polynomial::interpolate_xy(xs, trace.values()).expect("trace domain points are distinct")
}

pub fn low_degree_extend(p: &Polynomial<Fq>, domains: &Domains) -> Vec<Fq> {
    p.eval_many(&domains.eval_domain)
}
