use super::domain::Domains;
use super::trace::{CLAIMED_RESULT, FIRST_VALUE, TRACE_LEN};
use super::StarkError;
use crate::algebra::{Field, Fq, Polynomial};
use crate::commit::Transcript;

/// Which of the three program constraints a quotient belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    /// `(P(x) - 1) / (x - 1)`
    BoundaryFirst,
    /// `(P(x) - result) / (x - g^1022)`
    BoundaryLast,
    /// `(P(g^2 x) - P(g x)^2 - P(x)^2) / V(x)`
    Recurrence,
}

impl ConstraintKind {
    pub const ALL: [ConstraintKind; 3] =
        [Self::BoundaryFirst, Self::BoundaryLast, Self::Recurrence];
}

impl core::fmt::Display for ConstraintKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Self::BoundaryFirst => "boundary-first",
            Self::BoundaryLast => "boundary-last",
            Self::Recurrence => "recurrence",
        })
    }
}

/// Quotient polynomials of the three constraints, indexed like
/// [`ConstraintKind::ALL`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSet {
    pub quotients: [Polynomial<Fq>; 3],
}

/// Vanishing polynomial of `{g^0 .. g^1020}`, the points where the
/// recurrence must hold.
pub fn transition_vanishing(domains: &Domains) -> Polynomial<Fq> {
    Polynomial::vanishing(&domains.trace_domain[..TRACE_LEN - 2])
}

/// `V(x)` evaluated without the polynomial: `(x^1024 - 1)` over the three
/// excluded roots `g^1021, g^1022, g^1023`.
pub fn transition_vanishing_at(x: Fq, g: Fq) -> Result<Fq, StarkError> {
    let n = TRACE_LEN as u64 + 1;
    let num = x.pow_u64(n) - Fq::one();
    let den = (TRACE_LEN as u64 - 2..n).fold(Fq::one(), |acc, k| acc * (x - g.pow_u64(k)));
    Ok(num * den.inverse()?)
}

/// Quotients and remainders of the three constraints, in
/// [`ConstraintKind::ALL`] order.
pub type QuotientsAndRemainders = ([Polynomial<Fq>; 3], [Polynomial<Fq>; 3]);

/// Divides each constraint numerator by its denominator, returning the
/// quotients and remainders. An honest trace polynomial leaves all three
/// remainders zero.
pub fn constraint_quotients(
    p: &Polynomial<Fq>,
    domains: &Domains,
) -> Result<QuotientsAndRemainders, StarkError> {
    let g = domains.g;
    let last_point = g.pow_u64(TRACE_LEN as u64 - 1);

    let (q0, r0) = (p - &Polynomial::constant(FIRST_VALUE)).div_linear(&Fq::one());
    let (q1, r1) = (p - &Polynomial::constant(CLAIMED_RESULT)).div_linear(&last_point);

    let shifted = p.compose_scaled(&g);
    let numerator = p.compose_scaled(&g.square()) - shifted.square() - p.square();
    let (q2, r2) = numerator.divrem(&transition_vanishing(domains))?;

    Ok((
        [q0, q1, q2],
        [Polynomial::constant(r0), Polynomial::constant(r1), r2],
    ))
}

/// Builds the constraint quotients, rejecting a trace polynomial that leaves
/// any nonzero remainder.
pub fn generate_program_constraints(
    p: &Polynomial<Fq>,
    domains: &Domains,
) -> Result<ConstraintSet, StarkError> {
    let (quotients, remainders) = constraint_quotients(p, domains)?;
    for (kind, r) in ConstraintKind::ALL.iter().zip(&remainders) {
        if !r.is_zero() {
            return Err(StarkError::ConstraintRemainder(*kind));
        }
    }
    Ok(ConstraintSet { quotients })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionPoly {
    pub cp: Polynomial<Fq>,
    pub alphas: [Fq; 3],
}

/// Draws `alpha_0, alpha_1, alpha_2` in order and forms
/// `sum alpha_i * quotient_i`.
pub fn compose_constraints(cs: &ConstraintSet, transcript: &mut Transcript) -> CompositionPoly {
    let alphas = draw_alphas(transcript);
    let cp = cs
        .quotients
        .iter()
        .zip(&alphas)
        .fold(Polynomial::zero(), |acc, (q, a)| acc + q.scale(a));
    CompositionPoly { cp, alphas }
}

pub(crate) fn draw_alphas(transcript: &mut Transcript) -> [Fq; 3] {
    [
        transcript.challenge(),
        transcript.challenge(),
        transcript.challenge(),
    ]
}

/// The composition value at `x` from the three trace values
/// `P(x), P(gx), P(g^2 x)`; the verifier's side of [`compose_constraints`].
pub fn composition_at(
    x: Fq,
    trace_values: [Fq; 3],
    alphas: &[Fq; 3],
    g: Fq,
) -> Result<Fq, StarkError> {
    let [p0, p1, p2] = trace_values;
    let last_point = g.pow_u64(TRACE_LEN as u64 - 1);
    let c0 = (p0 - FIRST_VALUE) * (x - Fq::one()).inverse()?;
    let c1 = (p0 - CLAIMED_RESULT) * (x - last_point).inverse()?;
    let c2 = (p2 - p1 * p1 - p0 * p0) * transition_vanishing_at(x, g)?.inverse()?;
    Ok(alphas[0] * c0 + alphas[1] * c1 + alphas[2] * c2)
}
