use alloc::vec::Vec;

use crate::algebra::Fq;

pub const TRACE_LEN: usize = 1023;
pub const FIRST_VALUE: Fq = Fq::new(1);
pub const SECOND_VALUE: Fq = Fq::new(3141592);
/// `trace[1022]`, the public claim the proof attests to.
pub const CLAIMED_RESULT: Fq = Fq::new(2338775057);

/// Execution trace of `a[n+2] = a[n+1]^2 + a[n]^2` over `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    values: Vec<Fq>,
}

impl Trace {
    /// Wraps arbitrary values without checking the recurrence, so callers
    /// can build corrupted traces.
    pub fn from_values(values: Vec<Fq>) -> Self {
        Trace { values }
    }

    pub fn values(&self) -> &[Fq] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn last(&self) -> Option<Fq> {
        self.values.last().copied()
    }

    /// True if both initial values and every interior step are correct.
    pub fn is_valid(&self) -> bool {
        self.values.len() == TRACE_LEN
            && self.values[0] == FIRST_VALUE
            && self.values[1] == SECOND_VALUE
            && self
                .values
                .windows(3)
                .all(|w| w[2] == w[1] * w[1] + w[0] * w[0])
    }
}

pub fn generate_trace() -> Trace {
    let mut values = Vec::with_capacity(TRACE_LEN);
    values.push(FIRST_VALUE);
    values.push(SECOND_VALUE);
    while values.len() < TRACE_LEN {
        let n = values.len();
        let (a, b) = (values[n - 2], values[n - 1]);
        values.push(b * b + a * a);
    }
    Trace { values }
}
