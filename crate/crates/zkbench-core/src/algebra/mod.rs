//! Field, extension-tower and polynomial arithmetic shared by both proof systems.

mod field;
mod poly;
mod tower;

pub use field::{Field, FieldElement, FieldId, FieldOp, Fp, Fq, Fr, PrimeField, STARK_MODULUS};
pub use poly::Polynomial;
pub use tower::{base_modulus_pow, Fq12, Fq2, Fq6, TowerLevel};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldId, right: FieldId },
    #[error("value is not a canonical element of {0}")]
    NonCanonical(FieldId),
    #[error("duplicate interpolation abscissa at index {0}")]
    DuplicateAbscissa(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}
