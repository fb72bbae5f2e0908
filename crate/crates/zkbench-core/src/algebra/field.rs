//! Prime-field arithmetic for the three fields used by the pipelines.
//!
//! [`Fq`] is the 32-bit STARK field and runs on native `u64` arithmetic.
//! [`Fr`] (the BN128 scalar field) and [`Fp`] (the BN128 base field) hold
//! arbitrary-precision integers and reduce after every operation.
//! [`FieldElement`] is the dynamically tagged form used where the field is
//! only known at runtime.

use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use once_cell::race::OnceBox;

use super::AlgebraError;

/// STARK field modulus, `3 * 2^30 + 1`.
pub const STARK_MODULUS: u64 = 3_221_225_473;

const SNARK_R_DEC: &str =
    "21888242871839275222246405745257275088548364400416034343698204186575808495617";
const BN_BASE_P_DEC: &str =
    "21888242871839275222246405745257275088696311157297823662689037894645226208583";

static STARK_Q: OnceBox<BigUint> = OnceBox::new();
static SNARK_R: OnceBox<BigUint> = OnceBox::new();
static BN_BASE_P: OnceBox<BigUint> = OnceBox::new();

fn parse_dec(s: &str) -> alloc::boxed::Box<BigUint> {
    alloc::boxed::Box::new(BigUint::parse_bytes(s.as_bytes(), 10).expect("valid modulus literal"))
}

/// Identity of one of the three prime fields.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldId {
    /// STARK field, q = 3221225473.
    StarkQ,
    /// Scalar field of BN128 (group order r).
    SnarkR,
    /// Base field of BN128.
    BnBaseP,
}

impl FieldId {
    pub fn modulus(self) -> &'static BigUint {
        match self {
            FieldId::StarkQ => {
                STARK_Q.get_or_init(|| alloc::boxed::Box::new(BigUint::from(STARK_MODULUS)))
            }
            FieldId::SnarkR => SNARK_R.get_or_init(|| parse_dec(SNARK_R_DEC)),
            FieldId::BnBaseP => BN_BASE_P.get_or_init(|| parse_dec(BN_BASE_P_DEC)),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FieldId::StarkQ => "stark-q",
            FieldId::SnarkR => "snark-r",
            FieldId::BnBaseP => "bn-base-p",
        }
    }
}

impl fmt::Display for FieldId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Ring operations shared by prime fields and the extension tower.
pub trait Field:
    Clone
    + fmt::Debug
    + PartialEq
    + Eq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    /// Multiplicative inverse; fails on zero.
    fn inverse(&self) -> Result<Self, AlgebraError>;

    fn square(&self) -> Self {
        self.clone() * self
    }

    fn double(&self) -> Self {
        self.clone() + self
    }

    /// Square-and-multiply over the big-endian bits of `exp`. `exp = 0` gives one.
    fn pow(&self, exp: &BigUint) -> Self {
        let mut acc = Self::one();
        for i in (0..exp.bits()).rev() {
            acc = acc.square();
            if exp.bit(i) {
                acc *= self;
            }
        }
        acc
    }

    fn pow_u64(&self, exp: u64) -> Self {
        let mut acc = Self::one();
        for i in (0..64 - exp.leading_zeros()).rev() {
            acc = acc.square();
            if (exp >> i) & 1 == 1 {
                acc *= self;
            }
        }
        acc
    }
}

/// A prime field with a fixed modulus and a 32-byte canonical encoding.
pub trait PrimeField: Field + fmt::Display {
    const ID: FieldId;

    fn from_u64(v: u64) -> Self;
    /// Reduces `v` modulo the field modulus.
    fn from_biguint(v: &BigUint) -> Self;
    fn to_biguint(&self) -> BigUint;

    fn modulus() -> &'static BigUint {
        Self::ID.modulus()
    }

    /// 32-byte big-endian encoding.
    fn to_bytes_be(&self) -> [u8; 32] {
        let raw = self.to_biguint().to_bytes_be();
        let mut out = [0u8; 32];
        out[32 - raw.len()..].copy_from_slice(&raw);
        out
    }

    /// Decodes a 32-byte big-endian value, rejecting non-canonical encodings.
    fn from_bytes_be(bytes: &[u8; 32]) -> Result<Self, AlgebraError> {
        let v = BigUint::from_bytes_be(bytes);
        if &v >= Self::modulus() {
            return Err(AlgebraError::NonCanonical(Self::ID));
        }
        Ok(Self::from_biguint(&v))
    }

    /// Signed small-integer constructor, `-3` maps to `p - 3`.
    fn from_i64(v: i64) -> Self {
        let mag = Self::from_u64(v.unsigned_abs());
        if v < 0 {
            -mag
        } else {
            mag
        }
    }
}

macro_rules! forward_binops {
    ($ty:ty, $($trait:ident $method:ident $assign_trait:ident $assign_method:ident => $impl_fn:ident),+) => {$(
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            #[inline]
            fn $method(self, rhs: &$ty) -> $ty {
                <$ty>::$impl_fn(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            #[inline]
            fn $method(self, rhs: $ty) -> $ty {
                <$ty>::$impl_fn(&self, &rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            #[inline]
            fn $method(self, rhs: &$ty) -> $ty {
                <$ty>::$impl_fn(&self, rhs)
            }
        }
        impl $trait<$ty> for &$ty {
            type Output = $ty;
            #[inline]
            fn $method(self, rhs: $ty) -> $ty {
                <$ty>::$impl_fn(self, &rhs)
            }
        }
        impl $assign_trait<$ty> for $ty {
            #[inline]
            fn $assign_method(&mut self, rhs: $ty) {
                *self = <$ty>::$impl_fn(self, &rhs);
            }
        }
        impl $assign_trait<&$ty> for $ty {
            #[inline]
            fn $assign_method(&mut self, rhs: &$ty) {
                *self = <$ty>::$impl_fn(self, rhs);
            }
        }
    )+};
}
pub(crate) use forward_binops;

macro_rules! forward_neg {
    ($ty:ty) => {
        impl Neg for $ty {
            type Output = $ty;
            #[inline]
            fn neg(self) -> $ty {
                <$ty>::neg_impl(&self)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            #[inline]
            fn neg(self) -> $ty {
                <$ty>::neg_impl(self)
            }
        }
    };
}
pub(crate) use forward_neg;

// ---------------------------------------------------------------------------
// STARK field

/// Element of the STARK field F_q, stored reduced in a `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fq(u64);

impl Fq {
    pub const MODULUS: u64 = STARK_MODULUS;
    /// Generator of the full multiplicative group.
    pub const GENERATOR: Fq = Fq(5);

    pub const fn new(v: u64) -> Self {
        Fq(v % STARK_MODULUS)
    }

    pub const fn value(self) -> u64 {
        self.0
    }

    /// Strict decode from the 4-byte STARK wire encoding.
    pub fn from_u32_canonical(v: u32) -> Result<Self, AlgebraError> {
        if u64::from(v) >= STARK_MODULUS {
            return Err(AlgebraError::NonCanonical(FieldId::StarkQ));
        }
        Ok(Fq(u64::from(v)))
    }

    pub fn to_u32(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    fn add_impl(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        Fq(if s >= STARK_MODULUS {
            s - STARK_MODULUS
        } else {
            s
        })
    }

    #[inline]
    fn sub_impl(&self, rhs: &Self) -> Self {
        Fq(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + STARK_MODULUS - rhs.0
        })
    }

    #[inline]
    fn mul_impl(&self, rhs: &Self) -> Self {
        // (q-1)^2 < 2^64
        Fq(self.0 * rhs.0 % STARK_MODULUS)
    }

    #[inline]
    fn neg_impl(&self) -> Self {
        Fq(if self.0 == 0 {
            0
        } else {
            STARK_MODULUS - self.0
        })
    }
}

forward_binops!(Fq,
    Add add AddAssign add_assign => add_impl,
    Sub sub SubAssign sub_assign => sub_impl,
    Mul mul MulAssign mul_assign => mul_impl);
forward_neg!(Fq);

impl Field for Fq {
    fn zero() -> Self {
        Fq(0)
    }
    fn one() -> Self {
        Fq(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.0 == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow_u64(STARK_MODULUS - 2))
    }
}

impl PrimeField for Fq {
    const ID: FieldId = FieldId::StarkQ;

    fn from_u64(v: u64) -> Self {
        Fq::new(v)
    }
    fn from_biguint(v: &BigUint) -> Self {
        let r = v % FieldId::StarkQ.modulus();
        Fq(r.iter_u64_digits().next().unwrap_or(0))
    }
    fn to_biguint(&self) -> BigUint {
        BigUint::from(self.0)
    }
}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fq({})", self.0)
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for Fq {
    fn from(v: u64) -> Self {
        Fq::new(v)
    }
}

// ---------------------------------------------------------------------------
// 254-bit fields

macro_rules! big_prime_field {
    ($(#[$meta:meta])* $name:ident, $id:expr) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(BigUint);

        impl $name {
            #[inline]
            fn m() -> &'static BigUint {
                $id.modulus()
            }

            /// Raw integer value in `[0, modulus)`.
            pub fn value(&self) -> &BigUint {
                &self.0
            }

            fn add_impl(&self, rhs: &Self) -> Self {
                let s = &self.0 + &rhs.0;
                let m = Self::m();
                $name(if &s >= m { s - m } else { s })
            }

            fn sub_impl(&self, rhs: &Self) -> Self {
                if self.0 >= rhs.0 {
                    $name(&self.0 - &rhs.0)
                } else {
                    $name(Self::m() - &rhs.0 + &self.0)
                }
            }

            fn mul_impl(&self, rhs: &Self) -> Self {
                $name((&self.0 * &rhs.0) % Self::m())
            }

            fn neg_impl(&self) -> Self {
                if self.0.is_zero() {
                    self.clone()
                } else {
                    $name(Self::m() - &self.0)
                }
            }
        }

        forward_binops!($name,
            Add add AddAssign add_assign => add_impl,
            Sub sub SubAssign sub_assign => sub_impl,
            Mul mul MulAssign mul_assign => mul_impl);
        forward_neg!($name);

        impl Field for $name {
            fn zero() -> Self {
                $name(BigUint::zero())
            }
            fn one() -> Self {
                $name(BigUint::one())
            }
            fn is_zero(&self) -> bool {
                self.0.is_zero()
            }
            fn inverse(&self) -> Result<Self, AlgebraError> {
                if self.0.is_zero() {
                    return Err(AlgebraError::DivisionByZero);
                }
                let m = Self::m();
                Ok($name(self.0.modpow(&(m - 2u32), m)))
            }
            fn square(&self) -> Self {
                $name((&self.0 * &self.0) % Self::m())
            }
            fn pow(&self, exp: &BigUint) -> Self {
                $name(self.0.modpow(exp, Self::m()))
            }
        }

        impl PrimeField for $name {
            const ID: FieldId = $id;

            fn from_u64(v: u64) -> Self {
                $name(BigUint::from(v) % Self::m())
            }
            fn from_biguint(v: &BigUint) -> Self {
                $name(v % Self::m())
            }
            fn to_biguint(&self) -> BigUint {
                self.0.clone()
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($name), self.0)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}", self.0)
            }
        }

        impl From<u64> for $name {
            fn from(v: u64) -> Self {
                <$name as PrimeField>::from_u64(v)
            }
        }
    };
}

big_prime_field!(
    /// Element of the BN128 scalar field F_r.
    Fr,
    FieldId::SnarkR
);
big_prime_field!(
    /// Element of the BN128 base field F_p.
    Fp,
    FieldId::BnBaseP
);

// ---------------------------------------------------------------------------
// Dynamically tagged element

/// Binary operation selector for [`FieldElement::apply`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
}

/// A field element carrying its field identity at runtime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: BigUint,
    field: FieldId,
}

impl FieldElement {
    /// Builds an element, reducing `value` into range.
    pub fn new(value: BigUint, field: FieldId) -> Self {
        let value = value % field.modulus();
        FieldElement { value, field }
    }

    pub fn from_u64(value: u64, field: FieldId) -> Self {
        Self::new(BigUint::from(value), field)
    }

    /// Builds an element from an already-canonical value.
    pub fn from_canonical(value: BigUint, field: FieldId) -> Result<Self, AlgebraError> {
        if &value >= field.modulus() {
            return Err(AlgebraError::NonCanonical(field));
        }
        Ok(FieldElement { value, field })
    }

    pub fn from_typed<F: PrimeField>(x: &F) -> Self {
        FieldElement {
            value: x.to_biguint(),
            field: F::ID,
        }
    }

    pub fn to_typed<F: PrimeField>(&self) -> Result<F, AlgebraError> {
        if self.field != F::ID {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: F::ID,
            });
        }
        Ok(F::from_biguint(&self.value))
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn field(&self) -> FieldId {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.field != other.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field,
                right: other.field,
            });
        }
        Ok(())
    }

    pub fn apply(&self, other: &Self, op: FieldOp) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let m = self.field.modulus();
        let value = match op {
            FieldOp::Add => (&self.value + &other.value) % m,
            FieldOp::Sub => (&self.value + m - &other.value) % m,
            FieldOp::Mul => (&self.value * &other.value) % m,
        };
        Ok(FieldElement {
            value,
            field: self.field,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.apply(other, FieldOp::Add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.apply(other, FieldOp::Sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.apply(other, FieldOp::Mul)
    }

    pub fn neg(&self) -> Self {
        let m = self.field.modulus();
        FieldElement {
            value: (m - &self.value) % m,
            field: self.field,
        }
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let m = self.field.modulus();
        Ok(FieldElement {
            value: self.value.modpow(&(m - 2u32), m),
            field: self.field,
        })
    }

    pub fn pow(&self, exp: &BigUint) -> Self {
        FieldElement {
            value: self.value.modpow(exp, self.field.modulus()),
            field: self.field,
        }
    }

    pub fn to_bytes_be(&self) -> [u8; 32] {
        let raw = self.value.to_bytes_be();
        let mut out = [0u8; 32];
        out[32 - raw.len()..].copy_from_slice(&raw);
        out
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.value, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stark_wraparound_and_absorbing_zero() {
        assert_eq!(Fq::new(STARK_MODULUS - 1) + Fq::new(1), Fq::zero());
        assert_eq!(Fq::new(5) * Fq::zero(), Fq::zero());
    }

    #[test]
    fn stark_square_matches_direct_reduction() {
        let a = Fq::new(3_141_592);
        assert_eq!((a * a).value(), 3_141_592u64 * 3_141_592 % STARK_MODULUS);
        assert_eq!((a * a).value(), 2_986_670_665);
    }

    #[test]
    fn inverse_of_two_is_half_of_q_plus_one() {
        assert_eq!(Fq::new(2).inverse().unwrap(), Fq::new(1_610_612_737));
        assert_eq!(Fq::one().inverse().unwrap(), Fq::one());
        assert_eq!(Fr::one().inverse().unwrap(), Fr::one());
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Fq::zero().inverse(), Err(AlgebraError::DivisionByZero));
        assert_eq!(Fp::zero().inverse(), Err(AlgebraError::DivisionByZero));
        let z = FieldElement::from_u64(0, FieldId::SnarkR);
        assert_eq!(z.inv(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn fermat_and_identity_exponents() {
        let five = Fq::new(5);
        assert_eq!(five.pow_u64(STARK_MODULUS - 1), Fq::one());
        assert_eq!(five.pow_u64(1), five);
        assert_eq!(five.pow_u64(0), Fq::one());
        let x = Fr::from_u64(123_456_789);
        assert_eq!(x.pow(&BigUint::one()), x);
        assert_eq!(x.pow(&(Fr::modulus() - 1u32)), Fr::one());
    }

    #[test]
    fn subgroup_generator_of_order_1024() {
        assert_eq!(1024 * 3_145_728, STARK_MODULUS - 1);
        let g = Fq::GENERATOR.pow_u64((STARK_MODULUS - 1) / 1024);
        assert_eq!(g.pow_u64(1024), Fq::one());
        for k in [1u64, 2, 4, 8, 16, 32, 64, 128, 256, 512] {
            assert_ne!(g.pow_u64(k), Fq::one(), "g^{k} must not be 1");
        }
    }

    #[test]
    fn dynamic_elements_reject_mixed_fields() {
        let a = FieldElement::from_u64(3, FieldId::StarkQ);
        let b = FieldElement::from_u64(3, FieldId::SnarkR);
        assert_eq!(
            a.add(&b),
            Err(AlgebraError::FieldMismatch {
                left: FieldId::StarkQ,
                right: FieldId::SnarkR
            })
        );
        assert!(a.to_typed::<Fr>().is_err());
        assert_eq!(a.to_typed::<Fq>().unwrap(), Fq::new(3));
    }

    #[test]
    fn dynamic_ops_agree_with_typed() {
        let q1 = FieldElement::from_u64(STARK_MODULUS - 1, FieldId::StarkQ);
        let one = FieldElement::from_u64(1, FieldId::StarkQ);
        assert!(q1.add(&one).unwrap().is_zero());
        assert_eq!(one.sub(&q1).unwrap().to_typed::<Fq>().unwrap(), Fq::new(2));
        assert_eq!(q1.neg(), one);
        let two = FieldElement::from_u64(2, FieldId::StarkQ);
        assert_eq!(
            two.inv().unwrap().to_typed::<Fq>().unwrap(),
            Fq::new(1_610_612_737)
        );
        assert!(
            FieldElement::from_canonical(BigUint::from(STARK_MODULUS), FieldId::StarkQ).is_err()
        );
    }

    #[test]
    fn byte_encoding_is_32_byte_big_endian() {
        let x = Fr::from_u64(0x0102);
        let b = x.to_bytes_be();
        assert_eq!(&b[30..], &[1, 2]);
        assert!(b[..30].iter().all(|&v| v == 0));
        assert_eq!(Fr::from_bytes_be(&b).unwrap(), x);
        assert!(Fr::from_bytes_be(&[0xff; 32]).is_err());
    }

    #[test]
    fn negative_small_integers() {
        assert_eq!(Fq::from_i64(-1), Fq::new(STARK_MODULUS - 1));
        assert_eq!(Fr::from_i64(-3) + Fr::from_u64(3), Fr::zero());
    }
}
