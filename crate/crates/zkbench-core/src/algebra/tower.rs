//! The BN128 extension tower over the base field `Fp`:
//!
//! - `Fq2  = Fp[u]  / (u^2 + 1)`
//! - `Fq6  = Fq2[v] / (v^3 - (9 + u))`
//! - `Fq12 = Fq6[w] / (w^2 - v)`

use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigUint;

use super::field::{forward_binops, forward_neg, Field, Fp, PrimeField};
use super::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerLevel {
    Fq2,
    Fq6,
    Fq12,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fq2 {
    pub c0: Fp,
    pub c1: Fp,
}

impl Fq2 {
    pub const LEVEL: TowerLevel = TowerLevel::Fq2;

    pub fn new(c0: Fp, c1: Fp) -> Self {
        Fq2 { c0, c1 }
    }

    pub fn from_u64s(c0: u64, c1: u64) -> Self {
        Fq2::new(Fp::from_u64(c0), Fp::from_u64(c1))
    }

    pub fn from_base(c0: Fp) -> Self {
        Fq2::new(c0, Fp::zero())
    }

    /// The cubic non-residue `xi = 9 + u` used to build `Fq6`.
    pub fn xi() -> Self {
        Fq2::from_u64s(9, 1)
    }

    /// `self * (9 + u)`
    pub fn mul_by_xi(&self) -> Self {
        let nine = Fp::from_u64(9);
        Fq2::new(
            nine.clone() * &self.c0 - &self.c1,
            self.c0.clone() + nine * &self.c1,
        )
    }

    pub fn mul_by_base(&self, k: &Fp) -> Self {
        Fq2::new(self.c0.clone() * k, self.c1.clone() * k)
    }

    /// Complex conjugation, which is also the `p`-power Frobenius on `Fq2`.
    pub fn conjugate(&self) -> Self {
        Fq2::new(self.c0.clone(), -self.c1.clone())
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        Fq2::new(self.c0.clone() + &rhs.c0, self.c1.clone() + &rhs.c1)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        Fq2::new(self.c0.clone() - &rhs.c0, self.c1.clone() - &rhs.c1)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let v0 = self.c0.clone() * &rhs.c0;
        let v1 = self.c1.clone() * &rhs.c1;
        let cross = (self.c0.clone() + &self.c1) * (rhs.c0.clone() + &rhs.c1);
        Fq2::new(v0.clone() - &v1, cross - v0 - v1)
    }

    fn neg_impl(&self) -> Self {
        Fq2::new(-self.c0.clone(), -self.c1.clone())
    }
}

forward_binops!(Fq2,
    Add add AddAssign add_assign => add_impl,
    Sub sub SubAssign sub_assign => sub_impl,
    Mul mul MulAssign mul_assign => mul_impl);
forward_neg!(Fq2);

impl Field for Fq2 {
    fn zero() -> Self {
        Fq2::new(Fp::zero(), Fp::zero())
    }
    fn one() -> Self {
        Fq2::new(Fp::one(), Fp::zero())
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
    fn inverse(&self) -> Result<Self, AlgebraError> {
        let norm = self.c0.square() + self.c1.square();
        let inv = norm.inverse()?;
        Ok(Fq2::new(self.c0.clone() * &inv, -(self.c1.clone() * inv)))
    }
    fn square(&self) -> Self {
        // (a + bu)^2 = (a + b)(a - b) + 2ab u
        let ab = self.c0.clone() * &self.c1;
        Fq2::new(
            (self.c0.clone() + &self.c1) * (self.c0.clone() - &self.c1),
            ab.double(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fq6 {
    pub c0: Fq2,
    pub c1: Fq2,
    pub c2: Fq2,
}

impl Fq6 {
    pub const LEVEL: TowerLevel = TowerLevel::Fq6;

    pub fn new(c0: Fq2, c1: Fq2, c2: Fq2) -> Self {
        Fq6 { c0, c1, c2 }
    }

    /// `self * v`
    pub fn mul_by_v(&self) -> Self {
        Fq6::new(self.c2.mul_by_xi(), self.c0.clone(), self.c1.clone())
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        Fq6::new(
            self.c0.clone() + &rhs.c0,
            self.c1.clone() + &rhs.c1,
            self.c2.clone() + &rhs.c2,
        )
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        Fq6::new(
            self.c0.clone() - &rhs.c0,
            self.c1.clone() - &rhs.c1,
            self.c2.clone() - &rhs.c2,
        )
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let (a0, a1, a2) = (&self.c0, &self.c1, &self.c2);
        let (b0, b1, b2) = (&rhs.c0, &rhs.c1, &rhs.c2);
        let t0 = a0 * b0;
        let t1 = a1 * b1;
        let t2 = a2 * b2;
        let c0 = ((a1 + a2) * (b1 + b2) - &t1 - &t2).mul_by_xi() + &t0;
        let c1 = (a0 + a1) * (b0 + b1) - &t0 - &t1 + t2.mul_by_xi();
        let c2 = (a0 + a2) * (b0 + b2) - &t0 - &t2 + &t1;
        Fq6::new(c0, c1, c2)
    }

    fn neg_impl(&self) -> Self {
        Fq6::new(-&self.c0, -&self.c1, -&self.c2)
    }
}

forward_binops!(Fq6,
    Add add AddAssign add_assign => add_impl,
    Sub sub SubAssign sub_assign => sub_impl,
    Mul mul MulAssign mul_assign => mul_impl);
forward_neg!(Fq6);

impl Field for Fq6 {
    fn zero() -> Self {
        Fq6::new(Fq2::zero(), Fq2::zero(), Fq2::zero())
    }
    fn one() -> Self {
        Fq6::new(Fq2::one(), Fq2::zero(), Fq2::zero())
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero() && self.c2.is_zero()
    }
    fn inverse(&self) -> Result<Self, AlgebraError> {
        let (a0, a1, a2) = (&self.c0, &self.c1, &self.c2);
        let t0 = a0.square() - (a1 * a2).mul_by_xi();
        let t1 = a2.square().mul_by_xi() - a0 * a1;
        let t2 = a1.square() - a0 * a2;
        let norm = a0 * &t0 + (a2 * &t1 + a1 * &t2).mul_by_xi();
        let inv = norm.inverse()?;
        Ok(Fq6::new(t0 * &inv, t1 * &inv, t2 * inv))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fq12 {
    pub c0: Fq6,
    pub c1: Fq6,
}

impl Fq12 {
    pub const LEVEL: TowerLevel = TowerLevel::Fq12;

    pub fn new(c0: Fq6, c1: Fq6) -> Self {
        Fq12 { c0, c1 }
    }

    /// Builds an element from its six `Fq2` coefficients in the basis
    /// `1, w, w^2, w^3, w^4, w^5`.
    pub fn from_w_coeffs(d: [Fq2; 6]) -> Self {
        let [d0, d1, d2, d3, d4, d5] = d;
        Fq12::new(Fq6::new(d0, d2, d4), Fq6::new(d1, d3, d5))
    }

    pub fn to_w_coeffs(&self) -> [Fq2; 6] {
        [
            self.c0.c0.clone(),
            self.c1.c0.clone(),
            self.c0.c1.clone(),
            self.c1.c1.clone(),
            self.c0.c2.clone(),
            self.c1.c2.clone(),
        ]
    }

    /// `f^(p^6)`, i.e. negation of the `w` part.
    pub fn conjugate(&self) -> Self {
        Fq12::new(self.c0.clone(), -&self.c1)
    }

    /// `f^p`. Each `w^i` coefficient is conjugated and scaled by
    /// `gamma^i` where `gamma = xi^((p-1)/6) = w^(p-1)`.
    pub fn frobenius(&self) -> Self {
        let exp = (Fp::modulus() - 1u32) / 6u32;
        let gamma = Fq2::xi().pow(&exp);
        let mut scale = Fq2::one();
        let mut out = self.to_w_coeffs();
        for d in out.iter_mut() {
            *d = d.conjugate() * &scale;
            scale *= &gamma;
        }
        Fq12::from_w_coeffs(out)
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        Fq12::new(self.c0.clone() + &rhs.c0, self.c1.clone() + &rhs.c1)
    }

    fn sub_impl(&self, rhs: &Self) -> Self {
        Fq12::new(self.c0.clone() - &rhs.c0, self.c1.clone() - &rhs.c1)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        let t0 = &self.c0 * &rhs.c0;
        let t1 = &self.c1 * &rhs.c1;
        let cross = (&self.c0 + &self.c1) * (&rhs.c0 + &rhs.c1);
        Fq12::new(t1.mul_by_v() + &t0, cross - t0 - t1)
    }

    fn neg_impl(&self) -> Self {
        Fq12::new(-&self.c0, -&self.c1)
    }
}

forward_binops!(Fq12,
    Add add AddAssign add_assign => add_impl,
    Sub sub SubAssign sub_assign => sub_impl,
    Mul mul MulAssign mul_assign => mul_impl);
forward_neg!(Fq12);

impl Field for Fq12 {
    fn zero() -> Self {
        Fq12::new(Fq6::zero(), Fq6::zero())
    }
    fn one() -> Self {
        Fq12::new(Fq6::one(), Fq6::zero())
    }
    fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }
    fn inverse(&self) -> Result<Self, AlgebraError> {
        let norm = self.c0.square() - self.c1.square().mul_by_v();
        let inv = norm.inverse()?;
        Ok(Fq12::new(&self.c0 * &inv, -(&self.c1 * &inv)))
    }
    fn square(&self) -> Self {
        // (a + bw)^2 = (a + b)(a + bv) - ab - abv + 2ab w
        let ab = &self.c0 * &self.c1;
        let c0 = (&self.c0 + &self.c1) * (&self.c0 + &self.c1.mul_by_v()) - &ab - ab.mul_by_v();
        Fq12::new(c0, ab.double())
    }
}

/// `p^k` as a big integer, for exponent identities in tests and final exponentiation.
pub fn base_modulus_pow(k: u32) -> BigUint {
    let p = Fp::modulus();
    let mut acc = BigUint::from(1u32);
    for _ in 0..k {
        acc *= p;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_fq2(seed: u64) -> Fq2 {
        Fq2::from_u64s(seed.wrapping_mul(0x9e37_79b9) + 1, seed * 31 + 7)
    }

    fn sample_fq6(seed: u64) -> Fq6 {
        Fq6::new(
            sample_fq2(seed),
            sample_fq2(seed + 11),
            sample_fq2(seed + 23),
        )
    }

    fn sample_fq12(seed: u64) -> Fq12 {
        Fq12::new(sample_fq6(seed), sample_fq6(seed + 101))
    }

    #[test]
    fn squaring_one_is_one() {
        assert_eq!(Fq2::one().square(), Fq2::one());
        assert_eq!(Fq6::one().square(), Fq6::one());
        assert_eq!(Fq12::one().square(), Fq12::one());
    }

    #[test]
    fn u_squared_is_minus_one() {
        let u = Fq2::from_u64s(0, 1);
        assert_eq!(u.square(), -Fq2::one());
    }

    #[test]
    fn v_cubed_is_xi_and_w_squared_is_v() {
        let v = Fq6::new(Fq2::zero(), Fq2::one(), Fq2::zero());
        assert_eq!(&v * &v * &v, Fq6::new(Fq2::xi(), Fq2::zero(), Fq2::zero()));
        let w = Fq12::new(Fq6::zero(), Fq6::one());
        assert_eq!(w.square(), Fq12::new(v, Fq6::zero()));
    }

    #[test]
    fn specialised_squaring_matches_multiplication() {
        for s in 1..5 {
            let a = sample_fq2(s);
            assert_eq!(a.square(), &a * &a);
            let b = sample_fq12(s);
            assert_eq!(b.square(), &b * &b);
        }
    }

    #[test]
    fn inverses() {
        for s in 1..6 {
            let a = sample_fq2(s);
            assert_eq!(&a * a.inverse().unwrap(), Fq2::one());
            let b = sample_fq6(s);
            assert_eq!(&b * b.inverse().unwrap(), Fq6::one());
            let c = sample_fq12(s);
            assert_eq!(&c * c.inverse().unwrap(), Fq12::one());
        }
        assert_eq!(Fq2::zero().inverse(), Err(AlgebraError::DivisionByZero));
        assert_eq!(Fq6::zero().inverse(), Err(AlgebraError::DivisionByZero));
        assert_eq!(Fq12::zero().inverse(), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn frobenius_matches_raising_to_p() {
        let a = sample_fq12(3);
        assert_eq!(a.frobenius(), a.pow(Fp::modulus()));
    }

    #[test]
    fn conjugate_matches_raising_to_p6() {
        let a = sample_fq12(5);
        assert_eq!(a.conjugate(), a.pow(&base_modulus_pow(6)));
    }

    #[test]
    fn multiplicative_group_order_via_repeated_squaring() {
        let a = sample_fq12(7);
        let p6 = base_modulus_pow(6);
        let step = a.pow(&(&p6 - 1u32));
        assert_eq!(step.pow(&(p6 + 1u32)), Fq12::one());
    }
}
