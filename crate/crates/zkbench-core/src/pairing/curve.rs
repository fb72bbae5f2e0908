use core::fmt;
use core::marker::PhantomData;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigUint;

use super::PairingError;
use crate::algebra::{Field, Fp, Fq2, Fr, PrimeField};

/// Parameters of a short Weierstrass curve `y^2 = x^3 + b`.
pub trait CurveParams: Clone + fmt::Debug + PartialEq + Eq {
    type Base: Field;
    const NAME: &'static str;

    fn coeff_b() -> Self::Base;
    fn generator_coords() -> (Self::Base, Self::Base);
}

/// BN128 G1: `y^2 = x^3 + 3` over `Fp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G1Curve;

/// BN128 G2: the sextic twist `y^2 = x^3 + 3 / (9 + u)` over `Fq2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2Curve;

fn fp_dec(s: &str) -> Fp {
    Fp::from_biguint(&BigUint::parse_bytes(s.as_bytes(), 10).expect("decimal literal"))
}

impl CurveParams for G1Curve {
    type Base = Fp;
    const NAME: &'static str = "G1";

    fn coeff_b() -> Fp {
        Fp::from_u64(3)
    }

    fn generator_coords() -> (Fp, Fp) {
        (Fp::from_u64(1), Fp::from_u64(2))
    }
}

impl CurveParams for G2Curve {
    type Base = Fq2;
    const NAME: &'static str = "G2";

    fn coeff_b() -> Fq2 {
        Fq2::from_u64s(3, 0) * Fq2::xi().inverse().expect("xi is nonzero")
    }

    fn generator_coords() -> (Fq2, Fq2) {
        let x = Fq2::new(
            fp_dec("10857046999023057135944570762232829481370756359578518086990519993285655852781"),
            fp_dec("11559732032986387107991004021392285783925812861821192530917403151452391805634"),
        );
        let y = Fq2::new(
            fp_dec("8495653923123431417604973247489272438418190587263600148770280649306958101930"),
            fp_dec("4082367875863433681332203403145435568316851327593401208105741076214120093531"),
        );
        (x, y)
    }
}

/// Affine point, or the point at infinity.
///
/// Non-infinity points are always on the curve: the only public
/// constructors check the curve equation.
#[derive(Clone, PartialEq, Eq)]
pub struct AffinePoint<C: CurveParams> {
    x: C::Base,
    y: C::Base,
    infinity: bool,
    _curve: PhantomData<C>,
}

pub type G1Point = AffinePoint<G1Curve>;
pub type G2Point = AffinePoint<G2Curve>;

impl<C: CurveParams> fmt::Debug for AffinePoint<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.infinity {
            write!(f, "{}(infinity)", C::NAME)
        } else {
            write!(f, "{}({:?}, {:?})", C::NAME, self.x, self.y)
        }
    }
}

impl<C: CurveParams> AffinePoint<C> {
    pub fn new(x: C::Base, y: C::Base) -> Result<Self, PairingError> {
        if !Self::satisfies_equation(&x, &y) {
            return Err(PairingError::NotOnCurve(C::NAME));
        }
        Ok(Self::from_raw(x, y))
    }

    fn from_raw(x: C::Base, y: C::Base) -> Self {
        AffinePoint {
            x,
            y,
            infinity: false,
            _curve: PhantomData,
        }
    }

    pub fn infinity() -> Self {
        AffinePoint {
            x: C::Base::zero(),
            y: C::Base::zero(),
            infinity: true,
            _curve: PhantomData,
        }
    }

    pub fn generator() -> Self {
        let (x, y) = C::generator_coords();
        Self::from_raw(x, y)
    }

    fn satisfies_equation(x: &C::Base, y: &C::Base) -> bool {
        y.square() == x.square() * x + C::coeff_b()
    }

    pub fn is_on_curve(&self) -> bool {
        self.infinity || Self::satisfies_equation(&self.x, &self.y)
    }

    pub fn is_infinity(&self) -> bool {
        self.infinity
    }

    pub fn x(&self) -> &C::Base {
        &self.x
    }

    pub fn y(&self) -> &C::Base {
        &self.y
    }

    pub(crate) fn to_jacobian(&self) -> Jacobian<C> {
        if self.infinity {
            Jacobian::identity()
        } else {
            Jacobian {
                x: self.x.clone(),
                y: self.y.clone(),
                z: C::Base::one(),
                _curve: PhantomData,
            }
        }
    }

    pub fn double(&self) -> Self {
        self.to_jacobian().double().to_affine()
    }

    /// Double-and-add scalar multiplication.
    pub fn mul(&self, k: &Fr) -> Self {
        self.mul_biguint(k.value())
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        self.mul_biguint(&BigUint::from(k))
    }

    /// Multiplication by an unreduced integer, used for subgroup checks.
    pub fn mul_biguint(&self, k: &BigUint) -> Self {
        let base = self.to_jacobian();
        let mut acc = Jacobian::identity();
        for i in (0..k.bits()).rev() {
            acc = acc.double();
            if k.bit(i) {
                acc = acc.add(&base);
            }
        }
        acc.to_affine()
    }

    /// True when `r * self` is the identity.
    pub fn in_prime_subgroup(&self) -> bool {
        self.mul_biguint(Fr::modulus()).is_infinity()
    }
}

impl<C: CurveParams> Add for &AffinePoint<C> {
    type Output = AffinePoint<C>;
    fn add(self, rhs: Self) -> AffinePoint<C> {
        self.to_jacobian().add(&rhs.to_jacobian()).to_affine()
    }
}

impl<C: CurveParams> Add for AffinePoint<C> {
    type Output = AffinePoint<C>;
    fn add(self, rhs: Self) -> AffinePoint<C> {
        &self + &rhs
    }
}

impl<C: CurveParams> Neg for &AffinePoint<C> {
    type Output = AffinePoint<C>;
    fn neg(self) -> AffinePoint<C> {
        if self.infinity {
            self.clone()
        } else {
            AffinePoint::from_raw(self.x.clone(), -self.y.clone())
        }
    }
}

impl<C: CurveParams> Neg for AffinePoint<C> {
    type Output = AffinePoint<C>;
    fn neg(self) -> AffinePoint<C> {
        -&self
    }
}

impl<C: CurveParams> Sub for &AffinePoint<C> {
    type Output = AffinePoint<C>;
    fn sub(self, rhs: Self) -> AffinePoint<C> {
        self + &(-rhs)
    }
}

impl<C: CurveParams> core::iter::Sum for AffinePoint<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Jacobian::identity(), |acc, p| acc.add(&p.to_jacobian()))
            .to_affine()
    }
}

/// Jacobian coordinates `(X, Y, Z)` for `(X/Z^2, Y/Z^3)`; `Z = 0` is infinity.
#[derive(Clone, Debug)]
pub(crate) struct Jacobian<C: CurveParams> {
    x: C::Base,
    y: C::Base,
    z: C::Base,
    _curve: PhantomData<C>,
}

impl<C: CurveParams> Jacobian<C> {
    pub(crate) fn identity() -> Self {
        Jacobian {
            x: C::Base::one(),
            y: C::Base::one(),
            z: C::Base::zero(),
            _curve: PhantomData,
        }
    }

    fn is_identity(&self) -> bool {
        self.z.is_zero()
    }

    pub(crate) fn double(&self) -> Self {
        if self.is_identity() || self.y.is_zero() {
            return Self::identity();
        }
        let a = self.x.square();
        let b = self.y.square();
        let c = b.square();
        let d = ((self.x.clone() + &b).square() - &a - &c).double();
        let e = a.double() + &a;
        let f = e.square();
        let x3 = f - d.double();
        let eight_c = c.double().double().double();
        let y3 = e * (d - &x3) - eight_c;
        let z3 = (self.y.clone() * &self.z).double();
        Jacobian {
            x: x3,
            y: y3,
            z: z3,
            _curve: PhantomData,
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        let z1z1 = self.z.square();
        let z2z2 = other.z.square();
        let u1 = self.x.clone() * &z2z2;
        let u2 = other.x.clone() * &z1z1;
        let s1 = self.y.clone() * &other.z * &z2z2;
        let s2 = other.y.clone() * &self.z * &z1z1;
        let h = u2 - &u1;
        let r = s2 - &s1;
        if h.is_zero() {
            return if r.is_zero() {
                self.double()
            } else {
                Self::identity()
            };
        }
        let hh = h.square();
        let hhh = hh.clone() * &h;
        let v = u1 * &hh;
        let x3 = r.square() - &hhh - v.double();
        let y3 = r * (v - &x3) - s1 * &hhh;
        let z3 = self.z.clone() * &other.z * &h;
        Jacobian {
            x: x3,
            y: y3,
            z: z3,
            _curve: PhantomData,
        }
    }

    pub(crate) fn to_affine(&self) -> AffinePoint<C> {
        if self.is_identity() {
            return AffinePoint::infinity();
        }
        let zinv = self.z.inverse().expect("nonzero z");
        let zinv2 = zinv.square();
        let x = self.x.clone() * &zinv2;
        let y = self.y.clone() * &zinv2 * &zinv;
        AffinePoint::from_raw(x, y)
    }
}
