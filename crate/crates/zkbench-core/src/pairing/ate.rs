//! Optimal Ate pairing on BN128: Miller loop over `6u + 2` with the two
//! Frobenius correction steps, followed by the final exponentiation.

use core::ops::Mul;

use num_bigint::BigUint;

use super::curve::{G1Point, G2Point};
use super::PairingError;
use crate::algebra::{base_modulus_pow, Field, Fp, Fq12, Fq2, Fr, PrimeField};

/// The BN parameter `u` of the curve family.
pub const BN_U: u64 = 4_965_661_367_192_848_881;

/// Element of the order-`r` target group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gt(Fq12);

impl Gt {
    pub fn one() -> Self {
        Gt(Fq12::one())
    }

    pub fn is_one(&self) -> bool {
        self.0 == Fq12::one()
    }

    pub fn value(&self) -> &Fq12 {
        &self.0
    }

    pub fn pow(&self, k: &Fr) -> Self {
        Gt(self.0.pow(k.value()))
    }

    pub fn pow_biguint(&self, k: &BigUint) -> Self {
        Gt(self.0.pow(k))
    }

    pub fn square(&self) -> Self {
        Gt(self.0.square())
    }
}

impl Mul for &Gt {
    type Output = Gt;
    fn mul(self, rhs: &Gt) -> Gt {
        Gt(&self.0 * &rhs.0)
    }
}

impl Mul for Gt {
    type Output = Gt;
    fn mul(self, rhs: Gt) -> Gt {
        &self * &rhs
    }
}

/// Affine point on the twist, tracked during the Miller loop.
#[derive(Clone)]
struct TwistPoint {
    x: Fq2,
    y: Fq2,
}

/// Line through `t` with slope `lambda`, evaluated at `(xp, yp)` after
/// untwisting `(x, y) -> (x w^2, y w^3)`:
/// `yp - lambda xp w + (lambda x_t - y_t) w^3`.
fn line_eval(t: &TwistPoint, lambda: &Fq2, xp: &Fp, yp: &Fp) -> Fq12 {
    Fq12::from_w_coeffs([
        Fq2::from_base(yp.clone()),
        -lambda.mul_by_base(xp),
        Fq2::zero(),
        lambda.clone() * &t.x - &t.y,
        Fq2::zero(),
        Fq2::zero(),
    ])
}

/// Vertical line `xp - x_t w^2`.
fn vertical_eval(t: &TwistPoint, xp: &Fp) -> Fq12 {
    Fq12::from_w_coeffs([
        Fq2::from_base(xp.clone()),
        Fq2::zero(),
        -t.x.clone(),
        Fq2::zero(),
        Fq2::zero(),
        Fq2::zero(),
    ])
}

/// Doubles `t` in place and returns the tangent line value.
fn double_step(t: &mut Option<TwistPoint>, xp: &Fp, yp: &Fp) -> Fq12 {
    let Some(pt) = t.as_ref() else {
        return Fq12::one();
    };
    if pt.y.is_zero() {
        let line = vertical_eval(pt, xp);
        *t = None;
        return line;
    }
    let x2 = pt.x.square();
    let num = x2.double() + &x2;
    let lambda = num * pt.y.double().inverse().expect("nonzero y");
    let line = line_eval(pt, &lambda, xp, yp);
    let x3 = lambda.square() - pt.x.double();
    let y3 = lambda * (pt.x.clone() - &x3) - &pt.y;
    *t = Some(TwistPoint { x: x3, y: y3 });
    line
}

/// Adds `q` to `t` in place and returns the chord line value.
fn add_step(t: &mut Option<TwistPoint>, q: &TwistPoint, xp: &Fp, yp: &Fp) -> Fq12 {
    let Some(pt) = t.as_ref() else {
        *t = Some(q.clone());
        return Fq12::one();
    };
    let dx = q.x.clone() - &pt.x;
    if dx.is_zero() {
        if q.y == pt.y {
            return double_step(t, xp, yp);
        }
        let line = vertical_eval(pt, xp);
        *t = None;
        return line;
    }
    let lambda = (q.y.clone() - &pt.y) * dx.inverse().expect("nonzero dx");
    let line = line_eval(pt, &lambda, xp, yp);
    let x3 = lambda.square() - &pt.x - &q.x;
    let y3 = lambda * (pt.x.clone() - &x3) - &pt.y;
    *t = Some(TwistPoint { x: x3, y: y3 });
    line
}

/// `(x, y) -> (conj(x) xi^((p-1)/3), conj(y) xi^((p-1)/2))`, the
/// `p`-power Frobenius transported to the twist.
fn twist_frobenius(q: &TwistPoint) -> TwistPoint {
    let p_minus_1 = Fp::modulus() - 1u32;
    let gx = Fq2::xi().pow(&(&p_minus_1 / 3u32));
    let gy = Fq2::xi().pow(&(&p_minus_1 / 2u32));
    TwistPoint {
        x: q.x.conjugate() * gx,
        y: q.y.conjugate() * gy,
    }
}

/// Miller loop `f_{6u+2,Q}(P)` times the two Frobenius line corrections.
pub fn miller_loop(p: &G1Point, q: &G2Point) -> Fq12 {
    if p.is_infinity() || q.is_infinity() {
        return Fq12::one();
    }
    let (xp, yp) = (p.x(), p.y());
    let base = TwistPoint {
        x: q.x().clone(),
        y: q.y().clone(),
    };
    let loop_count = BigUint::from(BN_U) * 6u32 + 2u32;

    let mut f = Fq12::one();
    let mut t = Some(base.clone());
    for i in (0..loop_count.bits() - 1).rev() {
        f = f.square() * double_step(&mut t, xp, yp);
        if loop_count.bit(i) {
            f *= add_step(&mut t, &base, xp, yp);
        }
    }

    let q1 = twist_frobenius(&base);
    let q2 = twist_frobenius(&q1);
    let neg_q2 = TwistPoint { x: q2.x, y: -q2.y };
    f *= add_step(&mut t, &q1, xp, yp);
    f *= add_step(&mut t, &neg_q2, xp, yp);
    f
}

/// Raises a Miller-loop output to `(p^12 - 1) / r`.
///
/// The easy part `(p^6 - 1)(p^2 + 1)` uses conjugation and Frobenius; the
/// remaining `(p^4 - p^2 + 1) / r` is a plain square-and-multiply.
pub fn final_exponentiation(f: &Fq12) -> Result<Gt, PairingError> {
    let inv = f
        .inverse()
        .map_err(|_| PairingError::ZeroFinalExponentiation)?;
    let easy = f.conjugate() * inv;
    let easy = easy.frobenius().frobenius() * &easy;
    let hard_exp = (base_modulus_pow(4) - base_modulus_pow(2) + 1u32) / Fr::modulus();
    Ok(Gt(easy.pow(&hard_exp)))
}

/// The optimal Ate pairing `e: G1 x G2 -> GT`.
pub fn pairing(p: &G1Point, q: &G2Point) -> Gt {
    final_exponentiation(&miller_loop(p, q)).expect("Miller loop output is nonzero")
}
