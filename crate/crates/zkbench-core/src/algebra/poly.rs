use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use super::AlgebraError;

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// Always kept trimmed: the last coefficient is nonzero, and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^degree`
    pub fn monomial(c: F, degree: usize) -> Self {
        let mut coeffs = vec![F::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// The polynomial `x - root`.
    pub fn linear_root(root: &F) -> Self {
        Self::new(vec![-root.clone(), F::one()])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_many(&self, xs: &[F]) -> Vec<F> {
        xs.iter().map(|x| self.eval(x)).collect()
    }

    pub fn scale(&self, k: &F) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k).collect())
    }

    /// `p(k * x)`, computed by scaling the i-th coefficient by `k^i`.
    pub fn compose_scaled(&self, k: &F) -> Self {
        let mut pow = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * &pow);
            pow *= k;
        }
        Self::new(out)
    }

    /// Schoolbook product.
    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a.clone() * b;
            }
        }
        Self::new(out)
    }

    pub fn square(&self) -> Self {
        self.mul_poly(self)
    }

    fn add_poly(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    fn sub_poly(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Long division: returns `(quotient, remainder)` with
    /// `self = quotient * den + remainder` and `deg(remainder) < deg(den)`.
    pub fn divrem(&self, den: &Self) -> Result<(Self, Self), AlgebraError> {
        let lead = den.leading_coeff().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = lead.inverse()?;
        if self.degree() < den.degree() {
            return Ok((Self::zero(), self.clone()));
        }
        let dn = den.coeffs.len();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dn + 1];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let factor = top * &lead_inv;
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= factor.clone() * d;
            }
            quot[k] = factor;
        }
        rem.truncate(dn - 1);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division by `x - root` via synthetic division; returns quotient and remainder.
    pub fn div_linear(&self, root: &F) -> (Self, F) {
        if self.is_zero() {
            return (Self::zero(), F::zero());
        }
        let n = self.coeffs.len();
        let mut quot = vec![F::zero(); n - 1];
        let mut carry = F::zero();
        for i in (0..n).rev() {
            let v = self.coeffs[i].clone() + carry * root;
            if i == 0 {
                return (Self::new(quot), v);
            }
            quot[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// Product of `(x - r)` over all roots; the empty product is `1`.
    pub fn vanishing(roots: &[F]) -> Self {
        let mut coeffs = vec![F::one()];
        for r in roots {
            // multiply in place by (x - r)
            coeffs.push(F::zero());
            for i in (0..coeffs.len()).rev() {
                let lower = if i > 0 {
                    coeffs[i - 1].clone()
                } else {
                    F::zero()
                };
                coeffs[i] = lower - coeffs[i].clone() * r;
            }
        }
        Self::new(coeffs)
    }

    /// Unique polynomial of degree `< points.len()` through all points.
    pub fn interpolate(points: &[(F, F)]) -> Result<Self, AlgebraError> {
        let xs: Vec<F> = points.iter().map(|(x, _)| x.clone()).collect();
        let ys: Vec<F> = points.iter().map(|(_, y)| y.clone()).collect();
        Self::interpolate_xy(&xs, &ys)
    }

    /// Lagrange interpolation over separate coordinate slices.
    ///
    /// Builds `Z(x) = prod (x - x_i)` once; each basis numerator is
    /// `Z(x) / (x - x_i)` and its denominator is that numerator at `x_i`.
    pub fn interpolate_xy(xs: &[F], ys: &[F]) -> Result<Self, AlgebraError> {
        if xs.len() != ys.len() {
            return Err(AlgebraError::LengthMismatch {
                expected: xs.len(),
                found: ys.len(),
            });
        }
        for (i, x) in xs.iter().enumerate() {
            if xs[..i].contains(x) {
                return Err(AlgebraError::DuplicateAbscissa(i));
            }
        }
        let z = Self::vanishing(xs);
        let mut acc = vec![F::zero(); xs.len()];
        for (x, y) in xs.iter().zip(ys) {
            if y.is_zero() {
                continue;
            }
            let (basis, _) = z.div_linear(x);
            let w = y.clone() * basis.eval(x).inverse()?;
            for (a, c) in acc.iter_mut().zip(basis.coeffs()) {
                *a += w.clone() * c;
            }
        }
        Ok(Self::new(acc))
    }

    /// Splits into even- and odd-indexed coefficient polynomials:
    /// `p(x) = even(x^2) + x * odd(x^2)`.
    pub fn split_even_odd(&self) -> (Self, Self) {
        let even = self.coeffs.iter().step_by(2).cloned().collect();
        let odd = self.coeffs.iter().skip(1).step_by(2).cloned().collect();
        (Self::new(even), Self::new(odd))
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.add_poly(rhs)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.sub_poly(rhs)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.mul_poly(rhs)
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.add_poly(&rhs)
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.sub_poly(&rhs)
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.mul_poly(&rhs)
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, Fr, PrimeField};

    fn fq_poly(cs: &[i64]) -> Polynomial<Fq> {
        Polynomial::new(cs.iter().map(|&c| Fq::from_i64(c)).collect())
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(fq_poly(&[1, 2, 0, 0]).degree(), 1);
        assert_eq!(fq_poly(&[0, 0]).degree(), -1);
        assert!(fq_poly(&[]).is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(Polynomial::<Fq>::zero().eval(&Fq::new(17)), Fq::zero());
        let cubic = fq_poly(&[5, 1, 0, 1]);
        assert_eq!(cubic.eval(&Fq::new(3)), Fq::new(35));
    }

    #[test]
    fn products() {
        let a = fq_poly(&[3, 0, 7]);
        assert_eq!(&a * &fq_poly(&[1]), a);
        assert_eq!(&fq_poly(&[1, 1]) * &fq_poly(&[-1, 1]), fq_poly(&[-1, 0, 1]));
        assert!((&a * &Polynomial::zero()).is_zero());
    }

    #[test]
    fn division() {
        let (q, r) = fq_poly(&[-1, 0, 1]).divrem(&fq_poly(&[-1, 1])).unwrap();
        assert_eq!(q, fq_poly(&[1, 1]));
        assert!(r.is_zero());
        let p = fq_poly(&[4, 9, 2, 8]);
        let (q, r) = p.divrem(&p).unwrap();
        assert_eq!(q, fq_poly(&[1]));
        assert!(r.is_zero());
        assert_eq!(
            p.divrem(&Polynomial::zero()),
            Err(AlgebraError::DivisionByZero)
        );
        let (q, r) = fq_poly(&[1, 2]).divrem(&fq_poly(&[0, 0, 1])).unwrap();
        assert!(q.is_zero());
        assert_eq!(r, fq_poly(&[1, 2]));
    }

    #[test]
    fn synthetic_division_matches_long_division() {
        let p = fq_poly(&[7, -3, 0, 11, 2]);
        let root = Fq::new(9);
        let (q, r) = p.div_linear(&root);
        let (q2, r2) = p.divrem(&Polynomial::linear_root(&root)).unwrap();
        assert_eq!(q, q2);
        assert_eq!(Polynomial::constant(r), r2);
        assert_eq!(r, p.eval(&root));
    }

    #[test]
    fn vanishing_polynomials() {
        assert_eq!(Polynomial::<Fq>::vanishing(&[]), fq_poly(&[1]));
        assert_eq!(Polynomial::vanishing(&[Fq::zero()]), fq_poly(&[0, 1]));
        let roots: Vec<Fr> = (1..=4).map(Fr::from_u64).collect();
        let z = Polynomial::vanishing(&roots);
        assert_eq!(z.degree(), 4);
        assert_eq!(z.leading_coeff(), Some(&Fr::one()));
        // (x-1)(x-2)(x-3)(x-4) = x^4 - 10x^3 + 35x^2 - 50x + 24
        let expected: Vec<Fr> = [24, -50, 35, -10, 1]
            .iter()
            .map(|&c| Fr::from_i64(c))
            .collect();
        assert_eq!(z.coeffs(), expected.as_slice());
        for r in &roots {
            assert!(z.eval(r).is_zero());
        }
    }

    #[test]
    fn interpolation_small_cases() {
        let p = Polynomial::interpolate(&[(Fq::new(4), Fq::new(9))]).unwrap();
        assert_eq!(p, fq_poly(&[9]));
        // y = 2x + 1
        let line = Polynomial::interpolate(&[
            (Fq::new(1), Fq::new(3)),
            (Fq::new(2), Fq::new(5)),
            (Fq::new(7), Fq::new(15)),
        ])
        .unwrap();
        assert_eq!(line, fq_poly(&[1, 2]));
        let dup = Polynomial::interpolate(&[(Fq::new(1), Fq::new(3)), (Fq::new(1), Fq::new(4))]);
        assert_eq!(dup, Err(AlgebraError::DuplicateAbscissa(1)));
    }

    #[test]
    fn even_odd_split_and_scaled_composition() {
        let p = fq_poly(&[1, 2, 3, 4]);
        let (e, o) = p.split_even_odd();
        assert_eq!(e, fq_poly(&[1, 3]));
        assert_eq!(o, fq_poly(&[2, 4]));
        let k = Fq::new(7);
        let x = Fq::new(12345);
        assert_eq!(p.compose_scaled(&k).eval(&x), p.eval(&(k * x)));
    }
}
