use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};
use crate::{Error, Result};

/// Formal power series over the rationals, truncated at degree `order`.
///
/// Binary operations on series of different orders work at the smaller
/// order and set [`TruncatedSeries::mixed_order`] on the result.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<Rational>,
    mixed_order: bool,
}

impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl Eq for TruncatedSeries {}

impl TruncatedSeries {
    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries {
            order,
            coeffs,
            mixed_order: false,
        }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Self::new((0..=order).map(f).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::from_fn(order, |k| if k == 1 { Rational::one() } else { Rational::zero() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mixed_order(&self) -> bool {
        self.mixed_order
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let mut s = Self::new(self.coeffs[..=order].to_vec(), order);
        s.mixed_order = self.mixed_order;
        s
    }

    fn common_order(&self, other: &Self) -> (usize, bool) {
        (
            self.order.min(other.order),
            self.mixed_order || other.mixed_order || self.order != other.order,
        )
    }

    fn with_flag(mut self, flag: bool) -> Self {
        self.mixed_order = flag;
        self
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect(), self.order).with_flag(self.mixed_order)
    }

    /// Multiplication by `z`, dropping the top coefficient.
    pub fn shift(&self) -> Self {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order]);
        Self::new(coeffs, self.order).with_flag(self.mixed_order)
    }

    pub fn derivative(&self) -> Self {
        Self::from_fn(self.order, |k| {
            self.coeff(k + 1) * Rational::from_integer((k + 1).into())
        })
        .with_flag(self.mixed_order)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        Self::from_fn(self.order, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                self.coeff(k - 1) / Rational::from_integer(k.into())
            }
        })
        .with_flag(self.mixed_order)
    }

    /// `self ∘ inner`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::Series(
                "composition needs an inner series with zero constant term".into(),
            ));
        }
        let (order, flag) = self.common_order(inner);
        let inner = inner.truncate(order);
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &(&acc * &inner) + &TruncatedSeries::constant(c.clone(), order);
        }
        Ok(acc.with_flag(flag))
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn reciprocal(&self) -> Result<Self> {
        let a0 = self.coeff(0);
        if a0.is_zero() {
            return Err(Error::Series("reciprocal of a series with zero constant term".into()));
        }
        let inv0 = a0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order + 1);
        out.push(inv0.clone());
        for n in 1..=self.order {
            let s = (1..=n).fold(Rational::zero(), |acc, k| acc + &self.coeffs[k] * &out[n - k]);
            out.push(-s * &inv0);
        }
        Ok(Self::new(out, self.order).with_flag(self.mixed_order))
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Result<Self> {
        if !self.coeff(0).is_one() {
            return Err(Error::Series("logarithm needs constant term 1".into()));
        }
        let quotient = &self.derivative() * &self.reciprocal()?;
        Ok(quotient.integral().with_flag(self.mixed_order))
    }

    /// Exponential of a series with zero constant term, via
    /// `n g_n = Σ_k k f_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::Series("exponential needs zero constant term".into()));
        }
        let mut out: Vec<Rational> = vec![Rational::one()];
        for n in 1..=self.order {
            let s = (1..=n).fold(Rational::zero(), |acc, k| {
                acc + &self.coeffs[k] * &out[n - k] * Rational::from_integer(k.into())
            });
            out.push(s / Rational::from_integer(n.into()));
        }
        Ok(Self::new(out, self.order).with_flag(self.mixed_order))
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (order, flag) = self.common_order(rhs);
        TruncatedSeries::from_fn(order, |k| &self.coeffs[k] + &rhs.coeffs[k]).with_flag(flag)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (order, flag) = self.common_order(rhs);
        TruncatedSeries::from_fn(order, |k| &self.coeffs[k] - &rhs.coeffs[k]).with_flag(flag)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.scale(&-Rational::one())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let (order, flag) = self.common_order(rhs);
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..=order - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries::new(coeffs, order).with_flag(flag)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{factorial, int, rat};

    fn s(c: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::new(c.iter().map(|&x| int(x)).collect(), order)
    }

    fn exp_z(order: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(order, |k| Rational::new(1.into(), factorial(k).into()))
    }

    #[test]
    fn compose_identities() {
        let g = s(&[0, 2, -1, 5], 3);
        let f = s(&[3, 1, 4, 1], 3);
        assert_eq!(TruncatedSeries::z(3).compose(&g).unwrap(), g);
        assert_eq!(f.compose(&TruncatedSeries::z(3)).unwrap(), f);
    }

    #[test]
    fn compose_geometric_with_z_plus_z2() {
        let f = s(&[1, 1, 1, 1], 3);
        let g = s(&[0, 1, 1], 3);
        assert_eq!(f.compose(&g).unwrap(), s(&[1, 1, 2, 3], 3));
    }

    #[test]
    fn compose_rejects_constant_inner() {
        assert!(s(&[1, 1], 3).compose(&s(&[1, 1], 3)).is_err());
    }

    #[test]
    fn reciprocals() {
        assert_eq!(TruncatedSeries::one(4).reciprocal().unwrap(), TruncatedSeries::one(4));
        assert_eq!(s(&[1, -1], 3).reciprocal().unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(s(&[1, -1, -1], 4).reciprocal().unwrap(), s(&[1, 1, 2, 3, 5], 4));
        assert!(s(&[0, 1], 3).reciprocal().is_err());
    }

    #[test]
    fn logarithms() {
        assert_eq!(TruncatedSeries::one(5).log().unwrap(), TruncatedSeries::zero(5));
        assert_eq!(exp_z(4).log().unwrap(), TruncatedSeries::z(4));
        let mercator = TruncatedSeries::new(vec![int(0), int(-1), rat(-1, 2), rat(-1, 3)], 3);
        assert_eq!(s(&[1, -1], 3).log().unwrap(), mercator);
        assert!(s(&[2, 1], 3).log().is_err());
    }

    #[test]
    fn exp_of_z() {
        assert_eq!(TruncatedSeries::z(6).exp().unwrap(), exp_z(6));
    }

    #[test]
    fn mixed_orders_take_minimum_and_flag() {
        let a = s(&[1, 2, 3, 4], 3);
        let b = s(&[1, 1], 2);
        let c = &a * &b;
        assert_eq!(c.order(), 2);
        assert!(c.mixed_order());
        assert!(!(&a * &a).mixed_order());
    }
}
