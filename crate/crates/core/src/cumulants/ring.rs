use crate::algebra::{MomentPolynomial, Polynomial, Rational};

/// Commutative ring operations needed by the univariate engine and the
/// determinant routines. Constants are produced relative to an existing element.
pub trait Ring: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn r_add(&self, other: &Self) -> Self;
    fn r_sub(&self, other: &Self) -> Self;
    fn r_mul(&self, other: &Self) -> Self;
    fn r_scale(&self, c: &Rational) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        num_traits::One::one()
    }
    fn r_add(&self, other: &Self) -> Self {
        self + other
    }
    fn r_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn r_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn r_scale(&self, c: &Rational) -> Self {
        self * c
    }
}

impl Ring for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.indeterminate())
    }
    fn one_like(&self) -> Self {
        Polynomial::one(self.indeterminate())
    }
    fn r_add(&self, other: &Self) -> Self {
        self + other
    }
    fn r_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn r_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn r_scale(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Ring for MomentPolynomial {
    fn zero_like(&self) -> Self {
        MomentPolynomial::zero(self.ambient_n())
    }
    fn one_like(&self) -> Self {
        MomentPolynomial::one(self.ambient_n())
    }
    fn r_add(&self, other: &Self) -> Self {
        self + other
    }
    fn r_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn r_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn r_scale(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

/// Product of the listed factors `values[k - 1]`.
pub(crate) fn product_of<T: Ring>(values: &[T], parts: &[usize], one: &T) -> T {
    parts.iter().fold(one.clone(), |acc, &k| acc.r_mul(&values[k - 1]))
}
