//! Bernoulli numbers with the convention `B_n(1)` (so `B_1 = +1/2`) and
//! Faulhaber's power-sum polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::rational::{binomial, factorial, Rational};
use super::series::TruncatedSeries;

/// `B_0(1), …, B_n(1)` read off `z / (1 - e^{-z}) = Σ B_k(1) z^k / k!`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let denominator = TruncatedSeries::from_fn(n, |k| {
        let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
        sign / Rational::from_integer(BigInt::from(factorial(k + 1)))
    });
    let egf = denominator.reciprocal().expect("constant term is one");
    (0..=n)
        .map(|k| egf.coeff(k) * Rational::from_integer(BigInt::from(factorial(k))))
        .collect()
}

pub fn bernoulli_number(n: usize) -> Rational {
    bernoulli_numbers(n).pop().unwrap_or_else(Rational::zero)
}

/// The polynomial `F_j` in `N` with `F_j(N) = Σ_{k=1}^N k^j`.
pub fn faulhaber_polynomial(j: usize) -> Polynomial {
    let b = bernoulli_numbers(j);
    let mut coeffs = vec![Rational::zero(); j + 2];
    for (i, bi) in b.iter().enumerate() {
        coeffs[j + 1 - i] += Rational::from_integer(BigInt::from(binomial(j + 1, i))) * bi;
    }
    let scale = Rational::new(BigInt::one(), BigInt::from(j + 1));
    Polynomial::new(coeffs, 'N').scale(&scale)
}

/// Maps `p(k)` to the polynomial `N ↦ Σ_{k=1}^N p(k)`.
pub fn summation_operator(p: &Polynomial) -> Polynomial {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Polynomial::zero('N'), |acc, (d, c)| {
            &acc + &faulhaber_polynomial(d).scale(c)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    // Recursion Σ_{k<n+1} C(n+1,k) B_k(0) = 0 for the B_n(0) convention, then flip B_1.
    fn bernoulli_oracle(n: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![int(1)];
        for m in 1..=n {
            let s = (0..m).fold(Rational::zero(), |acc, k| {
                acc + Rational::from_integer(BigInt::from(binomial(m + 1, k))) * &b[k]
            });
            b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
        }
        if n >= 1 {
            b[1] = -b[1].clone();
        }
        b
    }

    #[test]
    fn first_values() {
        assert_eq!(bernoulli_number(0), int(1));
        assert_eq!(bernoulli_number(1), rat(1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(3), int(0));
        assert_eq!(bernoulli_number(4), rat(-1, 30));
    }

    #[test]
    fn agrees_with_recursion() {
        assert_eq!(bernoulli_numbers(16), bernoulli_oracle(16));
    }

    #[test]
    fn faulhaber_small() {
        assert_eq!(faulhaber_polynomial(0), Polynomial::var('N'));
        assert_eq!(
            faulhaber_polynomial(1),
            Polynomial::new(vec![int(0), rat(1, 2), rat(1, 2)], 'N')
        );
        assert_eq!(faulhaber_polynomial(3).eval(&int(4)), int(100));
    }

    #[test]
    fn faulhaber_matches_direct_sums() {
        for j in 0..=8u32 {
            let p = faulhaber_polynomial(j as usize);
            assert_eq!(p.degree(), Some(j as usize + 1));
            assert!(p.coeff(0).is_zero());
            let mut acc = BigInt::zero();
            for n in 0..=20i64 {
                if n > 0 {
                    acc += BigInt::from(n).pow(j);
                }
                assert_eq!(p.eval(&int(n)), Rational::from_integer(acc.clone()));
            }
        }
    }

    #[test]
    fn summation_of_constant_one_is_n() {
        assert_eq!(summation_operator(&Polynomial::one('k')), Polynomial::var('N'));
    }
}
