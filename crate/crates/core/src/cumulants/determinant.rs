use num_bigint::BigInt;

use super::ring::Ring;
use crate::algebra::{factorial, int, Rational};
use crate::{Error, Result};

use super::univariate::MAX_UNIVARIATE;

/// Families with a determinant formula against moments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeterminantKind {
    Classical,
    Boolean,
}

/// Leading principal minors `D_1..D_n` of a lower Hessenberg matrix given by
/// `entry(i, j)` (1-based, only `j ≤ i + 1` is read).
pub fn hessenberg_minors<T: Ring>(n: usize, one: &T, entry: impl Fn(usize, usize) -> T) -> Vec<T> {
    let mut d: Vec<T> = vec![one.clone()];
    for k in 1..=n {
        let mut acc = one.zero_like();
        let mut chain = one.clone();
        for i in (1..=k).rev() {
            if i < k {
                chain = chain.r_mul(&entry(i, i + 1));
            }
            let term = entry(k, i).r_mul(&chain).r_mul(&d[i - 1]);
            acc = if (k - i) % 2 == 0 {
                acc.r_add(&term)
            } else {
                acc.r_sub(&term)
            };
        }
        d.push(acc);
    }
    d.remove(0);
    d
}

/// Determinant of the `n × n` lower Hessenberg matrix `entry`.
pub fn hessenberg_determinant<T: Ring>(n: usize, one: &T, entry: impl Fn(usize, usize) -> T) -> T {
    if n == 0 {
        return one.clone();
    }
    hessenberg_minors(n, one, entry).pop().expect("n ≥ 1")
}

fn inv_factorial(k: usize) -> Rational {
    Rational::new(BigInt::from(1), BigInt::from(factorial(k)))
}

fn sign(k: usize) -> Rational {
    int(if k.is_multiple_of(2) { 1 } else { -1 })
}

pub(crate) fn determinant_cumulants_generic<T: Ring>(kind: DeterminantKind, m: &[T]) -> Vec<T> {
    let Some(first) = m.first() else {
        return Vec::new();
    };
    let one = first.one_like();
    let zero = first.zero_like();
    let n = m.len();
    match kind {
        DeterminantKind::Classical => {
            let entry = |i: usize, j: usize| {
                if j == i + 1 {
                    one.clone()
                } else if j > i + 1 {
                    zero.clone()
                } else if j == 1 {
                    m[i - 1].r_scale(&inv_factorial(i - 1))
                } else {
                    m[i - j].r_scale(&inv_factorial(i - j + 1))
                }
            };
            hessenberg_minors(n, &one, entry)
                .into_iter()
                .enumerate()
                .map(|(k, d)| {
                    let c = sign(k) * Rational::from_integer(BigInt::from(factorial(k)));
                    d.r_scale(&c)
                })
                .collect()
        }
        DeterminantKind::Boolean => {
            let entry = |i: usize, j: usize| {
                if j == i + 1 {
                    one.clone()
                } else if j > i + 1 {
                    zero.clone()
                } else {
                    m[i - j].clone()
                }
            };
            hessenberg_minors(n, &one, entry)
                .into_iter()
                .enumerate()
                .map(|(k, d)| d.r_scale(&sign(k)))
                .collect()
        }
    }
}

pub(crate) fn determinant_moments_generic<T: Ring>(kind: DeterminantKind, c: &[T]) -> Vec<T> {
    let Some(first) = c.first() else {
        return Vec::new();
    };
    let one = first.one_like();
    let zero = first.zero_like();
    let n = c.len();
    match kind {
        DeterminantKind::Classical => {
            let entry = |i: usize, j: usize| {
                if j == i + 1 {
                    one.r_scale(&int(-(i as i64)))
                } else if j > i + 1 {
                    zero.clone()
                } else {
                    c[i - j].r_scale(&inv_factorial(i - j))
                }
            };
            hessenberg_minors(n, &one, entry)
        }
        DeterminantKind::Boolean => {
            let entry = |i: usize, j: usize| {
                if j == i + 1 {
                    one.r_scale(&int(-1))
                } else if j > i + 1 {
                    zero.clone()
                } else {
                    c[i - j].clone()
                }
            };
            hessenberg_minors(n, &one, entry)
        }
    }
}

fn check(len: usize) -> Result<()> {
    if len > MAX_UNIVARIATE {
        return Err(Error::limit("determinant size", len, MAX_UNIVARIATE));
    }
    Ok(())
}

/// `κ_1..κ_n` or `b_1..b_n` from moments by determinants.
pub fn determinant_cumulants(kind: DeterminantKind, moments: &[Rational]) -> Result<Vec<Rational>> {
    check(moments.len())?;
    Ok(determinant_cumulants_generic(kind, moments))
}

/// Moments from `κ` or `b` by determinants.
pub fn determinant_moments(kind: DeterminantKind, cumulants: &[Rational]) -> Result<Vec<Rational>> {
    check(cumulants.len())?;
    Ok(determinant_moments_generic(kind, cumulants))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use num_traits::{One, Zero};

    fn leibniz(a: &[Vec<Rational>]) -> Rational {
        let n = a.len();
        crate::permutations::all_permutations(n)
            .iter()
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p.one_line()[i] > p.one_line()[j])
                    .count();
                (0..n).fold(sign(inversions), |acc, i| acc * &a[i][p.one_line()[i] - 1])
            })
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    #[test]
    fn hessenberg_matches_leibniz() {
        for n in 1..=6 {
            let a: Vec<Vec<Rational>> = (1..=n)
                .map(|i| {
                    (1..=n)
                        .map(|j| {
                            if j > i + 1 {
                                Rational::zero()
                            } else {
                                rat((i * 7 + j * 3) as i64 % 11 - 5, (j % 3 + 1) as i64)
                            }
                        })
                        .collect()
                })
                .collect();
            let d = hessenberg_determinant(n, &Rational::one(), |i, j| a[i - 1][j - 1].clone());
            assert_eq!(d, leibniz(&a), "n = {n}");
        }
    }

    #[test]
    fn examples() {
        let m = vec![rat(1, 2), int(3)];
        let k = determinant_cumulants(DeterminantKind::Classical, &m).unwrap();
        assert_eq!(k, vec![rat(1, 2), int(3) - rat(1, 4)]);
        let geometric: Vec<Rational> = (0..6).map(|k| int(1 << k)).collect();
        let b = determinant_cumulants(DeterminantKind::Boolean, &geometric).unwrap();
        assert_eq!(b, vec![int(1); 6]);
    }
}
