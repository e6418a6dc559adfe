use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::ring::{product_of, Ring};
use super::{Basis, CumulantKind};
use crate::algebra::{int, MomentPolynomial, MomentSymbol, Polynomial, Rational, TruncatedSeries};
use crate::forests::inverse_tree_factorial;
use crate::partitions::enumerate_with_limit;
use crate::{Error, Result};

/// Longest sequence accepted by the univariate routines.
pub const MAX_UNIVARIATE: usize = 9;

/// Block-size types with aggregated weights, largest part first.
type Weights = Vec<(Vec<usize>, Rational)>;
type WeightCache = RwLock<HashMap<(CumulantKind, usize), Arc<Weights>>>;

fn weights(kind: CumulantKind, n: usize) -> Result<Arc<Weights>> {
    static CACHE: OnceLock<WeightCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(w) = cache.read().expect("cache lock").get(&(kind, n)) {
        return Ok(w.clone());
    }
    let mut acc: BTreeMap<Vec<usize>, Rational> = BTreeMap::new();
    for pi in enumerate_with_limit(n, kind.class(), MAX_UNIVARIATE)? {
        let w = match kind {
            CumulantKind::Monotone => inverse_tree_factorial(&pi)?,
            _ => Rational::one(),
        };
        let mut sizes = pi.block_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        *acc.entry(sizes).or_insert_with(Rational::zero) += w;
    }
    let w = Arc::new(acc.into_iter().collect::<Weights>());
    Ok(cache.write().expect("cache lock").entry((kind, n)).or_insert(w).clone())
}

fn check_len(len: usize) -> Result<()> {
    if len > MAX_UNIVARIATE {
        Err(Error::limit("univariate sequence length", len, MAX_UNIVARIATE))
    } else {
        Ok(())
    }
}

/// `m_n = Σ_λ w_λ t^{ℓ(λ)} c_λ` for `n = 1..len`.
fn moments_scaled<T: Ring>(kind: CumulantKind, c: &[T], t: &Rational) -> Result<Vec<T>> {
    check_len(c.len())?;
    let Some(first) = c.first() else {
        return Ok(Vec::new());
    };
    let one = first.one_like();
    let mut out = Vec::with_capacity(c.len());
    for n in 1..=c.len() {
        let mut acc = first.zero_like();
        for (parts, w) in weights(kind, n)?.iter() {
            let coeff = w * num_traits::pow(t.clone(), parts.len());
            if coeff.is_zero() {
                continue;
            }
            acc = acc.r_add(&product_of(c, parts, &one).r_scale(&coeff));
        }
        out.push(acc);
    }
    Ok(out)
}

/// Moments `m_1..m_n` from cumulants `c_1..c_n` of the given family.
pub fn moments_from_cumulants<T: Ring>(kind: CumulantKind, c: &[T]) -> Result<Vec<T>> {
    moments_scaled(kind, c, &Rational::one())
}

/// Cumulants `c_1..c_n` from moments by triangular solve.
pub fn cumulants_from_moments<T: Ring>(kind: CumulantKind, m: &[T]) -> Result<Vec<T>> {
    check_len(m.len())?;
    let Some(first) = m.first() else {
        return Ok(Vec::new());
    };
    let one = first.one_like();
    let mut c: Vec<T> = Vec::with_capacity(m.len());
    for n in 1..=m.len() {
        let mut acc = m[n - 1].clone();
        for (parts, w) in weights(kind, n)?.iter() {
            if parts.len() > 1 {
                acc = acc.r_sub(&product_of(&c, parts, &one).r_scale(w));
            }
        }
        c.push(acc);
    }
    Ok(c)
}

pub(crate) fn convert_generic<T: Ring>(from: Basis, to: Basis, values: &[T]) -> Result<Vec<T>> {
    check_len(values.len())?;
    if from == to {
        return Ok(values.to_vec());
    }
    let moments = match from {
        Basis::Moments => values.to_vec(),
        Basis::Cumulants(k) => moments_from_cumulants(k, values)?,
    };
    match to {
        Basis::Moments => Ok(moments),
        Basis::Cumulants(k) => cumulants_from_moments(k, &moments),
    }
}

/// Univariate change of coordinates through moments.
pub fn convert_sequence(from: Basis, to: Basis, values: &[Rational]) -> Result<Vec<Rational>> {
    convert_generic(from, to, values)
}

pub(crate) fn tilde_generic<T: Ring>(m: &[T]) -> Result<Vec<T>> {
    let b = cumulants_from_moments(CumulantKind::Boolean, m)?;
    let neg: Vec<T> = b.iter().map(|x| x.r_scale(&int(-1))).collect();
    moments_from_cumulants(CumulantKind::Free, &neg)
}

/// Moments of the element whose free cumulants are the negated Boolean
/// cumulants of the input.
pub fn tilde_transform(m: &[Rational]) -> Result<Vec<Rational>> {
    tilde_generic(m)
}

/// Moments of `X(t)`, the element with monotone cumulants `t · h_k`.
pub fn monotone_dilate(h: &[Rational], t: &Rational) -> Result<Vec<Rational>> {
    moments_scaled(CumulantKind::Monotone, h, t)
}

pub(crate) fn monotone_dilate_generic<T: Ring>(h: &[T], t: &Rational) -> Result<Vec<T>> {
    moments_scaled(CumulantKind::Monotone, h, t)
}

/// `κ_n` when every Boolean cumulant equals `x`.
pub fn boolean_poisson_kappa(n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::precondition("order must be at least 1"));
    }
    check_len(n)?;
    let b = vec![Polynomial::var('x'); n];
    let m = moments_from_cumulants(CumulantKind::Boolean, &b)?;
    let kappa = cumulants_from_moments(CumulantKind::Classical, &m)?;
    Ok(kappa[n - 1].clone())
}

/// `M(z) = 1 + Σ m_k z^k`, truncated at the sequence length.
pub fn moment_series(m: &[Rational]) -> TruncatedSeries {
    let mut coeffs = vec![Rational::one()];
    coeffs.extend_from_slice(m);
    TruncatedSeries::new(coeffs, m.len())
}

/// `Σ c_k z^k`, truncated at the sequence length.
pub fn cumulant_series(c: &[Rational]) -> TruncatedSeries {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend_from_slice(c);
    TruncatedSeries::new(coeffs, c.len())
}

/// `z · M_{X(t)}(z)` for the monotone cumulants `h`, to order `h.len()`.
pub fn monotone_flow_series(h: &[Rational], t: &Rational) -> Result<TruncatedSeries> {
    let m = monotone_dilate(h, t)?;
    let mut coeffs = vec![Rational::zero(), Rational::one()];
    coeffs.extend_from_slice(&m);
    Ok(TruncatedSeries::new(coeffs, h.len()))
}

/// Univariate moment symbols `m_1..m_n` in ambient size `n`.
pub fn univariate_symbols(n: usize) -> Vec<MomentPolynomial> {
    (1..=n)
        .map(|k| MomentPolynomial::symbol(n, MomentSymbol::univariate(k)))
        .collect()
}
