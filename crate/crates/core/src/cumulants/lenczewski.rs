use num_bigint::BigInt;

use super::identities::Report;
use super::ring::{product_of, Ring};
use super::univariate::{cumulants_from_moments, monotone_dilate_generic, univariate_symbols};
use super::CumulantKind;
use crate::algebra::{int, MomentPolynomial, Rational};
use crate::forests::labelling_polynomial;
use crate::partitions::{enumerate_with_limit, PartitionClass, SetPartition};
use crate::{Error, Result};

/// Number of colourings `f: blocks → [N]` of a noncrossing `π` whose summand
/// survives: every block's nearest outer block of a different colour has a
/// smaller colour.
pub fn coloring_count_brute_force(pi: &SetPartition, colors: usize) -> Result<u64> {
    if !pi.is_noncrossing() {
        return Err(Error::precondition("colourings are defined for noncrossing partitions"));
    }
    let parents = pi.nesting_parents();
    let k = parents.len();
    let total = (colors as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if total > 50_000_000 {
        return Err(Error::limit("colouring count", k, 0));
    }
    let mut f = vec![0usize; k];
    let mut count = 0u64;
    for code in 0..total {
        let mut c = code;
        for slot in f.iter_mut() {
            *slot = (c % colors as u64) as usize;
            c /= colors as u64;
        }
        let ok = (0..k).all(|v| {
            let mut up = parents[v];
            while let Some(w) = up {
                if f[w] != f[v] {
                    return f[w] < f[v];
                }
                up = parents[w];
            }
            true
        });
        if ok {
            count += 1;
        }
    }
    Ok(count)
}

/// `Σ_{π∈NC(n)} P_π(N) r_π = m_n(X(N))` in univariate moment symbols, with the
/// labelling counts cross-checked against brute-force colourings.
pub fn lenczewski_sum_check(n: usize, colors: usize) -> Result<Report> {
    if n > 7 {
        return Err(Error::limit("Lenczewski order", n, 7));
    }
    if colors == 0 || colors > 5 {
        return Err(Error::limit("Lenczewski colour count", colors, 5));
    }
    let id = "lenczewski_sum";
    let syms = univariate_symbols(n);
    let r = cumulants_from_moments(CumulantKind::Free, &syms)?;
    let h = cumulants_from_moments(CumulantKind::Monotone, &syms)?;
    let one = MomentPolynomial::one(n);
    let nn = int(colors as i64);
    let mut lhs = MomentPolynomial::zero(n);
    let mut counts = Report::scalar(id, n, &int(0), &int(0));
    for pi in enumerate_with_limit(n, PartitionClass::Noncrossing, n)? {
        let p = labelling_polynomial(&pi)?.eval(&nn);
        let brute = coloring_count_brute_force(&pi, colors)?;
        counts = counts.and(Report::scalar(id, n, &p, &Rational::from_integer(BigInt::from(brute))));
        lhs = lhs.r_add(&product_of(&r, &pi.block_sizes(), &one).r_scale(&p));
    }
    let rhs = monotone_dilate_generic(&h, &nn)?.pop().expect("n ≥ 1");
    Ok(Report::polynomial(id, n, &lhs, &rhs).and(counts))
}
