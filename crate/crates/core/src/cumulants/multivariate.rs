use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use super::CumulantKind;
use crate::algebra::{int, MomentPolynomial, Rational};
use crate::forests::inverse_tree_factorial;
use crate::partitions::{enumerate_with_limit, mask_elements, mobius, Lattice, SetPartition};
use crate::{Error, Result};

type PolyCache = RwLock<HashMap<(CumulantKind, usize), Arc<MomentPolynomial>>>;

fn cache() -> &'static PolyCache {
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Largest supported order of `cumulant_poly`.
pub fn max_order(kind: CumulantKind) -> usize {
    match kind {
        CumulantKind::Classical => 8,
        _ => 9,
    }
}

/// `m_π = ∏_{V∈π} m_V`.
pub fn moment_monomial(pi: &SetPartition) -> MomentPolynomial {
    MomentPolynomial::from_blocks(pi.n(), pi.blocks())
}

/// The `n`-th multivariate cumulant of `(X_1, …, X_n)` in the symbols `m_S`.
pub fn cumulant_poly(kind: CumulantKind, n: usize) -> Result<MomentPolynomial> {
    Ok((*shared(kind, n)?).clone())
}

pub(crate) fn shared(kind: CumulantKind, n: usize) -> Result<Arc<MomentPolynomial>> {
    if n == 0 {
        return Err(Error::precondition("cumulant order must be at least 1"));
    }
    let limit = max_order(kind);
    if n > limit {
        return Err(Error::limit(format!("{kind} cumulant order"), n, limit));
    }
    if let Some(p) = cache().read().expect("cache lock").get(&(kind, n)) {
        return Ok(p.clone());
    }
    let p = Arc::new(compute(kind, n)?);
    let mut w = cache().write().expect("cache lock");
    Ok(w.entry((kind, n)).or_insert(p).clone())
}

fn compute(kind: CumulantKind, n: usize) -> Result<MomentPolynomial> {
    let one = SetPartition::one(n);
    let mut out = MomentPolynomial::zero(n);
    match kind {
        CumulantKind::Classical | CumulantKind::Free => {
            let lattice = if kind == CumulantKind::Classical {
                Lattice::P
            } else {
                Lattice::NC
            };
            for sigma in enumerate_with_limit(n, kind.class(), n)? {
                let mu = mobius(&sigma, &one, lattice)?;
                out.add_scaled(&moment_monomial(&sigma), &mu);
            }
        }
        CumulantKind::Boolean => {
            for sigma in enumerate_with_limit(n, kind.class(), n)? {
                let sign = if sigma.num_blocks() % 2 == 1 { 1 } else { -1 };
                out.add_scaled(&moment_monomial(&sigma), &int(sign));
            }
        }
        CumulantKind::Monotone => {
            out = moment_monomial(&one);
            for pi in enumerate_with_limit(n, kind.class(), n)? {
                if pi.num_blocks() == 1 {
                    continue;
                }
                let w = inverse_tree_factorial(&pi)?;
                out.add_scaled(&partitioned_cumulant(kind, &pi)?, &-w);
            }
        }
    }
    Ok(out)
}

/// `A_π = ∏_{V∈π} A_{|V|}(X_V)`.
pub fn partitioned_cumulant(kind: CumulantKind, pi: &SetPartition) -> Result<MomentPolynomial> {
    let n = pi.n();
    let mut out = MomentPolynomial::one(n);
    for &b in pi.blocks() {
        let elements = mask_elements(b);
        let block = shared(kind, elements.len())?;
        out = &out * &block.relabel(&elements, n);
    }
    Ok(out)
}

/// `acc += c · A_π`.
pub(crate) fn add_partitioned(
    acc: &mut MomentPolynomial,
    kind: CumulantKind,
    pi: &SetPartition,
    c: &Rational,
) -> Result<()> {
    if !c.is_zero() {
        acc.add_scaled(&partitioned_cumulant(kind, pi)?, c);
    }
    Ok(())
}
