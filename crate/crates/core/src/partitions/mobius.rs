use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_with_limit, PartitionClass};
use super::partition::SetPartition;
use crate::algebra::{binomial, factorial, Rational};
use crate::{Error, Result};

/// The lattices on which Möbius functions are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Lattice {
    /// All set partitions.
    P,
    /// Noncrossing partitions.
    NC,
    /// Interval partitions.
    I,
}

impl Lattice {
    pub fn class(self) -> PartitionClass {
        match self {
            Lattice::P => PartitionClass::All,
            Lattice::NC => PartitionClass::Noncrossing,
            Lattice::I => PartitionClass::Interval,
        }
    }
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn catalan(n: usize) -> BigInt {
    BigInt::from(binomial(2 * n, n)) / BigInt::from(n + 1)
}

/// `μ_NC(π, 1̂_m)`: product over the blocks `c` of the Kreweras complement
/// of `(-1)^{|c|-1} C_{|c|-1}`.
fn mobius_nc_to_top(pi: &SetPartition) -> BigInt {
    let m = pi.n();
    // prev[f]: predecessor of f inside its block, cyclically.
    let mut prev = vec![0usize; m];
    for &b in pi.blocks() {
        let elems: Vec<usize> = super::mask_elements(b).into_iter().map(|e| e - 1).collect();
        for (k, &e) in elems.iter().enumerate() {
            let f = elems[(k + 1) % elems.len()];
            prev[f] = e;
        }
    }
    let kreweras = |e: usize| prev[(e + 1) % m];
    let mut seen = vec![false; m];
    let mut value = BigInt::one();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            len += 1;
            e = kreweras(e);
        }
        value *= sign(len - 1) * catalan(len - 1);
    }
    value
}

/// `μ(π, σ)` in the given lattice, by factorising `[π, σ]` into full lattices.
pub fn mobius(pi: &SetPartition, sigma: &SetPartition, lattice: Lattice) -> Result<Rational> {
    if !pi.leq(sigma)? {
        return Err(Error::precondition(format!("{pi} is not below {sigma}")));
    }
    if !lattice.class().contains(pi) || !lattice.class().contains(sigma) {
        return Err(Error::precondition(format!(
            "both partitions must lie in the lattice {lattice:?}"
        )));
    }
    let mut value = BigInt::one();
    for &w in sigma.blocks() {
        let k = pi.blocks().iter().filter(|&&b| b & w != 0).count();
        let factor = match lattice {
            Lattice::P => sign(k - 1) * BigInt::from(factorial(k - 1)),
            Lattice::I => sign(k - 1),
            Lattice::NC => mobius_nc_to_top(&pi.restrict_mask(w)),
        };
        value *= factor;
    }
    Ok(Rational::from_integer(value))
}

/// Möbius value from the defining recursion `μ(π,σ) = -Σ_{π≤ρ<σ} μ(π,ρ)`,
/// over an explicit enumeration of the lattice. Intended as a test oracle.
pub fn mobius_brute_force(pi: &SetPartition, sigma: &SetPartition, lattice: Lattice) -> Result<Rational> {
    if !pi.leq(sigma)? {
        return Err(Error::precondition(format!("{pi} is not below {sigma}")));
    }
    let members: Vec<SetPartition> = enumerate_with_limit(pi.n(), lattice.class(), 32)?
        .into_iter()
        .filter(|r| pi.leq_unchecked(r) && r.leq_unchecked(sigma))
        .collect();
    // Sort by number of blocks descending so every ρ precedes the elements above it.
    let mut members = members;
    members.sort_by_key(|r| std::cmp::Reverse(r.num_blocks()));
    let mut values: Vec<Rational> = Vec::with_capacity(members.len());
    for (i, r) in members.iter().enumerate() {
        let v = if r == pi {
            Rational::one()
        } else {
            let s = (0..i)
                .filter(|&j| members[j].leq_unchecked(r))
                .fold(Rational::zero(), |acc, j| acc + &values[j]);
            -s
        };
        values.push(v);
    }
    let idx = members.iter().position(|r| r == sigma).expect("σ is in the interval");
    Ok(values[idx].clone())
}
